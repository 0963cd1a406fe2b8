//! Matching of abstractions to retrieved subsystems.

pub mod assignment;

pub use assignment::{maximum_weight_matching, Assignment};
