//! Mines a local corpus of source projects to build a checkable subsystem
//! specification: keyword search over an indexed corpus, extraction of
//! self-contained single-package subsystems, interface-level abstractions
//! the developer can edit, matching and source-to-source transformation of
//! retrieved code onto the edited abstraction, and harvesting of the
//! original projects' unit tests into a suite for the abstraction.

pub mod srcmodel;

pub use srcmodel::split_identifier;
pub mod corpus;
pub mod matching;
pub mod extract;
