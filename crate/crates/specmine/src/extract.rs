//! Subsystem extraction: expand seed files into self-contained,
//! single-package subsystems, score and filter them, and identify the
//! external libraries they need.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::corpus::unit_has_tests;
use crate::srcmodel::{
    render_unit, resolve_references, split_identifier, lex, CompilationModel, Resolution,
    ResolvedModel, TokKind, TypeDecl,
};

#[derive(Debug, Error)]
pub enum ExtractError {
    #[error("closure exceeded {cap} units starting from {seed}")]
    TooLarge { seed: String, cap: usize },
    #[error("cannot read library mapping {path}: {message}")]
    MappingFileUnreadable { path: PathBuf, message: String },
}

/// Thresholds controlling expansion and filtering.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExtractLimits {
    pub hard_cap: usize,
    pub min_loc: u32,
    pub max_loc: u32,
    pub max_units: usize,
    pub min_relevancy: f64,
}

impl Default for ExtractLimits {
    fn default() -> Self {
        ExtractLimits {
            hard_cap: 200,
            min_loc: 200,
            max_loc: 12000,
            max_units: 60,
            min_relevancy: 5.0,
        }
    }
}

/// Maven-style coordinates for an external dependency.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LibraryCoord {
    pub group: String,
    pub artifact: String,
    pub version: String,
    pub matched_prefix: String,
}

impl fmt::Display for LibraryCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.group, self.artifact, self.version)
    }
}

/// Longest-prefix lookup table from package prefix to library coordinates.
#[derive(Debug, Clone, Default)]
pub struct LibraryMapping {
    entries: Vec<MappingEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct MappingEntry {
    prefix: String,
    group: String,
    artifact: String,
    version: String,
}

impl LibraryMapping {
    pub fn load(path: &Path) -> Result<LibraryMapping, ExtractError> {
        let text = fs::read_to_string(path).map_err(|e| ExtractError::MappingFileUnreadable {
            path: path.to_path_buf(),
            message: e.to_string(),
        })?;
        let mut entries: Vec<MappingEntry> =
            serde_json::from_str(&text).map_err(|e| ExtractError::MappingFileUnreadable {
                path: path.to_path_buf(),
                message: e.to_string(),
            })?;
        // Longest prefix first so the first hit wins.
        entries.sort_by(|a, b| b.prefix.len().cmp(&a.prefix.len()).then(a.prefix.cmp(&b.prefix)));
        Ok(LibraryMapping { entries })
    }

    pub fn from_records(records: &[(&str, &str, &str, &str)]) -> LibraryMapping {
        let mut entries: Vec<MappingEntry> = records
            .iter()
            .map(|(p, g, a, v)| MappingEntry {
                prefix: p.to_string(),
                group: g.to_string(),
                artifact: a.to_string(),
                version: v.to_string(),
            })
            .collect();
        entries.sort_by(|a, b| b.prefix.len().cmp(&a.prefix.len()).then(a.prefix.cmp(&b.prefix)));
        LibraryMapping { entries }
    }

    fn lookup(&self, import_path: &str) -> Option<LibraryCoord> {
        for e in &self.entries {
            if import_path == e.prefix || import_path.starts_with(&format!("{}.", e.prefix)) {
                return Some(LibraryCoord {
                    group: e.group.clone(),
                    artifact: e.artifact.clone(),
                    version: e.version.clone(),
                    matched_prefix: e.prefix.clone(),
                });
            }
        }
        None
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SubsystemUnit {
    pub original_unit_id: String,
    pub file_name: String,
    pub model: CompilationModel,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Provenance {
    pub project_id: String,
    pub original_paths: Vec<String>,
    pub original_packages: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Subsystem {
    pub subsystem_id: String,
    pub seed_unit: String,
    pub units: Vec<SubsystemUnit>,
    pub package_name: String,
    pub total_loc: u32,
    pub libraries: Vec<LibraryCoord>,
    pub relevancy_score: f64,
    pub provenance: Provenance,
}

impl Subsystem {
    pub fn unit_path_set(&self) -> BTreeSet<&str> {
        self.units.iter().map(|u| u.original_unit_id.as_str()).collect()
    }

    /// All type declarations across units, nested included.
    pub fn all_types(&self) -> Vec<&TypeDecl> {
        self.units.iter().flat_map(|u| u.model.all_types()).collect()
    }

    pub fn find_type(&self, simple_name: &str) -> Option<(&SubsystemUnit, &TypeDecl)> {
        for unit in &self.units {
            for ty in unit.model.all_types() {
                if ty.simple_name == simple_name {
                    return Some((unit, ty));
                }
            }
        }
        None
    }
}

/// Expands `seed_unit` over reference edges: first the seed's package,
/// then the other packages of the same project. Fails with `TooLarge`
/// instead of emitting a partial closure.
pub fn expand_to_subsystem(
    seed_unit: &str,
    resolved: &ResolvedModel,
    hard_cap: usize,
) -> Result<BTreeSet<String>, ExtractError> {
    let project = ResolvedModel::project_of(seed_unit).to_string();
    let seed_package = resolved.models[seed_unit].package.clone().unwrap_or_default();

    let mut chosen: BTreeSet<String> = BTreeSet::new();
    chosen.insert(seed_unit.to_string());

    // Phase 1: closure restricted to the seed's package.
    grow(&mut chosen, resolved, |unit| {
        ResolvedModel::project_of(unit) == project
            && resolved.models[unit].package.as_deref().unwrap_or("") == seed_package
    });
    // Phase 2: the rest of the project.
    grow(&mut chosen, resolved, |unit| ResolvedModel::project_of(unit) == project);

    if chosen.len() > hard_cap {
        return Err(ExtractError::TooLarge { seed: seed_unit.to_string(), cap: hard_cap });
    }
    Ok(chosen)
}

fn grow(chosen: &mut BTreeSet<String>, resolved: &ResolvedModel, admit: impl Fn(&str) -> bool) {
    let mut worklist: Vec<String> = chosen.iter().cloned().collect();
    while let Some(unit) = worklist.pop() {
        if let Some(edges) = resolved.edges.get(&unit) {
            for target in edges {
                if admit(target) && chosen.insert(target.clone()) {
                    worklist.push(target.clone());
                }
            }
        }
    }
}

/// Rewrites every unit of the closure into `target_package`: internal
/// imports dropped, colliding top-level simple names disambiguated with
/// numeric suffixes, and all references to renamed types rewritten.
pub fn flatten_packages(
    unit_ids: &BTreeSet<String>,
    resolved: &ResolvedModel,
    target_package: &str,
    subsystem_id: &str,
    seed_unit: &str,
) -> Subsystem {
    let project = ResolvedModel::project_of(seed_unit).to_string();

    // Renames for colliding top-level simple names, first unit keeps it.
    let mut seen: BTreeMap<String, u32> = BTreeMap::new();
    let mut renames: BTreeMap<String, String> = BTreeMap::new(); // qualified -> new simple
    for unit_id in unit_ids {
        for ty in &resolved.models[unit_id].types {
            let n = seen.entry(ty.simple_name.clone()).or_insert(0);
            *n += 1;
            if *n > 1 {
                renames.insert(ty.qualified_name.clone(), format!("{}{}", ty.simple_name, n));
            }
        }
    }

    let internal_packages: BTreeSet<String> = unit_ids
        .iter()
        .filter_map(|u| resolved.models[u].package.clone())
        .collect();

    let mut units = Vec::new();
    let mut original_paths = Vec::new();
    for unit_id in unit_ids {
        let mut model = resolved.models[unit_id].clone();
        let bindings = resolved.bindings.get(unit_id).cloned().unwrap_or_default();

        apply_type_renames(&mut model, &renames, &bindings);
        model.package = Some(target_package.to_string());
        model.imports.retain(|imp| {
            if imp.wildcard {
                !internal_packages.contains(&imp.path)
            } else {
                !resolved.types.contains_key(&imp.path)
            }
        });
        requalify(&mut model, target_package);

        let file_name = model
            .types
            .first()
            .map(|t| format!("{}.java", t.simple_name))
            .unwrap_or_else(|| "Unit.java".to_string());
        original_paths.push(unit_id.clone());
        units.push(SubsystemUnit {
            original_unit_id: unit_id.clone(),
            file_name,
            model,
        });
    }

    let total_loc = units.iter().map(|u| lex(&render_unit(&u.model)).code_lines).sum();
    Subsystem {
        subsystem_id: subsystem_id.to_string(),
        seed_unit: seed_unit.to_string(),
        units,
        package_name: target_package.to_string(),
        total_loc,
        libraries: Vec::new(),
        relevancy_score: 0.0,
        provenance: Provenance {
            project_id: project,
            original_paths,
            original_packages: internal_packages.into_iter().collect(),
        },
    }
}

fn apply_type_renames(
    model: &mut CompilationModel,
    renames: &BTreeMap<String, String>,
    bindings: &BTreeMap<String, String>,
) {
    if renames.is_empty() {
        return;
    }
    // simple name -> new name, valid in this unit's scope.
    let mut local: BTreeMap<String, String> = BTreeMap::new();
    for (simple, qualified) in bindings {
        if let Some(new_name) = renames.get(qualified) {
            local.insert(simple.clone(), new_name.clone());
        }
    }
    for ty in model.types.iter_mut() {
        let own_new = renames.get(&ty.qualified_name).cloned();
        if let Some(new_name) = &own_new {
            // Constructors carry the type name.
            let old = ty.simple_name.clone();
            for m in ty.members.iter_mut() {
                if m.name == old {
                    m.name = new_name.clone();
                }
            }
            local.insert(old, new_name.clone());
            ty.simple_name = new_name.clone();
        }
    }
    for ty in model.types.iter_mut() {
        ty.visit_types_mut(&mut |t| rename_in_type(t, &local));
    }
}

fn rename_in_type(ty: &mut TypeDecl, local: &BTreeMap<String, String>) {
    let fix_ref = |r: &mut crate::srcmodel::TypeRef| {
        let simple = r.simple_base().to_string();
        if let Some(new_name) = local.get(&simple) {
            r.base = new_name.clone();
            r.raw = rebuild_raw(new_name, &r.raw, &simple);
        }
        for a in r.args.iter_mut() {
            let s = a.simple_base().to_string();
            if let Some(n) = local.get(&s) {
                a.base = n.clone();
                a.raw = rebuild_raw(n, &a.raw, &s);
            }
        }
    };
    for r in ty.extends.iter_mut().chain(ty.implements.iter_mut()) {
        fix_ref(r);
    }
    for m in ty.members.iter_mut() {
        if let Some(r) = m.type_ref.as_mut() {
            fix_ref(r);
        }
        for p in m.params.iter_mut() {
            fix_ref(&mut p.type_ref);
        }
        for tokens in [m.body.as_mut(), m.init.as_mut()].into_iter().flatten() {
            for tok in tokens.iter_mut() {
                if tok.kind == TokKind::Ident {
                    if let Some(new_name) = local.get(&tok.text) {
                        tok.text = new_name.clone();
                    }
                }
            }
        }
    }
}

/// Replaces the base name inside a raw type string, keeping generics/dims.
fn rebuild_raw(new_base: &str, raw: &str, old_base: &str) -> String {
    if let Some(rest) = raw.strip_prefix(old_base) {
        format!("{new_base}{rest}")
    } else if let Some(pos) = raw.find(old_base) {
        // Qualified reference: drop the package path entirely.
        format!("{new_base}{}", &raw[pos + old_base.len()..])
    } else {
        new_base.to_string()
    }
}

/// Updates qualified names after the package rewrite.
fn requalify(model: &mut CompilationModel, target_package: &str) {
    fn walk(ty: &mut TypeDecl, parent: &str) {
        ty.qualified_name = if parent.is_empty() {
            ty.simple_name.clone()
        } else {
            format!("{parent}.{}", ty.simple_name)
        };
        let base = ty.qualified_name.clone();
        for n in ty.nested.iter_mut() {
            walk(n, &base);
        }
    }
    for ty in model.types.iter_mut() {
        walk(ty, target_package);
    }
}

/// Relevancy: 2 points per key-term occurrence among declaration-name
/// words, 1 point per occurrence among body, string-literal and comment
/// words. Case-insensitive exact word match.
pub fn score_relevancy(subsystem: &Subsystem, key_terms: &[String]) -> f64 {
    let terms: BTreeSet<&str> = key_terms.iter().map(|s| s.as_str()).collect();
    let mut decl_hits = 0u32;
    let mut body_hits = 0u32;

    for unit in &subsystem.units {
        for ty in unit.model.all_types() {
            decl_hits += count_hits(&split_identifier(&ty.simple_name), &terms);
            for m in &ty.members {
                decl_hits += count_hits(&split_identifier(&m.name), &terms);
                for tokens in [m.body.as_ref(), m.init.as_ref()].into_iter().flatten() {
                    for tok in tokens {
                        match tok.kind {
                            TokKind::Ident => {
                                body_hits += count_hits(&split_identifier(&tok.text), &terms)
                            }
                            TokKind::Str => {
                                body_hits += count_hits(
                                    &crate::srcmodel::split_text(tok.text.trim_matches('"')),
                                    &terms,
                                )
                            }
                            _ => {}
                        }
                    }
                }
                body_hits += count_hits(&crate::srcmodel::split_text(&m.comment), &terms);
            }
            body_hits += count_hits(&crate::srcmodel::split_text(&ty.comment), &terms);
        }
    }
    (2 * decl_hits + body_hits) as f64
}

fn count_hits(words: &[String], terms: &BTreeSet<&str>) -> u32 {
    words.iter().filter(|w| terms.contains(w.as_str())).count() as u32
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DropReason {
    Trivial,
    OverlyComplex,
    TestDominated,
    LowRelevancy,
    Duplicate,
}

impl fmt::Display for DropReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DropReason::Trivial => "trivial",
            DropReason::OverlyComplex => "overly complex",
            DropReason::TestDominated => "primarily test cases",
            DropReason::LowRelevancy => "below relevancy threshold",
            DropReason::Duplicate => "duplicate unit set",
        };
        f.write_str(s)
    }
}

/// Applies the triviality/complexity/test-domination/relevancy filters and
/// drops duplicate unit sets, keeping first occurrences.
pub fn filter_subsystems(
    subsystems: Vec<Subsystem>,
    limits: &ExtractLimits,
) -> (Vec<Subsystem>, Vec<(String, DropReason)>) {
    let mut kept = Vec::new();
    let mut dropped = Vec::new();
    let mut seen_sets: BTreeSet<Vec<String>> = BTreeSet::new();

    for sub in subsystems {
        let type_count = sub.all_types().len();
        let test_units = sub.units.iter().filter(|u| unit_has_tests(&u.model)).count();
        let reason = if sub.total_loc < limits.min_loc || type_count < 3 {
            Some(DropReason::Trivial)
        } else if sub.total_loc > limits.max_loc || sub.units.len() > limits.max_units {
            Some(DropReason::OverlyComplex)
        } else if test_units * 2 > sub.units.len() {
            Some(DropReason::TestDominated)
        } else if sub.relevancy_score < limits.min_relevancy {
            Some(DropReason::LowRelevancy)
        } else {
            None
        };
        if let Some(reason) = reason {
            dropped.push((sub.subsystem_id.clone(), reason));
            continue;
        }
        let key: Vec<String> = sub.units.iter().map(|u| u.original_unit_id.clone()).collect();
        if !seen_sets.insert(key) {
            dropped.push((sub.subsystem_id.clone(), DropReason::Duplicate));
            continue;
        }
        kept.push(sub);
    }
    (kept, dropped)
}

/// Resolves external imports to library coordinates by longest prefix.
/// JDK packages are skipped; other unmatched prefixes become diagnostics.
pub fn identify_libraries(
    subsystem: &Subsystem,
    mapping: &LibraryMapping,
) -> (Vec<LibraryCoord>, Vec<String>) {
    let mut coords = BTreeSet::new();
    let mut diagnostics = Vec::new();
    let mut unmatched = BTreeSet::new();
    for unit in &subsystem.units {
        for imp in &unit.model.imports {
            if imp.path.starts_with("java.") || imp.path.starts_with("javax.") {
                continue;
            }
            match mapping.lookup(&imp.path) {
                Some(c) => {
                    coords.insert(c);
                }
                None => {
                    unmatched.insert(imp.path.clone());
                }
            }
        }
    }
    for p in unmatched {
        diagnostics.push(format!(
            "{}: no library mapping for external package {p}",
            subsystem.subsystem_id
        ));
    }
    (coords.into_iter().collect(), diagnostics)
}

/// Re-resolves the flattened units and reports any reference that should
/// resolve inside the subsystem but does not. Empty means the closure
/// invariant holds.
pub fn verify_closure(subsystem: &Subsystem) -> Vec<String> {
    let mut models = BTreeMap::new();
    for unit in &subsystem.units {
        models.insert(format!("sub/{}", unit.file_name), unit.model.clone());
    }
    let resolved = resolve_references(models);
    let mut problems = Vec::new();
    for (unit_id, model) in &resolved.models {
        for ty in model.all_types() {
            let mut check = |r: &crate::srcmodel::TypeRef, what: &str| {
                if r.resolved == Resolution::Unresolved && r.base != "?" {
                    problems.push(format!("{unit_id}: unresolved {what} `{}`", r.raw));
                }
            };
            for r in ty.super_refs() {
                check(r, "supertype");
            }
            for m in &ty.members {
                if let Some(r) = &m.type_ref {
                    check(r, "member type");
                }
                for p in &m.params {
                    check(&p.type_ref, "parameter type");
                }
            }
        }
    }
    problems.extend(resolved.diagnostics);
    problems
}

/// Writes the subsystem as a plain source tree plus `manifest.json`.
pub fn write_subsystem(dir: &Path, subsystem: &Subsystem) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    for unit in &subsystem.units {
        fs::write(dir.join(&unit.file_name), render_unit(&unit.model))?;
    }
    let manifest = SubsystemManifest {
        subsystem_id: subsystem.subsystem_id.clone(),
        seed_unit: subsystem.seed_unit.clone(),
        package_name: subsystem.package_name.clone(),
        total_loc: subsystem.total_loc,
        relevancy_score: subsystem.relevancy_score,
        libraries: subsystem.libraries.clone(),
        provenance: subsystem.provenance.clone(),
        files: subsystem
            .units
            .iter()
            .map(|u| (u.file_name.clone(), u.original_unit_id.clone()))
            .collect(),
    };
    fs::write(
        dir.join("manifest.json"),
        serde_json::to_string_pretty(&manifest).expect("manifest serializes"),
    )
}

/// Reads back a subsystem written by [`write_subsystem`].
pub fn load_subsystem(dir: &Path) -> std::io::Result<Subsystem> {
    let manifest: SubsystemManifest =
        serde_json::from_str(&fs::read_to_string(dir.join("manifest.json"))?)
            .map_err(|e| std::io::Error::new(std::io::ErrorKind::InvalidData, e))?;
    let mut units = Vec::new();
    for (file_name, original_unit_id) in &manifest.files {
        let text = fs::read_to_string(dir.join(file_name))?;
        let model = crate::srcmodel::parse_unit_named(file_name, &text)
            .map_err(|e| std::io::Error::new(std::io::ErrorKind::InvalidData, e.to_string()))?;
        units.push(SubsystemUnit {
            original_unit_id: original_unit_id.clone(),
            file_name: file_name.clone(),
            model,
        });
    }
    Ok(Subsystem {
        subsystem_id: manifest.subsystem_id,
        seed_unit: manifest.seed_unit,
        units,
        package_name: manifest.package_name,
        total_loc: manifest.total_loc,
        libraries: manifest.libraries,
        relevancy_score: manifest.relevancy_score,
        provenance: manifest.provenance,
    })
}

#[derive(Debug, Serialize, Deserialize)]
struct SubsystemManifest {
    subsystem_id: String,
    seed_unit: String,
    package_name: String,
    total_loc: u32,
    relevancy_score: f64,
    libraries: Vec<LibraryCoord>,
    provenance: Provenance,
    files: Vec<(String, String)>,
}
