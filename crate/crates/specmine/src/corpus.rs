//! Corpus ingestion and keyword search.
//!
//! A corpus is a directory tree whose immediate subdirectories are projects.
//! Indexing parses every `.java` unit, tokenizes identifiers, string
//! literals and comments into a word multiset, and builds an inverted index
//! supporting tf-idf ranking at project and unit granularity. The index is
//! immutable once built; queries are pure functions over it.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;
use walkdir::WalkDir;

use crate::srcmodel::{
    lex, parse_unit_named, split_identifier, split_text, CompilationModel, TokKind,
};

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("no projects found under {0}")]
    EmptyCorpus(PathBuf),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub const INDEX_FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Granularity {
    Project,
    Unit,
}

/// Per-unit metadata kept in the index. Source text is re-read from disk
/// when a later stage needs to parse the unit again.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SourceUnit {
    pub unit_id: String,
    pub project_id: String,
    pub relative_path: String,
    /// Non-comment line count.
    pub loc: u32,
    pub package_name: String,
    pub declared_type_names: Vec<String>,
    /// Lowercase word -> occurrence count, from identifiers, string
    /// literals and comments.
    pub token_index: BTreeMap<String, u32>,
    /// Unit declares a test-annotated method or imports an `org.junit` path.
    pub has_tests: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CorpusProject {
    pub project_id: String,
    pub root: String,
    pub units: Vec<String>,
    pub doc_tokens: BTreeMap<String, u32>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CorpusIndex {
    pub version: u32,
    pub root: PathBuf,
    pub projects: BTreeMap<String, CorpusProject>,
    pub units: BTreeMap<String, SourceUnit>,
    /// word -> unit id -> term frequency.
    pub unit_postings: BTreeMap<String, BTreeMap<String, u32>>,
    /// word -> number of projects containing it.
    pub project_df: BTreeMap<String, u32>,
    pub diagnostics: Vec<String>,
}

impl CorpusIndex {
    pub fn unit_count(&self) -> usize {
        self.units.len()
    }

    pub fn project_count(&self) -> usize {
        self.projects.len()
    }

    pub fn unit_df(&self, word: &str) -> u32 {
        self.unit_postings.get(word).map(|m| m.len() as u32).unwrap_or(0)
    }

    /// Absolute path of a unit's source file.
    pub fn unit_path(&self, unit: &SourceUnit) -> PathBuf {
        self.root.join(&unit.project_id).join(&unit.relative_path)
    }

    /// Reads and parses a unit from disk.
    pub fn parse_unit_from_disk(&self, unit_id: &str) -> Result<CompilationModel, CorpusError> {
        let unit = &self.units[unit_id];
        let path = self.unit_path(unit);
        let text = fs::read_to_string(&path).map_err(|source| CorpusError::Io {
            path: path.clone(),
            source,
        })?;
        parse_unit_named(unit_id, &text).map_err(|e| CorpusError::Io {
            path,
            source: std::io::Error::new(std::io::ErrorKind::InvalidData, e.to_string()),
        })
    }
}

/// Builds an immutable index over `<root>/<project>/**/*.java`.
///
/// Units are id'd by `project/relative/path` in sorted order, so two builds
/// over identical bytes produce identical indices. Unparseable units are
/// recorded as diagnostics and excluded.
pub fn index_corpus(root: &Path) -> Result<CorpusIndex, CorpusError> {
    let mut project_dirs: Vec<PathBuf> = fs::read_dir(root)
        .map_err(|source| CorpusError::Io { path: root.to_path_buf(), source })?
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .filter(|p| p.is_dir())
        .filter(|p| {
            !p.file_name()
                .and_then(|n| n.to_str())
                .is_some_and(|n| n.starts_with('.'))
        })
        .collect();
    project_dirs.sort();
    if project_dirs.is_empty() {
        return Err(CorpusError::EmptyCorpus(root.to_path_buf()));
    }

    let parsed: Vec<(String, Vec<UnitBuild>, Vec<String>)> = project_dirs
        .par_iter()
        .map(|dir| index_project(dir))
        .collect();

    let mut index = CorpusIndex {
        version: INDEX_FORMAT_VERSION,
        root: root.to_path_buf(),
        projects: BTreeMap::new(),
        units: BTreeMap::new(),
        unit_postings: BTreeMap::new(),
        project_df: BTreeMap::new(),
        diagnostics: Vec::new(),
    };

    for (project_id, units, diags) in parsed {
        index.diagnostics.extend(diags);
        if units.is_empty() {
            index
                .diagnostics
                .push(format!("{project_id}: no parseable units, project skipped"));
            continue;
        }
        let mut doc_tokens: BTreeMap<String, u32> = BTreeMap::new();
        let mut unit_ids = Vec::new();
        for ub in units {
            for (w, n) in &ub.unit.token_index {
                *doc_tokens.entry(w.clone()).or_insert(0) += n;
                index
                    .unit_postings
                    .entry(w.clone())
                    .or_default()
                    .insert(ub.unit.unit_id.clone(), *n);
            }
            for w in &ub.path_words {
                *doc_tokens.entry(w.clone()).or_insert(0) += 1;
            }
            unit_ids.push(ub.unit.unit_id.clone());
            index.units.insert(ub.unit.unit_id.clone(), ub.unit);
        }
        for word in doc_tokens.keys() {
            *index.project_df.entry(word.clone()).or_insert(0) += 1;
        }
        index.projects.insert(
            project_id.clone(),
            CorpusProject {
                project_id: project_id.clone(),
                root: project_id,
                units: unit_ids,
                doc_tokens,
            },
        );
    }

    if index.projects.is_empty() {
        return Err(CorpusError::EmptyCorpus(root.to_path_buf()));
    }
    Ok(index)
}

struct UnitBuild {
    unit: SourceUnit,
    path_words: Vec<String>,
}

fn index_project(dir: &Path) -> (String, Vec<UnitBuild>, Vec<String>) {
    let project_id = dir
        .file_name()
        .and_then(|n| n.to_str())
        .unwrap_or("project")
        .to_string();
    let mut files: Vec<PathBuf> = WalkDir::new(dir)
        .into_iter()
        .filter_map(|e| e.ok())
        .filter(|e| e.file_type().is_file())
        .map(|e| e.into_path())
        .filter(|p| p.extension().is_some_and(|x| x == "java"))
        .collect();
    files.sort();

    let mut units = Vec::new();
    let mut diags = Vec::new();
    for path in files {
        let relative = path
            .strip_prefix(dir)
            .unwrap_or(&path)
            .components()
            .map(|c| c.as_os_str().to_string_lossy().into_owned())
            .collect::<Vec<_>>()
            .join("/");
        let unit_id = format!("{project_id}/{relative}");
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) => {
                diags.push(format!("{unit_id}: unreadable: {e}"));
                continue;
            }
        };
        match build_unit(&unit_id, &project_id, &relative, &text) {
            Ok(mut ub) => {
                ub.path_words = split_text(&relative);
                units.push(ub);
            }
            Err(msg) => diags.push(msg),
        }
    }
    (project_id, units, diags)
}

fn build_unit(
    unit_id: &str,
    project_id: &str,
    relative: &str,
    text: &str,
) -> Result<UnitBuild, String> {
    let model =
        parse_unit_named(unit_id, text).map_err(|e| format!("{unit_id}: excluded: {e}"))?;
    let lexed = lex(text);

    let mut token_index: BTreeMap<String, u32> = BTreeMap::new();
    for tok in &lexed.tokens {
        match tok.kind {
            TokKind::Ident => {
                for w in split_identifier(&tok.text) {
                    *token_index.entry(w).or_insert(0) += 1;
                }
            }
            TokKind::Str => {
                for w in split_text(tok.text.trim_matches('"')) {
                    *token_index.entry(w).or_insert(0) += 1;
                }
            }
            _ => {}
        }
    }
    for comment in &lexed.comments {
        for w in split_text(&comment.text) {
            *token_index.entry(w).or_insert(0) += 1;
        }
    }

    let declared: Vec<String> = model
        .all_types()
        .iter()
        .map(|t| t.simple_name.clone())
        .collect();
    let has_tests = unit_has_tests(&model);

    Ok(UnitBuild {
        unit: SourceUnit {
            unit_id: unit_id.to_string(),
            project_id: project_id.to_string(),
            relative_path: relative.to_string(),
            loc: lexed.code_lines,
            package_name: model.package.clone().unwrap_or_default(),
            declared_type_names: declared,
            token_index,
            has_tests,
        },
        path_words: Vec::new(),
    })
}

/// Test detection: a `@Test`-annotated method or an `org.junit` import.
pub fn unit_has_tests(model: &CompilationModel) -> bool {
    if model.imports.iter().any(|i| i.path.starts_with("org.junit")) {
        return true;
    }
    model
        .all_types()
        .iter()
        .any(|t| t.members.iter().any(|m| m.has_annotation("Test")))
}

/// tf-idf with raw term frequency and smoothed idf:
/// `tf * ln((N + 1) / (df + 1))`.
pub fn tf_idf(word: &str, document_tokens: &BTreeMap<String, u32>, index: &CorpusIndex, granularity: Granularity) -> f64 {
    let tf = document_tokens.get(word).copied().unwrap_or(0) as f64;
    if tf == 0.0 {
        return 0.0;
    }
    let (n, df) = match granularity {
        Granularity::Project => (index.project_count() as f64, index.project_df.get(word).copied().unwrap_or(0) as f64),
        Granularity::Unit => (index.unit_count() as f64, index.unit_df(word) as f64),
    };
    tf * ((n + 1.0) / (df + 1.0)).ln()
}

/// Ranks projects by summed tf-idf over `project_keywords`. Zero-score
/// projects are excluded; an empty keyword list returns all projects in id
/// order.
pub fn search_projects(index: &CorpusIndex, project_keywords: &[String]) -> Vec<(String, f64)> {
    if project_keywords.is_empty() {
        return index.projects.keys().map(|id| (id.clone(), 0.0)).collect();
    }
    let mut scored: Vec<(String, f64)> = index
        .projects
        .values()
        .map(|p| {
            let score: f64 = project_keywords
                .iter()
                .map(|w| tf_idf(w, &p.doc_tokens, index, Granularity::Project))
                .sum();
            (p.project_id.clone(), score)
        })
        .filter(|(_, s)| *s > 0.0)
        .collect();
    sort_ranked(&mut scored);
    scored
}

/// Ranks units by summed tf-idf over `file_keywords`, restricted to
/// `scope` projects (`None` = whole corpus), capped at `cap` results.
pub fn search_files(
    index: &CorpusIndex,
    file_keywords: &[String],
    scope: Option<&[String]>,
    cap: usize,
) -> Vec<(String, f64)> {
    let in_scope = |unit: &SourceUnit| match scope {
        None => true,
        Some(ids) => ids.iter().any(|p| *p == unit.project_id),
    };
    let mut scored: Vec<(String, f64)> = index
        .units
        .values()
        .filter(|u| in_scope(u))
        .map(|u| {
            let score: f64 = file_keywords
                .iter()
                .map(|w| tf_idf(w, &u.token_index, index, Granularity::Unit))
                .sum();
            (u.unit_id.clone(), score)
        })
        .filter(|(_, s)| *s > 0.0)
        .collect();
    sort_ranked(&mut scored);
    scored.truncate(cap);
    scored
}

fn sort_ranked(scored: &mut [(String, f64)]) {
    scored.sort_by(|a, b| {
        b.1.partial_cmp(&a.1)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then_with(|| a.0.cmp(&b.0))
    });
}
