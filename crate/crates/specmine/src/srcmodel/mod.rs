//! Structured code model for the supported Java dialect.
//!
//! Declarations (packages, imports, types, members) are parsed into a tree;
//! method bodies stay as token streams with identifier positions marked.
//! That is enough for key-term counting, reference closure and identifier
//! rewriting, which is all the downstream stages need.

mod lexer;
mod parser;
mod render;

pub use lexer::{is_keyword, lex, Comment, LexOutput, Tok, TokKind};
pub use parser::{parse_unit, parse_unit_named, ParseError};
pub use render::{render_body_tokens, render_unit};

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TypeKind {
    Class,
    Interface,
    Enum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Visibility {
    Public,
    Protected,
    Package,
    Private,
}

impl Default for Visibility {
    fn default() -> Self {
        Visibility::Package
    }
}

impl Visibility {
    pub fn keyword(self) -> &'static str {
        match self {
            Visibility::Public => "public",
            Visibility::Protected => "protected",
            Visibility::Package => "",
            Visibility::Private => "private",
        }
    }
}

/// How a type reference resolved against the corpus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub enum Resolution {
    /// Declared inside the corpus; carries the qualified name.
    Internal(String),
    /// Known to live outside the corpus (imported, qualified, or a JDK name).
    External(String),
    Primitive,
    #[default]
    Unresolved,
}

/// A textual type reference. `raw` is the normalized rendering and is the
/// identity used by structural comparisons; resolution is bookkeeping.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TypeRef {
    pub raw: String,
    /// Base name without generic arguments or array suffix.
    pub base: String,
    pub args: Vec<TypeRef>,
    pub dims: u8,
    pub resolved: Resolution,
}

impl PartialEq for TypeRef {
    fn eq(&self, other: &Self) -> bool {
        self.raw == other.raw
    }
}

impl Eq for TypeRef {}

impl TypeRef {
    pub fn parse(raw: &str) -> TypeRef {
        parser::parse_type_text(raw)
    }

    pub fn simple_base(&self) -> &str {
        self.base.rsplit('.').next().unwrap_or(&self.base)
    }

    pub fn is_void(&self) -> bool {
        self.raw == "void"
    }
}

pub const PRIMITIVES: &[&str] = &[
    "boolean", "byte", "char", "double", "float", "int", "long", "short", "void",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Annotation {
    pub name: String,
    /// Tokens between the parentheses, empty when the annotation has none.
    pub args: Vec<Tok>,
}

impl Annotation {
    pub fn marker(name: &str) -> Annotation {
        Annotation { name: name.to_string(), args: Vec::new() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Param {
    pub name: String,
    pub type_ref: TypeRef,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MemberKind {
    Field,
    Method,
    Constructor,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemberDecl {
    pub kind: MemberKind,
    pub name: String,
    pub visibility: Visibility,
    pub is_static: bool,
    pub is_final: bool,
    pub is_abstract: bool,
    /// Field type or method return type; `None` for constructors.
    pub type_ref: Option<TypeRef>,
    pub params: Vec<Param>,
    pub throws: Vec<String>,
    /// Tokens between the body braces; `None` for abstract/interface members
    /// and fields.
    pub body: Option<Vec<Tok>>,
    /// Field initializer tokens after `=`.
    pub init: Option<Vec<Tok>>,
    pub comment: String,
    pub annotations: Vec<Annotation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub type_params: Option<String>,
}

impl MemberDecl {
    pub fn arity(&self) -> usize {
        self.params.len()
    }

    pub fn has_annotation(&self, name: &str) -> bool {
        self.annotations.iter().any(|a| a.name == name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeDecl {
    pub simple_name: String,
    /// Package-qualified, with nested types joined by `.`.
    pub qualified_name: String,
    pub kind: TypeKind,
    pub visibility: Visibility,
    pub is_abstract: bool,
    pub is_static: bool,
    pub extends: Vec<TypeRef>,
    pub implements: Vec<TypeRef>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub type_params: Option<String>,
    pub members: Vec<MemberDecl>,
    pub nested: Vec<TypeDecl>,
    pub enum_constants: Vec<String>,
    pub comment: String,
    pub annotations: Vec<Annotation>,
}

impl TypeDecl {
    /// This type and all nested types, depth first.
    pub fn all_types(&self) -> Vec<&TypeDecl> {
        let mut out = vec![self];
        for n in &self.nested {
            out.extend(n.all_types());
        }
        out
    }

    /// Applies `f` to this type and every nested type, depth first.
    pub fn visit_types_mut(&mut self, f: &mut impl FnMut(&mut TypeDecl)) {
        f(self);
        for n in self.nested.iter_mut() {
            n.visit_types_mut(f);
        }
    }

    pub fn super_refs(&self) -> impl Iterator<Item = &TypeRef> {
        self.extends.iter().chain(self.implements.iter())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Import {
    pub path: String,
    pub wildcard: bool,
    pub is_static: bool,
}

/// Parsed form of one source unit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompilationModel {
    pub package: Option<String>,
    /// Annotations appearing before the package statement. Standard Java
    /// keeps these for package-info files; the abstraction format relies
    /// on them, so the dialect accepts them on any unit.
    pub unit_annotations: Vec<Annotation>,
    pub imports: Vec<Import>,
    pub types: Vec<TypeDecl>,
    pub diagnostics: Vec<String>,
}

impl CompilationModel {
    pub fn all_types(&self) -> Vec<&TypeDecl> {
        self.types.iter().flat_map(|t| t.all_types()).collect()
    }

    pub fn top_level_names(&self) -> Vec<&str> {
        self.types.iter().map(|t| t.simple_name.as_str()).collect()
    }

    /// Structural equality ignoring positions: compares canonical renderings.
    pub fn structurally_eq(&self, other: &CompilationModel) -> bool {
        render_unit(self) == render_unit(other)
    }
}

/// Splits an identifier into lowercase words at camelCase boundaries,
/// digit runs and underscores. Acronym runs stay one word.
pub fn split_identifier(name: &str) -> Vec<String> {
    let chars: Vec<char> = name.chars().collect();
    let mut words = Vec::new();
    let mut cur = String::new();
    for i in 0..chars.len() {
        let c = chars[i];
        if c == '_' || c == '$' {
            flush(&mut cur, &mut words);
            continue;
        }
        let boundary = if cur.is_empty() {
            false
        } else {
            let prev = chars[i - 1];
            (prev.is_lowercase() && c.is_uppercase())
                || (prev.is_ascii_digit() != c.is_ascii_digit())
                || (prev.is_uppercase()
                    && c.is_uppercase()
                    && chars.get(i + 1).is_some_and(|n| n.is_lowercase()))
        };
        if boundary {
            flush(&mut cur, &mut words);
        }
        cur.push(c);
    }
    flush(&mut cur, &mut words);
    words
}

fn flush(cur: &mut String, words: &mut Vec<String>) {
    if !cur.is_empty() {
        words.push(cur.to_lowercase());
        cur.clear();
    }
}

/// Splits free text (comments, string literals, path segments) into the same
/// word space as identifiers.
pub fn split_text(text: &str) -> Vec<String> {
    text.split(|c: char| !c.is_alphanumeric() && c != '_')
        .filter(|s| !s.is_empty())
        .flat_map(split_identifier)
        .collect()
}

/// Where an internal type lives.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeLoc {
    pub unit_id: String,
    pub simple_name: String,
    pub package: String,
}

/// Corpus-wide resolution result: models plus the reference-edge graph.
#[derive(Debug, Clone, Default)]
pub struct ResolvedModel {
    pub models: BTreeMap<String, CompilationModel>,
    /// Qualified type name -> declaring unit.
    pub types: BTreeMap<String, TypeLoc>,
    /// unit -> units whose declarations it needs.
    pub edges: BTreeMap<String, BTreeSet<String>>,
    /// unit -> simple name -> qualified internal name it binds to there.
    pub bindings: BTreeMap<String, BTreeMap<String, String>>,
    pub diagnostics: Vec<String>,
}

impl ResolvedModel {
    pub fn project_of(unit_id: &str) -> &str {
        unit_id.split('/').next().unwrap_or(unit_id)
    }
}

/// Resolves every type reference in `models` and records reference edges.
///
/// Resolution order: same-unit (incl. nested) -> same package -> explicit
/// import -> same-project unique simple name -> external. Ambiguity maps to
/// `Unresolved` with a diagnostic rather than a guess.
pub fn resolve_references(models: BTreeMap<String, CompilationModel>) -> ResolvedModel {
    let mut resolved = ResolvedModel::default();

    // Global name table.
    let mut by_package: BTreeMap<String, Vec<(String, String)>> = BTreeMap::new();
    let mut by_simple: BTreeMap<(String, String), Vec<String>> = BTreeMap::new();
    for (unit_id, model) in &models {
        let pkg = model.package.clone().unwrap_or_default();
        let project = ResolvedModel::project_of(unit_id).to_string();
        for ty in model.all_types() {
            resolved.types.insert(
                ty.qualified_name.clone(),
                TypeLoc {
                    unit_id: unit_id.clone(),
                    simple_name: ty.simple_name.clone(),
                    package: pkg.clone(),
                },
            );
            by_package
                .entry(pkg.clone())
                .or_default()
                .push((ty.simple_name.clone(), ty.qualified_name.clone()));
            by_simple
                .entry((project.clone(), ty.simple_name.clone()))
                .or_default()
                .push(ty.qualified_name.clone());
        }
    }

    let unit_ids: Vec<String> = models.keys().cloned().collect();
    let mut out_models = models;
    for unit_id in &unit_ids {
        let mut model = out_models.remove(unit_id).expect("unit present");
        let scope = UnitScope::build(unit_id, &model, &resolved, &by_package, &by_simple);
        let mut edges: BTreeSet<String> = BTreeSet::new();
        let mut bindings: BTreeMap<String, String> = BTreeMap::new();
        let mut diags: Vec<String> = Vec::new();

        for ty in model.types.iter_mut() {
            resolve_in_type(ty, &scope, &resolved, &mut edges, &mut bindings, &mut diags, unit_id);
        }

        resolved.edges.insert(unit_id.clone(), edges);
        resolved.bindings.insert(unit_id.clone(), bindings);
        resolved.diagnostics.extend(diags);
        out_models.insert(unit_id.clone(), model);
    }
    resolved.models = out_models;
    resolved
}

struct UnitScope {
    /// simple name -> qualified name candidates visible here, per tier.
    own: BTreeMap<String, String>,
    same_package: BTreeMap<String, String>,
    imports_single: BTreeMap<String, String>,
    /// Wildcard-imported internal packages.
    wildcard_internal: Vec<String>,
    /// simple name -> qualified candidates in the same project.
    project: BTreeMap<String, Vec<String>>,
    /// Simple names explicitly imported from outside the corpus.
    external_singles: BTreeMap<String, String>,
    has_external_wildcard: bool,
}

impl UnitScope {
    fn build(
        unit_id: &str,
        model: &CompilationModel,
        resolved: &ResolvedModel,
        by_package: &BTreeMap<String, Vec<(String, String)>>,
        by_simple: &BTreeMap<(String, String), Vec<String>>,
    ) -> UnitScope {
        let pkg = model.package.clone().unwrap_or_default();
        let project = ResolvedModel::project_of(unit_id).to_string();
        let mut scope = UnitScope {
            own: BTreeMap::new(),
            same_package: BTreeMap::new(),
            imports_single: BTreeMap::new(),
            wildcard_internal: Vec::new(),
            project: BTreeMap::new(),
            external_singles: BTreeMap::new(),
            has_external_wildcard: false,
        };
        for ty in model.all_types() {
            scope.own.insert(ty.simple_name.clone(), ty.qualified_name.clone());
        }
        if let Some(types) = by_package.get(&pkg) {
            for (simple, qualified) in types {
                scope.same_package.entry(simple.clone()).or_insert_with(|| qualified.clone());
            }
        }
        for import in &model.imports {
            if import.is_static {
                continue;
            }
            if import.wildcard {
                if by_package.contains_key(&import.path) {
                    scope.wildcard_internal.push(import.path.clone());
                } else {
                    scope.has_external_wildcard = true;
                }
            } else if resolved.types.contains_key(&import.path) {
                let simple = import.path.rsplit('.').next().unwrap_or(&import.path);
                scope.imports_single.insert(simple.to_string(), import.path.clone());
            } else {
                let simple = import.path.rsplit('.').next().unwrap_or(&import.path);
                scope.external_singles.insert(simple.to_string(), import.path.clone());
            }
        }
        for ((p, simple), quals) in by_simple {
            if *p == project {
                scope.project.insert(simple.clone(), quals.clone());
            }
        }
        scope
    }

    /// Resolves a simple or qualified name. Returns the resolution and, for
    /// diagnostics, whether it was ambiguous.
    fn resolve(&self, name: &str, resolved: &ResolvedModel) -> (Resolution, bool) {
        if name.contains('.') {
            if resolved.types.contains_key(name) {
                return (Resolution::Internal(name.to_string()), false);
            }
            return (Resolution::External(name.to_string()), false);
        }
        if PRIMITIVES.contains(&name) {
            return (Resolution::Primitive, false);
        }
        if let Some(q) = self.own.get(name) {
            return (Resolution::Internal(q.clone()), false);
        }
        if let Some(q) = self.same_package.get(name) {
            return (Resolution::Internal(q.clone()), false);
        }
        if let Some(q) = self.imports_single.get(name) {
            return (Resolution::Internal(q.clone()), false);
        }
        let wildcard_hits: Vec<String> = self
            .wildcard_internal
            .iter()
            .filter_map(|p| {
                let q = format!("{p}.{name}");
                resolved.types.contains_key(&q).then_some(q)
            })
            .collect();
        match wildcard_hits.len() {
            1 => return (Resolution::Internal(wildcard_hits[0].clone()), false),
            n if n > 1 => return (Resolution::Unresolved, true),
            _ => {}
        }
        if let Some(q) = self.external_singles.get(name) {
            return (Resolution::External(q.clone()), false);
        }
        if let Some(quals) = self.project.get(name) {
            if quals.len() == 1 {
                return (Resolution::Internal(quals[0].clone()), false);
            }
            return (Resolution::Unresolved, true);
        }
        if JAVA_LANG.contains(&name) || self.has_external_wildcard {
            return (Resolution::External(name.to_string()), false);
        }
        (Resolution::Unresolved, false)
    }
}

// Common java.lang (and friends) names that resolve externally with no import.
const JAVA_LANG: &[&str] = &[
    "Appendable", "ArithmeticException", "ArrayIndexOutOfBoundsException", "Boolean", "Byte",
    "CharSequence", "Character", "Class", "ClassCastException", "Cloneable", "Comparable",
    "Double", "Error", "Exception", "Float", "IllegalArgumentException", "IllegalStateException",
    "IndexOutOfBoundsException", "Integer", "Iterable", "Long", "Math", "NullPointerException",
    "Number", "NumberFormatException", "Object", "Override", "Runnable", "Runtime",
    "RuntimeException", "Short", "String", "StringBuilder", "StringBuffer", "System", "Thread",
    "Throwable", "UnsupportedOperationException",
];

fn resolve_in_type(
    ty: &mut TypeDecl,
    scope: &UnitScope,
    resolved: &ResolvedModel,
    edges: &mut BTreeSet<String>,
    bindings: &mut BTreeMap<String, String>,
    diags: &mut Vec<String>,
    unit_id: &str,
) {
    let mut handle_ref = |r: &mut TypeRef| {
        resolve_type_ref(r, scope, resolved, edges, bindings, diags, unit_id);
    };
    for r in ty.extends.iter_mut().chain(ty.implements.iter_mut()) {
        handle_ref(r);
    }
    for m in ty.members.iter_mut() {
        if let Some(r) = m.type_ref.as_mut() {
            resolve_type_ref(r, scope, resolved, edges, bindings, diags, unit_id);
        }
        for p in m.params.iter_mut() {
            resolve_type_ref(&mut p.type_ref, scope, resolved, edges, bindings, diags, unit_id);
        }
        for tokens in [m.body.as_ref(), m.init.as_ref()].into_iter().flatten() {
            for tok in tokens {
                if tok.kind == TokKind::Ident {
                    if let (Resolution::Internal(q), _) = scope.resolve(&tok.text, resolved) {
                        record_internal(&q, &tok.text, scope, resolved, edges, bindings, unit_id);
                    }
                }
            }
        }
        for t in &m.throws {
            let mut r = TypeRef::parse(t);
            resolve_type_ref(&mut r, scope, resolved, edges, bindings, diags, unit_id);
        }
    }
    for n in ty.nested.iter_mut() {
        resolve_in_type(n, scope, resolved, edges, bindings, diags, unit_id);
    }
}

fn resolve_type_ref(
    r: &mut TypeRef,
    scope: &UnitScope,
    resolved: &ResolvedModel,
    edges: &mut BTreeSet<String>,
    bindings: &mut BTreeMap<String, String>,
    diags: &mut Vec<String>,
    unit_id: &str,
) {
    for a in r.args.iter_mut() {
        resolve_type_ref(a, scope, resolved, edges, bindings, diags, unit_id);
    }
    let (res, ambiguous) = scope.resolve(&r.base, resolved);
    if ambiguous {
        diags.push(format!("{unit_id}: ambiguous reference `{}`", r.base));
    }
    if let Resolution::Internal(q) = &res {
        record_internal(q, &r.base, scope, resolved, edges, bindings, unit_id);
    }
    r.resolved = res;
}

fn record_internal(
    qualified: &str,
    name: &str,
    scope: &UnitScope,
    resolved: &ResolvedModel,
    edges: &mut BTreeSet<String>,
    bindings: &mut BTreeMap<String, String>,
    unit_id: &str,
) {
    let _ = scope;
    if let Some(loc) = resolved.types.get(qualified) {
        if loc.unit_id != unit_id {
            edges.insert(loc.unit_id.clone());
        }
        let simple = name.rsplit('.').next().unwrap_or(name);
        bindings.insert(simple.to_string(), qualified.to_string());
    }
}
