//! Hierarchical abstractions of subsystems: relevant members per class,
//! relevant classes per subsystem, merging of similar abstractions via
//! maximum-weight matching, and suggested search terms.
//!
//! Structural equality (`PartialEq`) covers exactly what the interface
//! rendering carries; provenance bookkeeping (source classes, merge
//! history, relevancy) is excluded so render/parse round trips compare
//! equal.

mod format;
pub mod typeclass;
mod uml;

pub use format::{parse_abstraction, render_interface, AbstractionSyntaxError};
pub use typeclass::{classify, compatible, multiset_compatible, SigContext, TypeClass};
pub use uml::render_uml;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::corpus::CorpusIndex;
use crate::extract::Subsystem;
use crate::matching::maximum_weight_matching;
use crate::srcmodel::{
    split_identifier, split_text, MemberDecl, MemberKind, TokKind, TypeDecl, TypeKind, Visibility,
};
use typeclass::{classify_ref, DeclContext, MemberSig};

#[derive(Debug, Error)]
#[error("no class survives abstraction of {subsystem_id}")]
pub struct EmptyAbstraction {
    pub subsystem_id: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AbsKind {
    Interface,
    AbstractClass,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbsParam {
    pub name: String,
    pub type_text: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FieldAbs {
    pub name: String,
    pub type_text: String,
    /// Names merged in from other abstractions; not rendered.
    pub alt_names: Vec<String>,
}

impl PartialEq for FieldAbs {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.type_text == other.type_text
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MethodAbs {
    pub name: String,
    pub params: Vec<AbsParam>,
    pub return_text: String,
    pub is_constructor: bool,
    pub alt_names: Vec<String>,
}

impl PartialEq for MethodAbs {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.params == other.params
            && self.return_text == other.return_text
            && self.is_constructor == other.is_constructor
    }
}

/// Where an abstracted class came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassSource {
    pub subsystem_id: String,
    pub unit_id: String,
    pub qualified_name: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassAbs {
    pub name: String,
    pub kind: AbsKind,
    pub uses: Vec<String>,
    pub fields: Vec<FieldAbs>,
    pub methods: Vec<MethodAbs>,
    /// Set when the class is declared inside another abstraction class.
    pub enclosing: Option<String>,
    pub sources: Vec<ClassSource>,
}

impl PartialEq for ClassAbs {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.kind == other.kind
            && self.uses == other.uses
            && self.fields == other.fields
            && self.methods == other.methods
            && self.enclosing == other.enclosing
    }
}

impl ClassAbs {
    pub fn member_count(&self) -> usize {
        self.fields.len() + self.methods.len()
    }

    /// Depth-one signatures for internal-type similarity.
    fn member_sigs(&self, ctx: &dyn SigContext) -> Vec<MemberSig> {
        let mut sigs = Vec::new();
        for f in &self.fields {
            sigs.push(MemberSig {
                kind: MemberKind::Field,
                params: Vec::new(),
                ret: typeclass::shallow(&classify(&f.type_text, ctx)),
            });
        }
        for m in &self.methods {
            let mut params: Vec<TypeClass> = m
                .params
                .iter()
                .map(|p| typeclass::shallow(&classify(&p.type_text, ctx)))
                .collect();
            params.sort();
            sigs.push(MemberSig {
                kind: if m.is_constructor { MemberKind::Constructor } else { MemberKind::Method },
                params,
                ret: typeclass::shallow(&classify(&m.return_text, ctx)),
            });
        }
        sigs
    }
}

/// Header annotation lines, kept in render order. Unknown annotations are
/// preserved verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum AbsAnnotation {
    Source(String),
    Library(String),
    Search(String),
    Keywords(Vec<String>),
    Keyterms(Vec<String>),
    SuggestedTerms(Vec<String>),
    Unknown(String),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SubsystemAbs {
    pub package_name: String,
    pub interface_name: String,
    pub annotations: Vec<AbsAnnotation>,
    pub classes: Vec<ClassAbs>,
    /// Subsystem ids merged into this abstraction; not rendered.
    pub merged_from: Vec<String>,
    /// Highest relevancy among merged subsystems; not rendered.
    pub relevancy: f64,
}

impl PartialEq for SubsystemAbs {
    fn eq(&self, other: &Self) -> bool {
        self.package_name == other.package_name
            && self.interface_name == other.interface_name
            && self.annotations == other.annotations
            && self.classes == other.classes
    }
}

impl SubsystemAbs {
    pub fn class(&self, name: &str) -> Option<&ClassAbs> {
        self.classes.iter().find(|c| c.name == name)
    }

    pub fn suggested_terms_mut(&mut self) -> Option<&mut Vec<String>> {
        self.annotations.iter_mut().find_map(|a| match a {
            AbsAnnotation::SuggestedTerms(v) => Some(v),
            _ => None,
        })
    }
}

/// `SigContext` over the classes of one abstraction.
pub struct AbsContext {
    sigs: BTreeMap<String, Vec<MemberSig>>,
}

impl AbsContext {
    pub fn new(abs: &SubsystemAbs) -> AbsContext {
        // Two passes: names first so member classification sees internals.
        let probe = NameProbe {
            names: abs.classes.iter().map(|c| c.name.clone()).collect(),
        };
        let mut sigs = BTreeMap::new();
        for c in &abs.classes {
            sigs.insert(c.name.clone(), c.member_sigs(&probe));
        }
        AbsContext { sigs }
    }
}

impl SigContext for AbsContext {
    fn member_sigs(&self, simple_name: &str) -> Option<Vec<MemberSig>> {
        self.sigs.get(simple_name).cloned()
    }
}

struct NameProbe {
    names: Vec<String>,
}

impl SigContext for NameProbe {
    fn member_sigs(&self, simple_name: &str) -> Option<Vec<MemberSig>> {
        self.names.iter().any(|n| n == simple_name).then(Vec::new)
    }
}

/// A member is relevant when it is public/protected, mentions a key term
/// in its name, body or comment, or is a private field with a public
/// getter and setter.
pub fn member_is_relevant(member: &MemberDecl, decl: &TypeDecl, key_terms: &[String]) -> bool {
    if matches!(member.visibility, Visibility::Public | Visibility::Protected) {
        return true;
    }
    let terms: BTreeSet<&str> = key_terms.iter().map(|s| s.as_str()).collect();
    let name_words = split_identifier(&member.name);
    if name_words.iter().any(|w| terms.contains(w.as_str())) {
        return true;
    }
    for tokens in [member.body.as_ref(), member.init.as_ref()].into_iter().flatten() {
        for tok in tokens {
            let hit = match tok.kind {
                TokKind::Ident => split_identifier(&tok.text)
                    .iter()
                    .any(|w| terms.contains(w.as_str())),
                TokKind::Str => split_text(tok.text.trim_matches('"'))
                    .iter()
                    .any(|w| terms.contains(w.as_str())),
                _ => false,
            };
            if hit {
                return true;
            }
        }
    }
    if split_text(&member.comment).iter().any(|w| terms.contains(w.as_str())) {
        return true;
    }
    member.kind == MemberKind::Field
        && member.visibility == Visibility::Private
        && has_public_accessor_pair(member, decl)
}

fn has_public_accessor_pair(field: &MemberDecl, decl: &TypeDecl) -> bool {
    let field_words = split_identifier(&field.name);
    let with_prefix = |prefix: &str| {
        let mut v = vec![prefix.to_string()];
        v.extend(field_words.iter().cloned());
        v
    };
    let getter = decl.members.iter().any(|m| {
        m.kind == MemberKind::Method
            && m.visibility == Visibility::Public
            && m.params.is_empty()
            && {
                let w = split_identifier(&m.name);
                w == with_prefix("get") || w == with_prefix("is")
            }
    });
    let setter = decl.members.iter().any(|m| {
        m.kind == MemberKind::Method
            && m.visibility == Visibility::Public
            && m.params.len() == 1
            && split_identifier(&m.name) == with_prefix("set")
    });
    getter && setter
}

/// Abstracts a class to its relevant members.
pub fn abstract_class(decl: &TypeDecl, key_terms: &[String], source: ClassSource) -> ClassAbs {
    let mut fields = Vec::new();
    let mut methods = Vec::new();
    for member in &decl.members {
        if !member_is_relevant(member, decl, key_terms) {
            continue;
        }
        match member.kind {
            MemberKind::Field => fields.push(FieldAbs {
                name: member.name.clone(),
                type_text: member.type_ref.as_ref().map(|r| r.raw.clone()).unwrap_or_default(),
                alt_names: Vec::new(),
            }),
            MemberKind::Method | MemberKind::Constructor => methods.push(MethodAbs {
                name: member.name.clone(),
                params: member
                    .params
                    .iter()
                    .map(|p| AbsParam { name: p.name.clone(), type_text: p.type_ref.raw.clone() })
                    .collect(),
                return_text: member
                    .type_ref
                    .as_ref()
                    .map(|r| r.raw.clone())
                    .unwrap_or_else(|| "void".to_string()),
                is_constructor: member.kind == MemberKind::Constructor,
                alt_names: Vec::new(),
            }),
        }
    }
    ClassAbs {
        name: decl.simple_name.clone(),
        kind: if decl.kind == TypeKind::Interface { AbsKind::Interface } else { AbsKind::AbstractClass },
        uses: Vec::new(),
        fields,
        methods,
        enclosing: None,
        sources: vec![source],
    }
}

/// Builds a subsystem abstraction: start with non-trivial, non-private,
/// non-test classes; remove subclasses of classes in the set; add back
/// classes referenced by the remaining members. Uses edges connect the
/// selected classes.
pub fn abstract_subsystem(
    subsystem: &Subsystem,
    key_terms: &[String],
) -> Result<SubsystemAbs, EmptyAbstraction> {
    struct Candidate<'a> {
        decl: &'a TypeDecl,
        unit_id: String,
        in_test_unit: bool,
    }
    let mut candidates: Vec<Candidate> = Vec::new();
    for unit in &subsystem.units {
        let test_unit = crate::corpus::unit_has_tests(&unit.model);
        for decl in unit.model.all_types() {
            candidates.push(Candidate {
                decl,
                unit_id: unit.original_unit_id.clone(),
                in_test_unit: test_unit,
            });
        }
    }

    let make_source = |c: &Candidate| ClassSource {
        subsystem_id: subsystem.subsystem_id.clone(),
        unit_id: c.unit_id.clone(),
        qualified_name: c.decl.qualified_name.clone(),
    };

    // Step 1: non-trivial, non-private, non-test.
    let mut selected: BTreeSet<String> = BTreeSet::new();
    for c in &candidates {
        if c.decl.visibility == Visibility::Private || c.in_test_unit {
            continue;
        }
        if c.decl.members.iter().any(|m| m.has_annotation("Test")) {
            continue;
        }
        let abs = abstract_class(c.decl, key_terms, make_source(c));
        if abs.member_count() >= 2 {
            selected.insert(c.decl.simple_name.clone());
        }
    }

    // Step 2: drop subclasses of classes in the set.
    let subclasses: Vec<String> = candidates
        .iter()
        .filter(|c| selected.contains(&c.decl.simple_name))
        .filter(|c| {
            c.decl
                .super_refs()
                .any(|r| selected.contains(r.simple_base()) && r.simple_base() != c.decl.simple_name)
        })
        .map(|c| c.decl.simple_name.clone())
        .collect();
    for name in subclasses {
        selected.remove(&name);
    }

    // Step 3: add back classes referenced by fields or methods of the
    // selected classes (single pass).
    let internal_names: BTreeSet<String> =
        candidates.iter().map(|c| c.decl.simple_name.clone()).collect();
    let mut added: BTreeSet<String> = BTreeSet::new();
    for c in &candidates {
        if !selected.contains(&c.decl.simple_name) {
            continue;
        }
        for member in &c.decl.members {
            if !member_is_relevant(member, c.decl, key_terms) {
                continue;
            }
            let mut refs: Vec<&crate::srcmodel::TypeRef> = Vec::new();
            if let Some(r) = &member.type_ref {
                refs.push(r);
            }
            for p in &member.params {
                refs.push(&p.type_ref);
            }
            for r in refs {
                let simple = r.simple_base();
                if internal_names.contains(simple) && !selected.contains(simple) {
                    added.insert(simple.to_string());
                }
            }
        }
    }
    selected.extend(added);

    // Materialize in unit/declaration order.
    let mut classes: Vec<ClassAbs> = Vec::new();
    for c in &candidates {
        if !selected.contains(&c.decl.simple_name) {
            continue;
        }
        let mut abs = abstract_class(c.decl, key_terms, make_source(c));
        // Preserve real nesting so transforms can plan class moves.
        if let Some(parent) = enclosing_of(subsystem, &c.decl.qualified_name) {
            if selected.contains(&parent) {
                abs.enclosing = Some(parent);
            }
        }
        classes.push(abs);
    }

    // Uses edges among selected classes.
    let selected_names: BTreeSet<String> = classes.iter().map(|c| c.name.clone()).collect();
    for class in classes.iter_mut() {
        let mut uses: BTreeSet<String> = BTreeSet::new();
        for f in &class.fields {
            let base = simple_base_of(&f.type_text);
            if selected_names.contains(&base) && base != class.name {
                uses.insert(base);
            }
        }
        for m in &class.methods {
            for t in m.params.iter().map(|p| &p.type_text).chain([&m.return_text]) {
                let base = simple_base_of(t);
                if selected_names.contains(&base) && base != class.name {
                    uses.insert(base);
                }
            }
        }
        class.uses = uses.into_iter().collect();
    }

    if classes.is_empty() {
        return Err(EmptyAbstraction { subsystem_id: subsystem.subsystem_id.clone() });
    }

    let interface_name = subsystem
        .units
        .iter()
        .find(|u| u.original_unit_id == subsystem.seed_unit)
        .and_then(|u| u.model.types.first())
        .map(|t| t.simple_name.clone())
        .unwrap_or_else(|| classes[0].name.clone());

    Ok(SubsystemAbs {
        package_name: subsystem.package_name.clone(),
        interface_name,
        annotations: Vec::new(),
        classes,
        merged_from: vec![subsystem.subsystem_id.clone()],
        relevancy: subsystem.relevancy_score,
    })
}

fn enclosing_of(subsystem: &Subsystem, qualified: &str) -> Option<String> {
    for unit in &subsystem.units {
        for decl in unit.model.all_types() {
            if decl.nested.iter().any(|n| n.qualified_name == qualified) {
                return Some(decl.simple_name.clone());
            }
        }
    }
    None
}

fn simple_base_of(type_text: &str) -> String {
    crate::srcmodel::TypeRef::parse(type_text).simple_base().to_string()
}

/// Jaccard similarity of identifier word sets.
pub fn name_similarity(a: &str, b: &str) -> f64 {
    let wa: BTreeSet<String> = split_identifier(a).into_iter().collect();
    let wb: BTreeSet<String> = split_identifier(b).into_iter().collect();
    if wa.is_empty() && wb.is_empty() {
        return 1.0;
    }
    let inter = wa.intersection(&wb).count() as f64;
    let union = wa.union(&wb).count() as f64;
    if union == 0.0 {
        return 0.0;
    }
    inter / union
}

/// Pairwise member weight: 0.5 base for compatible abstractions plus up
/// to 0.5 for name agreement. `None` when the members cannot pair.
fn member_weight(
    a: &AbsMember,
    b: &AbsMember,
    ctx_a: &dyn SigContext,
    ctx_b: &dyn SigContext,
) -> Option<f64> {
    match (a, b) {
        (AbsMember::Field(fa), AbsMember::Field(fb)) => {
            let ca = classify(&fa.type_text, ctx_a);
            let cb = classify(&fb.type_text, ctx_b);
            compatible(&ca, &cb, ctx_a, ctx_b)
                .then(|| 0.5 + 0.5 * name_similarity(&fa.name, &fb.name))
        }
        (AbsMember::Method(ma), AbsMember::Method(mb)) => {
            if ma.is_constructor != mb.is_constructor {
                return None;
            }
            let ra = classify(&ma.return_text, ctx_a);
            let rb = classify(&mb.return_text, ctx_b);
            if !ma.is_constructor && !compatible(&ra, &rb, ctx_a, ctx_b) {
                return None;
            }
            let pa: Vec<TypeClass> = ma.params.iter().map(|p| classify(&p.type_text, ctx_a)).collect();
            let pb: Vec<TypeClass> = mb.params.iter().map(|p| classify(&p.type_text, ctx_b)).collect();
            if !multiset_compatible(&pa, &pb, ctx_a, ctx_b) {
                return None;
            }
            Some(0.5 + 0.5 * name_similarity(&ma.name, &mb.name))
        }
        _ => None,
    }
}

enum AbsMember {
    Field(FieldAbs),
    Method(MethodAbs),
}

fn members_of(class: &ClassAbs) -> Vec<AbsMember> {
    let mut v: Vec<AbsMember> = Vec::new();
    v.extend(class.fields.iter().cloned().map(AbsMember::Field));
    v.extend(class.methods.iter().cloned().map(AbsMember::Method));
    v
}

/// Merges two class abstractions by maximum-weight member matching.
/// Returns the merged class (a's names win) and the normalized score.
pub fn merge_class_abs(
    a: &ClassAbs,
    b: &ClassAbs,
    ctx_a: &dyn SigContext,
    ctx_b: &dyn SigContext,
) -> (ClassAbs, f64) {
    let ma = members_of(a);
    let mb = members_of(b);
    if ma.is_empty() && mb.is_empty() {
        return (a.clone(), 0.0);
    }
    let weights: Vec<Vec<f64>> = ma
        .iter()
        .map(|x| {
            mb.iter()
                .map(|y| member_weight(x, y, ctx_a, ctx_b).unwrap_or(0.0))
                .collect()
        })
        .collect();
    let assignment = maximum_weight_matching(&weights);
    let score = assignment.total / ma.len().max(mb.len()) as f64;

    let mut merged = a.clone();
    let mut matched_b: BTreeSet<usize> = BTreeSet::new();
    for (ra, cb) in &assignment.pairs {
        matched_b.insert(*cb);
        let b_member = &mb[*cb];
        let (b_name, b_alts) = match b_member {
            AbsMember::Field(f) => (&f.name, &f.alt_names),
            AbsMember::Method(m) => (&m.name, &m.alt_names),
        };
        let target_alts: &mut Vec<String> = if *ra < merged.fields.len() {
            &mut merged.fields[*ra].alt_names
        } else {
            &mut merged.methods[*ra - merged.fields.len()].alt_names
        };
        for n in std::iter::once(b_name).chain(b_alts.iter()) {
            if !target_alts.contains(n) {
                target_alts.push(n.clone());
            }
        }
    }
    for (i, m) in mb.into_iter().enumerate() {
        if matched_b.contains(&i) {
            continue;
        }
        match m {
            AbsMember::Field(f) => merged.fields.push(f),
            AbsMember::Method(m) => merged.methods.push(m),
        }
    }
    merged.sources.extend(b.sources.iter().cloned());
    merged.sources.dedup();
    (merged, score)
}

pub enum MergeOutcome {
    Merged(Box<SubsystemAbs>, f64),
    Separate(f64),
}

/// Merges two subsystem abstractions when the maximum-weight class
/// matching scores at least `threshold`. Class pairs must individually
/// score at least `class_threshold` to be matched.
pub fn merge_subsystem_abs(
    a: &SubsystemAbs,
    b: &SubsystemAbs,
    threshold: f64,
    class_threshold: f64,
) -> MergeOutcome {
    let ctx_a = AbsContext::new(a);
    let ctx_b = AbsContext::new(b);

    let scores: Vec<Vec<f64>> = a
        .classes
        .iter()
        .map(|ca| {
            b.classes
                .iter()
                .map(|cb| {
                    let (_, s) = merge_class_abs(ca, cb, &ctx_a, &ctx_b);
                    if s >= class_threshold {
                        s
                    } else {
                        0.0
                    }
                })
                .collect()
        })
        .collect();
    let assignment = maximum_weight_matching(&scores);
    let denom = a.classes.len().max(b.classes.len()).max(1) as f64;
    let score = assignment.total / denom;
    if score < threshold {
        return MergeOutcome::Separate(score);
    }

    // b-class name -> a-class name, for uses translation.
    let mut name_map: BTreeMap<String, String> = BTreeMap::new();
    for (ia, ib) in &assignment.pairs {
        name_map.insert(b.classes[*ib].name.clone(), a.classes[*ia].name.clone());
    }

    let mut classes: Vec<ClassAbs> = Vec::new();
    let paired: BTreeMap<usize, usize> = assignment.pairs.iter().cloned().collect();
    for (ia, ca) in a.classes.iter().enumerate() {
        if let Some(ib) = paired.get(&ia) {
            let (mut merged, _) = merge_class_abs(ca, &b.classes[*ib], &ctx_a, &ctx_b);
            let mut uses: BTreeSet<String> = merged.uses.iter().cloned().collect();
            for u in &b.classes[*ib].uses {
                uses.insert(name_map.get(u).cloned().unwrap_or_else(|| u.clone()));
            }
            merged.uses = uses.into_iter().collect();
            classes.push(merged);
        } else {
            classes.push(ca.clone());
        }
    }
    let matched_b: BTreeSet<usize> = assignment.pairs.iter().map(|(_, ib)| *ib).collect();
    for (ib, cb) in b.classes.iter().enumerate() {
        if matched_b.contains(&ib) {
            continue;
        }
        let mut extra = cb.clone();
        extra.uses = extra
            .uses
            .iter()
            .map(|u| name_map.get(u).cloned().unwrap_or_else(|| u.clone()))
            .collect();
        classes.push(extra);
    }

    let mut merged_from: Vec<String> = a.merged_from.clone();
    for id in &b.merged_from {
        if !merged_from.contains(id) {
            merged_from.push(id.clone());
        }
    }
    merged_from.sort();

    let mut annotations = a.annotations.clone();
    for ann in &b.annotations {
        let add = match ann {
            AbsAnnotation::Source(_) | AbsAnnotation::Library(_) | AbsAnnotation::Unknown(_) => {
                !annotations.contains(ann)
            }
            _ => false,
        };
        if add {
            annotations.push(ann.clone());
        }
    }
    annotations = format::canonical_annotation_order(annotations);

    MergeOutcome::Merged(
        Box::new(SubsystemAbs {
            package_name: a.package_name.clone(),
            interface_name: a.interface_name.clone(),
            annotations,
            classes,
            merged_from,
            relevancy: a.relevancy.max(b.relevancy),
        }),
        score,
    )
}

/// Ranks identifier words of the abstraction's source classes by summed
/// unit-granularity tf-idf; top `k`, ties broken lexicographically.
pub fn suggested_terms(
    abs: &SubsystemAbs,
    index: &CorpusIndex,
    subsystems: &BTreeMap<String, &Subsystem>,
    k: usize,
) -> Vec<String> {
    if k == 0 {
        return Vec::new();
    }
    let mut words: BTreeSet<String> = BTreeSet::new();
    let mut units: BTreeSet<String> = BTreeSet::new();
    for class in &abs.classes {
        for src in &class.sources {
            let Some(sub) = subsystems.get(&src.subsystem_id) else { continue };
            let Some((unit, decl)) = sub
                .units
                .iter()
                .find(|u| u.original_unit_id == src.unit_id)
                .and_then(|u| {
                    u.model
                        .all_types()
                        .into_iter()
                        .find(|t| t.qualified_name == src.qualified_name)
                        .map(|t| (u, t))
                })
            else {
                continue;
            };
            units.insert(unit.original_unit_id.clone());
            collect_decl_words(decl, &mut words);
        }
    }
    let mut scored: Vec<(String, f64)> = words
        .into_iter()
        .map(|w| {
            let score: f64 = units
                .iter()
                .filter_map(|u| index.units.get(u))
                .map(|u| crate::corpus::tf_idf(&w, &u.token_index, index, crate::corpus::Granularity::Unit))
                .sum();
            (w, score)
        })
        .collect();
    scored.sort_by(|a, b| {
        b.1.partial_cmp(&a.1)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then_with(|| a.0.cmp(&b.0))
    });
    scored.truncate(k);
    scored.into_iter().map(|(w, _)| w).collect()
}

fn collect_decl_words(decl: &TypeDecl, words: &mut BTreeSet<String>) {
    words.extend(split_identifier(&decl.simple_name));
    for m in &decl.members {
        words.extend(split_identifier(&m.name));
        for p in &m.params {
            words.extend(split_identifier(&p.name));
            words.extend(split_identifier(p.type_ref.simple_base()));
        }
        if let Some(r) = &m.type_ref {
            words.extend(split_identifier(r.simple_base()));
        }
        for tokens in [m.body.as_ref(), m.init.as_ref()].into_iter().flatten() {
            for tok in tokens {
                if tok.kind == TokKind::Ident {
                    words.extend(split_identifier(&tok.text));
                }
            }
        }
    }
    for n in &decl.nested {
        collect_decl_words(n, words);
    }
}

/// Builds a `DeclContext` over every type of a subsystem.
pub fn subsystem_context(subsystem: &Subsystem) -> DeclContext {
    DeclContext::new(&subsystem.all_types())
}

#[cfg(test)]
mod tests;
