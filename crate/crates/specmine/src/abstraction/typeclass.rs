//! Type compatibility: the equivalence-like grouping that lets members be
//! matched despite surface type differences.
//!
//! Primitives collapse into numeric/boolean/char groups, text-like types
//! into one group, containers and arrays into container-of-element, and
//! internal classes compare by shallow member-signature similarity.

use std::collections::BTreeMap;

use crate::srcmodel::{MemberKind, TypeDecl, TypeRef};

/// Canonical compatibility class of a type reference.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum TypeClass {
    Void,
    Integral,
    Floating,
    Bool,
    CharLike,
    Text,
    /// Container or array; `None` element means raw/unknown, compatible
    /// with any element.
    Container(Option<Box<TypeClass>>),
    /// Declared inside the subsystem/abstraction; carries the simple name.
    Internal(String),
    /// Outside the corpus; compatible only with the same simple name.
    External(String),
}

const INTEGRAL: &[&str] = &["byte", "short", "int", "long", "Byte", "Short", "Integer", "Long"];
const FLOATING: &[&str] = &["float", "double", "Float", "Double"];
const TEXT: &[&str] = &["String", "CharSequence", "StringBuilder", "StringBuffer"];
const CONTAINERS: &[&str] = &[
    "List", "ArrayList", "LinkedList", "Collection", "Iterable", "Set", "HashSet", "TreeSet",
    "LinkedHashSet", "Vector", "Queue", "Deque", "ArrayDeque", "Stack", "Optional",
];
const MAP_LIKE: &[&str] = &["Map", "HashMap", "TreeMap", "LinkedHashMap", "Hashtable"];

/// Looks up shallow member signatures for internal type names on one side
/// of a comparison.
pub trait SigContext {
    fn member_sigs(&self, simple_name: &str) -> Option<Vec<MemberSig>>;

    fn is_internal(&self, simple_name: &str) -> bool {
        self.member_sigs(simple_name).is_some()
    }
}

/// Depth-one member signature: internal types are collapsed to one opaque
/// marker so comparison does not recurse.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MemberSig {
    pub kind: MemberKind,
    pub params: Vec<TypeClass>,
    pub ret: TypeClass,
}

pub fn classify(raw: &str, ctx: &dyn SigContext) -> TypeClass {
    classify_ref(&TypeRef::parse(raw), ctx)
}

pub fn classify_ref(r: &TypeRef, ctx: &dyn SigContext) -> TypeClass {
    if r.dims > 0 {
        let mut elem = r.clone();
        elem.dims -= 1;
        elem.raw = elem.raw.trim_end_matches("[]").to_string();
        return TypeClass::Container(Some(Box::new(classify_ref(&elem, ctx))));
    }
    let simple = r.simple_base();
    if simple == "void" {
        return TypeClass::Void;
    }
    if INTEGRAL.contains(&simple) {
        return TypeClass::Integral;
    }
    if FLOATING.contains(&simple) {
        return TypeClass::Floating;
    }
    if simple == "boolean" || simple == "Boolean" {
        return TypeClass::Bool;
    }
    if simple == "char" || simple == "Character" {
        return TypeClass::CharLike;
    }
    if TEXT.contains(&simple) {
        return TypeClass::Text;
    }
    if CONTAINERS.contains(&simple) {
        let elem = r.args.first().map(|a| Box::new(classify_ref(a, ctx)));
        return TypeClass::Container(elem);
    }
    if MAP_LIKE.contains(&simple) {
        let elem = r.args.get(1).map(|a| Box::new(classify_ref(a, ctx)));
        return TypeClass::Container(elem);
    }
    if ctx.is_internal(simple) {
        return TypeClass::Internal(simple.to_string());
    }
    TypeClass::External(simple.to_string())
}

/// Symmetric, reflexive compatibility between classes from two sides.
pub fn compatible(
    a: &TypeClass,
    b: &TypeClass,
    ctx_a: &dyn SigContext,
    ctx_b: &dyn SigContext,
) -> bool {
    match (a, b) {
        (TypeClass::Void, TypeClass::Void)
        | (TypeClass::Integral, TypeClass::Integral)
        | (TypeClass::Floating, TypeClass::Floating)
        | (TypeClass::Bool, TypeClass::Bool)
        | (TypeClass::CharLike, TypeClass::CharLike)
        | (TypeClass::Text, TypeClass::Text) => true,
        (TypeClass::Container(x), TypeClass::Container(y)) => match (x, y) {
            (Some(x), Some(y)) => compatible(x, y, ctx_a, ctx_b),
            _ => true,
        },
        (TypeClass::Internal(x), TypeClass::Internal(y)) => {
            if x == y {
                return true;
            }
            internal_similarity(x, y, ctx_a, ctx_b) >= 0.5
        }
        (TypeClass::External(x), TypeClass::External(y)) => x == y,
        _ => false,
    }
}

/// Depth-one similarity of two internal types: fraction of member
/// signatures shared, over the larger member count.
fn internal_similarity(a: &str, b: &str, ctx_a: &dyn SigContext, ctx_b: &dyn SigContext) -> f64 {
    let (Some(mut sa), Some(mut sb)) = (ctx_a.member_sigs(a), ctx_b.member_sigs(b)) else {
        return 0.0;
    };
    if sa.is_empty() && sb.is_empty() {
        return 1.0;
    }
    sa.sort();
    sb.sort();
    let max = sa.len().max(sb.len());
    let mut shared = 0usize;
    let (mut i, mut j) = (0usize, 0usize);
    while i < sa.len() && j < sb.len() {
        match sa[i].cmp(&sb[j]) {
            std::cmp::Ordering::Equal => {
                shared += 1;
                i += 1;
                j += 1;
            }
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
        }
    }
    shared as f64 / max as f64
}

/// Collapses internal names so signature comparison stays at depth one.
pub fn shallow(tc: &TypeClass) -> TypeClass {
    match tc {
        TypeClass::Internal(_) => TypeClass::Internal("*".to_string()),
        TypeClass::Container(Some(e)) => TypeClass::Container(Some(Box::new(shallow(e)))),
        other => other.clone(),
    }
}

/// True when two same-arity parameter lists can be put in bijection under
/// `compatible` (parameter order disregarded).
pub fn multiset_compatible(
    a: &[TypeClass],
    b: &[TypeClass],
    ctx_a: &dyn SigContext,
    ctx_b: &dyn SigContext,
) -> bool {
    if a.len() != b.len() {
        return false;
    }
    fn assign(
        i: usize,
        a: &[TypeClass],
        b: &[TypeClass],
        taken: &mut Vec<bool>,
        ctx_a: &dyn SigContext,
        ctx_b: &dyn SigContext,
    ) -> bool {
        if i == a.len() {
            return true;
        }
        for j in 0..b.len() {
            if !taken[j] && compatible(&a[i], &b[j], ctx_a, ctx_b) {
                taken[j] = true;
                if assign(i + 1, a, b, taken, ctx_a, ctx_b) {
                    return true;
                }
                taken[j] = false;
            }
        }
        false
    }
    let mut taken = vec![false; b.len()];
    assign(0, a, b, &mut taken, ctx_a, ctx_b)
}

/// Context over parsed type declarations (one side = one subsystem).
pub struct DeclContext {
    sigs: BTreeMap<String, Vec<MemberSig>>,
}

impl DeclContext {
    pub fn new(decls: &[&TypeDecl]) -> DeclContext {
        let names: Vec<String> = decls.iter().map(|d| d.simple_name.clone()).collect();
        let probe = NameOnlyContext { names: names.clone() };
        let mut sigs = BTreeMap::new();
        for decl in decls {
            let members = decl
                .members
                .iter()
                .map(|m| MemberSig {
                    kind: m.kind,
                    params: {
                        let mut p: Vec<TypeClass> = m
                            .params
                            .iter()
                            .map(|p| shallow(&classify_ref(&p.type_ref, &probe)))
                            .collect();
                        p.sort();
                        p
                    },
                    ret: m
                        .type_ref
                        .as_ref()
                        .map(|r| shallow(&classify_ref(r, &probe)))
                        .unwrap_or(TypeClass::Void),
                })
                .collect();
            sigs.insert(decl.simple_name.clone(), members);
        }
        DeclContext { sigs }
    }
}

impl SigContext for DeclContext {
    fn member_sigs(&self, simple_name: &str) -> Option<Vec<MemberSig>> {
        self.sigs.get(simple_name).cloned()
    }
}

/// Context that only knows which names are internal; used while the sig
/// table itself is being built.
struct NameOnlyContext {
    names: Vec<String>,
}

impl SigContext for NameOnlyContext {
    fn member_sigs(&self, simple_name: &str) -> Option<Vec<MemberSig>> {
        self.names
            .iter()
            .any(|n| n == simple_name)
            .then(Vec::new)
    }
}

/// An empty context: every non-builtin name classifies as external.
pub struct ExternalContext;

impl SigContext for ExternalContext {
    fn member_sigs(&self, _simple_name: &str) -> Option<Vec<MemberSig>> {
        None
    }
}
