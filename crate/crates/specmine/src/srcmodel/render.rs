//! Canonical source rendering for compilation models.
//!
//! The renderer is the inverse of the parser over the supported dialect:
//! re-parsing rendered text reproduces the model. Token spacing is decided
//! by re-lexing candidate joins, so adjacent tokens never merge.

use super::lexer::{lex, Tok, TokKind};
use super::{Annotation, CompilationModel, MemberDecl, MemberKind, TypeDecl, TypeKind};

pub fn render_unit(model: &CompilationModel) -> String {
    let mut out = String::new();
    for ann in &model.unit_annotations {
        out.push_str(&render_annotation(ann));
        out.push('\n');
    }
    if let Some(pkg) = &model.package {
        out.push_str("package ");
        out.push_str(pkg);
        out.push_str(";\n");
    }
    if !model.imports.is_empty() {
        out.push('\n');
        for import in &model.imports {
            out.push_str("import ");
            if import.is_static {
                out.push_str("static ");
            }
            out.push_str(&import.path);
            if import.wildcard {
                out.push_str(".*");
            }
            out.push_str(";\n");
        }
    }
    for ty in &model.types {
        out.push('\n');
        render_type(&mut out, ty, 0);
    }
    out
}

fn indent(out: &mut String, level: usize) {
    for _ in 0..level {
        out.push_str("    ");
    }
}

fn render_comment(out: &mut String, comment: &str, level: usize) {
    for line in comment.lines() {
        indent(out, level);
        out.push_str("// ");
        out.push_str(line);
        out.push('\n');
    }
}

pub fn render_annotation(ann: &Annotation) -> String {
    let mut s = format!("@{}", ann.name);
    if !ann.args.is_empty() {
        s.push('(');
        s.push_str(&join_tokens(&ann.args));
        s.push(')');
    }
    s
}

fn render_type(out: &mut String, ty: &TypeDecl, level: usize) {
    render_comment(out, &ty.comment, level);
    for ann in &ty.annotations {
        indent(out, level);
        out.push_str(&render_annotation(ann));
        out.push('\n');
    }
    indent(out, level);
    let vis = ty.visibility.keyword();
    if !vis.is_empty() {
        out.push_str(vis);
        out.push(' ');
    }
    if ty.is_static && level > 0 {
        out.push_str("static ");
    }
    if ty.is_abstract && ty.kind == TypeKind::Class {
        out.push_str("abstract ");
    }
    out.push_str(match ty.kind {
        TypeKind::Class => "class ",
        TypeKind::Interface => "interface ",
        TypeKind::Enum => "enum ",
    });
    out.push_str(&ty.simple_name);
    if let Some(tp) = &ty.type_params {
        out.push_str(tp);
    }
    if !ty.extends.is_empty() {
        out.push_str(" extends ");
        out.push_str(&ty.extends.iter().map(|r| r.raw.clone()).collect::<Vec<_>>().join(", "));
    }
    if !ty.implements.is_empty() {
        out.push_str(" implements ");
        out.push_str(&ty.implements.iter().map(|r| r.raw.clone()).collect::<Vec<_>>().join(", "));
    }
    out.push_str(" {\n");
    if !ty.enum_constants.is_empty() {
        indent(out, level + 1);
        out.push_str(&ty.enum_constants.join(", "));
        out.push_str(";\n");
    }
    for member in &ty.members {
        render_member(out, member, ty.kind, level + 1);
    }
    for nested in &ty.nested {
        out.push('\n');
        render_type(out, nested, level + 1);
    }
    indent(out, level);
    out.push_str("}\n");
}

fn render_member(out: &mut String, m: &MemberDecl, enclosing: TypeKind, level: usize) {
    render_comment(out, &m.comment, level);
    for ann in &m.annotations {
        indent(out, level);
        out.push_str(&render_annotation(ann));
        out.push('\n');
    }
    indent(out, level);
    let vis = m.visibility.keyword();
    if !vis.is_empty() {
        out.push_str(vis);
        out.push(' ');
    }
    if m.is_static {
        out.push_str("static ");
    }
    if m.is_abstract
        && m.kind == MemberKind::Method
        && m.body.is_none()
        && enclosing != TypeKind::Interface
    {
        out.push_str("abstract ");
    }
    if m.is_final {
        out.push_str("final ");
    }
    if let Some(tp) = &m.type_params {
        out.push_str(tp);
        out.push(' ');
    }
    match m.kind {
        MemberKind::Field => {
            let tr = m.type_ref.as_ref().expect("field type");
            out.push_str(&tr.raw);
            out.push(' ');
            out.push_str(&m.name);
            if let Some(init) = &m.init {
                out.push_str(" = ");
                out.push_str(&join_tokens(init));
            }
            out.push_str(";\n");
        }
        MemberKind::Method | MemberKind::Constructor => {
            if let Some(tr) = &m.type_ref {
                out.push_str(&tr.raw);
                out.push(' ');
            }
            out.push_str(&m.name);
            out.push('(');
            let params: Vec<String> = m
                .params
                .iter()
                .map(|p| format!("{} {}", p.type_ref.raw, p.name))
                .collect();
            out.push_str(&params.join(", "));
            out.push(')');
            if !m.throws.is_empty() {
                out.push_str(" throws ");
                out.push_str(&m.throws.join(", "));
            }
            match &m.body {
                Some(body) if body.is_empty() => out.push_str(" {\n"),
                Some(body) => {
                    out.push_str(" {\n");
                    render_body(out, body, level + 1);
                }
                None => {
                    out.push_str(";\n");
                    return;
                }
            }
            indent(out, level);
            out.push_str("}\n");
        }
    }
}

/// Renders body tokens with statement-level line breaks.
pub fn render_body_tokens(tokens: &[Tok]) -> String {
    let mut out = String::new();
    render_body(&mut out, tokens, 1);
    out
}

fn render_body(out: &mut String, tokens: &[Tok], base_level: usize) {
    let mut level = base_level;
    let mut paren_depth = 0usize;
    let mut at_line_start = true;
    let mut prev: Option<&Tok> = None;

    for tok in tokens {
        match tok.text.as_str() {
            "(" | "[" => paren_depth += 1,
            ")" | "]" => paren_depth = paren_depth.saturating_sub(1),
            "}" if paren_depth == 0 => {
                level = level.saturating_sub(1).max(base_level.saturating_sub(1));
                if !at_line_start {
                    out.push('\n');
                    at_line_start = true;
                }
            }
            _ => {}
        }
        if at_line_start {
            indent(out, level);
            at_line_start = false;
        } else if let Some(p) = prev {
            if needs_space(p, tok) {
                out.push(' ');
            }
        }
        out.push_str(&tok.text);
        if paren_depth == 0 {
            match tok.text.as_str() {
                "{" => {
                    level += 1;
                    out.push('\n');
                    at_line_start = true;
                }
                "}" | ";" => {
                    out.push('\n');
                    at_line_start = true;
                }
                _ => {}
            }
        }
        prev = Some(tok);
    }
    if !at_line_start {
        out.push('\n');
    }
}

/// Joins tokens on one line, spacing only where re-lexing would merge them.
pub fn join_tokens(tokens: &[Tok]) -> String {
    let mut out = String::new();
    let mut prev: Option<&Tok> = None;
    for tok in tokens {
        if let Some(p) = prev {
            if needs_space(p, tok) {
                out.push(' ');
            } else if p.text == "," {
                out.push(' ');
            }
        }
        out.push_str(&tok.text);
        prev = Some(tok);
    }
    out
}

/// True when writing `a` directly followed by `b` would change the token
/// stream. Decided by re-lexing the concatenation.
fn needs_space(a: &Tok, b: &Tok) -> bool {
    if matches!(a.kind, TokKind::Str | TokKind::Char) || matches!(b.kind, TokKind::Str | TokKind::Char)
    {
        return false;
    }
    let joined = format!("{}{}", a.text, b.text);
    let lexed = lex(&joined);
    lexed.tokens.first().map(|t| t.text != a.text).unwrap_or(true)
}
