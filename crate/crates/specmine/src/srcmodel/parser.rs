//! Recursive-descent parser for the supported Java dialect.
//!
//! Covers packages, imports, top-level and nested classes/interfaces/enums,
//! fields, methods, constructors, annotations, extends/implements and
//! generics-as-raw-text. Constructs outside the subset are skipped with a
//! diagnostic; a unit only fails to parse when no top-level type can be
//! recovered.

use thiserror::Error;

use super::lexer::{lex, Comment, Tok, TokKind};
use super::{
    Annotation, CompilationModel, Import, MemberDecl, MemberKind, Param, TypeDecl, TypeKind,
    TypeRef, Visibility,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{unit}:{line}:{col}: {message}")]
pub struct ParseError {
    pub unit: String,
    pub line: u32,
    pub col: u32,
    pub message: String,
}

/// Parses a unit with an anonymous id (tests, inline snippets).
pub fn parse_unit(text: &str) -> Result<CompilationModel, ParseError> {
    parse_unit_named("<inline>", text)
}

/// Parses `text` into a compilation model.
pub fn parse_unit_named(unit: &str, text: &str) -> Result<CompilationModel, ParseError> {
    let lexed = lex(text);
    let mut p = Parser {
        unit: unit.to_string(),
        toks: lexed.tokens,
        comments: lexed.comments,
        comment_cursor: 0,
        pos: 0,
        diagnostics: Vec::new(),
    };
    p.parse_model()
}

/// Parses a type reference from raw text, e.g. `Map<String,List<Foo>>[]`.
pub fn parse_type_text(raw: &str) -> TypeRef {
    let lexed = lex(raw);
    let mut p = Parser {
        unit: "<type>".to_string(),
        toks: lexed.tokens,
        comments: Vec::new(),
        comment_cursor: 0,
        pos: 0,
        diagnostics: Vec::new(),
    };
    p.parse_type_ref().unwrap_or_else(|_| TypeRef {
        raw: raw.trim().to_string(),
        base: raw.trim().to_string(),
        args: Vec::new(),
        dims: 0,
        resolved: Default::default(),
    })
}

struct Parser {
    unit: String,
    toks: Vec<Tok>,
    comments: Vec<Comment>,
    comment_cursor: usize,
    pos: usize,
    diagnostics: Vec<String>,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn peek_at(&self, n: usize) -> Option<&Tok> {
        self.toks.get(self.pos + n)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn at(&self, text: &str) -> bool {
        self.peek().is_some_and(|t| t.text == text)
    }

    fn eat(&mut self, text: &str) -> bool {
        if self.at(text) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, text: &str) -> Result<Tok, ParseError> {
        if self.at(text) {
            Ok(self.bump().unwrap())
        } else {
            Err(self.error_here(&format!("expected `{text}`")))
        }
    }

    fn error_here(&self, message: &str) -> ParseError {
        let (line, col) = self
            .peek()
            .map(|t| (t.line, t.col))
            .unwrap_or_else(|| self.toks.last().map(|t| (t.line, t.col)).unwrap_or((1, 1)));
        ParseError {
            unit: self.unit.clone(),
            line,
            col,
            message: message.to_string(),
        }
    }

    fn current_line(&self) -> u32 {
        self.peek().map(|t| t.line).unwrap_or(u32::MAX)
    }

    /// Comments that start before `line` and have not been claimed yet.
    fn take_comments_before(&mut self, line: u32) -> String {
        let mut parts: Vec<String> = Vec::new();
        while self
            .comments
            .get(self.comment_cursor)
            .is_some_and(|c| c.line < line)
        {
            parts.push(self.comments[self.comment_cursor].text.clone());
            self.comment_cursor += 1;
        }
        parts.retain(|p| !p.is_empty());
        parts.join("\n")
    }

    fn parse_model(&mut self) -> Result<CompilationModel, ParseError> {
        let mut model = CompilationModel {
            package: None,
            unit_annotations: Vec::new(),
            imports: Vec::new(),
            types: Vec::new(),
            diagnostics: Vec::new(),
        };

        // Leading annotations belong to the unit when a package or import
        // statement follows them (the abstraction format's header).
        loop {
            if self.at("@") && !self.followed_by_type_decl() {
                let ann = self.parse_annotation()?;
                model.unit_annotations.push(ann);
                continue;
            }
            break;
        }

        if self.peek().is_some_and(|t| t.is_kw("package")) {
            self.bump();
            let name = self.parse_dotted_name()?;
            self.expect(";")?;
            model.package = Some(name);
        }

        while self.peek().is_some_and(|t| t.is_kw("import")) {
            self.bump();
            let is_static = self.peek().is_some_and(|t| t.is_kw("static"));
            if is_static {
                self.bump();
            }
            let mut path = self.parse_dotted_name()?;
            let mut wildcard = false;
            if self.eat(".") {
                self.expect("*")?;
                wildcard = true;
            } else if path.ends_with(".*") {
                path.truncate(path.len() - 2);
                wildcard = true;
            }
            self.expect(";")?;
            model.imports.push(Import { path, wildcard, is_static });
        }

        let package = model.package.clone().unwrap_or_default();
        while self.peek().is_some() {
            match self.parse_type_decl(&package) {
                Ok(Some(ty)) => model.types.push(ty),
                Ok(None) => {}
                Err(e) => {
                    // Record and skip forward to the next plausible decl.
                    self.diagnostics.push(e.to_string());
                    if self.bump().is_none() {
                        break;
                    }
                }
            }
        }

        model.diagnostics = std::mem::take(&mut self.diagnostics);
        if model.types.is_empty() {
            return Err(ParseError {
                unit: self.unit.clone(),
                line: 1,
                col: 1,
                message: "no type declaration recovered".to_string(),
            });
        }
        Ok(model)
    }

    /// True when the upcoming annotation run is directly followed by a type
    /// declaration rather than a package statement.
    fn followed_by_type_decl(&self) -> bool {
        let mut i = self.pos;
        while self.toks.get(i).is_some_and(|t| t.text == "@") {
            i += 1; // @
            i += 1; // name
            if self.toks.get(i).is_some_and(|t| t.text == "(") {
                let mut depth = 0usize;
                while let Some(t) = self.toks.get(i) {
                    match t.text.as_str() {
                        "(" => depth += 1,
                        ")" => {
                            depth -= 1;
                            if depth == 0 {
                                i += 1;
                                break;
                            }
                        }
                        _ => {}
                    }
                    i += 1;
                }
            }
        }
        !self.toks.get(i).is_some_and(|t| t.is_kw("package") || t.is_kw("import"))
    }

    fn parse_dotted_name(&mut self) -> Result<String, ParseError> {
        let mut name = String::new();
        loop {
            let t = self
                .peek()
                .filter(|t| t.kind == TokKind::Ident || t.text == "*")
                .cloned()
                .ok_or_else(|| self.error_here("expected name"))?;
            self.bump();
            name.push_str(&t.text);
            // Stop before `.*` so the import rule can see the wildcard.
            if self.at(".") && self.peek_at(1).is_some_and(|t| t.kind == TokKind::Ident) {
                self.bump();
                name.push('.');
            } else {
                break;
            }
        }
        Ok(name)
    }

    fn parse_annotation(&mut self) -> Result<Annotation, ParseError> {
        self.expect("@")?;
        let name = self
            .peek()
            .filter(|t| t.kind == TokKind::Ident)
            .cloned()
            .ok_or_else(|| self.error_here("expected annotation name"))?;
        self.bump();
        let mut args = Vec::new();
        if self.at("(") {
            self.bump();
            let mut depth = 1usize;
            while let Some(t) = self.peek() {
                match t.text.as_str() {
                    "(" => depth += 1,
                    ")" => {
                        depth -= 1;
                        if depth == 0 {
                            self.bump();
                            break;
                        }
                    }
                    _ => {}
                }
                args.push(self.bump().unwrap());
            }
        }
        Ok(Annotation { name: name.text, args })
    }

    /// Parses modifiers and annotations shared by types and members.
    fn parse_prefix(&mut self) -> Result<Prefix, ParseError> {
        let line = self.current_line();
        let comment = self.take_comments_before(line);
        let mut prefix = Prefix {
            comment,
            ..Prefix::default()
        };
        loop {
            if self.at("@") {
                prefix.annotations.push(self.parse_annotation()?);
                continue;
            }
            let Some(t) = self.peek() else { break };
            if t.kind != TokKind::Kw {
                break;
            }
            match t.text.as_str() {
                "public" => prefix.visibility = Visibility::Public,
                "protected" => prefix.visibility = Visibility::Protected,
                "private" => prefix.visibility = Visibility::Private,
                "static" => prefix.is_static = true,
                "final" => prefix.is_final = true,
                "abstract" => prefix.is_abstract = true,
                "synchronized" | "native" | "transient" | "volatile" | "strictfp" | "default" => {}
                _ => break,
            }
            self.bump();
        }
        if self.at("<") {
            prefix.type_params = Some(self.capture_generics()?);
        }
        Ok(prefix)
    }

    fn parse_type_decl(&mut self, package: &str) -> Result<Option<TypeDecl>, ParseError> {
        if self.peek().is_none() {
            return Ok(None);
        }
        let prefix = self.parse_prefix()?;
        let Some(t) = self.peek() else { return Ok(None) };
        let kind = match t.text.as_str() {
            "class" => TypeKind::Class,
            "interface" => TypeKind::Interface,
            "enum" => TypeKind::Enum,
            _ => return Err(self.error_here("expected type declaration")),
        };
        self.bump();
        let name = self
            .peek()
            .filter(|t| t.kind == TokKind::Ident)
            .cloned()
            .ok_or_else(|| self.error_here("expected type name"))?;
        self.bump();
        let type_params = if self.at("<") { Some(self.capture_generics()?) } else { None };

        let mut extends = Vec::new();
        let mut implements = Vec::new();
        if self.peek().is_some_and(|t| t.is_kw("extends")) {
            self.bump();
            extends.push(self.parse_type_ref()?);
            while self.eat(",") {
                extends.push(self.parse_type_ref()?);
            }
        }
        if self.peek().is_some_and(|t| t.is_kw("implements")) {
            self.bump();
            implements.push(self.parse_type_ref()?);
            while self.eat(",") {
                implements.push(self.parse_type_ref()?);
            }
        }
        self.expect("{")?;

        let qualified = if package.is_empty() {
            name.text.clone()
        } else {
            format!("{package}.{}", name.text)
        };
        let mut ty = TypeDecl {
            simple_name: name.text.clone(),
            qualified_name: qualified.clone(),
            kind,
            visibility: prefix.visibility,
            is_abstract: prefix.is_abstract || kind == TypeKind::Interface,
            is_static: prefix.is_static,
            extends,
            implements,
            type_params: prefix.type_params.or(type_params),
            members: Vec::new(),
            nested: Vec::new(),
            enum_constants: Vec::new(),
            comment: prefix.comment,
            annotations: prefix.annotations,
        };

        if kind == TypeKind::Enum {
            self.parse_enum_constants(&mut ty)?;
        }

        while !self.at("}") {
            if self.peek().is_none() {
                return Err(self.error_here("unterminated type body"));
            }
            self.parse_member(&mut ty, &qualified)?;
        }
        self.expect("}")?;
        Ok(Some(ty))
    }

    fn parse_enum_constants(&mut self, ty: &mut TypeDecl) -> Result<(), ParseError> {
        loop {
            if self.at(";") {
                self.bump();
                return Ok(());
            }
            if self.at("}") {
                return Ok(());
            }
            let t = self
                .peek()
                .filter(|t| t.kind == TokKind::Ident)
                .cloned()
                .ok_or_else(|| self.error_here("expected enum constant"))?;
            self.bump();
            ty.enum_constants.push(t.text);
            if self.at("(") {
                self.skip_balanced("(", ")")?;
            }
            if self.at("{") {
                self.diagnostics
                    .push(format!("{}: enum constant body skipped", self.unit));
                self.skip_balanced("{", "}")?;
            }
            if !self.eat(",") && !self.at(";") && !self.at("}") {
                return Err(self.error_here("malformed enum constant list"));
            }
        }
    }

    fn parse_member(&mut self, ty: &mut TypeDecl, enclosing: &str) -> Result<(), ParseError> {
        // Stray semicolon.
        if self.eat(";") {
            return Ok(());
        }
        // Initializer block: outside the subset; skip.
        if self.at("{")
            || (self.peek().is_some_and(|t| t.is_kw("static"))
                && self.peek_at(1).is_some_and(|t| t.text == "{"))
        {
            self.diagnostics
                .push(format!("{}: initializer block skipped in {}", self.unit, enclosing));
            if self.peek().is_some_and(|t| t.is_kw("static")) {
                self.bump();
            }
            self.skip_balanced("{", "}")?;
            return Ok(());
        }

        let checkpoint = (self.pos, self.comment_cursor);
        let prefix = match self.parse_prefix() {
            Ok(p) => p,
            Err(e) => {
                self.recover_member(checkpoint.0, &e);
                return Ok(());
            }
        };

        // Nested type declaration.
        if self
            .peek()
            .is_some_and(|t| t.is_kw("class") || t.is_kw("interface") || t.is_kw("enum"))
        {
            self.pos = checkpoint.0;
            self.comment_cursor = checkpoint.1;
            match self.parse_type_decl(enclosing) {
                Ok(Some(nested)) => ty.nested.push(nested),
                Ok(None) => {}
                Err(e) => self.recover_member(checkpoint.0, &e),
            }
            return Ok(());
        }

        // Constructor: enclosing simple name followed by `(`.
        let simple = enclosing.rsplit('.').next().unwrap_or(enclosing);
        if self.peek().is_some_and(|t| t.text == simple && t.kind == TokKind::Ident)
            && self.peek_at(1).is_some_and(|t| t.text == "(")
        {
            self.bump();
            match self.finish_method(prefix, None, simple.to_string(), MemberKind::Constructor) {
                Ok(m) => ty.members.push(m),
                Err(e) => self.recover_member(checkpoint.0, &e),
            }
            return Ok(());
        }

        let parsed = self.parse_type_ref().and_then(|type_ref| {
            let name = self
                .peek()
                .filter(|t| t.kind == TokKind::Ident)
                .cloned()
                .ok_or_else(|| self.error_here("expected member name"))?;
            self.bump();
            Ok((type_ref, name))
        });
        let (type_ref, name) = match parsed {
            Ok(v) => v,
            Err(e) => {
                self.recover_member(checkpoint.0, &e);
                return Ok(());
            }
        };

        if self.at("(") {
            match self.finish_method(prefix, Some(type_ref), name.text, MemberKind::Method) {
                Ok(m) => ty.members.push(m),
                Err(e) => self.recover_member(checkpoint.0, &e),
            }
            return Ok(());
        }

        // Field declaration, possibly with several declarators.
        match self.finish_fields(prefix, type_ref, name.text) {
            Ok(fields) => ty.members.extend(fields),
            Err(e) => self.recover_member(checkpoint.0, &e),
        }
        Ok(())
    }

    /// Skips past the broken member: to the matching `}` if a `{` comes
    /// before the next `;`, else past the `;`.
    fn recover_member(&mut self, start: usize, e: &ParseError) {
        self.diagnostics.push(e.to_string());
        if self.pos <= start {
            self.pos = start + 1;
        }
        while let Some(t) = self.peek() {
            match t.text.as_str() {
                ";" => {
                    self.bump();
                    return;
                }
                "{" => {
                    let _ = self.skip_balanced("{", "}");
                    return;
                }
                "}" => return,
                _ => {
                    self.bump();
                }
            }
        }
    }

    fn finish_method(
        &mut self,
        prefix: Prefix,
        type_ref: Option<TypeRef>,
        name: String,
        kind: MemberKind,
    ) -> Result<MemberDecl, ParseError> {
        self.expect("(")?;
        let mut params = Vec::new();
        if !self.at(")") {
            loop {
                while self.at("@") {
                    self.parse_annotation()?;
                }
                if self.peek().is_some_and(|t| t.is_kw("final")) {
                    self.bump();
                }
                let mut ptype = self.parse_type_ref()?;
                if self.eat("...") {
                    ptype.dims += 1;
                    ptype.raw.push_str("[]");
                }
                let pname = self
                    .peek()
                    .filter(|t| t.kind == TokKind::Ident)
                    .cloned()
                    .ok_or_else(|| self.error_here("expected parameter name"))?;
                self.bump();
                while self.at("[") {
                    self.bump();
                    self.expect("]")?;
                    ptype.dims += 1;
                    ptype.raw.push_str("[]");
                }
                params.push(Param { name: pname.text, type_ref: ptype });
                if !self.eat(",") {
                    break;
                }
            }
        }
        self.expect(")")?;

        let mut throws = Vec::new();
        if self.peek().is_some_and(|t| t.is_kw("throws")) {
            self.bump();
            loop {
                let r = self.parse_type_ref()?;
                throws.push(r.raw);
                if !self.eat(",") {
                    break;
                }
            }
        }

        let body_start_line = self.current_line();
        let body = if self.at("{") {
            Some(self.capture_body()?)
        } else {
            self.expect(";")?;
            None
        };
        let body_end_line = self.toks.get(self.pos.saturating_sub(1)).map(|t| t.line).unwrap_or(body_start_line);
        let mut comment = prefix.comment;
        let inner = self.take_comments_before_end(body_end_line);
        if !inner.is_empty() {
            if !comment.is_empty() {
                comment.push('\n');
            }
            comment.push_str(&inner);
        }

        Ok(MemberDecl {
            kind,
            name,
            visibility: prefix.visibility,
            is_static: prefix.is_static,
            is_final: prefix.is_final,
            is_abstract: prefix.is_abstract || body.is_none(),
            type_ref,
            params,
            throws,
            body,
            init: None,
            comment,
            annotations: prefix.annotations,
            type_params: prefix.type_params,
        })
    }

    /// Claims comments fully inside a just-captured body.
    fn take_comments_before_end(&mut self, end_line: u32) -> String {
        let mut parts = Vec::new();
        while self
            .comments
            .get(self.comment_cursor)
            .is_some_and(|c| c.end_line <= end_line)
        {
            parts.push(self.comments[self.comment_cursor].text.clone());
            self.comment_cursor += 1;
        }
        parts.retain(|p| !p.is_empty());
        parts.join("\n")
    }

    fn finish_fields(
        &mut self,
        prefix: Prefix,
        type_ref: TypeRef,
        first_name: String,
    ) -> Result<Vec<MemberDecl>, ParseError> {
        let mut fields = Vec::new();
        let mut name = first_name;
        loop {
            let mut dims_extra = 0u8;
            while self.at("[") {
                self.bump();
                self.expect("]")?;
                dims_extra += 1;
            }
            let mut tref = type_ref.clone();
            for _ in 0..dims_extra {
                tref.dims += 1;
                tref.raw.push_str("[]");
            }
            let init = if self.eat("=") {
                Some(self.capture_until_declarator_end()?)
            } else {
                None
            };
            fields.push(MemberDecl {
                kind: MemberKind::Field,
                name,
                visibility: prefix.visibility,
                is_static: prefix.is_static,
                is_final: prefix.is_final,
                is_abstract: false,
                type_ref: Some(tref),
                params: Vec::new(),
                throws: Vec::new(),
                body: None,
                init,
                comment: prefix.comment.clone(),
                annotations: prefix.annotations.clone(),
                type_params: None,
            });
            if self.eat(",") {
                let t = self
                    .peek()
                    .filter(|t| t.kind == TokKind::Ident)
                    .cloned()
                    .ok_or_else(|| self.error_here("expected field name"))?;
                self.bump();
                name = t.text;
                continue;
            }
            self.expect(";")?;
            return Ok(fields);
        }
    }

    /// Tokens of an initializer expression, up to `,` or `;` at depth zero.
    fn capture_until_declarator_end(&mut self) -> Result<Vec<Tok>, ParseError> {
        let mut out = Vec::new();
        let mut depth = 0i32;
        while let Some(t) = self.peek() {
            match t.text.as_str() {
                "(" | "{" | "[" => depth += 1,
                ")" | "}" | "]" => depth -= 1,
                "," | ";" if depth == 0 => return Ok(out),
                _ => {}
            }
            if depth < 0 {
                return Err(self.error_here("unbalanced initializer"));
            }
            out.push(self.bump().unwrap());
        }
        Err(self.error_here("unterminated initializer"))
    }

    /// Captures a `{ ... }` body, returning the inner tokens.
    fn capture_body(&mut self) -> Result<Vec<Tok>, ParseError> {
        self.expect("{")?;
        let mut out = Vec::new();
        let mut depth = 1usize;
        while let Some(t) = self.peek() {
            match t.text.as_str() {
                "{" => depth += 1,
                "}" => {
                    depth -= 1;
                    if depth == 0 {
                        self.bump();
                        return Ok(out);
                    }
                }
                _ => {}
            }
            out.push(self.bump().unwrap());
        }
        Err(self.error_here("unterminated body"))
    }

    fn skip_balanced(&mut self, open: &str, close: &str) -> Result<(), ParseError> {
        self.expect(open)?;
        let mut depth = 1usize;
        while let Some(t) = self.peek() {
            if t.text == open {
                depth += 1;
            } else if t.text == close {
                depth -= 1;
                if depth == 0 {
                    self.bump();
                    return Ok(());
                }
            }
            self.bump();
        }
        Err(self.error_here("unterminated block"))
    }

    /// Captures a generics section `<...>` as normalized raw text.
    fn capture_generics(&mut self) -> Result<String, ParseError> {
        self.expect("<")?;
        let mut depth = 1i32;
        let mut out = String::from("<");
        while let Some(t) = self.peek().cloned() {
            depth += angle_delta(&t.text);
            out.push_str(&t.text);
            self.bump();
            if depth <= 0 {
                return Ok(out);
            }
            if (t.kind == TokKind::Ident || t.kind == TokKind::Kw)
                && self.peek().is_some_and(|n| n.kind == TokKind::Ident || n.kind == TokKind::Kw)
            {
                out.push(' ');
            }
        }
        Err(self.error_here("unterminated generics"))
    }

    pub(super) fn parse_type_ref(&mut self) -> Result<TypeRef, ParseError> {
        let t = self
            .peek()
            .filter(|t| t.kind == TokKind::Ident || t.kind == TokKind::Kw || t.text == "?")
            .cloned()
            .ok_or_else(|| self.error_here("expected type"))?;
        self.bump();
        let mut base = t.text.clone();
        while self.at(".") && self.peek_at(1).is_some_and(|t| t.kind == TokKind::Ident) {
            self.bump();
            base.push('.');
            base.push_str(&self.bump().unwrap().text);
        }
        let mut args = Vec::new();
        let mut raw = base.clone();
        if self.at("<")
            && self
                .peek_at(1)
                .is_some_and(|t| t.kind == TokKind::Ident || t.kind == TokKind::Kw || t.text == "?" || t.text == ">")
        {
            self.bump();
            raw.push('<');
            if !self.at(">") {
                loop {
                    let arg = if self.at("?") {
                        self.bump();
                        // Wildcards keep only their bound's base if present.
                        if self.peek().is_some_and(|t| t.is_kw("extends") || t.is_kw("super")) {
                            self.bump();
                            self.parse_type_ref()?
                        } else {
                            TypeRef {
                                raw: "?".to_string(),
                                base: "?".to_string(),
                                args: Vec::new(),
                                dims: 0,
                                resolved: Default::default(),
                            }
                        }
                    } else {
                        self.parse_type_ref()?
                    };
                    raw.push_str(&arg.raw);
                    args.push(arg);
                    if self.eat(",") {
                        raw.push(',');
                        continue;
                    }
                    break;
                }
            }
            // `>>` and `>>>` close several nesting levels at once.
            if self.at(">") {
                self.bump();
            } else if self.at(">>") {
                self.toks[self.pos].text = ">".to_string();
            } else if self.at(">>>") {
                self.toks[self.pos].text = ">>".to_string();
            } else {
                return Err(self.error_here("expected `>`"));
            }
            raw.push('>');
        }
        let mut dims = 0u8;
        while self.at("[") && self.peek_at(1).is_some_and(|t| t.text == "]") {
            self.bump();
            self.bump();
            dims += 1;
            raw.push_str("[]");
        }
        Ok(TypeRef {
            raw,
            base,
            args,
            dims,
            resolved: Default::default(),
        })
    }
}

fn angle_delta(text: &str) -> i32 {
    let opens = text.chars().filter(|c| *c == '<').count() as i32;
    let closes = text.chars().filter(|c| *c == '>').count() as i32;
    opens - closes
}

#[derive(Default)]
struct Prefix {
    visibility: Visibility,
    is_static: bool,
    is_final: bool,
    is_abstract: bool,
    annotations: Vec<Annotation>,
    type_params: Option<String>,
    comment: String,
}
