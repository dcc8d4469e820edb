//! Recursive-descent parser for the Java subset the detectors query.
//!
//! The grammar covers declarations, statements and expressions up to
//! roughly Java 11 (lambdas, method references, try-with-resources,
//! arrow switches). Anything outside it is a parse failure rather than a
//! guess, because every recorded span may end up as a patch boundary.
//!
//! Speculative parses (types, casts, local declarations) never record
//! anything into the view; they only move the cursor, so backtracking is
//! a matter of restoring `pos`.

use super::lexer::{self, Token, TokenKind};
use super::view::*;
use crate::span::Span;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

type PResult<T> = Result<T, ParseError>;

const KEYWORDS: &[&str] = &[
    "abstract",
    "assert",
    "boolean",
    "break",
    "byte",
    "case",
    "catch",
    "char",
    "class",
    "const",
    "continue",
    "default",
    "do",
    "double",
    "else",
    "enum",
    "extends",
    "final",
    "finally",
    "float",
    "for",
    "goto",
    "if",
    "implements",
    "import",
    "instanceof",
    "int",
    "interface",
    "long",
    "native",
    "new",
    "package",
    "private",
    "protected",
    "public",
    "return",
    "short",
    "static",
    "strictfp",
    "super",
    "switch",
    "synchronized",
    "this",
    "throw",
    "throws",
    "transient",
    "try",
    "void",
    "volatile",
    "while",
    "true",
    "false",
    "null",
];

const PRIMITIVES: &[&str] = &["boolean", "byte", "char", "short", "int", "long", "float", "double"];

const MODIFIERS: &[&str] = &[
    "public",
    "protected",
    "private",
    "static",
    "final",
    "abstract",
    "native",
    "synchronized",
    "transient",
    "volatile",
    "strictfp",
    "default",
    "sealed",
];

const ASSIGN_OPS: &[&str] = &["=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", ">>>="];

#[derive(Debug, Clone)]
struct TypeInfo {
    name: String,
    span: Span,
    primitive: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ExprKind {
    Name,
    FieldAccess,
    Call(usize),
    New(usize),
    Assign(usize),
    Literal,
    Other,
}

#[derive(Debug, Clone, Copy)]
struct Expr {
    span: Span,
    /// Span with enclosing casts and parentheses removed.
    core: Span,
    kind: ExprKind,
}

#[derive(Debug, Default)]
struct Modifiers {
    start: Option<usize>,
    is_final: bool,
    override_span: Option<Span>,
}

pub fn parse(src: &[u8]) -> PResult<SyntaxView> {
    let lexed = lexer::lex(src).map_err(|e| ParseError { offset: e.offset, message: e.message })?;
    let mut p = Parser {
        src,
        toks: lexed.tokens,
        pos: 0,
        gt_consumed: 0,
        last_end: 0,
        view: SyntaxView::default(),
        classes: Vec::new(),
        methods: Vec::new(),
        stmts: Vec::new(),
    };
    p.compilation_unit()?;
    p.collect_resource_refs();
    let statements = &p.view.statements;
    for a in &mut p.view.assignments {
        if let Some(s) = a.statement {
            a.statement_span = statements[s].span;
        }
    }
    Ok(p.view)
}

struct Parser<'a> {
    src: &'a [u8],
    toks: Vec<Token>,
    pos: usize,
    /// Number of `>` characters already consumed from a `>>`/`>>>` token
    /// while closing nested type arguments.
    gt_consumed: usize,
    last_end: usize,
    view: SyntaxView,
    classes: Vec<usize>,
    methods: Vec<Option<usize>>,
    stmts: Vec<usize>,
}

impl<'a> Parser<'a> {
    // ---- token plumbing ---------------------------------------------------

    fn tok(&self, k: usize) -> Option<Token> {
        self.toks.get(self.pos + k).copied()
    }

    fn bytes(&self, t: Token) -> &'a [u8] {
        &self.src[t.span.start..t.span.end]
    }

    fn text_of(&self, span: Span) -> String {
        String::from_utf8_lossy(&self.src[span.start..span.end]).into_owned()
    }

    /// Text of the current token, minus any `>` already split off.
    fn cur(&self) -> &'a [u8] {
        match self.tok(0) {
            Some(t) => &self.bytes(t)[self.gt_consumed..],
            None => b"",
        }
    }

    fn at(&self, s: &str) -> bool {
        self.tok(0).is_some() && self.cur() == s.as_bytes()
    }

    fn at_k(&self, k: usize, s: &str) -> bool {
        if k == 0 {
            return self.at(s);
        }
        self.gt_consumed == 0 && self.tok(k).map(|t| self.bytes(t) == s.as_bytes()).unwrap_or(false)
    }

    fn at_eof(&self) -> bool {
        self.pos >= self.toks.len()
    }

    fn cur_start(&self) -> usize {
        match self.tok(0) {
            Some(t) => t.span.start + self.gt_consumed,
            None => self.src.len(),
        }
    }

    fn is_ident_tok(&self, t: Option<Token>) -> bool {
        match t {
            Some(t) if t.kind == TokenKind::Ident => {
                let b = self.bytes(t);
                !KEYWORDS.iter().any(|k| k.as_bytes() == b)
            }
            _ => false,
        }
    }

    fn at_ident(&self) -> bool {
        self.gt_consumed == 0 && self.is_ident_tok(self.tok(0))
    }

    fn advance(&mut self) -> Token {
        let t = self.toks[self.pos];
        self.pos += 1;
        self.gt_consumed = 0;
        self.last_end = t.span.end;
        t
    }

    fn eat(&mut self, s: &str) -> bool {
        if self.at(s) && self.gt_consumed == 0 {
            self.advance();
            true
        } else {
            false
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> PResult<T> {
        Err(ParseError { offset: self.cur_start(), message: message.into() })
    }

    fn expect(&mut self, s: &str) -> PResult<Token> {
        if self.at(s) && self.gt_consumed == 0 {
            Ok(self.advance())
        } else {
            let found = if self.at_eof() {
                "end of file".to_string()
            } else {
                format!("`{}`", String::from_utf8_lossy(self.cur()))
            };
            self.err(format!("expected `{s}`, found {found}"))
        }
    }

    fn ident(&mut self) -> PResult<(String, Span)> {
        if self.at_ident() {
            let t = self.advance();
            Ok((String::from_utf8_lossy(self.bytes(t)).into_owned(), t.span))
        } else {
            self.err("expected identifier")
        }
    }

    /// Consumes a single `>` even when it is the head of `>>` or `>>>`.
    fn expect_gt(&mut self) -> PResult<()> {
        let t = match self.tok(0) {
            Some(t) => t,
            None => return self.err("expected `>`"),
        };
        let text = self.bytes(t);
        if !matches!(text, b">" | b">>" | b">>>") {
            return self.err("expected `>`");
        }
        self.gt_consumed += 1;
        self.last_end = t.span.start + self.gt_consumed;
        if self.gt_consumed == text.len() {
            self.pos += 1;
            self.gt_consumed = 0;
        }
        Ok(())
    }

    fn save(&self) -> (usize, usize, usize) {
        (self.pos, self.gt_consumed, self.last_end)
    }

    fn restore(&mut self, s: (usize, usize, usize)) {
        self.pos = s.0;
        self.gt_consumed = s.1;
        self.last_end = s.2;
    }

    /// Skips a balanced `(...)`, `{...}` or `[...]` group without recording anything.
    fn skip_balanced(&mut self) -> PResult<()> {
        let mut depth = 0usize;
        loop {
            if self.at_eof() {
                return self.err("unbalanced brackets");
            }
            let t = self.advance();
            match self.bytes(t) {
                b"(" | b"{" | b"[" => depth += 1,
                b")" | b"}" | b"]" => {
                    depth -= 1;
                    if depth == 0 {
                        return Ok(());
                    }
                }
                _ => {}
            }
        }
    }

    // ---- context ----------------------------------------------------------

    fn cur_class(&self) -> Option<usize> {
        self.classes.last().copied()
    }

    fn cur_method(&self) -> Option<usize> {
        self.methods.last().copied().flatten()
    }

    fn cur_stmt(&self) -> Option<usize> {
        self.stmts.last().copied()
    }

    fn begin_stmt(&mut self, in_block: bool) -> usize {
        let idx = self.view.statements.len();
        let start = self.cur_start();
        self.view.statements.push(Statement {
            kind: StatementKind::Other,
            span: Span::empty(start),
            in_block,
            enclosing_method: self.cur_method(),
        });
        self.stmts.push(idx);
        idx
    }

    fn end_stmt(&mut self, idx: usize, kind: StatementKind) {
        let s = &mut self.view.statements[idx];
        s.kind = kind;
        s.span.end = self.last_end;
        self.stmts.pop();
    }

    // ---- declarations -----------------------------------------------------

    fn compilation_unit(&mut self) -> PResult<()> {
        let save = self.save();
        self.modifiers()?;
        if self.eat("package") {
            self.view.package = Some(self.qualified_name()?);
            self.expect(";")?;
        } else {
            self.restore(save);
        }
        while self.at("import") {
            self.advance();
            self.eat("static");
            let mut name = self.qualified_name()?;
            if self.eat(".") {
                self.expect("*")?;
                name.push_str(".*");
            }
            self.expect(";")?;
            self.view.imports.push(name);
        }
        while !self.at_eof() {
            if self.eat(";") {
                continue;
            }
            let mods = self.modifiers()?;
            self.type_declaration(mods)?;
        }
        Ok(())
    }

    fn qualified_name(&mut self) -> PResult<String> {
        let (mut name, _) = self.ident()?;
        while self.at(".") && self.is_ident_tok(self.tok(1)) {
            self.advance();
            name.push('.');
            name.push_str(&self.ident()?.0);
        }
        Ok(name)
    }

    fn modifiers(&mut self) -> PResult<Modifiers> {
        let mut mods = Modifiers::default();
        loop {
            if self.at("@") && !self.at_k(1, "interface") {
                let start = self.cur_start();
                mods.start.get_or_insert(start);
                self.advance();
                let name = self.qualified_name()?;
                if self.at("(") {
                    self.skip_balanced()?;
                }
                if name == "Override" || name == "java.lang.Override" {
                    mods.override_span = Some(Span::new(start, self.last_end));
                }
            } else if self.tok(0).map(|t| t.kind == TokenKind::Ident).unwrap_or(false)
                && MODIFIERS.iter().any(|m| self.at(m))
                // `default:` / `default ->` inside switches is not a modifier
                && !(self.at("default") && (self.at_k(1, ":") || self.at_k(1, "->")))
            {
                mods.start.get_or_insert(self.cur_start());
                if self.at("final") {
                    mods.is_final = true;
                }
                self.advance();
            } else {
                return Ok(mods);
            }
        }
    }

    fn at_type_decl_start(&self) -> bool {
        self.at("class") || self.at("interface") || self.at("enum") || (self.at("@") && self.at_k(1, "interface"))
    }

    fn type_declaration(&mut self, mods: Modifiers) -> PResult<usize> {
        let start = mods.start.unwrap_or_else(|| self.cur_start());
        let kind = if self.eat("class") {
            ClassKind::Class
        } else if self.eat("interface") {
            ClassKind::Interface
        } else if self.eat("enum") {
            ClassKind::Enum
        } else if self.at("@") && self.at_k(1, "interface") {
            self.advance();
            self.advance();
            ClassKind::Annotation
        } else {
            return self.err("expected type declaration");
        };
        let (name, _) = self.ident()?;
        if self.at("<") {
            self.skip_type_params()?;
        }
        let mut extends = Vec::new();
        let mut implements = Vec::new();
        let mut clause = None;
        let mut prefix = None;
        loop {
            if self.at("extends") {
                self.advance();
                extends = self.type_list()?;
            } else if self.at("implements") {
                prefix = Some(self.last_end);
                let kw = self.advance();
                implements = self.type_list()?;
                clause = Some(Span::new(kw.span.start, self.last_end));
            } else if self.at("permits") {
                self.advance();
                self.type_list()?;
            } else {
                break;
            }
        }
        let idx = self.view.classes.len();
        self.view.classes.push(ClassDecl {
            name,
            kind,
            extends,
            implements,
            implements_clause_span: clause,
            implements_clause_prefix: prefix,
            override_annotation_spans: Vec::new(),
            body_span: Span::empty(0),
            span: Span::empty(start),
            enclosing_class: self.cur_class(),
            enclosing_method: self.cur_method(),
        });
        let body = self.class_body(idx, kind == ClassKind::Enum)?;
        let c = &mut self.view.classes[idx];
        c.body_span = body;
        c.span.end = self.last_end;
        Ok(idx)
    }

    fn skip_type_params(&mut self) -> PResult<()> {
        self.expect("<")?;
        let mut depth = 1usize;
        while depth > 0 {
            if self.at_eof() {
                return self.err("unterminated type parameters");
            }
            if self.at("<") {
                depth += 1;
                self.advance();
            } else if matches!(self.cur(), b">" | b">>" | b">>>") {
                self.expect_gt()?;
                depth -= 1;
            } else {
                self.advance();
            }
        }
        Ok(())
    }

    fn type_list(&mut self) -> PResult<Vec<TypeRef>> {
        let mut out = Vec::new();
        loop {
            let t = self.parse_type()?;
            out.push(TypeRef { name: t.name, span: t.span });
            if !self.eat(",") {
                return Ok(out);
            }
        }
    }

    fn class_body(&mut self, class: usize, is_enum: bool) -> PResult<Span> {
        let open = self.expect("{")?;
        self.classes.push(class);
        self.methods.push(None);
        if is_enum {
            self.enum_constants()?;
        }
        while !self.at("}") {
            if self.at_eof() {
                return self.err("unterminated class body");
            }
            self.member(class)?;
        }
        self.advance();
        self.methods.pop();
        self.classes.pop();
        let overrides: Vec<Span> =
            self.view.methods.iter().filter(|m| m.enclosing_class == class).filter_map(|m| m.override_span).collect();
        self.view.classes[class].override_annotation_spans = overrides;
        Ok(Span::new(open.span.start, self.last_end))
    }

    fn enum_constants(&mut self) -> PResult<()> {
        loop {
            if self.eat(";") || self.at("}") {
                return Ok(());
            }
            self.modifiers()?;
            let (name, name_span) = self.ident()?;
            if self.at("(") {
                self.arguments()?;
            }
            if self.at("{") {
                self.anonymous_class(name, name_span)?;
            }
            if !self.eat(",") {
                self.eat(";");
                return Ok(());
            }
        }
    }

    fn member(&mut self, class: usize) -> PResult<()> {
        if self.eat(";") {
            return Ok(());
        }
        let member_start = self.cur_start();
        let mods = self.modifiers()?;
        let start = mods.start.unwrap_or(member_start);
        if self.at("{") {
            self.block()?;
            return Ok(());
        }
        if self.at_type_decl_start() {
            self.type_declaration(mods)?;
            return Ok(());
        }
        if self.at("<") {
            self.skip_type_params()?;
        }
        // constructor
        if self.at_ident() && self.at_k(1, "(") {
            let (name, _) = self.ident()?;
            return self.method_rest(class, start, name, None, mods);
        }
        let ret = if self.at("void") {
            self.advance();
            "void".to_string()
        } else {
            self.parse_type()?.name
        };
        let (name, name_span) = self.ident()?;
        if self.at("(") {
            return self.method_rest(class, start, name, Some(ret), mods);
        }
        self.declarators(ret, mods.is_final, VarScope::Field, start, name, name_span)?;
        self.expect(";")?;
        let end = self.last_end;
        for v in self.view.var_decls.iter_mut().rev() {
            if v.scope == VarScope::Field && v.statement_span.start == start && v.statement_span.end == start {
                v.statement_span.end = end;
            } else {
                break;
            }
        }
        Ok(())
    }

    fn method_rest(
        &mut self,
        class: usize,
        start: usize,
        name: String,
        return_type: Option<String>,
        mods: Modifiers,
    ) -> PResult<()> {
        let params = self.formal_params()?;
        while self.at("[") {
            self.advance();
            self.expect("]")?;
        }
        if self.eat("throws") {
            self.type_list()?;
        }
        let idx = self.view.methods.len();
        self.view.methods.push(MethodDecl {
            name,
            return_type,
            params,
            body_span: None,
            enclosing_class: class,
            is_override: mods.override_span.is_some(),
            override_span: mods.override_span,
            span: Span::empty(start),
        });
        if self.at("{") {
            self.methods.push(Some(idx));
            let body = self.block()?;
            self.methods.pop();
            self.view.methods[idx].body_span = Some(body);
        } else {
            if self.eat("default") {
                self.element_value()?;
            }
            self.expect(";")?;
        }
        self.view.methods[idx].span.end = self.last_end;
        Ok(())
    }

    fn element_value(&mut self) -> PResult<()> {
        if self.at("{") || self.at("@") {
            if self.eat("@") {
                self.qualified_name()?;
                if self.at("(") {
                    self.skip_balanced()?;
                }
            } else {
                self.skip_balanced()?;
            }
            Ok(())
        } else {
            self.expression().map(|_| ())
        }
    }

    fn formal_params(&mut self) -> PResult<Vec<Param>> {
        self.expect("(")?;
        let mut params = Vec::new();
        if self.eat(")") {
            return Ok(params);
        }
        loop {
            let start = self.cur_start();
            let mods = self.modifiers()?;
            let mut ty = self.parse_type()?;
            if self.eat("...") {
                ty.name.push_str("[]");
            }
            if self.at("this") {
                // receiver parameter
                self.advance();
            } else {
                let (name, _) = self.ident()?;
                while self.at("[") {
                    self.advance();
                    self.expect("]")?;
                    ty.name.push_str("[]");
                }
                params.push(Param {
                    type_name: ty.name,
                    name,
                    is_final: mods.is_final,
                    span: Span::new(mods.start.unwrap_or(start), self.last_end),
                });
            }
            if !self.eat(",") {
                break;
            }
        }
        self.expect(")")?;
        Ok(params)
    }

    /// Parses `name [= init] {, name [= init]}` after the type. The
    /// statement span is left open (`end == start`) for the caller to close.
    fn declarators(
        &mut self,
        type_name: String,
        is_final: bool,
        scope: VarScope,
        stmt_start: usize,
        first_name: String,
        first_span: Span,
    ) -> PResult<()> {
        let mut name = first_name;
        let mut name_span = first_span;
        loop {
            let mut ty = type_name.clone();
            while self.at("[") {
                self.advance();
                self.expect("]")?;
                ty.push_str("[]");
            }
            let (init_span, init_core) = if self.eat("=") {
                if self.at("{") {
                    let s = self.array_initializer()?;
                    (Some(s), Some(s))
                } else {
                    let e = self.expression()?;
                    (Some(e.span), Some(e.core))
                }
            } else {
                (None, None)
            };
            self.view.var_decls.push(VarDecl {
                name,
                declared_type_name: ty,
                is_final: is_final || scope == VarScope::Resource,
                scope,
                name_span,
                init_span,
                init_core,
                statement_span: Span::empty(stmt_start),
                statement: if scope == VarScope::Field { None } else { self.cur_stmt() },
                enclosing_method: self.cur_method(),
                enclosing_class: self.cur_class(),
            });
            if !self.eat(",") {
                return Ok(());
            }
            let (n, s) = self.ident()?;
            name = n;
            name_span = s;
        }
    }

    fn close_var_statement_spans(&mut self, from: usize, end: usize) {
        for v in &mut self.view.var_decls[from..] {
            if v.statement_span.is_empty() {
                v.statement_span.end = end;
            }
        }
    }

    fn array_initializer(&mut self) -> PResult<Span> {
        let open = self.expect("{")?;
        while !self.at("}") {
            if self.at("{") {
                self.array_initializer()?;
            } else {
                self.expression()?;
            }
            if !self.eat(",") {
                break;
            }
        }
        self.expect("}")?;
        Ok(Span::new(open.span.start, self.last_end))
    }

    // ---- types ------------------------------------------------------------

    fn parse_type(&mut self) -> PResult<TypeInfo> {
        while self.at("@") {
            self.advance();
            self.qualified_name()?;
            if self.at("(") {
                self.skip_balanced()?;
            }
        }
        let start = self.cur_start();
        let mut primitive = false;
        let mut name = if PRIMITIVES.iter().any(|p| self.at(p)) {
            primitive = true;
            let t = self.advance();
            String::from_utf8_lossy(self.bytes(t)).into_owned()
        } else if self.at("var") && self.gt_consumed == 0 {
            self.advance();
            "var".to_string()
        } else {
            let (mut name, _) = self.ident()?;
            if self.at("<") {
                self.type_arguments()?;
            }
            while self.at(".") && self.is_ident_tok(self.tok(1)) {
                self.advance();
                name.push('.');
                name.push_str(&self.ident()?.0);
                if self.at("<") {
                    self.type_arguments()?;
                }
            }
            name
        };
        while self.at("[") && self.at_k(1, "]") {
            self.advance();
            self.advance();
            name.push_str("[]");
        }
        Ok(TypeInfo { name, span: Span::new(start, self.last_end), primitive })
    }

    fn type_arguments(&mut self) -> PResult<()> {
        self.expect("<")?;
        if matches!(self.cur(), b">" | b">>" | b">>>") {
            return self.expect_gt();
        }
        loop {
            while self.at("@") {
                self.advance();
                self.qualified_name()?;
            }
            if self.eat("?") {
                if self.eat("extends") || self.eat("super") {
                    self.parse_type()?;
                }
            } else {
                self.parse_type()?;
            }
            if !self.eat(",") {
                break;
            }
        }
        self.expect_gt()
    }

    // ---- statements -------------------------------------------------------

    fn block(&mut self) -> PResult<Span> {
        let open = self.expect("{")?;
        while !self.at("}") {
            if self.at_eof() {
                return self.err("unterminated block");
            }
            self.block_statement(true)?;
        }
        self.advance();
        Ok(Span::new(open.span.start, self.last_end))
    }

    /// Tries `mods Type name` followed by a declarator continuation.
    fn looks_like_local_var(&mut self) -> bool {
        let save = self.save();
        let ok = (|| -> PResult<bool> {
            self.modifiers()?;
            let t = self.parse_type()?;
            if !self.at_ident() || t.name.is_empty() {
                return Ok(false);
            }
            self.advance();
            Ok(self.at("=") || self.at(";") || self.at(",") || self.at("[") || self.at(":"))
        })()
        .unwrap_or(false);
        self.restore(save);
        ok
    }

    fn block_statement(&mut self, in_block: bool) -> PResult<()> {
        // local type declarations
        {
            let save = self.save();
            let mods = self.modifiers()?;
            if self.at_type_decl_start() && !self.at("enum") || (self.at("enum") && self.is_ident_tok(self.tok(1))) {
                let idx = self.begin_stmt(in_block);
                self.type_declaration(mods)?;
                self.end_stmt(idx, StatementKind::Other);
                return Ok(());
            }
            self.restore(save);
        }
        if self.looks_like_local_var() {
            let idx = self.begin_stmt(in_block);
            let start = self.cur_start();
            let first_var = self.view.var_decls.len();
            let mods = self.modifiers()?;
            let ty = self.parse_type()?;
            let (name, span) = self.ident()?;
            self.declarators(ty.name, mods.is_final, VarScope::Local, start, name, span)?;
            self.expect(";")?;
            self.close_var_statement_spans(first_var, self.last_end);
            self.end_stmt(idx, StatementKind::LocalVar);
            return Ok(());
        }
        self.statement(in_block)
    }

    fn statement(&mut self, in_block: bool) -> PResult<()> {
        let idx = self.begin_stmt(in_block);
        let kind = self.statement_inner()?;
        self.end_stmt(idx, kind);
        Ok(())
    }

    fn paren_expression(&mut self) -> PResult<Expr> {
        self.expect("(")?;
        let e = self.expression()?;
        self.expect(")")?;
        Ok(e)
    }

    fn statement_inner(&mut self) -> PResult<StatementKind> {
        if self.at("{") {
            self.block()?;
            return Ok(StatementKind::Block);
        }
        if self.eat(";") {
            return Ok(StatementKind::Other);
        }
        if self.at_ident() && self.at_k(1, ":") {
            self.advance();
            self.advance();
            self.statement(false)?;
            return Ok(StatementKind::Control);
        }
        let word = if self.tok(0).map(|t| t.kind == TokenKind::Ident).unwrap_or(false) {
            String::from_utf8_lossy(self.cur()).into_owned()
        } else {
            String::new()
        };
        match word.as_str() {
            "if" => {
                self.advance();
                self.paren_expression()?;
                self.statement(false)?;
                if self.eat("else") {
                    self.statement(false)?;
                }
                Ok(StatementKind::Control)
            }
            "while" => {
                self.advance();
                self.paren_expression()?;
                self.statement(false)?;
                Ok(StatementKind::Control)
            }
            "do" => {
                self.advance();
                self.statement(false)?;
                self.expect("while")?;
                self.paren_expression()?;
                self.expect(";")?;
                Ok(StatementKind::Control)
            }
            "for" => {
                self.advance();
                self.for_header()?;
                self.statement(false)?;
                Ok(StatementKind::Control)
            }
            "try" => {
                self.advance();
                self.try_rest()?;
                Ok(StatementKind::Control)
            }
            "switch" => {
                self.advance();
                self.switch_rest()?;
                Ok(StatementKind::Control)
            }
            "synchronized" => {
                self.advance();
                self.paren_expression()?;
                self.block()?;
                Ok(StatementKind::Control)
            }
            "return" => {
                self.advance();
                if !self.at(";") {
                    self.expression()?;
                }
                self.expect(";")?;
                Ok(StatementKind::Return)
            }
            "throw" => {
                self.advance();
                self.expression()?;
                self.expect(";")?;
                Ok(StatementKind::Throw)
            }
            "break" | "continue" => {
                self.advance();
                if self.at_ident() {
                    self.advance();
                }
                self.expect(";")?;
                Ok(StatementKind::Other)
            }
            "assert" => {
                self.advance();
                self.expression()?;
                if self.eat(":") {
                    self.expression()?;
                }
                self.expect(";")?;
                Ok(StatementKind::Other)
            }
            "yield" if !(self.at_k(1, "=") || self.at_k(1, "(") || self.at_k(1, ".") || self.at_k(1, "[")) => {
                self.advance();
                self.expression()?;
                self.expect(";")?;
                Ok(StatementKind::Return)
            }
            _ => {
                let e = self.expression()?;
                self.expect(";")?;
                match e.kind {
                    ExprKind::Call(i) => self.view.invocations[i].is_statement_expression = true,
                    ExprKind::Assign(i) => self.view.assignments[i].is_statement_expression = true,
                    _ => {}
                }
                Ok(StatementKind::Expression)
            }
        }
    }

    fn for_header(&mut self) -> PResult<()> {
        self.expect("(")?;
        if self.looks_like_local_var() {
            let start = self.cur_start();
            let first_var = self.view.var_decls.len();
            let mods = self.modifiers()?;
            let ty = self.parse_type()?;
            let (name, span) = self.ident()?;
            if self.eat(":") {
                self.view.var_decls.push(VarDecl {
                    name,
                    declared_type_name: ty.name,
                    is_final: mods.is_final,
                    scope: VarScope::ForInit,
                    name_span: span,
                    init_span: None,
                    init_core: None,
                    statement_span: Span::empty(start),
                    statement: self.cur_stmt(),
                    enclosing_method: self.cur_method(),
                    enclosing_class: self.cur_class(),
                });
                self.expression()?;
                self.close_var_statement_spans(first_var, self.last_end);
                self.expect(")")?;
                return Ok(());
            }
            self.declarators(ty.name, mods.is_final, VarScope::ForInit, start, name, span)?;
            self.close_var_statement_spans(first_var, self.last_end);
        } else {
            while !self.at(";") {
                self.expression()?;
                if !self.eat(",") {
                    break;
                }
            }
        }
        self.expect(";")?;
        if !self.at(";") {
            self.expression()?;
        }
        self.expect(";")?;
        while !self.at(")") {
            self.expression()?;
            if !self.eat(",") {
                break;
            }
        }
        self.expect(")")?;
        Ok(())
    }

    fn try_rest(&mut self) -> PResult<()> {
        if self.eat("(") {
            while !self.at(")") {
                if self.looks_like_local_var() {
                    let start = self.cur_start();
                    let first_var = self.view.var_decls.len();
                    let mods = self.modifiers()?;
                    let ty = self.parse_type()?;
                    let (name, span) = self.ident()?;
                    self.declarators(ty.name, mods.is_final, VarScope::Resource, start, name, span)?;
                    self.close_var_statement_spans(first_var, self.last_end);
                } else {
                    self.expression()?;
                }
                if !self.eat(";") {
                    break;
                }
            }
            self.expect(")")?;
        }
        self.block()?;
        while self.at("catch") {
            self.advance();
            self.expect("(")?;
            let start = self.cur_start();
            let mods = self.modifiers()?;
            let mut ty = self.parse_type()?;
            while self.eat("|") {
                let alt = self.parse_type()?;
                ty.name.push('|');
                ty.name.push_str(&alt.name);
            }
            let (name, span) = self.ident()?;
            self.view.var_decls.push(VarDecl {
                name,
                declared_type_name: ty.name,
                is_final: mods.is_final,
                scope: VarScope::Catch,
                name_span: span,
                init_span: None,
                init_core: None,
                statement_span: Span::new(start, self.last_end),
                statement: self.cur_stmt(),
                enclosing_method: self.cur_method(),
                enclosing_class: self.cur_class(),
            });
            self.expect(")")?;
            self.block()?;
        }
        if self.eat("finally") {
            self.block()?;
        }
        Ok(())
    }

    fn switch_rest(&mut self) -> PResult<()> {
        self.paren_expression()?;
        self.expect("{")?;
        while !self.at("}") {
            if self.at_eof() {
                return self.err("unterminated switch");
            }
            if self.eat("default") {
            } else {
                self.expect("case")?;
                loop {
                    self.ternary()?;
                    if !self.eat(",") {
                        break;
                    }
                }
            }
            if self.eat("->") {
                if self.at("{") || self.at("throw") {
                    self.statement(false)?;
                } else {
                    let idx = self.begin_stmt(false);
                    let e = self.expression()?;
                    self.expect(";")?;
                    if let ExprKind::Call(i) = e.kind {
                        self.view.invocations[i].is_statement_expression = true;
                    }
                    self.end_stmt(idx, StatementKind::Expression);
                }
            } else {
                self.expect(":")?;
                while !(self.at("case")
                    || self.at("default") && (self.at_k(1, ":") || self.at_k(1, "->"))
                    || self.at("}"))
                {
                    if self.at_eof() {
                        return self.err("unterminated switch");
                    }
                    self.block_statement(true)?;
                }
            }
        }
        self.advance();
        Ok(())
    }

    // ---- expressions ------------------------------------------------------

    fn expression(&mut self) -> PResult<Expr> {
        if self.lambda_ahead() {
            return self.lambda();
        }
        let lhs = self.ternary()?;
        let op = ASSIGN_OPS.iter().find(|op| self.at(op) && self.gt_consumed == 0).copied();
        let Some(op) = op else { return Ok(lhs) };
        self.advance();
        let rhs = self.expression()?;
        let span = Span::new(lhs.span.start, rhs.span.end);
        if op == "=" && matches!(lhs.kind, ExprKind::Name | ExprKind::FieldAccess) {
            let lhs_text = self.text_of(lhs.span);
            let lhs_name = lhs_text.rsplit('.').next().unwrap_or(&lhs_text).trim().to_string();
            let stmt = self.cur_stmt();
            let statement_span = stmt.map(|s| self.view.statements[s].span).unwrap_or(span);
            let idx = self.view.assignments.len();
            self.view.assignments.push(Assignment {
                lhs_text,
                lhs_name,
                lhs_span: lhs.span,
                rhs_span: rhs.span,
                rhs_core: rhs.core,
                statement_span,
                statement: stmt,
                is_statement_expression: false,
                enclosing_method: self.cur_method(),
                enclosing_class: self.cur_class(),
            });
            return Ok(Expr { span, core: span, kind: ExprKind::Assign(idx) });
        }
        Ok(Expr { span, core: span, kind: ExprKind::Other })
    }

    fn lambda_ahead(&self) -> bool {
        if self.gt_consumed != 0 {
            return false;
        }
        if self.at_ident() && self.at_k(1, "->") {
            return true;
        }
        if !self.at("(") {
            return false;
        }
        let mut depth = 0usize;
        let mut k = 0;
        while let Some(t) = self.tok(k) {
            match self.bytes(t) {
                b"(" => depth += 1,
                b")" => {
                    depth -= 1;
                    if depth == 0 {
                        return self.at_k(k + 1, "->");
                    }
                }
                b";" | b"{" | b"}" => return false,
                _ => {}
            }
            k += 1;
        }
        false
    }

    fn lambda(&mut self) -> PResult<Expr> {
        let start = self.cur_start();
        let stmt_start = start;
        let mut params: Vec<(String, String, Span)> = Vec::new();
        if self.at_ident() {
            let (name, span) = self.ident()?;
            params.push((name, "var".into(), span));
        } else {
            self.expect("(")?;
            while !self.at(")") {
                let save = self.save();
                let typed = (|| -> PResult<bool> {
                    self.modifiers()?;
                    self.parse_type()?;
                    self.eat("...");
                    Ok(self.at_ident())
                })()
                .unwrap_or(false);
                self.restore(save);
                if typed {
                    self.modifiers()?;
                    let ty = self.parse_type()?;
                    self.eat("...");
                    let (name, span) = self.ident()?;
                    params.push((name, ty.name, span));
                } else {
                    let (name, span) = self.ident()?;
                    params.push((name, "var".into(), span));
                }
                if !self.eat(",") {
                    break;
                }
            }
            self.expect(")")?;
        }
        self.expect("->")?;
        for (name, ty, span) in params {
            self.view.var_decls.push(VarDecl {
                name,
                declared_type_name: ty,
                is_final: false,
                scope: VarScope::LambdaParam,
                name_span: span,
                init_span: None,
                init_core: None,
                statement_span: Span::new(stmt_start, span.end),
                statement: self.cur_stmt(),
                enclosing_method: self.cur_method(),
                enclosing_class: self.cur_class(),
            });
        }
        if self.at("{") {
            self.block()?;
        } else {
            self.expression()?;
        }
        let span = Span::new(start, self.last_end);
        self.view.lambdas.push(span);
        Ok(Expr { span, core: span, kind: ExprKind::Other })
    }

    fn ternary(&mut self) -> PResult<Expr> {
        let cond = self.binary(0)?;
        if !self.eat("?") {
            return Ok(cond);
        }
        self.expression()?;
        self.expect(":")?;
        let rhs = if self.lambda_ahead() { self.lambda()? } else { self.ternary()? };
        let span = Span::new(cond.span.start, rhs.span.end);
        Ok(Expr { span, core: span, kind: ExprKind::Other })
    }

    fn binop_prec(&self) -> Option<u8> {
        if self.gt_consumed != 0 {
            return None;
        }
        let p = match self.cur() {
            b"||" => 1,
            b"&&" => 2,
            b"|" => 3,
            b"^" => 4,
            b"&" => 5,
            b"==" | b"!=" => 6,
            b"<" | b">" | b"<=" | b">=" | b"instanceof" => 7,
            b"<<" | b">>" | b">>>" => 8,
            b"+" | b"-" => 9,
            b"*" | b"/" | b"%" => 10,
            _ => return None,
        };
        Some(p)
    }

    fn binary(&mut self, min_prec: u8) -> PResult<Expr> {
        let mut lhs = self.unary()?;
        while let Some(prec) = self.binop_prec() {
            if prec < min_prec {
                break;
            }
            if self.eat("instanceof") {
                self.eat("final");
                self.parse_type()?;
                if self.at_ident() {
                    self.advance();
                }
            } else {
                self.advance();
                self.binary(prec + 1)?;
            }
            let span = Span::new(lhs.span.start, self.last_end);
            lhs = Expr { span, core: span, kind: ExprKind::Other };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> PResult<Expr> {
        let start = self.cur_start();
        if ["+", "-", "++", "--", "!", "~"].iter().any(|op| self.at(op)) && self.gt_consumed == 0 {
            self.advance();
            self.unary()?;
            let span = Span::new(start, self.last_end);
            return Ok(Expr { span, core: span, kind: ExprKind::Other });
        }
        if self.at("(") && !self.lambda_ahead() {
            if let Some(e) = self.try_cast()? {
                return Ok(e);
            }
        }
        self.postfix()
    }

    fn try_cast(&mut self) -> PResult<Option<Expr>> {
        let save = self.save();
        let start = self.cur_start();
        self.advance();
        let ty = match self.parse_type() {
            Ok(t) => t,
            Err(_) => {
                self.restore(save);
                return Ok(None);
            }
        };
        while self.at("&") {
            self.advance();
            if self.parse_type().is_err() {
                self.restore(save);
                return Ok(None);
            }
        }
        if !self.at(")") {
            self.restore(save);
            return Ok(None);
        }
        self.advance();
        let is_cast = if ty.primitive {
            true
        } else {
            match self.tok(0) {
                Some(t) => match t.kind {
                    TokenKind::Int | TokenKind::Float | TokenKind::Str | TokenKind::Char | TokenKind::TextBlock => true,
                    TokenKind::Ident => {
                        let b = self.bytes(t);
                        !KEYWORDS.iter().any(|k| k.as_bytes() == b)
                            || matches!(b, b"this" | b"super" | b"new" | b"true" | b"false" | b"null")
                            || PRIMITIVES.iter().any(|p| p.as_bytes() == b)
                    }
                    TokenKind::Punct => matches!(self.bytes(t), b"(" | b"!" | b"~"),
                },
                None => false,
            }
        };
        if !is_cast {
            self.restore(save);
            return Ok(None);
        }
        let operand = if self.lambda_ahead() { self.lambda()? } else { self.unary()? };
        let span = Span::new(start, operand.span.end);
        Ok(Some(Expr { span, core: operand.core, kind: operand.kind }))
    }

    fn arguments(&mut self) -> PResult<Vec<Span>> {
        self.expect("(")?;
        let mut args = Vec::new();
        if self.eat(")") {
            return Ok(args);
        }
        loop {
            args.push(self.expression()?.span);
            if !self.eat(",") {
                break;
            }
        }
        self.expect(")")?;
        Ok(args)
    }

    fn record_call(&mut self, receiver: Option<Span>, start: usize, name: String, name_span: Span) -> PResult<Expr> {
        let idx = self.view.invocations.len();
        self.view.invocations.push(Invocation {
            receiver_text: receiver.map(|r| self.text_of(r)).unwrap_or_default(),
            receiver_span: receiver,
            method_name: name,
            name_span,
            argument_spans: Vec::new(),
            call_span: Span::empty(start),
            is_statement_expression: false,
            is_dereferenced: false,
            statement: self.cur_stmt(),
            enclosing_method: self.cur_method(),
            enclosing_class: self.cur_class(),
        });
        let args = self.arguments()?;
        let inv = &mut self.view.invocations[idx];
        inv.argument_spans = args;
        inv.call_span.end = self.last_end;
        let span = inv.call_span;
        Ok(Expr { span, core: span, kind: ExprKind::Call(idx) })
    }

    fn mark_dereferenced(&mut self, e: &Expr) {
        match e.kind {
            ExprKind::Call(i) => self.view.invocations[i].is_dereferenced = true,
            ExprKind::New(i) => self.view.instantiations[i].is_dereferenced = true,
            _ => {}
        }
    }

    fn postfix(&mut self) -> PResult<Expr> {
        let mut e = self.primary()?;
        let start = e.span.start;
        loop {
            if self.at(".") && self.gt_consumed == 0 {
                self.mark_dereferenced(&e);
                self.advance();
                if self.at("<") {
                    self.type_arguments()?;
                }
                if self.at("new") {
                    let inner = self.creator(start)?;
                    e = inner;
                    continue;
                }
                if self.at("class") || self.at("this") || self.at("super") {
                    let t = self.advance();
                    let span = Span::new(start, t.span.end);
                    let kind = if self.bytes(t) == b"class" { ExprKind::Literal } else { ExprKind::FieldAccess };
                    e = Expr { span, core: span, kind };
                    continue;
                }
                let (name, name_span) = self.ident()?;
                if self.at("(") {
                    e = self.record_call(Some(e.span), start, name, name_span)?;
                } else {
                    let span = Span::new(start, name_span.end);
                    let kind = if e.kind == ExprKind::Name { ExprKind::Name } else { ExprKind::FieldAccess };
                    e = Expr { span, core: span, kind };
                }
            } else if self.at("[") {
                self.mark_dereferenced(&e);
                self.advance();
                self.expression()?;
                self.expect("]")?;
                let span = Span::new(start, self.last_end);
                e = Expr { span, core: span, kind: ExprKind::FieldAccess };
            } else if (self.at("++") || self.at("--")) && self.gt_consumed == 0 {
                self.advance();
                let span = Span::new(start, self.last_end);
                e = Expr { span, core: span, kind: ExprKind::Other };
            } else if self.at("::") {
                self.mark_dereferenced(&e);
                self.advance();
                if !self.eat("new") {
                    self.ident()?;
                }
                let span = Span::new(start, self.last_end);
                e = Expr { span, core: span, kind: ExprKind::Other };
            } else {
                return Ok(e);
            }
        }
    }

    fn primary(&mut self) -> PResult<Expr> {
        let Some(t) = self.tok(0) else { return self.err("unexpected end of file in expression") };
        if self.gt_consumed != 0 {
            return self.err("unexpected `>`");
        }
        let start = t.span.start;
        match t.kind {
            TokenKind::Int | TokenKind::Float | TokenKind::Char => {
                self.advance();
                return Ok(Expr { span: t.span, core: t.span, kind: ExprKind::Literal });
            }
            TokenKind::Str | TokenKind::TextBlock => {
                self.advance();
                let value = if t.kind == TokenKind::Str {
                    lexer::decode_string(self.bytes(t))
                } else {
                    let raw = self.bytes(t);
                    String::from_utf8_lossy(&raw[3..raw.len() - 3]).into_owned()
                };
                self.view.string_literals.push(StringLiteral {
                    value,
                    span: t.span,
                    enclosing_method: self.cur_method(),
                    enclosing_class: self.cur_class(),
                });
                return Ok(Expr { span: t.span, core: t.span, kind: ExprKind::Literal });
            }
            TokenKind::Punct => {
                if self.at("(") {
                    if self.lambda_ahead() {
                        return self.lambda();
                    }
                    self.advance();
                    let inner = self.expression()?;
                    self.expect(")")?;
                    let span = Span::new(start, self.last_end);
                    return Ok(Expr { span, core: inner.core, kind: inner.kind });
                }
                if self.at("@") {
                    return self.err("unexpected annotation in expression");
                }
                return self.err(format!("unexpected `{}`", String::from_utf8_lossy(self.bytes(t))));
            }
            TokenKind::Ident => {}
        }
        let word = self.bytes(t);
        match word {
            b"true" | b"false" | b"null" => {
                self.advance();
                Ok(Expr { span: t.span, core: t.span, kind: ExprKind::Literal })
            }
            b"this" | b"super" => {
                self.advance();
                if self.at("(") {
                    let name = String::from_utf8_lossy(word).into_owned();
                    return self.record_call(None, start, name, t.span);
                }
                Ok(Expr { span: t.span, core: t.span, kind: ExprKind::Name })
            }
            b"new" => self.creator(start),
            b"switch" => {
                self.advance();
                self.switch_rest()?;
                let span = Span::new(start, self.last_end);
                Ok(Expr { span, core: span, kind: ExprKind::Other })
            }
            _ if word == b"void" || PRIMITIVES.iter().any(|p| p.as_bytes() == word) => {
                self.advance();
                while self.at("[") {
                    self.advance();
                    self.expect("]")?;
                }
                if self.at("::") {
                    let span = Span::new(start, self.last_end);
                    return Ok(Expr { span, core: span, kind: ExprKind::Other });
                }
                self.expect(".")?;
                self.expect("class")?;
                let span = Span::new(start, self.last_end);
                Ok(Expr { span, core: span, kind: ExprKind::Literal })
            }
            _ => {
                if !self.at_ident() {
                    return self.err(format!("unexpected keyword `{}`", String::from_utf8_lossy(word)));
                }
                let (name, span) = self.ident()?;
                if self.at("(") {
                    return self.record_call(None, start, name, span);
                }
                // array type method refs and class literals: `String[]::new`, `int[].class`
                if self.at("[") && self.at_k(1, "]") {
                    while self.at("[") && self.at_k(1, "]") {
                        self.advance();
                        self.advance();
                    }
                    let span = Span::new(start, self.last_end);
                    return Ok(Expr { span, core: span, kind: ExprKind::Name });
                }
                Ok(Expr { span, core: span, kind: ExprKind::Name })
            }
        }
    }

    fn creator(&mut self, start: usize) -> PResult<Expr> {
        self.expect("new")?;
        if self.at("<") {
            self.type_arguments()?;
        }
        while self.at("@") {
            self.advance();
            self.qualified_name()?;
            if self.at("(") {
                self.skip_balanced()?;
            }
        }
        let type_start = self.cur_start();
        let (class_name, primitive) = if PRIMITIVES.iter().any(|p| self.at(p)) {
            let t = self.advance();
            (String::from_utf8_lossy(self.bytes(t)).into_owned(), true)
        } else {
            let (mut name, _) = self.ident()?;
            if self.at("<") {
                self.type_arguments()?;
            }
            while self.at(".") {
                self.advance();
                while self.at("@") {
                    self.advance();
                    self.qualified_name()?;
                }
                name.push('.');
                name.push_str(&self.ident()?.0);
                if self.at("<") {
                    self.type_arguments()?;
                }
            }
            (name, false)
        };
        let type_span = Span::new(type_start, self.last_end);
        if self.at("[") {
            while self.at("[") {
                self.advance();
                if !self.at("]") {
                    self.expression()?;
                }
                self.expect("]")?;
            }
            if self.at("{") {
                self.array_initializer()?;
            }
            let span = Span::new(start, self.last_end);
            return Ok(Expr { span, core: span, kind: ExprKind::Other });
        }
        if primitive {
            return self.err("expected array dimensions");
        }
        let idx = self.view.instantiations.len();
        self.view.instantiations.push(Instantiation {
            class_name: class_name.clone(),
            argument_spans: Vec::new(),
            span: Span::empty(start),
            anonymous_body: None,
            is_dereferenced: false,
            statement: self.cur_stmt(),
            enclosing_method: self.cur_method(),
            enclosing_class: self.cur_class(),
        });
        let args = self.arguments()?;
        let end = self.last_end;
        {
            let inst = &mut self.view.instantiations[idx];
            inst.argument_spans = args;
            inst.span.end = end;
        }
        if self.at("{") {
            let body = self.anonymous_class(class_name, type_span)?;
            self.view.instantiations[idx].anonymous_body = Some(body);
        }
        let span = Span::new(start, self.last_end);
        Ok(Expr { span, core: span, kind: ExprKind::New(idx) })
    }

    fn anonymous_class(&mut self, name: String, type_span: Span) -> PResult<Span> {
        let idx = self.view.classes.len();
        self.view.classes.push(ClassDecl {
            name: name.clone(),
            kind: ClassKind::Anonymous,
            extends: vec![TypeRef { name, span: type_span }],
            implements: Vec::new(),
            implements_clause_span: None,
            implements_clause_prefix: None,
            override_annotation_spans: Vec::new(),
            body_span: Span::empty(0),
            span: Span::empty(self.cur_start()),
            enclosing_class: self.cur_class(),
            enclosing_method: self.cur_method(),
        });
        // statements inside the body belong to the body, not the outer statement
        let saved_stmts = std::mem::take(&mut self.stmts);
        let body = self.class_body(idx, false)?;
        self.stmts = saved_stmts;
        let c = &mut self.view.classes[idx];
        c.body_span = body;
        c.span = body;
        Ok(body)
    }

    fn collect_resource_refs(&mut self) {
        let toks = &self.toks;
        let src = self.src;
        let b = |i: usize| &src[toks[i].span.start..toks[i].span.end];
        for i in 0..toks.len().saturating_sub(4) {
            if b(i) == b"R"
                && b(i + 1) == b"."
                && toks[i + 2].kind == TokenKind::Ident
                && b(i + 3) == b"."
                && toks[i + 4].kind == TokenKind::Ident
                && !(i > 0 && b(i - 1) == b".")
            {
                self.view.resource_refs.push(ResourceRef {
                    kind: String::from_utf8_lossy(b(i + 2)).into_owned(),
                    name: String::from_utf8_lossy(b(i + 4)).into_owned(),
                    span: Span::new(toks[i].span.start, toks[i + 4].span.end),
                    name_span: toks[i + 4].span,
                });
            }
        }
    }
}
