//! Detectors for operators that act on Java sources.

use super::{keys, Aux, Candidate, DetectOptions};
use crate::catalog::{self, Category, OperatorId};
use crate::project::{SourceFile, SourceModel};
use crate::span::Span;
use crate::syntax::java::{simple_name, ClassKind, Invocation, StatementKind, SyntaxView, VarScope};

const PRIMITIVES: &[&str] = &["boolean", "byte", "char", "short", "int", "long", "float", "double"];

struct Ctx<'a> {
    model: &'a SourceModel,
    view: &'a SyntaxView,
    src: &'a [u8],
    main_activity: Option<&'a str>,
    out: &'a mut Vec<Candidate>,
}

/// What a name resolves to at a point in the source.
#[derive(Debug, Clone)]
struct VarInfo {
    type_name: String,
    is_final: bool,
    is_field: bool,
    /// Declaration offset, for locals and parameters.
    decl_at: Option<usize>,
}

pub(super) fn detect(
    model: &SourceModel,
    file: &SourceFile,
    view: &SyntaxView,
    ops: &[OperatorId],
    options: DetectOptions,
    out: &mut Vec<Candidate>,
) {
    let main_activity =
        if options.exclude_main_activity { model.launcher_activity().map(|a| a.simple_name()) } else { None };
    let mut ctx = Ctx { model, view, src: &file.content, main_activity, out };
    for &op in ops {
        use OperatorId::*;
        match op {
            DifferentActivityIntentDefinition => ctx.different_activity(),
            InvalidKeyIntentPutExtra => ctx.put_extra_key(),
            NullIntent => ctx.null_intent(),
            NullValueIntentPutExtra => ctx.put_extra_value(),
            NotParcelable => ctx.drop_interface(op, "Parcelable"),
            NotSerializable => ctx.drop_interface(op, "Serializable"),
            NullGPSLocation => ctx.null_gps(),
            NullBackEndServiceReturn => ctx.null_backend_return(),
            LengthyBackEndService => ctx.lengthy_backend(),
            BluetoothAdapterAlwaysEnabled => ctx.bluetooth_enabled(),
            NullBluetoothAdapter => ctx.null_bluetooth(),
            InvalidURI => ctx.invalid_uri(),
            ClosingNullCursor | NullInputStream | NullOutputStream => ctx.null_before_close(op),
            InvalidIndexQueryParameter => ctx.query_swap(),
            InvalidSQLQuery => ctx.invalid_sql(),
            InvalidDate => ctx.invalid_date(),
            BuggyGUIListener => ctx.buggy_listener(),
            LengthyGUIListener => ctx.lengthy_methods(op, catalog::GUI_LISTENER_METHODS),
            LengthyGUICreation => ctx.lengthy_methods(op, &["onCreate"]),
            FindViewByIdReturnsNull | ViewComponentNotVisible => ctx.find_view_assignments(op),
            InvalidIDFindView => ctx.invalid_id(),
            InvalidFilePath => ctx.invalid_file_path(),
            LongConnectionTimeOut => ctx.connect_timeout(),
            OOMLargeImage => ctx.large_image(),
            _ => {}
        }
    }
}

fn is_identifier(text: &str) -> bool {
    let mut chars = text.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_' || c == '$')
        && chars.all(|c| c.is_alphanumeric() || c == '_' || c == '$')
}

fn is_word_byte(b: u8) -> bool {
    b.is_ascii_alphanumeric() || b == b'_' || b == b'$' || b >= 0x80
}

/// Whether `hay` uses `name` as a simple name: not a member (`x.name`)
/// and not a method call (`name(..)`).
fn mentions_simple_name(hay: &[u8], name: &str) -> bool {
    let w = name.as_bytes();
    if w.is_empty() || hay.len() < w.len() {
        return false;
    }
    (0..=hay.len() - w.len()).any(|i| {
        let before = hay[..i].iter().rev().find(|b| !b.is_ascii_whitespace());
        &hay[i..i + w.len()] == w
            && (i == 0 || !is_word_byte(hay[i - 1]))
            && (i + w.len() == hay.len() || !is_word_byte(hay[i + w.len()]))
            && before != Some(&b'.')
            && hay[i + w.len()..].iter().find(|b| !b.is_ascii_whitespace()) != Some(&b'(')
    })
}

fn default_return(return_type: Option<&str>) -> &'static str {
    match return_type {
        None | Some("void") => "{ }",
        Some("boolean") => "{ return false; }",
        Some(t) if PRIMITIVES.contains(&t) => "{ return 0; }",
        Some(_) => "{ return null; }",
    }
}

/// Catch block inserted by the Lengthy* operators.
fn sleep_block(catch_var: &str) -> String {
    format!("try {{ Thread.sleep({}); }} catch (InterruptedException {catch_var}) {{ }}", catalog::LONG_DELAY_MS)
}

impl<'a> Ctx<'a> {
    fn text(&self, span: Span) -> String {
        String::from_utf8_lossy(span.slice(self.src)).into_owned()
    }

    fn push(&mut self, op: OperatorId, target: Span, class: Option<usize>, method: Option<usize>, mut aux: Aux) {
        if let (Some(main), Some(class)) = (self.main_activity, class) {
            let cat = op.category();
            if matches!(cat, Category::ActivityIntent | Category::Gui)
                && self.view.class_chain(class).any(|c| c.name == main)
            {
                return;
            }
        }
        let enclosing = match (method, class) {
            (Some(m), _) => Some(self.view.method_descriptor(m)),
            (None, Some(c)) => Some(self.view.classes[c].name.clone()),
            _ => None,
        };
        if let Some(e) = enclosing {
            aux.insert(keys::ENCLOSING.into(), e);
        }
        self.out.push(Candidate { op, target, aux });
    }

    /// String literal (not a text block) occupying exactly `span`.
    fn plain_literal(&self, span: Span) -> bool {
        let raw = span.slice(self.src);
        raw.len() >= 2
            && raw[0] == b'"'
            && !raw.starts_with(b"\"\"\"")
            && self.view.string_literals.iter().any(|l| l.span == span)
    }

    fn is_int_literal(&self, span: Span) -> bool {
        let t = self.text(span);
        !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit() || b == b'_')
    }

    /// Resolves `name` as seen from `offset` inside `method`/`class`.
    fn resolve(&self, name: &str, method: Option<usize>, class: Option<usize>, offset: usize) -> Option<VarInfo> {
        let v = self.view;
        let (name, fields_only) = match name.strip_prefix("this.") {
            Some(n) => (n, true),
            None => (name, false),
        };
        if !is_identifier(name) {
            return None;
        }
        if !fields_only {
            let mut method = method;
            let mut offset = offset;
            while let Some(m) = method {
                let local = v
                    .var_decls
                    .iter()
                    .filter(|d| d.enclosing_method == Some(m) && d.scope != VarScope::Field && d.name == name)
                    .filter(|d| d.name_span.start < offset)
                    .max_by_key(|d| d.name_span.start);
                if let Some(d) = local {
                    return Some(VarInfo {
                        type_name: d.declared_type_name.clone(),
                        is_final: d.is_final || d.scope == VarScope::Resource,
                        is_field: false,
                        decl_at: Some(d.name_span.start),
                    });
                }
                if let Some(p) = v.methods[m].params.iter().find(|p| p.name == name) {
                    return Some(VarInfo {
                        type_name: p.type_name.clone(),
                        is_final: p.is_final,
                        is_field: false,
                        decl_at: Some(p.span.start),
                    });
                }
                // Fields of the local or anonymous class come before the outer method's locals.
                let c = v.methods[m].enclosing_class;
                if let Some(f) = self.field_in(c, name) {
                    return Some(f);
                }
                method = v.classes[c].enclosing_method;
                offset = v.classes[c].span.start;
            }
        }
        let mut c = class;
        while let Some(ci) = c {
            if let Some(f) = self.field_in(ci, name) {
                return Some(f);
            }
            c = v.classes[ci].enclosing_class;
        }
        v.var_decls.iter().find(|d| d.scope == VarScope::Field && d.name == name).map(|d| VarInfo {
            type_name: d.declared_type_name.clone(),
            is_final: d.is_final,
            is_field: true,
            decl_at: None,
        })
    }

    fn field_in(&self, class: usize, name: &str) -> Option<VarInfo> {
        self.view
            .var_decls
            .iter()
            .find(|d| d.scope == VarScope::Field && d.enclosing_class == Some(class) && d.name == name)
            .map(|d| VarInfo {
                type_name: d.declared_type_name.clone(),
                is_final: d.is_final,
                is_field: true,
                decl_at: None,
            })
    }

    /// Best-effort static type of an expression, from its text alone.
    fn expr_type(&self, span: Span, method: Option<usize>, class: Option<usize>) -> Option<String> {
        let text = self.text(span);
        let mut t = text.trim();
        while t.starts_with('(') && t.ends_with(')') && balanced(&t[1..t.len() - 1]) {
            t = t[1..t.len() - 1].trim();
        }
        if let Some(rest) = t.strip_prefix('(') {
            // cast: `(Type) expr`
            let close = rest.find(')')?;
            let ty = rest[..close].trim();
            if ty.split('.').all(is_identifier) {
                return Some(ty.to_string());
            }
            return None;
        }
        if let Some(rest) = t.strip_prefix("new ") {
            let end = rest.find(['(', '[', '<']).unwrap_or(rest.len());
            let ty = rest[..end].trim();
            let array = rest[end..].starts_with('[');
            return Some(if array { format!("{ty}[]") } else { ty.to_string() });
        }
        if t.starts_with('"') {
            return Some("String".into());
        }
        if !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit()) {
            return Some("int".into());
        }
        if is_identifier(t) || t.strip_prefix("this.").is_some_and(is_identifier) {
            if let Some(var) = self.resolve(t, method, class, span.start) {
                return Some(var.type_name);
            }
            if t.starts_with(|c: char| c.is_ascii_uppercase()) {
                return Some(t.to_string());
            }
        }
        None
    }

    fn receiver_type(&self, inv: &Invocation) -> Option<String> {
        let span = inv.receiver_span?;
        self.expr_type(span, inv.enclosing_method, inv.enclosing_class)
    }

    /// True when `name` can be reassigned at `at` without breaking compilation:
    /// not final, and not a local captured by a lambda or inner class.
    fn reassignable(&self, var: &VarInfo, name: &str, method: Option<usize>, at: usize) -> bool {
        if var.is_final {
            return false;
        }
        if var.is_field {
            return true;
        }
        let Some(decl_at) = var.decl_at else { return true };
        let Some(body) = self.outermost_body(method) else { return true };
        let bare = name.strip_prefix("this.").unwrap_or(name);
        let closures = self
            .view
            .lambdas
            .iter()
            .copied()
            .chain(self.view.classes.iter().filter(|c| c.enclosing_method.is_some()).map(|c| c.body_span))
            .filter(|s| body.contains(*s));
        for s in closures {
            let holds_decl = s.start <= decl_at && decl_at < s.end;
            if holds_decl {
                continue;
            }
            // assignment from inside a closure, or use of the local inside one
            if (s.start <= at && at < s.end) || mentions_simple_name(s.slice(self.src), bare) {
                return false;
            }
        }
        true
    }

    /// Body of the top-level method that (transitively) contains `method`.
    fn outermost_body(&self, method: Option<usize>) -> Option<Span> {
        let mut m = method?;
        loop {
            let c = self.view.methods[m].enclosing_class;
            match self.view.classes[c].enclosing_method {
                Some(outer) => m = outer,
                None => return self.view.methods[m].body_span,
            }
        }
    }

    fn catch_var(&self, method: usize) -> String {
        let mut names = self.view.names_in_method(method);
        let mut m = method;
        while let Some(outer) = self.view.classes[self.view.methods[m].enclosing_class].enclosing_method {
            names.extend(self.view.names_in_method(outer));
            m = outer;
        }
        ["e", "ie"]
            .iter()
            .map(|s| s.to_string())
            .chain((2..).map(|i| format!("ie{i}")))
            .find(|c| !names.contains(&c.as_str()))
            .expect("unbounded candidates")
    }

    /// The statement holding `stmt`, if new statements may be placed around it.
    fn block_statement(&self, stmt: Option<usize>, kinds: &[StatementKind]) -> Option<Span> {
        let s = self.view.statement(stmt)?;
        (s.in_block && kinds.contains(&s.kind)).then_some(s.span)
    }

    fn whole_expression_statement(&self, stmt: Option<usize>, span: Span) -> bool {
        let Some(s) = self.view.statement(stmt) else { return false };
        if s.kind != StatementKind::Expression || s.span.start != span.start {
            return false;
        }
        self.src[span.end..s.span.end].iter().all(|b| b.is_ascii_whitespace() || *b == b';')
    }

    // ---- A/I -------------------------------------------------------------

    fn different_activity(&mut self) {
        let mut registry = self.model.activity_registry.clone();
        registry.sort();
        registry.dedup();
        if registry.len() < 2 {
            return;
        }
        let package = self.model.package.clone();
        for inst in &self.view.instantiations {
            if inst.simple_name() != "Intent" {
                continue;
            }
            for &arg in &inst.argument_spans {
                let text = self.text(arg);
                let Some(class) = text.trim().strip_suffix(".class").map(str::trim) else { continue };
                if !class.split('.').all(is_identifier) {
                    continue;
                }
                let current = registry
                    .iter()
                    .find(|r| *r == class || simple_name(r) == simple_name(class))
                    .cloned()
                    .unwrap_or_else(|| crate::project::qualify(package.as_deref(), class));
                let next = registry.iter().find(|r| r.as_str() > current.as_str()).unwrap_or(&registry[0]).clone();
                if next == current {
                    continue;
                }
                let mut aux = Aux::new();
                aux.insert("activity".into(), current);
                aux.insert(keys::REPLACEMENT.into(), format!("{next}.class"));
                self.push(
                    OperatorId::DifferentActivityIntentDefinition,
                    arg,
                    inst.enclosing_class,
                    inst.enclosing_method,
                    aux,
                );
            }
        }
    }

    fn put_extras(&self) -> impl Iterator<Item = &'a Invocation> + 'a {
        self.view.invocations.iter().filter(|i| i.method_name == "putExtra" && i.argument_spans.len() == 2)
    }

    fn put_extra_key(&mut self) {
        for inv in self.put_extras().collect::<Vec<_>>() {
            let key = inv.argument_spans[0];
            if !self.plain_literal(key) {
                continue;
            }
            let mut aux = Aux::new();
            aux.insert(keys::INSERT_AT.into(), (key.end - 1).to_string());
            aux.insert(keys::INSERT.into(), catalog::MUTANT_SUFFIX.into());
            self.push(OperatorId::InvalidKeyIntentPutExtra, key, inv.enclosing_class, inv.enclosing_method, aux);
        }
    }

    fn put_extra_value(&mut self) {
        for inv in self.put_extras().collect::<Vec<_>>() {
            let value = inv.argument_spans[1];
            let mut aux = Aux::new();
            aux.insert(keys::REPLACEMENT.into(), "new android.os.Parcelable[0]".into());
            self.push(OperatorId::NullValueIntentPutExtra, value, inv.enclosing_class, inv.enclosing_method, aux);
        }
    }

    fn null_intent(&mut self) {
        for inst in &self.view.instantiations {
            if inst.simple_name() != "Intent" || inst.anonymous_body.is_some() || inst.is_dereferenced {
                continue;
            }
            if self.whole_expression_statement(inst.statement, inst.span) {
                continue;
            }
            let mut aux = Aux::new();
            aux.insert(keys::REPLACEMENT.into(), "null".into());
            self.push(OperatorId::NullIntent, inst.span, inst.enclosing_class, inst.enclosing_method, aux);
        }
    }

    // ---- AP / GP ---------------------------------------------------------

    fn drop_interface(&mut self, op: OperatorId, interface: &str) {
        for (ci, class) in self.view.classes.iter().enumerate() {
            if matches!(class.kind, ClassKind::Interface | ClassKind::Annotation | ClassKind::Anonymous) {
                continue;
            }
            let Some(k) = class.implements.iter().position(|t| t.simple_name() == interface) else { continue };
            let types = &class.implements;
            let removal = if types.len() == 1 {
                let Some(prefix) = class.implements_clause_prefix else { continue };
                Span::new(prefix, types[0].span.end)
            } else if k == 0 {
                Span::new(types[0].span.start, types[1].span.start)
            } else {
                Span::new(types[k - 1].span.end, types[k].span.end)
            };
            let mut aux = Aux::new();
            aux.insert("class".into(), class.name.clone());
            aux.insert(keys::REPLACEMENT.into(), String::new());
            if op == OperatorId::NotParcelable {
                let overrides: Vec<Span> = self
                    .view
                    .methods
                    .iter()
                    .filter(|m| {
                        m.enclosing_class == ci && matches!(m.name.as_str(), "describeContents" | "writeToParcel")
                    })
                    .filter_map(|m| m.override_span)
                    .collect();
                aux.insert(keys::ALSO_DELETE.into(), super::format_spans(&overrides));
            }
            self.push(op, removal, Some(ci), None, aux);
        }
    }

    fn null_gps(&mut self) {
        for (mi, m) in self.view.methods.iter().enumerate() {
            let Some(body) = m.body_span else { continue };
            if m.name != "onLocationChanged" || m.params.len() != 1 {
                continue;
            }
            let p = &m.params[0];
            if simple_name(&p.type_name) != "Location" || p.is_final {
                continue;
            }
            let at = body.start + 1;
            let info = VarInfo {
                type_name: p.type_name.clone(),
                is_final: false,
                is_field: false,
                decl_at: Some(p.span.start),
            };
            if !self.reassignable(&info, &p.name, Some(mi), at) {
                continue;
            }
            let mut aux = Aux::new();
            aux.insert("var".into(), p.name.clone());
            aux.insert(keys::INSERT_AT.into(), at.to_string());
            aux.insert(keys::INSERT.into(), format!(" {} = null;", p.name));
            self.push(OperatorId::NullGPSLocation, Span::new(body.start, at), Some(m.enclosing_class), Some(mi), aux);
        }
    }

    // ---- BES / NFR back-end ---------------------------------------------

    fn is_backend(&self, inv: &Invocation) -> bool {
        catalog::BACKEND_METHODS.contains(&inv.method_name.as_str())
            && self.receiver_type(inv).is_some_and(|t| catalog::BACKEND_RECEIVER_HINTS.iter().any(|h| t.contains(h)))
    }

    /// `(var name, statement span)` for a call that is the whole initializer
    /// of a local or the whole right-hand side of an assignment statement.
    fn assigned_from(&self, call: Span) -> Option<(String, VarInfo, Span)> {
        for d in &self.view.var_decls {
            if d.init_core != Some(call) || d.scope != VarScope::Local {
                continue;
            }
            let stmt = self.block_statement(d.statement, &[StatementKind::LocalVar])?;
            let info = VarInfo {
                type_name: d.declared_type_name.clone(),
                is_final: d.is_final,
                is_field: false,
                decl_at: Some(d.name_span.start),
            };
            if PRIMITIVES.contains(&info.type_name.as_str())
                || !self.reassignable(&info, &d.name, d.enclosing_method, stmt.end)
            {
                return None;
            }
            return Some((d.name.clone(), info, stmt));
        }
        for a in &self.view.assignments {
            if a.rhs_core != call || !a.is_statement_expression {
                continue;
            }
            let stmt = self.block_statement(a.statement, &[StatementKind::Expression])?;
            let info = self.resolve(&a.lhs_text, a.enclosing_method, a.enclosing_class, a.lhs_span.start)?;
            if PRIMITIVES.contains(&info.type_name.as_str())
                || !self.reassignable(&info, &a.lhs_text, a.enclosing_method, stmt.end)
            {
                return None;
            }
            return Some((a.lhs_text.clone(), info, stmt));
        }
        None
    }

    fn null_after(&mut self, op: OperatorId, call: Span, class: Option<usize>, method: Option<usize>) {
        let Some((var, _, stmt)) = self.assigned_from(call) else { return };
        let mut aux = Aux::new();
        aux.insert(keys::INSERT_AT.into(), stmt.end.to_string());
        aux.insert(keys::INSERT.into(), format!(" {var} = null;"));
        aux.insert("var".into(), var);
        self.push(op, call, class, method, aux);
    }

    fn null_backend_return(&mut self) {
        for inv in &self.view.invocations {
            if self.is_backend(inv) {
                self.null_after(
                    OperatorId::NullBackEndServiceReturn,
                    inv.call_span,
                    inv.enclosing_class,
                    inv.enclosing_method,
                );
            }
        }
    }

    fn lengthy_backend(&mut self) {
        for inv in &self.view.invocations {
            if !self.is_backend(inv) {
                continue;
            }
            let (Some(stmt), Some(m)) = (
                self.block_statement(inv.statement, &[StatementKind::Expression, StatementKind::LocalVar]),
                inv.enclosing_method,
            ) else {
                continue;
            };
            let mut aux = Aux::new();
            aux.insert(keys::INSERT_AT.into(), stmt.end.to_string());
            aux.insert(keys::INSERT.into(), format!(" {}", sleep_block(&self.catch_var(m))));
            self.push(OperatorId::LengthyBackEndService, inv.call_span, inv.enclosing_class, inv.enclosing_method, aux);
        }
    }

    // ---- C / D -----------------------------------------------------------

    fn bluetooth_enabled(&mut self) {
        for inv in &self.view.invocations {
            if inv.method_name != "isEnabled" || !inv.argument_spans.is_empty() {
                continue;
            }
            let is_adapter = self.receiver_type(inv).is_some_and(|t| t.contains("BluetoothAdapter"))
                || inv.receiver_text.contains("getDefaultAdapter");
            if !is_adapter || inv.is_statement_expression || inv.is_dereferenced {
                continue;
            }
            // a constant loop condition turns the loop body or its successor unreachable
            if let Some(s) = self.view.statement(inv.statement) {
                let head = self.text(Span::new(s.span.start, s.span.end.min(s.span.start + 6)));
                if s.kind == StatementKind::Control
                    && ["while", "for", "do"].iter().any(|k| {
                        head.starts_with(k) && !is_word_byte(head.as_bytes().get(k.len()).copied().unwrap_or(b' '))
                    })
                {
                    continue;
                }
            }
            let mut aux = Aux::new();
            aux.insert(keys::REPLACEMENT.into(), "true".into());
            self.push(
                OperatorId::BluetoothAdapterAlwaysEnabled,
                inv.call_span,
                inv.enclosing_class,
                inv.enclosing_method,
                aux,
            );
        }
    }

    fn null_bluetooth(&mut self) {
        let mut sites = Vec::new();
        for d in &self.view.var_decls {
            if d.scope == VarScope::Local && d.simple_type_name() == "BluetoothAdapter" {
                if let Some(core) = d.init_core {
                    sites.push((core, d.enclosing_class, d.enclosing_method));
                }
            }
        }
        for a in &self.view.assignments {
            let ty = self.resolve(&a.lhs_text, a.enclosing_method, a.enclosing_class, a.lhs_span.start);
            if ty.is_some_and(|t| simple_name(&t.type_name) == "BluetoothAdapter") {
                sites.push((a.rhs_core, a.enclosing_class, a.enclosing_method));
            }
        }
        for (core, class, method) in sites {
            self.null_after(OperatorId::NullBluetoothAdapter, core, class, method);
        }
    }

    fn invalid_uri(&mut self) {
        for inv in &self.view.invocations {
            let recv = inv.receiver_text.as_str();
            if inv.method_name != "parse" || !(recv == "Uri" || recv.ends_with(".Uri")) {
                continue;
            }
            let Some(&arg) = inv.argument_spans.first() else { continue };
            if self.plain_literal(arg) {
                self.prefix_literal(OperatorId::InvalidURI, arg, inv.enclosing_class, inv.enclosing_method);
            }
        }
    }

    fn prefix_literal(&mut self, op: OperatorId, literal: Span, class: Option<usize>, method: Option<usize>) {
        let mut aux = Aux::new();
        aux.insert(keys::INSERT_AT.into(), (literal.start + 1).to_string());
        aux.insert(keys::INSERT.into(), catalog::INVALID_PATH_PREFIX.into());
        self.push(op, literal, class, method, aux);
    }

    // ---- DB / I/O --------------------------------------------------------

    fn null_before_close(&mut self, op: OperatorId) {
        for inv in &self.view.invocations {
            if inv.method_name != "close" || !inv.argument_spans.is_empty() || !inv.is_statement_expression {
                continue;
            }
            let Some(stmt) = self.block_statement(inv.statement, &[StatementKind::Expression]) else { continue };
            let recv = inv.receiver_text.as_str();
            let Some(var) = self.resolve(recv, inv.enclosing_method, inv.enclosing_class, inv.call_span.start) else {
                continue;
            };
            let ty = simple_name(&var.type_name);
            let matches = match op {
                OperatorId::ClosingNullCursor => ty.contains("Cursor"),
                OperatorId::NullInputStream => ty.ends_with("InputStream") || ty.ends_with("Reader"),
                _ => ty.ends_with("OutputStream") || ty.ends_with("Writer") || ty.ends_with("PrintStream"),
            };
            if !matches || !self.reassignable(&var, recv, inv.enclosing_method, stmt.start) {
                continue;
            }
            let mut aux = Aux::new();
            aux.insert("var".into(), recv.to_string());
            aux.insert(keys::INSERT_AT.into(), stmt.start.to_string());
            aux.insert(keys::INSERT.into(), format!("{recv} = null; "));
            self.push(op, inv.call_span, inv.enclosing_class, inv.enclosing_method, aux);
        }
    }

    fn query_swap(&mut self) {
        for inv in &self.view.invocations {
            if inv.method_name != "query" || inv.argument_spans.len() < 2 {
                continue;
            }
            let (a, b) = (inv.argument_spans[0], inv.argument_spans[1]);
            let (ta, tb) = (self.text(a), self.text(b));
            if ta == tb {
                continue;
            }
            // skip swaps that syntactic type evidence says cannot type-check
            let (m, c) = (inv.enclosing_method, inv.enclosing_class);
            if let (Some(x), Some(y)) = (self.expr_type(a, m, c), self.expr_type(b, m, c)) {
                if x != y {
                    continue;
                }
            }
            let sep = self.text(Span::new(a.end, b.start));
            let mut aux = Aux::new();
            aux.insert(keys::REPLACEMENT.into(), format!("{tb}{sep}{ta}"));
            self.push(OperatorId::InvalidIndexQueryParameter, a.cover(b), c, m, aux);
        }
    }

    fn invalid_sql(&mut self) {
        for inv in &self.view.invocations {
            if !catalog::SQL_METHODS.contains(&inv.method_name.as_str()) {
                continue;
            }
            let Some(&arg) = inv.argument_spans.first() else { continue };
            if !self.plain_literal(arg) {
                continue;
            }
            let body = Span::new(arg.start + 1, arg.end - 1);
            let Some(last) = last_java_char(body.slice(self.src)) else { continue };
            let mut aux = Aux::new();
            aux.insert(keys::ALSO_DELETE.into(), super::format_spans(&[Span::new(body.start + last, body.end)]));
            self.push(OperatorId::InvalidSQLQuery, arg, inv.enclosing_class, inv.enclosing_method, aux);
        }
    }

    fn invalid_date(&mut self) {
        for inst in &self.view.instantiations {
            if inst.simple_name() != "Date" || inst.anonymous_body.is_some() {
                continue;
            }
            if inst.argument_spans.len() == 1 && self.text(inst.argument_spans[0]).trim() == "0" {
                continue;
            }
            let mut aux = Aux::new();
            aux.insert(keys::REPLACEMENT.into(), format!("new {}(0)", inst.class_name));
            self.push(OperatorId::InvalidDate, inst.span, inst.enclosing_class, inst.enclosing_method, aux);
        }
    }

    fn invalid_file_path(&mut self) {
        let mut sites = Vec::new();
        for inst in &self.view.instantiations {
            if catalog::FILE_CONSTRUCTORS.contains(&inst.simple_name()) && inst.anonymous_body.is_none() {
                sites.extend(inst.argument_spans.iter().map(|&a| (a, inst.enclosing_class, inst.enclosing_method)));
            }
        }
        for inv in &self.view.invocations {
            if catalog::FILE_OPENERS.contains(&inv.method_name.as_str()) {
                sites.extend(inv.argument_spans.iter().map(|&a| (a, inv.enclosing_class, inv.enclosing_method)));
            }
        }
        for (arg, class, method) in sites {
            if self.plain_literal(arg) {
                self.prefix_literal(OperatorId::InvalidFilePath, arg, class, method);
            }
        }
    }

    // ---- GUI -------------------------------------------------------------

    fn buggy_listener(&mut self) {
        for (mi, m) in self.view.methods.iter().enumerate() {
            let Some(body) = m.body_span else { continue };
            if !catalog::GUI_LISTENER_METHODS.contains(&m.name.as_str()) {
                continue;
            }
            if !self.view.statements.iter().any(|s| s.enclosing_method == Some(mi)) {
                continue;
            }
            let replacement = default_return(m.return_type.as_deref());
            if self.text(body) == replacement {
                continue;
            }
            let mut aux = Aux::new();
            aux.insert(keys::REPLACEMENT.into(), replacement.into());
            self.push(OperatorId::BuggyGUIListener, body, Some(m.enclosing_class), Some(mi), aux);
        }
    }

    fn lengthy_methods(&mut self, op: OperatorId, names: &[&str]) {
        for (mi, m) in self.view.methods.iter().enumerate() {
            let Some(body) = m.body_span else { continue };
            if !names.contains(&m.name.as_str()) {
                continue;
            }
            let at = body.start + 1;
            let mut aux = Aux::new();
            aux.insert(keys::INSERT_AT.into(), at.to_string());
            aux.insert(keys::INSERT.into(), format!(" {}", sleep_block(&self.catch_var(mi))));
            self.push(op, Span::new(body.start, at), Some(m.enclosing_class), Some(mi), aux);
        }
    }

    fn find_view_assignments(&mut self, op: OperatorId) {
        for inv in &self.view.invocations {
            if inv.method_name != "findViewById" {
                continue;
            }
            let Some((var, info, stmt)) = self.assigned_from(inv.call_span) else { continue };
            let insert = if op == OperatorId::FindViewByIdReturnsNull {
                format!(" {var} = null;")
            } else {
                if matches!(info.type_name.as_str(), "Object" | "var") {
                    continue;
                }
                format!(" {var}.setVisibility(android.view.View.GONE);")
            };
            let mut aux = Aux::new();
            aux.insert(keys::INSERT_AT.into(), stmt.end.to_string());
            aux.insert(keys::INSERT.into(), insert);
            aux.insert("var".into(), var);
            self.push(op, inv.call_span, inv.enclosing_class, inv.enclosing_method, aux);
        }
    }

    fn invalid_id(&mut self) {
        let ids = &self.model.id_registry;
        if ids.len() < 2 {
            return;
        }
        for inv in &self.view.invocations {
            if inv.method_name != "findViewById" {
                continue;
            }
            let Some(&arg) = inv.argument_spans.first() else { continue };
            let Some(r) = self.view.resource_refs.iter().find(|r| r.span == arg && r.kind == "id") else { continue };
            let next = ids.iter().find(|i| i.as_str() > r.name.as_str()).unwrap_or(&ids[0]);
            if *next == r.name {
                continue;
            }
            let mut aux = Aux::new();
            aux.insert("id".into(), r.name.clone());
            aux.insert(keys::REPLACEMENT.into(), next.clone());
            self.push(OperatorId::InvalidIDFindView, r.name_span, inv.enclosing_class, inv.enclosing_method, aux);
        }
    }

    // ---- NFR -------------------------------------------------------------

    fn connect_timeout(&mut self) {
        for inv in &self.view.invocations {
            if inv.method_name != "setConnectTimeout" || inv.argument_spans.len() != 1 {
                continue;
            }
            let arg = inv.argument_spans[0];
            let replacement = if self.is_int_literal(arg) {
                format!("{} * {}", self.text(arg), catalog::CONNECT_TIMEOUT_FACTOR)
            } else {
                catalog::CONNECT_TIMEOUT_FALLBACK.to_string()
            };
            let mut aux = Aux::new();
            aux.insert(keys::REPLACEMENT.into(), replacement);
            self.push(OperatorId::LongConnectionTimeOut, arg, inv.enclosing_class, inv.enclosing_method, aux);
        }
    }

    fn large_image(&mut self) {
        for inv in &self.view.invocations {
            let args = &inv.argument_spans;
            let pair = match (inv.method_name.as_str(), args.len()) {
                ("createBitmap", 3) => (0, 1),
                ("createBitmap", 4) => (1, 2),
                ("createBitmap", n) if n >= 5 => (3, 4),
                ("createScaledBitmap", 4) => (1, 2),
                _ => continue,
            };
            let (a, b) = (args[pair.0], args[pair.1]);
            let dim = catalog::LARGE_BITMAP_DIMENSION.to_string();
            if self.text(a).trim() == dim && self.text(b).trim() == dim {
                continue;
            }
            let sep = self.text(Span::new(a.end, b.start));
            let mut aux = Aux::new();
            aux.insert(keys::REPLACEMENT.into(), format!("{dim}{sep}{dim}"));
            self.push(OperatorId::OOMLargeImage, a.cover(b), inv.enclosing_class, inv.enclosing_method, aux);
        }
    }
}

fn balanced(s: &str) -> bool {
    let mut depth = 0i32;
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return false;
                }
            }
            _ => {}
        }
    }
    depth == 0
}

/// Offset of the last character of a Java string literal body, treating an
/// escape sequence as one character.
fn last_java_char(body: &[u8]) -> Option<usize> {
    let mut i = 0;
    let mut last = None;
    while i < body.len() {
        last = Some(i);
        if body[i] == b'\\' {
            i += 1;
            match body.get(i) {
                Some(b'u') => {
                    while body.get(i) == Some(&b'u') {
                        i += 1;
                    }
                    i += 4;
                }
                Some(b'0'..=b'7') => {
                    let mut n = 0;
                    while n < 3 && matches!(body.get(i), Some(b'0'..=b'7')) {
                        i += 1;
                        n += 1;
                    }
                }
                _ => i += 1,
            }
        } else {
            let len = match body[i] {
                b if b < 0x80 => 1,
                b if b >= 0xf0 => 4,
                b if b >= 0xe0 => 3,
                b if b >= 0xc0 => 2,
                _ => 1,
            };
            i += len;
        }
    }
    last
}
