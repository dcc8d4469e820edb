//! Per-operator detection queries over the syntax views.
//!
//! Detectors return [`Candidate`]s: a target span plus the metadata the
//! mutation step needs. Structural replacements are decided here, so the
//! profile document shows exactly what each mutant will do; only the
//! seeded operators defer their choice to planning.

mod java;
mod xml;

use std::collections::BTreeMap;

use crate::catalog::OperatorId;
use crate::project::{FileKind, SourceFile, SourceModel};
use crate::span::Span;

pub type Aux = BTreeMap<String, String>;

/// Keys shared between detection and mutation.
pub mod keys {
    /// Text that replaces the target span.
    pub const REPLACEMENT: &str = "replacement";
    /// Offset of an insertion made alongside (or instead of) the replacement.
    pub const INSERT_AT: &str = "insert_at";
    pub const INSERT: &str = "insert";
    /// Additional `start..end` spans deleted by the same mutant, comma separated.
    pub const ALSO_DELETE: &str = "also_delete";
    pub const ENCLOSING: &str = "enclosing";
}

#[derive(Debug, Clone)]
pub struct Candidate {
    pub op: OperatorId,
    pub target: Span,
    pub aux: Aux,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct DetectOptions {
    pub exclude_main_activity: bool,
}

/// Runs every requested detector that applies to `file`.
pub fn detect_file(
    model: &SourceModel,
    file: &SourceFile,
    ops: &[OperatorId],
    options: DetectOptions,
) -> Vec<Candidate> {
    let mut out = Vec::new();
    match file.kind {
        FileKind::JavaSource => {
            if let Some(view) = model.java_views.get(&file.relative_path) {
                java::detect(model, file, view, ops, options, &mut out);
            }
        }
        kind if kind.is_xml() => {
            if let Some(view) = model.xml_views.get(&file.relative_path) {
                xml::detect(model, file, view, ops, &mut out);
            }
        }
        _ => {}
    }
    out
}

pub(crate) fn format_spans(spans: &[Span]) -> String {
    spans.iter().map(|s| format!("{}..{}", s.start, s.end)).collect::<Vec<_>>().join(",")
}

/// Parses the `a..b,c..d` span lists stored under [`keys::ALSO_DELETE`].
pub fn parse_spans(text: &str) -> Option<Vec<Span>> {
    if text.is_empty() {
        return Some(Vec::new());
    }
    text.split(',')
        .map(|part| {
            let (a, b) = part.split_once("..")?;
            let (a, b) = (a.parse().ok()?, b.parse().ok()?);
            (a <= b).then(|| Span::new(a, b))
        })
        .collect()
}
