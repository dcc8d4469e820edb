//! Potential Failure Profile: every location where an operator applies.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::catalog::OperatorId;
use crate::detect::{self, Aux, DetectOptions};
use crate::error::{Error, Result};
use crate::project::SourceModel;
use crate::span::Span;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PfpConfig {
    /// Suppress A/I and GUI mutations inside the launcher activity.
    pub exclude_main_activity: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PfpEntry {
    pub operator_id: OperatorId,
    pub file: String,
    pub target: Span,
    /// 1-based line and byte column of `target.start`.
    pub line: usize,
    pub column: usize,
    pub aux: Aux,
    pub stable_key: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagnosticsSummary {
    /// Files dropped from detection because they failed to parse.
    pub unparsed_files: usize,
    pub messages: Vec<crate::project::Diagnostic>,
    /// Candidates dropped because an identical one was already present.
    pub duplicates: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pfp {
    pub format_version: u32,
    pub root: String,
    pub operators: Vec<OperatorId>,
    pub config: PfpConfig,
    pub entries: Vec<PfpEntry>,
    pub diagnostics: DiagnosticsSummary,
}

impl Pfp {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("pfp serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let pfp: Pfp = serde_json::from_str(text).map_err(|e| Error::Format { what: "pfp", message: e.to_string() })?;
        crate::check_version("pfp", pfp.format_version)?;
        Ok(pfp)
    }

    pub fn count_by_operator(&self) -> BTreeMap<OperatorId, usize> {
        let mut counts = BTreeMap::new();
        for e in &self.entries {
            *counts.entry(e.operator_id).or_insert(0) += 1;
        }
        counts
    }
}

/// `sha256(operator, file, start, end, aux)`, hex, truncated to 128 bits.
pub fn stable_key(op: OperatorId, file: &str, target: Span, aux: &Aux) -> String {
    let mut h = Sha256::new();
    for part in [op.as_str(), file, &target.start.to_string(), &target.end.to_string()] {
        h.update(part.as_bytes());
        h.update([0]);
    }
    for (k, v) in aux {
        h.update(k.as_bytes());
        h.update([1]);
        h.update(v.as_bytes());
        h.update([0]);
    }
    h.finalize()[..16].iter().map(|b| format!("{b:02x}")).collect()
}

/// Resolves include/exclude id lists to catalog operators, in catalog order.
/// An empty include list selects the whole catalog.
pub fn resolve_operators(include: &[String], exclude: &[String]) -> Result<Vec<OperatorId>> {
    let parse = |ids: &[String]| ids.iter().map(|s| s.trim().parse::<OperatorId>()).collect::<Result<Vec<_>>>();
    let mut ops = if include.is_empty() { OperatorId::ALL.to_vec() } else { parse(include)? };
    let exclude = parse(exclude)?;
    ops.retain(|op| !exclude.contains(op));
    ops.sort();
    ops.dedup();
    Ok(ops)
}

/// Runs the detectors of `operators` over every parsed file of `model`.
pub fn extract_pfp(model: &SourceModel, operators: &[OperatorId], config: &PfpConfig) -> Pfp {
    let options = DetectOptions { exclude_main_activity: config.exclude_main_activity };
    let mut ops = operators.to_vec();
    ops.sort();
    ops.dedup();
    let per_file: Vec<Vec<PfpEntry>> = model
        .files
        .par_iter()
        .map(|file| {
            detect::detect_file(model, file, &ops, options)
                .into_iter()
                .map(|c| {
                    let (line, column) = file.line_index.line_col(c.target.start);
                    PfpEntry {
                        stable_key: stable_key(c.op, &file.relative_path, c.target, &c.aux),
                        operator_id: c.op,
                        file: file.relative_path.clone(),
                        target: c.target,
                        line,
                        column,
                        aux: c.aux,
                    }
                })
                .collect()
        })
        .collect();
    let mut entries: Vec<PfpEntry> = per_file.into_iter().flatten().collect();
    entries.sort_by(|a, b| {
        (&a.file, a.target.start, a.operator_id.as_str(), a.target.end, &a.stable_key).cmp(&(
            &b.file,
            b.target.start,
            b.operator_id.as_str(),
            b.target.end,
            &b.stable_key,
        ))
    });
    let before = entries.len();
    entries.dedup_by(|a, b| a.stable_key == b.stable_key);
    let duplicates = before - entries.len();
    Pfp {
        format_version: crate::FORMAT_VERSION,
        root: model.root.display().to_string(),
        operators: ops,
        config: *config,
        entries,
        diagnostics: DiagnosticsSummary {
            unparsed_files: model.diagnostics.len(),
            messages: model.diagnostics.clone(),
            duplicates,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stable_key_depends_on_every_component() {
        let aux: Aux = [("var".to_string(), "c".to_string())].into_iter().collect();
        let base = stable_key(OperatorId::NullIntent, "A.java", Span::new(1, 5), &aux);
        assert_eq!(base.len(), 32);
        assert_eq!(base, stable_key(OperatorId::NullIntent, "A.java", Span::new(1, 5), &aux));
        assert_ne!(base, stable_key(OperatorId::InvalidDate, "A.java", Span::new(1, 5), &aux));
        assert_ne!(base, stable_key(OperatorId::NullIntent, "B.java", Span::new(1, 5), &aux));
        assert_ne!(base, stable_key(OperatorId::NullIntent, "A.java", Span::new(1, 6), &aux));
        assert_ne!(base, stable_key(OperatorId::NullIntent, "A.java", Span::new(1, 5), &Aux::new()));
    }

    #[test]
    fn operator_selection() {
        let all = resolve_operators(&[], &[]).unwrap();
        assert_eq!(all.len(), 35);
        let some = resolve_operators(&["NullIntent".into(), "InvalidDate".into()], &["InvalidDate".into()]).unwrap();
        assert_eq!(some, vec![OperatorId::NullIntent]);
        assert!(matches!(
            resolve_operators(&["NullMethodCallArgument".into()], &[]),
            Err(Error::UnknownOperator { reason: Some(_), .. })
        ));
    }
}
