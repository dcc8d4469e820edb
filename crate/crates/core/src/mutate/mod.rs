//! Turns profile entries into first-order mutants.

mod materialize;
mod patch;

pub use materialize::{generate, materialize, unified_diff, Mode};
pub use patch::{Edit, Patch};

use std::collections::BTreeMap;
use std::path::Path;

use rand::distributions::Alphanumeric;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::catalog::{self, OperatorId};
use crate::detect::{keys, parse_spans};
use crate::error::{Error, Result};
use crate::pfp::{PfpConfig, PfpEntry};
use crate::project::SourceModel;
use crate::span::Span;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mutant {
    /// `<operator>-<n>`, numbered per operator in profile order from 1.
    pub mutant_id: String,
    pub operator_id: OperatorId,
    /// Stable key of the profile entry this mutant realizes.
    pub source_entry: String,
    pub file: String,
    pub line: usize,
    pub patch: Patch,
    pub summary: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedEntry {
    pub stable_key: String,
    pub operator_id: OperatorId,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MutationPlan {
    pub mutants: Vec<Mutant>,
    pub skipped: Vec<SkippedEntry>,
}

/// RNG for one entry: the run seed mixed with the entry's key, so that
/// other entries never shift its random choices.
pub fn entry_rng(seed: u64, stable_key: &str) -> ChaCha8Rng {
    let digest = Sha256::digest(stable_key.as_bytes());
    let mut head = [0u8; 8];
    head.copy_from_slice(&digest[..8]);
    ChaCha8Rng::seed_from_u64(seed ^ u64::from_be_bytes(head))
}

/// One mutant per entry, in profile order. Entries that cannot be
/// transformed are reported in [`MutationPlan::skipped`].
pub fn plan_mutants(pfp: &[PfpEntry], model: &SourceModel, seed: u64) -> MutationPlan {
    let mut plan = MutationPlan::default();
    let mut counters: BTreeMap<OperatorId, usize> = BTreeMap::new();
    for entry in pfp {
        match build_patch(entry, model, seed) {
            Ok((patch, summary)) => {
                let n = counters.entry(entry.operator_id).or_insert(0);
                *n += 1;
                plan.mutants.push(Mutant {
                    mutant_id: format!("{}-{}", entry.operator_id, n),
                    operator_id: entry.operator_id,
                    source_entry: entry.stable_key.clone(),
                    file: entry.file.clone(),
                    line: entry.line,
                    patch,
                    summary,
                });
            }
            Err(e) => plan.skipped.push(SkippedEntry {
                stable_key: entry.stable_key.clone(),
                operator_id: entry.operator_id,
                message: e.to_string(),
            }),
        }
    }
    plan
}

fn build_patch(entry: &PfpEntry, model: &SourceModel, seed: u64) -> Result<(Patch, String)> {
    let fail = |message: String| Error::TransformationFailure {
        operator: entry.operator_id.to_string(),
        stable_key: entry.stable_key.clone(),
        message,
    };
    let file = model.file(&entry.file).ok_or_else(|| fail(format!("{} is not in the model", entry.file)))?;
    let src = &file.content;
    let in_bounds = |s: Span| s.start <= s.end && s.end <= src.len();
    if !in_bounds(entry.target) {
        return Err(fail(format!("target {} outside file of {} bytes", entry.target, src.len())));
    }
    let target_text = String::from_utf8_lossy(entry.target.slice(src)).into_owned();
    let mut splices: Vec<(Span, Vec<u8>)> = Vec::new();

    let mut rng = entry_rng(seed, &entry.stable_key);
    let seeded = match entry.operator_id {
        OperatorId::InvalidActivityName => {
            Some(swap_adjacent(&target_text, &mut rng).ok_or_else(|| fail("no swappable characters".into()))?)
        }
        OperatorId::InvalidLabel => {
            Some((&mut rng).sample_iter(Alphanumeric).take(catalog::RANDOM_LABEL_LEN).map(char::from).collect())
        }
        OperatorId::SDKVersion => {
            let original: u32 = target_text.parse().map_err(|_| fail(format!("`{target_text}` is not an integer")))?;
            Some(sdk_value(original, &mut rng).to_string())
        }
        _ => None,
    };
    if let Some(r) = seeded {
        splices.push((entry.target, r.into_bytes()));
    }
    if let Some(r) = entry.aux.get(keys::REPLACEMENT) {
        splices.push((entry.target, r.clone().into_bytes()));
    }
    if let Some(text) = entry.aux.get(keys::INSERT) {
        let at: usize = entry
            .aux
            .get(keys::INSERT_AT)
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| fail("insertion without a valid offset".into()))?;
        splices.push((Span::empty(at), text.clone().into_bytes()));
    }
    if let Some(list) = entry.aux.get(keys::ALSO_DELETE) {
        let spans = parse_spans(list).ok_or_else(|| fail(format!("bad span list `{list}`")))?;
        splices.extend(spans.into_iter().map(|s| (s, Vec::new())));
    }
    if splices.is_empty() {
        return Err(fail("operator produced no edit".into()));
    }
    let mut edits = Vec::with_capacity(splices.len());
    for (span, replacement) in splices {
        if !in_bounds(span) {
            return Err(fail(format!("edit {span} outside file")));
        }
        edits.push(Edit { file: entry.file.clone(), span, original: span.slice(src).to_vec(), replacement });
    }
    let patch = Patch::new(edits).map_err(|e| fail(e.to_string()))?;
    let summary = summarize(entry, &patch);
    Ok((patch, summary))
}

fn swap_adjacent(text: &str, rng: &mut ChaCha8Rng) -> Option<String> {
    let mut chars: Vec<char> = text.chars().collect();
    let positions: Vec<usize> = (0..chars.len().saturating_sub(1)).filter(|&i| chars[i] != chars[i + 1]).collect();
    if positions.is_empty() {
        return None;
    }
    let i = positions[rng.gen_range(0..positions.len())];
    chars.swap(i, i + 1);
    Some(chars.into_iter().collect())
}

fn sdk_value(original: u32, rng: &mut ChaCha8Rng) -> u32 {
    let (lo, hi) = catalog::SDK_VERSION_RANGE;
    if (lo..=hi).contains(&original) {
        let v = rng.gen_range(lo..hi);
        if v >= original {
            v + 1
        } else {
            v
        }
    } else {
        rng.gen_range(lo..=hi)
    }
}

fn clip(bytes: &[u8]) -> String {
    const MAX: usize = 60;
    let text = String::from_utf8_lossy(bytes);
    let flat: String = text.split_whitespace().collect::<Vec<_>>().join(" ");
    if flat.chars().count() > MAX {
        format!("{}...", flat.chars().take(MAX).collect::<String>())
    } else {
        flat
    }
}

fn summarize(entry: &PfpEntry, patch: &Patch) -> String {
    let parts: Vec<String> = patch
        .edits
        .iter()
        .map(|e| match (e.original.is_empty(), e.replacement.is_empty()) {
            (true, _) => format!("insert `{}`", clip(&e.replacement)),
            (false, true) => format!("delete `{}`", clip(&e.original)),
            (false, false) => format!("replace `{}` with `{}`", clip(&e.original), clip(&e.replacement)),
        })
        .collect();
    format!("{} at {}:{}: {}", entry.operator_id, entry.file, entry.line, parts.join("; "))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestEntry {
    #[serde(flatten)]
    pub mutant: Mutant,
    /// Clone directory or patch file, relative to the manifest's directory.
    pub artifact: String,
}

/// The per-run list of every generated mutant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MutantsManifest {
    pub format_version: u32,
    pub root: String,
    pub seed: u64,
    pub mode: Mode,
    pub operators: Vec<OperatorId>,
    pub config: PfpConfig,
    pub mutants: Vec<ManifestEntry>,
    pub skipped: Vec<SkippedEntry>,
}

pub const MANIFEST_NAME: &str = "mutants_manifest.json";

impl MutantsManifest {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("manifest serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let m: MutantsManifest = serde_json::from_str(text)
            .map_err(|e| Error::Format { what: "mutants manifest", message: e.to_string() })?;
        crate::check_version("mutants manifest", m.format_version)?;
        Ok(m)
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_json(&text)
    }

    pub fn get(&self, mutant_id: &str) -> Option<&ManifestEntry> {
        self.mutants.iter().find(|m| m.mutant.mutant_id == mutant_id)
    }
}
