//! Writes mutants to disk as project clones or unified-diff files.

use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use similar::TextDiff;
use walkdir::WalkDir;

use super::{plan_mutants, ManifestEntry, Mutant, MutantsManifest, MANIFEST_NAME};
use crate::error::{Error, Result};
use crate::pfp::Pfp;
use crate::project::SourceModel;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// A full copy of the project per mutant under `mutants/<id>/`.
    Clone,
    /// One unified diff per mutant under `patches/<id>.patch`.
    PatchFile,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "clone" => Ok(Mode::Clone),
            "patch" | "patch_file" | "patch-file" => Ok(Mode::PatchFile),
            other => Err(Error::Config(format!("unknown mode `{other}` (expected clone or patch)"))),
        }
    }
}

const CLONES_DIR: &str = "mutants";
const PATCHES_DIR: &str = "patches";

fn artifact_path(mutant: &Mutant, mode: Mode) -> String {
    match mode {
        Mode::Clone => format!("{CLONES_DIR}/{}", mutant.mutant_id),
        Mode::PatchFile => format!("{PATCHES_DIR}/{}.patch", mutant.mutant_id),
    }
}

/// Files under `root` to replicate in clones, as `/`-separated relative paths.
/// Skips VCS metadata and `skip` (typically an output directory inside the project).
fn tree_files(root: &Path, skip: Option<&Path>) -> Result<Vec<String>> {
    let skip = skip.and_then(|p| p.canonicalize().ok());
    let mut out = Vec::new();
    let walker = WalkDir::new(root).sort_by_file_name().into_iter().filter_entry(|e| {
        if e.depth() > 0 && e.file_type().is_dir() && e.file_name() == ".git" {
            return false;
        }
        match (&skip, e.file_type().is_dir()) {
            (Some(s), true) => e.path().canonicalize().map(|c| &c != s).unwrap_or(true),
            _ => true,
        }
    });
    for entry in walker {
        let entry = entry.map_err(|e| {
            let path = e.path().unwrap_or(root).to_path_buf();
            Error::io(path, e.into_io_error().unwrap_or_else(|| std::io::Error::other("walk error")))
        })?;
        if entry.file_type().is_dir() {
            continue;
        }
        let rel = entry.path().strip_prefix(root).unwrap_or(entry.path());
        out.push(rel.components().map(|c| c.as_os_str().to_string_lossy().into_owned()).collect::<Vec<_>>().join("/"));
    }
    Ok(out)
}

fn clone_into(mutant: &Mutant, root: &Path, files: &[String], dest: &Path) -> Result<()> {
    if dest.exists() {
        fs::remove_dir_all(dest).map_err(|e| Error::io(dest, e))?;
    }
    fs::create_dir_all(dest).map_err(|e| Error::io(dest, e))?;
    let edited = mutant.patch.files();
    for rel in files {
        let from = root.join(rel);
        let to = dest.join(rel);
        if let Some(parent) = to.parent() {
            fs::create_dir_all(parent).map_err(|e| Error::io(parent, e))?;
        }
        if edited.contains(rel.as_str()) {
            let original = fs::read(&from).map_err(|e| Error::io(&from, e))?;
            let mutated = mutant.patch.apply(rel, &original)?;
            fs::write(&to, mutated).map_err(|e| Error::io(&to, e))?;
            let perms = fs::metadata(&from).map_err(|e| Error::io(&from, e))?.permissions();
            fs::set_permissions(&to, perms).map_err(|e| Error::io(&to, e))?;
        } else {
            fs::copy(&from, &to).map_err(|e| Error::io(&from, e))?;
        }
    }
    for file in edited {
        if !files.iter().any(|f| f == file) {
            return Err(Error::PatchConflict { file: file.to_string(), start: 0, end: 0 });
        }
    }
    Ok(())
}

/// `a/`/`b/`-prefixed unified diff of the mutant against the model's contents.
pub fn unified_diff(mutant: &Mutant, model: &SourceModel) -> Result<Vec<u8>> {
    let mut out = Vec::new();
    for file in mutant.patch.files() {
        let original =
            &model.file(file).ok_or_else(|| Error::PatchConflict { file: file.to_string(), start: 0, end: 0 })?.content;
        let mutated = mutant.patch.apply(file, original)?;
        TextDiff::from_lines(original.as_slice(), mutated.as_slice())
            .unified_diff()
            .context_radius(3)
            .header(&format!("a/{file}"), &format!("b/{file}"))
            .to_writer(&mut out)
            .map_err(|e| Error::io(file, e))?;
    }
    Ok(out)
}

/// Writes one mutant under `out_dir` and returns the artifact path.
pub fn materialize(mutant: &Mutant, model: &SourceModel, out_dir: &Path, mode: Mode) -> Result<PathBuf> {
    let files = match mode {
        Mode::Clone => tree_files(&model.root, Some(out_dir))?,
        Mode::PatchFile => Vec::new(),
    };
    write_artifact(mutant, model, out_dir, mode, &files)
}

fn write_artifact(
    mutant: &Mutant,
    model: &SourceModel,
    out_dir: &Path,
    mode: Mode,
    files: &[String],
) -> Result<PathBuf> {
    let path = out_dir.join(artifact_path(mutant, mode));
    match mode {
        Mode::Clone => clone_into(mutant, &model.root, files, &path)?,
        Mode::PatchFile => {
            let diff = unified_diff(mutant, model)?;
            if let Some(parent) = path.parent() {
                fs::create_dir_all(parent).map_err(|e| Error::io(parent, e))?;
            }
            fs::write(&path, diff).map_err(|e| Error::io(&path, e))?;
        }
    }
    Ok(path)
}

/// Plans every entry of `pfp`, materializes the mutants in parallel and
/// writes the manifest to `out_dir`.
pub fn generate(model: &SourceModel, pfp: &Pfp, seed: u64, out_dir: &Path, mode: Mode) -> Result<MutantsManifest> {
    fs::create_dir_all(out_dir).map_err(|e| Error::io(out_dir, e))?;
    for stale in [CLONES_DIR, PATCHES_DIR] {
        let dir = out_dir.join(stale);
        if dir.exists() {
            fs::remove_dir_all(&dir).map_err(|e| Error::io(&dir, e))?;
        }
    }
    let plan = plan_mutants(&pfp.entries, model, seed);
    let files = match mode {
        Mode::Clone => tree_files(&model.root, Some(out_dir))?,
        Mode::PatchFile => Vec::new(),
    };
    plan.mutants
        .par_iter()
        .map(|m| write_artifact(m, model, out_dir, mode, &files).map(|_| ()))
        .collect::<Result<Vec<()>>>()?;
    let manifest = MutantsManifest {
        format_version: crate::FORMAT_VERSION,
        root: pfp.root.clone(),
        seed,
        mode,
        operators: pfp.operators.clone(),
        config: pfp.config,
        mutants: plan
            .mutants
            .into_iter()
            .map(|m| ManifestEntry { artifact: artifact_path(&m, mode), mutant: m })
            .collect(),
        skipped: plan.skipped,
    };
    let path = out_dir.join(MANIFEST_NAME);
    fs::write(&path, manifest.to_json()).map_err(|e| Error::io(&path, e))?;
    Ok(manifest)
}
