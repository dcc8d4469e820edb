#![allow(dead_code)]

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use droidmut_core::catalog::OperatorId;
use droidmut_core::pfp::{extract_pfp, Pfp, PfpConfig};
use droidmut_core::project::{scan_project, ScanOptions, SourceModel};
use walkdir::WalkDir;

pub const FIXTURES: &[&str] = &["omni", "minimal", "single", "realistic", "large"];

pub fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name).canonicalize().unwrap()
}

pub fn hooks_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../hooks").canonicalize().unwrap()
}

pub fn model(name: &str) -> SourceModel {
    scan_project(fixture(name), &ScanOptions::default()).unwrap()
}

pub fn profile(model: &SourceModel) -> Pfp {
    extract_pfp(model, OperatorId::ALL, &PfpConfig::default())
}

/// Relative path -> contents, skipping `skip` (a directory name at any depth).
pub fn snapshot(root: &Path, skip: Option<&str>) -> BTreeMap<String, Vec<u8>> {
    let mut out = BTreeMap::new();
    let walker = WalkDir::new(root)
        .sort_by_file_name()
        .into_iter()
        .filter_entry(|e| Some(e.file_name().to_str().unwrap_or("")) != skip);
    for e in walker {
        let e = e.unwrap();
        if e.file_type().is_file() {
            let rel = e.path().strip_prefix(root).unwrap().to_string_lossy().replace('\\', "/");
            out.insert(rel, fs::read(e.path()).unwrap());
        }
    }
    out
}

pub fn copy_tree(from: &Path, to: &Path) {
    for (rel, bytes) in snapshot(from, None) {
        let dest = to.join(&rel);
        fs::create_dir_all(dest.parent().unwrap()).unwrap();
        fs::write(dest, bytes).unwrap();
    }
}

pub fn java_toolchain_present() -> bool {
    let tools = std::env::var("DROIDMUT_JAVATOOLS").unwrap_or_else(|_| "/opt/javatools".into());
    let has_jar = |prefix: &str| {
        fs::read_dir(&tools)
            .map(|d| d.filter_map(|e| e.ok()).any(|e| e.file_name().to_string_lossy().starts_with(prefix)))
            .unwrap_or(false)
    };
    has_jar("janino-") && has_jar("commons-compiler-") && which("python3")
}

pub fn which(bin: &str) -> bool {
    std::env::var_os("PATH").map(|p| std::env::split_paths(&p).any(|d| d.join(bin).is_file())).unwrap_or(false)
}
