//! Ingests an Android project directory into an immutable [`SourceModel`].

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};

use globset::{Glob, GlobSet, GlobSetBuilder};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use walkdir::WalkDir;

use crate::error::{Error, Result};
use crate::span::LineIndex;
use crate::syntax::{java, xml, SyntaxView, XmlView};

pub const MANIFEST_FILE_NAME: &str = "AndroidManifest.xml";

/// Generated-code directories, skipped unless the caller opts out.
pub const DEFAULT_EXCLUDES: &[&str] = &["**/build/**", "**/gen/**", "**/bin/**", "**/.git/**"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FileKind {
    JavaSource,
    Manifest,
    StringsResource,
    LayoutResource,
    ColorResource,
    OtherResource,
    Unclassified,
}

impl FileKind {
    pub fn is_xml(self) -> bool {
        matches!(
            self,
            FileKind::Manifest | FileKind::StringsResource | FileKind::LayoutResource | FileKind::ColorResource
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourceFile {
    /// `/`-separated path relative to the project root.
    pub relative_path: String,
    pub kind: FileKind,
    #[serde(with = "crate::bytes_serde")]
    pub content: Vec<u8>,
    pub line_index: LineIndex,
}

impl SourceFile {
    pub fn new(relative_path: impl Into<String>, kind: FileKind, content: Vec<u8>) -> Self {
        let line_index = LineIndex::new(&content);
        SourceFile { relative_path: relative_path.into(), kind, content, line_index }
    }

    pub(crate) fn parse_failure(&self, offset: usize, message: String) -> Error {
        let (line, column) = self.line_index.line_col(offset.min(self.content.len()));
        Error::ParseFailure { file: self.relative_path.clone(), offset, line, column, message }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub file: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActivityDecl {
    /// Raw `android:name` value.
    pub name: String,
    pub qualified_name: String,
    /// Index of the `<activity>` element in the manifest's XML view.
    pub element: usize,
    pub is_launcher: bool,
}

impl ActivityDecl {
    pub fn simple_name(&self) -> &str {
        java::simple_name(&self.qualified_name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourceModel {
    pub root: PathBuf,
    /// Sorted by `relative_path`.
    pub files: Vec<SourceFile>,
    pub java_views: BTreeMap<String, SyntaxView>,
    pub xml_views: BTreeMap<String, XmlView>,
    pub manifest_path: String,
    /// `package` attribute of the manifest root.
    pub package: Option<String>,
    pub activities: Vec<ActivityDecl>,
    /// Qualified activity names in manifest declaration order.
    pub activity_registry: Vec<String>,
    /// Distinct `R.id.<name>` names referenced from Java sources, sorted.
    pub id_registry: Vec<String>,
    pub diagnostics: Vec<Diagnostic>,
}

#[derive(Debug, Clone, Default)]
pub struct ScanOptions {
    pub excludes: Vec<String>,
    /// Skip [`DEFAULT_EXCLUDES`].
    pub no_default_excludes: bool,
}

impl ScanOptions {
    pub fn with_excludes(excludes: impl IntoIterator<Item = impl Into<String>>) -> Self {
        ScanOptions { excludes: excludes.into_iter().map(Into::into).collect(), no_default_excludes: false }
    }

    fn globset(&self) -> Result<GlobSet> {
        let mut b = GlobSetBuilder::new();
        let defaults = if self.no_default_excludes { &[][..] } else { DEFAULT_EXCLUDES };
        for pat in defaults.iter().copied().chain(self.excludes.iter().map(String::as_str)) {
            let glob = Glob::new(pat).map_err(|e| Error::Config(format!("bad exclude pattern `{pat}`: {e}")))?;
            b.add(glob);
        }
        b.build().map_err(|e| Error::Config(e.to_string()))
    }
}

/// Classification by path alone; `is_manifest` marks the authoritative manifest.
pub fn classify(relative_path: &str, is_manifest: bool) -> FileKind {
    let parts: Vec<&str> = relative_path.split('/').collect();
    let file = *parts.last().unwrap_or(&"");
    let parent = if parts.len() >= 2 { parts[parts.len() - 2] } else { "" };
    let grandparent = if parts.len() >= 3 { parts[parts.len() - 3] } else { "" };
    if file == MANIFEST_FILE_NAME {
        return if is_manifest { FileKind::Manifest } else { FileKind::OtherResource };
    }
    if file.ends_with(".java") {
        return FileKind::JavaSource;
    }
    let under_res = parts[..parts.len().saturating_sub(1)].contains(&"res");
    if grandparent == "res" && parent.starts_with("values") {
        if file == "strings.xml" {
            return FileKind::StringsResource;
        }
        if file == "colors.xml" {
            return FileKind::ColorResource;
        }
    }
    if grandparent == "res" && parent.starts_with("layout") && file.ends_with(".xml") {
        return FileKind::LayoutResource;
    }
    if under_res {
        FileKind::OtherResource
    } else {
        FileKind::Unclassified
    }
}

fn relative(root: &Path, path: &Path) -> String {
    path.strip_prefix(root)
        .unwrap_or(path)
        .components()
        .map(|c| c.as_os_str().to_string_lossy().into_owned())
        .collect::<Vec<_>>()
        .join("/")
}

/// Walks `root`, classifies and parses every included file.
pub fn scan_project(root: impl AsRef<Path>, options: &ScanOptions) -> Result<SourceModel> {
    let root = root.as_ref();
    if !root.is_dir() {
        return Err(Error::NotADirectory(root.to_path_buf()));
    }
    let excludes = options.globset()?;
    let mut paths = Vec::new();
    for entry in WalkDir::new(root).sort_by_file_name() {
        let entry = entry.map_err(|e| {
            let path = e.path().unwrap_or(root).to_path_buf();
            Error::io(path, e.into_io_error().unwrap_or_else(|| std::io::Error::other("walk error")))
        })?;
        if !entry.file_type().is_file() {
            continue;
        }
        let rel = relative(root, entry.path());
        if excludes.is_match(&rel) {
            continue;
        }
        paths.push((rel, entry.path().to_path_buf()));
    }
    paths.sort_by(|a, b| a.0.cmp(&b.0));
    let manifest_path = paths
        .iter()
        .map(|(rel, _)| rel)
        .find(|rel| rel.rsplit('/').next() == Some(MANIFEST_FILE_NAME))
        .cloned()
        .ok_or_else(|| Error::NoManifest(root.to_path_buf()))?;

    let files: Vec<SourceFile> = paths
        .par_iter()
        .map(|(rel, abs)| {
            let content = std::fs::read(abs).map_err(|e| Error::io(abs, e))?;
            Ok(SourceFile::new(rel.clone(), classify(rel, *rel == manifest_path), content))
        })
        .collect::<Result<_>>()?;

    enum Parsed {
        Java(Box<SyntaxView>),
        Xml(XmlView),
        Failed(String),
        Skip,
    }
    let parsed: Vec<Parsed> = files
        .par_iter()
        .map(|f| match f.kind {
            FileKind::JavaSource => match java::parse_java(f) {
                Ok(v) => Parsed::Java(Box::new(v)),
                Err(e) => Parsed::Failed(e.to_string()),
            },
            k if k.is_xml() => match xml::parse_xml(f) {
                Ok(v) => Parsed::Xml(v),
                Err(e) => Parsed::Failed(e.to_string()),
            },
            _ => Parsed::Skip,
        })
        .collect();

    let mut files = files;
    let mut java_views = BTreeMap::new();
    let mut xml_views = BTreeMap::new();
    let mut diagnostics = Vec::new();
    for (file, parsed) in files.iter_mut().zip(parsed) {
        match parsed {
            Parsed::Java(v) => {
                java_views.insert(file.relative_path.clone(), *v);
            }
            Parsed::Xml(v) => {
                xml_views.insert(file.relative_path.clone(), v);
            }
            Parsed::Failed(message) => {
                file.kind = FileKind::Unclassified;
                diagnostics.push(Diagnostic { file: file.relative_path.clone(), message });
            }
            Parsed::Skip => {}
        }
    }

    let (package, activities) = match xml_views.get(&manifest_path) {
        Some(view) => read_manifest(view),
        None => (None, Vec::new()),
    };
    let activity_registry = activities.iter().map(|a| a.qualified_name.clone()).collect();
    let id_registry = java_views
        .values()
        .flat_map(|v| v.resource_refs.iter())
        .filter(|r| r.kind == "id")
        .map(|r| r.name.clone())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();

    Ok(SourceModel {
        root: root.to_path_buf(),
        files,
        java_views,
        xml_views,
        manifest_path,
        package,
        activities,
        activity_registry,
        id_registry,
        diagnostics,
    })
}

/// Resolves a manifest class reference against the package.
pub fn qualify(package: Option<&str>, name: &str) -> String {
    match package {
        Some(pkg) if name.starts_with('.') => format!("{pkg}{name}"),
        Some(pkg) if !name.contains('.') => format!("{pkg}.{name}"),
        _ => name.to_string(),
    }
}

fn read_manifest(view: &XmlView) -> (Option<String>, Vec<ActivityDecl>) {
    let package = view
        .elements
        .iter()
        .find(|e| e.tag_name == "manifest")
        .and_then(|e| e.attr("package"))
        .map(|a| a.value.clone());
    let activities = view
        .elements
        .iter()
        .enumerate()
        .filter(|(_, e)| e.tag_name == "activity")
        .filter_map(|(idx, e)| {
            let name = e.attr_local("name")?.value.clone();
            Some(ActivityDecl {
                qualified_name: qualify(package.as_deref(), &name),
                name,
                element: idx,
                is_launcher: launcher_filter(view, idx).is_some(),
            })
        })
        .collect();
    (package, activities)
}

/// Index of the MAIN/LAUNCHER `<intent-filter>` directly under `activity`.
pub fn launcher_filter(view: &XmlView, activity: usize) -> Option<usize> {
    view.children(activity).find_map(|(fi, f)| {
        if f.tag_name != "intent-filter" {
            return None;
        }
        let has = |tag: &str, value: &str| {
            view.children(fi)
                .any(|(_, c)| c.tag_name == tag && c.attr_local("name").map(|a| a.value.as_str()) == Some(value))
        };
        (has("action", "android.intent.action.MAIN") && has("category", "android.intent.category.LAUNCHER"))
            .then_some(fi)
    })
}

impl SourceModel {
    pub fn file(&self, relative_path: &str) -> Option<&SourceFile> {
        self.files.binary_search_by(|f| f.relative_path.as_str().cmp(relative_path)).ok().map(|i| &self.files[i])
    }

    pub fn manifest(&self) -> Option<(&SourceFile, &XmlView)> {
        Some((self.file(&self.manifest_path)?, self.xml_views.get(&self.manifest_path)?))
    }

    /// The MAIN/LAUNCHER activity, if the manifest declares one.
    pub fn launcher_activity(&self) -> Option<&ActivityDecl> {
        self.activities.iter().find(|a| a.is_launcher)
    }

    pub fn files_of_kind(&self, kind: FileKind) -> impl Iterator<Item = &SourceFile> + '_ {
        self.files.iter().filter(move |f| f.kind == kind)
    }

    /// Byte-stable serialization used to check scan determinism.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("model serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classification_rules() {
        assert_eq!(classify("AndroidManifest.xml", true), FileKind::Manifest);
        assert_eq!(classify("flavor/AndroidManifest.xml", false), FileKind::OtherResource);
        assert_eq!(classify("src/com/a/Main.java", false), FileKind::JavaSource);
        assert_eq!(classify("res/values/strings.xml", false), FileKind::StringsResource);
        assert_eq!(classify("app/src/main/res/values-fr/strings.xml", false), FileKind::StringsResource);
        assert_eq!(classify("res/values/colors.xml", false), FileKind::ColorResource);
        assert_eq!(classify("res/layout/main.xml", false), FileKind::LayoutResource);
        assert_eq!(classify("res/layout-land/main.xml", false), FileKind::LayoutResource);
        assert_eq!(classify("res/drawable/icon.png", false), FileKind::OtherResource);
        assert_eq!(classify("res/values/dimens.xml", false), FileKind::OtherResource);
        assert_eq!(classify("README.md", false), FileKind::Unclassified);
        assert_eq!(classify("strings.xml", false), FileKind::Unclassified);
    }

    #[test]
    fn qualification() {
        assert_eq!(qualify(Some("com.a"), ".Main"), "com.a.Main");
        assert_eq!(qualify(Some("com.a"), "Main"), "com.a.Main");
        assert_eq!(qualify(Some("com.a"), "org.b.Main"), "org.b.Main");
        assert_eq!(qualify(None, ".Main"), ".Main");
    }
}
