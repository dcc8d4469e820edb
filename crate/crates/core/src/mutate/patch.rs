//! Reversible byte-splice patches.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::span::Span;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edit {
    pub file: String,
    /// Range in the original file.
    pub span: Span,
    #[serde(with = "crate::bytes_serde")]
    pub original: Vec<u8>,
    #[serde(with = "crate::bytes_serde")]
    pub replacement: Vec<u8>,
}

/// Edits sorted by `(file, span)`, pairwise non-overlapping.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Patch {
    pub edits: Vec<Edit>,
}

impl Patch {
    /// Builds a patch, sorting edits and rejecting overlaps.
    pub fn new(mut edits: Vec<Edit>) -> Result<Self> {
        edits.sort_by(|a, b| (&a.file, a.span).cmp(&(&b.file, b.span)));
        for w in edits.windows(2) {
            let (a, b) = (&w[0], &w[1]);
            // two insertions at one offset have no defined order
            let same_point = a.span.is_empty() && b.span.is_empty() && a.span.start == b.span.start;
            if a.file == b.file && (a.span.end > b.span.start || same_point) {
                return Err(Error::PatchConflict { file: b.file.clone(), start: b.span.start, end: b.span.end });
            }
        }
        Ok(Patch { edits })
    }

    pub fn files(&self) -> BTreeSet<&str> {
        self.edits.iter().map(|e| e.file.as_str()).collect()
    }

    fn edits_for<'a>(&'a self, file: &'a str) -> impl Iterator<Item = &'a Edit> + 'a {
        self.edits.iter().filter(move |e| e.file == file)
    }

    /// Applies the edits for `file` to its original content.
    pub fn apply(&self, file: &str, original: &[u8]) -> Result<Vec<u8>> {
        let mut out = Vec::with_capacity(original.len() + 64);
        let mut pos = 0;
        for e in self.edits_for(file) {
            if e.span.end > original.len() || e.span.slice(original) != e.original.as_slice() {
                return Err(Error::PatchConflict { file: file.into(), start: e.span.start, end: e.span.end });
            }
            out.extend_from_slice(&original[pos..e.span.start]);
            out.extend_from_slice(&e.replacement);
            pos = e.span.end;
        }
        out.extend_from_slice(&original[pos..]);
        Ok(out)
    }

    /// The patch that turns the mutated content back into the original.
    pub fn inverse(&self) -> Patch {
        let mut edits = Vec::with_capacity(self.edits.len());
        let mut shift: isize = 0;
        let mut current: Option<&str> = None;
        for e in &self.edits {
            if current != Some(e.file.as_str()) {
                current = Some(&e.file);
                shift = 0;
            }
            let start = (e.span.start as isize + shift) as usize;
            edits.push(Edit {
                file: e.file.clone(),
                span: Span::new(start, start + e.replacement.len()),
                original: e.replacement.clone(),
                replacement: e.original.clone(),
            });
            shift += e.replacement.len() as isize - e.original.len() as isize;
        }
        Patch { edits }
    }

    /// Restores the original content of `file` from its mutated content.
    pub fn revert(&self, file: &str, mutated: &[u8]) -> Result<Vec<u8>> {
        self.inverse().apply(file, mutated)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edit(file: &str, s: usize, e: usize, orig: &[u8], rep: &[u8]) -> Edit {
        Edit { file: file.into(), span: Span::new(s, e), original: orig.to_vec(), replacement: rep.to_vec() }
    }

    #[test]
    fn apply_and_revert() {
        let src = b"<a><b/></a>";
        let p = Patch::new(vec![edit("x", 7, 7, b"", b"<c/>"), edit("x", 3, 7, b"<b/>", b"")]).unwrap();
        let out = p.apply("x", src).unwrap();
        assert_eq!(out, b"<a><c/></a>");
        assert_eq!(p.revert("x", &out).unwrap(), src);
    }

    #[test]
    fn insertion_before_deletion_at_same_offset() {
        let src = b"<x/>";
        let p = Patch::new(vec![edit("f", 2, 4, b"/>", b""), edit("f", 2, 2, b"", b"></x>")]).unwrap();
        assert_eq!(p.apply("f", src).unwrap(), b"<x></x>");
        assert_eq!(p.revert("f", b"<x></x>").unwrap(), src);
    }

    #[test]
    fn overlap_and_conflict_are_errors() {
        assert!(Patch::new(vec![edit("f", 0, 3, b"abc", b""), edit("f", 2, 4, b"cd", b"")]).is_err());
        assert!(Patch::new(vec![edit("f", 1, 1, b"", b"x"), edit("f", 1, 1, b"", b"y")]).is_err());
        let p = Patch::new(vec![edit("f", 0, 1, b"z", b"")]).unwrap();
        assert!(matches!(p.apply("f", b"abc"), Err(Error::PatchConflict { .. })));
    }
}
