//! Span-preserving XML reader for manifests and resource files.
//!
//! Attribute values and text are kept raw (entities are not decoded) so
//! that every recorded span slices back to exactly the value the view
//! reports.

use serde::{Deserialize, Serialize};

use crate::span::Span;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct XmlAttribute {
    pub name: String,
    /// Raw text between the quotes.
    pub value: String,
    pub name_span: Span,
    pub value_span: Span,
    /// Name through closing quote.
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct XmlElement {
    pub tag_name: String,
    pub attributes: Vec<XmlAttribute>,
    /// `<` of the start tag through the `>` of the end tag (or of `/>`).
    pub element_span: Span,
    pub start_tag_span: Span,
    /// Bytes between the start and end tags; `None` for self-closing elements.
    pub content_span: Option<Span>,
    pub self_closing: bool,
    pub parent: Option<usize>,
    pub depth: usize,
}

impl XmlElement {
    pub fn attr(&self, name: &str) -> Option<&XmlAttribute> {
        self.attributes.iter().find(|a| a.name == name)
    }

    /// `android:name` style lookup that ignores the namespace prefix.
    pub fn attr_local(&self, local: &str) -> Option<&XmlAttribute> {
        self.attributes.iter().find(|a| a.name == local || a.name.rsplit(':').next() == Some(local))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct XmlView {
    /// Document order.
    pub elements: Vec<XmlElement>,
    /// False when the document parsed but has more than one root element
    /// or stray text outside the root.
    pub well_formed: bool,
}

impl XmlView {
    pub fn children(&self, parent: usize) -> impl Iterator<Item = (usize, &XmlElement)> + '_ {
        self.elements.iter().enumerate().filter(move |(_, e)| e.parent == Some(parent))
    }

    /// True if `idx` has an ancestor satisfying `pred`.
    pub fn has_ancestor(&self, idx: usize, pred: impl Fn(&XmlElement) -> bool) -> bool {
        let mut cur = self.elements[idx].parent;
        while let Some(p) = cur {
            if pred(&self.elements[p]) {
                return true;
            }
            cur = self.elements[p].parent;
        }
        false
    }

    pub fn descendants(&self, idx: usize) -> impl Iterator<Item = (usize, &XmlElement)> + '_ {
        let span = self.elements[idx].element_span;
        self.elements.iter().enumerate().skip(idx + 1).take_while(move |(_, e)| span.contains(e.element_span))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XmlError {
    pub offset: usize,
    pub message: String,
}

fn is_name_byte(b: u8) -> bool {
    b.is_ascii_alphanumeric() || matches!(b, b'_' | b':' | b'-' | b'.') || b >= 0x80
}

pub fn parse(src: &[u8]) -> Result<XmlView, XmlError> {
    let mut view = XmlView { elements: Vec::new(), well_formed: true };
    let mut stack: Vec<usize> = Vec::new();
    let mut roots = 0usize;
    let mut i = 0usize;
    let n = src.len();
    let err = |offset: usize, message: &str| Err(XmlError { offset, message: message.to_string() });
    let find = |from: usize, pat: &[u8]| -> Option<usize> {
        src[from..].windows(pat.len()).position(|w| w == pat).map(|p| from + p)
    };
    while i < n {
        if src[i] != b'<' {
            let start = i;
            while i < n && src[i] != b'<' {
                i += 1;
            }
            if stack.is_empty()
                && src[start..i].iter().any(|b| !b.is_ascii_whitespace())
                && !(start == 0 && src.starts_with(b"\xef\xbb\xbf"))
            {
                view.well_formed = false;
            }
            continue;
        }
        let rest = &src[i..];
        if rest.starts_with(b"<!--") {
            match find(i + 4, b"-->") {
                Some(e) => i = e + 3,
                None => return err(i, "unterminated comment"),
            }
        } else if rest.starts_with(b"<![CDATA[") {
            if stack.is_empty() {
                return err(i, "CDATA outside root element");
            }
            match find(i + 9, b"]]>") {
                Some(e) => i = e + 3,
                None => return err(i, "unterminated CDATA section"),
            }
        } else if rest.starts_with(b"<?") {
            match find(i + 2, b"?>") {
                Some(e) => i = e + 2,
                None => return err(i, "unterminated processing instruction"),
            }
        } else if rest.starts_with(b"<!") {
            // DOCTYPE, possibly with an internal subset
            let mut j = i + 2;
            let mut bracket = 0i32;
            loop {
                match src.get(j) {
                    None => return err(i, "unterminated declaration"),
                    Some(b'[') => bracket += 1,
                    Some(b']') => bracket -= 1,
                    Some(b'>') if bracket <= 0 => break,
                    _ => {}
                }
                j += 1;
            }
            i = j + 1;
        } else if rest.starts_with(b"</") {
            let name_start = i + 2;
            let mut j = name_start;
            while j < n && is_name_byte(src[j]) {
                j += 1;
            }
            let name = &src[name_start..j];
            while j < n && src[j].is_ascii_whitespace() {
                j += 1;
            }
            if j >= n || src[j] != b'>' {
                return err(i, "malformed end tag");
            }
            let Some(open) = stack.pop() else { return err(i, "end tag without start tag") };
            let el = &mut view.elements[open];
            if el.tag_name.as_bytes() != name {
                return err(
                    i,
                    &format!("end tag `{}` does not match `{}`", String::from_utf8_lossy(name), el.tag_name),
                );
            }
            el.content_span = Some(Span::new(el.start_tag_span.end, i));
            el.element_span.end = j + 1;
            i = j + 1;
        } else {
            let start = i;
            let name_start = i + 1;
            let mut j = name_start;
            while j < n && is_name_byte(src[j]) {
                j += 1;
            }
            if j == name_start {
                return err(i, "expected element name");
            }
            let tag_name = String::from_utf8_lossy(&src[name_start..j]).into_owned();
            let mut attributes = Vec::new();
            let self_closing;
            loop {
                while j < n && src[j].is_ascii_whitespace() {
                    j += 1;
                }
                if j >= n {
                    return err(start, "unterminated start tag");
                }
                if src[j] == b'>' {
                    self_closing = false;
                    j += 1;
                    break;
                }
                if src[j] == b'/' {
                    if src.get(j + 1) != Some(&b'>') {
                        return err(j, "expected `/>`");
                    }
                    self_closing = true;
                    j += 2;
                    break;
                }
                let an_start = j;
                while j < n && is_name_byte(src[j]) {
                    j += 1;
                }
                if j == an_start {
                    return err(j, "expected attribute name");
                }
                let an_end = j;
                while j < n && src[j].is_ascii_whitespace() {
                    j += 1;
                }
                if src.get(j) != Some(&b'=') {
                    return err(j, "expected `=` after attribute name");
                }
                j += 1;
                while j < n && src[j].is_ascii_whitespace() {
                    j += 1;
                }
                let quote = match src.get(j) {
                    Some(&q @ (b'"' | b'\'')) => q,
                    _ => return err(j, "expected quoted attribute value"),
                };
                let v_start = j + 1;
                let Some(v_end) = src[v_start..].iter().position(|&b| b == quote).map(|p| v_start + p) else {
                    return err(j, "unterminated attribute value");
                };
                if src[v_start..v_end].contains(&b'<') {
                    return err(v_start, "`<` in attribute value");
                }
                attributes.push(XmlAttribute {
                    name: String::from_utf8_lossy(&src[an_start..an_end]).into_owned(),
                    value: String::from_utf8_lossy(&src[v_start..v_end]).into_owned(),
                    name_span: Span::new(an_start, an_end),
                    value_span: Span::new(v_start, v_end),
                    span: Span::new(an_start, v_end + 1),
                });
                j = v_end + 1;
            }
            if stack.is_empty() {
                roots += 1;
                if roots > 1 {
                    view.well_formed = false;
                }
            }
            let idx = view.elements.len();
            view.elements.push(XmlElement {
                tag_name,
                attributes,
                element_span: Span::new(start, j),
                start_tag_span: Span::new(start, j),
                content_span: None,
                self_closing,
                parent: stack.last().copied(),
                depth: stack.len(),
            });
            if !self_closing {
                stack.push(idx);
            }
            i = j;
        }
    }
    if let Some(open) = stack.last() {
        return err(view.elements[*open].element_span.start, "unclosed element at end of file");
    }
    if roots == 0 {
        return err(0, "no root element");
    }
    Ok(view)
}

/// Parses an XML-kind source file into its element view.
pub fn parse_xml(file: &crate::project::SourceFile) -> crate::error::Result<XmlView> {
    parse(&file.content).map_err(|e| file.parse_failure(e.offset, e.message))
}
