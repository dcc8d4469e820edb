//! Detectors for operators that act on the manifest and XML resources.

use super::{keys, Aux, Candidate};
use crate::catalog::{self, OperatorId};
use crate::project::{FileKind, SourceFile, SourceModel};
use crate::span::Span;
use crate::syntax::xml::{XmlElement, XmlView};

pub(super) fn detect(
    model: &SourceModel,
    file: &SourceFile,
    view: &XmlView,
    ops: &[OperatorId],
    out: &mut Vec<Candidate>,
) {
    let src = &file.content[..];
    let is_manifest = file.relative_path == model.manifest_path;
    for &op in ops {
        use OperatorId::*;
        match (op, file.kind) {
            (ActivityNotDefined, FileKind::Manifest) if is_manifest => activity_not_defined(model, view, out),
            (InvalidActivityName, FileKind::Manifest) if is_manifest => invalid_activity_name(model, view, out),
            (InvalidLabel, FileKind::Manifest) if is_manifest => invalid_label(view, out),
            (WrongMainActivity, FileKind::Manifest) if is_manifest => wrong_main_activity(model, view, src, out),
            (MissingPermissionManifest, FileKind::Manifest) if is_manifest => missing_permission(view, out),
            (SDKVersion, FileKind::Manifest) if is_manifest => sdk_version(view, out),
            (WrongStringResource, FileKind::StringsResource) => wrong_string(view, src, out),
            (InvalidColor, FileKind::LayoutResource | FileKind::ColorResource) => invalid_color(view, src, out),
            _ => {}
        }
    }
}

fn candidate(op: OperatorId, target: Span, aux: Aux) -> Candidate {
    Candidate { op, target, aux }
}

fn aux1(key: &str, value: impl Into<String>) -> Aux {
    let mut aux = Aux::new();
    aux.insert(key.into(), value.into());
    aux
}

fn activity_not_defined(model: &SourceModel, view: &XmlView, out: &mut Vec<Candidate>) {
    for a in model.activities.iter().filter(|a| !a.is_launcher) {
        let el = &view.elements[a.element];
        let mut aux = aux1("activity", a.qualified_name.clone());
        aux.insert(keys::REPLACEMENT.into(), String::new());
        out.push(candidate(OperatorId::ActivityNotDefined, el.element_span, aux));
    }
}

fn invalid_activity_name(model: &SourceModel, view: &XmlView, out: &mut Vec<Candidate>) {
    for a in model.activities.iter().filter(|a| !a.is_launcher) {
        let Some(attr) = view.elements[a.element].attr_local("name") else { continue };
        let chars: Vec<char> = attr.value.chars().collect();
        if !chars.windows(2).any(|w| w[0] != w[1]) {
            continue;
        }
        out.push(candidate(
            OperatorId::InvalidActivityName,
            attr.value_span,
            aux1("activity", a.qualified_name.clone()),
        ));
    }
}

fn invalid_label(view: &XmlView, out: &mut Vec<Candidate>) {
    for el in &view.elements {
        if let Some(attr) = el.attributes.iter().find(|a| a.name == "android:label") {
            out.push(candidate(OperatorId::InvalidLabel, attr.value_span, aux1("element", el.tag_name.clone())));
        }
    }
}

fn missing_permission(view: &XmlView, out: &mut Vec<Candidate>) {
    for el in view.elements.iter().filter(|e| e.tag_name == "uses-permission") {
        let mut aux = aux1("permission", el.attr_local("name").map(|a| a.value.clone()).unwrap_or_default());
        aux.insert(keys::REPLACEMENT.into(), String::new());
        out.push(candidate(OperatorId::MissingPermissionManifest, el.element_span, aux));
    }
}

fn sdk_version(view: &XmlView, out: &mut Vec<Candidate>) {
    for el in view.elements.iter().filter(|e| e.tag_name == "uses-sdk") {
        for &name in catalog::SDK_ATTRIBUTES {
            let Some(attr) = el.attr_local(name) else { continue };
            if attr.value.is_empty() || !attr.value.bytes().all(|b| b.is_ascii_digit()) {
                continue;
            }
            let mut aux = aux1("attribute", name);
            aux.insert("value".into(), attr.value.clone());
            out.push(candidate(OperatorId::SDKVersion, attr.value_span, aux));
        }
    }
}

fn wrong_main_activity(model: &SourceModel, view: &XmlView, src: &[u8], out: &mut Vec<Candidate>) {
    let acts = &model.activities;
    if acts.len() < 2 {
        return;
    }
    for (i, a) in acts.iter().enumerate() {
        let Some(filter) = crate::project::launcher_filter(view, a.element) else { continue };
        let to = &acts[(i + 1) % acts.len()];
        let target_el = &view.elements[to.element];
        let filter_span = view.elements[filter].element_span;
        let filter_text = String::from_utf8_lossy(filter_span.slice(src)).into_owned();
        let mut aux = aux1("from", a.qualified_name.clone());
        aux.insert("to".into(), to.qualified_name.clone());
        aux.insert(keys::REPLACEMENT.into(), String::new());
        match target_el.content_span {
            Some(content) => {
                aux.insert(keys::INSERT_AT.into(), content.end.to_string());
                aux.insert(keys::INSERT.into(), filter_text);
            }
            None => {
                // `<activity .../>` becomes `<activity ...>filter</activity>`
                let close = Span::new(target_el.element_span.end - 2, target_el.element_span.end);
                aux.insert(keys::ALSO_DELETE.into(), super::format_spans(&[close]));
                aux.insert(keys::INSERT_AT.into(), close.start.to_string());
                aux.insert(keys::INSERT.into(), format!(">{filter_text}</{}>", target_el.tag_name));
            }
        }
        out.push(candidate(OperatorId::WrongMainActivity, filter_span, aux));
    }
}

fn wrong_string(view: &XmlView, src: &[u8], out: &mut Vec<Candidate>) {
    for (idx, el) in view.elements.iter().enumerate() {
        if el.tag_name != "string" || el.parent.map(|p| view.elements[p].tag_name.as_str()) != Some("resources") {
            continue;
        }
        let name = el.attr("name").map(|a| a.value.clone()).unwrap_or_default();
        let mut aux = aux1("name", name);
        let Some(content) = el.content_span else {
            let close = Span::new(el.element_span.end - 2, el.element_span.end);
            aux.insert(keys::REPLACEMENT.into(), format!(">{}</string>", catalog::MUTANT_SUFFIX));
            out.push(candidate(OperatorId::WrongStringResource, close, aux));
            continue;
        };
        let raw = content.slice(src);
        let has_children = view.children(idx).next().is_some();
        let reversed = match std::str::from_utf8(raw) {
            Ok(text) if !has_children && !text.contains("<![CDATA[") && !text.contains("<!--") => reverse_units(text),
            _ => None,
        };
        let original = String::from_utf8_lossy(raw);
        let replacement = match reversed {
            Some(r) if r != original && !r.trim_start().starts_with(['@', '?']) && !r.trim().is_empty() => r,
            _ => format!("{original}{}", catalog::MUTANT_SUFFIX),
        };
        aux.insert(keys::REPLACEMENT.into(), replacement);
        out.push(candidate(OperatorId::WrongStringResource, content, aux));
    }
}

/// Reverses a raw resource string, keeping escapes, entities and format
/// specifiers intact as single units.
pub(crate) fn reverse_units(text: &str) -> Option<String> {
    let units = string_units(text)?;
    Some(units.into_iter().rev().collect())
}

fn string_units(text: &str) -> Option<Vec<&str>> {
    let b = text.as_bytes();
    let mut units = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let len = match b[i] {
            b'\\' => {
                if b.get(i + 1) == Some(&b'u') {
                    6.min(b.len() - i)
                } else if i + 1 < b.len() {
                    1 + text[i + 1..].chars().next().map_or(1, char::len_utf8)
                } else {
                    return None;
                }
            }
            b'&' => match text[i..].find(';') {
                Some(end)
                    if end <= 10 && text[i + 1..i + end].bytes().all(|c| c.is_ascii_alphanumeric() || c == b'#') =>
                {
                    end + 1
                }
                _ => 1,
            },
            b'%' => format_spec_len(&b[i..]),
            _ => text[i..].chars().next().map_or(1, char::len_utf8),
        };
        units.push(&text[i..i + len]);
        i += len;
    }
    Some(units)
}

/// Length of a `%[index$][flags][width][.precision]conversion` specifier, or 1.
fn format_spec_len(b: &[u8]) -> usize {
    let mut j = 1;
    let digits = |j: &mut usize| {
        while *j < b.len() && b[*j].is_ascii_digit() {
            *j += 1;
        }
    };
    let save = j;
    digits(&mut j);
    if b.get(j) == Some(&b'$') {
        j += 1;
    } else {
        j = save;
    }
    while j < b.len() && b"-#+ 0,(<".contains(&b[j]) {
        j += 1;
    }
    digits(&mut j);
    if b.get(j) == Some(&b'.') {
        j += 1;
        digits(&mut j);
    }
    match b.get(j) {
        Some(c) if c.is_ascii_alphabetic() || *c == b'%' => j + 1,
        _ => 1,
    }
}

fn is_hex_color(value: &str) -> bool {
    value.strip_prefix('#').is_some_and(|h| (h.len() == 6 || h.len() == 8) && h.bytes().all(|c| c.is_ascii_hexdigit()))
}

/// Each hex digit replaced by its 15-complement, keeping letter case.
pub(crate) fn complement_color(value: &str) -> String {
    let upper = value.bytes().any(|c| c.is_ascii_uppercase());
    let mut out = String::from("#");
    for c in value[1..].chars() {
        let d = 15 - c.to_digit(16).expect("hex digit");
        let ch = char::from_digit(d, 16).expect("nibble");
        out.push(if upper { ch.to_ascii_uppercase() } else { ch });
    }
    out
}

fn invalid_color(view: &XmlView, src: &[u8], out: &mut Vec<Candidate>) {
    for el in &view.elements {
        for attr in &el.attributes {
            if is_hex_color(&attr.value) {
                let mut aux = aux1("attribute", attr.name.clone());
                aux.insert(keys::REPLACEMENT.into(), complement_color(&attr.value));
                out.push(candidate(OperatorId::InvalidColor, attr.value_span, aux));
            }
        }
        if el.tag_name == "color" {
            if let Some(span) = trimmed_content(el, src) {
                let value = String::from_utf8_lossy(span.slice(src)).into_owned();
                if is_hex_color(&value) {
                    let mut aux = aux1("color", el.attr("name").map(|a| a.value.clone()).unwrap_or_default());
                    aux.insert(keys::REPLACEMENT.into(), complement_color(&value));
                    out.push(candidate(OperatorId::InvalidColor, span, aux));
                }
            }
        }
    }
}

fn trimmed_content(el: &XmlElement, src: &[u8]) -> Option<Span> {
    let c = el.content_span?;
    let bytes = c.slice(src);
    let start = bytes.iter().position(|b| !b.is_ascii_whitespace())?;
    let end = bytes.iter().rposition(|b| !b.is_ascii_whitespace())? + 1;
    Some(Span::new(c.start + start, c.start + end))
}
