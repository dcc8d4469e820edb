mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::fs;

use common::{fixture, model, profile, FIXTURES};
use droidmut_core::catalog::{Category, OperatorId};
use droidmut_core::pfp::{extract_pfp, PfpConfig, PfpEntry};
use proptest::prelude::*;
use regex::Regex;

fn target_text<'a>(m: &'a droidmut_core::project::SourceModel, e: &PfpEntry) -> &'a [u8] {
    e.target.slice(&m.file(&e.file).unwrap().content)
}

#[test]
fn omni_entries_match_hand_annotations() {
    let m = model("omni");
    let pfp = profile(&m);
    let text = fs::read_to_string(fixture("omni").join("expected_locations.tsv")).unwrap();
    let mut expected = BTreeMap::new();
    for line in text.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()) {
        let cols: Vec<&str> = line.split('\t').collect();
        assert_eq!(cols.len(), 4, "bad annotation line {line:?}");
        let op: OperatorId = cols[0].parse().unwrap();
        expected.insert(op, (cols[1].to_string(), cols[2].parse::<usize>().unwrap(), cols[3].to_string()));
    }
    assert_eq!(expected.len(), 35);
    assert_eq!(pfp.entries.len(), 35);
    let ops: BTreeSet<OperatorId> = pfp.entries.iter().map(|e| e.operator_id).collect();
    assert_eq!(ops, OperatorId::ALL.iter().copied().collect());
    for e in &pfp.entries {
        let (file, line, snippet) = &expected[&e.operator_id];
        assert_eq!((&e.file, e.line), (file, *line), "{}", e.operator_id);
        // deletion targets may carry the separating whitespace
        let got = String::from_utf8_lossy(target_text(&m, e)).trim().to_string();
        match snippet.strip_suffix("...") {
            Some(prefix) => assert!(got.starts_with(prefix), "{}: {got:?}", e.operator_id),
            None => assert_eq!(&got, snippet, "{}", e.operator_id),
        }
    }
}

#[test]
fn fixtures_scan_cleanly() {
    for name in FIXTURES {
        let m = model(name);
        assert!(m.diagnostics.is_empty(), "{name}: {:?}", m.diagnostics);
        let pfp = profile(&m);
        assert_eq!(pfp.diagnostics.unparsed_files, 0, "{name}");
        assert!(!pfp.entries.is_empty(), "{name}");
    }
}

#[test]
fn profiles_are_deterministic() {
    for name in FIXTURES {
        let a = profile(&model(name)).to_json();
        let b = profile(&model(name)).to_json();
        assert_eq!(a, b, "{name}");
    }
}

#[test]
fn entries_are_ordered_and_keys_unique() {
    for name in FIXTURES {
        let pfp = profile(&model(name));
        let keys: BTreeSet<&str> = pfp.entries.iter().map(|e| e.stable_key.as_str()).collect();
        assert_eq!(keys.len(), pfp.entries.len(), "{name}");
        for w in pfp.entries.windows(2) {
            let k = |e: &PfpEntry| (e.file.clone(), e.target.start, e.operator_id.as_str());
            assert!(k(&w[0]) <= k(&w[1]), "{name}: {:?} after {:?}", w[1].stable_key, w[0].stable_key);
        }
    }
}

#[test]
fn final_cursor_is_never_nullified() {
    let m = model("realistic");
    let pfp = profile(&m);
    let cursors: Vec<String> = pfp
        .entries
        .iter()
        .filter(|e| e.operator_id == OperatorId::ClosingNullCursor)
        .map(|e| String::from_utf8_lossy(target_text(&m, e)).into_owned())
        .collect();
    // `final Cursor c` in TaskDb.loadAll is skipped; the two non-final cursors are not
    assert_eq!(cursors, vec!["cursor.close()", "shared.close()"]);
}

#[test]
fn main_activity_exclusion_drops_only_launcher_intents_and_gui() {
    let m = model("omni");
    let all = profile(&m);
    let excluded = extract_pfp(&m, OperatorId::ALL, &PfpConfig { exclude_main_activity: true });
    let launcher_code = |e: &PfpEntry| {
        e.file.ends_with("MainActivity.java")
            && matches!(e.operator_id.category(), Category::ActivityIntent | Category::Gui)
    };
    let kept: Vec<&PfpEntry> = all.entries.iter().filter(|e| !launcher_code(e)).collect();
    assert!(kept.len() < all.entries.len());
    assert_eq!(excluded.entries.iter().collect::<Vec<_>>(), kept);
}

/// Independent oracle: call sites found by regular expressions over the
/// comment-stripped source of a 500-line activity.
#[test]
fn large_activity_matches_regex_call_sites() {
    let m = model("large");
    let pfp = profile(&m);
    let rel = "src/com/acme/catalog/CatalogActivity.java";
    let src = fs::read_to_string(fixture("large").join(rel)).unwrap();
    assert_eq!(src.lines().count(), 500);
    let blank = |c: &regex::Captures| c[0].chars().map(|ch| if ch == '\n' { '\n' } else { ' ' }).collect::<String>();
    let code = Regex::new(r"(?s)/\*.*?\*/").unwrap().replace_all(&src, blank).into_owned();
    let code = Regex::new(r"//[^\n]*").unwrap().replace_all(&code, blank).into_owned();

    let lines_of = |pattern: &str| -> Vec<usize> {
        let re = Regex::new(pattern).unwrap();
        code.lines().enumerate().filter(|(_, l)| re.is_match(l)).map(|(i, _)| i + 1).collect()
    };
    let entry_lines = |op: OperatorId| -> Vec<usize> {
        pfp.entries.iter().filter(|e| e.operator_id == op && e.file == rel).map(|e| e.line).collect()
    };
    let cases: &[(&str, &[OperatorId])] = &[
        (
            r"= \(TextView\) findViewById\(R\.id\.\w+\);",
            &[OperatorId::FindViewByIdReturnsNull, OperatorId::ViewComponentNotVisible, OperatorId::InvalidIDFindView],
        ),
        (r#"\.putExtra\("\w+","#, &[OperatorId::InvalidKeyIntentPutExtra]),
        (r#"Uri\.parse\(""#, &[OperatorId::InvalidURI]),
        (r"new Date\(", &[OperatorId::InvalidDate]),
        (r"new Intent\(", &[OperatorId::NullIntent]),
        (r"\.setConnectTimeout\(", &[OperatorId::LongConnectionTimeOut]),
        (r"\.openConnection\(\)", &[OperatorId::NullBackEndServiceReturn, OperatorId::LengthyBackEndService]),
        (r#"\.execSQL\(""#, &[OperatorId::InvalidSQLQuery]),
    ];
    for (pattern, ops) in cases {
        let expected = lines_of(pattern);
        assert!(!expected.is_empty(), "{pattern}");
        for &op in *ops {
            assert_eq!(entry_lines(op), expected, "{op} vs /{pattern}/");
        }
    }
    // values of putExtra may sit on the following line
    assert_eq!(entry_lines(OperatorId::NullValueIntentPutExtra).len(), lines_of(r"\.putExtra\(").len());
}

fn any_operator_subset() -> impl Strategy<Value = Vec<OperatorId>> {
    proptest::sample::subsequence(OperatorId::ALL.to_vec(), 0..=OperatorId::ALL.len())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Restricting the operator set filters the full profile and changes nothing else.
    #[test]
    fn operator_subsets_filter_the_full_profile(ops in any_operator_subset(), which in 0..FIXTURES.len()) {
        let m = model(FIXTURES[which]);
        let full = profile(&m);
        let sub = extract_pfp(&m, &ops, &PfpConfig::default());
        let expected: Vec<&PfpEntry> = full.entries.iter().filter(|e| ops.contains(&e.operator_id)).collect();
        prop_assert_eq!(sub.entries.iter().collect::<Vec<_>>(), expected);
    }
}

const DECOY_MANIFEST: &str = r#"<?xml version="1.0" encoding="utf-8"?>
<manifest xmlns:android="http://schemas.android.com/apk/res/android" package="p.q">
    <application><activity android:name=".A" /></application>
</manifest>
"#;

#[derive(Debug, Clone)]
enum Stmt {
    RealUri,
    RealDate,
    LineComment,
    BlockComment,
    StringDecoy,
}

fn stmt_text(s: &Stmt) -> &'static str {
    match s {
        Stmt::RealUri => "        android.net.Uri u = android.net.Uri.parse(\"http://a.b\");",
        Stmt::RealDate => "        java.util.Date d = new java.util.Date();",
        Stmt::LineComment => "        // Uri.parse(\"x\") and new Date() and new Intent(this, A.class)",
        Stmt::BlockComment => "        /* android.net.Uri.parse(\"y\"); new java.util.Date(); */",
        Stmt::StringDecoy => "        String s = \"Uri.parse(\\\"z\\\") new Date() findViewById(R.id.x)\";",
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// Text inside comments and string literals never becomes a target, and
    /// every real call site does.
    #[test]
    fn comments_and_strings_are_not_call_sites(
        stmts in proptest::collection::vec(
            prop_oneof![
                Just(Stmt::RealUri), Just(Stmt::RealDate), Just(Stmt::LineComment),
                Just(Stmt::BlockComment), Just(Stmt::StringDecoy)
            ],
            1..24,
        )
    ) {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join("AndroidManifest.xml"), DECOY_MANIFEST).unwrap();
        let mut src = String::from("package p.q;\n\npublic class A extends android.app.Activity {\n    void run() {\n");
        let first_line = 5;
        for s in &stmts {
            src.push_str(&format!("        {{\n{}\n        }}\n", stmt_text(s)));
        }
        src.push_str("    }\n}\n");
        fs::create_dir_all(dir.path().join("src/p/q")).unwrap();
        fs::write(dir.path().join("src/p/q/A.java"), &src).unwrap();

        let m = droidmut_core::project::scan_project(dir.path(), &Default::default()).unwrap();
        let pfp = profile(&m);
        let lines_for = |op: OperatorId| -> Vec<usize> {
            pfp.entries.iter().filter(|e| e.operator_id == op).map(|e| e.line).collect()
        };
        let real = |kind: fn(&Stmt) -> bool| -> Vec<usize> {
            stmts.iter().enumerate().filter(|(_, s)| kind(s)).map(|(i, _)| first_line + 3 * i + 1).collect()
        };
        prop_assert_eq!(lines_for(OperatorId::InvalidURI), real(|s| matches!(s, Stmt::RealUri)));
        prop_assert_eq!(lines_for(OperatorId::InvalidDate), real(|s| matches!(s, Stmt::RealDate)));
        prop_assert!(lines_for(OperatorId::NullIntent).is_empty());
        prop_assert!(lines_for(OperatorId::InvalidIDFindView).is_empty());
    }
}
