//! One PASS/FAIL/SKIP line per acceptance criterion. Exits nonzero when any
//! criterion fails.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use droidmut_core::catalog::OperatorId;
use droidmut_core::detect::{keys, parse_spans};
use droidmut_core::mutate::{ManifestEntry, Mode, Mutant, MutantsManifest, Patch, MANIFEST_NAME};
use droidmut_core::pfp::{Pfp, PfpConfig, PfpEntry};
use droidmut_core::span::Span;
use droidmut_core::verify::{MutantOutcome, OutcomesDocument, Status};
use walkdir::WalkDir;

const FIXTURES: &[&str] = &["omni", "minimal", "single", "realistic", "large"];
const COVERAGE_BUDGET: Duration = Duration::from_secs(5);
const MAX_STILLBORN_RATE: f64 = 0.02;

enum Verdict {
    Pass(String),
    Fail(String),
    Skip(String),
}

type Check = std::result::Result<String, String>;

fn workspace() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..").canonicalize().unwrap()
}

fn fixture(name: &str) -> PathBuf {
    workspace().join("fixtures").join(name)
}

fn droidmut(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_droidmut")).args(args).current_dir(dir).output().unwrap()
}

fn run_ok(dir: &Path, args: &[&str]) -> std::result::Result<Output, String> {
    let out = droidmut(dir, args);
    if out.status.success() {
        Ok(out)
    } else {
        Err(format!(
            "`droidmut {}` exited {:?}: {}",
            args.join(" "),
            out.status.code(),
            String::from_utf8_lossy(&out.stderr).trim()
        ))
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn snapshot(root: &Path) -> BTreeMap<String, Vec<u8>> {
    WalkDir::new(root)
        .sort_by_file_name()
        .into_iter()
        .map(|e| e.unwrap())
        .filter(|e| e.file_type().is_file())
        .map(|e| {
            let rel = e.path().strip_prefix(root).unwrap().to_string_lossy().into_owned();
            (rel, fs::read(e.path()).unwrap())
        })
        .collect()
}

fn coverage() -> Check {
    let tmp = tempfile::tempdir().unwrap();
    let omni = fixture("omni");
    let started = Instant::now();
    let out = run_ok(tmp.path(), &["profile", omni.to_str().unwrap()])?;
    let elapsed = started.elapsed();
    let pfp = Pfp::from_json(&String::from_utf8_lossy(&out.stdout)).map_err(|e| e.to_string())?;
    let ops: BTreeSet<OperatorId> = pfp.entries.iter().map(|e| e.operator_id).collect();
    ensure(pfp.entries.len() == 35, || format!("{} entries, expected 35", pfp.entries.len()))?;
    ensure(ops == OperatorId::ALL.iter().copied().collect(), || "operator ids differ from the catalog".into())?;
    let annotations = fs::read_to_string(omni.join("expected_locations.tsv")).map_err(|e| e.to_string())?;
    let mut checked = 0;
    for line in annotations.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()) {
        let cols: Vec<&str> = line.split('\t').collect();
        let e = pfp
            .entries
            .iter()
            .find(|e| e.operator_id.as_str() == cols[0])
            .ok_or_else(|| format!("no entry for {}", cols[0]))?;
        ensure(e.file == cols[1] && e.line.to_string() == cols[2], || {
            format!("{} at {}:{}, annotated {}:{}", cols[0], e.file, e.line, cols[1], cols[2])
        })?;
        checked += 1;
    }
    ensure(checked == 35, || format!("{checked} annotations"))?;
    ensure(elapsed < COVERAGE_BUDGET, || format!("took {:.2}s", elapsed.as_secs_f64()))?;
    Ok(format!("35/35 operators at annotated locations in {:.2}s", elapsed.as_secs_f64()))
}

/// Runs `mutate --seed 42` twice per fixture; returns the first run's directories.
fn determinism(work: &Path) -> Check {
    let mut total = 0;
    for name in FIXTURES {
        let project = fixture(name);
        let mut trees = Vec::new();
        for run in ["a", "b"] {
            let dir = format!("{run}/{name}");
            run_ok(work, &["mutate", project.to_str().unwrap(), "--seed", "42", "--out-dir", &dir])?;
            trees.push(snapshot(&work.join(dir)));
        }
        ensure(trees[0] == trees[1], || format!("{name}: outputs differ between runs"))?;
        total += trees[0].len();
    }
    Ok(format!("{} fixtures, {total} files byte-identical across two runs", FIXTURES.len()))
}

fn first_order(work: &Path) -> Check {
    let mut mutants = 0;
    for name in FIXTURES {
        let out = work.join("a").join(name);
        let manifest = MutantsManifest::read(&out.join(MANIFEST_NAME)).map_err(|e| e.to_string())?;
        let pfp = Pfp::from_json(&fs::read_to_string(out.join("pfp.json")).unwrap()).map_err(|e| e.to_string())?;
        let by_key: BTreeMap<&str, &PfpEntry> = pfp.entries.iter().map(|e| (e.stable_key.as_str(), e)).collect();
        let original = snapshot(&fixture(name));
        ensure(manifest.mutants.len() == pfp.entries.len(), || {
            format!("{name}: {} mutants for {} entries", manifest.mutants.len(), pfp.entries.len())
        })?;
        for entry in &manifest.mutants {
            let m = &entry.mutant;
            let pe = by_key.get(m.source_entry.as_str()).ok_or_else(|| format!("{}: unknown entry", m.mutant_id))?;
            let mut allowed = vec![pe.target];
            if let Some(at) = pe.aux.get(keys::INSERT_AT) {
                allowed.push(Span::empty(at.parse().unwrap()));
            }
            if let Some(list) = pe.aux.get(keys::ALSO_DELETE) {
                allowed.extend(parse_spans(list).unwrap_or_default());
            }
            ensure(m.patch.edits.iter().all(|e| e.file == pe.file && allowed.contains(&e.span)), || {
                format!("{name}/{}: edit outside the documented spans", m.mutant_id)
            })?;
            let mut clone = snapshot(&out.join(&entry.artifact));
            let changed: Vec<&String> = clone.keys().filter(|k| original.get(*k) != clone.get(*k)).collect();
            ensure(changed == vec![&m.file] && clone.len() == original.len(), || {
                format!("{name}/{}: clone differs in {changed:?}", m.mutant_id)
            })?;
            let reverted = m.patch.revert(&m.file, &clone[&m.file]).map_err(|e| e.to_string())?;
            clone.insert(m.file.clone(), reverted);
            ensure(clone == original, || format!("{name}/{}: revert does not restore the tree", m.mutant_id))?;
            mutants += 1;
        }
    }
    Ok(format!("{mutants} mutants touch only their documented spans and revert byte-identically"))
}

fn java_toolchain() -> Option<String> {
    let tools = std::env::var("DROIDMUT_JAVATOOLS").unwrap_or_else(|_| "/opt/javatools".into());
    let names: Vec<String> = fs::read_dir(&tools)
        .ok()?
        .filter_map(|e| e.ok())
        .map(|e| e.file_name().to_string_lossy().into_owned())
        .collect();
    let has = |p: &str| names.iter().any(|n| n.starts_with(p) && n.ends_with(".jar"));
    (has("janino-") && has("commons-compiler-")).then_some(tools)
}

fn viability(work: &Path) -> Verdict {
    // the final-declared cursor in the realistic fixture is never nullified
    let rel = "src/io/github/tasks/data/TaskDb.java";
    let task_db = fs::read_to_string(fixture("realistic").join(rel)).unwrap();
    let pfp = Pfp::from_json(&fs::read_to_string(work.join("a/realistic/pfp.json")).unwrap()).unwrap();
    let closed: Vec<&str> = pfp
        .entries
        .iter()
        .filter(|e| e.operator_id == OperatorId::ClosingNullCursor && e.file == rel)
        .map(|e| &task_db[e.target.start..e.target.end])
        .collect();
    if !task_db.contains("final Cursor c ") || !task_db.contains("c.close()") || closed.contains(&"c.close()") {
        return Verdict::Fail(format!("final cursor reached the profile: {closed:?}"));
    }
    let Some(_) = java_toolchain() else {
        return Verdict::Skip(
            "Java toolchain (janino, commons-compiler) not installed; final-cursor check passed".into(),
        );
    };
    let hook = format!("{} {{mutant_dir}}", workspace().join("hooks/compile-java.sh").display());
    let (mut generated, mut stillborn) = (0usize, 0usize);
    let mut per_app = Vec::new();
    for name in FIXTURES {
        let dir = format!("a/{name}");
        if let Err(e) = run_ok(work, &["verify", "--out-dir", &dir, "--compile", &hook, "--timeout-s", "300"]) {
            return Verdict::Fail(e);
        }
        let doc =
            OutcomesDocument::from_json(&fs::read_to_string(work.join(&dir).join("outcomes.json")).unwrap()).unwrap();
        let sm = doc.outcomes.iter().filter(|o| o.status == Status::Stillborn).count();
        for o in doc.outcomes.iter().filter(|o| o.status == Status::Stillborn) {
            eprintln!("stillborn {name}/{}: {}", o.mutant_id, o.evidence.lines().next().unwrap_or(""));
        }
        per_app.push(format!("{name} {sm}/{}", doc.outcomes.len()));
        generated += doc.outcomes.len();
        stillborn += sm;
    }
    let rate = stillborn as f64 / generated as f64;
    let detail = format!(
        "stillborn {stillborn}/{generated} = {:.2}% (limit {:.0}%; {}); final cursor yields no mutant",
        rate * 100.0,
        MAX_STILLBORN_RATE * 100.0,
        per_app.join(", ")
    );
    if rate <= MAX_STILLBORN_RATE {
        Verdict::Pass(detail)
    } else {
        Verdict::Fail(detail)
    }
}

fn synthetic_entry(op: OperatorId, n: u64) -> ManifestEntry {
    let id = format!("{op}-{n}");
    ManifestEntry {
        mutant: Mutant {
            mutant_id: id.clone(),
            operator_id: op,
            source_entry: String::new(),
            file: "A.java".into(),
            line: 1,
            patch: Patch::default(),
            summary: String::new(),
        },
        artifact: format!("mutants/{id}"),
    }
}

fn report_arithmetic() -> Check {
    let rows = fs::read_to_string(fixture("operator_counts.csv")).unwrap();
    let mut mutants = Vec::new();
    let mut outcomes = Vec::new();
    let mut expected_rows = Vec::new();
    for line in rows.lines().skip(1) {
        let f: Vec<&str> = line.split(',').collect();
        let op: OperatorId = f[0].parse().map_err(|e| format!("{e}"))?;
        let [gm, sm, tm]: [u64; 3] = [f[1], f[2], f[3]].map(|x| x.parse().unwrap());
        if gm > 0 {
            expected_rows.push(line.to_string());
        }
        for n in 1..=gm {
            let entry = synthetic_entry(op, n);
            let status = if n <= sm {
                Status::Stillborn
            } else if n <= sm + tm {
                Status::Trivial
            } else {
                Status::Live
            };
            outcomes.push(MutantOutcome {
                mutant_id: entry.mutant.mutant_id.clone(),
                operator_id: op,
                status,
                evidence: String::new(),
                crash: None,
                wall_time_s: 0.0,
            });
            mutants.push(entry);
        }
    }
    let manifest = MutantsManifest {
        format_version: 1,
        root: ".".into(),
        seed: 42,
        mode: Mode::Clone,
        operators: OperatorId::ALL.to_vec(),
        config: PfpConfig::default(),
        mutants,
        skipped: Vec::new(),
    };
    let tmp = tempfile::tempdir().unwrap();
    fs::write(tmp.path().join(MANIFEST_NAME), manifest.to_json()).unwrap();
    fs::write(tmp.path().join("outcomes.json"), OutcomesDocument::new(outcomes).to_json()).unwrap();
    let out = run_ok(tmp.path(), &["report", "--out-dir", ".", "--format", "csv"])?;
    let csv = String::from_utf8_lossy(&out.stdout).into_owned();
    let lines: BTreeSet<&str> = csv.lines().collect();
    ensure(lines.contains("TOTAL,8847,50,213"), || format!("totals row: {:?}", csv.lines().last()))?;
    for row in &expected_rows {
        ensure(lines.contains(row.as_str()), || format!("row `{row}` missing"))?;
    }
    Ok(format!("TOTAL,8847,50,213 with {} operator rows reproduced verbatim", expected_rows.len()))
}

fn partition() -> Check {
    let tmp = tempfile::tempdir().unwrap();
    let stub = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/support/stub_hook.sh");
    run_ok(tmp.path(), &["mutate", fixture("single").to_str().unwrap(), "--out-dir", "out"])?;
    let manifest = MutantsManifest::read(&tmp.path().join("out").join(MANIFEST_NAME)).map_err(|e| e.to_string())?;
    let ids: Vec<&str> = manifest.mutants.iter().map(|m| m.mutant.mutant_id.as_str()).collect();
    let (stillborn, crash, exit) = (&ids[..4], &ids[4..9], &ids[9..11]);
    let cmd = |set: &[&str], how: &str| format!("{} {{mutant_dir}} '{}' {how}", stub.display(), set.join(" "));
    let launch = format!("{} && {}", cmd(crash, "crash"), cmd(exit, "fail"));
    run_ok(tmp.path(), &["verify", "--out-dir", "out", "--compile", &cmd(stillborn, "fail"), "--launch", &launch])?;
    let doc = OutcomesDocument::from_json(&fs::read_to_string(tmp.path().join("out/outcomes.json")).unwrap())
        .map_err(|e| e.to_string())?;
    let mut counts = [0usize; 3];
    for o in &doc.outcomes {
        let id = o.mutant_id.as_str();
        let expected = if stillborn.contains(&id) {
            Status::Stillborn
        } else if crash.contains(&id) || exit.contains(&id) {
            Status::Trivial
        } else {
            Status::Live
        };
        ensure(o.status == expected, || format!("{id}: {:?}, scripted {expected:?}", o.status))?;
        counts[match o.status {
            Status::Stillborn => 0,
            Status::Trivial => 1,
            _ => 2,
        }] += 1;
    }
    let sum: usize = counts.iter().sum();
    ensure(sum == ids.len() && doc.outcomes.len() == ids.len(), || {
        format!("{sum} outcomes for {} mutants", ids.len())
    })?;
    Ok(format!("stillborn {} + trivial {} + live {} = {} generated", counts[0], counts[1], counts[2], ids.len()))
}

fn not_reproducible() -> Check {
    let readme = fs::read_to_string(workspace().join("README.md")).map_err(|e| format!("README.md: {e}"))?;
    ensure(readme.contains("## Not reproducible at desk scale") && readme.contains("55-app"), || {
        "README lacks the desk-scale reproducibility statement".into()
    })?;
    let tmp = tempfile::tempdir().unwrap();
    for name in ["minimal", "single", "realistic"] {
        let dest = format!("corpus/{name}");
        run_ok(tmp.path(), &["mutate", fixture(name).to_str().unwrap(), "--out-dir", &dest, "--mode", "patch"])?;
    }
    let out = run_ok(tmp.path(), &["report", "--corpus", "corpus", "--format", "json"])?;
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let apps = doc["apps"].as_array().map_or(0, |a| a.len());
    ensure(apps == 3, || format!("corpus summary lists {apps} apps"))?;
    let mean = doc["mean_generated"].as_f64().unwrap_or(0.0);
    Ok(format!("stated in README; corpus mode summarized {apps} apps, mean {mean:.1} mutants/app"))
}

fn main() {
    let work = tempfile::tempdir().unwrap();
    let checked = |r: Check| match r {
        Ok(s) => Verdict::Pass(s),
        Err(s) => Verdict::Fail(s),
    };
    let mut results: Vec<(&str, Verdict)> = Vec::new();
    results.push(("operator coverage", checked(coverage())));
    let det = checked(determinism(work.path()));
    let det_ok = matches!(det, Verdict::Pass(_));
    results.push(("determinism", det));
    if det_ok {
        results.push(("first-order / reversibility", checked(first_order(work.path()))));
        results.push(("viability floor", viability(work.path())));
    } else {
        results.push(("first-order / reversibility", Verdict::Fail("mutation runs failed".into())));
        results.push(("viability floor", Verdict::Fail("mutation runs failed".into())));
    }
    results.push(("report arithmetic", checked(report_arithmetic())));
    results.push(("classification partition", checked(partition())));
    results.push(("not reproducible at desk scale", checked(not_reproducible())));

    let mut failed = 0;
    for (name, v) in &results {
        let (tag, detail) = match v {
            Verdict::Pass(d) => ("PASS", d),
            Verdict::Fail(d) => {
                failed += 1;
                ("FAIL", d)
            }
            Verdict::Skip(d) => ("SKIP", d),
        };
        println!("{tag} {name}: {detail}");
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
