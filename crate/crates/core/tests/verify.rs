mod common;

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use common::{copy_tree, fixture, hooks_dir, java_toolchain_present, model, profile};
use droidmut_core::mutate::{generate, Mode, MutantsManifest};
use droidmut_core::verify::{classify_with_tests, run_hook, verify, HookConfig, MutantOutcome, Status, TestResult};
use droidmut_core::Error;

fn stub() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/support/stub_hook.sh")
}

fn stub_cmd(ids: &[&str], how: &str) -> String {
    format!("{} {{mutant_dir}} '{}' {how}", stub().display(), ids.join(" "))
}

fn mutants(name: &str, mode: Mode) -> (tempfile::TempDir, MutantsManifest) {
    let m = model(name);
    let out = tempfile::tempdir().unwrap();
    let manifest = generate(&m, &profile(&m), 42, out.path(), mode).unwrap();
    (out, manifest)
}

fn hooks(compile: Option<String>, launch: Option<String>, timeout_s: f64, max_parallel: usize) -> HookConfig {
    HookConfig { compile_command: compile, launch_command: launch, timeout_s, max_parallel }
}

fn statuses(outcomes: &[MutantOutcome]) -> BTreeMap<String, (Status, Option<String>)> {
    outcomes.iter().map(|o| (o.mutant_id.clone(), (o.status, o.crash.clone()))).collect()
}

#[test]
fn hooks_partition_mutants() {
    let (out, manifest) = mutants("single", Mode::Clone);
    let ids: Vec<&str> = manifest.mutants.iter().map(|m| m.mutant.mutant_id.as_str()).collect();
    assert!(ids.len() >= 12);
    let stillborn = &ids[0..3];
    let crash = &ids[3..6];
    let failing = &ids[6..8];
    let hang = &ids[8..9];
    // compile failure wins over anything the launch would do
    let crash_and_stillborn: Vec<&str> = crash.iter().chain(stillborn).copied().collect();
    let launch = format!(
        "{} && {} && {}",
        stub_cmd(&crash_and_stillborn, "crash"),
        stub_cmd(failing, "fail"),
        stub_cmd(hang, "hang")
    );
    let h = hooks(Some(stub_cmd(stillborn, "fail")), Some(launch), 2.0, 4);
    let outcomes = verify(&manifest, out.path(), &h).unwrap();
    assert_eq!(outcomes.len(), ids.len());
    let by_id = statuses(&outcomes);
    for id in &ids {
        let (status, crash_exc) = &by_id[*id];
        let expected = if stillborn.contains(id) {
            Status::Stillborn
        } else if crash.contains(id) || failing.contains(id) || hang.contains(id) {
            Status::Trivial
        } else {
            Status::Live
        };
        assert_eq!(*status, expected, "{id}");
        if crash.contains(id) {
            assert_eq!(crash_exc.as_deref(), Some("java.lang.NullPointerException"));
        }
    }
    let stillborn_outcome = outcomes.iter().find(|o| o.mutant_id == stillborn[0]).unwrap();
    assert!(stillborn_outcome.evidence.contains("error in"), "{:?}", stillborn_outcome.evidence);
    // ordered by operator, then number
    let keys: Vec<_> = outcomes.iter().map(|o| droidmut_core::verify::mutant_order_key(&o.mutant_id)).collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn parallelism_does_not_change_outcomes() {
    let (out, manifest) = mutants("single", Mode::Clone);
    let ids: Vec<&str> = manifest.mutants.iter().step_by(4).map(|m| m.mutant.mutant_id.as_str()).collect();
    let run = |n| {
        let h = hooks(Some(stub_cmd(&ids[..2], "fail")), Some(stub_cmd(&ids[2..], "crash")), 10.0, n);
        statuses(&verify(&manifest, out.path(), &h).unwrap())
    };
    assert_eq!(run(1), run(6));
}

#[test]
fn hung_hooks_are_killed_with_their_children() {
    let dir = tempfile::tempdir().unwrap();
    let pid_file = dir.path().join("pid");
    let cmd = format!("sleep 60 & echo $! > {}; wait", pid_file.display());
    let started = Instant::now();
    let run = run_hook(&cmd, dir.path(), Duration::from_millis(500)).unwrap();
    assert!(run.timed_out);
    assert!(started.elapsed() < Duration::from_secs(10));
    let pid = fs::read_to_string(&pid_file).unwrap().trim().to_string();
    std::thread::sleep(Duration::from_millis(200));
    // gone, or a zombie waiting for the container's init to reap it
    let state = fs::read_to_string(format!("/proc/{pid}/stat")).unwrap_or_default();
    let alive = state.split_whitespace().nth(2).is_some_and(|s| s != "Z" && s != "X");
    assert!(!alive, "background sleep survived: {state}");
}

#[test]
fn timeouts_classify_by_phase() {
    let (out, mut manifest) = mutants("minimal", Mode::Clone);
    manifest.mutants.truncate(1);
    let slow = hooks(Some("sleep 20".into()), None, 0.3, 1);
    assert_eq!(verify(&manifest, out.path(), &slow).unwrap()[0].status, Status::Stillborn);
    let hang = hooks(Some("true".into()), Some("sleep 20".into()), 0.3, 1);
    assert_eq!(verify(&manifest, out.path(), &hang).unwrap()[0].status, Status::Trivial);
}

#[test]
fn hooks_see_the_mutant_directory() {
    let (out, manifest) = mutants("minimal", Mode::Clone);
    let check = "test -f {mutant_dir}/AndroidManifest.xml && test \"$DROIDMUT_MUTANT_DIR\" = {mutant_dir}";
    let h = hooks(Some(check.into()), None, 10.0, 2);
    let outcomes = verify(&manifest, out.path(), &h).unwrap();
    assert!(outcomes.iter().all(|o| o.status == Status::Live), "{outcomes:?}");
}

#[test]
fn patch_mode_outputs_are_skipped() {
    let (out, manifest) = mutants("minimal", Mode::PatchFile);
    let outcomes = verify(&manifest, out.path(), &hooks(Some("true".into()), None, 5.0, 2)).unwrap();
    assert_eq!(outcomes.len(), manifest.mutants.len());
    assert!(outcomes.iter().all(|o| o.status == Status::Skipped));
}

#[test]
fn missing_hook_programs_are_rejected_up_front() {
    let (out, manifest) = mutants("minimal", Mode::Clone);
    let h = hooks(Some("/no/such/compiler {mutant_dir}".into()), None, 5.0, 1);
    assert!(matches!(verify(&manifest, out.path(), &h), Err(Error::HookNotExecutable(_))));
    let zero = hooks(None, None, 5.0, 0);
    assert!(verify(&manifest, out.path(), &zero).is_err());
}

#[test]
fn test_results_refine_live_mutants() {
    let (out, manifest) = mutants("minimal", Mode::Clone);
    let first = manifest.mutants[0].mutant.mutant_id.clone();
    let h = hooks(Some(stub_cmd(&[first.as_str()], "fail")), None, 5.0, 2);
    let outcomes = verify(&manifest, out.path(), &h).unwrap();
    let live: Vec<String> = outcomes.iter().filter(|o| o.status == Status::Live).map(|o| o.mutant_id.clone()).collect();
    let results: BTreeMap<String, TestResult> =
        live.iter().enumerate().map(|(i, id)| (id.clone(), TestResult { any_test_failed: i % 2 == 0 })).collect();
    let refined = classify_with_tests(&outcomes, &results).unwrap();
    for o in &refined {
        let expected = match results.get(&o.mutant_id) {
            Some(r) if r.any_test_failed => Status::Killed,
            Some(_) => Status::Survived,
            None => Status::Stillborn,
        };
        assert_eq!(o.status, expected, "{}", o.mutant_id);
    }
    let stillborn = BTreeMap::from([(first, TestResult { any_test_failed: true })]);
    assert!(matches!(classify_with_tests(&outcomes, &stillborn), Err(Error::UnknownMutantId(_))));
    let unknown = BTreeMap::from([("Nope-1".to_string(), TestResult { any_test_failed: true })]);
    assert!(matches!(classify_with_tests(&outcomes, &unknown), Err(Error::UnknownMutantId(_))));
}

fn compile_hook() -> String {
    format!("{} {{mutant_dir}}", hooks_dir().join("compile-java.sh").display())
}

fn compiles(project: &Path) -> bool {
    let run = run_hook(&compile_hook(), project, Duration::from_secs(120)).unwrap();
    if !run.success() {
        eprintln!("{}", run.evidence());
    }
    run.success()
}

#[test]
fn compile_hook_accepts_fixture_and_rejects_broken_code() {
    if !java_toolchain_present() {
        eprintln!("Java toolchain not found; skipping");
        return;
    }
    let project = tempfile::tempdir().unwrap();
    copy_tree(&fixture("minimal"), project.path());
    assert!(compiles(project.path()));

    let java = project.path().join("src/org/sample/minimal/HelloActivity.java");
    let original = fs::read_to_string(&java).unwrap();
    let unreachable =
        original.replacen("super.onCreate(savedInstanceState);", "return; super.onCreate(savedInstanceState);", 1);
    assert_ne!(unreachable, original);
    fs::write(&java, unreachable).unwrap();
    assert!(!compiles(project.path()));
    fs::write(&java, &original).unwrap();

    let strings = project.path().join("res/values/strings.xml");
    let xml = fs::read_to_string(&strings).unwrap();
    fs::write(&strings, xml.replacen("</resources>", "<string name=\"bad\">don't</string></resources>", 1)).unwrap();
    assert!(!compiles(project.path()));
    fs::write(&strings, xml.replacen("</resources>", "<string name=\"ok\">don\\'t</string></resources>", 1)).unwrap();
    assert!(compiles(project.path()));
}
