//! Classifies mutants by running external compile and launch hooks.
//!
//! Hooks are shell command templates. `{mutant_dir}` is replaced by the
//! shell-quoted path of the mutant's clone; the same path is exported as
//! `DROIDMUT_MUTANT_DIR`. A compile hook fails by exiting nonzero. A launch
//! hook reports a crash by printing `CRASH:<exception>` as its first line.

use std::collections::BTreeMap;
use std::io::Read;
use std::os::unix::fs::PermissionsExt;
use std::os::unix::process::CommandExt;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::OperatorId;
use crate::error::{Error, Result};
use crate::mutate::{ManifestEntry, Mode, MutantsManifest};

pub const EVIDENCE_LINES: usize = 64;
pub const MAX_DEFAULT_PARALLEL: usize = 20;
pub const CRASH_PREFIX: &str = "CRASH:";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HookConfig {
    pub compile_command: Option<String>,
    pub launch_command: Option<String>,
    pub timeout_s: f64,
    pub max_parallel: usize,
}

impl Default for HookConfig {
    fn default() -> Self {
        HookConfig {
            compile_command: None,
            launch_command: None,
            timeout_s: 300.0,
            max_parallel: default_parallelism(),
        }
    }
}

pub fn default_parallelism() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1).min(MAX_DEFAULT_PARALLEL)
}

impl HookConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_parallel == 0 {
            return Err(Error::Config("max_parallel must be at least 1".into()));
        }
        if !(self.timeout_s > 0.0 && self.timeout_s.is_finite()) {
            return Err(Error::Config("timeout_s must be positive".into()));
        }
        for cmd in [&self.compile_command, &self.launch_command].into_iter().flatten() {
            check_executable(cmd)?;
        }
        Ok(())
    }
}

const SHELL_BUILTINS: &[&str] =
    &["exit", "echo", "printf", "true", "false", "test", "[", "cd", "exec", "sleep", ":", "set", "if", "case", "for"];

/// Checks that the program a command template starts with can be run.
fn check_executable(cmd: &str) -> Result<()> {
    let Some(program) = cmd.split_whitespace().next() else {
        return Err(Error::HookNotExecutable("empty command".into()));
    };
    if SHELL_BUILTINS.contains(&program) || program.contains('=') || program.contains('{') {
        return Ok(());
    }
    let runnable = |p: &Path| p.is_file() && p.metadata().map(|m| m.permissions().mode() & 0o111 != 0).unwrap_or(false);
    let found = if program.contains('/') {
        runnable(Path::new(program))
    } else {
        std::env::var_os("PATH")
            .map(|paths| std::env::split_paths(&paths).any(|dir| runnable(&dir.join(program))))
            .unwrap_or(false)
    };
    if found {
        Ok(())
    } else {
        Err(Error::HookNotExecutable(program.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    Stillborn,
    Trivial,
    Live,
    Killed,
    Survived,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MutantOutcome {
    pub mutant_id: String,
    pub operator_id: OperatorId,
    pub status: Status,
    /// First lines of the deciding hook's output.
    pub evidence: String,
    /// Exception named by a launch hook's `CRASH:` line.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub crash: Option<String>,
    pub wall_time_s: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutcomesDocument {
    pub format_version: u32,
    pub outcomes: Vec<MutantOutcome>,
}

impl OutcomesDocument {
    pub fn new(outcomes: Vec<MutantOutcome>) -> Self {
        OutcomesDocument { format_version: crate::FORMAT_VERSION, outcomes }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("outcomes serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let d: OutcomesDocument =
            serde_json::from_str(text).map_err(|e| Error::Format { what: "outcomes", message: e.to_string() })?;
        crate::check_version("outcomes", d.format_version)?;
        Ok(d)
    }
}

#[derive(Debug, Clone)]
pub struct HookRun {
    pub exit_code: Option<i32>,
    pub timed_out: bool,
    pub stdout: String,
    pub stderr: String,
}

impl HookRun {
    pub fn success(&self) -> bool {
        !self.timed_out && self.exit_code == Some(0)
    }

    /// First [`EVIDENCE_LINES`] lines of stdout followed by stderr.
    pub fn evidence(&self) -> String {
        if self.timed_out {
            return "timeout".into();
        }
        self.stdout.lines().chain(self.stderr.lines()).take(EVIDENCE_LINES).collect::<Vec<_>>().join("\n")
    }
}

pub fn shell_quote(s: &str) -> String {
    format!("'{}'", s.replace('\'', r"'\''"))
}

/// Runs one hook with `{mutant_dir}` substituted, killing its whole process
/// group if it exceeds `timeout`.
pub fn run_hook(template: &str, mutant_dir: &Path, timeout: Duration) -> Result<HookRun> {
    let dir = mutant_dir.to_string_lossy();
    let cmd = template.replace("{mutant_dir}", &shell_quote(&dir));
    let mut child = Command::new("sh")
        .arg("-c")
        .arg(&cmd)
        .env("DROIDMUT_MUTANT_DIR", mutant_dir)
        .stdin(Stdio::null())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .process_group(0)
        .spawn()
        .map_err(|e| Error::io("sh", e))?;
    let pid = child.id() as i32;
    let drain = |mut r: Box<dyn Read + Send>| {
        std::thread::spawn(move || {
            let mut buf = Vec::new();
            let _ = r.read_to_end(&mut buf);
            String::from_utf8_lossy(&buf).into_owned()
        })
    };
    let out = drain(Box::new(child.stdout.take().expect("piped stdout")));
    let err = drain(Box::new(child.stderr.take().expect("piped stderr")));
    let start = Instant::now();
    let mut timed_out = false;
    let status = loop {
        if let Some(status) = child.try_wait().map_err(|e| Error::io("sh", e))? {
            break Some(status);
        }
        if start.elapsed() >= timeout {
            timed_out = true;
            // SAFETY: plain syscall on the process group we created.
            unsafe {
                libc::kill(-pid, libc::SIGKILL);
            }
            let _ = child.wait();
            break None;
        }
        std::thread::sleep(Duration::from_millis(5));
    };
    if !timed_out {
        // reap stragglers that still hold the pipes open
        // SAFETY: as above.
        unsafe {
            libc::kill(-pid, libc::SIGKILL);
        }
    }
    Ok(HookRun {
        exit_code: status.and_then(|s| s.code()),
        timed_out,
        stdout: out.join().unwrap_or_default(),
        stderr: err.join().unwrap_or_default(),
    })
}

fn crash_of(run: &HookRun) -> Option<String> {
    let first = run.stdout.lines().next()?;
    first.strip_prefix(CRASH_PREFIX).map(|e| e.trim().to_string())
}

/// Compile, then launch, one materialized mutant.
pub fn classify_mutant(entry: &ManifestEntry, mutant_dir: &Path, hooks: &HookConfig) -> Result<MutantOutcome> {
    let started = Instant::now();
    let m = &entry.mutant;
    let outcome = |status, evidence: String, crash| MutantOutcome {
        mutant_id: m.mutant_id.clone(),
        operator_id: m.operator_id,
        status,
        evidence,
        crash,
        wall_time_s: started.elapsed().as_secs_f64(),
    };
    if !mutant_dir.is_dir() {
        return Ok(outcome(Status::Skipped, format!("no clone at {}", mutant_dir.display()), None));
    }
    let timeout = Duration::from_secs_f64(hooks.timeout_s);
    if let Some(cmd) = &hooks.compile_command {
        let run = run_hook(cmd, mutant_dir, timeout)?;
        if !run.success() {
            return Ok(outcome(Status::Stillborn, run.evidence(), None));
        }
    }
    if let Some(cmd) = &hooks.launch_command {
        let run = run_hook(cmd, mutant_dir, timeout)?;
        if run.timed_out {
            return Ok(outcome(Status::Trivial, run.evidence(), None));
        }
        if let Some(exc) = crash_of(&run) {
            return Ok(outcome(Status::Trivial, run.evidence(), Some(exc)));
        }
        if !run.success() {
            let code = run.exit_code.map_or("signal".to_string(), |c| c.to_string());
            return Ok(outcome(Status::Trivial, run.evidence(), Some(format!("launch hook exited with {code}"))));
        }
        return Ok(outcome(Status::Live, run.evidence(), None));
    }
    Ok(outcome(Status::Live, String::new(), None))
}

/// `(operator, n)` ordering for `Operator-n` ids.
pub fn mutant_order_key(id: &str) -> (String, u64) {
    match id.rsplit_once('-') {
        Some((op, n)) => (op.to_string(), n.parse().unwrap_or(u64::MAX)),
        None => (id.to_string(), u64::MAX),
    }
}

/// Runs the hooks over every mutant of `manifest`, whose artifacts are
/// resolved against `base_dir`. Outcomes come back ordered by mutant id.
pub fn verify(manifest: &MutantsManifest, base_dir: &Path, hooks: &HookConfig) -> Result<Vec<MutantOutcome>> {
    hooks.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(hooks.max_parallel)
        .build()
        .map_err(|e| Error::Config(e.to_string()))?;
    let mut outcomes = pool.install(|| {
        manifest
            .mutants
            .par_iter()
            .map(|entry| {
                let dir: PathBuf = match manifest.mode {
                    Mode::Clone => base_dir.join(&entry.artifact),
                    Mode::PatchFile => base_dir.join("__no_clone__").join(&entry.mutant.mutant_id),
                };
                classify_mutant(entry, &dir, hooks)
            })
            .collect::<Result<Vec<_>>>()
    })?;
    outcomes.sort_by_key(|o| mutant_order_key(&o.mutant_id));
    Ok(outcomes)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TestResult {
    pub any_test_failed: bool,
}

/// Marks Live mutants Killed or Survived from test-suite results.
pub fn classify_with_tests(
    outcomes: &[MutantOutcome],
    test_results: &BTreeMap<String, TestResult>,
) -> Result<Vec<MutantOutcome>> {
    for id in test_results.keys() {
        match outcomes.iter().find(|o| &o.mutant_id == id) {
            Some(o) if o.status == Status::Live => {}
            _ => return Err(Error::UnknownMutantId(id.clone())),
        }
    }
    Ok(outcomes
        .iter()
        .map(|o| {
            let mut o = o.clone();
            if let Some(r) = test_results.get(&o.mutant_id) {
                o.status = if r.any_test_failed { Status::Killed } else { Status::Survived };
            }
            o
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hook_output_and_exit() {
        let dir = std::env::temp_dir();
        let run = run_hook("echo one; echo two >&2; exit 3", &dir, Duration::from_secs(10)).unwrap();
        assert_eq!(run.exit_code, Some(3));
        assert!(!run.success());
        assert_eq!(run.evidence(), "one\ntwo");
    }

    #[test]
    fn placeholder_is_quoted() {
        let dir = Path::new("/tmp/it's here");
        let run = run_hook("printf %s {mutant_dir}", dir, Duration::from_secs(10)).unwrap();
        assert_eq!(run.stdout, "/tmp/it's here");
    }

    #[test]
    fn timeout_kills_the_group() {
        let start = Instant::now();
        let run = run_hook("sleep 30 & sleep 30", Path::new("/"), Duration::from_millis(200)).unwrap();
        assert!(run.timed_out);
        assert_eq!(run.evidence(), "timeout");
        assert!(start.elapsed() < Duration::from_secs(10));
    }

    #[test]
    fn evidence_is_capped() {
        let run = run_hook("seq 1 100", Path::new("/"), Duration::from_secs(10)).unwrap();
        assert_eq!(run.evidence().lines().count(), EVIDENCE_LINES);
    }

    #[test]
    fn executable_checks() {
        assert!(check_executable("sh -c true").is_ok());
        assert!(check_executable("exit 0").is_ok());
        assert!(matches!(check_executable("/nonexistent/hook.sh {mutant_dir}"), Err(Error::HookNotExecutable(_))));
        assert!(matches!(check_executable("no-such-program-xyz"), Err(Error::HookNotExecutable(_))));
    }

    #[test]
    fn ordering_is_numeric_within_operator() {
        let mut ids = vec!["NullIntent-10", "InvalidDate-2", "NullIntent-2"];
        ids.sort_by_key(|i| mutant_order_key(i));
        assert_eq!(ids, vec!["InvalidDate-2", "NullIntent-2", "NullIntent-10"]);
    }

    fn outcome(id: &str, status: Status) -> MutantOutcome {
        MutantOutcome {
            mutant_id: id.into(),
            operator_id: OperatorId::NullIntent,
            status,
            evidence: String::new(),
            crash: None,
            wall_time_s: 0.0,
        }
    }

    #[test]
    fn test_results_mark_live_mutants() {
        let outcomes = vec![outcome("NullIntent-1", Status::Live), outcome("NullIntent-2", Status::Live)];
        let results: BTreeMap<_, _> = [
            ("NullIntent-1".to_string(), TestResult { any_test_failed: true }),
            ("NullIntent-2".to_string(), TestResult { any_test_failed: false }),
        ]
        .into_iter()
        .collect();
        let out = classify_with_tests(&outcomes, &results).unwrap();
        assert_eq!(out[0].status, Status::Killed);
        assert_eq!(out[1].status, Status::Survived);
    }

    #[test]
    fn test_results_for_stillborn_mutants_are_rejected() {
        let outcomes = vec![outcome("NullIntent-1", Status::Stillborn)];
        let results: BTreeMap<_, _> =
            [("NullIntent-1".to_string(), TestResult { any_test_failed: true })].into_iter().collect();
        assert!(matches!(classify_with_tests(&outcomes, &results), Err(Error::UnknownMutantId(_))));
    }
}
