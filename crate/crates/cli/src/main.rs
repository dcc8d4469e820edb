use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use droidmut_core::catalog::catalog_document;
use droidmut_core::config::{Config, DEFAULT_CONFIG_NAME};
use droidmut_core::mutate::{generate, Mode, MutantsManifest, MANIFEST_NAME};
use droidmut_core::pfp::{extract_pfp, Pfp};
use droidmut_core::project::scan_project;
use droidmut_core::report::{self, build_report, corpus_summary, AppReport, Format};
use droidmut_core::verify::{classify_with_tests, verify, OutcomesDocument, TestResult};

const PFP_NAME: &str = "pfp.json";
const OUTCOMES_NAME: &str = "outcomes.json";

#[derive(Parser)]
#[command(name = "droidmut", version, about = "Mutation analysis for Android apps")]
struct Cli {
    /// Configuration file (default: ./droidmut.toml when present).
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every location where an operator applies.
    Profile {
        project: PathBuf,
        #[command(flatten)]
        select: Selection,
        /// Write the profile here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Exit with status 2 when some files could not be parsed.
        #[arg(long)]
        strict: bool,
    },
    /// Generate one mutant per profile location.
    Mutate {
        project: PathBuf,
        #[command(flatten)]
        select: Selection,
        #[arg(long)]
        seed: Option<u64>,
        /// `clone` or `patch`.
        #[arg(long)]
        mode: Option<Mode>,
        #[arg(long)]
        out_dir: Option<PathBuf>,
        #[arg(long)]
        strict: bool,
    },
    /// Classify generated mutants with the compile and launch hooks.
    Verify {
        /// Directory holding the mutants manifest.
        #[arg(long)]
        out_dir: Option<PathBuf>,
        #[arg(long)]
        compile: Option<String>,
        #[arg(long)]
        launch: Option<String>,
        #[arg(long)]
        timeout_s: Option<f64>,
        #[arg(long)]
        max_parallel: Option<usize>,
        /// JSON object mapping mutant ids to `{"any_test_failed": bool}`.
        #[arg(long)]
        tests: Option<PathBuf>,
        /// Outcomes file (default: <out_dir>/outcomes.json).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Aggregate outcomes per operator.
    Report {
        #[arg(long)]
        out_dir: Option<PathBuf>,
        #[arg(long)]
        outcomes: Option<PathBuf>,
        /// Summarize every subdirectory of this directory that holds a manifest.
        #[arg(long, conflicts_with_all = ["out_dir", "outcomes"])]
        corpus: Option<PathBuf>,
        /// plain, json or csv.
        #[arg(long, default_value = "plain")]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the operator catalog as JSON.
    Catalog,
}

#[derive(Args)]
struct Selection {
    /// Comma-separated operator ids to run (default: all).
    #[arg(long, value_delimiter = ',')]
    operators: Vec<String>,
    #[arg(long, value_delimiter = ',')]
    exclude_operators: Vec<String>,
    /// Glob of project files to ignore; repeatable.
    #[arg(long = "exclude")]
    excludes: Vec<String>,
    /// Do not mutate intents or GUI code of the launcher activity.
    #[arg(long)]
    exclude_main_activity: bool,
}

impl Selection {
    fn apply(&self, c: &mut Config) {
        if !self.operators.is_empty() {
            c.operators = self.operators.clone();
        }
        if !self.exclude_operators.is_empty() {
            c.exclude_operators = self.exclude_operators.clone();
        }
        c.excludes.extend(self.excludes.iter().cloned());
        c.exclude_main_activity |= self.exclude_main_activity;
    }
}

fn load_config(path: Option<&Path>) -> Result<Config> {
    match path {
        Some(p) => Ok(Config::load(p)?),
        None if Path::new(DEFAULT_CONFIG_NAME).is_file() => Ok(Config::load(Path::new(DEFAULT_CONFIG_NAME))?),
        None => Ok(Config::default()),
    }
}

fn write_output(path: Option<&Path>, bytes: &[u8]) -> Result<()> {
    match path {
        Some(p) => {
            if let Some(parent) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                fs::create_dir_all(parent).with_context(|| format!("creating {}", parent.display()))?;
            }
            fs::write(p, bytes).with_context(|| format!("writing {}", p.display()))
        }
        None => {
            use std::io::Write;
            std::io::stdout().write_all(bytes)?;
            Ok(())
        }
    }
}

fn build_pfp(project: &Path, config: &Config, strict: bool) -> Result<(droidmut_core::project::SourceModel, Pfp)> {
    let model = scan_project(project, &config.scan_options())?;
    let ops = config.operator_ids()?;
    let pfp = extract_pfp(&model, &ops, &config.pfp_config());
    for m in &pfp.diagnostics.messages {
        eprintln!("warning: {}", m.message);
    }
    if strict && pfp.diagnostics.unparsed_files > 0 {
        bail!("{} file(s) could not be parsed", pfp.diagnostics.unparsed_files);
    }
    Ok((model, pfp))
}

fn run(cli: Cli) -> Result<()> {
    let mut config = load_config(cli.config.as_deref())?;
    match cli.command {
        Command::Profile { project, select, output, strict } => {
            select.apply(&mut config);
            let started = Instant::now();
            let (_, pfp) = build_pfp(&project, &config, strict)?;
            write_output(output.as_deref(), pfp.to_json().as_bytes())?;
            eprintln!("{} locations in {:.2}s", pfp.entries.len(), started.elapsed().as_secs_f64());
        }
        Command::Mutate { project, select, seed, mode, out_dir, strict } => {
            select.apply(&mut config);
            config.seed = seed.unwrap_or(config.seed);
            config.mode = mode.unwrap_or(config.mode);
            if let Some(d) = out_dir {
                config.out_dir = d;
            }
            let (model, pfp) = build_pfp(&project, &config, strict)?;
            let manifest = generate(&model, &pfp, config.seed, &config.out_dir, config.mode)?;
            let pfp_path = config.out_dir.join(PFP_NAME);
            fs::write(&pfp_path, pfp.to_json()).with_context(|| format!("writing {}", pfp_path.display()))?;
            for s in &manifest.skipped {
                eprintln!("warning: skipped {}", s.message);
            }
            eprintln!(
                "{} mutants ({} skipped) written to {}",
                manifest.mutants.len(),
                manifest.skipped.len(),
                config.out_dir.display()
            );
        }
        Command::Verify { out_dir, compile, launch, timeout_s, max_parallel, tests, output } => {
            let out_dir = out_dir.unwrap_or(config.out_dir.clone());
            config.hooks.compile = compile.or(config.hooks.compile);
            config.hooks.launch = launch.or(config.hooks.launch);
            config.hooks.timeout_s = timeout_s.unwrap_or(config.hooks.timeout_s);
            config.hooks.max_parallel = max_parallel.unwrap_or(config.hooks.max_parallel);
            let hooks = config.hook_config()?;
            let manifest = MutantsManifest::read(&out_dir.join(MANIFEST_NAME))?;
            let mut outcomes = verify(&manifest, &out_dir, &hooks)?;
            if let Some(t) = tests {
                let text = fs::read_to_string(&t).with_context(|| format!("reading {}", t.display()))?;
                let results: BTreeMap<String, TestResult> =
                    serde_json::from_str(&text).with_context(|| format!("parsing {}", t.display()))?;
                outcomes = classify_with_tests(&outcomes, &results)?;
            }
            let path = output.unwrap_or_else(|| out_dir.join(OUTCOMES_NAME));
            write_output(Some(&path), OutcomesDocument::new(outcomes.clone()).to_json().as_bytes())?;
            let mut counts: BTreeMap<String, usize> = BTreeMap::new();
            for o in &outcomes {
                *counts.entry(format!("{:?}", o.status)).or_default() += 1;
            }
            let summary: Vec<String> = counts.iter().map(|(k, v)| format!("{k}: {v}")).collect();
            eprintln!("{} outcomes ({})", outcomes.len(), summary.join(", "));
        }
        Command::Report { out_dir, outcomes, corpus, format, output } => {
            let bytes = match corpus {
                Some(root) => {
                    let mut apps = Vec::new();
                    let mut dirs: Vec<PathBuf> = fs::read_dir(&root)
                        .with_context(|| format!("reading {}", root.display()))?
                        .filter_map(|e| e.ok().map(|e| e.path()))
                        .filter(|p| p.join(MANIFEST_NAME).is_file())
                        .collect();
                    dirs.sort();
                    if dirs.is_empty() {
                        bail!("no app directories with {MANIFEST_NAME} under {}", root.display());
                    }
                    for dir in dirs {
                        let app = dir.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
                        apps.push(AppReport { app, report: app_report(&dir, None)? });
                    }
                    report::render_corpus(&corpus_summary(apps), format)
                }
                None => {
                    let dir = out_dir.unwrap_or(config.out_dir.clone());
                    report::render(&app_report(&dir, outcomes.as_deref())?, format)
                }
            };
            write_output(output.as_deref(), &bytes)?;
        }
        Command::Catalog => {
            let mut s = serde_json::to_string_pretty(&catalog_document())?;
            s.push('\n');
            write_output(None, s.as_bytes())?;
        }
    }
    Ok(())
}

/// Report for one output directory. Without an outcomes file every
/// generated mutant counts, with no stillborn or trivial ones.
fn app_report(dir: &Path, outcomes: Option<&Path>) -> Result<report::MutationReport> {
    let manifest = MutantsManifest::read(&dir.join(MANIFEST_NAME))?;
    let path = outcomes.map(Path::to_path_buf).unwrap_or_else(|| dir.join(OUTCOMES_NAME));
    let outcomes = if path.is_file() || outcomes.is_some() {
        let text = fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
        OutcomesDocument::from_json(&text)?.outcomes
    } else {
        eprintln!("warning: no {} in {}; reporting generated counts only", OUTCOMES_NAME, dir.display());
        Vec::new()
    };
    Ok(build_report(&outcomes, &manifest)?)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
