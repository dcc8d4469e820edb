//! The `droidmut.toml` run configuration.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::catalog::OperatorId;
use crate::error::{Error, Result};
use crate::mutate::Mode;
use crate::pfp::{resolve_operators, PfpConfig};
use crate::project::ScanOptions;
use crate::verify::HookConfig;

pub const DEFAULT_CONFIG_NAME: &str = "droidmut.toml";
pub const DEFAULT_OUT_DIR: &str = "droidmut-out";
pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct HooksSection {
    /// Command template; `{mutant_dir}` is replaced by the quoted clone path.
    pub compile: Option<String>,
    pub launch: Option<String>,
    pub timeout_s: f64,
    pub max_parallel: usize,
}

impl Default for HooksSection {
    fn default() -> Self {
        let d = HookConfig::default();
        HooksSection { compile: None, launch: None, timeout_s: d.timeout_s, max_parallel: d.max_parallel }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub seed: u64,
    /// Operator ids to run; empty means the whole catalog.
    pub operators: Vec<String>,
    pub exclude_operators: Vec<String>,
    /// Glob patterns (relative to the project root) of files to ignore.
    pub excludes: Vec<String>,
    pub exclude_main_activity: bool,
    pub out_dir: PathBuf,
    pub mode: Mode,
    pub hooks: HooksSection,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            seed: DEFAULT_SEED,
            operators: Vec::new(),
            exclude_operators: Vec::new(),
            excludes: Vec::new(),
            exclude_main_activity: false,
            out_dir: PathBuf::from(DEFAULT_OUT_DIR),
            mode: Mode::Clone,
            hooks: HooksSection::default(),
        }
    }
}

impl Config {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let mut c = Self::from_toml(&text).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        // relative paths in a config file are relative to that file
        if c.out_dir.is_relative() {
            if let Some(dir) = path.parent() {
                c.out_dir = dir.join(&c.out_dir);
            }
        }
        Ok(c)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string_pretty(self).expect("config serializes")
    }

    pub fn operator_ids(&self) -> Result<Vec<OperatorId>> {
        resolve_operators(&self.operators, &self.exclude_operators)
    }

    pub fn scan_options(&self) -> ScanOptions {
        ScanOptions::with_excludes(self.excludes.iter().cloned())
    }

    pub fn pfp_config(&self) -> PfpConfig {
        PfpConfig { exclude_main_activity: self.exclude_main_activity }
    }

    pub fn hook_config(&self) -> Result<HookConfig> {
        let h = HookConfig {
            compile_command: self.hooks.compile.clone(),
            launch_command: self.hooks.launch.clone(),
            timeout_s: self.hooks.timeout_s,
            max_parallel: self.hooks.max_parallel,
        };
        h.validate()?;
        Ok(h)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_file_gives_defaults() {
        assert_eq!(Config::from_toml("").unwrap(), Config::default());
    }

    #[test]
    fn full_file() {
        let c = Config::from_toml(
            r#"
seed = 7
operators = ["NullIntent", "InvalidColor"]
exclude_operators = ["InvalidColor"]
excludes = ["**/test/**"]
exclude_main_activity = true
out_dir = "out"
mode = "patch_file"

[hooks]
compile = "make -C {mutant_dir}"
timeout_s = 10
max_parallel = 3
"#,
        )
        .unwrap();
        assert_eq!(c.seed, 7);
        assert_eq!(c.operator_ids().unwrap(), vec![OperatorId::NullIntent]);
        assert_eq!(c.mode, Mode::PatchFile);
        let h = c.hook_config().unwrap();
        assert_eq!(h.max_parallel, 3);
        assert_eq!(h.timeout_s, 10.0);
        assert!(h.launch_command.is_none());
        assert_eq!(Config::from_toml(&c.to_toml()).unwrap(), c);
    }

    #[test]
    fn unknown_keys_and_bad_values_are_errors() {
        assert!(Config::from_toml("sede = 1").is_err());
        assert!(Config::from_toml("[hooks]\nmax_parallel = 0").unwrap().hook_config().is_err());
        assert!(Config::from_toml("operators = [\"NoSuchOp\"]").unwrap().operator_ids().is_err());
    }
}
