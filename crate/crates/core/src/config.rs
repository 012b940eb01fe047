//! Run configuration.
//!
//! ```json
//! {
//!   "spaces": [{"model": "hardy", "dim": 8, "grid": {"type": "disc", "radial": 20, "angular": 64}}],
//!   "suites": ["thm-half-rB", {"id": "thm-power-young", "params": {"p": [2], "alpha": [3]}}],
//!   "trials": 500,
//!   "masterSeed": 42
//! }
//! ```
//!
//! Omitted `spaces` means the default bundle (diagonal dims 2 to 8 and a
//! Hardy space of dim 8 on a 20×64 disc grid); `"all"` in `suites` expands
//! to every suite.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::calculus::FunctionPair;
use crate::certifiers::{ConvexFn, Tolerance};
use crate::error::{Error, Result};
use crate::generators::DEFAULT_CONDITION_CAP;
use crate::rkhs::SpaceSpec;
use crate::suite::SuiteId;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RunMode {
    #[default]
    Certify,
    Tighten,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

impl OutputFormat {
    pub fn extension(&self) -> &'static str {
        match self {
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
        }
    }
}

/// Parameter grid of one suite. Trial `t` uses combination `t mod n` of the
/// Cartesian product of the given lists; omitted lists take suite defaults.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct ParamGrid {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<f64>>,
    /// Function pairs `(f, g)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairs: Option<Vec<FunctionPair>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family_size: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<Vec<ConvexFn>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub angle_count: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SuiteSelection {
    Id(String),
    WithParams {
        id: String,
        #[serde(default)]
        params: ParamGrid,
    },
}

impl SuiteSelection {
    pub fn id(&self) -> &str {
        match self {
            SuiteSelection::Id(id) | SuiteSelection::WithParams { id, .. } => id,
        }
    }

    fn params(&self) -> ParamGrid {
        match self {
            SuiteSelection::Id(_) => ParamGrid::default(),
            SuiteSelection::WithParams { params, .. } => params.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct RunConfig {
    #[serde(default = "default_spaces")]
    pub spaces: Vec<SpaceSpec>,
    pub suites: Vec<SuiteSelection>,
    #[serde(default = "default_trials")]
    pub trials: usize,
    #[serde(default = "default_seed")]
    pub master_seed: u64,
    #[serde(default = "default_tol_rel")]
    pub tol_rel: f64,
    #[serde(default = "default_tol_abs")]
    pub tol_abs: f64,
    #[serde(default = "default_cap")]
    pub condition_cap: f64,
    #[serde(default)]
    pub mode: RunMode,
    #[serde(default)]
    pub output: Output,
    /// Keep every certificate in the report, not just violations.
    #[serde(default)]
    pub keep_certificates: bool,
    /// Replace trial 0 of the pair suites by `A = B = I` with `f = g = √t`.
    #[serde(default)]
    pub include_equality_witness: bool,
    /// Draw general intertwined pairs for every function pair. Pairs other
    /// than `f = g = √t` then admit counterexamples to the product bounds.
    #[serde(default)]
    pub unrestricted_pairs: bool,
    #[serde(default = "default_true")]
    pub parallel: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct Output {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dir: Option<PathBuf>,
    #[serde(default)]
    pub format: OutputFormat,
}

pub const DEFAULT_TRIALS: usize = 500;
pub const DEFAULT_SEED: u64 = 42;

fn default_spaces() -> Vec<SpaceSpec> {
    default_bundle()
}

fn default_trials() -> usize {
    DEFAULT_TRIALS
}

fn default_seed() -> u64 {
    DEFAULT_SEED
}

fn default_tol_rel() -> f64 {
    Tolerance::default().rel
}

fn default_tol_abs() -> f64 {
    Tolerance::default().abs
}

fn default_cap() -> f64 {
    DEFAULT_CONDITION_CAP
}

fn default_true() -> bool {
    true
}

/// Diagonal spaces of dims 2 to 8 and Hardy dim 8 on a 20×64 disc, `rmax = 0.95`.
pub fn default_bundle() -> Vec<SpaceSpec> {
    let mut v: Vec<SpaceSpec> = (2..=8).map(SpaceSpec::diagonal).collect();
    v.push(SpaceSpec::hardy_disc(8, 20, 64, crate::rkhs::DEFAULT_RMAX));
    v
}

/// A validated suite selection.
#[derive(Clone, Debug, PartialEq)]
pub struct ResolvedSuite {
    pub id: SuiteId,
    pub params: ParamGrid,
}

impl RunConfig {
    pub fn new(suites: &[&str]) -> Self {
        Self {
            spaces: default_bundle(),
            suites: suites.iter().map(|s| SuiteSelection::Id(s.to_string())).collect(),
            trials: DEFAULT_TRIALS,
            master_seed: DEFAULT_SEED,
            tol_rel: default_tol_rel(),
            tol_abs: default_tol_abs(),
            condition_cap: DEFAULT_CONDITION_CAP,
            mode: RunMode::Certify,
            output: Output::default(),
            keep_certificates: false,
            include_equality_witness: false,
            unrestricted_pairs: false,
            parallel: true,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text =
            std::fs::read_to_string(path).map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn tolerance(&self) -> Tolerance {
        Tolerance { rel: self.tol_rel, abs: self.tol_abs }
    }

    /// Checks every field and expands `"all"`; nothing is computed before this passes.
    pub fn resolve(&self) -> Result<Vec<ResolvedSuite>> {
        if self.trials == 0 {
            return Err(Error::Config("trials must be at least 1".into()));
        }
        if self.spaces.is_empty() {
            return Err(Error::Config("no spaces configured".into()));
        }
        if self.suites.is_empty() {
            return Err(Error::Config("no suites selected".into()));
        }
        for (name, v) in [("tolRel", self.tol_rel), ("tolAbs", self.tol_abs)] {
            if !(v >= 0.0) || !v.is_finite() {
                return Err(Error::Config(format!("{name} must be a finite nonnegative number, got {v}")));
            }
        }
        if !(self.condition_cap >= 1.0) || !self.condition_cap.is_finite() {
            return Err(Error::Config(format!("conditionCap must be ≥ 1, got {}", self.condition_cap)));
        }
        for (i, s) in self.spaces.iter().enumerate() {
            s.build().map_err(|e| Error::Config(format!("space {i}: {e}")))?;
        }
        let mut out = Vec::new();
        for sel in &self.suites {
            if sel.id() == "all" {
                if !matches!(sel, SuiteSelection::Id(_)) {
                    return Err(Error::Config("\"all\" takes no parameters".into()));
                }
                out.extend(SuiteId::ALL.iter().map(|&id| ResolvedSuite { id, params: ParamGrid::default() }));
                continue;
            }
            let id: SuiteId = sel.id().parse()?;
            let params = sel.params();
            id.combos(&params).map_err(|e| Error::Config(format!("suite {}: {e}", id.as_str())))?;
            out.push(ResolvedSuite { id, params });
        }
        Ok(out)
    }
}
