//! Seeded certification suites.
//!
//! A suite pairs one certifier with an instance recipe and a parameter grid.
//! Trial `t` on the `s`-th configured space uses the seed
//! `derive_seed(masterSeed, s, t)`, independent of the suite, so suites that
//! share a recipe (a refined bound and the bound it refines) see the same
//! instances. Trials run in parallel and are collected in trial order, so a
//! report does not depend on scheduling.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::calculus::{FunctionPair, Operator};
use crate::certifiers::{self as cert, Certificate, Certification, ConjugateExponents, ConvexFn, Mode, Tolerance};
use crate::config::{ParamGrid, RunConfig, RunMode};
use crate::error::{Error, Result};
use crate::generators::{
    derive_seed, gen_commuting_pair, gen_intertwined_pair, InstanceKind, InstanceSpec, IntertwinedPair, Sampler,
};
use crate::rkhs::{build_space, direct_sum, DirectSumSpace, GridSpec, KernelSpace, Model, SampledSpace};

/// Stream tag for the auxiliary draws of a trial (vectors, indices, scalars).
const AUX_STREAM: u64 = 0x5eed;

/// Every fourth pair trial uses the commuting family.
const COMMUTING_EVERY: u64 = 4;

/// Default angle count of the rotation scan in the off-diagonal suites.
pub const DEFAULT_ANGLE_COUNT: usize = 16;

/// Largest right summand in the off-diagonal direct sums.
const OFFDIAG_RIGHT_DIM: usize = 3;

macro_rules! suite_ids {
    ($($variant:ident => $name:literal,)*) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum SuiteId {
            $($variant,)*
        }

        impl SuiteId {
            pub const ALL: &'static [SuiteId] = &[$(SuiteId::$variant,)*];

            pub fn as_str(&self) -> &'static str {
                match self {
                    $(SuiteId::$variant => $name,)*
                }
            }
        }

        impl FromStr for SuiteId {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($name => Ok(SuiteId::$variant),)*
                    _ => Err(Error::Config(format!("unknown suite id {s:?}"))),
                }
            }
        }
    };
}

suite_ids! {
    LemmaSchwarz => "lemma-schwarz",
    LemmaRefinedCs => "lemma-refined-cs",
    ThmHalfRb => "thm-half-rB",
    RemarkChain => "remark-chain",
    ThmPowerYoung => "thm-power-young",
    PropRefined => "prop-refined",
    CorAlpha => "cor-alpha",
    ThmMinmod => "thm-minmod",
    YoungScalar => "young-scalar",
    ThmYoungRefined => "thm-young-refined",
    ThmPowerYoungRefined => "thm-power-young-refined",
    OffdiagConvex => "offdiag-convex",
    OffdiagPower => "offdiag-power",
    Polarization => "polarization",
    Mccarthy => "mccarthy",
    MixedSchwarz => "mixed-schwarz",
    PowerSum => "power-sum",
    Cartesian1 => "cartesian-1",
    Cartesian2 => "cartesian-2",
    Ki1 => "ki1",
    Ki3 => "ki3",
    Ber1 => "ber1",
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for SuiteId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for SuiteId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Knobs a suite reads from its [`ParamGrid`].
#[derive(Clone, Copy, Default)]
struct Knobs {
    p: Option<&'static [f64]>,
    alpha: Option<&'static [f64]>,
    pairs: bool,
    family: bool,
    h: bool,
    angles: bool,
}

const DEFAULT_PAIR_ALPHAS: &[f64] = &[0.5, 0.25, 0.75];
const DEFAULT_FAMILY_SIZES: &[usize] = &[1, 2, 3];

impl SuiteId {
    fn knobs(&self) -> Knobs {
        use SuiteId::*;
        let k = Knobs::default();
        match self {
            LemmaSchwarz | ThmHalfRb | RemarkChain | ThmYoungRefined => Knobs { pairs: true, ..k },
            LemmaRefinedCs => Knobs { p: Some(&[2.0, 2.5, 3.0, 4.0]), ..k },
            PropRefined | ThmMinmod => Knobs { p: Some(&[2.0, 3.0]), pairs: true, ..k },
            CorAlpha => Knobs { p: Some(&[2.0, 3.0]), alpha: Some(&[0.0, 0.3, 0.5, 1.0]), ..k },
            ThmPowerYoung | ThmPowerYoungRefined => {
                Knobs { p: Some(&[1.5, 2.0, 3.0]), alpha: Some(&[2.0, 3.0]), pairs: true, ..k }
            }
            OffdiagConvex => Knobs { pairs: true, h: true, angles: true, ..k },
            OffdiagPower => Knobs { p: Some(&[1.0, 2.0]), alpha: Some(&[0.3, 0.5]), ..k },
            Mccarthy => Knobs { p: Some(&[0.5, 1.0, 2.5]), ..k },
            MixedSchwarz => Knobs { p: Some(&[0.0, 0.3, 0.5, 1.0]), ..k },
            PowerSum => Knobs { p: Some(&[1.0, 2.0, 2.7]), ..k },
            Cartesian1 | Cartesian2 => Knobs { p: Some(&[1.0, 1.5, 2.0]), family: true, ..k },
            YoungScalar | Polarization | Ki1 | Ki3 | Ber1 => k,
        }
    }

    /// Suites whose instances are intertwined pairs.
    pub fn uses_pair(&self) -> bool {
        use SuiteId::*;
        matches!(
            self,
            LemmaSchwarz
                | ThmHalfRb
                | RemarkChain
                | ThmPowerYoung
                | PropRefined
                | CorAlpha
                | ThmMinmod
                | ThmYoungRefined
                | ThmPowerYoungRefined
        )
    }

    /// The unrefined suite a refined suite is compared with.
    pub fn refines(&self) -> Option<SuiteId> {
        match self {
            SuiteId::ThmYoungRefined => Some(SuiteId::ThmHalfRb),
            SuiteId::ThmPowerYoungRefined => Some(SuiteId::ThmPowerYoung),
            _ => None,
        }
    }

    /// Expands a grid into the cyclic list of parameter combinations and
    /// checks each against the certifier's preconditions.
    pub fn combos(&self, grid: &ParamGrid) -> Result<Vec<Combo>> {
        let k = self.knobs();
        let unused = |name: &str| Error::ParameterDomain(format!("parameter {name:?} is not used by this suite"));
        if grid.p.is_some() && k.p.is_none() {
            return Err(unused("p"));
        }
        if grid.alpha.is_some() && k.alpha.is_none() {
            return Err(unused("alpha"));
        }
        if grid.pairs.is_some() && !k.pairs {
            return Err(unused("pairs"));
        }
        if grid.family_size.is_some() && !k.family {
            return Err(unused("familySize"));
        }
        if grid.h.is_some() && !k.h {
            return Err(unused("h"));
        }
        if grid.angle_count.is_some() && !k.angles {
            return Err(unused("angleCount"));
        }

        let ps = list_or(&grid.p, k.p.unwrap_or(&[f64::NAN]))?;
        let alphas = list_or(&grid.alpha, k.alpha.unwrap_or(&[f64::NAN]))?;
        let pairs = match (&grid.pairs, k.pairs) {
            (Some(v), _) if v.is_empty() => return Err(Error::ParameterDomain("empty \"pairs\" list".into())),
            (Some(v), _) => v.clone(),
            (None, true) => DEFAULT_PAIR_ALPHAS.iter().map(|&a| FunctionPair::Power { alpha: a }).collect(),
            (None, false) => vec![FunctionPair::Power { alpha: 0.5 }],
        };
        let families = list_or(&grid.family_size, if k.family { DEFAULT_FAMILY_SIZES } else { &[1] })?;
        let hs = match &grid.h {
            Some(v) if v.is_empty() => return Err(Error::ParameterDomain("empty \"h\" list".into())),
            Some(v) => v.clone(),
            None => vec![ConvexFn::Power { p: 1.0 }, ConvexFn::Power { p: 2.0 }, ConvexFn::Expm1],
        };
        let hs = if k.h { hs } else { vec![ConvexFn::Power { p: 1.0 }] };
        let angle_count = grid.angle_count.unwrap_or(DEFAULT_ANGLE_COUNT);

        let mut out = Vec::new();
        for &p in &ps {
            for &alpha in &alphas {
                for pair in &pairs {
                    for &family_size in &families {
                        for h in &hs {
                            let c = Combo { p, alpha, pair: pair.clone(), family_size, h: *h, angle_count };
                            self.check(&c)?;
                            out.push(c);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    fn check(&self, c: &Combo) -> Result<()> {
        use SuiteId::*;
        let domain = |msg: String| Err(Error::ParameterDomain(msg));
        let at_least = |min: f64| {
            if c.p >= min && c.p.is_finite() {
                Ok(())
            } else {
                domain(format!("p must be at least {min}, got {}", c.p))
            }
        };
        let unit_alpha = || {
            if (0.0..=1.0).contains(&c.alpha) {
                Ok(())
            } else {
                domain(format!("alpha must lie in [0, 1], got {}", c.alpha))
            }
        };
        match self {
            LemmaRefinedCs | PropRefined | ThmMinmod => at_least(2.0),
            CorAlpha => at_least(2.0).and_then(|_| unit_alpha()),
            ThmPowerYoung | ThmPowerYoungRefined => ConjugateExponents::new(c.alpha)?.check_power(c.p),
            OffdiagPower => at_least(1.0).and_then(|_| unit_alpha()),
            OffdiagConvex => {
                c.h.validate()?;
                if c.angle_count < 4 {
                    return domain(format!("angleCount must be at least 4, got {}", c.angle_count));
                }
                Ok(())
            }
            Mccarthy if !(c.p > 0.0 && c.p.is_finite()) => domain(format!("p must be positive, got {}", c.p)),
            MixedSchwarz if !(0.0..=1.0).contains(&c.p) => domain(format!("p must lie in [0, 1], got {}", c.p)),
            PowerSum => at_least(1.0),
            Cartesian1 | Cartesian2 => {
                at_least(1.0)?;
                if c.family_size == 0 {
                    return domain("familySize must be at least 1".into());
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }
}

fn list_or<T: Copy>(given: &Option<Vec<T>>, default: &[T]) -> Result<Vec<T>> {
    match given {
        Some(v) if v.is_empty() => Err(Error::ParameterDomain("empty parameter list".into())),
        Some(v) => Ok(v.clone()),
        None => Ok(default.to_vec()),
    }
}

/// One point of a suite's parameter grid. Fields a suite does not read hold
/// placeholders.
#[derive(Clone, Debug, PartialEq)]
pub struct Combo {
    pub p: f64,
    pub alpha: f64,
    pub pair: FunctionPair,
    pub family_size: usize,
    pub h: ConvexFn,
    pub angle_count: usize,
}

/// Spaces a suite is evaluated on.
struct SpaceCtx<'a> {
    space: &'a SampledSpace,
    sum: Option<DirectSumSpace>,
}

impl<'a> SpaceCtx<'a> {
    fn new(id: SuiteId, space: &'a SampledSpace) -> Result<Self> {
        let sum = match id {
            SuiteId::OffdiagConvex | SuiteId::OffdiagPower => {
                let right = build_space(Model::Diagonal, space.dim().min(OFFDIAG_RIGHT_DIM), &GridSpec::Index)?;
                Some(direct_sum(space, &right))
            }
            _ => None,
        };
        Ok(Self { space, sum })
    }
}

/// The pair instance of a trial, shared by every pair suite.
///
/// Unless `general` is set, only the commuting family is drawn: the product
/// bounds for pairs other than `f = g = √t` need `B` to commute with `|A|`
/// and fail on general intertwined pairs.
pub fn pair_instance(dim: usize, seed: u64, trial: u64, cap: f64, general: bool) -> Result<IntertwinedPair> {
    let spec = InstanceSpec::new(InstanceKind::IntertwinedPair, dim, seed).with_condition_cap(cap);
    if !general || trial % COMMUTING_EVERY == COMMUTING_EVERY - 1 {
        gen_commuting_pair(&spec)
    } else {
        gen_intertwined_pair(&spec)
    }
}

struct Trial<'a> {
    id: SuiteId,
    combo: &'a Combo,
    ctx: &'a SpaceCtx<'a>,
    seed: u64,
    trial: u64,
    witness: bool,
    cap: f64,
    unrestricted_pairs: bool,
    tol: Tolerance,
}

impl Trial<'_> {
    fn run(&self) -> Result<Certification> {
        use SuiteId::*;
        let space = self.ctx.space;
        let dim = space.dim();
        let c = self.combo;
        let tol = &self.tol;
        let mut aux = Sampler::new(derive_seed(self.seed, AUX_STREAM, 0));

        if self.id.uses_pair() {
            let (pair, fp) = if self.witness {
                (IntertwinedPair::identity(dim), FunctionPair::Power { alpha: 0.5 })
            } else {
                let balanced = match self.id {
                    CorAlpha => c.alpha == 0.5,
                    _ => c.pair.is_balanced(),
                };
                let general = balanced || self.unrestricted_pairs;
                (pair_instance(dim, self.seed, self.trial, self.cap, general)?, c.pair.clone())
            };
            let ex = || ConjugateExponents::new(c.alpha);
            return match self.id {
                LemmaSchwarz => {
                    let (x, y) = (aux.unit_vector(dim), aux.unit_vector(dim));
                    cert::cert_lemma_schwarz(&pair, &fp, &x, &y, tol)
                }
                ThmHalfRb => cert::cert_thm_half_rb(&pair, &fp, space, tol),
                RemarkChain => cert::cert_remark_chain(&pair, &fp, space, tol),
                ThmPowerYoung => cert::cert_thm_power_young(&pair, &fp, space, c.p, &ex()?, tol),
                ThmPowerYoungRefined => cert::cert_thm_power_young_refined(&pair, &fp, space, c.p, &ex()?, tol),
                ThmYoungRefined => cert::cert_thm_young_refined(&pair, &fp, space, tol),
                ThmMinmod => cert::cert_thm_minmod(&pair, &fp, space, c.p, tol),
                PropRefined => {
                    let (l, m) = (aux.index(space.len()), aux.index(space.len()));
                    cert::cert_prop_refined(&pair, &fp, space, c.p, l, m, tol)
                }
                CorAlpha => {
                    let (l, m) = (aux.index(space.len()), aux.index(space.len()));
                    cert::cert_cor_alpha(&pair, space, c.p, c.alpha, l, m, tol)
                }
                _ => unreachable!("not a pair suite"),
            };
        }

        match self.id {
            LemmaRefinedCs => {
                let h = aux.psd(dim, self.cap);
                let (x, y) = (aux.unit_vector(dim), aux.unit_vector(dim));
                cert::cert_lemma_refined_cs(&h, c.p, &x, &y, tol)
            }
            YoungScalar => {
                let (a, b, alpha) = if self.witness {
                    (1.0, 4.0, 0.5)
                } else {
                    (aux.log_uniform(1e-3, 1e3), aux.log_uniform(1e-3, 1e3), aux.uniform())
                };
                cert::cert_young_scalar(a, b, alpha, tol)
            }
            Polarization => {
                let (x, y) = (aux.vector(dim), aux.vector(dim));
                cert::cert_polarization(&x, &y)
            }
            Mccarthy => {
                let h = aux.psd(dim, self.cap);
                let x = aux.vector(dim);
                cert::cert_mccarthy(&h, c.p, &x, tol)
            }
            MixedSchwarz => {
                let a = aux.general(dim);
                let (x, y) = (aux.vector(dim), aux.vector(dim));
                cert::cert_mixed_schwarz(&a, c.p, &x, &y, tol)
            }
            PowerSum => {
                let k = 1 + aux.index(6);
                let xs: Vec<f64> = (0..k).map(|_| aux.log_uniform(1e-3, 1e3)).collect();
                cert::cert_power_sum(&xs, c.p, tol)
            }
            OffdiagConvex | OffdiagPower => {
                let sum = self.ctx.sum.as_ref().expect("direct sum built for off-diagonal suites");
                let (n1, n2) = (sum.left().dim(), sum.right().dim());
                let b = aux.rectangular(n1, n2);
                let cc = aux.rectangular(n2, n1);
                if self.id == OffdiagConvex {
                    cert::cert_offdiag_convex(&b, &cc, &c.pair, &c.h, sum, c.angle_count, tol)
                } else {
                    cert::cert_offdiag_power(&b, &cc, c.alpha, c.p, sum, tol)
                }
            }
            Cartesian1 | Cartesian2 => {
                let family: Vec<Operator> = if self.witness {
                    vec![Operator::identity(dim)]
                } else {
                    (0..c.family_size).map(|_| aux.general(dim)).collect()
                };
                if self.id == Cartesian1 {
                    cert::cert_cartesian_1(&family, space, c.p, tol)
                } else {
                    cert::cert_cartesian_2(&family, space, c.p, tol)
                }
            }
            Ki1 => cert::cert_ki1(&aux.general(dim), &aux.general(dim), tol),
            Ki3 => cert::cert_ki3(&aux.psd(dim, self.cap), &aux.psd(dim, self.cap), tol),
            Ber1 => cert::cert_ber1(&aux.psd(dim, self.cap), &aux.psd(dim, self.cap), tol),
            _ => unreachable!("pair suites handled above"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Violation {
    pub trial: u64,
    pub seed: u64,
    pub certificate: Certificate,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TrialError {
    pub trial: u64,
    pub seed: u64,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TrialRecord {
    pub trial: u64,
    pub seed: u64,
    pub certificates: Vec<Certificate>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<Certificate>,
}

/// Gap statistics over the headline certificates of a suite.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Summary {
    pub min_gap: Option<f64>,
    pub mean_gap: Option<f64>,
    /// Smallest `(rhs − lhs)/max(1, rhs)` over all asserted certificates.
    pub worst_rel_margin: Option<f64>,
}

/// How often an informational variant held.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct NoteTally {
    pub evaluated: usize,
    pub held: usize,
}

/// Tightest instance found in tighten mode.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Tightest {
    pub min_rel_gap: f64,
    pub trial: u64,
    pub seed: u64,
    pub theorem_id: String,
    pub mode: Mode,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SuiteEcho {
    pub params: ParamGrid,
    pub combos: usize,
    pub master_seed: u64,
    pub stream: u64,
    pub tolerance: Tolerance,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SuiteReport {
    pub suite_id: SuiteId,
    pub space: String,
    pub trials: usize,
    pub violations: Vec<Violation>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub errors: Vec<TrialError>,
    pub summary: Summary,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub notes: BTreeMap<String, NoteTally>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tighten: Option<Tightest>,
    pub config: SuiteEcho,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub certificates: Vec<TrialRecord>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.errors.is_empty()
    }
}

/// The certificate tighten mode ranks: the sup-mode certificate of the
/// suite's own theorem when there is one, the headline otherwise.
pub fn tighten_metric(c: &Certification) -> &Certificate {
    c.certificates.iter().find(|x| x.theorem_id == c.theorem_id && x.mode == Mode::Sup).unwrap_or_else(|| c.headline())
}

/// Runs one suite on one space.
#[allow(clippy::too_many_arguments)]
pub fn run_suite(
    id: SuiteId,
    grid: &ParamGrid,
    space: &SampledSpace,
    stream: u64,
    config: &RunConfig,
    tighten: bool,
) -> Result<SuiteReport> {
    let combos = id.combos(grid)?;
    let ctx = SpaceCtx::new(id, space)?;
    let tol = config.tolerance();
    let witness_suite =
        id.uses_pair() || matches!(id, SuiteId::YoungScalar | SuiteId::Cartesian1 | SuiteId::Cartesian2);

    let eval = |t: u64| -> (u64, Result<Certification>) {
        let seed = derive_seed(config.master_seed, stream, t);
        let trial = Trial {
            id,
            combo: &combos[(t as usize) % combos.len()],
            ctx: &ctx,
            seed,
            trial: t,
            witness: config.include_equality_witness && witness_suite && t == 0,
            cap: config.condition_cap,
            unrestricted_pairs: config.unrestricted_pairs,
            tol,
        };
        (seed, trial.run())
    };
    let n = config.trials as u64;
    let results: Vec<(u64, Result<Certification>)> =
        if config.parallel { (0..n).into_par_iter().map(eval).collect() } else { (0..n).map(eval).collect() };

    let mut violations = Vec::new();
    let mut errors = Vec::new();
    let mut records = Vec::new();
    let mut notes: BTreeMap<String, NoteTally> = BTreeMap::new();
    let mut gaps = Vec::new();
    let mut worst_rel: Option<f64> = None;
    let mut tightest: Option<Tightest> = None;

    for (t, (seed, res)) in results.into_iter().enumerate() {
        let t = t as u64;
        let c = match res {
            Ok(c) => c,
            Err(e) => {
                errors.push(TrialError { trial: t, seed, message: e.to_string() });
                continue;
            }
        };
        gaps.push(c.headline().gap);
        for x in &c.certificates {
            let r = x.relative_gap();
            worst_rel = Some(worst_rel.map_or(r, |w| if r.is_nan() || r < w { r } else { w }));
            if !x.holds {
                violations.push(Violation { trial: t, seed, certificate: x.clone() });
            }
        }
        for x in &c.notes {
            let tally = notes.entry(x.theorem_id.clone()).or_default();
            tally.evaluated += 1;
            tally.held += x.holds as usize;
        }
        if tighten {
            let m = tighten_metric(&c);
            let r = m.relative_gap();
            if tightest.as_ref().is_none_or(|b| r < b.min_rel_gap) {
                tightest =
                    Some(Tightest { min_rel_gap: r, trial: t, seed, theorem_id: m.theorem_id.clone(), mode: m.mode });
            }
        }
        if config.keep_certificates {
            records.push(TrialRecord { trial: t, seed, certificates: c.certificates, notes: c.notes });
        }
    }

    let summary = Summary {
        min_gap: gaps.iter().copied().reduce(f64::min),
        mean_gap: if gaps.is_empty() { None } else { Some(gaps.iter().sum::<f64>() / gaps.len() as f64) },
        worst_rel_margin: worst_rel,
    };
    Ok(SuiteReport {
        suite_id: id,
        space: space.label(),
        trials: config.trials,
        violations,
        errors,
        summary,
        notes,
        tighten: tightest,
        config: SuiteEcho {
            params: grid.clone(),
            combos: combos.len(),
            master_seed: config.master_seed,
            stream,
            tolerance: tol,
        },
        certificates: records,
    })
}

/// Runs every selected suite on every configured space, suite-major.
pub fn run(config: &RunConfig) -> Result<Vec<SuiteReport>> {
    let suites = config.resolve()?;
    let spaces = config.spaces.iter().map(|s| s.build()).collect::<Result<Vec<_>>>()?;
    let tighten = config.mode == RunMode::Tighten;
    let mut out = Vec::with_capacity(suites.len() * spaces.len());
    for s in &suites {
        for (stream, space) in spaces.iter().enumerate() {
            out.push(run_suite(s.id, &s.params, space, stream as u64, config, tighten)?);
        }
    }
    Ok(out)
}

pub fn run_certify(config: &RunConfig) -> Result<Vec<SuiteReport>> {
    let mut c = config.clone();
    c.mode = RunMode::Certify;
    run(&c)
}

pub fn run_tighten(config: &RunConfig) -> Result<Vec<SuiteReport>> {
    let mut c = config.clone();
    c.mode = RunMode::Tighten;
    run(&c)
}

/// 0 when every suite passed, 1 otherwise.
pub fn exit_code(reports: &[SuiteReport]) -> i32 {
    if reports.iter().all(SuiteReport::passed) {
        0
    } else {
        1
    }
}
