//! One certifier per inequality.
//!
//! A certifier evaluates both sides of an inequality on a concrete instance
//! and returns a [`Certification`]: the asserted [`Certificate`]s (headline
//! first) plus unasserted notes recording variants whose status is only
//! observed. Whenever a right-hand side contains a grid Berezin number the
//! certifier also checks the inequality pointwise at every grid point,
//! because the grid maximum only bounds the true supremum from below.

mod blocks;
mod cartesian;
mod classical;
mod products;

use std::collections::BTreeMap;

use nalgebra::DVector;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::calculus::{
    adjoint, apply_pair_to_modulus, spectral_radius, FunctionPair, HermitianOperator, Operator, PairSide,
};
use crate::error::{Error, Result};
use crate::generators::IntertwinedPair;

pub use blocks::{cert_offdiag_convex, cert_offdiag_power, cert_polarization, ConvexFn};
pub use cartesian::{cert_cartesian_1, cert_cartesian_2, cert_mccarthy, cert_mixed_schwarz, cert_power_sum};
pub use classical::{cert_ber1, cert_ki1, cert_ki3};
pub use products::{
    cert_cor_alpha, cert_lemma_refined_cs, cert_lemma_schwarz, cert_prop_refined, cert_remark_chain, cert_thm_half_rb,
    cert_thm_minmod, cert_thm_power_young, cert_thm_power_young_refined, cert_thm_young_refined, cert_young_scalar,
    ConjugateExponents, MinmodExponent,
};

/// Slack for refinement-dominance checks (refined RHS ≤ unrefined RHS).
pub const DOMINANCE_TOL: f64 = 1e-12;

/// Agreement required between two routes to the same quantity
/// (specialisations), relative to `max(1, |value|)`.
pub const SPECIALIZATION_TOL: f64 = 1e-12;

/// `holds ⇔ lhs ≤ rhs·(1 + rel) + abs·max(1, rhs)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub rel: f64,
    pub abs: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self { rel: 1e-9, abs: 1e-12 }
    }
}

impl Tolerance {
    pub const EXACT: Tolerance = Tolerance { rel: 0.0, abs: 0.0 };

    pub fn absolute(abs: f64) -> Self {
        Self { rel: 0.0, abs }
    }

    /// Positive when `lhs` exceeds the tolerated bound.
    pub fn excess(&self, lhs: f64, rhs: f64) -> f64 {
        lhs - rhs * (1.0 + self.rel) - self.abs * rhs.max(1.0)
    }

    pub fn holds(&self, lhs: f64, rhs: f64) -> bool {
        self.excess(lhs, rhs) <= 0.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Checked at every grid point; the worst point is reported.
    Pointwise,
    /// Grid suprema on both sides.
    Sup,
    /// A vector or scalar inequality evaluated as given.
    Direct,
    /// Refined bound against the bound it refines.
    Dominance,
    /// Two computational routes to the same value.
    Consistency,
}

impl Mode {
    pub fn as_str(&self) -> &'static str {
        match self {
            Mode::Pointwise => "pointwise",
            Mode::Sup => "sup",
            Mode::Direct => "direct",
            Mode::Dominance => "dominance",
            Mode::Consistency => "consistency",
        }
    }
}

pub type Params = BTreeMap<String, f64>;

/// One evaluated inequality `lhs ≤ rhs`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Certificate {
    pub theorem_id: String,
    pub mode: Mode,
    pub params: Params,
    pub lhs: f64,
    pub rhs: f64,
    pub gap: f64,
    pub holds: bool,
    pub witness_index: Option<usize>,
}

impl Certificate {
    pub fn new(theorem_id: impl Into<String>, mode: Mode, lhs: f64, rhs: f64, tol: &Tolerance) -> Self {
        Self {
            theorem_id: theorem_id.into(),
            mode,
            params: Params::new(),
            lhs,
            rhs,
            gap: rhs - lhs,
            holds: lhs.is_finite() && rhs.is_finite() && tol.holds(lhs, rhs),
            witness_index: None,
        }
    }

    /// Checks `lhs[i] ≤ rhs[i]` for every grid point and reports the point
    /// with the largest tolerance excess.
    pub fn pointwise(theorem_id: impl Into<String>, lhs: &[f64], rhs: &[f64], tol: &Tolerance) -> Self {
        debug_assert_eq!(lhs.len(), rhs.len());
        let mut worst = 0;
        let mut worst_excess = f64::NEG_INFINITY;
        for (i, (l, r)) in lhs.iter().zip(rhs).enumerate() {
            let e = tol.excess(*l, *r);
            // NaN excess always wins so it is never hidden behind a finite one
            if e > worst_excess || e.is_nan() {
                worst = i;
                worst_excess = e;
                if e.is_nan() {
                    break;
                }
            }
        }
        Self::new(theorem_id, Mode::Pointwise, lhs[worst], rhs[worst], tol).with_witness(worst)
    }

    /// Consistency check: `|a − b| / max(1, |a|) ≤ bound`.
    pub fn agreement(theorem_id: impl Into<String>, pairs: &[(f64, f64)], bound: f64) -> Self {
        let worst = pairs.iter().map(|(a, b)| (a - b).abs() / a.abs().max(1.0)).fold(0.0, |m: f64, d| {
            if d.is_nan() {
                f64::NAN
            } else {
                m.max(d)
            }
        });
        Self::new(theorem_id, Mode::Consistency, worst, bound, &Tolerance::EXACT)
    }

    pub fn with_witness(mut self, index: usize) -> Self {
        self.witness_index = Some(index);
        self
    }

    pub fn with_params(mut self, params: &Params) -> Self {
        self.params.extend(params.iter().map(|(k, v)| (k.clone(), *v)));
        self
    }

    pub fn with_param(mut self, key: &str, value: f64) -> Self {
        self.params.insert(key.to_string(), value);
        self
    }

    /// `(rhs − lhs) / max(1, rhs)`.
    pub fn relative_gap(&self) -> f64 {
        self.gap / self.rhs.max(1.0)
    }
}

/// Result of one certifier call.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Certification {
    pub theorem_id: String,
    /// Asserted certificates; the first one is the headline.
    pub certificates: Vec<Certificate>,
    /// Evaluated but not asserted.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<Certificate>,
}

impl Certification {
    fn new(theorem_id: &str, params: &Params, certificates: Vec<Certificate>) -> Self {
        Self {
            theorem_id: theorem_id.to_string(),
            certificates: certificates.into_iter().map(|c| c.with_params(params)).collect(),
            notes: Vec::new(),
        }
    }

    fn with_notes(mut self, params: &Params, notes: Vec<Certificate>) -> Self {
        self.notes.extend(notes.into_iter().map(|c| c.with_params(params)));
        self
    }

    pub fn holds(&self) -> bool {
        self.certificates.iter().all(|c| c.holds)
    }

    pub fn headline(&self) -> &Certificate {
        &self.certificates[0]
    }

    pub fn find(&self, theorem_id: &str, mode: Mode) -> Option<&Certificate> {
        self.certificates.iter().chain(&self.notes).find(|c| c.theorem_id == theorem_id && c.mode == mode)
    }
}

pub(crate) fn params(entries: &[(&str, f64)]) -> Params {
    entries.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

pub(crate) fn max_of(values: &[f64]) -> f64 {
    values.iter().copied().fold(f64::NEG_INFINITY, f64::max)
}

pub(crate) fn min_of(values: &[f64]) -> f64 {
    values.iter().copied().fold(f64::INFINITY, f64::min)
}

pub(crate) fn require_unit(v: &DVector<Complex64>, name: &str) -> Result<()> {
    let n = v.norm();
    if (n - 1.0).abs() > 1e-12 {
        return Err(Error::ParameterDomain(format!("{name} must be a unit vector, ‖{name}‖ = {n}")));
    }
    Ok(())
}

pub(crate) fn require_len(v: &DVector<Complex64>, dim: usize, name: &str) -> Result<()> {
    if v.len() != dim {
        return Err(Error::DimensionMismatch(format!("{name} has length {}, expected {dim}", v.len())));
    }
    Ok(())
}

/// Shared pieces for the product theorems: `AB`, `r(B)` and the pair applied to `|A|`, `|A*|`.
pub(crate) struct PairTerms<'a> {
    pub pair: &'a IntertwinedPair,
    pub fp: &'a FunctionPair,
    pub ab: Operator,
    pub r_b: f64,
    a_star: Operator,
}

impl<'a> PairTerms<'a> {
    pub fn new(pair: &'a IntertwinedPair, fp: &'a FunctionPair) -> Result<Self> {
        if !pair.a.is_square() || pair.b.nrows() != pair.a.dim() || !pair.b.is_square() {
            return Err(Error::DimensionMismatch("A and B must be square of one size".into()));
        }
        Ok(Self { pair, fp, ab: &pair.a * &pair.b, r_b: spectral_radius(&pair.b)?, a_star: adjoint(&pair.a) })
    }

    pub fn dim(&self) -> usize {
        self.pair.dim()
    }

    /// `f^s(|A|)`.
    pub fn f_pow(&self, s: f64) -> Result<HermitianOperator> {
        apply_pair_to_modulus(self.fp, PairSide::F, s, &self.pair.a)
    }

    /// `g^s(|A*|)`.
    pub fn g_pow(&self, s: f64) -> Result<HermitianOperator> {
        apply_pair_to_modulus(self.fp, PairSide::G, s, &self.a_star)
    }

    pub fn params(&self) -> Params {
        let mut p = Params::new();
        if let Some(alpha) = self.fp.alpha() {
            p.insert("pairAlpha".into(), alpha);
        }
        p
    }
}
