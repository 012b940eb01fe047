use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relative tolerance of the `f(t)g(t) = t` check at application points.
pub const PAIR_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairSide {
    F,
    G,
}

/// Nonnegative functions `(f, g)` on `[0, ∞)` with `f(t)g(t) = t`.
///
/// Custom pairs are tabulated: `f` is interpolated linearly in `t` and `g`
/// is taken as `t / f(t)` wherever `f(t) > 0`, so the product identity holds
/// at every application point and not only at the samples.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "FunctionPairSpec", into = "FunctionPairSpec")]
pub enum FunctionPair {
    /// `f(t) = t^α`, `g(t) = t^{1−α}`, `α ∈ [0, 1]`.
    Power {
        alpha: f64,
    },
    Custom(Tabulated),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Tabulated {
    t: Vec<f64>,
    f: Vec<f64>,
    g: Vec<f64>,
}

/// JSON form: `{"kind": "power", "alpha": α}` or
/// `{"kind": "custom", "samples": [[t, f(t), g(t)], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FunctionPairSpec {
    Power { alpha: f64 },
    Custom { samples: Vec<[f64; 3]> },
}

impl TryFrom<FunctionPairSpec> for FunctionPair {
    type Error = Error;

    fn try_from(spec: FunctionPairSpec) -> Result<Self> {
        match spec {
            FunctionPairSpec::Power { alpha } => FunctionPair::power(alpha),
            FunctionPairSpec::Custom { samples } => FunctionPair::custom(&samples),
        }
    }
}

impl From<FunctionPair> for FunctionPairSpec {
    fn from(p: FunctionPair) -> Self {
        match p {
            FunctionPair::Power { alpha } => FunctionPairSpec::Power { alpha },
            FunctionPair::Custom(tab) => {
                FunctionPairSpec::Custom { samples: (0..tab.t.len()).map(|i| [tab.t[i], tab.f[i], tab.g[i]]).collect() }
            }
        }
    }
}

fn product_ok(t: f64, product: f64) -> bool {
    (product - t).abs() <= PAIR_TOL * t
}

impl FunctionPair {
    pub fn power(alpha: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&alpha) {
            return Err(Error::ParameterDomain(format!("power pair needs alpha in [0, 1], got {alpha}")));
        }
        Ok(Self::Power { alpha })
    }

    /// Builds a tabulated pair from `[t, f(t), g(t)]` samples.
    pub fn custom(samples: &[[f64; 3]]) -> Result<Self> {
        if samples.len() < 2 {
            return Err(Error::ParameterDomain("custom pair needs at least two samples".into()));
        }
        let mut prev = f64::NEG_INFINITY;
        for &[t, f, g] in samples {
            if ![t, f, g].iter().all(|x| x.is_finite()) || t < 0.0 || f < 0.0 || g < 0.0 {
                return Err(Error::ParameterDomain(format!("invalid sample [{t}, {f}, {g}]")));
            }
            if t <= prev {
                return Err(Error::ParameterDomain("sample abscissae must increase strictly".into()));
            }
            if t > 0.0 && f == 0.0 {
                return Err(Error::ParameterDomain(format!("f vanishes at t = {t} > 0")));
            }
            if !product_ok(t, f * g) {
                return Err(Error::PairViolation { t, product: f * g });
            }
            prev = t;
        }
        Ok(Self::Custom(Tabulated {
            t: samples.iter().map(|s| s[0]).collect(),
            f: samples.iter().map(|s| s[1]).collect(),
            g: samples.iter().map(|s| s[2]).collect(),
        }))
    }

    /// The `α` of a power pair.
    pub fn alpha(&self) -> Option<f64> {
        match self {
            Self::Power { alpha } => Some(*alpha),
            Self::Custom(_) => None,
        }
    }

    /// `f = g = √t`.
    pub fn is_balanced(&self) -> bool {
        self.alpha() == Some(0.5)
    }

    /// Short label for reports.
    pub fn label(&self) -> String {
        match self {
            Self::Power { alpha } => format!("power({alpha})"),
            Self::Custom(tab) => format!("custom({} samples)", tab.t.len()),
        }
    }

    /// `(f(t), g(t))` without the product check.
    pub fn eval(&self, t: f64) -> Result<(f64, f64)> {
        match self {
            Self::Power { alpha } => Ok((t.powf(*alpha), t.powf(1.0 - alpha))),
            Self::Custom(tab) => tab.eval(t),
        }
    }

    /// `(f(t), g(t))`, failing with [`Error::PairViolation`] when
    /// `|f(t)g(t) − t| > 1e−10·t`.
    pub fn checked_eval(&self, t: f64) -> Result<(f64, f64)> {
        let (f, g) = self.eval(t)?;
        if !product_ok(t, f * g) {
            return Err(Error::PairViolation { t, product: f * g });
        }
        Ok((f, g))
    }
}

impl Tabulated {
    fn eval(&self, t: f64) -> Result<(f64, f64)> {
        let (lo, hi) = (self.t[0], self.t[self.t.len() - 1]);
        if t < lo || t > hi {
            return Err(Error::ParameterDomain(format!("t = {t} outside tabulated range [{lo}, {hi}]")));
        }
        let k = match self.t.partition_point(|&s| s <= t) {
            0 => 0,
            k if k >= self.t.len() => self.t.len() - 2,
            k => k - 1,
        };
        let w = (t - self.t[k]) / (self.t[k + 1] - self.t[k]);
        let f = self.f[k] + w * (self.f[k + 1] - self.f[k]);
        let g = if f > 0.0 { t / f } else { self.g[k] + w * (self.g[k + 1] - self.g[k]) };
        Ok((f, g))
    }
}
