//! Off-diagonal block operators on `H(Ω₁) ⊕ H(Ω₂)` and the polarization identity.

use nalgebra::DVector;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{params, Certificate, Certification, Mode, Params, Tolerance};
use crate::berezin::{berezin_number, rotation_scan_ber};
use crate::calculus::{
    apply_pair, block_offdiag, herm_fun, inner, modulus, modulus_power, op_norm, FunctionPair, Operator, PairSide,
};
use crate::error::{Error, Result};
use crate::rkhs::{DirectSumSpace, KernelSpace};

/// Agreement between the power corollary and the generic convex bound.
pub const OFFDIAG_AGREEMENT_TOL: f64 = 1e-10;

/// Convex, nondecreasing `h ≥ 0` on `[0, ∞)` with `h(0) = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ConvexFn {
    /// `t^p`, `p ≥ 1`.
    Power { p: f64 },
    /// `e^t − 1`.
    Expm1,
}

impl ConvexFn {
    pub fn power(p: f64) -> Result<Self> {
        let h = ConvexFn::Power { p };
        h.validate()?;
        Ok(h)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            ConvexFn::Power { p } if !(p >= 1.0) || !p.is_finite() => {
                Err(Error::ParameterDomain(format!("t^p is convex only for p ≥ 1, got {p}")))
            }
            _ => Ok(()),
        }
    }

    pub fn eval(&self, t: f64) -> f64 {
        match *self {
            ConvexFn::Power { p } => t.max(0.0).powf(p),
            ConvexFn::Expm1 => t.exp_m1(),
        }
    }

    pub fn label(&self) -> String {
        match self {
            ConvexFn::Power { p } => format!("t^{p}"),
            ConvexFn::Expm1 => "exp(t)-1".into(),
        }
    }

    fn param(&self) -> f64 {
        match *self {
            ConvexFn::Power { p } => p,
            ConvexFn::Expm1 => 0.0,
        }
    }
}

fn check_blocks(b: &Operator, c: &Operator, space: &DirectSumSpace) -> Result<Operator> {
    let t = block_offdiag(b, c)?;
    let (n1, n2) = (space.left().dim(), space.right().dim());
    if b.nrows() != n1 || b.ncols() != n2 {
        return Err(Error::DimensionMismatch(format!(
            "B is {}x{} but the direct sum has blocks {n1} and {n2}",
            b.nrows(),
            b.ncols()
        )));
    }
    Ok(t)
}

/// `¼‖h(f²(|X|)) + h(g²(|X|))‖`.
fn convex_quarter(x: &Operator, fp: &FunctionPair, h: &ConvexFn) -> Result<f64> {
    let m = modulus(x)?;
    let f2 = apply_pair(fp, PairSide::F, 2.0, &m)?;
    let g2 = apply_pair(fp, PairSide::G, 2.0, &m)?;
    let sum = herm_fun(|t| h.eval(t), &f2)?.add(&herm_fun(|t| h.eval(t), &g2)?);
    Ok(0.25 * op_norm(&sum)?)
}

/// `¼‖f²(|X|) + g²(|X|)‖`.
fn linear_quarter(x: &Operator, fp: &FunctionPair) -> Result<f64> {
    convex_quarter(x, fp, &ConvexFn::Power { p: 1.0 })
}

/// `h(ber(T)) ≤ ¼‖h(f²(|C|)) + h(g²(|C|))‖ + ¼‖h(f²(|B|)) + h(g²(|B|))‖`
/// for `T = [[0, B], [C, 0]]`.
///
/// Also certified: the same bound with `h = t`, and the rotation-scan
/// estimate of `ber(T)` (which never exceeds the grid value) against the
/// headline right side.
pub fn cert_offdiag_convex(
    b: &Operator,
    c: &Operator,
    fp: &FunctionPair,
    h: &ConvexFn,
    space: &DirectSumSpace,
    angle_count: usize,
    tol: &Tolerance,
) -> Result<Certification> {
    h.validate()?;
    let t = check_blocks(b, c, space)?;
    let ber_t = berezin_number(&t, space)?;
    let scan = rotation_scan_ber(&t, space, angle_count)?;
    let rhs = convex_quarter(c, fp, h)? + convex_quarter(b, fp, h)?;
    let linear = linear_quarter(c, fp)? + linear_quarter(b, fp)?;

    let id = "offdiag-convex";
    let mut prm = params(&[("h", h.param()), ("angleCount", angle_count as f64)]);
    if let Some(a) = fp.alpha() {
        prm.insert("pairAlpha".into(), a);
    }
    let certs = vec![
        Certificate::new(id, Mode::Sup, h.eval(ber_t), rhs, tol),
        Certificate::new(format!("{id}:linear"), Mode::Sup, ber_t, linear, tol),
        Certificate::new(format!("{id}:rotation"), Mode::Sup, h.eval(scan), rhs, tol),
    ];
    Ok(Certification::new(id, &prm, certs))
}

/// `ber(T)^p ≤ ¼‖|B|^{2pα} + |B|^{2p(1−α)}‖ + ¼‖|C|^{2pα} + |C|^{2p(1−α)}‖`,
/// plus agreement with [`cert_offdiag_convex`] for `h = t^p` and the power pair.
pub fn cert_offdiag_power(
    b: &Operator,
    c: &Operator,
    alpha: f64,
    p: f64,
    space: &DirectSumSpace,
    tol: &Tolerance,
) -> Result<Certification> {
    let fp = FunctionPair::power(alpha)?;
    let h = ConvexFn::power(p)?;
    let t = check_blocks(b, c, space)?;
    let ber_t = berezin_number(&t, space)?;
    let quarter = |x: &Operator| -> Result<f64> {
        let s = modulus_power(x, 2.0 * p * alpha)?.add(&modulus_power(x, 2.0 * p * (1.0 - alpha))?);
        Ok(0.25 * op_norm(&s)?)
    };
    let rhs = quarter(b)? + quarter(c)?;
    let generic = convex_quarter(c, &fp, &h)? + convex_quarter(b, &fp, &h)?;

    let id = "offdiag-power";
    let prm = params(&[("alpha", alpha), ("p", p)]);
    let certs = vec![
        Certificate::new(id, Mode::Sup, ber_t.powf(p), rhs, tol),
        Certificate::agreement(format!("{id}:specialization"), &[(rhs, generic)], OFFDIAG_AGREEMENT_TOL),
    ];
    Ok(Certification::new(id, &prm, certs))
}

fn polarize(x: &DVector<Complex64>, y: &DVector<Complex64>, ks: std::ops::Range<u32>) -> Complex64 {
    let i = Complex64::new(0.0, 1.0);
    ks.map(|k| {
        let ik = i.powu(k);
        ik * (x + y * ik).norm_squared()
    })
    .sum::<Complex64>()
        * 0.25
}

/// `⟨x, y⟩ = ¼ Σ_{k=0}^{3} i^k ‖x + i^k y‖²`.
///
/// The certificate compares `|reconstructed − direct|` with
/// `1e−10·(1 + ‖x‖‖y‖)`. The sum over `k = 1..3` only is kept as a note.
pub fn cert_polarization(x: &DVector<Complex64>, y: &DVector<Complex64>) -> Result<Certification> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch(format!("x has length {}, y has length {}", x.len(), y.len())));
    }
    let direct = inner(x, y);
    let full = polarize(x, y, 0..4);
    let partial = polarize(x, y, 1..4);
    let bound = 1e-10 * (1.0 + x.norm() * y.norm());
    let id = "polarization";
    let prm: Params = params(&[
        ("reconstructedRe", full.re),
        ("reconstructedIm", full.im),
        ("directRe", direct.re),
        ("directIm", direct.im),
    ]);
    let certs = vec![Certificate::new(id, Mode::Consistency, (full - direct).norm(), bound, &Tolerance::EXACT)];
    let notes = vec![Certificate::new(
        format!("{id}:partial-range"),
        Mode::Consistency,
        (partial - direct).norm(),
        bound,
        &Tolerance::EXACT,
    )];
    Ok(Certification::new(id, &prm, certs).with_notes(&prm, notes))
}
