//! Power bounds for sums through Cartesian decompositions, and the scalar
//! and vector lemmas they rest on.

use nalgebra::DVector;
use num_complex::Complex64;

use super::{max_of, params, require_len, Certificate, Certification, Mode, Tolerance};
use crate::berezin::{berezin_set, real_symbols};
use crate::calculus::{adjoint, cartesian_parts, herm_fun, inner, modulus_power, HermitianOperator, Operator};
use crate::error::{Error, Result};
use crate::rkhs::KernelSpace;

/// `⟨H^p x,x⟩ ≥ ‖x‖^{2(1−p)}⟨Hx,x⟩^p` for `p ≥ 1`, reversed for `0 < p < 1`.
pub fn cert_mccarthy(h: &HermitianOperator, p: f64, x: &DVector<Complex64>, tol: &Tolerance) -> Result<Certification> {
    if !(p > 0.0) || !p.is_finite() {
        return Err(Error::ParameterDomain(format!("p must be positive, got {p}")));
    }
    require_len(x, h.dim(), "x")?;
    let norm = x.norm();
    if norm == 0.0 {
        return Err(Error::ParameterDomain("x must be nonzero".into()));
    }
    let spectrum = h.psd_spectral()?;
    let hp = spectrum.map(|t| t.powf(p)).form(x);
    let hx = spectrum.map(|t| t).form(x).max(0.0);
    let scaled = norm.powf(2.0 * (1.0 - p)) * hx.powf(p);
    let (lhs, rhs, branch) = if p >= 1.0 { (scaled, hp, 1.0) } else { (hp, scaled, -1.0) };
    let id = "mccarthy";
    let prm = params(&[("p", p), ("branch", branch)]);
    Ok(Certification::new(id, &prm, vec![Certificate::new(id, Mode::Direct, lhs, rhs, tol)]))
}

/// `|⟨Ax,y⟩|² ≤ ⟨|A|^{2p}x,x⟩⟨|A*|^{2(1−p)}y,y⟩` for `0 ≤ p ≤ 1`.
pub fn cert_mixed_schwarz(
    a: &Operator,
    p: f64,
    x: &DVector<Complex64>,
    y: &DVector<Complex64>,
    tol: &Tolerance,
) -> Result<Certification> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::ParameterDomain(format!("p must lie in [0, 1], got {p}")));
    }
    a.require_square("mixed Schwarz operator")?;
    require_len(x, a.dim(), "x")?;
    require_len(y, a.dim(), "y")?;
    let lhs = inner(&a.apply(x), y).norm_sqr();
    let left = modulus_power(a, 2.0 * p)?.form(x);
    let right = modulus_power(&adjoint(a), 2.0 * (1.0 - p))?.form(y);
    let id = "mixed-schwarz";
    Ok(Certification::new(id, &params(&[("p", p)]), vec![Certificate::new(id, Mode::Direct, lhs, left * right, tol)]))
}

/// `(Σ xₙ)^p ≤ k^{p−1} Σ xₙ^p`.
pub fn cert_power_sum(xs: &[f64], p: f64, tol: &Tolerance) -> Result<Certification> {
    if xs.is_empty() || xs.iter().any(|x| !(*x > 0.0) || !x.is_finite()) {
        return Err(Error::ParameterDomain("power sum needs a nonempty list of positive reals".into()));
    }
    if !(p >= 1.0) || !p.is_finite() {
        return Err(Error::ParameterDomain(format!("p must be at least 1, got {p}")));
    }
    let k = xs.len() as f64;
    let lhs = xs.iter().sum::<f64>().powf(p);
    let rhs = k.powf(p - 1.0) * xs.iter().map(|x| x.powf(p)).sum::<f64>();
    let id = "power-sum";
    Ok(Certification::new(id, &params(&[("p", p), ("k", k)]), vec![Certificate::new(id, Mode::Direct, lhs, rhs, tol)]))
}

fn check_family<S: KernelSpace + ?Sized>(family: &[Operator], space: &S, p: f64) -> Result<Operator> {
    if family.is_empty() {
        return Err(Error::ParameterDomain("family must be nonempty".into()));
    }
    if !(p >= 1.0) || !p.is_finite() {
        return Err(Error::ParameterDomain(format!("p must be at least 1, got {p}")));
    }
    let n = space.dim();
    for a in family {
        if !a.is_square() || a.dim() != n {
            return Err(Error::DimensionMismatch(format!(
                "family member is {}x{}, space has dim {n}",
                a.nrows(),
                a.ncols()
            )));
        }
    }
    Ok(family.iter().skip(1).fold(family[0].clone(), |acc, a| &acc + a))
}

/// `Σₙ (⟨Xₙ k̂_λ,k̂_λ⟩ + ⟨Yₙ k̂_λ,k̂_λ⟩)^{1/2}` at every grid point.
fn summed_roots<S: KernelSpace + ?Sized>(
    terms: &[(HermitianOperator, HermitianOperator)],
    space: &S,
) -> Result<Vec<f64>> {
    let mut acc = vec![0.0; space.len()];
    for (x, y) in terms {
        let sx = real_symbols(x, space)?;
        let sy = real_symbols(y, space)?;
        for (a, (u, v)) in acc.iter_mut().zip(sx.iter().zip(&sy)) {
            *a += (u + v).max(0.0).sqrt();
        }
    }
    Ok(acc)
}

#[allow(clippy::too_many_arguments)]
fn cartesian_certification<S: KernelSpace + ?Sized>(
    id: &str,
    sum: &Operator,
    roots: Vec<f64>,
    constant: f64,
    k: usize,
    p: f64,
    space: &S,
    tol: &Tolerance,
) -> Result<Certification> {
    let ber = berezin_set(sum, space)?;
    let rhs_pt: Vec<f64> = roots.iter().map(|r| constant * r).collect();
    let lhs_pt: Vec<f64> = ber.values.iter().map(|z| z.norm().powf(p)).collect();
    let prm = params(&[("p", p), ("k", k as f64), ("constant", constant)]);
    let certs = vec![
        Certificate::new(id, Mode::Sup, ber.ber_value.powf(p), max_of(&rhs_pt), tol).with_witness(ber.argmax_index),
        Certificate::pointwise(id, &lhs_pt, &rhs_pt, tol),
    ];
    Ok(Certification::new(id, &prm, certs))
}

/// `ber(Σ Aₙ)^p ≤ (√2 k)^{p−1} sup_λ Σₙ (⟨|Bₙ|^{2p}k̂_λ,k̂_λ⟩ + ⟨|Cₙ|^{2p}k̂_λ,k̂_λ⟩)^{1/2}`
/// with `Aₙ = Bₙ + iCₙ`.
pub fn cert_cartesian_1<S: KernelSpace + ?Sized>(
    family: &[Operator],
    space: &S,
    p: f64,
    tol: &Tolerance,
) -> Result<Certification> {
    let sum = check_family(family, space, p)?;
    let terms = family
        .iter()
        .map(|a| {
            let (b, c) = cartesian_parts(a)?;
            Ok((abs_power(&b, 2.0 * p)?, abs_power(&c, 2.0 * p)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let k = family.len();
    let constant = (2.0_f64.sqrt() * k as f64).powf(p - 1.0);
    cartesian_certification("cartesian-1", &sum, summed_roots(&terms, space)?, constant, k, p, space, tol)
}

/// `ber(Σ Aₙ)^p ≤ k^{p−1} 2^{p/2−1} sup_λ Σₙ (⟨|Bₙ+Cₙ|^{2p}k̂_λ,k̂_λ⟩ + ⟨|Bₙ−Cₙ|^{2p}k̂_λ,k̂_λ⟩)^{1/2}`.
pub fn cert_cartesian_2<S: KernelSpace + ?Sized>(
    family: &[Operator],
    space: &S,
    p: f64,
    tol: &Tolerance,
) -> Result<Certification> {
    let sum = check_family(family, space, p)?;
    let terms = family
        .iter()
        .map(|a| {
            let (b, c) = cartesian_parts(a)?;
            let plus = b.add(&c);
            let minus = b.add(&c.scale(-1.0));
            Ok((abs_power(&plus, 2.0 * p)?, abs_power(&minus, 2.0 * p)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let k = family.len();
    let constant = (k as f64).powf(p - 1.0) * 2.0_f64.powf(p / 2.0 - 1.0);
    cartesian_certification("cartesian-2", &sum, summed_roots(&terms, space)?, constant, k, p, space, tol)
}

/// `|H|^s` for Hermitian `H`.
fn abs_power(h: &HermitianOperator, s: f64) -> Result<HermitianOperator> {
    let sq = HermitianOperator::from_symmetrized(h.matrix() * h.matrix());
    herm_fun(|t| t.powf(s / 2.0), &sq)
}
