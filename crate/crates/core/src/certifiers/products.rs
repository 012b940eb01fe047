//! Inequalities for products `AB` with `|A|B = B*|A|`.

use nalgebra::DVector;
use num_complex::Complex64;

use super::{
    max_of, min_of, params, require_len, require_unit, Certificate, Certification, Mode, PairTerms, Params, Tolerance,
    DOMINANCE_TOL, SPECIALIZATION_TOL,
};
use crate::berezin::{berezin_set, real_symbols};
use crate::calculus::{
    herm_map, inner, min_modulus, modulus_power, op_norm, FunctionPair, HermitianOperator, Operator,
};
use crate::error::{Error, Result};
use crate::generators::IntertwinedPair;
use crate::rkhs::KernelSpace;

/// Conjugate exponents `α ≥ β > 1` with `1/α + 1/β = 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConjugateExponents {
    pub alpha: f64,
    pub beta: f64,
}

impl ConjugateExponents {
    /// `β = α/(α − 1)`.
    pub fn new(alpha: f64) -> Result<Self> {
        if !(alpha > 1.0) || !alpha.is_finite() {
            return Err(Error::ParameterDomain(format!("α must exceed 1, got {alpha}")));
        }
        Self::with_beta(alpha, alpha / (alpha - 1.0))
    }

    pub fn with_beta(alpha: f64, beta: f64) -> Result<Self> {
        if ((1.0 / alpha + 1.0 / beta) - 1.0).abs() > 1e-12 {
            return Err(Error::ParameterDomain(format!("1/α + 1/β ≠ 1 for α = {alpha}, β = {beta}")));
        }
        if !(alpha >= beta && beta > 1.0) {
            return Err(Error::ParameterDomain(format!("need α ≥ β > 1, got α = {alpha}, β = {beta}")));
        }
        Ok(Self { alpha, beta })
    }

    /// `r₀ = min(1/α, 1/β) = 1/α`.
    pub fn r0(&self) -> f64 {
        (1.0 / self.alpha).min(1.0 / self.beta)
    }

    /// `p ≥ 1` and `βp ≥ 2`.
    pub fn check_power(&self, p: f64) -> Result<()> {
        if !(p >= 1.0) || !p.is_finite() {
            return Err(Error::ParameterDomain(format!("p must be at least 1, got {p}")));
        }
        if self.beta * p < 2.0 - 1e-12 {
            return Err(Error::ParameterDomain(format!("need βp ≥ 2, got {}", self.beta * p)));
        }
        Ok(())
    }
}

/// Exponent applied to the bracketed terms of the minimum-modulus bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinmodExponent {
    /// `1/(2p)`, the one the argument actually produces.
    Derived,
    /// `1/2^p`.
    Printed,
}

impl MinmodExponent {
    fn value(&self, p: f64) -> f64 {
        match self {
            MinmodExponent::Derived => 1.0 / (2.0 * p),
            MinmodExponent::Printed => 0.5_f64.powf(p),
        }
    }
}

fn check_p_at_least(p: f64, min: f64) -> Result<()> {
    if !(p >= min) || !p.is_finite() {
        return Err(Error::ParameterDomain(format!("p must be at least {min}, got {p}")));
    }
    Ok(())
}

fn check_space<S: KernelSpace + ?Sized>(terms: &PairTerms, space: &S) -> Result<()> {
    if terms.dim() != space.dim() {
        return Err(Error::DimensionMismatch(format!(
            "pair has dim {} but the space has dim {}",
            terms.dim(),
            space.dim()
        )));
    }
    Ok(())
}

/// `|⟨ABx, y⟩| ≤ r(B)‖f(|A|)x‖‖g(|A*|)y‖`.
pub fn cert_lemma_schwarz(
    pair: &IntertwinedPair,
    fp: &FunctionPair,
    x: &DVector<Complex64>,
    y: &DVector<Complex64>,
    tol: &Tolerance,
) -> Result<Certification> {
    let t = PairTerms::new(pair, fp)?;
    require_len(x, t.dim(), "x")?;
    require_len(y, t.dim(), "y")?;
    require_unit(x, "x")?;
    require_unit(y, "y")?;
    let lhs = inner(&t.ab.apply(x), y).norm();
    let fx = t.f_pow(1.0)?.apply(x).norm();
    let gy = t.g_pow(1.0)?.apply(y).norm();
    let rhs = t.r_b * fx * gy;
    let id = "lemma-schwarz";
    Ok(Certification::new(id, &t.params(), vec![Certificate::new(id, Mode::Direct, lhs, rhs, tol)]))
}

/// `⟨H^p x,x⟩ − ⟨|H − mI|^p x,x⟩` with `m = ⟨Hx,x⟩`.
fn refined_power_form(h: &HermitianOperator, hp: &HermitianOperator, p: f64, x: &DVector<Complex64>) -> Result<f64> {
    let m = h.form(x);
    let shifted = herm_map(|t| t.abs().powf(p), &shifted_by(h, m))?;
    Ok(hp.form(x) - shifted.form(x))
}

fn shifted_by(h: &HermitianOperator, m: f64) -> HermitianOperator {
    h.add(&HermitianOperator::identity(h.dim()).scale(-m))
}

/// `⟨Hx,x⟩^{2p} ≤ M(x)·M(x) ≤ ⟨H^p x,x⟩²` where
/// `M(v) = ⟨H^p v,v⟩ − ⟨|H − ⟨Hv,v⟩I|^p v,v⟩`, followed by
/// `M(x)M(y) ≤ ⟨H^p x,x⟩⟨H^p y,y⟩`.
///
/// The mixed form `⟨Hx,x⟩^{2p} ≤ M(x)M(y)` is recorded as a note.
pub fn cert_lemma_refined_cs(
    h: &HermitianOperator,
    p: f64,
    x: &DVector<Complex64>,
    y: &DVector<Complex64>,
    tol: &Tolerance,
) -> Result<Certification> {
    check_p_at_least(p, 2.0)?;
    require_len(x, h.dim(), "x")?;
    require_len(y, h.dim(), "y")?;
    require_unit(x, "x")?;
    require_unit(y, "y")?;
    let spectrum = h.psd_spectral()?;
    let hp = spectrum.map(|t| t.powf(p));
    // H with tiny negative eigenvalues clamped, so every term sees one spectrum
    let hc = spectrum.map(|t| t);
    let mx = refined_power_form(&hc, &hp, p, x)?;
    let my = refined_power_form(&hc, &hp, p, y)?;
    let (hpx, hpy) = (hp.form(x), hp.form(y));
    let lead = hc.form(x).abs().powf(2.0 * p);

    let id = "lemma-refined-cs";
    let prm = params(&[("p", p)]);
    let certs = vec![
        Certificate::new(id, Mode::Direct, lead, mx * mx, tol).with_param("link", 1.0),
        Certificate::new(format!("{id}:outer"), Mode::Direct, mx * mx, hpx * hpx, tol).with_param("link", 2.0),
        Certificate::new(format!("{id}:product"), Mode::Direct, mx * my, hpx * hpy, tol).with_param("link", 2.0),
    ];
    let notes = vec![Certificate::new(format!("{id}:mixed"), Mode::Direct, lead, mx * my, tol)];
    Ok(Certification::new(id, &prm, certs).with_notes(&prm, notes))
}

/// Per-point symbols shared by the `½ r(B) ber(f² + g²)` family.
struct HalfTerms {
    ab_abs: Vec<f64>,
    ber_ab: f64,
    argmax: usize,
    f2: Vec<f64>,
    g2: Vec<f64>,
    sum: Vec<f64>,
    ber_sum: f64,
}

fn half_terms<S: KernelSpace + ?Sized>(t: &PairTerms, space: &S) -> Result<HalfTerms> {
    check_space(t, space)?;
    let ab = berezin_set(&t.ab, space)?;
    let f2 = real_symbols(&t.f_pow(2.0)?, space)?;
    let g2 = real_symbols(&t.g_pow(2.0)?, space)?;
    let sum: Vec<f64> = f2.iter().zip(&g2).map(|(a, b)| a + b).collect();
    let ber_sum = sum.iter().fold(0.0, |m: f64, v| m.max(v.abs()));
    Ok(HalfTerms {
        ab_abs: ab.values.iter().map(|z| z.norm()).collect(),
        ber_ab: ab.ber_value,
        argmax: ab.argmax_index,
        f2,
        g2,
        sum,
        ber_sum,
    })
}

fn half_rb_certificates(id: &str, t: &PairTerms, h: &HalfTerms, tol: &Tolerance) -> Vec<Certificate> {
    let rhs_pt: Vec<f64> = h.sum.iter().map(|s| 0.5 * t.r_b * s).collect();
    vec![
        Certificate::new(id, Mode::Sup, h.ber_ab, 0.5 * t.r_b * h.ber_sum, tol).with_witness(h.argmax),
        Certificate::pointwise(id, &h.ab_abs, &rhs_pt, tol),
    ]
}

/// `ber(AB) ≤ ½ r(B) ber(f²(|A|) + g²(|A*|))`, in sup and pointwise mode.
pub fn cert_thm_half_rb<S: KernelSpace + ?Sized>(
    pair: &IntertwinedPair,
    fp: &FunctionPair,
    space: &S,
    tol: &Tolerance,
) -> Result<Certification> {
    let t = PairTerms::new(pair, fp)?;
    let h = half_terms(&t, space)?;
    let id = "thm-half-rB";
    Ok(Certification::new(id, &t.params(), half_rb_certificates(id, &t, &h, tol)))
}

/// The half-`r(B)` bound followed by its norm estimate
/// `⅛(‖B‖ + ‖B²‖^{1/2})[‖F‖ + ‖G‖ + √((‖F‖ − ‖G‖)² + 4‖f(|A|)g(|A*|)‖²)]`.
pub fn cert_remark_chain<S: KernelSpace + ?Sized>(
    pair: &IntertwinedPair,
    fp: &FunctionPair,
    space: &S,
    tol: &Tolerance,
) -> Result<Certification> {
    let t = PairTerms::new(pair, fp)?;
    let h = half_terms(&t, space)?;
    let id = "remark-chain";
    let mut certs = half_rb_certificates(id, &t, &h, tol);

    let fnorm = op_norm(t.f_pow(2.0)?.operator())?;
    let gnorm = op_norm(t.g_pow(2.0)?.operator())?;
    let fg = op_norm(&(t.f_pow(1.0)?.operator() * t.g_pow(1.0)?.operator()))?;
    let b = &pair.b;
    let coeff = op_norm(b)? + op_norm(&(b * b))?.sqrt();
    let bracket = fnorm + gnorm + ((fnorm - gnorm).powi(2) + 4.0 * fg * fg).sqrt();
    let outer = coeff * bracket / 8.0;
    certs.push(Certificate::new(format!("{id}:norm-bound"), Mode::Sup, 0.5 * t.r_b * h.ber_sum, outer, tol));
    Ok(Certification::new(id, &t.params(), certs))
}

/// Symbols of `X = (1/α) f^{αp}(|A|) + (1/β) g^{βp}(|A*|)` and of `AB`.
struct YoungTerms {
    ab_abs: Vec<f64>,
    ber_ab: f64,
    argmax: usize,
    x: Vec<f64>,
    ber_x: f64,
}

fn young_terms<S: KernelSpace + ?Sized>(
    t: &PairTerms,
    space: &S,
    p: f64,
    ex: &ConjugateExponents,
) -> Result<YoungTerms> {
    check_space(t, space)?;
    let (alpha, beta) = (ex.alpha, ex.beta);
    let x_op = t.f_pow(alpha * p)?.scale(1.0 / alpha).add(&t.g_pow(beta * p)?.scale(1.0 / beta));
    let x = real_symbols(&x_op, space)?;
    let ab = berezin_set(&t.ab, space)?;
    Ok(YoungTerms {
        ab_abs: ab.values.iter().map(|z| z.norm()).collect(),
        ber_ab: ab.ber_value,
        argmax: ab.argmax_index,
        ber_x: x.iter().fold(0.0, |m: f64, v| m.max(v.abs())),
        x,
    })
}

/// `ber(AB)^p ≤ r(B)^p ber((1/α) f^{αp}(|A|) + (1/β) g^{βp}(|A*|))`.
pub fn cert_thm_power_young<S: KernelSpace + ?Sized>(
    pair: &IntertwinedPair,
    fp: &FunctionPair,
    space: &S,
    p: f64,
    ex: &ConjugateExponents,
    tol: &Tolerance,
) -> Result<Certification> {
    ex.check_power(p)?;
    let t = PairTerms::new(pair, fp)?;
    let y = young_terms(&t, space, p, ex)?;
    let rp = t.r_b.powf(p);
    let lhs_pt: Vec<f64> = y.ab_abs.iter().map(|v| v.powf(p)).collect();
    let rhs_pt: Vec<f64> = y.x.iter().map(|v| rp * v).collect();
    let id = "thm-power-young";
    let mut prm = t.params();
    prm.extend(params(&[("p", p), ("alpha", ex.alpha), ("beta", ex.beta)]));
    Ok(Certification::new(
        id,
        &prm,
        vec![
            Certificate::new(id, Mode::Sup, y.ber_ab.powf(p), rp * y.ber_x, tol).with_witness(y.argmax),
            Certificate::pointwise(id, &lhs_pt, &rhs_pt, tol),
        ],
    ))
}

/// The three terms of the refined Cauchy–Schwarz chain at `(λ, μ)`.
#[derive(Clone, Copy, Debug, PartialEq)]
struct RefinedChain {
    lhs: f64,
    middle: f64,
    outer: f64,
}

/// `[⟨F^p k,k⟩ − ⟨|F − ⟨Fk,k⟩I|^p k,k⟩]` and `⟨F^p k,k⟩`, where `fp_pow`
/// is `F^p` obtained by whichever route the caller prefers.
fn refined_factor(
    f: &HermitianOperator,
    fp_pow: &HermitianOperator,
    p: f64,
    k: &DVector<Complex64>,
) -> Result<(f64, f64)> {
    let m = f.form(k);
    let corr = herm_map(|t| t.abs().powf(p), &shifted_by(f, m))?.form(k);
    let full = fp_pow.form(k);
    Ok(((full - corr).max(0.0), full.max(0.0)))
}

#[allow(clippy::too_many_arguments)]
fn refined_chain<S: KernelSpace + ?Sized>(
    ab: &Operator,
    r_b: f64,
    f2: &HermitianOperator,
    f2p: &HermitianOperator,
    g2: &HermitianOperator,
    g2p: &HermitianOperator,
    space: &S,
    p: f64,
    lam: usize,
    mu: usize,
) -> Result<RefinedChain> {
    let kl = space.normalized_kernel(lam)?;
    let km = space.normalized_kernel(mu)?;
    let lhs = inner(&ab.apply(&kl), &km).norm();
    let (fm, fo) = refined_factor(f2, f2p, p, &kl)?;
    let (gm, go) = refined_factor(g2, g2p, p, &km)?;
    let e = 1.0 / (2.0 * p);
    Ok(RefinedChain { lhs, middle: r_b * fm.powf(e) * gm.powf(e), outer: r_b * fo.powf(e) * go.powf(e) })
}

fn chain_certificates(id: &str, c: &RefinedChain, tol: &Tolerance) -> Vec<Certificate> {
    vec![
        Certificate::new(id, Mode::Direct, c.lhs, c.middle, tol).with_param("link", 1.0),
        Certificate::new(format!("{id}:outer"), Mode::Direct, c.middle, c.outer, tol).with_param("link", 2.0),
    ]
}

fn prop_refined_chain<S: KernelSpace + ?Sized>(
    t: &PairTerms,
    space: &S,
    p: f64,
    lam: usize,
    mu: usize,
) -> Result<RefinedChain> {
    check_space(t, space)?;
    refined_chain(
        &t.ab,
        t.r_b,
        &t.f_pow(2.0)?,
        &t.f_pow(2.0 * p)?,
        &t.g_pow(2.0)?,
        &t.g_pow(2.0 * p)?,
        space,
        p,
        lam,
        mu,
    )
}

/// `|⟨AB k̂_λ, k̂_μ⟩| ≤ r(B)[⟨f^{2p}k̂_λ,k̂_λ⟩ − ⟨|f² − ⟨f²k̂_λ,k̂_λ⟩|^p k̂_λ,k̂_λ⟩]^{1/2p}[…g, μ…]^{1/2p}
/// ≤ r(B)⟨f^{2p}k̂_λ,k̂_λ⟩^{1/2p}⟨g^{2p}k̂_μ,k̂_μ⟩^{1/2p}`, with `f = f(|A|)`, `g = g(|A*|)`.
pub fn cert_prop_refined<S: KernelSpace + ?Sized>(
    pair: &IntertwinedPair,
    fp: &FunctionPair,
    space: &S,
    p: f64,
    lam: usize,
    mu: usize,
    tol: &Tolerance,
) -> Result<Certification> {
    check_p_at_least(p, 2.0)?;
    let t = PairTerms::new(pair, fp)?;
    let chain = prop_refined_chain(&t, space, p, lam, mu)?;
    let id = "prop-refined";
    let mut prm = t.params();
    prm.extend(params(&[("p", p), ("lambda", lam as f64), ("mu", mu as f64)]));
    Ok(Certification::new(id, &prm, chain_certificates(id, &chain, tol)))
}

/// The refined chain for `f(t) = t^α`, `g(t) = t^{1−α}`, with every power of
/// `|A|` and `|A*|` taken directly from `A*A` and `AA*`; the result is
/// compared against the generic function-pair route.
pub fn cert_cor_alpha<S: KernelSpace + ?Sized>(
    pair: &IntertwinedPair,
    space: &S,
    p: f64,
    alpha: f64,
    lam: usize,
    mu: usize,
    tol: &Tolerance,
) -> Result<Certification> {
    check_p_at_least(p, 2.0)?;
    let fp = FunctionPair::power(alpha)?;
    let t = PairTerms::new(pair, &fp)?;
    check_space(&t, space)?;
    let a = &pair.a;
    let a_star = crate::calculus::adjoint(a);
    let direct = refined_chain(
        &t.ab,
        t.r_b,
        &modulus_power(a, 2.0 * alpha)?,
        &modulus_power(a, 2.0 * p * alpha)?,
        &modulus_power(&a_star, 2.0 * (1.0 - alpha))?,
        &modulus_power(&a_star, 2.0 * p * (1.0 - alpha))?,
        space,
        p,
        lam,
        mu,
    )?;
    let generic = prop_refined_chain(&t, space, p, lam, mu)?;

    let id = "cor-alpha";
    let prm = params(&[("p", p), ("alpha", alpha), ("lambda", lam as f64), ("mu", mu as f64)]);
    let mut certs = chain_certificates(id, &direct, tol);
    certs.push(Certificate::agreement(
        format!("{id}:specialization"),
        &[(direct.lhs, generic.lhs), (direct.middle, generic.middle), (direct.outer, generic.outer)],
        SPECIALIZATION_TOL,
    ));
    Ok(Certification::new(id, &prm, certs))
}

/// `ber(AB) ≤ ½(‖B‖ + ‖B²‖^{1/2})[ber(f^{2p}(|A|)) − ℓ(|f²(|A|) − ‖f(|A|)‖²I|^p)]^{e}[…g, |A*|…]^{e}`
/// with `e = 1/(2p)`; the `e = 1/2^p` variant is recorded as a note.
pub fn cert_thm_minmod<S: KernelSpace + ?Sized>(
    pair: &IntertwinedPair,
    fp: &FunctionPair,
    space: &S,
    p: f64,
    tol: &Tolerance,
) -> Result<Certification> {
    check_p_at_least(p, 2.0)?;
    let t = PairTerms::new(pair, fp)?;
    check_space(&t, space)?;

    let side = |sq: HermitianOperator, root: HermitianOperator, pow: HermitianOperator| -> Result<(Vec<f64>, f64)> {
        let norm2 = op_norm(&root)?.powi(2);
        let corr = min_modulus(herm_map(|x| x.abs().powf(p), &shifted_by(&sq, norm2))?.operator())?;
        let sym: Vec<f64> = real_symbols(&pow, space)?.into_iter().map(|v| (v - corr).max(0.0)).collect();
        Ok((sym, corr))
    };
    let (f_br, f_corr) = side(t.f_pow(2.0)?, t.f_pow(1.0)?, t.f_pow(2.0 * p)?)?;
    let (g_br, g_corr) = side(t.g_pow(2.0)?, t.g_pow(1.0)?, t.g_pow(2.0 * p)?)?;
    let b = &pair.b;
    let coeff = 0.5 * (op_norm(b)? + op_norm(&(b * b))?.sqrt());

    let ab = berezin_set(&t.ab, space)?;
    let ab_abs: Vec<f64> = ab.values.iter().map(|z| z.norm()).collect();
    let (f_sup, g_sup) = (max_of(&f_br), max_of(&g_br));

    let sup_rhs = |e: f64| coeff * f_sup.powf(e) * g_sup.powf(e);
    let e = MinmodExponent::Derived.value(p);
    let rhs_pt: Vec<f64> = f_br.iter().zip(&g_br).map(|(f, g)| coeff * f.powf(e) * g.powf(e)).collect();

    let id = "thm-minmod";
    let mut prm = t.params();
    prm.extend(params(&[("p", p), ("ellF", f_corr), ("ellG", g_corr)]));
    let certs = vec![
        Certificate::new(id, Mode::Sup, ab.ber_value, sup_rhs(e), tol).with_witness(ab.argmax_index),
        Certificate::pointwise(id, &ab_abs, &rhs_pt, tol),
    ];
    let notes = vec![Certificate::new(
        format!("{id}:printed-exponent"),
        Mode::Sup,
        ab.ber_value,
        sup_rhs(MinmodExponent::Printed.value(p)),
        tol,
    )
    .with_witness(ab.argmax_index)];
    Ok(Certification::new(id, &prm, certs).with_notes(&prm, notes))
}

/// `a^α b^{1−α} ≤ αa + (1 − α)b − r₀(√a − √b)²`, `r₀ = min(α, 1 − α)`.
pub fn cert_young_scalar(a: f64, b: f64, alpha: f64, tol: &Tolerance) -> Result<Certification> {
    if !(a > 0.0 && b > 0.0) || !a.is_finite() || !b.is_finite() {
        return Err(Error::ParameterDomain(format!("a and b must be positive, got {a}, {b}")));
    }
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::ParameterDomain(format!("α must lie in [0, 1], got {alpha}")));
    }
    let r0 = alpha.min(1.0 - alpha);
    let lhs = a.powf(alpha) * b.powf(1.0 - alpha);
    let rhs = alpha * a + (1.0 - alpha) * b - r0 * (a.sqrt() - b.sqrt()).powi(2);
    let id = "young-scalar";
    let prm = params(&[("a", a), ("b", b), ("alpha", alpha), ("r0", r0)]);
    Ok(Certification::new(id, &prm, vec![Certificate::new(id, Mode::Direct, lhs, rhs, tol)]))
}

/// `|⟨AB k̂_λ, k̂_λ⟩| ≤ ½ r(B)(ber(f² + g²) − (⟨f²k̂_λ,k̂_λ⟩^{1/2} − ⟨g²k̂_λ,k̂_λ⟩^{1/2})²)`.
///
/// Pointwise mode is the headline. Sup mode subtracts the smallest
/// correction on the grid. The dominance certificate compares the largest
/// refined right side with the unrefined `½ r(B) ber(f² + g²)`.
pub fn cert_thm_young_refined<S: KernelSpace + ?Sized>(
    pair: &IntertwinedPair,
    fp: &FunctionPair,
    space: &S,
    tol: &Tolerance,
) -> Result<Certification> {
    let t = PairTerms::new(pair, fp)?;
    let h = half_terms(&t, space)?;
    let corr: Vec<f64> = h.f2.iter().zip(&h.g2).map(|(f, g)| (f.max(0.0).sqrt() - g.max(0.0).sqrt()).powi(2)).collect();
    let half = 0.5 * t.r_b;
    let rhs_pt: Vec<f64> = corr.iter().map(|c| half * (h.ber_sum - c)).collect();
    let unrefined = half * h.ber_sum;
    refined_certificates(
        "thm-young-refined",
        &t.params(),
        &h.ab_abs,
        h.ber_ab,
        h.argmax,
        &rhs_pt,
        &corr,
        half,
        h.ber_sum,
        unrefined,
        tol,
    )
}

#[allow(clippy::too_many_arguments)]
fn refined_certificates(
    id: &str,
    prm: &Params,
    lhs_pt: &[f64],
    lhs_sup: f64,
    argmax: usize,
    rhs_pt: &[f64],
    corr: &[f64],
    scale: f64,
    ber: f64,
    unrefined: f64,
    tol: &Tolerance,
) -> Result<Certification> {
    let min_corr = min_of(corr);
    let (dom_idx, _) = crate::berezin::first_argmax(rhs_pt.iter().copied());
    let certs = vec![
        Certificate::pointwise(id, lhs_pt, rhs_pt, tol),
        Certificate::new(id, Mode::Sup, lhs_sup, scale * (ber - min_corr), tol)
            .with_witness(argmax)
            .with_param("minCorrection", min_corr),
        Certificate::new(
            format!("{id}:dominance"),
            Mode::Dominance,
            rhs_pt[dom_idx],
            unrefined,
            &Tolerance::absolute(DOMINANCE_TOL),
        )
        .with_witness(dom_idx),
    ];
    Ok(Certification::new(id, prm, certs))
}

/// `|⟨AB k̂_λ, k̂_λ⟩|^p ≤ r(B)^p[ber(X) − r₀(⟨f²k̂_λ,k̂_λ⟩^{αp/4} − ⟨g²k̂_λ,k̂_λ⟩^{βp/4})²]`
/// with `X = (1/α) f^{αp}(|A|) + (1/β) g^{βp}(|A*|)` and `r₀ = min(1/α, 1/β)`.
pub fn cert_thm_power_young_refined<S: KernelSpace + ?Sized>(
    pair: &IntertwinedPair,
    fp: &FunctionPair,
    space: &S,
    p: f64,
    ex: &ConjugateExponents,
    tol: &Tolerance,
) -> Result<Certification> {
    ex.check_power(p)?;
    let t = PairTerms::new(pair, fp)?;
    let y = young_terms(&t, space, p, ex)?;
    let f2 = real_symbols(&t.f_pow(2.0)?, space)?;
    let g2 = real_symbols(&t.g_pow(2.0)?, space)?;
    let r0 = ex.r0();
    let corr: Vec<f64> = f2
        .iter()
        .zip(&g2)
        .map(|(f, g)| r0 * (f.max(0.0).powf(ex.alpha * p / 4.0) - g.max(0.0).powf(ex.beta * p / 4.0)).powi(2))
        .collect();
    let rp = t.r_b.powf(p);
    let rhs_pt: Vec<f64> = corr.iter().map(|c| rp * (y.ber_x - c)).collect();
    let lhs_pt: Vec<f64> = y.ab_abs.iter().map(|v| v.powf(p)).collect();
    let mut prm = t.params();
    prm.extend(params(&[("p", p), ("alpha", ex.alpha), ("beta", ex.beta), ("r0", r0)]));
    refined_certificates(
        "thm-power-young-refined",
        &prm,
        &lhs_pt,
        y.ber_ab.powf(p),
        y.argmax,
        &rhs_pt,
        &corr,
        rp,
        y.ber_x,
        rp * y.ber_x,
        tol,
    )
}
