//! Dense complex matrix calculus.
//!
//! Everything here is a pure function of its inputs. Hermitian results are
//! symmetrised after reconstruction so that `M == M*` holds bit for bit.

pub mod codec;
mod pair;

use std::ops::{Add, Deref, Mul, Sub};

use nalgebra::{DMatrix, DVector, Schur, SymmetricEigen, SVD};
use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use pair::{FunctionPair, FunctionPairSpec, PairSide};

/// Iteration cap handed to the nalgebra eigen/SVD/Schur routines.
const MAX_ITER: usize = 10_000;

/// Negative eigenvalues down to `-PSD_CLAMP * max(1, ‖H‖)` are rounded up to
/// zero when a positive semidefinite input is expected.
pub const PSD_CLAMP: f64 = 1e-10;

/// Hermiticity gate: `‖M − M*‖_F ≤ HERMITIAN_TOL · max(1, ‖M‖_F)`.
pub const HERMITIAN_TOL: f64 = 1e-12;

/// A dense complex matrix with finite entries.
///
/// Operators on a sampled space are square; the off-diagonal blocks of a
/// direct-sum operator may be rectangular.
#[derive(Clone, Debug, PartialEq)]
pub struct Operator(DMatrix<Complex64>);

impl Operator {
    pub fn new(m: DMatrix<Complex64>) -> Result<Self> {
        if m.is_empty() {
            return Err(Error::DimensionMismatch("empty matrix".into()));
        }
        if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite("operator"));
        }
        Ok(Self(m))
    }

    pub(crate) fn from_raw(m: DMatrix<Complex64>) -> Self {
        Self(m)
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Self::new(DMatrix::from_fn(n, m, |i, j| rows[i][j]))
    }

    /// Real-entry convenience constructor, row major.
    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        let complex: Vec<Vec<Complex64>> =
            rows.iter().map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)).collect()).collect();
        Self::from_rows(&complex)
    }

    pub fn identity(n: usize) -> Self {
        Self(DMatrix::identity(n, n))
    }

    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self(DMatrix::zeros(nrows, ncols))
    }

    pub fn from_diagonal(d: &[Complex64]) -> Self {
        Self(DMatrix::from_diagonal(&DVector::from_column_slice(d)))
    }

    pub fn from_real_diagonal(d: &[f64]) -> Self {
        Self(DMatrix::from_fn(d.len(), d.len(), |i, j| {
            if i == j {
                Complex64::new(d[i], 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        }))
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.0
    }

    pub fn into_matrix(self) -> DMatrix<Complex64> {
        self.0
    }

    pub fn nrows(&self) -> usize {
        self.0.nrows()
    }

    pub fn ncols(&self) -> usize {
        self.0.ncols()
    }

    pub fn is_square(&self) -> bool {
        self.0.is_square()
    }

    /// Side length of a square operator.
    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self(&self.0 * s)
    }

    pub fn scale_real(&self, s: f64) -> Self {
        Self(&self.0 * Complex64::new(s, 0.0))
    }

    pub fn apply(&self, x: &DVector<Complex64>) -> DVector<Complex64> {
        &self.0 * x
    }

    /// `⟨A x, x⟩`.
    pub fn quadratic_form(&self, x: &DVector<Complex64>) -> Complex64 {
        inner(&(&self.0 * x), x)
    }

    /// Frobenius norm, used for residual reporting.
    pub fn frobenius(&self) -> f64 {
        self.0.norm()
    }

    pub(crate) fn require_square(&self, what: &str) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!("{what} must be square, got {}x{}", self.nrows(), self.ncols())))
        }
    }
}

impl Serialize for Operator {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        codec::complex_matrix::serialize(&self.0, s)
    }
}

impl<'de> Deserialize<'de> for Operator {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let m = codec::complex_matrix::deserialize(d)?;
        Operator::new(m).map_err(serde::de::Error::custom)
    }
}

impl Mul for &Operator {
    type Output = Operator;

    fn mul(self, rhs: &Operator) -> Operator {
        Operator(&self.0 * &rhs.0)
    }
}

impl Add for &Operator {
    type Output = Operator;

    fn add(self, rhs: &Operator) -> Operator {
        Operator(&self.0 + &rhs.0)
    }
}

impl Sub for &Operator {
    type Output = Operator;

    fn sub(self, rhs: &Operator) -> Operator {
        Operator(&self.0 - &rhs.0)
    }
}

/// `⟨x, y⟩ = Σ x_i conj(y_i)`, linear in the first slot.
pub fn inner(x: &DVector<Complex64>, y: &DVector<Complex64>) -> Complex64 {
    y.dotc(x)
}

/// Conjugate transpose.
pub fn adjoint(a: &Operator) -> Operator {
    Operator(a.0.adjoint())
}

fn symmetrize(m: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let n = m.nrows();
    DMatrix::from_fn(n, n, |i, j| {
        if i == j {
            Complex64::new(m[(i, i)].re, 0.0)
        } else {
            (m[(i, j)] + m[(j, i)].conj()) * 0.5
        }
    })
}

/// A square operator that is Hermitian to working precision.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianOperator(Operator);

impl HermitianOperator {
    /// Checks the Hermiticity gate and stores the exactly symmetrised matrix.
    pub fn new(op: Operator) -> Result<Self> {
        op.require_square("Hermitian operator")?;
        let defect = (&op.0 - op.0.adjoint()).norm();
        let scale = op.0.norm().max(1.0);
        if defect > HERMITIAN_TOL * scale {
            return Err(Error::ParameterDomain(format!("matrix is not Hermitian (‖M − M*‖ = {defect:e})")));
        }
        Ok(Self(Operator(symmetrize(&op.0))))
    }

    /// Symmetrises without checking; for matrices Hermitian by construction.
    pub(crate) fn from_symmetrized(m: DMatrix<Complex64>) -> Self {
        Self(Operator(symmetrize(&m)))
    }

    pub fn identity(n: usize) -> Self {
        Self(Operator::identity(n))
    }

    pub fn from_real_diagonal(d: &[f64]) -> Self {
        Self(Operator::from_real_diagonal(d))
    }

    pub fn operator(&self) -> &Operator {
        &self.0
    }

    pub fn into_operator(self) -> Operator {
        self.0
    }

    /// Real quadratic form `⟨H x, x⟩`.
    pub fn form(&self, x: &DVector<Complex64>) -> f64 {
        self.0.quadratic_form(x).re
    }

    pub fn add(&self, other: &HermitianOperator) -> HermitianOperator {
        Self::from_symmetrized(&self.0 .0 + &other.0 .0)
    }

    pub fn scale(&self, s: f64) -> HermitianOperator {
        Self::from_symmetrized(&self.0 .0 * Complex64::new(s, 0.0))
    }

    /// Full eigendecomposition, eigenvalues unmodified.
    pub fn spectral(&self) -> Result<Spectral> {
        let eig = SymmetricEigen::try_new(self.0 .0.clone(), f64::EPSILON, MAX_ITER)
            .ok_or_else(|| Error::NumericFailure("Hermitian eigensolver did not converge".into()))?;
        Ok(Spectral { values: eig.eigenvalues.iter().copied().collect(), vectors: eig.eigenvectors })
    }

    /// Eigendecomposition of a matrix that must be positive semidefinite.
    /// Eigenvalues in `[-PSD_CLAMP·max(1,‖H‖), 0)` are set to zero.
    pub fn psd_spectral(&self) -> Result<Spectral> {
        let mut s = self.spectral()?;
        let scale = s.values.iter().fold(1.0_f64, |m, v| m.max(v.abs()));
        let threshold = -PSD_CLAMP * scale;
        for v in &mut s.values {
            if *v < threshold {
                return Err(Error::NotPositive { value: *v, threshold });
            }
            if *v < 0.0 {
                *v = 0.0;
            }
        }
        Ok(s)
    }
}

impl Deref for HermitianOperator {
    type Target = Operator;

    fn deref(&self) -> &Operator {
        &self.0
    }
}

impl Serialize for HermitianOperator {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// Eigenvalues and orthonormal eigenvectors (columns) of a Hermitian matrix.
#[derive(Clone, Debug)]
pub struct Spectral {
    pub values: Vec<f64>,
    pub vectors: DMatrix<Complex64>,
}

impl Spectral {
    /// `V diag(w) V*`.
    pub fn reconstruct(&self, weights: &[f64]) -> HermitianOperator {
        let mut scaled = self.vectors.clone();
        for (j, w) in weights.iter().enumerate() {
            scaled.column_mut(j).scale_mut(*w);
        }
        HermitianOperator::from_symmetrized(&scaled * self.vectors.adjoint())
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> HermitianOperator {
        let w: Vec<f64> = self.values.iter().map(|&t| f(t)).collect();
        self.reconstruct(&w)
    }

    pub fn try_map(&self, f: impl Fn(f64) -> Result<f64>) -> Result<HermitianOperator> {
        let w = self.values.iter().map(|&t| f(t)).collect::<Result<Vec<f64>>>()?;
        if w.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite("functional calculus result"));
        }
        Ok(self.reconstruct(&w))
    }
}

/// `f(H)` for positive semidefinite `H`, after clamping tiny negative eigenvalues.
pub fn herm_fun(f: impl Fn(f64) -> f64, h: &HermitianOperator) -> Result<HermitianOperator> {
    h.psd_spectral()?.try_map(|t| Ok(f(t)))
}

/// `f(H)` for an arbitrary Hermitian `H` (no positivity requirement).
pub fn herm_map(f: impl Fn(f64) -> f64, h: &HermitianOperator) -> Result<HermitianOperator> {
    h.spectral()?.try_map(|t| Ok(f(t)))
}

/// `|A| = (A*A)^{1/2}`. Works for rectangular `A` (result is `ncols × ncols`).
pub fn modulus(a: &Operator) -> Result<HermitianOperator> {
    let gram = HermitianOperator::from_symmetrized(a.0.adjoint() * &a.0);
    herm_fun(f64::sqrt, &gram)
}

/// `|A|^s` computed from the spectrum of `A*A` as `t ↦ t^{s/2}`.
pub fn modulus_power(a: &Operator, s: f64) -> Result<HermitianOperator> {
    let gram = HermitianOperator::from_symmetrized(a.0.adjoint() * &a.0);
    herm_fun(|t| t.powf(s / 2.0), &gram)
}

/// Polar decomposition `A = U P` with `P = |A|`.
///
/// `U = W V*` from the full singular value decomposition `A = W Σ V*`, so it
/// is unitary; on the kernel of `A` it is fixed by the singular vectors
/// returned by the solver, which are deterministic for a given input.
pub fn polar_decompose(a: &Operator) -> Result<(Operator, HermitianOperator)> {
    a.require_square("polar decomposition input")?;
    let svd = SVD::try_new(a.0.clone(), true, true, f64::EPSILON, MAX_ITER)
        .ok_or_else(|| Error::NumericFailure("SVD did not converge".into()))?;
    let w = svd.u.as_ref().expect("requested U");
    let v_t = svd.v_t.as_ref().expect("requested V*");
    let u = Operator(w * v_t);
    Ok((u, modulus(a)?))
}

/// Singular values in descending order.
pub fn singular_values(a: &Operator) -> Result<Vec<f64>> {
    let svd = SVD::try_new(a.0.clone(), false, false, f64::EPSILON, MAX_ITER)
        .ok_or_else(|| Error::NumericFailure("SVD did not converge".into()))?;
    let mut s: Vec<f64> = svd.singular_values.iter().copied().collect();
    s.sort_by(|x, y| y.total_cmp(x));
    Ok(s)
}

/// Operator (spectral) norm.
pub fn op_norm(a: &Operator) -> Result<f64> {
    Ok(singular_values(a)?.first().copied().unwrap_or(0.0))
}

/// `ℓ(A) = inf{‖Ax‖ : ‖x‖ = 1}`.
pub fn min_modulus(a: &Operator) -> Result<f64> {
    if a.nrows() < a.ncols() {
        return Ok(0.0);
    }
    Ok(singular_values(a)?.last().copied().unwrap_or(0.0))
}

/// All eigenvalues of a general square matrix (complex Schur form).
pub fn eigenvalues(a: &Operator) -> Result<Vec<Complex64>> {
    a.require_square("eigenvalue input")?;
    if a.dim() == 1 {
        return Ok(vec![a.0[(0, 0)]]);
    }
    let schur = Schur::try_new(a.0.clone(), f64::EPSILON, MAX_ITER)
        .ok_or_else(|| Error::NumericFailure("Schur iteration did not converge".into()))?;
    let (_, t) = schur.unpack();
    Ok(t.diagonal().iter().copied().collect())
}

pub fn spectral_radius(a: &Operator) -> Result<f64> {
    Ok(eigenvalues(a)?.iter().map(|z| z.norm()).fold(0.0, f64::max))
}

/// `A = B + iC` with `B = (A + A*)/2`, `C = (A − A*)/(2i)`.
pub fn cartesian_parts(a: &Operator) -> Result<(HermitianOperator, HermitianOperator)> {
    a.require_square("Cartesian decomposition input")?;
    let adj = a.0.adjoint();
    let re = (&a.0 + &adj) * Complex64::new(0.5, 0.0);
    let im = (&a.0 - &adj) * Complex64::new(0.0, -0.5);
    Ok((HermitianOperator::from_symmetrized(re), HermitianOperator::from_symmetrized(im)))
}

/// `[[0, B], [C, 0]]` with `B: n₂ → n₁` (`n₁ × n₂`) and `C: n₁ → n₂`.
pub fn block_offdiag(b: &Operator, c: &Operator) -> Result<Operator> {
    let (n1, n2) = (b.nrows(), b.ncols());
    if c.nrows() != n2 || c.ncols() != n1 {
        return Err(Error::DimensionMismatch(format!(
            "B is {n1}x{n2} so C must be {n2}x{n1}, got {}x{}",
            c.nrows(),
            c.ncols()
        )));
    }
    let mut m = DMatrix::zeros(n1 + n2, n1 + n2);
    m.view_mut((0, n1), (n1, n2)).copy_from(&b.0);
    m.view_mut((n1, 0), (n2, n1)).copy_from(&c.0);
    Ok(Operator(m))
}

/// `[[A, 0], [0, D]]` for square `A`, `D`.
pub fn block_diag(a: &Operator, d: &Operator) -> Result<Operator> {
    a.require_square("upper-left block")?;
    d.require_square("lower-right block")?;
    let (n1, n2) = (a.dim(), d.dim());
    let mut m = DMatrix::zeros(n1 + n2, n1 + n2);
    m.view_mut((0, 0), (n1, n1)).copy_from(&a.0);
    m.view_mut((n1, n1), (n2, n2)).copy_from(&d.0);
    Ok(Operator(m))
}

/// Real part `Re(e^{iθ} A) = (e^{iθ}A + e^{-iθ}A*)/2`.
pub fn rotated_real_part(a: &Operator, theta: f64) -> HermitianOperator {
    let phase = Complex64::from_polar(1.0, theta);
    let rotated = &a.0 * phase;
    HermitianOperator::from_symmetrized((&rotated + rotated.adjoint()) * Complex64::new(0.5, 0.0))
}

/// `f^s(H)` (`side = F`) or `g^s(H)` (`side = G`), after checking
/// `f(t)g(t) = t` on the spectrum of `H`.
pub fn apply_pair(
    pair: &FunctionPair,
    side: PairSide,
    exponent: f64,
    h: &HermitianOperator,
) -> Result<HermitianOperator> {
    pair_on_spectrum(pair, side, exponent, &h.psd_spectral()?, |t| t)
}

/// `f^s(|X|)` or `g^s(|X|)` straight from the spectrum of `X*X`, so it shares
/// one eigendecomposition with [`modulus_power`].
pub fn apply_pair_to_modulus(
    pair: &FunctionPair,
    side: PairSide,
    exponent: f64,
    x: &Operator,
) -> Result<HermitianOperator> {
    let gram = HermitianOperator::from_symmetrized(x.0.adjoint() * &x.0);
    pair_on_spectrum(pair, side, exponent, &gram.psd_spectral()?, f64::sqrt)
}

fn pair_on_spectrum(
    pair: &FunctionPair,
    side: PairSide,
    exponent: f64,
    spectrum: &Spectral,
    to_t: impl Fn(f64) -> f64,
) -> Result<HermitianOperator> {
    if !(exponent > 0.0) || !exponent.is_finite() {
        return Err(Error::ParameterDomain(format!("function-pair exponent must be positive, got {exponent}")));
    }
    spectrum.try_map(|t| {
        let (f, g) = pair.checked_eval(to_t(t))?;
        let v = match side {
            PairSide::F => f,
            PairSide::G => g,
        };
        Ok(v.powf(exponent))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn nilpotent(x: f64) -> Operator {
        Operator::from_real_rows(&[&[0.0, x], &[0.0, 0.0]]).unwrap()
    }

    #[test]
    fn adjoint_examples() {
        let a = nilpotent(2.0);
        let expected = Operator::from_real_rows(&[&[0.0, 0.0], &[2.0, 0.0]]).unwrap();
        assert_eq!(adjoint(&a), expected);
        assert_eq!(adjoint(&adjoint(&a)), a);

        let i = Operator::from_rows(&[vec![c(0.0, 1.0)]]).unwrap();
        assert_eq!(adjoint(&i).matrix()[(0, 0)], c(0.0, -1.0));

        let h = HermitianOperator::new(
            Operator::from_rows(&[vec![c(1.0, 0.0), c(2.0, 1.0)], vec![c(2.0, -1.0), c(3.0, 0.0)]]).unwrap(),
        )
        .unwrap();
        assert_eq!(&adjoint(&h), h.operator());
    }

    #[test]
    fn modulus_of_nilpotent() {
        let m = modulus(&nilpotent(2.0)).unwrap();
        let expected = Operator::from_real_diagonal(&[0.0, 2.0]);
        assert!((m.operator() - &expected).frobenius() < 1e-12);
    }

    #[test]
    fn modulus_of_positive_diagonal_is_itself() {
        let d = Operator::from_real_diagonal(&[0.5, 3.0, 7.0]);
        let m = modulus(&d).unwrap();
        assert!((m.operator() - &d).frobenius() < 1e-12);
    }

    #[test]
    fn polar_of_nilpotent_reconstructs() {
        let a = nilpotent(2.0);
        let (u, p) = polar_decompose(&a).unwrap();
        assert!((&(&u * p.operator()) - &a).frobenius() <= 1e-12);
    }

    #[test]
    fn polar_of_positive_definite_is_trivial() {
        let p0 = Operator::from_rows(&[vec![c(2.0, 0.0), c(0.5, 0.5)], vec![c(0.5, -0.5), c(3.0, 0.0)]]).unwrap();
        let (u, p) = polar_decompose(&p0).unwrap();
        assert!((&u - &Operator::identity(2)).frobenius() < 1e-12);
        assert!((p.operator() - &p0).frobenius() < 1e-12);
    }

    #[test]
    fn polar_of_unitary() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let q = Operator::from_rows(&[vec![c(s, 0.0), c(0.0, s)], vec![c(0.0, s), c(s, 0.0)]]).unwrap();
        let (u, p) = polar_decompose(&q).unwrap();
        assert!((&u - &q).frobenius() < 1e-12);
        assert!((p.operator() - &Operator::identity(2)).frobenius() < 1e-12);
    }

    #[test]
    fn herm_fun_sqrt_and_identity() {
        let h = HermitianOperator::from_real_diagonal(&[4.0, 9.0]);
        let r = herm_fun(f64::sqrt, &h).unwrap();
        assert!((r.operator() - &Operator::from_real_diagonal(&[2.0, 3.0])).frobenius() < 1e-12);

        let g = HermitianOperator::new(
            Operator::from_rows(&[vec![c(1.0, 0.0), c(0.0, -2.0)], vec![c(0.0, 2.0), c(-1.0, 0.0)]]).unwrap(),
        )
        .unwrap();
        let same = herm_map(|t| t, &g).unwrap();
        assert!((same.operator() - g.operator()).frobenius() < 1e-12);
    }

    #[test]
    fn herm_fun_rejects_negative_spectrum() {
        let h = HermitianOperator::from_real_diagonal(&[1.0, -0.5]);
        assert!(matches!(herm_fun(f64::sqrt, &h), Err(Error::NotPositive { .. })));
        // tiny negative rounding is clamped
        let h = HermitianOperator::from_real_diagonal(&[1.0, -1e-13]);
        let r = herm_fun(f64::sqrt, &h).unwrap();
        assert_eq!(r.matrix()[(1, 1)].re, 0.0);
    }

    #[test]
    fn spectral_radius_examples() {
        assert_eq!(spectral_radius(&nilpotent(1.0)).unwrap(), 0.0);
        let a = Operator::from_real_rows(&[&[0.0, 1.0], &[0.5, 0.0]]).unwrap();
        assert_abs_diff_eq!(spectral_radius(&a).unwrap(), 0.5_f64.sqrt(), epsilon = 1e-12);
        let h = Operator::from_real_rows(&[&[2.0, 1.0], &[1.0, -3.0]]).unwrap();
        assert_abs_diff_eq!(spectral_radius(&h).unwrap(), op_norm(&h).unwrap(), epsilon = 1e-12);
    }

    #[test]
    fn norms_examples() {
        assert_abs_diff_eq!(op_norm(&nilpotent(2.0)).unwrap(), 2.0, epsilon = 1e-14);
        assert_abs_diff_eq!(op_norm(&Operator::identity(5)).unwrap(), 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(min_modulus(&Operator::from_real_diagonal(&[1.0, 3.0])).unwrap(), 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(min_modulus(&nilpotent(2.0)).unwrap(), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn cartesian_examples() {
        let a = Operator::from_diagonal(&[c(0.0, 1.0), c(0.0, -1.0)]);
        let (b, cc) = cartesian_parts(&a).unwrap();
        assert!(b.frobenius() < 1e-15);
        assert!((cc.operator() - &Operator::from_real_diagonal(&[1.0, -1.0])).frobenius() < 1e-15);

        let (b, cc) = cartesian_parts(&nilpotent(1.0)).unwrap();
        let eb = Operator::from_real_rows(&[&[0.0, 0.5], &[0.5, 0.0]]).unwrap();
        let ec = Operator::from_rows(&[vec![c(0.0, 0.0), c(0.0, -0.5)], vec![c(0.0, 0.5), c(0.0, 0.0)]]).unwrap();
        assert_eq!(b.operator(), &eb);
        assert_eq!(cc.operator(), &ec);
    }

    #[test]
    fn block_examples() {
        let one = Operator::identity(1);
        let t = block_offdiag(&one, &one).unwrap();
        assert_eq!(t, Operator::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap());

        let b = Operator::from_rows(&[vec![c(1.0, 2.0), c(0.0, 1.0), c(3.0, 0.0)]]).unwrap();
        let cc = Operator::from_rows(&[vec![c(0.5, 0.0)], vec![c(0.0, -1.0)], vec![c(2.0, 2.0)]]).unwrap();
        let t = block_offdiag(&b, &cc).unwrap();
        let swapped = block_offdiag(&adjoint(&cc), &adjoint(&b)).unwrap();
        assert_eq!(adjoint(&t), swapped);

        assert!(matches!(block_offdiag(&b, &b), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn apply_pair_examples() {
        let h = HermitianOperator::from_real_diagonal(&[4.0, 9.0]);
        let half = FunctionPair::power(0.5).unwrap();
        let r = apply_pair(&half, PairSide::F, 2.0, &h).unwrap();
        assert!((r.operator() - h.operator()).frobenius() < 1e-12);

        let one = FunctionPair::power(1.0).unwrap();
        let r = apply_pair(&one, PairSide::F, 1.0, &h).unwrap();
        assert!((r.operator() - h.operator()).frobenius() < 1e-12);
        let r = apply_pair(&one, PairSide::G, 3.0, &h).unwrap();
        assert!((r.operator() - &Operator::identity(2)).frobenius() < 1e-12);
    }
}
