//! Seeded random instances.
//!
//! Every generator is a pure function of its seed and parameters. Entries
//! are complex Gaussians with independent `N(0, 1/2)` real and imaginary
//! parts drawn from a `ChaCha8Rng`; Hermitian, positive and unitary matrices
//! are derived from such Gaussian matrices.
//!
//! Trial seeds are derived from a master seed with [`derive_seed`], so a
//! batch of trials can be generated in any order or in parallel.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::calculus::{adjoint, op_norm, FunctionPair, FunctionPairSpec, HermitianOperator, Operator};
use crate::error::{Error, Result};

pub const DEFAULT_CONDITION_CAP: f64 = 1e3;

/// Gate on `‖P·B − B*·P‖ / max(1, ‖P‖·‖B‖)` for generated pairs.
pub const INTERTWINING_TOL: f64 = 1e-9;

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// `splitmix64(splitmix64(master ⊕ splitmix64(stream)) ⊕ trial)`.
pub fn derive_seed(master: u64, stream: u64, trial: u64) -> u64 {
    splitmix64(splitmix64(master ^ splitmix64(stream)) ^ trial)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InstanceKind {
    Hermitian,
    Psd,
    Unitary,
    IntertwinedPair,
    General,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct InstanceSpec {
    pub dim: usize,
    pub seed: u64,
    #[serde(default = "default_cap")]
    pub condition_cap: f64,
    pub kind: InstanceKind,
}

fn default_cap() -> f64 {
    DEFAULT_CONDITION_CAP
}

impl InstanceSpec {
    pub fn new(kind: InstanceKind, dim: usize, seed: u64) -> Self {
        Self { dim, seed, condition_cap: DEFAULT_CONDITION_CAP, kind }
    }

    pub fn with_condition_cap(mut self, cap: f64) -> Self {
        self.condition_cap = cap;
        self
    }

    fn validate(&self, kind: InstanceKind) -> Result<()> {
        if self.kind != kind {
            return Err(Error::ParameterDomain(format!("expected a {kind:?} spec, got {:?}", self.kind)));
        }
        if self.dim == 0 {
            return Err(Error::ParameterDomain("dim must be at least 1".into()));
        }
        if !(self.condition_cap >= 1.0) {
            return Err(Error::ParameterDomain(format!("condition cap must be ≥ 1, got {}", self.condition_cap)));
        }
        Ok(())
    }

    fn sampler(&self) -> Sampler {
        Sampler::new(self.seed)
    }
}

/// Seeded source of random matrices and vectors.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn normal(&mut self) -> f64 {
        self.rng.sample(StandardNormal)
    }

    pub fn uniform(&mut self) -> f64 {
        self.rng.random::<f64>()
    }

    /// Uniform in `[lo, hi)`.
    pub fn uniform_in(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform()
    }

    /// `exp(U(ln lo, ln hi))`.
    pub fn log_uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.uniform_in(lo.ln(), hi.ln()).exp()
    }

    pub fn index(&mut self, len: usize) -> usize {
        self.rng.random_range(0..len)
    }

    pub fn complex_normal(&mut self) -> Complex64 {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        Complex64::new(self.normal() * s, self.normal() * s)
    }

    pub fn gaussian_matrix(&mut self, nrows: usize, ncols: usize) -> DMatrix<Complex64> {
        // column-major fill order is part of the reproducibility contract
        DMatrix::from_fn(nrows, ncols, |_, _| self.complex_normal())
    }

    pub fn general(&mut self, dim: usize) -> Operator {
        Operator::from_raw(self.gaussian_matrix(dim, dim))
    }

    pub fn rectangular(&mut self, nrows: usize, ncols: usize) -> Operator {
        Operator::from_raw(self.gaussian_matrix(nrows, ncols))
    }

    /// `(G + G*)/2`.
    pub fn hermitian(&mut self, dim: usize) -> HermitianOperator {
        let g = self.gaussian_matrix(dim, dim);
        HermitianOperator::from_symmetrized((&g + g.adjoint()) * Complex64::new(0.5, 0.0))
    }

    /// Haar unitary: QR of a Gaussian matrix with the phases of `diag(R)` removed.
    pub fn unitary(&mut self, dim: usize) -> Operator {
        let qr = self.gaussian_matrix(dim, dim).qr();
        let (mut q, r) = qr.unpack();
        for j in 0..dim {
            let d = r[(j, j)];
            let phase = if d.norm() > 0.0 { d / d.norm() } else { Complex64::new(1.0, 0.0) };
            for x in q.column_mut(j).iter_mut() {
                *x *= phase;
            }
        }
        Operator::from_raw(q)
    }

    /// `Q diag(d) Q*` with `d` log-uniform in `[1/cap, 1]` and rescaled so `max d = 1`.
    pub fn psd(&mut self, dim: usize, cap: f64) -> HermitianOperator {
        let q = self.unitary(dim);
        let mut d: Vec<f64> = (0..dim).map(|_| self.log_uniform(1.0 / cap, 1.0)).collect();
        let top = d.iter().copied().fold(0.0, f64::max);
        for v in &mut d {
            *v /= top;
        }
        let mut scaled = q.matrix().clone();
        for (j, w) in d.iter().enumerate() {
            scaled.column_mut(j).scale_mut(*w);
        }
        HermitianOperator::from_symmetrized(&scaled * q.matrix().adjoint())
    }

    pub fn unit_vector(&mut self, dim: usize) -> DVector<Complex64> {
        loop {
            let v = DVector::from_fn(dim, |_, _| self.complex_normal());
            let n = v.norm();
            if n > 1e-8 {
                return v.unscale(n);
            }
        }
    }

    pub fn vector(&mut self, dim: usize) -> DVector<Complex64> {
        DVector::from_fn(dim, |_, _| self.complex_normal())
    }
}

pub fn random_hermitian(spec: &InstanceSpec) -> Result<HermitianOperator> {
    spec.validate(InstanceKind::Hermitian)?;
    Ok(spec.sampler().hermitian(spec.dim))
}

pub fn random_psd(spec: &InstanceSpec) -> Result<HermitianOperator> {
    spec.validate(InstanceKind::Psd)?;
    Ok(spec.sampler().psd(spec.dim, spec.condition_cap))
}

pub fn random_unitary(spec: &InstanceSpec) -> Result<Operator> {
    spec.validate(InstanceKind::Unitary)?;
    Ok(spec.sampler().unitary(spec.dim))
}

pub fn random_general(spec: &InstanceSpec) -> Result<Operator> {
    spec.validate(InstanceKind::General)?;
    Ok(spec.sampler().general(spec.dim))
}

/// Operators `A`, `B` with `|A|B = B*|A|`, together with the factors used to
/// build them: `A = U·P`, `P = |A|`, `C = P·B` Hermitian.
#[derive(Clone, Debug)]
pub struct IntertwinedPair {
    pub a: Operator,
    pub b: Operator,
    pub p: HermitianOperator,
    pub u: Operator,
    pub c: HermitianOperator,
}

impl IntertwinedPair {
    /// Assembles `A = U·P` and `B = P⁻¹·C` and checks the intertwining residual.
    pub fn from_factors(p: HermitianOperator, c: HermitianOperator, u: Operator) -> Result<Self> {
        let n = p.dim();
        if c.dim() != n || !u.is_square() || u.dim() != n {
            return Err(Error::DimensionMismatch("P, C and U must share one dimension".into()));
        }
        let chol =
            p.matrix().clone().cholesky().ok_or_else(|| Error::NumericFailure("P is not positive definite".into()))?;
        let b = Operator::new(chol.solve(c.matrix()))?;
        let a = &u * p.operator();
        let pair = Self { a, b, p, u, c };
        let r = pair.intertwining_residual()?;
        if !(r <= INTERTWINING_TOL) {
            return Err(Error::NumericFailure(format!("intertwining residual {r:e} exceeds {INTERTWINING_TOL:e}")));
        }
        Ok(pair)
    }

    /// `A = B = I`, the equality witness of several inequalities.
    pub fn identity(n: usize) -> Self {
        Self {
            a: Operator::identity(n),
            b: Operator::identity(n),
            p: HermitianOperator::identity(n),
            u: Operator::identity(n),
            c: HermitianOperator::identity(n),
        }
    }

    pub fn dim(&self) -> usize {
        self.a.dim()
    }

    /// `‖P·B − B*·P‖ / max(1, ‖P‖·‖B‖)`.
    pub fn intertwining_residual(&self) -> Result<f64> {
        let pb = self.p.operator() * &self.b;
        let bp = &adjoint(&self.b) * self.p.operator();
        let scale = (op_norm(&self.p)? * op_norm(&self.b)?).max(1.0);
        Ok(op_norm(&(&pb - &bp))? / scale)
    }

    /// `‖A − U·P‖ / max(1, ‖A‖)`.
    pub fn polar_residual(&self) -> Result<f64> {
        let up = &self.u * self.p.operator();
        Ok(op_norm(&(&self.a - &up))? / op_norm(&self.a)?.max(1.0))
    }
}

/// `P` positive definite with condition number at most the cap, `C` Hermitian,
/// `U` Haar unitary; `B = P⁻¹C` and `A = UP`.
///
/// Then `P·B = C = C* = B*·P`, and `P = |A|` because `U` is unitary.
pub fn gen_intertwined_pair(spec: &InstanceSpec) -> Result<IntertwinedPair> {
    spec.validate(InstanceKind::IntertwinedPair)?;
    let mut s = spec.sampler();
    let p = s.psd(spec.dim, spec.condition_cap);
    let c = s.hermitian(spec.dim);
    let u = s.unitary(spec.dim);
    IntertwinedPair::from_factors(p, c, u)
}

/// Commuting family: `B = c₀I + c₁P + c₂P²` with real Gaussian coefficients.
pub fn gen_commuting_pair(spec: &InstanceSpec) -> Result<IntertwinedPair> {
    spec.validate(InstanceKind::IntertwinedPair)?;
    let mut s = spec.sampler();
    let p = s.psd(spec.dim, spec.condition_cap);
    let coeffs = [s.normal(), s.normal(), s.normal()];
    let u = s.unitary(spec.dim);
    let b = p.spectral()?.map(|t| coeffs[0] + coeffs[1] * t + coeffs[2] * t * t);
    let c = HermitianOperator::from_symmetrized(p.matrix() * b.matrix());
    IntertwinedPair::from_factors(p, c, u)
}

/// Function pair from its JSON descriptor.
pub fn gen_function_pair(spec: FunctionPairSpec) -> Result<FunctionPair> {
    FunctionPair::try_from(spec)
}

/// `count` independent general operators.
pub fn gen_cartesian_family(spec: &InstanceSpec, count: usize) -> Result<Vec<Operator>> {
    spec.validate(InstanceKind::General)?;
    if count == 0 {
        return Err(Error::ParameterDomain("family size must be at least 1".into()));
    }
    let mut s = spec.sampler();
    Ok((0..count).map(|_| s.general(spec.dim)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hermitian_is_reproducible_and_exact() {
        let spec = InstanceSpec::new(InstanceKind::Hermitian, 2, 7);
        let a = random_hermitian(&spec).unwrap();
        let b = random_hermitian(&spec).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.matrix(), &a.matrix().adjoint());
        let other = random_hermitian(&InstanceSpec::new(InstanceKind::Hermitian, 2, 8)).unwrap();
        assert_ne!(a, other);
    }

    #[test]
    fn psd_with_unit_cap_is_identity() {
        let spec = InstanceSpec::new(InstanceKind::Psd, 4, 3).with_condition_cap(1.0);
        let p = random_psd(&spec).unwrap();
        let vals = p.spectral().unwrap().values;
        assert!(vals.iter().all(|v| (v - 1.0).abs() < 1e-12));
    }

    #[test]
    fn psd_respects_cap() {
        for seed in 0..20 {
            let spec = InstanceSpec::new(InstanceKind::Psd, 6, seed).with_condition_cap(50.0);
            let vals = random_psd(&spec).unwrap().spectral().unwrap().values;
            let lo = vals.iter().copied().fold(f64::INFINITY, f64::min);
            assert!(lo >= 1.0 / 50.0 - 1e-12);
        }
    }

    #[test]
    fn kind_is_checked() {
        let spec = InstanceSpec::new(InstanceKind::Psd, 3, 1);
        assert!(random_hermitian(&spec).is_err());
        let spec = InstanceSpec::new(InstanceKind::Psd, 3, 1).with_condition_cap(0.5);
        assert!(random_psd(&spec).is_err());
    }

    #[test]
    fn hand_built_pair() {
        // P = diag(1,2), C = [[0,1],[1,0]], U = I  ⇒  B = [[0,1],[0.5,0]]
        let p = HermitianOperator::from_real_diagonal(&[1.0, 2.0]);
        let c = HermitianOperator::new(Operator::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap()).unwrap();
        let pair = IntertwinedPair::from_factors(p, c, Operator::identity(2)).unwrap();
        let want = Operator::from_real_rows(&[&[0.0, 1.0], &[0.5, 0.0]]).unwrap();
        assert!((&pair.b - &want).frobenius() < 1e-15);
        assert_eq!(pair.a, Operator::from_real_diagonal(&[1.0, 2.0]));
        assert!(pair.intertwining_residual().unwrap() < 1e-15);
    }

    #[test]
    fn zero_c_gives_zero_b() {
        let p = HermitianOperator::from_real_diagonal(&[1.0, 3.0]);
        let c = HermitianOperator::new(Operator::zeros(2, 2)).unwrap();
        let pair = IntertwinedPair::from_factors(p, c, Operator::identity(2)).unwrap();
        assert_eq!(pair.b.frobenius(), 0.0);
    }

    #[test]
    fn generated_pairs_intertwine() {
        for seed in 0..25 {
            let spec = InstanceSpec::new(InstanceKind::IntertwinedPair, 2 + (seed as usize % 7), seed);
            for pair in [gen_intertwined_pair(&spec).unwrap(), gen_commuting_pair(&spec).unwrap()] {
                assert!(pair.intertwining_residual().unwrap() <= INTERTWINING_TOL);
                assert!(pair.polar_residual().unwrap() <= 1e-10);
            }
        }
    }

    #[test]
    fn family_is_reproducible() {
        let spec = InstanceSpec::new(InstanceKind::General, 3, 11);
        let f1 = gen_cartesian_family(&spec, 3).unwrap();
        let f2 = gen_cartesian_family(&spec, 3).unwrap();
        assert_eq!(f1, f2);
        assert_eq!(gen_cartesian_family(&spec, 1).unwrap()[0], random_general(&spec).unwrap());
    }

    #[test]
    fn seeds_are_mixed() {
        assert_ne!(derive_seed(1, 0, 0), derive_seed(1, 0, 1));
        assert_ne!(derive_seed(1, 0, 0), derive_seed(2, 0, 0));
        assert_eq!(derive_seed(42, 3, 9), derive_seed(42, 3, 9));
    }
}
