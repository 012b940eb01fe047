//! Finite-dimensional sampled models of reproducing kernel Hilbert spaces.
//!
//! A space is truncated to its first `dim` orthonormal basis functions and
//! its domain to a finite grid. The kernel at `λ` has coordinates
//! `(conj e₀(λ), …, conj e_{n−1}(λ))` in that basis and is stored normalised.
//!
//! | model     | basis `e_j(z)`       | grid                      |
//! |-----------|----------------------|---------------------------|
//! | diagonal  | `δ_j` on `{1..n}`    | index set of size `n`     |
//! | hardy     | `z^j`                | disc or interval, `|λ|<1` |
//! | bergman   | `√(j+1) z^j`         | disc or interval, `|λ|<1` |
//! | custom    | user kernel vectors  | index set, one per kernel |

use std::f64::consts::TAU;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::calculus::codec::{self, ComplexPair};
use crate::error::{Error, Result};

pub const DEFAULT_RMAX: f64 = 0.95;

/// Tolerance on the unit norm of every stored kernel.
pub const KERNEL_NORM_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    Diagonal,
    Hardy,
    Bergman,
    /// Custom Gram model: user-supplied unnormalised kernel coordinates.
    Custom,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum GridSpec {
    /// Origin plus `radial` rings of radius `rmax·i/radial` (`i = 1..=radial`),
    /// each with `angular` equally spaced angles.
    Disc {
        radial: usize,
        angular: usize,
        #[serde(default = "default_rmax")]
        rmax: f64,
    },
    /// `count` equally spaced real points from `a` to `b`.
    Interval { a: f64, b: f64, count: usize },
    /// The index set `{1, …, n}`.
    Index,
}

fn default_rmax() -> f64 {
    DEFAULT_RMAX
}

#[derive(Clone, Debug, PartialEq)]
pub struct DomainGrid {
    points: Vec<Complex64>,
    spec: GridSpec,
}

impl DomainGrid {
    pub fn points(&self) -> &[Complex64] {
        &self.points
    }

    pub fn spec(&self) -> &GridSpec {
        &self.spec
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    fn build(spec: &GridSpec, index_size: usize) -> Result<Self> {
        let points = match *spec {
            GridSpec::Disc { radial, angular, rmax } => {
                if radial == 0 || angular == 0 {
                    return Err(Error::InvalidGrid("disc grid needs radial ≥ 1 and angular ≥ 1".into()));
                }
                if !(rmax > 0.0 && rmax < 1.0) {
                    return Err(Error::InvalidGrid(format!("rmax must lie in (0, 1), got {rmax}")));
                }
                let mut pts = Vec::with_capacity(1 + radial * angular);
                pts.push(Complex64::new(0.0, 0.0));
                for i in 1..=radial {
                    let r = rmax * i as f64 / radial as f64;
                    for j in 0..angular {
                        pts.push(Complex64::from_polar(r, TAU * j as f64 / angular as f64));
                    }
                }
                pts
            }
            GridSpec::Interval { a, b, count } => {
                if count == 0 {
                    return Err(Error::InvalidGrid("interval grid needs count ≥ 1".into()));
                }
                if !(a.abs() < 1.0 && b.abs() < 1.0) {
                    return Err(Error::InvalidGrid(format!("interval [{a}, {b}] must lie inside the open unit disc")));
                }
                if count > 1 && a == b {
                    return Err(Error::InvalidGrid("degenerate interval repeats points".into()));
                }
                let step = if count > 1 { (b - a) / (count - 1) as f64 } else { 0.0 };
                (0..count).map(|i| Complex64::new(a + step * i as f64, 0.0)).collect()
            }
            GridSpec::Index => {
                if index_size == 0 {
                    return Err(Error::InvalidGrid("empty index set".into()));
                }
                (1..=index_size).map(|j| Complex64::new(j as f64, 0.0)).collect()
            }
        };
        Ok(Self { points, spec: spec.clone() })
    }
}

/// JSON description of a space: `{"model": ..., "dim": n, "grid": {...}}`,
/// plus `"kernels"` for the custom model.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpaceSpec {
    pub model: Model,
    pub dim: usize,
    #[serde(default = "index_grid")]
    pub grid: GridSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kernels: Option<Vec<Vec<ComplexPair>>>,
}

fn index_grid() -> GridSpec {
    GridSpec::Index
}

impl SpaceSpec {
    pub fn diagonal(dim: usize) -> Self {
        Self { model: Model::Diagonal, dim, grid: GridSpec::Index, kernels: None }
    }

    pub fn hardy_disc(dim: usize, radial: usize, angular: usize, rmax: f64) -> Self {
        Self { model: Model::Hardy, dim, grid: GridSpec::Disc { radial, angular, rmax }, kernels: None }
    }

    pub fn build(&self) -> Result<SampledSpace> {
        match self.model {
            Model::Custom => {
                if !matches!(self.grid, GridSpec::Index) {
                    return Err(Error::ModelGridMismatch("custom model uses an index grid".into()));
                }
                let kernels = self
                    .kernels
                    .as_ref()
                    .ok_or_else(|| Error::InvalidKernel("custom model requires \"kernels\"".into()))?;
                let vecs: Vec<DVector<Complex64>> = kernels.iter().map(|k| codec::pairs_to_vector(k)).collect();
                SampledSpace::custom(self.dim, &vecs)
            }
            model => {
                if self.kernels.is_some() {
                    return Err(Error::InvalidKernel("\"kernels\" is only valid for the custom model".into()));
                }
                build_space(model, self.dim, &self.grid)
            }
        }
    }
}

/// Anything that carries a family of unit kernel vectors of a common length.
pub trait KernelSpace {
    fn dim(&self) -> usize;

    /// Normalised kernels as columns, `dim × len`.
    fn kernel_matrix(&self) -> &DMatrix<Complex64>;

    fn len(&self) -> usize {
        self.kernel_matrix().ncols()
    }

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The stored normalised kernel at a grid index (0-based).
    fn normalized_kernel(&self, index: usize) -> Result<DVector<Complex64>> {
        if index >= self.len() {
            return Err(Error::IndexOutOfRange { index, len: self.len() });
        }
        Ok(self.kernel_matrix().column(index).into_owned())
    }

    fn label(&self) -> String;
}

#[derive(Clone, Debug, PartialEq)]
pub struct SampledSpace {
    model: Model,
    dim: usize,
    grid: DomainGrid,
    kernels: DMatrix<Complex64>,
    kernel_norms: Vec<f64>,
}

/// Builds a sampled space for the diagonal, Hardy or Bergman model.
pub fn build_space(model: Model, dim: usize, grid: &GridSpec) -> Result<SampledSpace> {
    if dim == 0 {
        return Err(Error::InvalidGrid("dim must be at least 1".into()));
    }
    match (model, grid) {
        (Model::Diagonal, GridSpec::Index) => {
            let grid = DomainGrid::build(grid, dim)?;
            Ok(SampledSpace { model, dim, grid, kernels: DMatrix::identity(dim, dim), kernel_norms: vec![1.0; dim] })
        }
        (Model::Diagonal, _) => Err(Error::ModelGridMismatch("diagonal model requires an index grid".into())),
        (Model::Hardy | Model::Bergman, GridSpec::Index) => {
            Err(Error::ModelGridMismatch("hardy/bergman models require a disc or interval grid".into()))
        }
        (Model::Hardy | Model::Bergman, _) => {
            let grid = DomainGrid::build(grid, 0)?;
            let weight = |j: usize| match model {
                Model::Bergman => ((j + 1) as f64).sqrt(),
                _ => 1.0,
            };
            let raw = DMatrix::from_fn(dim, grid.len(), |j, col| grid.points[col].conj().powu(j as u32) * weight(j));
            let (kernels, kernel_norms) = normalize_columns(raw)?;
            Ok(SampledSpace { model, dim, grid, kernels, kernel_norms })
        }
        (Model::Custom, _) => Err(Error::ModelGridMismatch(
            "custom spaces are built from kernel vectors, see SampledSpace::custom".into(),
        )),
    }
}

fn normalize_columns(mut raw: DMatrix<Complex64>) -> Result<(DMatrix<Complex64>, Vec<f64>)> {
    let mut norms = Vec::with_capacity(raw.ncols());
    for mut col in raw.column_iter_mut() {
        let n = col.norm();
        if !(n.is_finite() && n > 0.0) {
            return Err(Error::InvalidKernel(format!("kernel norm {n} is not positive and finite")));
        }
        col.unscale_mut(n);
        norms.push(n);
    }
    Ok((raw, norms))
}

impl SampledSpace {
    /// Custom Gram model from unnormalised kernel coordinate vectors.
    pub fn custom(dim: usize, kernels: &[DVector<Complex64>]) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidGrid("dim must be at least 1".into()));
        }
        if kernels.is_empty() {
            return Err(Error::InvalidGrid("custom model needs at least one kernel".into()));
        }
        if let Some(k) = kernels.iter().find(|k| k.len() != dim) {
            return Err(Error::InvalidKernel(format!("kernel of length {} in a space of dim {dim}", k.len())));
        }
        if kernels.iter().flat_map(|k| k.iter()).any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite("custom kernel"));
        }
        let raw = DMatrix::from_columns(kernels);
        let (kernels, kernel_norms) = normalize_columns(raw)?;
        let grid = DomainGrid::build(&GridSpec::Index, kernels.ncols())?;
        Ok(Self { model: Model::Custom, dim, grid, kernels, kernel_norms })
    }

    pub fn model(&self) -> Model {
        self.model
    }

    pub fn grid(&self) -> &DomainGrid {
        &self.grid
    }

    /// `‖k_λ‖` of the unnormalised kernel at each grid point.
    pub fn kernel_norms(&self) -> &[f64] {
        &self.kernel_norms
    }

    /// Unnormalised kernel `k_λ`.
    pub fn raw_kernel(&self, index: usize) -> Result<DVector<Complex64>> {
        Ok(self.normalized_kernel(index)? * Complex64::new(self.kernel_norms[index], 0.0))
    }
}

impl KernelSpace for SampledSpace {
    fn dim(&self) -> usize {
        self.dim
    }

    fn kernel_matrix(&self) -> &DMatrix<Complex64> {
        &self.kernels
    }

    fn label(&self) -> String {
        let model = match self.model {
            Model::Diagonal => "diagonal",
            Model::Hardy => "hardy",
            Model::Bergman => "bergman",
            Model::Custom => "custom",
        };
        match self.grid.spec {
            GridSpec::Disc { radial, angular, rmax } => {
                format!("{model}(dim={},disc={radial}x{angular},rmax={rmax})", self.dim)
            }
            GridSpec::Interval { a, b, count } => {
                format!("{model}(dim={},interval=[{a},{b}]x{count})", self.dim)
            }
            GridSpec::Index => format!("{model}(dim={},points={})", self.dim, self.grid.len()),
        }
    }
}

/// `H(Ω₁) ⊕ H(Ω₂)` sampled on the product grid, row-major in `(λ₁, λ₂)`.
///
/// The kernel at `(λ₁, λ₂)` is the stack `(k_{λ₁}, k_{λ₂})` of the two
/// unnormalised kernels, rescaled to unit length.
#[derive(Clone, Debug, PartialEq)]
pub struct DirectSumSpace {
    left: SampledSpace,
    right: SampledSpace,
    pairs: Vec<(usize, usize)>,
    kernels: DMatrix<Complex64>,
}

pub fn direct_sum(left: &SampledSpace, right: &SampledSpace) -> DirectSumSpace {
    let (n1, n2) = (left.dim, right.dim);
    let pairs: Vec<(usize, usize)> = (0..left.len()).flat_map(|i| (0..right.len()).map(move |j| (i, j))).collect();
    let mut kernels = DMatrix::zeros(n1 + n2, pairs.len());
    for (col, &(i, j)) in pairs.iter().enumerate() {
        let (w1, w2) = (left.kernel_norms[i], right.kernel_norms[j]);
        let total = w1.hypot(w2);
        let mut c = kernels.column_mut(col);
        c.rows_mut(0, n1).copy_from(&(left.kernels.column(i) * Complex64::new(w1 / total, 0.0)));
        c.rows_mut(n1, n2).copy_from(&(right.kernels.column(j) * Complex64::new(w2 / total, 0.0)));
    }
    DirectSumSpace { left: left.clone(), right: right.clone(), pairs, kernels }
}

impl DirectSumSpace {
    pub fn left(&self) -> &SampledSpace {
        &self.left
    }

    pub fn right(&self) -> &SampledSpace {
        &self.right
    }

    /// Grid index pair `(λ₁, λ₂)` of a product-grid index.
    pub fn pair(&self, index: usize) -> Option<(usize, usize)> {
        self.pairs.get(index).copied()
    }
}

impl KernelSpace for DirectSumSpace {
    fn dim(&self) -> usize {
        self.left.dim + self.right.dim
    }

    fn kernel_matrix(&self) -> &DMatrix<Complex64> {
        &self.kernels
    }

    fn label(&self) -> String {
        format!("{} ⊕ {}", self.left.label(), self.right.label())
    }
}
