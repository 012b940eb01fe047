//! Berezin symbols `Ã(λ) = ⟨A k̂_λ, k̂_λ⟩` and grid Berezin numbers.
//!
//! The Berezin number is the maximum of `|Ã|` over the stored grid, so it
//! is a lower bound for the supremum over the whole domain.

use std::f64::consts::TAU;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::calculus::{codec, rotated_real_part, HermitianOperator, Operator};
use crate::error::{Error, Result};
use crate::rkhs::KernelSpace;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct BerezinEvaluation {
    #[serde(with = "codec::complex_vec")]
    pub values: Vec<Complex64>,
    pub argmax_index: usize,
    pub ber_value: f64,
}

fn check_dim<S: KernelSpace + ?Sized>(a: &Operator, space: &S) -> Result<()> {
    if !a.is_square() || a.dim() != space.dim() {
        return Err(Error::DimensionMismatch(format!(
            "operator is {}x{} but the space has dim {}",
            a.nrows(),
            a.ncols(),
            space.dim()
        )));
    }
    Ok(())
}

/// `⟨M k_j, k_j⟩` for every column `k_j` of `kernels`.
pub(crate) fn column_forms(m: &DMatrix<Complex64>, kernels: &DMatrix<Complex64>) -> Vec<Complex64> {
    let mk = m * kernels;
    mk.column_iter().zip(kernels.column_iter()).map(|(mkc, kc)| kc.dotc(&mkc)).collect()
}

/// First index attaining the maximum.
pub(crate) fn first_argmax(values: impl IntoIterator<Item = f64>) -> (usize, f64) {
    let mut best = (0, f64::NEG_INFINITY);
    for (i, v) in values.into_iter().enumerate() {
        if v > best.1 {
            best = (i, v);
        }
    }
    best
}

pub fn berezin_symbol<S: KernelSpace + ?Sized>(a: &Operator, space: &S, index: usize) -> Result<Complex64> {
    check_dim(a, space)?;
    let k = space.normalized_kernel(index)?;
    Ok(a.quadratic_form(&k))
}

pub fn berezin_set<S: KernelSpace + ?Sized>(a: &Operator, space: &S) -> Result<BerezinEvaluation> {
    check_dim(a, space)?;
    let values = column_forms(a.matrix(), space.kernel_matrix());
    let (argmax_index, ber_value) = first_argmax(values.iter().map(|z| z.norm()));
    Ok(BerezinEvaluation { values, argmax_index, ber_value })
}

pub fn berezin_number<S: KernelSpace + ?Sized>(a: &Operator, space: &S) -> Result<f64> {
    Ok(berezin_set(a, space)?.ber_value)
}

/// Real Berezin symbol `⟨H k̂_λ, k̂_λ⟩` of a Hermitian operator at every grid point.
pub fn real_symbols<S: KernelSpace + ?Sized>(h: &HermitianOperator, space: &S) -> Result<Vec<f64>> {
    check_dim(h, space)?;
    Ok(column_forms(h.matrix(), space.kernel_matrix()).into_iter().map(|z| z.re).collect())
}

/// `max_θ ber(Re(e^{iθ}A))` over `θ = 2πj/angle_count`, `j = 0..angle_count`.
///
/// With `N` angles the result lies in `[cos(π/N)·ber(A), ber(A)]`.
pub fn rotation_scan_ber<S: KernelSpace + Sync + ?Sized>(a: &Operator, space: &S, angle_count: usize) -> Result<f64> {
    check_dim(a, space)?;
    if angle_count < 4 {
        return Err(Error::ParameterDomain(format!("angle count must be at least 4, got {angle_count}")));
    }
    let per_angle: Vec<f64> = (0..angle_count)
        .into_par_iter()
        .map(|j| {
            let re = rotated_real_part(a, TAU * j as f64 / angle_count as f64);
            berezin_number(re.operator(), space)
        })
        .collect::<Result<_>>()?;
    Ok(per_angle.into_iter().fold(0.0, f64::max))
}
