//! Independent oracles shared by the integration tests.
//!
//! Nothing here calls the crate's numerics: eigenvalues come from a cyclic
//! Jacobi sweep on the real symmetric embedding of a complex Hermitian matrix.

#![allow(dead_code)]

use berezin::Complex64;
use nalgebra::{DMatrix, DVector};

/// `[[Re, −Im], [Im, Re]]`, real symmetric when `h` is Hermitian. Each
/// eigenvalue of `h` appears twice in the embedding.
fn real_embedding(h: &DMatrix<Complex64>) -> Vec<Vec<f64>> {
    let n = h.nrows();
    let mut m = vec![vec![0.0; 2 * n]; 2 * n];
    for i in 0..n {
        for j in 0..n {
            let z = h[(i, j)];
            m[i][j] = z.re;
            m[i][j + n] = -z.im;
            m[i + n][j] = z.im;
            m[i + n][j + n] = z.re;
        }
    }
    m
}

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, ascending.
pub fn jacobi_eigenvalues(mut a: Vec<Vec<f64>>) -> Vec<f64> {
    let n = a.len();
    for _ in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        let scale: f64 = (0..n).map(|i| a[i][i] * a[i][i]).sum::<f64>().max(1e-300);
        if off <= 1e-30 * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for row in a.iter_mut() {
                    let (akp, akq) = (row[p], row[q]);
                    row[p] = c * akp - s * akq;
                    row[q] = s * akp + c * akq;
                }
                let (rp, rq) = (a[p].clone(), a[q].clone());
                for k in 0..n {
                    a[p][k] = c * rp[k] - s * rq[k];
                    a[q][k] = s * rp[k] + c * rq[k];
                }
            }
        }
    }
    let mut w: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    w.sort_by(|x, y| x.partial_cmp(y).unwrap());
    w
}

/// Eigenvalues of a complex Hermitian matrix, ascending.
pub fn hermitian_eigenvalues(h: &DMatrix<Complex64>) -> Vec<f64> {
    let w = jacobi_eigenvalues(real_embedding(h));
    w.into_iter().step_by(2).collect()
}

/// `‖A‖ = √λ_max(A*A)`.
pub fn op_norm(a: &DMatrix<Complex64>) -> f64 {
    let gram = a.adjoint() * a;
    hermitian_eigenvalues(&gram).last().copied().unwrap_or(0.0).max(0.0).sqrt()
}

/// `⟨A x, x⟩` by explicit sums.
pub fn form(a: &DMatrix<Complex64>, x: &DVector<Complex64>) -> Complex64 {
    let n = x.len();
    let mut s = Complex64::new(0.0, 0.0);
    for i in 0..n {
        for j in 0..n {
            s += x[i].conj() * a[(i, j)] * x[j];
        }
    }
    s
}

/// Unit Hardy kernel at `λ` with `n` coordinates `λ̄^j`.
pub fn hardy_unit_kernel(lambda: Complex64, n: usize) -> DVector<Complex64> {
    let k = DVector::from_fn(n, |j, _| lambda.conj().powu(j as u32));
    let norm = k.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    k.map(|z| z / norm)
}

/// Closed form of `Σ_{j<n} r^j`.
pub fn geometric(r: f64, n: usize) -> f64 {
    if (1.0 - r).abs() < 1e-14 {
        n as f64
    } else {
        (1.0 - r.powi(n as i32)) / (1.0 - r)
    }
}

/// Closed form of `Σ_{j<n} (j+1) r^j`.
pub fn weighted_geometric(r: f64, n: usize) -> f64 {
    if (1.0 - r).abs() < 1e-14 {
        (n * (n + 1)) as f64 / 2.0
    } else {
        let nf = n as f64;
        (1.0 - (nf + 1.0) * r.powi(n as i32) + nf * r.powi(n as i32 + 1)) / (1.0 - r).powi(2)
    }
}
