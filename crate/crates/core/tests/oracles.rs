//! Library numerics against independent oracles.

mod common;

use berezin::calculus::{herm_fun, modulus, op_norm, polar_decompose, spectral_radius};
use berezin::generators::Sampler;
use berezin::rkhs::{build_space, GridSpec};
use berezin::{berezin_number, berezin_symbol, Complex64, KernelSpace, Model, Operator};
use common::{form, geometric, hardy_unit_kernel, hermitian_eigenvalues, weighted_geometric};

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1.0)
}

#[test]
fn jacobi_agrees_with_known_spectrum() {
    let h = Operator::from_real_rows(&[&[2.0, 1.0], &[1.0, 2.0]]).unwrap();
    let w = hermitian_eigenvalues(h.matrix());
    assert!((w[0] - 1.0).abs() < 1e-14 && (w[1] - 3.0).abs() < 1e-14);
}

#[test]
fn operator_norm_matches_oracle() {
    let mut s = Sampler::new(3);
    for n in 1..=8 {
        let a = s.general(n);
        assert!(rel(op_norm(&a).unwrap(), common::op_norm(a.matrix())) < 1e-12);
    }
}

#[test]
fn hermitian_spectral_radius_matches_oracle() {
    let mut s = Sampler::new(4);
    for n in 1..=8 {
        let h = s.hermitian(n);
        let w = hermitian_eigenvalues(h.matrix());
        let r = w.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
        assert!(rel(spectral_radius(h.operator()).unwrap(), r) < 1e-12);
    }
}

#[test]
fn modulus_squares_to_gram() {
    let mut s = Sampler::new(5);
    for n in 1..=8 {
        let a = s.general(n);
        let m = modulus(&a).unwrap();
        let gram = a.matrix().adjoint() * a.matrix();
        let diff = m.matrix() * m.matrix() - &gram;
        assert!(common::op_norm(&diff) <= 1e-12 * common::op_norm(&gram).max(1.0));
        // singular values are the eigenvalues of |A|
        let w = hermitian_eigenvalues(m.matrix());
        assert!(w[0] >= -1e-12);
    }
}

#[test]
fn polar_factors_reconstruct() {
    let mut s = Sampler::new(6);
    for n in 1..=10 {
        let a = s.general(n);
        let (u, p) = polar_decompose(&a).unwrap();
        let recon = u.matrix() * p.matrix();
        assert!(common::op_norm(&(recon - a.matrix())) <= 1e-10 * common::op_norm(a.matrix()).max(1.0));
        let id = u.matrix().adjoint() * u.matrix() - nalgebra::DMatrix::<Complex64>::identity(n, n);
        assert!(common::op_norm(&id) < 1e-12);
    }
}

#[test]
fn herm_fun_matches_eigenvalue_map() {
    let mut s = Sampler::new(7);
    for n in 1..=6 {
        let h = s.psd(n, 1e3);
        let cube = herm_fun(|t| t.powi(3), &h).unwrap();
        let direct = h.matrix() * h.matrix() * h.matrix();
        assert!(common::op_norm(&(cube.matrix() - &direct)) <= 1e-11 * common::op_norm(&direct));
    }
}

#[test]
fn hardy_symbols_match_explicit_kernels() {
    let n = 6;
    let space = build_space(Model::Hardy, n, &GridSpec::Disc { radial: 5, angular: 12, rmax: 0.9 }).unwrap();
    let pts = space.grid().points().to_vec();
    let mut s = Sampler::new(8);
    let a = s.general(n);
    let mut best = 0.0_f64;
    for (i, &lambda) in pts.iter().enumerate() {
        let want = form(a.matrix(), &hardy_unit_kernel(lambda, n));
        let got = berezin_symbol(&a, &space, i).unwrap();
        assert!((got - want).norm() < 1e-12 * common::op_norm(a.matrix()).max(1.0));
        best = best.max(want.norm());
    }
    assert!(rel(berezin_number(&a, &space).unwrap(), best) < 1e-12);
}

#[test]
fn kernel_norms_match_closed_forms() {
    let grid = GridSpec::Disc { radial: 20, angular: 64, rmax: 0.95 };
    for n in [1, 4, 8, 16] {
        let hardy = build_space(Model::Hardy, n, &grid).unwrap();
        let bergman = build_space(Model::Bergman, n, &grid).unwrap();
        for (i, z) in hardy.grid().points().iter().enumerate() {
            let r = z.norm_sqr();
            assert!(rel(hardy.kernel_norms()[i].powi(2), geometric(r, n)) < 1e-12);
            assert!(rel(bergman.kernel_norms()[i].powi(2), weighted_geometric(r, n)) < 1e-12);
        }
    }
}

#[test]
fn diagonal_space_reads_the_diagonal() {
    let mut s = Sampler::new(9);
    for n in 1..=8 {
        let space = build_space(Model::Diagonal, n, &GridSpec::Index).unwrap();
        let a = s.general(n);
        let want = (0..n).map(|i| a.matrix()[(i, i)].norm()).fold(0.0, f64::max);
        assert!((berezin_number(&a, &space).unwrap() - want).abs() <= 1e-12 * want.max(1.0));
        assert_eq!(space.len(), n);
    }
}
