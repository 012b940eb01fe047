//! Invariants over seeded random inputs.

mod common;

use berezin::calculus::{adjoint, herm_fun, op_norm};
use berezin::certifiers::{cert_polarization, cert_young_scalar, ConvexFn};
use berezin::generators::{derive_seed, gen_commuting_pair, gen_intertwined_pair, InstanceKind, InstanceSpec, Sampler};
use berezin::rkhs::{build_space, GridSpec};
use berezin::{berezin_number, rotation_scan_ber, Complex64, FunctionPair, Model, SampledSpace, Tolerance};
use proptest::prelude::*;

fn hardy(n: usize) -> SampledSpace {
    build_space(Model::Hardy, n, &GridSpec::Disc { radial: 4, angular: 12, rmax: 0.9 }).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ber_bounded_by_norm_and_adjoint_invariant(seed in any::<u64>(), n in 1usize..7) {
        let space = hardy(n);
        let a = Sampler::new(seed).general(n);
        let ber = berezin_number(&a, &space).unwrap();
        prop_assert!(ber <= op_norm(&a).unwrap() * (1.0 + 1e-12));
        let ber_star = berezin_number(&adjoint(&a), &space).unwrap();
        prop_assert!((ber - ber_star).abs() <= 1e-12 * ber.max(1.0));
    }

    #[test]
    fn ber_is_absolutely_homogeneous(seed in any::<u64>(), n in 1usize..6, re in -3.0f64..3.0, im in -3.0f64..3.0) {
        let space = hardy(n);
        let a = Sampler::new(seed).general(n);
        let c = Complex64::new(re, im);
        let lhs = berezin_number(&a.scale(c), &space).unwrap();
        let rhs = c.norm() * berezin_number(&a, &space).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.max(1.0));
    }

    #[test]
    fn rotation_scan_never_exceeds_ber(seed in any::<u64>(), n in 1usize..5, angles in 4usize..40) {
        let space = hardy(n);
        let a = Sampler::new(seed).general(n);
        let ber = berezin_number(&a, &space).unwrap();
        let scan = rotation_scan_ber(&a, &space, angles).unwrap();
        prop_assert!(scan <= ber + 1e-9);
        prop_assert!(scan >= (std::f64::consts::PI / angles as f64).cos() * ber - 1e-12);
    }

    #[test]
    fn generated_pairs_intertwine(seed in any::<u64>(), n in 1usize..12, commuting in any::<bool>()) {
        let spec = InstanceSpec::new(InstanceKind::IntertwinedPair, n, seed);
        let pair = if commuting { gen_commuting_pair(&spec) } else { gen_intertwined_pair(&spec) }.unwrap();
        prop_assert!(pair.intertwining_residual().unwrap() <= 1e-9);
        prop_assert!(pair.polar_residual().unwrap() <= 1e-10);
    }

    #[test]
    fn herm_fun_composes(seed in any::<u64>(), n in 1usize..7, s in 0.2f64..3.0) {
        let h = Sampler::new(seed).psd(n, 1e3);
        let inner = herm_fun(|t| t.powf(s), &h).unwrap();
        let twice = herm_fun(f64::sqrt, &inner).unwrap();
        let once = herm_fun(|t| t.powf(s / 2.0), &h).unwrap();
        let scale = op_norm(once.operator()).unwrap().max(1.0);
        prop_assert!(op_norm(&(twice.operator() - once.operator())).unwrap() <= 1e-9 * scale);
    }

    #[test]
    fn young_scalar_holds(a in 1e-3f64..1e3, b in 1e-3f64..1e3, alpha in 0.0f64..=1.0) {
        prop_assert!(cert_young_scalar(a, b, alpha, &Tolerance::default()).unwrap().holds());
    }

    #[test]
    fn polarization_recovers_inner_product(seed in any::<u64>(), n in 1usize..10) {
        let mut s = Sampler::new(seed);
        let (x, y) = (s.vector(n), s.vector(n));
        prop_assert!(cert_polarization(&x, &y).unwrap().holds());
    }

    #[test]
    fn power_pairs_multiply_to_identity(alpha in 0.0f64..=1.0, t in 0.0f64..1e3) {
        let (f, g) = FunctionPair::power(alpha).unwrap().eval(t).unwrap();
        prop_assert!((f * g - t).abs() <= 1e-12 * t.max(1.0));
    }

    #[test]
    fn tolerance_is_monotone_in_rhs(lhs in 0.0f64..10.0, rhs in 0.0f64..10.0, d in 0.0f64..1.0) {
        let tol = Tolerance::default();
        if tol.holds(lhs, rhs) {
            prop_assert!(tol.holds(lhs, rhs + d));
        }
    }

    #[test]
    fn derived_seeds_differ_across_trials(master in any::<u64>(), stream in 0u64..16, t in 0u64..1000) {
        prop_assert_ne!(derive_seed(master, stream, t), derive_seed(master, stream, t + 1));
    }
}

#[test]
fn convex_functions_vanish_at_zero() {
    for h in [ConvexFn::power(1.0).unwrap(), ConvexFn::power(2.5).unwrap(), ConvexFn::Expm1] {
        assert_eq!(h.eval(0.0), 0.0);
    }
}
