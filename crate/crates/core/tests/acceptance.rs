//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

mod common;

use std::f64::consts::PI;
use std::time::Instant;

use berezin::calculus::polar_decompose;
use berezin::certifiers::{
    cert_ber1, cert_cartesian_1, cert_cartesian_2, cert_ki1, cert_ki3, cert_remark_chain, cert_thm_half_rb,
    cert_thm_power_young, cert_young_scalar, ConjugateExponents,
};
use berezin::config::RunConfig;
use berezin::generators::{
    derive_seed, gen_commuting_pair, gen_intertwined_pair, InstanceKind, InstanceSpec, IntertwinedPair, Sampler,
};
use berezin::report::{to_json, without_timestamp, ReportMeta};
use berezin::rkhs::{build_space, GridSpec};
use berezin::suite::{run_certify, run_tighten, SuiteId, SuiteReport};
use berezin::{berezin_number, rotation_scan_ber, FunctionPair, Model, Operator, SampledSpace, SpaceSpec, Tolerance};

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn diag(n: usize) -> SampledSpace {
    build_space(Model::Diagonal, n, &GridSpec::Index).unwrap()
}

fn failures(reports: &[SuiteReport]) -> (usize, usize) {
    let v = reports.iter().map(|r| r.violations.len()).sum();
    let e = reports.iter().map(|r| r.errors.len()).sum();
    (v, e)
}

/// Every suite, 500 trials, default spaces, default tolerance, under 5 minutes.
fn full_suite() -> Outcome {
    let start = Instant::now();
    let config = RunConfig::new(&["all"]);
    let reports = run_certify(&config).unwrap();
    let secs = start.elapsed().as_secs_f64();
    let (v, e) = failures(&reports);
    let tol_ok = config.tol_rel == 1e-9 && config.trials == 500;
    for r in reports.iter().filter(|r| !r.passed()) {
        eprintln!("  {} on {}: {} violations, {} errors", r.suite_id, r.space, r.violations.len(), r.errors.len());
    }
    outcome(
        v == 0 && e == 0 && tol_ok && secs < 300.0 && reports.len() == SuiteId::ALL.len() * 8,
        format!("{} suite×space reports, {v} violations, {e} errors, {secs:.1}s", reports.len()),
    )
}

/// ber on the diagonal model is the largest diagonal modulus.
fn diagonal_oracle() -> Outcome {
    let mut s = Sampler::new(derive_seed(42, 2, 0));
    let mut worst = 0.0_f64;
    for i in 0..1000 {
        let n = 2 + i % 7;
        let a = s.general(n);
        let want = (0..n).map(|j| a.matrix()[(j, j)].norm()).fold(0.0, f64::max);
        worst = worst.max((berezin_number(&a, &diag(n)).unwrap() - want).abs());
    }
    outcome(worst <= 1e-12, format!("1000 matrices, max |ber − max|a_jj|| = {worst:.2e}"))
}

/// Kernel norms against the finite sums on a 20×64 disc grid.
fn kernel_closed_forms() -> Outcome {
    let grid = GridSpec::Disc { radial: 20, angular: 64, rmax: 0.95 };
    let mut worst = 0.0_f64;
    let mut points = 0;
    for n in [1, 2, 5, 8, 16] {
        let hardy = build_space(Model::Hardy, n, &grid).unwrap();
        let bergman = build_space(Model::Bergman, n, &grid).unwrap();
        for (i, z) in hardy.grid().points().iter().enumerate() {
            let r = z.norm_sqr();
            let sum_h: f64 = (0..n).map(|j| r.powi(j as i32)).sum();
            let sum_b: f64 = (0..n).map(|j| (j + 1) as f64 * r.powi(j as i32)).sum();
            worst = worst
                .max((hardy.kernel_norms()[i].powi(2) - sum_h).abs() / sum_h)
                .max((bergman.kernel_norms()[i].powi(2) - sum_b).abs() / sum_b)
                .max((sum_h - common::geometric(r, n)).abs() / sum_h);
            points += 1;
        }
    }
    outcome(worst <= 1e-12, format!("{points} grid points, max relative error {worst:.2e}"))
}

/// `A = B = I`, `f = g = √t` attains equality.
fn equality_witnesses() -> Outcome {
    let tol = Tolerance::default();
    let fp = FunctionPair::power(0.5).unwrap();
    let mut worst = 0.0_f64;
    let mut holds = true;
    let spaces = [diag(3), build_space(Model::Hardy, 4, &GridSpec::Disc { radial: 4, angular: 8, rmax: 0.9 }).unwrap()];
    for space in &spaces {
        let n = berezin::KernelSpace::dim(space);
        let pair = IntertwinedPair::identity(n);
        let id = [Operator::identity(n)];
        let certs = [
            cert_thm_half_rb(&pair, &fp, space, &tol).unwrap(),
            cert_remark_chain(&pair, &fp, space, &tol).unwrap(),
            cert_thm_power_young(&pair, &fp, space, 2.0, &ConjugateExponents::new(2.0).unwrap(), &tol).unwrap(),
            cert_cartesian_1(&id, space, 1.0, &tol).unwrap(),
            cert_cartesian_2(&id, space, 1.0, &tol).unwrap(),
        ];
        for c in &certs {
            holds &= c.holds();
            worst = worst.max(c.headline().gap.abs());
        }
    }
    let y = cert_young_scalar(1.0, 4.0, 0.5, &tol).unwrap();
    let yc = y.headline();
    let young_ok = (yc.lhs - 2.0).abs() <= 1e-12 && (yc.rhs - 2.0).abs() <= 1e-12;
    outcome(
        holds && worst <= 1e-12 && young_ok,
        format!("max |gap| {worst:.2e}; young(1,4,½) lhs {} rhs {}", yc.lhs, yc.rhs),
    )
}

/// Refined bounds sit below the unrefined ones per grid point and in tighten mode.
fn refinement_dominance() -> Outcome {
    let mut config = RunConfig::new(&["thm-young-refined", "thm-power-young-refined"]);
    config.keep_certificates = true;
    let reports = run_certify(&config).unwrap();
    let mut checked = 0usize;
    let mut bad = 0usize;
    for r in &reports {
        for t in &r.certificates {
            for c in t.certificates.iter().filter(|c| c.theorem_id.ends_with(":dominance")) {
                checked += 1;
                if c.lhs > c.rhs + 1e-12 {
                    bad += 1;
                }
            }
        }
    }
    let mut tight = RunConfig::new(&["thm-half-rB", "thm-young-refined", "thm-power-young", "thm-power-young-refined"]);
    tight.mode = berezin::config::RunMode::Tighten;
    let t = run_tighten(&tight).unwrap();
    let gap = |id: SuiteId, space: &str| {
        t.iter().find(|r| r.suite_id == id && r.space == space).and_then(|r| r.tighten.as_ref()).map(|x| x.min_rel_gap)
    };
    let mut pairs = 0usize;
    let mut inverted = 0usize;
    for r in t.iter().filter(|r| r.suite_id.refines().is_some()) {
        let (Some(refined), Some(base)) = (gap(r.suite_id, &r.space), gap(r.suite_id.refines().unwrap(), &r.space))
        else {
            inverted += 1;
            continue;
        };
        pairs += 1;
        if refined > base {
            inverted += 1;
        }
    }
    outcome(
        checked >= 2 * 500 * 8 && bad == 0 && pairs == 16 && inverted == 0,
        format!("{checked} per-λ dominance checks, {bad} failures; {pairs} tighten pairs, {inverted} inverted"),
    )
}

/// Polar reconstruction and intertwining on generated pairs up to dim 16.
fn decomposition_residuals() -> Outcome {
    let (mut polar, mut inter) = (0.0_f64, 0.0_f64);
    for i in 0..1000u64 {
        let n = 1 + (i as usize % 16);
        let spec = InstanceSpec::new(InstanceKind::IntertwinedPair, n, derive_seed(42, 6, i));
        let pair = if i % 4 == 3 { gen_commuting_pair(&spec) } else { gen_intertwined_pair(&spec) }.unwrap();
        let (u, p) = polar_decompose(&pair.a).unwrap();
        let diff = u.matrix() * p.matrix() - pair.a.matrix();
        polar = polar.max(common::op_norm(&diff) / common::op_norm(pair.a.matrix()).max(1.0));
        inter = inter.max(pair.intertwining_residual().unwrap());
    }
    outcome(
        polar <= 1e-10 && inter <= 1e-9,
        format!("1000 instances, max polar residual {polar:.2e}, max intertwining residual {inter:.2e}"),
    )
}

/// Rotation scan with 720 angles brackets ber.
fn rotation_bracket() -> Outcome {
    let angles = 720;
    let lower = (PI / angles as f64).cos();
    let hardy = build_space(Model::Hardy, 5, &GridSpec::Disc { radial: 8, angular: 24, rmax: 0.95 }).unwrap();
    let diagonals: Vec<SampledSpace> = (2..=8).map(diag).collect();
    let mut s = Sampler::new(derive_seed(42, 7, 0));
    let mut worst = f64::INFINITY;
    let mut ok = true;
    for i in 0..200 {
        let (a, space) = if i % 4 == 3 {
            (s.general(5), &hardy)
        } else {
            let n = 2 + i % 7;
            (s.general(n), &diagonals[n - 2])
        };
        let ber = berezin_number(&a, space).unwrap();
        let scan = rotation_scan_ber(&a, space, angles).unwrap();
        ok &= scan >= lower * ber - 1e-12 && scan <= ber + 1e-9;
        worst = worst.min(scan / ber);
    }
    outcome(ok, format!("200 instances, min scan/ber {worst:.9} vs cos(π/720) {lower:.9}"))
}

/// The three classical bounds over 1000 instances each.
fn classical_suites() -> Outcome {
    let tol = Tolerance::default();
    let mut fails = [0usize; 3];
    for i in 0..1000u64 {
        let n = 2 + (i as usize % 7);
        let mut s = Sampler::new(derive_seed(42, 8, i));
        fails[0] += !cert_ki1(&s.general(n), &s.general(n), &tol).unwrap().holds() as usize;
        let (a, b) = (s.psd(n, 1e3), s.psd(n, 1e3));
        fails[1] += !cert_ki3(&a, &b, &tol).unwrap().holds() as usize;
        fails[2] += !cert_ber1(&a, &b, &tol).unwrap().holds() as usize;
    }
    let mut config = RunConfig::new(&["ki1", "ki3", "ber1"]);
    config.trials = 1000;
    let (v, e) = failures(&run_certify(&config).unwrap());
    outcome(
        fails == [0, 0, 0] && v == 0 && e == 0,
        format!("direct ki1/ki3/ber1 failures {fails:?}; suites at 1000 trials: {v} violations, {e} errors"),
    )
}

/// Same config twice gives the same bytes; parallel equals sequential.
fn determinism() -> Outcome {
    let mut config = RunConfig::new(&["all"]);
    config.trials = 25;
    config.keep_certificates = true;
    let json = |c: &RunConfig| {
        let r = run_certify(c).unwrap();
        without_timestamp(&to_json(&ReportMeta::new(c, &r), &r).unwrap()).unwrap()
    };
    let first = json(&config);
    let second = json(&config);
    config.parallel = false;
    let sequential = json(&config);
    config.parallel = true;
    config.spaces = vec![SpaceSpec::diagonal(4)];
    let other_space = json(&config);
    outcome(
        first == second && first == sequential && first != other_space,
        format!(
            "{} bytes; rerun identical {}, sequential identical {}",
            first.len(),
            first == second,
            first == sequential
        ),
    )
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("full certification suite", full_suite),
        ("diagonal-model oracle", diagonal_oracle),
        ("kernel closed forms", kernel_closed_forms),
        ("equality witnesses", equality_witnesses),
        ("refinement dominance", refinement_dominance),
        ("decomposition residuals", decomposition_residuals),
        ("rotation-scan bracket", rotation_bracket),
        ("classical inequality suites", classical_suites),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        println!("{} {}. {name}: {}", if o.pass { "PASS" } else { "FAIL" }, i + 1, o.detail);
        failed += !o.pass as usize;
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
