use std::f64::consts::{LN_2, PI};

use areal_core::closed::*;
use areal_core::numeric::*;
use areal_core::special::{bloch_wigner, dirichlet_l, Character, SeriesControl};
use areal_core::{parse, ExpressionAST};
use num_complex::Complex64;

const N: u64 = 1_000_000;

fn e(s: &str) -> ExpressionAST {
    parse(s).unwrap()
}

fn within(est: &MCEstimate, target: f64) {
    let z = est.z_score(target);
    assert!(z.abs() <= 4.0, "mean {} stderr {} target {target} z {z}", est.mean, est.stderr);
}

#[test]
fn disk_moments() {
    let r2 = mc_polydisk(1, N, 7, |x| x[0].norm_sqr()).unwrap();
    within(&r2, 0.5);
    let lg = mc_polydisk(1, N, 8, |x| x[0].norm().ln()).unwrap();
    within(&lg, -0.5);
    // first moments vanish
    let re = mc_polydisk(1, N, 9, |x| x[0].re).unwrap();
    within(&re, 0.0);
}

#[test]
fn seeded_sampling_is_reproducible() {
    let a = sample_disk(&mut chunk_rng(42, 0));
    let b = sample_disk(&mut chunk_rng(42, 0));
    assert_eq!(a, b);
    let x = e("x + y");
    assert_eq!(mc_areal_mm(&x, 200_000, 42).unwrap(), mc_areal_mm(&x, 200_000, 42).unwrap());
    assert_ne!(
        mc_areal_mm(&x, 200_000, 42).unwrap().mean,
        mc_areal_mm(&x, 200_000, 43).unwrap().mean
    );
}

#[test]
fn deterministic_across_thread_counts() {
    let x = e("1 + x + y");
    let run = |threads: usize| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| mc_areal_mm(&x, 300_000, 11).unwrap())
    };
    let one = run(1);
    assert_eq!(one, run(3));
    assert_eq!(one, run(8));
}

#[test]
fn areal_examples() {
    within(&mc_areal_mm(&e("x + y"), N, 1).unwrap(), -0.25);
    within(&mc_areal_mm(&e("1 + x*y"), N, 2).unwrap(), 0.0);
    within(&mc_areal_mm(&e("1 + x*y*z"), N, 3).unwrap(), 0.0);
    within(&mc_areal_mm(&e("1 + x + y"), N, 4).unwrap(), mm_smyth_areal().value);
}

#[test]
fn jensen_consistency() {
    for (text, alpha) in [("x", 0.0), ("x - 0.5", 0.5), ("x - 1", 1.0), ("x - 2", 2.0)] {
        let est = mc_areal_mm(&e(text), N, 5).unwrap();
        within(&est, mm_linear(Complex64::new(alpha, 0.0)));
    }
}

#[test]
fn homogeneity_gap_and_additivity() {
    let a = mc_areal_mm(&e("x + y"), N, 21).unwrap();
    let b = mc_areal_mm(&e("x + 1"), N, 22).unwrap();
    let sigma = a.stderr.hypot(b.stderr);
    assert!(((a.mean - b.mean) + 0.25).abs() <= 4.0 * sigma);

    // same seed, same points: logs add sample by sample
    let p = mc_areal_mm(&e("x"), N, 23).unwrap();
    let q = mc_areal_mm(&e("x + 1"), N, 23).unwrap();
    let pq = mc_areal_mm(&e("x*(x + 1)"), N, 23).unwrap();
    assert!((pq.mean - p.mean - q.mean).abs() <= 4.0 * p.stderr.hypot(q.stderr));
    assert!((pq.mean - p.mean - q.mean).abs() < 1e-9);
}

#[test]
fn degenerate_expression_rejected() {
    assert!(matches!(
        mc_areal_mm(&e("x - x"), 10_000, 1),
        Err(NumericError::Degenerate(_))
    ));
}

#[test]
fn higher_and_multiple() {
    within(&mc_higher_mm(&[e("x")], &[2], N, 31).unwrap(), 0.5);
    let moebius = mc_higher_mm(&[e("(1 - x)/(1 + x)")], &[2], N, 32).unwrap();
    within(&moebius, PI * PI / 4.0 - 2.0 * LN_2);
    // Li2(-1) = -π²/12, Li1(-1) = -log 2
    let want = 0.5 * (-PI * PI / 12.0 + 2.0 * LN_2 - 1.0);
    within(&mc_higher_mm(&[e("1 - x"), e("1 + x")], &[1, 1], N, 33).unwrap(), want);
    assert!(mc_higher_mm(&[e("x")], &[1, 2], N, 1).is_err());
    assert!(mc_higher_mm(&[e("x")], &[0], N, 1).is_err());
}

#[test]
fn max_of_coordinates() {
    within(&mc_max_mm(&[e("x")], N, 41).unwrap(), -0.5);
    for n in 2..=4usize {
        let exprs: Vec<_> = (1..=n).map(|i| e(&format!("x{i}"))).collect();
        let est = mc_max_mm(&exprs, N, 41 + n as u64).unwrap();
        within(&est, -1.0 / (2.0 * n as f64));
    }
}

#[test]
fn zeta_estimates() {
    let x1 = e("x + 1");
    within(&mc_zeta_mm(&x1, 2.0, N, 51).unwrap(), 1.5);
    let zero = mc_zeta_mm(&x1, 0.0, 1000, 52).unwrap();
    assert_eq!((zero.mean, zero.stderr), (1.0, 0.0));
    let half = zeta_mm_x_plus_1(0.5, ZetaForm::Gamma).unwrap();
    within(&mc_zeta_mm(&x1, 0.5, N, 53).unwrap(), half);
}

#[test]
fn radial_factor_against_angular_quadrature() {
    let settings = QuadratureSettings::with_tolerance(1e-13).unwrap();
    for (s, rho) in [(1.0, 0.7), (2.0, 0.5), (0.5, 0.9), (-0.5, 0.6)] {
        let direct = integrate(
            |t: f64| (Complex64::from_polar(rho, t) + 1.0).norm().powf(s),
            0.0,
            2.0 * PI,
            &settings,
        )
        .unwrap()
        .value
            / (2.0 * PI);
        let r = radial_zeta_factor(s, rho).unwrap();
        assert!((r - direct).abs() < 1e-9, "({s},{rho}): {r} vs {direct}");
    }
}

#[test]
fn zeta_gamma_form_from_radial_integral() {
    let settings = QuadratureSettings::with_tolerance(1e-11).unwrap();
    for s in [0.5, 1.0, 2.0] {
        let v = integrate(
            |rho: f64| 2.0 * rho * radial_zeta_factor(s, rho).unwrap(),
            0.0,
            1.0,
            &settings,
        )
        .unwrap()
        .value;
        let g = zeta_mm_x_plus_1(s, ZetaForm::Gamma).unwrap();
        assert!((v - g).abs() < 1e-8, "s={s}: {v} vs {g}");
    }
}

#[test]
fn bloch_wigner_integral_identity() {
    let settings = QuadratureSettings::with_tolerance(1e-12).unwrap();
    for theta in [PI / 6.0, PI / 4.0, PI / 3.0] {
        let q = clausen_integral(theta, &settings).unwrap();
        let d = bloch_wigner(Complex64::from_polar(1.0, 2.0 * theta));
        assert!((q - d).abs() < 1e-9, "theta={theta}: {q} vs {d}");
    }
    let ctl = SeriesControl::default();
    let l4 = dirichlet_l(Character::Minus4, 2, &ctl).unwrap();
    assert!((bloch_wigner(Complex64::new(0.0, 1.0)) - l4).abs() < 1e-10);
    let l3 = dirichlet_l(Character::Minus3, 2, &ctl).unwrap();
    let w = Complex64::from_polar(1.0, PI / 3.0);
    assert!((bloch_wigner(w) - 3.0 * 3f64.sqrt() / 4.0 * l3).abs() < 1e-10);
}

#[test]
fn c_sqrt2_recombination() {
    let q = c_sqrt2_by_quadrature(&QuadratureSettings::with_tolerance(1e-12).unwrap()).unwrap();
    let c = c_sqrt2(&SeriesControl::default()).unwrap();
    assert!((q - c).abs() < 1e-8, "{q} vs {c}");
}

#[test]
fn semi_analytic_matches_closed_forms() {
    let s = QuadratureSettings::default();
    let cases = [
        ("1 + x + y", mm_smyth_areal().value),
        ("sqrt(2) + x + y", mm_sqrt2_areal(&SeriesControl::default()).unwrap().value),
        ("y + (1 - x)/(1 + x)", mm_moebius_areal().value),
    ];
    for (text, want) in cases {
        let v = semi_analytic_mm(&e(text), "y", &s).unwrap();
        assert!((v - want).abs() < 1e-6, "{text}: {v} vs {want}");
    }
    // y + x is m_D(x + y)
    let v = semi_analytic_mm(&e("y + x"), "y", &s).unwrap();
    assert!((v + 0.25).abs() < 1e-8);
}
