//! Comparisons against values computed independently: frozen 40-digit
//! references, closed forms evaluated separately from the series code, and
//! a 2-D quadrature of the Jacobian for the area functional.

mod common;

use std::f64::consts::{LN_2, PI};

use bohr_lab::classes::{boundary_distance_lower, distance_constant_g, distance_constant_w, growth_envelope};
use bohr_lab::verify::area_ratio;
use bohr_lab::{q_value, solve_q1_closed_form, solve_radius, ClassParams, HarmonicModel, RadiusProblem};
use common::{area_by_quadrature, gauss_legendre};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// References computed with 40-digit arithmetic (mpmath findroot / nsum).
const R3_ALPHA0: f64 = 0.163204898490457857;
const Q3_ALPHA0_AT_03: f64 = 0.440405414635038897;
const R1_BETA025: f64 = 0.106107225224513090;
const R2_BETA05: f64 = 0.286875639212950261;
const R4_ALPHA0: f64 = 0.245743908604459552;
const R5_K1_ALPHA2: f64 = 0.240212782767180965;
const CW_HALF: f64 = -0.227411277760218762;
const CG_K2_ALPHA1: f64 = -0.214601836602551690;
const W_UPPER_AT_03: f64 = 0.413349887877464896;
const TA: [f64; 8] = [
    0.236067977499789696,
    0.376085889442093272,
    0.462351139268310856,
    0.522871054294409741,
    0.568466402686219559,
    0.604432929418963392,
    0.633738413791496537,
    0.658201755402085482,
];

fn root(problem: RadiusProblem) -> f64 {
    solve_radius(&problem, 1e-12).unwrap().r
}

#[test]
fn frozen_roots() {
    let cases = [
        (RadiusProblem::T33 { alpha: 0.0 }, R3_ALPHA0),
        (RadiusProblem::T31 { beta: 0.25 }, R1_BETA025),
        (RadiusProblem::T32 { beta: 0.5 }, R2_BETA05),
        (RadiusProblem::T34 { alpha: 0.0 }, R4_ALPHA0),
        (RadiusProblem::T35 { k: 1, alpha: 2.0 }, R5_K1_ALPHA2),
        (RadiusProblem::T35 { k: 1, alpha: 1.0 }, R3_ALPHA0),
        (RadiusProblem::T36 { k: 1, alpha: 1.0 }, R4_ALPHA0),
    ];
    for (problem, expected) in cases {
        let r = root(problem);
        assert!((r - expected).abs() < 1e-11, "{problem}: {r} vs {expected}");
    }
    for (i, &expected) in TA.iter().enumerate() {
        let r = root(RadiusProblem::TA { n: i as u32 + 1 });
        assert!((r - expected).abs() < 1e-11, "N = {}: {r}", i + 1);
    }
    assert!((solve_q1_closed_form(0.25).unwrap() - R1_BETA025).abs() < 1e-15);
}

#[test]
fn frozen_constants() {
    let w = distance_constant_w(0.5, 1e-12).unwrap();
    assert!(w.contains(CW_HALF) && w.width() <= 1e-12, "{w:?}");
    let g = distance_constant_g(2, 1.0, 1e-12).unwrap();
    assert!(g.contains(CG_K2_ALPHA1) && g.width() <= 1e-12, "{g:?}");
    let g = distance_constant_g(1, 2.0, 1e-12).unwrap();
    assert!(g.contains(PI / 4.0 - 1.0), "{g:?}");
    for class in [ClassParams::W0H { alpha: 0.0 }, ClassParams::GkH { k: 1, alpha: 1.0 }] {
        let d = boundary_distance_lower(&class, 1e-11).unwrap();
        assert!(d.contains(2.0 * LN_2 - 1.0), "{class}: {d:?}");
    }
}

#[test]
fn q3_at_alpha_zero_matches_logarithmic_form() {
    let closed = |r: f64| -4.0 * (-r).ln_1p() - 2.0 * r + 1.0 - 2.0 * LN_2;
    let q = q_value(&RadiusProblem::T33 { alpha: 0.0 }, 0.3, 1e-13).unwrap();
    assert!(q.inflate(1e-15).contains(Q3_ALPHA0_AT_03), "{q:?}");
    assert!((closed(0.3) - Q3_ALPHA0_AT_03).abs() < 1e-15);
    for i in 1..100 {
        let r = 0.0099 * i as f64;
        let q = q_value(&RadiusProblem::T33 { alpha: 0.0 }, r, 1e-12).unwrap();
        let c = closed(r);
        assert!(q.inflate(16.0 * f64::EPSILON * (1.0 + c.abs())).contains(c), "r = {r}");
    }
}

#[test]
fn w_growth_at_alpha_zero() {
    for i in 1..100 {
        let r = 0.0099 * i as f64;
        let (lo, hi) = growth_envelope(&ClassParams::W0H { alpha: 0.0 }, r, 1e-12).unwrap();
        let upper = -2.0 * (-r).ln_1p() - r;
        let lower = 2.0 * r.ln_1p() - r;
        let slack = 16.0 * f64::EPSILON;
        assert!(hi.inflate(slack * upper).contains(upper), "r = {r}");
        assert!(lo.inflate(slack).contains(lower), "r = {r}");
    }
    let (_, hi) = growth_envelope(&ClassParams::W0H { alpha: 0.0 }, 0.3, 1e-12).unwrap();
    assert!(hi.inflate(16.0 * f64::EPSILON).contains(W_UPPER_AT_03), "{hi:?}");
}

#[test]
fn gauss_legendre_is_exact_for_polynomials() {
    let nodes = gauss_legendre(10);
    let integral: f64 = nodes.iter().map(|&(x, w)| w * x.powi(18)).sum();
    assert!((integral - 2.0 / 19.0).abs() < 1e-14);
    assert!((nodes.iter().map(|&(_, w)| w).sum::<f64>() - 2.0).abs() < 1e-14);
}

#[test]
fn area_matches_quadrature() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..5 {
        let n = rng.random_range(2..=6usize);
        let mut coeff = || Complex64::new(rng.random_range(-0.5..0.5), rng.random_range(-0.5..0.5));
        let a: Vec<_> = (2..=n).map(|_| coeff()).collect();
        let b: Vec<_> = (2..=n).map(|_| coeff()).collect();
        let model = HarmonicModel::from_tails(&a, &b).unwrap();
        for r in [0.3, 0.6] {
            let exact = area_ratio(&model, r).unwrap();
            let quad = area_by_quadrature(&model, r);
            assert!((exact - quad).abs() < 1e-6, "r = {r}: {exact} vs {quad}");
        }
    }
}
