//! Left-hand-side functionals of the Bohr-type inequalities, evaluated on
//! concrete truncated models, and the checks built on them.
//!
//! The right-hand side `d(f(0), ∂f(D))` cannot be computed from a truncated
//! model, so checks compare against the class-wide lower bound from
//! [`boundary_distance_lower`]. That is the quantity the radius equations
//! are built from, and it is attained by the extremal functions.
//!
//! The sampler only enforces the necessary coefficient bounds of a class, so
//! a fuzz campaign is a necessary-condition fuzz: it exercises the proof's
//! coefficient and growth estimates, not full class membership.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::classes::{
    boundary_distance_lower, coeff_bound_sum, extremal_model, ClassParams, HarmonicModel,
};
use crate::error::{Error, Result};
use crate::radii::{solve_radius, RadiusProblem};
use crate::series::{gamma, UNIT_ROUNDOFF};

/// Angular grid used for `sup |f|` in theorem checks.
pub const MODULUS_GRID: usize = 720;

/// Margins within this band of zero are reported as inconclusive.
pub const INCONCLUSIVE_BAND: f64 = 1e-9;

/// Tolerance used when enclosing the distance constants for checks.
const RHS_EPS: f64 = 1e-13;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Holds,
    Fails,
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::Inconclusive => "inconclusive",
        };
        f.write_str(s)
    }
}

/// Outcome of a check. `margin` is `RHS - LHS`.
#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub status: Status,
    pub margin: f64,
    pub at_r: f64,
    pub details: String,
}

fn check_radius(r: f64) -> Result<()> {
    if (0.0..1.0).contains(&r) {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!("r must lie in [0, 1), got {r}")))
    }
}

/// `r + sum_{n >= from_index} (|a_n| + |b_n|) r^n` over the model's
/// truncation.
pub fn bohr_sum(model: &HarmonicModel, r: f64, from_index: usize) -> Result<f64> {
    check_radius(r)?;
    if from_index < 2 {
        return Err(Error::OutOfRange(format!(
            "from_index must be >= 2, got {from_index}"
        )));
    }
    let mut power = r.powi(from_index as i32);
    let mut sum = 0.0;
    for n in from_index..=model.truncation() {
        sum += (model.a(n).norm() + model.b(n).norm()) * power;
        power *= r;
    }
    Ok(r + sum)
}

/// `max |f(r e^{iθ})|` over `grid` equally spaced angles starting at 0.
///
/// For nonnegative real analytic coefficients and `g = 0` the maximum is
/// attained at `θ = 0`, which is always on the grid. Terms are dropped once
/// the coefficient tail falls below `1e-18 r`.
pub fn modulus_sup(model: &HarmonicModel, r: f64, grid: usize) -> f64 {
    let grid = grid.max(8);
    let cutoff = effective_truncation(model, r);
    let a: Vec<Complex64> = (0..=cutoff).map(|n| model.a(n)).collect();
    let b: Vec<Complex64> = (0..=cutoff).map(|n| model.b(n)).collect();
    let horner = |c: &[Complex64], z: Complex64| c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &x| acc * z + x);
    (0..grid)
        .map(|j| {
            let theta = 2.0 * PI * j as f64 / grid as f64;
            let z = Complex64::from_polar(r, theta);
            (horner(&a, z) + horner(&b, z).conj()).norm()
        })
        .fold(0.0, f64::max)
}

/// Smallest `N` such that `max_n (|a_n| + |b_n|) r^(N+1) / (1 - r) < 1e-18 r`.
fn effective_truncation(model: &HarmonicModel, r: f64) -> usize {
    let full = model.truncation();
    let largest = (2..=full)
        .map(|n| model.a(n).norm() + model.b(n).norm())
        .fold(0.0, f64::max);
    if largest == 0.0 || r == 0.0 {
        return full.min(1);
    }
    let mut power = r.powi(2);
    for n in 2..full {
        if largest * power * r / (1.0 - r) < 1e-18 * r {
            return n;
        }
        power *= r;
    }
    full
}

/// `S_r / π = r^2 + sum n (|a_n|^2 - |b_n|^2) r^(2n)`, the normalized area
/// of the image of `|z| < r` counted with the sign of the Jacobian.
pub fn area_ratio(model: &HarmonicModel, r: f64) -> Result<f64> {
    check_radius(r)?;
    let r2 = r * r;
    let mut power = r2 * r2;
    let mut sum = 0.0;
    for n in 2..=model.truncation() {
        sum += n as f64 * (model.a(n).norm_sqr() - model.b(n).norm_sqr()) * power;
        power *= r2;
    }
    Ok(r2 + sum)
}

/// Left-hand side of a harmonic theorem: `sup|f| + majorant` for the odd
/// theorems, `majorant + S_r/π` for the even ones.
pub fn theorem_lhs(model: &HarmonicModel, theorem: &RadiusProblem, r: f64) -> Result<f64> {
    let class = theorem.class().ok_or_else(|| Error::MismatchedVariant {
        theorem: theorem.to_string(),
        class: "none".into(),
    })?;
    let majorant = bohr_sum(model, r, class.first_free_index())?;
    if theorem.uses_modulus() {
        Ok(modulus_sup(model, r, MODULUS_GRID) + majorant)
    } else {
        Ok(majorant + area_ratio(model, r)?)
    }
}

/// Compares a theorem's left-hand side on `model` at radius `r` with the
/// class lower bound on the boundary distance.
pub fn check_theorem(
    model: &HarmonicModel,
    class: &ClassParams,
    theorem: &RadiusProblem,
    r: f64,
    tol: f64,
) -> Result<Verdict> {
    class.validate()?;
    if theorem.class() != Some(*class) {
        return Err(Error::MismatchedVariant {
            theorem: theorem.to_string(),
            class: class.to_string(),
        });
    }
    let lhs = theorem_lhs(model, theorem, r)?;
    let rhs = boundary_distance_lower(class, RHS_EPS)?;
    // Summation error of the left-hand side.
    let lhs_err = (gamma(2 * model.truncation() as u64 + 8) + 64.0 * UNIT_ROUNDOFF) * lhs.abs();
    let margin = rhs.mid() - lhs;
    let best = rhs.hi() - (lhs - lhs_err);
    let worst = rhs.lo() - (lhs + lhs_err);
    let status = if worst >= -tol {
        Status::Holds
    } else if best < -tol {
        Status::Fails
    } else {
        Status::Inconclusive
    };
    Ok(Verdict {
        status,
        margin,
        at_r: r,
        details: format!("{theorem}: lhs = {lhs:.17e}, rhs in [{:.17e}, {:.17e}]", rhs.lo(), rhs.hi()),
    })
}

/// Details of a sharpness evaluation at the computed radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SharpnessReport {
    pub r: f64,
    pub lhs: f64,
    pub rhs: f64,
    /// `lhs - rhs`.
    pub gap: f64,
    pub truncation: usize,
}

/// Smallest truncation whose geometric tail at `r` is below `0.1 tol`.
fn sharpness_truncation(class: &ClassParams, r: f64, tol: f64) -> usize {
    let mut n = class.first_free_index().max(2);
    // Coefficients are at most 2 and the LHS counts them at most twice.
    while 4.0 * r.powi(n as i32 + 1) / (1.0 - r) > 0.1 * tol && n < 1_000_000 {
        n += 1;
    }
    n
}

/// Solves the radius, evaluates the theorem's left-hand side on the
/// class's extremal function there and reports the gap to the distance
/// bound.
pub fn sharpness_report(theorem: &RadiusProblem, tol: f64) -> Result<SharpnessReport> {
    theorem.validate()?;
    let class = theorem.class().ok_or_else(|| Error::MismatchedVariant {
        theorem: theorem.to_string(),
        class: "none".into(),
    })?;
    if !(tol > 0.0) {
        return Err(Error::OutOfRange(format!("tol must be positive, got {tol}")));
    }
    // The gap moves by about Q'(r) times the root error.
    let root = solve_radius(theorem, (tol * 1e-2).max(1e-11))?;
    let truncation = sharpness_truncation(&class, root.r, tol);
    let model = extremal_model(&class, truncation)?;
    let lhs = theorem_lhs(&model, theorem, root.r)?;
    let rhs = boundary_distance_lower(&class, (tol * 1e-3).max(RHS_EPS))?.mid();
    Ok(SharpnessReport {
        r: root.r,
        lhs,
        rhs,
        gap: lhs - rhs,
        truncation,
    })
}

/// `LHS - RHS` for the extremal function at the computed radius.
pub fn sharpness_gap(theorem: &RadiusProblem, tol: f64) -> Result<f64> {
    sharpness_report(theorem, tol).map(|rep| rep.gap)
}

/// A random model whose coefficients satisfy `|a_n| + |b_n| <= bound_n`
/// for every `n`. Deterministic in `seed`.
///
/// Magnitudes are skewed towards the bound; phases are uniform.
pub fn sample_admissible_model(
    class: &ClassParams,
    seed: u64,
    truncation: usize,
) -> Result<HarmonicModel> {
    class.validate()?;
    if truncation < 2 {
        return Err(Error::OutOfRange(format!(
            "truncation must be >= 2, got {truncation}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut a = Vec::with_capacity(truncation - 1);
    let mut b = Vec::with_capacity(truncation - 1);
    for n in 2..=truncation {
        let bound = coeff_bound_sum(class, n)?;
        let u: f64 = rng.random();
        let total = bound * (1.0 - 1e-12) * u.powf(0.25);
        let split: f64 = rng.random();
        let phase_a: f64 = rng.random::<f64>() * 2.0 * PI;
        let phase_b: f64 = rng.random::<f64>() * 2.0 * PI;
        a.push(Complex64::from_polar(total * split, phase_a));
        b.push(Complex64::from_polar(total * (1.0 - split), phase_b));
    }
    HarmonicModel::from_tails(&a, &b)
}

/// Number of indices where `model` exceeds the class's coefficient bounds
/// (`|a_n| + |b_n|`) or the area bound (`|a_n|^2 - |b_n|^2 <= bound_n^2`).
pub fn dominance_violations(model: &HarmonicModel, class: &ClassParams) -> Result<usize> {
    let mut count = 0;
    for n in 2..=model.truncation() {
        let bound = coeff_bound_sum(class, n)?;
        let (a, b) = (model.a(n).norm(), model.b(n).norm());
        let slack = 4.0 * f64::EPSILON * bound;
        if a + b > bound + slack || a * a - b * b > bound * bound + 2.0 * bound * slack {
            count += 1;
        }
    }
    Ok(count)
}

/// `n` radii spaced evenly on `(0, max_radius]`.
pub fn uniform_radii(n: usize, max_radius: f64) -> Vec<f64> {
    (1..=n).map(|i| max_radius * i as f64 / n as f64).collect()
}

/// Evaluates the class's defining inequality at `radii × angular` grid
/// points. `Holds` means "not falsified on the grid"; `Fails` carries the
/// worst point as witness. The margin is `min(Re(..) - |..|)`.
pub fn membership_spot_check(
    model: &HarmonicModel,
    class: &ClassParams,
    radii: &[f64],
    angular: usize,
) -> Result<Verdict> {
    class.validate()?;
    if radii.len() < 4 || angular < 4 {
        return Err(Error::OutOfRange(format!(
            "grids need at least 4 points each, got {} radii and {angular} angles",
            radii.len()
        )));
    }
    if let Some(r) = radii.iter().find(|&&r| !(r > 0.0 && r <= 0.999)) {
        return Err(Error::OutOfRange(format!(
            "spot-check radii must lie in (0, 0.999], got {r}"
        )));
    }
    let mut worst = (f64::INFINITY, 0.0, 0.0);
    for &r in radii {
        for j in 0..angular {
            let theta = 2.0 * PI * j as f64 / angular as f64;
            let z = Complex64::from_polar(r, theta);
            let (left, right) = match *class {
                ClassParams::TildeG0H { beta } => {
                    (model.h_over_z(z).re - beta, model.g_over_z(z).norm())
                }
                ClassParams::W0H { alpha } => (
                    (model.h_prime(z) + alpha * z * model.h_second(z)).re,
                    (model.g_prime(z) + alpha * z * model.g_second(z)).norm(),
                ),
                ClassParams::GkH { alpha, .. } => (
                    ((1.0 - alpha) * model.h_over_z(z) + alpha * model.h_prime(z)).re,
                    ((1.0 - alpha) * model.g_over_z(z) + alpha * model.g_prime(z)).norm(),
                ),
            };
            let margin = left - right;
            if margin < worst.0 {
                worst = (margin, r, theta);
            }
        }
    }
    let (margin, at_r, theta) = worst;
    let status = if margin > 0.0 { Status::Holds } else { Status::Fails };
    let normalized = model.satisfies_normalization(class);
    let status = if normalized { status } else { Status::Fails };
    Ok(Verdict {
        status,
        margin,
        at_r,
        details: if normalized {
            format!("{class}: worst point r = {at_r}, theta = {theta}")
        } else {
            format!("{class}: coefficients below index {} must vanish", class.first_free_index())
        },
    })
}

/// `sum |a_n| r^n + (16/9) sum_{n >= 1} n |a_n|^2 r^(2n)` for an analytic
/// function with coefficients `a_0, a_1, ...`.
pub fn theorem_b_functional(coeffs: &[Complex64], r: f64) -> Result<f64> {
    check_radius(r)?;
    let mut power = 1.0;
    let mut majorant = 0.0;
    let mut area = 0.0;
    for (n, c) in coeffs.iter().enumerate() {
        majorant += c.norm() * power;
        area += n as f64 * c.norm_sqr() * power * power;
        power *= r;
    }
    Ok(majorant + 16.0 / 9.0 * area)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FuzzOptions {
    pub samples: usize,
    pub seed: u64,
    pub truncation: usize,
    pub tol: f64,
    /// Discard samples that fail [`membership_spot_check`] before checking.
    pub membership_filter: bool,
}

impl Default for FuzzOptions {
    fn default() -> Self {
        Self {
            samples: 1000,
            seed: 0,
            truncation: 2000,
            tol: INCONCLUSIVE_BAND,
            membership_filter: false,
        }
    }
}

/// Aggregate of a fuzz campaign over consecutive seeds.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzSummary {
    pub theorem: RadiusProblem,
    pub radius: f64,
    pub r_check: f64,
    pub samples: usize,
    pub holds: usize,
    pub fails: usize,
    pub inconclusive: usize,
    pub filtered: usize,
    /// Samples exceeding a termwise coefficient or area bound.
    pub dominance_violations: usize,
    pub worst_margin: f64,
    pub worst_seed: u64,
    /// Seed and verdict of the first failing sample.
    pub witness: Option<(u64, Verdict)>,
}

enum SampleOutcome {
    Filtered,
    Checked {
        seed: u64,
        verdict: Verdict,
        dominated: bool,
    },
}

/// Samples `options.samples` admissible models for the theorem's class and
/// checks the theorem at `r = 0.9 r_i`.
pub fn fuzz_theorem(theorem: &RadiusProblem, options: &FuzzOptions) -> Result<FuzzSummary> {
    theorem.validate()?;
    let class = theorem.class().ok_or_else(|| Error::MismatchedVariant {
        theorem: theorem.to_string(),
        class: "none".into(),
    })?;
    let root = solve_radius(theorem, 1e-12)?;
    let r_check = 0.9 * root.r;
    let spot_radii = uniform_radii(8, 0.95);
    let outcomes = (0..options.samples as u64)
        .into_par_iter()
        .map(|i| {
            let seed = options.seed.wrapping_add(i);
            let model = sample_admissible_model(&class, seed, options.truncation)?;
            if options.membership_filter {
                let spot = membership_spot_check(&model, &class, &spot_radii, 32)?;
                if spot.status != Status::Holds {
                    return Ok(SampleOutcome::Filtered);
                }
            }
            let verdict = check_theorem(&model, &class, theorem, r_check, options.tol)?;
            let dominated = dominance_violations(&model, &class)? == 0;
            Ok(SampleOutcome::Checked {
                seed,
                verdict,
                dominated,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut summary = FuzzSummary {
        theorem: *theorem,
        radius: root.r,
        r_check,
        samples: options.samples,
        holds: 0,
        fails: 0,
        inconclusive: 0,
        filtered: 0,
        dominance_violations: 0,
        worst_margin: f64::INFINITY,
        worst_seed: options.seed,
        witness: None,
    };
    for outcome in outcomes {
        match outcome {
            SampleOutcome::Filtered => summary.filtered += 1,
            SampleOutcome::Checked {
                seed,
                verdict,
                dominated,
            } => {
                if !dominated {
                    summary.dominance_violations += 1;
                }
                if verdict.margin < summary.worst_margin {
                    summary.worst_margin = verdict.margin;
                    summary.worst_seed = seed;
                }
                match verdict.status {
                    Status::Holds => summary.holds += 1,
                    Status::Inconclusive => summary.inconclusive += 1,
                    Status::Fails => {
                        summary.fails += 1;
                        if summary.witness.is_none() {
                            summary.witness = Some((seed, verdict));
                        }
                    }
                }
            }
        }
    }
    Ok(summary)
}
