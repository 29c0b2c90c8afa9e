//! Radius equations and their certified roots.
//!
//! Each theorem's radius is the unique zero in `(0, 1)` of an explicit
//! function `Q(r)` with `Q(0) < 0`. [`q_value`] encloses `Q(r)`;
//! [`solve_radius`] bisects on `[δ, 1 - δ]`, accepting a midpoint only when
//! the enclosure of `Q` there excludes zero.

use std::collections::HashMap;
use std::fmt;

use crate::classes::{
    g_denominator, g_lattice_sum, positive_sum, rpow, w_denominator, w_power_sum,
    distance_constant_g, distance_constant_w, ClassParams,
};
use crate::error::{Error, Result};
use crate::series::{Enclosure, TermRule};

/// Distance of the search interval from the ends of `(0, 1)`.
pub const ENDPOINT_DELTA: f64 = 1e-6;

/// Smallest tolerance requested from the series evaluator.
pub const EPS_MIN: f64 = 1e-15;

/// Tolerances tried in turn until an enclosure of `Q` excludes zero.
const EPS_SCHEDULE: [f64; 7] = [1e-3, 1e-5, 1e-7, 1e-9, 1e-11, 1e-13, EPS_MIN];

/// One radius equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RadiusProblem {
    /// `|f| + |z| + sum (|a_n| + |b_n|) |z|^n <= d` on `TildeG0H(beta)`.
    T31 { beta: f64 },
    /// Majorant plus area on `TildeG0H(beta)`.
    T32 { beta: f64 },
    T33 { alpha: f64 },
    T34 { alpha: f64 },
    T35 { k: u32, alpha: f64 },
    T36 { k: u32, alpha: f64 },
    /// `2 (1 + r) r^N - (1 - r)^2 = 0`, for bounded analytic functions.
    TA { n: u32 },
}

impl RadiusProblem {
    /// The harmonic class the theorem is stated for; `None` for `TA`.
    pub fn class(&self) -> Option<ClassParams> {
        match *self {
            RadiusProblem::T31 { beta } | RadiusProblem::T32 { beta } => {
                Some(ClassParams::TildeG0H { beta })
            }
            RadiusProblem::T33 { alpha } | RadiusProblem::T34 { alpha } => {
                Some(ClassParams::W0H { alpha })
            }
            RadiusProblem::T35 { k, alpha } | RadiusProblem::T36 { k, alpha } => {
                Some(ClassParams::GkH { k, alpha })
            }
            RadiusProblem::TA { .. } => None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            RadiusProblem::TA { n } if *n < 1 => {
                Err(Error::OutOfRange(format!("N must be >= 1, got {n}")))
            }
            RadiusProblem::TA { .. } => Ok(()),
            other => other.class().expect("harmonic theorem").validate(),
        }
    }

    /// Lower-case tag used on the command line (`t31`, ..., `ta`).
    pub fn tag(&self) -> &'static str {
        match self {
            RadiusProblem::T31 { .. } => "t31",
            RadiusProblem::T32 { .. } => "t32",
            RadiusProblem::T33 { .. } => "t33",
            RadiusProblem::T34 { .. } => "t34",
            RadiusProblem::T35 { .. } => "t35",
            RadiusProblem::T36 { .. } => "t36",
            RadiusProblem::TA { .. } => "ta",
        }
    }

    /// Whether the left-hand side carries `|f(z)|` (otherwise the area term).
    pub fn uses_modulus(&self) -> bool {
        matches!(
            self,
            RadiusProblem::T31 { .. } | RadiusProblem::T33 { .. } | RadiusProblem::T35 { .. }
        )
    }
}

impl fmt::Display for RadiusProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RadiusProblem::T31 { beta } | RadiusProblem::T32 { beta } => {
                write!(f, "{}(beta={beta})", self.tag())
            }
            RadiusProblem::T33 { alpha } | RadiusProblem::T34 { alpha } => {
                write!(f, "{}(alpha={alpha})", self.tag())
            }
            RadiusProblem::T35 { k, alpha } | RadiusProblem::T36 { k, alpha } => {
                write!(f, "{}(k={k}, alpha={alpha})", self.tag())
            }
            RadiusProblem::TA { n } => write!(f, "ta(N={n})"),
        }
    }
}

/// A certified root: `Q` is negative at `r - half_width` and positive at
/// `r + half_width`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootResult {
    pub r: f64,
    pub half_width: f64,
    /// Enclosure of `Q` at the left end of the bracket, entirely below zero.
    pub q_lo: Enclosure,
    /// Enclosure of `Q` at the right end, entirely above zero.
    pub q_hi: Enclosure,
    pub iterations: u32,
}

impl RootResult {
    pub fn bracket(&self) -> (f64, f64) {
        (self.r - self.half_width, self.r + self.half_width)
    }
}

/// Which constant term ends the first radius equation: the proof's `-beta`
/// or the `-1` printed in the theorem statement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Q1Form {
    #[default]
    Proof,
    Statement,
}

fn check_radius(r: f64) -> Result<()> {
    if (0.0..1.0).contains(&r) {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!("r must lie in [0, 1), got {r}")))
    }
}

fn check_beta(beta: f64) -> Result<()> {
    ClassParams::tilde_g0h(beta).map(|_| ())
}

/// `(2 - 4 beta) r^2 + (2 + beta) r - c` with `c = beta` (proof form) or
/// `c = 1` (statement form).
pub fn q1_value(beta: f64, r: f64, form: Q1Form) -> Result<Enclosure> {
    check_beta(beta)?;
    check_radius(r)?;
    let beta_e = Enclosure::point(beta);
    let quad = Enclosure::point(2.0) - beta_e * 4.0;
    let lin = Enclosure::point(2.0) + beta_e;
    let constant = match form {
        Q1Form::Proof => beta,
        Q1Form::Statement => 1.0,
    };
    Ok(quad * r * r + lin * r - constant)
}

/// Root in `(0, 1)` of the first radius equation, from the quadratic
/// formula in the cancellation-free form `2c / (b + sqrt(b^2 + 4ac))`.
pub fn solve_q1_closed_form_with(beta: f64, form: Q1Form) -> Result<f64> {
    check_beta(beta)?;
    let a = 2.0 - 4.0 * beta;
    let b = 2.0 + beta;
    let c = match form {
        Q1Form::Proof => beta,
        Q1Form::Statement => 1.0,
    };
    if a == 0.0 {
        return Ok(c / b);
    }
    Ok(2.0 * c / (b + (b * b + 4.0 * a * c).sqrt()))
}

/// [`solve_q1_closed_form_with`] for the proof form.
pub fn solve_q1_closed_form(beta: f64) -> Result<f64> {
    solve_q1_closed_form_with(beta, Q1Form::Proof)
}

/// `sum_{n >= 2} r^(2n) / (n (1 + (n - 1) alpha)^2)`.
fn w_area_sum(r: f64, alpha: f64, eps: f64) -> Result<Enclosure> {
    let rule = TermRule::new(2, move |n| {
        rpow(r, 2 * n) / (w_denominator(n, alpha) * g_denominator(n, alpha))
    });
    let q = r * r;
    positive_sum(rule, move |_| q, eps)
}

/// `sum_{n >= k+1} r^n / (1 + (n - 1) alpha)`.
fn g_power_sum(r: f64, k: u32, alpha: f64, eps: f64) -> Result<Enclosure> {
    let rule = TermRule::new(k as u64 + 1, move |n| rpow(r, n) / g_denominator(n, alpha));
    positive_sum(rule, move |_| r, eps)
}

/// `sum_{n >= k+1} n r^(2n) / (1 + (n - 1) alpha)^2`.
fn g_area_sum(r: f64, k: u32, alpha: f64, eps: f64) -> Result<Enclosure> {
    let rule = TermRule::new(k as u64 + 1, move |n| {
        let d = g_denominator(n, alpha);
        n as f64 * rpow(r, 2 * n) / (d * d)
    });
    let q = r * r;
    // n r^2n is not monotone in ratio; (n + 1)/n r^2 bounds it from n on.
    positive_sum(rule, move |n| q * (n as f64 + 1.0) / n as f64, eps)
}

/// Evaluates `Q(r)` given an enclosure of the problem's distance constant.
fn q_with_constant(
    problem: &RadiusProblem,
    r: f64,
    eps: f64,
    constant: Option<Enclosure>,
) -> Result<Enclosure> {
    let e = eps / 8.0;
    let re = Enclosure::point(r);
    let r2 = re * re;
    let one = Enclosure::point(1.0);
    let constant = || constant.expect("distance constant");
    Ok(match *problem {
        RadiusProblem::T31 { beta } => q1_value(beta, r, Q1Form::Proof)?,
        RadiusProblem::T32 { beta } => {
            let c = one - Enclosure::point(beta);
            let r4 = r2 * r2;
            let majorant = c * 2.0 * r2 / (one - re);
            let one_minus_r2 = one - r2;
            let area = c * c * 4.0 * (Enclosure::point(2.0) - r2) * r4
                / (one_minus_r2 * one_minus_r2);
            re + majorant + r2 + area - beta
        }
        RadiusProblem::T33 { alpha } => {
            re * 2.0 + w_power_sum(r, alpha, false, e)? * 4.0 - 1.0 - constant() * 2.0
        }
        RadiusProblem::T34 { alpha } => {
            re + r2 + w_power_sum(r, alpha, false, e)? * 2.0 + w_area_sum(r, alpha, e)? * 4.0
                - 1.0
                - constant() * 2.0
        }
        RadiusProblem::T35 { k, alpha } => {
            re * 2.0
                + g_lattice_sum(r, k, alpha, false, e)? * 2.0
                + g_power_sum(r, k, alpha, e)? * 2.0
                - 1.0
                - constant() * 2.0
        }
        RadiusProblem::T36 { k, alpha } => {
            re + g_power_sum(r, k, alpha, e)? * 2.0 + r2 + g_area_sum(r, k, alpha, e)? * 4.0
                - 1.0
                - constant() * 2.0
        }
        RadiusProblem::TA { n } => {
            let rn = Enclosure::with_rel_error(rpow(r, n as u64), rpow(r, n as u64), 128.0 * f64::EPSILON);
            let one_minus_r = one - re;
            (one + re) * rn * 2.0 - one_minus_r * one_minus_r
        }
    })
}

fn distance_constant(problem: &RadiusProblem, eps: f64) -> Result<Option<Enclosure>> {
    Ok(match *problem {
        RadiusProblem::T33 { alpha } | RadiusProblem::T34 { alpha } => {
            Some(distance_constant_w(alpha, eps)?)
        }
        RadiusProblem::T35 { k, alpha } | RadiusProblem::T36 { k, alpha } => {
            Some(distance_constant_g(k, alpha, eps)?)
        }
        _ => None,
    })
}

/// Encloses `Q(r)` for the given problem. The enclosure width is of the
/// order of `eps` plus rounding, except very close to `r = 1` where the
/// series need more than the term budget and the enclosure is wider.
pub fn q_value(problem: &RadiusProblem, r: f64, eps: f64) -> Result<Enclosure> {
    problem.validate()?;
    check_radius(r)?;
    if !(eps > 0.0) {
        return Err(Error::OutOfRange(format!("eps must be positive, got {eps}")));
    }
    let constant = distance_constant(problem, eps / 8.0)?;
    q_with_constant(problem, r, eps, constant)
}

/// Evaluates `Q` with shrinking tolerances until its sign is certified.
struct SignOracle<'a> {
    problem: &'a RadiusProblem,
    constants: HashMap<u64, Option<Enclosure>>,
}

impl<'a> SignOracle<'a> {
    fn new(problem: &'a RadiusProblem) -> Self {
        Self {
            problem,
            constants: HashMap::new(),
        }
    }

    /// Returns the last enclosure computed; its sign is certified iff it
    /// excludes zero.
    fn certify(&mut self, r: f64) -> Result<Enclosure> {
        let mut last = None;
        for eps in EPS_SCHEDULE {
            let constant = match self.constants.get(&eps.to_bits()) {
                Some(c) => *c,
                None => {
                    let c = distance_constant(self.problem, eps / 8.0)?;
                    self.constants.insert(eps.to_bits(), c);
                    c
                }
            };
            let q = q_with_constant(self.problem, r, eps, constant)?;
            if q.excludes_zero() {
                return Ok(q);
            }
            last = Some(q);
        }
        Ok(last.expect("non-empty schedule"))
    }
}

/// Bisection for the unique root of `Q` in `(0, 1)`, stopping once the
/// bracket half-width is at most `tol`.
pub fn solve_radius(problem: &RadiusProblem, tol: f64) -> Result<RootResult> {
    problem.validate()?;
    if !(tol > 0.0) {
        return Err(Error::OutOfRange(format!("tol must be positive, got {tol}")));
    }
    let mut oracle = SignOracle::new(problem);
    let mut lo = ENDPOINT_DELTA;
    let mut hi = 1.0 - ENDPOINT_DELTA;
    let mut q_lo = oracle.certify(lo)?;
    let mut q_hi = oracle.certify(hi)?;
    if !q_lo.is_negative() || !q_hi.is_positive() {
        return Err(Error::NoBracket {
            left_lo: q_lo.lo(),
            left_hi: q_lo.hi(),
            right_lo: q_hi.lo(),
            right_hi: q_hi.hi(),
        });
    }
    let mut iterations = 0;
    while 0.5 * (hi - lo) > tol {
        let mid = lo + 0.5 * (hi - lo);
        if mid <= lo || mid >= hi {
            break;
        }
        let q = oracle.certify(mid)?;
        iterations += 1;
        if q.is_negative() {
            lo = mid;
            q_lo = q;
        } else if q.is_positive() {
            hi = mid;
            q_hi = q;
        } else {
            return Err(Error::SignAmbiguous {
                r: mid,
                half_width: 0.5 * (hi - lo),
            });
        }
    }
    Ok(RootResult {
        r: lo + 0.5 * (hi - lo),
        half_width: 0.5 * (hi - lo),
        q_lo,
        q_hi,
        iterations,
    })
}
