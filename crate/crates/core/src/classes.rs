//! The three harmonic classes as data: sharp coefficient bounds, extremal
//! functions, growth envelopes and class-wide lower bounds on the distance
//! from `f(0)` to the boundary of `f(D)`.
//!
//! Class membership itself is never decided here. A [`HarmonicModel`] is a
//! truncated coefficient representation `f = h + conj(g)` with
//! `h(z) = z + sum a_n z^n` and `g(z) = sum b_n z^n`, `n >= 2`.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::series::{eval_alternating, sum_series, Enclosure, TermRule, TERM_CAP, UNIT_ROUNDOFF};

/// Relative error allowed for one evaluation of `r^e / d` with `powi`.
pub(crate) const POWER_TERM_ERR: f64 = 128.0 * UNIT_ROUNDOFF;

/// Relative error of `1 / d` when `d` takes a handful of operations.
const RECIPROCAL_TERM_ERR: f64 = 8.0 * UNIT_ROUNDOFF;

fn term_error(r: f64) -> f64 {
    if r == 1.0 {
        RECIPROCAL_TERM_ERR
    } else {
        POWER_TERM_ERR
    }
}

/// Sums a positive series with ratio bound `q`, accepting the (valid but
/// wider) enclosure reached at [`TERM_CAP`] when `r` is close to one.
pub(crate) fn positive_sum<T, Q>(rule: TermRule<T>, ratio_bound: Q, eps: f64) -> Result<Enclosure>
where
    T: Fn(u64) -> f64,
    Q: Fn(u64) -> f64,
{
    let rule = rule.with_term_error(POWER_TERM_ERR).with_ratio_bound(ratio_bound);
    Ok(sum_series(&rule, eps, TERM_CAP)?.enclosure)
}

pub(crate) fn rpow(r: f64, e: u64) -> f64 {
    if e <= i32::MAX as u64 {
        r.powi(e as i32)
    } else {
        r.powf(e as f64)
    }
}

/// `alpha n^2 + n (1 - alpha) = n (1 + (n - 1) alpha)`.
pub(crate) fn w_denominator(n: u64, alpha: f64) -> f64 {
    let n = n as f64;
    n * (1.0 + (n - 1.0) * alpha)
}

/// `1 + (n - 1) alpha`.
pub(crate) fn g_denominator(n: u64, alpha: f64) -> f64 {
    1.0 + (n as f64 - 1.0) * alpha
}

fn alternating_sign(even_positive: bool, n: u64) -> f64 {
    if (n % 2 == 0) == even_positive {
        1.0
    } else {
        -1.0
    }
}

/// One of the three harmonic classes with its parameters.
///
/// * `TildeG0H`: `Re(h/z - beta) > |g/z|`, `0 < beta < 1`.
/// * `W0H`: `Re(h' + alpha z h'') > |g' + alpha z g''|`, `0 <= alpha < 1`.
/// * `GkH`: `Re((1 - alpha) h/z + alpha h') > |(1 - alpha) g/z + alpha g'|`
///   on functions with `h''(0) = ... = h^(k)(0) = g^(k)(0) = 0`,
///   `k >= 1`, `alpha >= 1/k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ClassParams {
    TildeG0H { beta: f64 },
    W0H { alpha: f64 },
    GkH { k: u32, alpha: f64 },
}

impl ClassParams {
    pub fn tilde_g0h(beta: f64) -> Result<Self> {
        let class = ClassParams::TildeG0H { beta };
        class.validate()?;
        Ok(class)
    }

    pub fn w0h(alpha: f64) -> Result<Self> {
        let class = ClassParams::W0H { alpha };
        class.validate()?;
        Ok(class)
    }

    pub fn gkh(k: u32, alpha: f64) -> Result<Self> {
        let class = ClassParams::GkH { k, alpha };
        class.validate()?;
        Ok(class)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            ClassParams::TildeG0H { beta } => {
                if !(beta > 0.0 && beta < 1.0) {
                    return Err(Error::OutOfRange(format!(
                        "beta must lie in (0, 1), got {beta}"
                    )));
                }
            }
            ClassParams::W0H { alpha } => {
                if !(0.0..1.0).contains(&alpha) {
                    return Err(Error::OutOfRange(format!(
                        "alpha must lie in [0, 1), got {alpha}"
                    )));
                }
            }
            ClassParams::GkH { k, alpha } => {
                if k < 1 {
                    return Err(Error::OutOfRange(format!("k must be >= 1, got {k}")));
                }
                if !(alpha.is_finite() && alpha * k as f64 >= 1.0) {
                    return Err(Error::OutOfRange(format!(
                        "alpha must satisfy alpha >= 1/k = {}, got {alpha}",
                        1.0 / k as f64
                    )));
                }
            }
        }
        Ok(())
    }

    /// First index that may carry a nonzero coefficient.
    pub fn first_free_index(&self) -> usize {
        match *self {
            ClassParams::GkH { k, .. } => k as usize + 1,
            _ => 2,
        }
    }
}

impl fmt::Display for ClassParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassParams::TildeG0H { beta } => write!(f, "TildeG0H(beta={beta})"),
            ClassParams::W0H { alpha } => write!(f, "W0H(alpha={alpha})"),
            ClassParams::GkH { k, alpha } => write!(f, "GkH(k={k}, alpha={alpha})"),
        }
    }
}

/// Truncated coefficients of `f = h + conj(g)` normalized by
/// `h(0) = g(0) = 0`, `h'(0) = 1`, `g'(0) = 0`.
///
/// Coefficients are stored by index: `a[n]` is the coefficient of `z^n`.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicModel {
    a: Vec<Complex64>,
    b: Vec<Complex64>,
}

impl HarmonicModel {
    /// `f(z) = z`.
    pub fn identity() -> Self {
        Self {
            a: vec![Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
            b: vec![Complex64::new(0.0, 0.0); 2],
        }
    }

    /// Builds a model from the coefficients `a_2, a_3, ...` and
    /// `b_2, b_3, ...`; the shorter sequence is padded with zeros.
    pub fn from_tails(analytic: &[Complex64], co_analytic: &[Complex64]) -> Result<Self> {
        if analytic
            .iter()
            .chain(co_analytic)
            .any(|c| !c.re.is_finite() || !c.im.is_finite())
        {
            return Err(Error::OutOfRange("coefficients must be finite".into()));
        }
        let len = 2 + analytic.len().max(co_analytic.len());
        let mut model = Self::identity();
        model.a.resize(len, Complex64::new(0.0, 0.0));
        model.b.resize(len, Complex64::new(0.0, 0.0));
        model.a[2..2 + analytic.len()].copy_from_slice(analytic);
        model.b[2..2 + co_analytic.len()].copy_from_slice(co_analytic);
        Ok(model)
    }

    /// Convenience constructor for real analytic coefficients and `g = 0`.
    pub fn from_real_tail(analytic: &[f64]) -> Result<Self> {
        let a: Vec<Complex64> = analytic.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Self::from_tails(&a, &[])
    }

    /// Largest stored index.
    pub fn truncation(&self) -> usize {
        self.a.len() - 1
    }

    pub fn a(&self, n: usize) -> Complex64 {
        self.a.get(n).copied().unwrap_or_default()
    }

    pub fn b(&self, n: usize) -> Complex64 {
        self.b.get(n).copied().unwrap_or_default()
    }

    /// Multiplies every coefficient of index `>= 2` by `factor`.
    pub fn scaled(&self, factor: f64) -> Self {
        let mut out = self.clone();
        for c in out.a.iter_mut().skip(2).chain(out.b.iter_mut().skip(2)) {
            *c *= factor;
        }
        out
    }

    /// Checks the `H^0_k` normalization required by `GkH`.
    pub fn satisfies_normalization(&self, class: &ClassParams) -> bool {
        let upto = class.first_free_index().min(self.a.len());
        (2..upto).all(|n| self.a(n) == Complex64::default() && self.b(n) == Complex64::default())
    }

    fn horner(coeffs: &[Complex64], z: Complex64) -> Complex64 {
        coeffs
            .iter()
            .rev()
            .fold(Complex64::default(), |acc, &c| acc * z + c)
    }

    fn derivative(coeffs: &[Complex64]) -> Vec<Complex64> {
        coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, &c)| c * n as f64)
            .collect()
    }

    pub fn h(&self, z: Complex64) -> Complex64 {
        Self::horner(&self.a, z)
    }

    pub fn g(&self, z: Complex64) -> Complex64 {
        Self::horner(&self.b, z)
    }

    pub fn h_prime(&self, z: Complex64) -> Complex64 {
        Self::horner(&Self::derivative(&self.a), z)
    }

    pub fn g_prime(&self, z: Complex64) -> Complex64 {
        Self::horner(&Self::derivative(&self.b), z)
    }

    pub fn h_second(&self, z: Complex64) -> Complex64 {
        Self::horner(&Self::derivative(&Self::derivative(&self.a)), z)
    }

    pub fn g_second(&self, z: Complex64) -> Complex64 {
        Self::horner(&Self::derivative(&Self::derivative(&self.b)), z)
    }

    /// `h(z) / z` and `g(z) / z`, well defined at `z = 0`.
    pub fn h_over_z(&self, z: Complex64) -> Complex64 {
        Self::horner(&self.a[1..], z)
    }

    pub fn g_over_z(&self, z: Complex64) -> Complex64 {
        Self::horner(&self.b[1..], z)
    }

    /// `f(z) = h(z) + conj(g(z))`.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.h(z) + self.g(z).conj()
    }
}

/// Sharp upper bound on `|a_n| + |b_n|` (and on `||a_n| - |b_n||`).
///
/// For `GkH` the indices `2..=k` are forced to zero by the normalization
/// and the bound there is `0`.
pub fn coeff_bound_sum(class: &ClassParams, n: usize) -> Result<f64> {
    class.validate()?;
    if n < 2 {
        return Err(Error::OutOfRange(format!("coefficient index must be >= 2, got {n}")));
    }
    Ok(match *class {
        ClassParams::TildeG0H { beta } => 2.0 * (1.0 - beta),
        ClassParams::W0H { alpha } => 2.0 / w_denominator(n as u64, alpha),
        ClassParams::GkH { k, alpha } => {
            if n <= k as usize {
                0.0
            } else {
                2.0 / g_denominator(n as u64, alpha)
            }
        }
    })
}

fn check_truncation(class: &ClassParams, truncation: usize) -> Result<()> {
    let min = class.first_free_index().max(2);
    if truncation < min {
        return Err(Error::OutOfRange(format!(
            "truncation must be >= {min} for {class}, got {truncation}"
        )));
    }
    Ok(())
}

fn real_model(coeffs: Vec<f64>) -> HarmonicModel {
    let mut model = HarmonicModel::identity();
    model.a.extend(coeffs.into_iter().map(|c| Complex64::new(c, 0.0)));
    model.b.resize(model.a.len(), Complex64::default());
    model
}

/// The class's extremal function truncated at index `truncation`.
///
/// * `TildeG0H`: `z + 2 (1 - beta) sum z^n`;
/// * `W0H`: `z + 2 sum z^n / (n (n alpha + 1 - alpha))`;
/// * `GkH`: `z + 2 sum_{N = kj + 1} z^N / (1 + (N - 1) alpha)`.
///
/// All co-analytic coefficients are zero.
pub fn extremal_model(class: &ClassParams, truncation: usize) -> Result<HarmonicModel> {
    class.validate()?;
    check_truncation(class, truncation)?;
    let coeffs = (2..=truncation)
        .map(|n| {
            let on_lattice = match *class {
                ClassParams::GkH { k, .. } => (n - 1) % k as usize == 0,
                _ => true,
            };
            if on_lattice {
                coeff_bound_sum(class, n)
            } else {
                Ok(0.0)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(real_model(coeffs))
}

/// Model saturating the coefficient bound at every index. Coincides with
/// [`extremal_model`] except for `GkH` with `k >= 2`, where the extremal
/// function only populates the indices `kj + 1`.
pub fn majorant_model(class: &ClassParams, truncation: usize) -> Result<HarmonicModel> {
    class.validate()?;
    check_truncation(class, truncation)?;
    let coeffs = (2..=truncation)
        .map(|n| coeff_bound_sum(class, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(real_model(coeffs))
}

fn check_radius(r: f64) -> Result<()> {
    if (0.0..1.0).contains(&r) {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!("r must lie in [0, 1), got {r}")))
    }
}

/// `sum_{n >= 2} s_n r^n / (n (1 + (n - 1) alpha))` with `s_n = 1`, or
/// `s_n = (-1)^(n-1)` when `alternating`.
pub(crate) fn w_power_sum(r: f64, alpha: f64, alternating: bool, eps: f64) -> Result<Enclosure> {
    let rule = TermRule::new(2, move |n| {
        let sign = if alternating { alternating_sign(false, n) } else { 1.0 };
        sign * rpow(r, n) / w_denominator(n, alpha)
    });
    if alternating {
        eval_alternating(&rule.with_term_error(term_error(r)), eps)
    } else {
        positive_sum(rule, move |_| r, eps)
    }
}

/// `sum_{j >= 1} s_j r^(kj + 1) / (1 + kj alpha)` with `s_j = 1`, or
/// `s_j = (-1)^j` when `alternating`.
pub(crate) fn g_lattice_sum(
    r: f64,
    k: u32,
    alpha: f64,
    alternating: bool,
    eps: f64,
) -> Result<Enclosure> {
    let k = k as u64;
    let rule = TermRule::new(1, move |j| {
        let sign = if alternating { alternating_sign(true, j) } else { 1.0 };
        sign * rpow(r, k * j + 1) / (1.0 + (k * j) as f64 * alpha)
    });
    if alternating {
        eval_alternating(&rule.with_term_error(term_error(r)), eps)
    } else {
        let q = rpow(r, k);
        positive_sum(rule, move |_| q, eps)
    }
}

/// Lower and upper bounds on `|f(z)|` at `|z| = r` over the whole class.
pub fn growth_envelope(class: &ClassParams, r: f64, eps: f64) -> Result<(Enclosure, Enclosure)> {
    class.validate()?;
    check_radius(r)?;
    match *class {
        ClassParams::TildeG0H { beta } => {
            let lower = beta * r + (1.0 - beta) * (1.0 - r) / (1.0 + r) * r;
            let upper = beta * r + (1.0 - beta) * (1.0 + r) / (1.0 - r) * r;
            let err = 16.0 * UNIT_ROUNDOFF;
            Ok((
                Enclosure::with_rel_error(lower, lower, err),
                Enclosure::with_rel_error(upper, upper, err),
            ))
        }
        ClassParams::W0H { alpha } => {
            let lower = w_power_sum(r, alpha, true, 0.5 * eps)? * 2.0 + r;
            let upper = w_power_sum(r, alpha, false, 0.5 * eps)? * 2.0 + r;
            Ok((lower, upper))
        }
        ClassParams::GkH { k, alpha } => {
            let lower = g_lattice_sum(r, k, alpha, true, 0.5 * eps)? * 2.0 + r;
            let upper = g_lattice_sum(r, k, alpha, false, 0.5 * eps)? * 2.0 + r;
            Ok((lower, upper))
        }
    }
}

/// `C_W(alpha) = sum_{n >= 2} (-1)^(n-1) / (n (n alpha + 1 - alpha))`.
pub fn distance_constant_w(alpha: f64, eps: f64) -> Result<Enclosure> {
    ClassParams::w0h(alpha)?;
    w_power_sum(1.0, alpha, true, eps)
}

/// `C_G(k, alpha) = sum_{j >= 1} (-1)^j / (1 + kj alpha)`.
pub fn distance_constant_g(k: u32, alpha: f64, eps: f64) -> Result<Enclosure> {
    ClassParams::gkh(k, alpha)?;
    g_lattice_sum(1.0, k, alpha, true, eps)
}

/// Class-wide lower bound on `d(f(0), ∂f(D))`: `beta`, `1 + 2 C_W(alpha)` or
/// `1 + 2 C_G(k, alpha)`.
pub fn boundary_distance_lower(class: &ClassParams, eps: f64) -> Result<Enclosure> {
    class.validate()?;
    match *class {
        ClassParams::TildeG0H { beta } => Ok(Enclosure::point(beta)),
        ClassParams::W0H { alpha } => Ok(distance_constant_w(alpha, 0.5 * eps)? * 2.0 + 1.0),
        ClassParams::GkH { k, alpha } => {
            Ok(distance_constant_g(k, alpha, 0.5 * eps)? * 2.0 + 1.0)
        }
    }
}
