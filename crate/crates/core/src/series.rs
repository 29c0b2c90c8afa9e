//! Validated summation of the infinite series behind the radius equations.
//!
//! Every sum is returned as an [`Enclosure`]: an interval that contains the
//! exact value of the series, accounting for both truncation and the
//! floating-point error of the partial sum. Two tail bounds are provided:
//!
//! * a geometric majorant `|t(N+1)| / (1 - q)` for series whose term ratio is
//!   bounded by some `q < 1` ([`eval_tail_bounded`], [`sum_series`]);
//! * the alternating-series remainder for series with alternating signs and
//!   decreasing magnitudes ([`eval_alternating`]), sharpened by repeated
//!   averaging of consecutive partial sums when the magnitudes are
//!   completely monotone on the scanned prefix.

use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Maximum number of terms summed before giving up.
pub const TERM_CAP: u64 = 1_000_000;

/// Highest averaging level tried by [`eval_alternating`].
pub const MAX_AVERAGING_LEVEL: usize = 4;

/// Unit roundoff for f64.
pub(crate) const UNIT_ROUNDOFF: f64 = f64::EPSILON / 2.0;

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

fn add_down(a: f64, b: f64) -> f64 {
    let (s, e) = two_sum(a, b);
    if e < 0.0 || !s.is_finite() {
        s.next_down()
    } else {
        s
    }
}

fn add_up(a: f64, b: f64) -> f64 {
    let (s, e) = two_sum(a, b);
    if e > 0.0 || !s.is_finite() {
        s.next_up()
    } else {
        s
    }
}

fn mul_down(a: f64, c: f64) -> f64 {
    let p = a * c;
    let e = a.mul_add(c, -p);
    if e < 0.0 {
        p.next_down()
    } else {
        p
    }
}

fn mul_up(a: f64, c: f64) -> f64 {
    let p = a * c;
    let e = a.mul_add(c, -p);
    if e > 0.0 {
        p.next_up()
    } else {
        p
    }
}

/// Running sum with cascaded TwoSum error compensation. For `m` terms `t_i`
/// the rounded result differs from the exact sum `S` by at most
/// `u |S| + gamma_(m-1)^2 sum |t_i|`.
#[derive(Debug, Clone, Copy, Default)]
struct CompensatedSum {
    hi: f64,
    lo: f64,
    inexact: bool,
}

impl CompensatedSum {
    fn add(&mut self, t: f64) {
        let (s, e) = two_sum(self.hi, t);
        self.hi = s;
        self.lo += e;
        self.inexact |= e != 0.0;
    }

    fn value(&self) -> f64 {
        self.hi + self.lo
    }

    /// Error bound for a value of magnitude at most `magnitude` taken from
    /// this sum after `count` terms with absolute sum `abs_sum`.
    fn error(&self, count: u64, abs_sum: f64, magnitude: f64) -> f64 {
        if !self.inexact {
            return 0.0;
        }
        let g = gamma(count.saturating_sub(1));
        // The rounded value is within u of S, so u |S| <= u |value| / (1 - u).
        g * g * abs_sum + 2.0 * UNIT_ROUNDOFF * magnitude
    }
}

/// `gamma_m = m u / (1 - m u)`, the classical bound for recursive summation
/// of `m + 1` terms.
pub(crate) fn gamma(m: u64) -> f64 {
    let mu = m as f64 * UNIT_ROUNDOFF;
    if mu >= 1.0 {
        f64::INFINITY
    } else {
        mu / (1.0 - mu)
    }
}

/// A closed interval `[lo, hi]` certified to contain a real value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Enclosure {
    lo: f64,
    hi: f64,
}

impl Enclosure {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if lo.is_nan() || hi.is_nan() || lo > hi {
            return Err(Error::OutOfRange(format!(
                "enclosure bounds must satisfy lo <= hi, got [{lo}, {hi}]"
            )));
        }
        Ok(Self { lo, hi })
    }

    pub fn point(value: f64) -> Self {
        Self {
            lo: value,
            hi: value,
        }
    }

    /// `[center - radius, center + radius]`, rounded outward.
    pub fn around(center: f64, radius: f64) -> Self {
        let radius = radius.abs();
        if radius == 0.0 {
            return Self::point(center);
        }
        Self {
            lo: add_down(center, -radius),
            hi: add_up(center, radius),
        }
    }

    /// Encloses a value computed in floating point with relative error at
    /// most `rel_err` with respect to `magnitude`.
    pub fn with_rel_error(value: f64, magnitude: f64, rel_err: f64) -> Self {
        Self::around(value, mul_up(magnitude.abs(), rel_err))
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn mid(&self) -> f64 {
        if self.lo == self.hi {
            self.lo
        } else {
            0.5 * self.lo + 0.5 * self.hi
        }
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn contains_enclosure(&self, other: &Enclosure) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// Certified strictly positive.
    pub fn is_positive(&self) -> bool {
        self.lo > 0.0
    }

    /// Certified strictly negative.
    pub fn is_negative(&self) -> bool {
        self.hi < 0.0
    }

    pub fn excludes_zero(&self) -> bool {
        self.is_positive() || self.is_negative()
    }

    /// Widens both ends by `slack >= 0`.
    pub fn inflate(&self, slack: f64) -> Self {
        let slack = slack.abs();
        if slack == 0.0 {
            return *self;
        }
        Self {
            lo: add_down(self.lo, -slack),
            hi: add_up(self.hi, slack),
        }
    }
}

impl Add for Enclosure {
    type Output = Enclosure;

    fn add(self, rhs: Enclosure) -> Enclosure {
        Enclosure {
            lo: add_down(self.lo, rhs.lo),
            hi: add_up(self.hi, rhs.hi),
        }
    }
}

impl Add<f64> for Enclosure {
    type Output = Enclosure;

    fn add(self, rhs: f64) -> Enclosure {
        self + Enclosure::point(rhs)
    }
}

impl Neg for Enclosure {
    type Output = Enclosure;

    fn neg(self) -> Enclosure {
        Enclosure {
            lo: -self.hi,
            hi: -self.lo,
        }
    }
}

impl Sub for Enclosure {
    type Output = Enclosure;

    fn sub(self, rhs: Enclosure) -> Enclosure {
        self + (-rhs)
    }
}

impl Sub<f64> for Enclosure {
    type Output = Enclosure;

    fn sub(self, rhs: f64) -> Enclosure {
        self + Enclosure::point(-rhs)
    }
}

impl Mul<f64> for Enclosure {
    type Output = Enclosure;

    fn mul(self, c: f64) -> Enclosure {
        if c >= 0.0 {
            Enclosure {
                lo: mul_down(self.lo, c),
                hi: mul_up(self.hi, c),
            }
        } else {
            Enclosure {
                lo: mul_down(self.hi, c),
                hi: mul_up(self.lo, c),
            }
        }
    }
}

impl Mul for Enclosure {
    type Output = Enclosure;

    fn mul(self, rhs: Enclosure) -> Enclosure {
        let ends = [
            (self.lo, rhs.lo),
            (self.lo, rhs.hi),
            (self.hi, rhs.lo),
            (self.hi, rhs.hi),
        ];
        let lo = ends
            .iter()
            .map(|&(a, b)| mul_down(a, b))
            .fold(f64::INFINITY, f64::min);
        let hi = ends
            .iter()
            .map(|&(a, b)| mul_up(a, b))
            .fold(f64::NEG_INFINITY, f64::max);
        Enclosure { lo, hi }
    }
}

fn div_down(a: f64, b: f64) -> f64 {
    let q = a / b;
    // a - q b, exact; its sign relative to b tells the rounding direction.
    let rem = (-q).mul_add(b, a);
    if rem != 0.0 && (rem < 0.0) == (b > 0.0) {
        q.next_down()
    } else {
        q
    }
}

fn div_up(a: f64, b: f64) -> f64 {
    let q = a / b;
    let rem = (-q).mul_add(b, a);
    if rem != 0.0 && (rem > 0.0) == (b > 0.0) {
        q.next_up()
    } else {
        q
    }
}

impl Div for Enclosure {
    type Output = Enclosure;

    /// Division by an enclosure that excludes zero. A divisor containing
    /// zero yields the whole real line.
    fn div(self, rhs: Enclosure) -> Enclosure {
        if !rhs.excludes_zero() {
            return Enclosure {
                lo: f64::NEG_INFINITY,
                hi: f64::INFINITY,
            };
        }
        let ends = [
            (self.lo, rhs.lo),
            (self.lo, rhs.hi),
            (self.hi, rhs.lo),
            (self.hi, rhs.hi),
        ];
        let lo = ends
            .iter()
            .map(|&(a, b)| div_down(a, b))
            .fold(f64::INFINITY, f64::min);
        let hi = ends
            .iter()
            .map(|&(a, b)| div_up(a, b))
            .fold(f64::NEG_INFINITY, f64::max);
        Enclosure { lo, hi }
    }
}

/// General term of a series together with a bound on its term ratio.
///
/// `ratio_bound(n)` must bound `|term(m + 1) / term(m)|` for every `m >= n`.
/// `term_rel_err` is the relative error of one evaluation of `term`, folded
/// into the rounding slack of the result.
pub struct TermRule<T, Q = fn(u64) -> f64> {
    start: u64,
    term: T,
    ratio_bound: Option<Q>,
    term_rel_err: f64,
}

impl<T> TermRule<T>
where
    T: Fn(u64) -> f64,
{
    pub fn new(start: u64, term: T) -> Self {
        Self {
            start,
            term,
            ratio_bound: None,
            term_rel_err: 0.0,
        }
    }
}

impl<T, Q> TermRule<T, Q>
where
    T: Fn(u64) -> f64,
    Q: Fn(u64) -> f64,
{
    pub fn with_ratio_bound<Q2>(self, ratio_bound: Q2) -> TermRule<T, Q2>
    where
        Q2: Fn(u64) -> f64,
    {
        TermRule {
            start: self.start,
            term: self.term,
            ratio_bound: Some(ratio_bound),
            term_rel_err: self.term_rel_err,
        }
    }

    pub fn with_term_error(mut self, rel_err: f64) -> Self {
        self.term_rel_err = rel_err.abs();
        self
    }

    pub fn start(&self) -> u64 {
        self.start
    }

    pub fn term(&self, n: u64) -> f64 {
        (self.term)(n)
    }

    pub fn ratio_bound(&self, n: u64) -> Option<f64> {
        self.ratio_bound.as_ref().map(|q| q(n))
    }
}

/// Outcome of a geometric-tail summation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesSum {
    pub enclosure: Enclosure,
    /// Last index included in the partial sum.
    pub last_index: u64,
    /// Truncation bound `|t(N+1)| / (1 - q)`.
    pub tail_bound: f64,
    /// Whether the truncation bound reached `eps / 2`.
    pub reached_eps: bool,
}

fn check_eps(eps: f64) -> Result<()> {
    if eps > 0.0 && eps.is_finite() {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!("eps must be positive, got {eps}")))
    }
}

/// Sums a series with a geometric tail bound, stopping once the tail is at
/// most `eps / 2` or after `cap` terms.
///
/// Hitting the cap is not an error as long as some ratio bound below one was
/// seen at the last index: the result is still a valid enclosure, only wider
/// than requested (`reached_eps == false`).
pub fn sum_series<T, Q>(rule: &TermRule<T, Q>, eps: f64, cap: u64) -> Result<SeriesSum>
where
    T: Fn(u64) -> f64,
    Q: Fn(u64) -> f64,
{
    check_eps(eps)?;
    if rule.ratio_bound.is_none() {
        return Err(Error::NonContracting(
            "rule has no ratio bound".to_string(),
        ));
    }
    let target = 0.5 * eps;
    let mut n = rule.start;
    let mut t = rule.term(n);
    let mut sum = CompensatedSum::default();
    let mut abs_sum = 0.0_f64;
    let mut count = 0_u64;
    loop {
        if !t.is_finite() {
            return Err(Error::NonContracting(format!("term {n} is not finite")));
        }
        sum.add(t);
        abs_sum += t.abs();
        count += 1;
        let next = rule.term(n + 1);
        let q = rule.ratio_bound(n).unwrap_or(f64::INFINITY);
        let tail = if (0.0..1.0).contains(&q) && next.is_finite() {
            let factor = add_up(1.0 + 4.0 * UNIT_ROUNDOFF, rule.term_rel_err);
            Some(div_up(mul_up(next.abs(), factor), add_down(1.0, -q)))
        } else {
            None
        };
        if let Some(tail) = tail {
            if tail <= target || count >= cap {
                let value = sum.value();
                let slack = sum.error(count, abs_sum, value.abs())
                    + mul_up(rule.term_rel_err, abs_sum);
                let radius = if tail + slack > 0.0 {
                    (tail + slack).next_up()
                } else {
                    0.0
                };
                return Ok(SeriesSum {
                    enclosure: Enclosure::around(value, radius),
                    last_index: n,
                    tail_bound: tail,
                    reached_eps: tail <= target,
                });
            }
        } else if count >= cap {
            return Err(Error::NonContracting(format!(
                "no ratio bound below 1 within {cap} terms"
            )));
        }
        n += 1;
        t = next;
    }
}

/// Encloses `sum_{n >= start} term(n)` with truncation error at most `eps/2`
/// plus the floating-point slack of the partial sum.
///
/// Returns [`Error::NonContracting`] when no index with ratio bound below one
/// is found, or when [`TERM_CAP`] terms do not reach the tolerance.
pub fn eval_tail_bounded<T, Q>(rule: &TermRule<T, Q>, eps: f64) -> Result<Enclosure>
where
    T: Fn(u64) -> f64,
    Q: Fn(u64) -> f64,
{
    let result = sum_series(rule, eps, TERM_CAP)?;
    if result.reached_eps {
        Ok(result.enclosure)
    } else {
        Err(Error::NonContracting(format!(
            "tail bound {} still above eps/2 after {TERM_CAP} terms",
            result.tail_bound
        )))
    }
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// `sum_{i=0}^{p} (-1)^i C(p, i) a[i]`, the p-th forward difference with
/// the sign convention that makes it nonnegative for completely monotone
/// sequences.
fn forward_difference(a: &[f64], p: usize) -> f64 {
    (0..=p)
        .map(|i| {
            let c = binomial(p, i);
            if i % 2 == 0 {
                c * a[i]
            } else {
                -c * a[i]
            }
        })
        .sum()
}

#[derive(Clone, Copy)]
struct Candidate {
    bound: f64,
    center: f64,
    sign: f64,
    combine_err: f64,
}

/// Encloses an alternating series with strictly decreasing magnitudes.
///
/// The level-0 bound is the alternating-series remainder
/// `S - S_N ∈ σ [0, |t(N+1)|]` with `σ` the sign of `t(N+1)`. When the
/// magnitudes `a_n` also have nonnegative forward differences up to order
/// `p + 1` on the scanned prefix, the `p`-times averaged partial sum
/// `S^(p)_N = 2^-p sum_i C(p, i) S_{N+i}` satisfies
/// `S - S^(p)_N ∈ σ [0, Δ^p a_{N+1} / 2^p]`, which converges much faster.
/// The tightest valid level is used.
///
/// A term that is exactly zero ends the series: all later terms must be zero
/// as well.
pub fn eval_alternating<T, Q>(rule: &TermRule<T, Q>, eps: f64) -> Result<Enclosure>
where
    T: Fn(u64) -> f64,
    Q: Fn(u64) -> f64,
{
    check_eps(eps)?;
    let target = 0.5 * eps;
    let window = MAX_AVERAGING_LEVEL + 3;
    let start = rule.start;

    // Ring buffers indexed by (n - start) % window.
    let mut mags = vec![0.0_f64; window];
    let mut signs = vec![0.0_f64; window];
    let mut partial = vec![0.0_f64; window];
    let mut level_valid = [true; MAX_AVERAGING_LEVEL + 1];

    let mut sum = CompensatedSum::default();
    let mut abs_sum = 0.0_f64;
    let mut nonzero = 0_u64;
    let mut prev: Option<f64> = None;
    let mut seen_zero = false;

    for offset in 0..TERM_CAP {
        let n = start + offset;
        let t = rule.term(n);
        if !t.is_finite() {
            return Err(Error::NotAlternating { index: n });
        }
        if let Some(p) = prev {
            if seen_zero && t != 0.0 {
                return Err(Error::NotAlternating { index: n });
            }
            if t != 0.0 && (t.abs() >= p.abs() || t.signum() == p.signum()) {
                return Err(Error::NotAlternating { index: n });
            }
        }
        if t == 0.0 {
            seen_zero = true;
        } else {
            nonzero += 1;
        }
        prev = Some(t);
        sum.add(t);
        abs_sum += t.abs();
        let slot = (offset as usize) % window;
        mags[slot] = t.abs();
        signs[slot] = t.signum();
        partial[slot] = sum.value();

        let have = offset as usize + 1;
        let gather = |from: usize, len: usize, buf: &[f64]| -> Vec<f64> {
            (from..from + len).map(|i| buf[i % window]).collect()
        };

        // Sign conditions on the newest window: Δ^j a ≥ 0 for j = 1..=P+1.
        for j in 2..=(MAX_AVERAGING_LEVEL + 1) {
            if have > j {
                let a = gather(have - 1 - j, j + 1, &mags);
                let noise = (1u64 << j) as f64
                    * (4.0 * UNIT_ROUNDOFF + 2.0 * rule.term_rel_err)
                    * a[0];
                if forward_difference(&a, j) < -noise {
                    for valid in level_valid.iter_mut().skip(j - 1) {
                        *valid = false;
                    }
                }
            }
        }

        // Candidate truncation point N for level p needs terms up to
        // N + p + 2, so N = n - p - 2 (as offsets: have - p - 3).
        let mut best: Option<Candidate> = None;
        for (p, valid) in level_valid.iter().enumerate() {
            if !valid || have < p + 3 {
                continue;
            }
            let n_off = have - p - 3;
            let a = gather(n_off + 1, p + 1, &mags);
            let scale = (1u64 << p) as f64;
            let bound = if a[0] == 0.0 {
                0.0
            } else {
                let noise = scale * (4.0 * UNIT_ROUNDOFF + 2.0 * rule.term_rel_err) * a[0];
                (forward_difference(&a, p).max(0.0) + noise) / scale
            };
            let sums = gather(n_off, p + 1, &partial);
            let center = sums
                .iter()
                .enumerate()
                .map(|(i, s)| binomial(p, i) * s)
                .sum::<f64>()
                / scale;
            // Each stored partial sum carries the compensated-sum error; the
            // averaging weights sum to one, and combining adds (p + 2) u.
            let largest = sums.iter().fold(0.0_f64, |m, s| m.max(s.abs()));
            let combine_err = sum.error(nonzero, abs_sum, largest)
                + if p == 0 { 0.0 } else { (p as f64 + 2.0) * UNIT_ROUNDOFF * largest };
            let candidate = Candidate {
                bound,
                center,
                sign: signs[(n_off + 1) % window],
                combine_err,
            };
            if best.is_none_or(|b| candidate.bound < b.bound) {
                best = Some(candidate);
            }
        }
        if let Some(c) = best.filter(|c| c.bound <= target) {
            let slack = mul_up(rule.term_rel_err, abs_sum) + c.combine_err;
            let (below, above) = if c.sign >= 0.0 {
                (slack, c.bound + slack)
            } else {
                (c.bound + slack, slack)
            };
            let lo = if below == 0.0 { c.center } else { add_down(c.center, -below) };
            let hi = if above == 0.0 { c.center } else { add_up(c.center, above) };
            return Enclosure::new(lo, hi);
        }
    }
    Err(Error::NonContracting(format!(
        "alternating remainder still above eps/2 after {TERM_CAP} terms"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_tail_contains_closed_form() {
        let r = 0.5_f64;
        let rule = TermRule::new(2, move |n| r.powi(n as i32)).with_ratio_bound(move |_| r);
        let enc = eval_tail_bounded(&rule, 1e-12).unwrap();
        assert!(enc.contains(0.5), "{enc:?}");
        assert!(enc.width() <= 2e-12);
    }

    #[test]
    fn zero_radius_gives_exact_zero() {
        let r = 0.0_f64;
        let rule = TermRule::new(2, move |n| r.powi(n as i32) / n as f64)
            .with_ratio_bound(move |_| r);
        let enc = eval_tail_bounded(&rule, 1e-12).unwrap();
        assert_eq!((enc.lo(), enc.hi()), (0.0, 0.0));
    }

    #[test]
    fn log_series_at_alpha_zero() {
        // sum_{n>=2} r^n / n = -ln(1 - r) - r
        let r = 0.3_f64;
        let alpha = 0.0;
        let rule = TermRule::new(2, move |n| {
            let n = n as f64;
            r.powi(n as i32) / (n * (n * alpha + 1.0 - alpha))
        })
        .with_ratio_bound(move |_| r);
        let enc = eval_tail_bounded(&rule, 1e-13).unwrap();
        let expected = -(0.7_f64).ln() - 0.3;
        assert!(enc.contains(expected), "{enc:?} vs {expected}");
        assert!((expected - 0.0566749).abs() < 1e-7);
    }

    #[test]
    fn missing_ratio_bound_or_divergence_is_non_contracting() {
        let rule = TermRule::new(2, |n| 1.0 / n as f64).with_ratio_bound(|_| 1.0);
        assert!(matches!(
            eval_tail_bounded(&rule, 1e-6),
            Err(Error::NonContracting(_))
        ));
        let rule = TermRule::new(2, |n| 1.0 / n as f64);
        assert!(matches!(
            eval_tail_bounded(&rule, 1e-6),
            Err(Error::NonContracting(_))
        ));
    }

    #[test]
    fn capped_sum_returns_wide_but_valid_enclosure() {
        let r: f64 = 1.0 - 1e-6;
        let rule = TermRule::new(1, move |n| r.powi(n as i32))
            .with_ratio_bound(move |_| r)
            .with_term_error(64.0 * UNIT_ROUNDOFF);
        let out = sum_series(&rule, 1e-12, 1000).unwrap();
        assert!(!out.reached_eps);
        // exact value r / (1 - r)
        assert!(out.enclosure.contains(r / (1.0 - r)));
        assert!(eval_tail_bounded(&rule, 1e-12).is_err());
    }

    #[test]
    fn alternating_harmonic_tail() {
        let rule = TermRule::new(2, |n| {
            let s = if n % 2 == 1 { 1.0 } else { -1.0 };
            s / n as f64
        });
        let enc = eval_alternating(&rule, 1e-10).unwrap();
        let expected = std::f64::consts::LN_2 - 1.0;
        assert!(enc.contains(expected), "{enc:?}");
        assert!(enc.width() <= 1e-10);
    }

    #[test]
    fn alternating_reindexed_constant() {
        let rule = TermRule::new(1, |j| {
            let s = if j % 2 == 0 { 1.0 } else { -1.0 };
            s / (1.0 + j as f64)
        });
        let enc = eval_alternating(&rule, 1e-12).unwrap();
        assert!(enc.contains(std::f64::consts::LN_2 - 1.0), "{enc:?}");
    }

    #[test]
    fn finite_alternating_series_is_exact() {
        let rule = TermRule::new(1, |n| if n == 1 { 0.75 } else { 0.0 });
        let enc = eval_alternating(&rule, 1e-12).unwrap();
        assert_eq!((enc.lo(), enc.hi()), (0.75, 0.75));
    }

    #[test]
    fn rejects_non_alternating_input() {
        let same_sign = TermRule::new(1, |n| 1.0 / (n * n) as f64);
        assert!(matches!(
            eval_alternating(&same_sign, 1e-8),
            Err(Error::NotAlternating { index: 2 })
        ));
        let growing = TermRule::new(1, |n| {
            let s = if n % 2 == 0 { 1.0 } else { -1.0 };
            s * n as f64
        });
        assert!(matches!(
            eval_alternating(&growing, 1e-8),
            Err(Error::NotAlternating { .. })
        ));
    }

    #[test]
    fn enclosure_arithmetic_is_outward() {
        let a = Enclosure::point(0.1);
        let b = Enclosure::point(0.2);
        let s = a + b;
        // 0.1 + 0.2 is inexact in binary; the interval must straddle the
        // rounded result.
        assert!(s.lo() < s.hi());
        assert!(s.contains(0.1 + 0.2));
        let exact = Enclosure::point(0.5) + Enclosure::point(0.25);
        assert_eq!((exact.lo(), exact.hi()), (0.75, 0.75));
        let neg = Enclosure::new(1.0, 2.0).unwrap() * -2.0;
        assert_eq!((neg.lo(), neg.hi()), (-4.0, -2.0));
        assert!(Enclosure::new(2.0, 1.0).is_err());
    }

    #[test]
    fn enclosure_product_and_quotient() {
        let a = Enclosure::new(-1.0, 2.0).unwrap();
        let b = Enclosure::new(3.0, 4.0).unwrap();
        let p = a * b;
        assert_eq!((p.lo(), p.hi()), (-4.0, 8.0));
        let q = Enclosure::point(1.0) / Enclosure::point(3.0);
        assert!(q.contains(1.0 / 3.0) && q.lo() < q.hi());
        assert!(q.width() <= 2.0 * f64::EPSILON);
        let exact = Enclosure::point(1.0) / Enclosure::point(4.0);
        assert_eq!((exact.lo(), exact.hi()), (0.25, 0.25));
        let neg = Enclosure::point(1.0) / Enclosure::point(-3.0);
        assert!(neg.contains(-1.0 / 3.0) && neg.lo() < neg.hi());
        let unbounded = b / a;
        assert!(unbounded.lo().is_infinite() && unbounded.hi().is_infinite());
    }
}
