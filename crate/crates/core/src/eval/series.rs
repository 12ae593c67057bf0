//! The four independent evaluators of S(r) and the two evaluators of the
//! cubed companion sum `Σ 2n/(n²+r²)³`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{check_r, CertifiedValue, Method};
use crate::error::{Error, Result};
use crate::exact::{
    bernoulli, bits_for, dyadic, half_integer_binomial, int, pi_enclosure, rat, zeta_enclosure,
    AccuracyRequest, Rational, RationalInterval,
};

/// Partial sums with at most this many terms are computed exactly; longer
/// ones are accumulated in outward-rounded fixed point.
pub const EXACT_TERM_LIMIT: u64 = 256;

/// Tail enclosure used by direct summation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TailRule {
    /// `[0, ∫_N^∞ f]`, valid for `f` decreasing on `[N, ∞)`.
    Integral,
    /// `[∫_N^∞ f − f(N)/2, ∫_{N+1/2}^∞ f]` from the trapezoid and midpoint
    /// rules, valid for `f` convex and decreasing on `[N, ∞)`.
    Convex,
}

/// `2t / (t² + r²)^μ` at a rational point.
fn summand(t: &Rational, r2: &Rational, mu: u32) -> Rational {
    let base = t * t + r2;
    int(2) * t / num_traits::Pow::pow(&base, mu)
}

/// `∫_a^∞ 2t/(t²+r²)^μ dt = 1 / ((μ−1)(a²+r²)^{μ−1})`.
fn tail_integral(a: &Rational, r2: &Rational, mu: u32) -> Rational {
    let base = a * a + r2;
    (num_traits::Pow::pow(&base, mu - 1) * int(i64::from(mu) - 1)).recip()
}

/// Outward-rounded fixed-point accumulator for sums of positive quotients.
struct FixedSum {
    bits: u32,
    lo: BigInt,
    hi: BigInt,
}

impl FixedSum {
    fn new(bits: u32) -> Self {
        Self {
            bits,
            lo: BigInt::zero(),
            hi: BigInt::zero(),
        }
    }

    fn add(&mut self, num: &BigInt, den: &BigInt) {
        let (q, m) = (num << self.bits as usize).div_mod_floor(den);
        if !m.is_zero() {
            self.hi += &q + 1;
        } else {
            self.hi += &q;
        }
        self.lo += q;
    }

    fn finish(self) -> RationalInterval {
        RationalInterval::new(dyadic(self.lo, self.bits), dyadic(self.hi, self.bits))
            .expect("lo <= hi by construction")
    }
}

/// `Σ_{n=from}^{to} 2n/(n²+r²)^μ`, exact for short ranges and otherwise
/// with total rounding at most `(to − from + 1)·2^{-bits}`.
fn partial_sum(r: &Rational, from: u64, to: u64, mu: u32, bits: u32) -> RationalInterval {
    let r2 = r * r;
    if to < from {
        return RationalInterval::zero();
    }
    if to - from < EXACT_TERM_LIMIT {
        let s = (from..=to).fold(Rational::zero(), |acc, n| {
            acc + summand(&Rational::from_integer(n.into()), &r2, mu)
        });
        return RationalInterval::point(s);
    }
    // 2n·d^{2μ} / (n²d² + p²)^μ with r = p/d
    let (p, d) = (r.numer().clone(), r.denom().clone());
    let p2 = &p * &p;
    let d2 = &d * &d;
    let d2mu = num_traits::Pow::pow(&d2, mu);
    let mut acc = FixedSum::new(bits);
    for n in from..=to {
        let n = BigInt::from(n);
        let base = &n * &n * &d2 + &p2;
        let den = num_traits::Pow::pow(&base, mu);
        let num = &n * 2 * &d2mu;
        acc.add(&num, &den);
    }
    acc.finish()
}

fn tail_bracket(r: &Rational, n: u64, mu: u32, rule: TailRule) -> RationalInterval {
    let r2 = r * r;
    let big_n = Rational::from_integer(n.into());
    match rule {
        TailRule::Integral => {
            RationalInterval::new(Rational::zero(), tail_integral(&big_n, &r2, mu)).unwrap()
        }
        TailRule::Convex => {
            let lo = tail_integral(&big_n, &r2, mu) - summand(&big_n, &r2, mu) / int(2);
            let hi = tail_integral(&(big_n + rat(1, 2)), &r2, mu);
            RationalInterval::new(lo, hi).expect("convex tail bracket is ordered")
        }
    }
}

fn min_terms_for(r: &Rational) -> u64 {
    let c = r.ceil().to_integer();
    u64::try_from(c).unwrap_or(u64::MAX).max(1)
}

fn direct(r: &Rational, n: u64, mu: u32, rule: TailRule) -> Result<RationalInterval> {
    check_r(r)?;
    if Rational::from_integer(n.into()) < *r || n == 0 {
        return Err(Error::Precondition(format!(
            "direct summation needs N >= r (N = {n}, r = {r})"
        )));
    }
    let tail = tail_bracket(r, n, mu, rule);
    // keep rounding well below the tail resolution
    let resolution = match rule {
        TailRule::Integral => tail.hi().clone(),
        TailRule::Convex => tail.width().max(tail.hi() * rat(1, 1 << 20)),
    };
    let bits = bits_for(&(resolution / int(8 * (n as i64).max(1))));
    Ok(&partial_sum(r, 1, n, mu, bits) + &tail)
}

/// S(r) by direct summation of `N` terms with the integral-test tail
/// `[0, 1/(N²+r²)]`. Requires `N ≥ r`.
pub fn eval_direct(r: &Rational, n: u64) -> Result<CertifiedValue> {
    eval_direct_with(r, n, TailRule::Integral)
}

pub fn eval_direct_with(r: &Rational, n: u64, rule: TailRule) -> Result<CertifiedValue> {
    Ok(CertifiedValue {
        enclosure: direct(r, n, 2, rule)?,
        method: Method::Direct,
        terms_used: n,
        r: r.clone(),
    })
}

/// Cubed companion sum by direct summation; the integral tail is
/// `[0, 1/(2(N²+r²)²)]`. Requires `N ≥ r`.
pub fn companion_direct(r: &Rational, n: u64, rule: TailRule) -> Result<CertifiedValue> {
    Ok(CertifiedValue {
        enclosure: direct(r, n, 3, rule)?,
        method: Method::Direct,
        terms_used: n,
        r: r.clone(),
    })
}

/// Direct summation with the convex tail, choosing `N ≥ r` so the result
/// is narrower than `target`.
pub(crate) fn direct_to_width(r: &Rational, mu: u32, target: &Rational) -> Result<CertifiedValue> {
    check_r(r)?;
    let r2 = r * r;
    let mut n = min_terms_for(r).max(16);
    let half = target / int(2);
    loop {
        if n > 1 << 26 {
            return Err(Error::PrecisionExhausted(format!(
                "direct summation cannot reach width {target} at r = {r}"
            )));
        }
        let big_n = Rational::from_integer(n.into());
        let w = tail_integral(&(&big_n + rat(1, 2)), &r2, mu) - tail_integral(&big_n, &r2, mu)
            + summand(&big_n, &r2, mu) / int(2);
        if w <= half {
            break;
        }
        n *= 2;
    }
    let bits = bits_for(&(target / int(8 * n as i64)));
    let enclosure = &partial_sum(r, 1, n, mu, bits) + &tail_bracket(r, n, mu, TailRule::Convex);
    Ok(CertifiedValue {
        enclosure,
        method: Method::Direct,
        terms_used: n,
        r: r.clone(),
    })
}

/// Strict upper bound `(π/2)·C(k+1/2, k)·B_{2k} / r^{2k+2}` for the
/// remainder after `k` terms of the Bernoulli expansion, using the upper
/// endpoint of a π enclosure of width `acc`.
pub fn russell_remainder_bound(r: &Rational, k: u32, acc: &AccuracyRequest) -> Result<Rational> {
    check_r(r)?;
    if k == 0 {
        return Err(Error::Domain("expansion order k must be >= 1".into()));
    }
    let pi_hi = pi_enclosure(acc)?.hi().clone();
    let r_pow = num_traits::Pow::pow(r, 2 * k + 2);
    Ok(pi_hi / int(2) * half_integer_binomial(k)? * bernoulli(k as usize)? / r_pow)
}

/// `1/r² − Σ_{i=1..k} B_{2i}/r^{2i+2}`.
pub fn russell_expansion(r: &Rational, k: u32) -> Result<Rational> {
    check_r(r)?;
    let x = (r * r).recip();
    let mut power = x.clone();
    let mut sum = x.clone();
    for i in 1..=k as usize {
        power *= &x;
        sum -= bernoulli(i)? * &power;
    }
    Ok(sum)
}

/// S(r) from the Bernoulli expansion of order `k` and its remainder bound.
/// Always sound; only narrow for `r` comfortably above 1.
pub fn eval_russell(r: &Rational, k: u32) -> Result<CertifiedValue> {
    if k == 0 {
        return Err(Error::Domain("expansion order k must be >= 1".into()));
    }
    let centre = russell_expansion(r, k)?;
    let bound = russell_remainder_bound(r, k, &AccuracyRequest::decimal(-40))?;
    Ok(CertifiedValue {
        enclosure: RationalInterval::new(&centre - &bound, &centre + &bound)?,
        method: Method::Russell,
        terms_used: u64::from(k),
        r: r.clone(),
    })
}

/// Which alternating zeta expansion to bracket.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZetaSeriesKind {
    /// `S(r) = Σ (−1)^n (2n+2) ζ(2n+3) r^{2n}`
    Mathieu,
    /// `Σ 2n/(n²+r²)³ = Σ (−1)^n (n+1)(n+2) ζ(2n+5) r^{2n}`
    Companion,
}

impl ZetaSeriesKind {
    fn term(self, n: u32, r2n: &Rational, acc: &AccuracyRequest) -> Result<RationalInterval> {
        let n64 = i64::from(n);
        let (coef, s) = match self {
            Self::Mathieu => (int(2 * n64 + 2), 2 * n + 3),
            Self::Companion => (int((n64 + 1) * (n64 + 2)), 2 * n + 5),
        };
        Ok(zeta_enclosure(s, acc)?.scale(&(coef * r2n)))
    }

    /// Largest `r²` for which the term ratio is provably below one for
    /// every `n`: the ratio is at most `2r²` (resp. `3r²`) because
    /// `(2n+4)/(2n+2) ≤ 2`, `(n+3)/(n+1) ≤ 3` and ζ decreases.
    fn ratio_cap(self) -> Rational {
        match self {
            Self::Mathieu => rat(1, 2),
            Self::Companion => rat(1, 3),
        }
    }
}

pub const ZETA_SERIES_MAX_R: (i64, i64) = (3, 10);

/// Leibniz bracket of an alternating zeta expansion: `terms` exact terms
/// followed by `[0, 1]` times the next one, all with ζ intervals of width
/// `acc`. The term sequence is checked to decrease at runtime.
pub fn zeta_series(
    kind: ZetaSeriesKind,
    r: &Rational,
    terms: u32,
    acc: &AccuracyRequest,
) -> Result<CertifiedValue> {
    check_r(r)?;
    let (a, b) = ZETA_SERIES_MAX_R;
    if *r > rat(a, b) {
        return Err(Error::MethodInapplicable(format!(
            "zeta series used only for r <= {a}/{b}, got r = {r}"
        )));
    }
    if terms == 0 {
        return Err(Error::Domain("need at least one series term".into()));
    }
    let r2 = r * r;
    if r2 >= kind.ratio_cap() {
        return Err(Error::MethodInapplicable("term ratio not below one".into()));
    }
    let mut power = Rational::one();
    let mut seq = Vec::with_capacity(terms as usize + 1);
    for n in 0..=terms {
        seq.push(kind.term(n, &power, acc)?);
        power *= &r2;
    }
    for (n, w) in seq.windows(2).enumerate() {
        if !(w[1].hi() <= w[0].lo()) {
            return Err(Error::MethodInapplicable(format!(
                "series terms not verified decreasing at n = {n}"
            )));
        }
    }
    let mut sum = RationalInterval::zero();
    for (n, t) in seq[..terms as usize].iter().enumerate() {
        sum = if n % 2 == 0 { &sum + t } else { &sum - t };
    }
    let next = &seq[terms as usize] * &RationalInterval::unit();
    let enclosure = if terms.is_multiple_of(2) {
        &sum + &next
    } else {
        &sum - &next
    };
    Ok(CertifiedValue {
        enclosure,
        method: Method::ZetaSeries,
        terms_used: u64::from(terms),
        r: r.clone(),
    })
}

/// S(r) for `0 < r ≤ 3/10` from its alternating ζ expansion.
pub fn eval_zeta_series(r: &Rational, terms: u32, acc: &AccuracyRequest) -> Result<CertifiedValue> {
    zeta_series(ZetaSeriesKind::Mathieu, r, terms, acc)
}

pub fn companion_zeta_series(
    r: &Rational,
    terms: u32,
    acc: &AccuracyRequest,
) -> Result<CertifiedValue> {
    zeta_series(ZetaSeriesKind::Companion, r, terms, acc)
}

/// Narrowest zeta-series enclosure with width at most `target`.
pub(crate) fn zeta_series_to_width(
    kind: ZetaSeriesKind,
    r: &Rational,
    target: &Rational,
) -> Result<CertifiedValue> {
    let zeta_acc = AccuracyRequest::new(target / int(1 << 12))?;
    for terms in 1..=200 {
        let v = zeta_series(kind, r, terms, &zeta_acc)?;
        if v.enclosure.width() <= *target {
            return Ok(v);
        }
    }
    Err(Error::PrecisionExhausted(format!(
        "zeta series cannot reach width {target} at r = {r}"
    )))
}

/// Pieces of the Euler–Maclaurin formula at index `m`:
/// (head-and-correction value, remainder bound).
fn lampret_parts(r: &Rational, m: u64) -> (RationalInterval, Rational) {
    let r2 = r * r;
    let mm = Rational::from_integer(m.into());
    let m2 = &mm * &mm;
    let base = &m2 + &r2;
    let pow = |k: u32| num_traits::Pow::pow(&base, k);
    let rem = (int(5) * &m2 * &m2 + int(15) * &m2 * &r2 + int(6) * &r2 * &r2) / (int(16) * pow(5));
    let tail = base.recip() + &mm / pow(2) + (int(3) * &m2 - &r2) / (int(6) * pow(3));
    let bits = bits_for(&(&rem / int(8 * m as i64)));
    let head = partial_sum(r, 1, m - 1, 2, bits);
    (head.add_scalar(&tail), rem)
}

/// The `m = …` Euler–Maclaurin form of S(r) with remainder bound
/// `(5m⁴+15m²r²+6r⁴)/(16(m²+r²)⁵)`. Exact rational endpoints; the head
/// sum is rounded outward only when `m` exceeds [`EXACT_TERM_LIMIT`].
pub fn eval_lampret(r: &Rational, m: u64) -> Result<CertifiedValue> {
    check_r(r)?;
    if m == 0 {
        return Err(Error::Domain("Euler–Maclaurin index m must be >= 1".into()));
    }
    let (value, rem) = lampret_parts(r, m);
    let enclosure = RationalInterval::new(value.lo() - &rem, value.hi() + &rem)?;
    Ok(CertifiedValue {
        enclosure,
        method: Method::Lampret,
        terms_used: m,
        r: r.clone(),
    })
}

pub const LAMPRET_MAX_M: u64 = 10_000;

/// Smallest power-of-two-ish `m ≥ 4` meeting `target`, if any below the cap.
pub(crate) fn lampret_to_width(r: &Rational, target: &Rational) -> Result<CertifiedValue> {
    let mut m = 4;
    loop {
        let v = eval_lampret(r, m)?;
        if v.enclosure.width() <= *target {
            return Ok(v);
        }
        if m == LAMPRET_MAX_M {
            return Err(Error::PrecisionExhausted(format!(
                "Euler–Maclaurin form cannot reach width {target} at r = {r} with m <= {LAMPRET_MAX_M}"
            )));
        }
        m = (m * 2).min(LAMPRET_MAX_M);
    }
}

/// Bernoulli expansion with the smallest order `k ≥ 6` meeting `target`.
pub(crate) fn russell_to_width(r: &Rational, target: &Rational) -> Result<CertifiedValue> {
    let mut prev: Option<Rational> = None;
    for k in 6..=60 {
        let v = eval_russell(r, k)?;
        let w = v.enclosure.width();
        if w <= *target {
            return Ok(v);
        }
        if prev.as_ref().is_some_and(|p| w >= *p) {
            break;
        }
        prev = Some(w);
    }
    Err(Error::PrecisionExhausted(format!(
        "Bernoulli expansion cannot reach width {target} at r = {r}"
    )))
}
