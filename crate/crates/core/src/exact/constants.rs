//! Rigorous enclosures of π and ζ(s) with exact rational endpoints.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};

use super::bernoulli::signed_bernoulli;
use super::rational::{bits_for, int, Rational};
use super::{AccuracyRequest, RationalInterval};
use crate::error::{Error, Result};

/// Largest head length tried before giving up on a ζ enclosure.
pub const ZETA_MAX_HEAD: u64 = 1 << 20;
const ZETA_MAX_CORRECTIONS: usize = 40;

/// `[S_N + (N+1)^{1-s}/(s-1), S_N + N^{1-s}/(s-1)]` where `S_N = Σ_{n≤N} n^{-s}`.
///
/// Both tail bounds come from the integral test for the decreasing
/// function `t^{-s}`. Exact, no rounding; meant for small `N`.
pub fn zeta_integral_bracket(s: u32, n: u64) -> Result<RationalInterval> {
    if s < 2 {
        return Err(Error::Domain("zeta requires s >= 2".into()));
    }
    if n == 0 {
        return Err(Error::Domain("need at least one term".into()));
    }
    let head = (1..=n).fold(Rational::zero(), |acc, k| acc + inv_pow(k, s));
    let tail = |m: u64| inv_pow(m, s - 1) / int(i64::from(s) - 1);
    RationalInterval::new(&head + tail(n + 1), head + tail(n))
}

fn inv_pow(n: u64, s: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::from(n).pow(s))
}

/// Euler–Maclaurin correction terms `T_k = b_{2k} (s)_{2k-1} / ((2k)! N^{s+2k-1})`
/// for the tail `Σ_{n≥N} n^{-s}`. For the completely monotone `t^{-s}` the
/// remainder after `p` corrections has the sign of `T_{p+1}` and is smaller
/// in magnitude.
fn em_correction(s: u32, n: u64, k: usize) -> Rational {
    let mut rising = BigInt::one();
    for j in 0..(2 * k - 1) {
        rising *= BigInt::from(u64::from(s) + j as u64);
    }
    let factorial = (1..=2 * k).fold(BigInt::one(), |acc, j| acc * BigInt::from(j));
    let power = BigInt::from(n).pow(s + 2 * k as u32 - 1);
    signed_bernoulli(2 * k) * Rational::new(rising, factorial * power)
}

fn zeta_em(s: u32, target: &Rational, max_head: u64) -> Result<RationalInterval> {
    let mut n: u64 = 8;
    while n <= max_head {
        // Σ_{m<N} m^{-s} + ∫_N^∞ + f(N)/2
        let mut base = (1..n).fold(Rational::zero(), |acc, k| acc + inv_pow(k, s));
        base += inv_pow(n, s - 1) / int(i64::from(s) - 1);
        base += inv_pow(n, s) / int(2);
        let mut prev_abs: Option<Rational> = None;
        for k in 1..=ZETA_MAX_CORRECTIONS {
            let t = em_correction(s, n, k);
            let abs = t.abs();
            if abs <= *target {
                return Ok(RationalInterval::hull_of(base.clone(), &base + &t));
            }
            if prev_abs.as_ref().is_some_and(|p| abs >= *p) {
                break;
            }
            base += t;
            prev_abs = Some(abs);
        }
        n *= 4;
    }
    Err(Error::PrecisionExhausted(format!(
        "zeta({s}) not resolved within head length {max_head}"
    )))
}

fn zeta_cache() -> &'static Mutex<HashMap<(u32, Rational), RationalInterval>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, Rational), RationalInterval>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Interval of width at most `acc.max_width()` containing ζ(s).
///
/// The result is a deterministic function of `(s, max_width)`; repeated
/// calls return the same memoized interval.
pub fn zeta_enclosure(s: u32, acc: &AccuracyRequest) -> Result<RationalInterval> {
    zeta_enclosure_capped(s, acc, ZETA_MAX_HEAD)
}

/// As [`zeta_enclosure`] with an explicit cap on the head length.
pub fn zeta_enclosure_capped(
    s: u32,
    acc: &AccuracyRequest,
    max_head: u64,
) -> Result<RationalInterval> {
    if s < 2 {
        return Err(Error::Domain("zeta requires s >= 2".into()));
    }
    let key = (s, acc.max_width().clone());
    if let Some(hit) = zeta_cache()
        .lock()
        .unwrap_or_else(|e| e.into_inner())
        .get(&key)
    {
        return Ok(hit.clone());
    }
    let half = acc.max_width() / int(2);
    let bits = bits_for(&(acc.max_width() / int(8)));
    let value = zeta_em(s, &half, max_head)?.round_outward(bits);
    debug_assert!(value.width() <= *acc.max_width());
    zeta_cache()
        .lock()
        .unwrap_or_else(|e| e.into_inner())
        .insert(key, value.clone());
    Ok(value)
}

/// Leibniz bracket for `atan(1/x) = Σ (-1)^k / ((2k+1) x^{2k+1})` using
/// `terms` and `terms + 1` partial sums.
fn atan_inv_bracket(x: i64, terms: usize) -> RationalInterval {
    let x = int(x);
    let x2 = &x * &x;
    let mut power = x.recip();
    let mut sum = Rational::zero();
    let mut next = Rational::zero();
    for k in 0..=terms {
        let term = &power / int(2 * k as i64 + 1);
        let signed = if k % 2 == 0 { term } else { -term };
        if k < terms {
            sum += &signed;
            power /= &x2;
        } else {
            next = signed;
        }
    }
    RationalInterval::hull_of(sum.clone(), sum + next)
}

/// Interval of width at most `acc.max_width()` containing π, from
/// `π = 16·atan(1/5) − 4·atan(1/239)` with alternating-series brackets.
pub fn pi_enclosure(acc: &AccuracyRequest) -> Result<RationalInterval> {
    let half = acc.max_width() / int(2);
    let bits = bits_for(&(acc.max_width() / int(8)));
    for terms in 1..10_000 {
        let a = atan_inv_bracket(5, terms).scale(&int(16));
        let b = atan_inv_bracket(239, terms).scale(&int(4));
        let pi = &a - &b;
        if pi.width() <= half {
            return Ok(pi.round_outward(bits));
        }
    }
    Err(Error::PrecisionExhausted("pi series cap reached".into()))
}

/// `C(k + 1/2, k) = Π_{j=1..k} (k + 3/2 − j) / j`.
pub fn half_integer_binomial(k: u32) -> Result<Rational> {
    if k == 0 {
        return Err(Error::Domain("half-integer binomial needs k >= 1".into()));
    }
    let k = i64::from(k);
    Ok((1..=k).fold(Rational::one(), |acc, j| {
        acc * Rational::new(BigInt::from(2 * k + 3 - 2 * j), BigInt::from(2 * j))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{parse_rational, pow10, rat};

    fn acc(e: i32) -> AccuracyRequest {
        AccuracyRequest::new(pow10(e)).unwrap()
    }

    #[test]
    fn one_term_bracket_within_trivial_bounds() {
        for s in 2..12 {
            let z = zeta_integral_bracket(s, 1).unwrap();
            let cap = RationalInterval::new(int(1), int(1) + rat(1, i64::from(s) - 1)).unwrap();
            assert!(z.is_subset_of(&cap), "s = {s}");
        }
    }

    #[test]
    fn zeta_two_contains_pi_squared_over_six() {
        let z = zeta_enclosure(2, &acc(-30)).unwrap();
        let pi = pi_enclosure(&acc(-40)).unwrap();
        let target = (&pi * &pi).scale(&rat(1, 6));
        assert!(z.intersects(&target));
        assert!(z.width() <= pow10(-30));
    }

    #[test]
    fn zeta_rejects_small_s() {
        assert!(zeta_enclosure(1, &acc(-5)).is_err());
        assert!(zeta_integral_bracket(0, 3).is_err());
    }

    #[test]
    fn zeta_cap_exhaustion_is_reported() {
        let err = zeta_enclosure_capped(3, &acc(-200), 4).unwrap_err();
        assert!(matches!(err, Error::PrecisionExhausted(_)));
    }

    #[test]
    fn pi_bounds() {
        let pi = pi_enclosure(&acc(-3)).unwrap();
        assert!(pi.lo() < &rat(22, 7));
        assert!(pi.contains(&parse_rational("3.14159").unwrap()));
        assert!(pi.width() <= pow10(-3));
        let coarse = pi_enclosure(&acc(-1)).unwrap();
        assert!(coarse.lo() > &int(3));
        // 50 known digits
        let digits =
            parse_rational("3.14159265358979323846264338327950288419716939937510").unwrap();
        let fine = pi_enclosure(&acc(-45)).unwrap();
        let truth = RationalInterval::new(digits.clone(), digits + pow10(-50)).unwrap();
        assert!(fine.intersects(&truth));
    }

    #[test]
    fn half_integer_binomials() {
        assert_eq!(half_integer_binomial(1).unwrap(), rat(3, 2));
        assert_eq!(half_integer_binomial(3).unwrap(), rat(35, 16));
        assert!(half_integer_binomial(0).is_err());
        // k! 2^k C(k+1/2, k) is a product of odd numbers
        for k in 1..20u32 {
            let c = half_integer_binomial(k).unwrap();
            let f = (1..=k).fold(BigInt::one(), |a, j| a * j) << k as usize;
            let scaled = c * Rational::from_integer(f);
            assert!(scaled.is_integer(), "k = {k}");
            assert!(scaled.to_integer().bit(0), "k = {k}");
        }
    }
}
