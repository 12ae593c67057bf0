use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `10^exp` for any sign of `exp`.
pub fn pow10(exp: i32) -> Rational {
    let ten = Rational::from_integer(BigInt::from(10));
    num_traits::Pow::pow(&ten, exp)
}

/// `2^-bits` as a rational.
pub fn ulp(bits: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << bits as usize)
}

/// `⌊q · 2^bits⌋`.
pub fn floor_scaled(q: &Rational, bits: u32) -> BigInt {
    let scaled = q.numer() << bits as usize;
    scaled.div_floor(q.denom())
}

/// `⌈q · 2^bits⌉`.
pub fn ceil_scaled(q: &Rational, bits: u32) -> BigInt {
    let scaled = q.numer() << bits as usize;
    let (d, m) = scaled.div_mod_floor(q.denom());
    if m.is_zero() {
        d
    } else {
        d + 1
    }
}

/// `m / 2^bits`.
pub fn dyadic(m: BigInt, bits: u32) -> Rational {
    Rational::new(m, BigInt::one() << bits as usize)
}

/// Smallest `bits` with `2^-bits <= eps`.
pub fn bits_for(eps: &Rational) -> u32 {
    assert!(eps.is_positive());
    let mut bits = 0u32;
    let mut scale = eps.clone();
    while scale < Rational::one() {
        scale *= int(2);
        bits += 1;
    }
    bits
}

/// Parses `"257/100"`, `"2.57"`, `"-3"`, `"1e-9"` and `"2.5E3"` exactly.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let bad = || Error::Parse(text.to_string());
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(n, d));
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => {
            let e: i32 = s[i + 1..].parse().map_err(|_| bad())?;
            (&s[..i], e)
        }
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole
        .chars()
        .chain(frac.chars())
        .all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let all: BigInt = format!("0{whole}{frac}").parse().map_err(|_| bad())?;
    let frac_len = i32::try_from(frac.len()).map_err(|_| bad())?;
    let mut value = Rational::from_integer(all) * pow10(exp - frac_len);
    if negative {
        value = -value;
    }
    Ok(value)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rounding {
    /// Toward zero.
    Truncate,
    Floor,
    Ceil,
}

/// Fixed-point decimal rendering with exactly `digits` fractional digits.
pub fn to_decimal(q: &Rational, digits: usize, mode: Rounding) -> String {
    let scale = BigInt::from(10).pow(digits as u32);
    let scaled = q * Rational::from_integer(scale.clone());
    let n = match mode {
        Rounding::Truncate => scaled.trunc().to_integer(),
        Rounding::Floor => scaled.floor().to_integer(),
        Rounding::Ceil => scaled.ceil().to_integer(),
    };
    let negative = n.is_negative();
    let abs = n.abs();
    let (whole, frac) = abs.div_rem(&scale);
    let sign = if negative { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{whole}")
    } else {
        format!("{sign}{whole}.{frac:0>digits$}")
    }
}

/// `p/q` rendering (or just `p` for integers).
pub fn to_fraction_string(q: &Rational) -> String {
    q.to_string()
}

/// Lossy conversion for diagnostics only.
pub fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_forms() {
        assert_eq!(parse_rational("257/100").unwrap(), rat(257, 100));
        assert_eq!(parse_rational("2.57").unwrap(), rat(257, 100));
        assert_eq!(parse_rational("-3").unwrap(), int(-3));
        assert_eq!(parse_rational("1e-9").unwrap(), pow10(-9));
        assert_eq!(parse_rational("2.5E3").unwrap(), int(2500));
        assert_eq!(parse_rational(".5").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("0.0001").unwrap(), pow10(-4));
        for bad in ["", "abc", "1/0", "1.2.3", "--1", "1e", "."] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn decimal_rendering_modes() {
        let q = rat(13, 30);
        assert_eq!(to_decimal(&q, 10, Rounding::Truncate), "0.4333333333");
        assert_eq!(to_decimal(&q, 10, Rounding::Ceil), "0.4333333334");
        assert_eq!(to_decimal(&-q.clone(), 3, Rounding::Floor), "-0.434");
        assert_eq!(to_decimal(&-q, 3, Rounding::Truncate), "-0.433");
        assert_eq!(to_decimal(&int(7), 2, Rounding::Floor), "7.00");
        assert_eq!(to_decimal(&rat(1, 20), 1, Rounding::Floor), "0.0");
    }

    #[test]
    fn scaled_rounding_brackets() {
        let q = rat(1, 3);
        let lo = dyadic(floor_scaled(&q, 20), 20);
        let hi = dyadic(ceil_scaled(&q, 20), 20);
        assert!(lo < q && q < hi);
        assert_eq!(&hi - &lo, ulp(20));
        let exact = rat(3, 4);
        assert_eq!(floor_scaled(&exact, 2), ceil_scaled(&exact, 2));
        assert_eq!(floor_scaled(&rat(-1, 3), 0), BigInt::from(-1));
    }

    #[test]
    fn bits_for_threshold() {
        assert_eq!(bits_for(&rat(1, 1)), 0);
        assert_eq!(bits_for(&rat(1, 4)), 2);
        assert_eq!(bits_for(&rat(1, 5)), 3);
    }
}
