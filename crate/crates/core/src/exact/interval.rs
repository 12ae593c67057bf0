use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{ceil_scaled, dyadic, floor_scaled, to_decimal, Rational, Rounding};
use crate::error::{Error, Result};

/// Closed interval `[lo, hi]` with exact rational endpoints.
///
/// Every operation returns an interval containing the exact image of the
/// operand sets. Division by an interval that contains zero is an error.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalInterval {
    lo: Rational,
    hi: Rational,
}

impl RationalInterval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(Error::EmptyInterval);
        }
        Ok(Self { lo, hi })
    }

    /// Builds `[min(a, b), max(a, b)]`.
    pub fn hull_of(a: Rational, b: Rational) -> Self {
        if a <= b {
            Self { lo: a, hi: b }
        } else {
            Self { lo: b, hi: a }
        }
    }

    pub fn point(x: Rational) -> Self {
        Self {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn zero() -> Self {
        Self::point(Rational::zero())
    }

    pub fn one() -> Self {
        Self::point(Rational::one())
    }

    /// `[0, 1]`, the multiplier of an alternating-series remainder.
    pub fn unit() -> Self {
        Self {
            lo: Rational::zero(),
            hi: Rational::one(),
        }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn into_bounds(self) -> (Rational, Rational) {
        (self.lo, self.hi)
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn intersection(&self, other: &Self) -> Option<Self> {
        let lo = (&self.lo).max(&other.lo).clone();
        let hi = (&self.hi).min(&other.hi).clone();
        (lo <= hi).then_some(Self { lo, hi })
    }

    pub fn hull(&self, other: &Self) -> Self {
        Self {
            lo: (&self.lo).min(&other.lo).clone(),
            hi: (&self.hi).max(&other.hi).clone(),
        }
    }

    /// Strict separation: every point of `self` is below every point of `other`.
    pub fn strictly_below(&self, other: &Self) -> bool {
        self.hi < other.lo
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn abs_max(&self) -> Rational {
        (&self.lo.abs()).max(&self.hi.abs()).clone()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::hull_of(&self.lo * k, &self.hi * k)
    }

    pub fn add_scalar(&self, k: &Rational) -> Self {
        Self {
            lo: &self.lo + k,
            hi: &self.hi + k,
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.contains_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self {
            lo: self.hi.recip(),
            hi: self.lo.recip(),
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.recip()?)
    }

    /// Tight image of `x ↦ x^n`.
    pub fn pow(&self, n: u32) -> Self {
        if n == 0 {
            return Self::one();
        }
        let a = num_traits::Pow::pow(&self.lo, n);
        let b = num_traits::Pow::pow(&self.hi, n);
        if n % 2 == 1 || !self.contains_zero() || self.lo.is_zero() || self.hi.is_zero() {
            Self::hull_of(a, b)
        } else {
            Self {
                lo: Rational::zero(),
                hi: a.max(b),
            }
        }
    }

    /// Widens the endpoints to multiples of `2^-bits`, keeping the
    /// rational sizes bounded in long computations.
    pub fn round_outward(&self, bits: u32) -> Self {
        Self {
            lo: dyadic(floor_scaled(&self.lo, bits), bits),
            hi: dyadic(ceil_scaled(&self.hi, bits), bits),
        }
    }

    /// Outward decimal rendering `[lo↓, hi↑]` with `digits` fractional digits.
    pub fn to_decimal_string(&self, digits: usize) -> String {
        format!(
            "[{}, {}]",
            to_decimal(&self.lo, digits, Rounding::Floor),
            to_decimal(&self.hi, digits, Rounding::Ceil)
        )
    }
}

impl From<Rational> for RationalInterval {
    fn from(x: Rational) -> Self {
        Self::point(x)
    }
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl Add for &RationalInterval {
    type Output = RationalInterval;
    fn add(self, rhs: Self) -> RationalInterval {
        RationalInterval {
            lo: &self.lo + &rhs.lo,
            hi: &self.hi + &rhs.hi,
        }
    }
}

impl Sub for &RationalInterval {
    type Output = RationalInterval;
    fn sub(self, rhs: Self) -> RationalInterval {
        RationalInterval {
            lo: &self.lo - &rhs.hi,
            hi: &self.hi - &rhs.lo,
        }
    }
}

impl Mul for &RationalInterval {
    type Output = RationalInterval;
    fn mul(self, rhs: Self) -> RationalInterval {
        if self.is_point() {
            return rhs.scale(&self.lo);
        }
        if rhs.is_point() {
            return self.scale(&rhs.lo);
        }
        let products = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let lo = products.iter().min().unwrap().clone();
        let hi = products.iter().max().unwrap().clone();
        RationalInterval { lo, hi }
    }
}

impl Neg for &RationalInterval {
    type Output = RationalInterval;
    fn neg(self) -> RationalInterval {
        RationalInterval {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RationalInterval {
            type Output = RationalInterval;
            fn $m(self, rhs: Self) -> RationalInterval {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RationalInterval> for RationalInterval {
            type Output = RationalInterval;
            fn $m(self, rhs: &RationalInterval) -> RationalInterval {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RationalInterval {
    type Output = RationalInterval;
    fn neg(self) -> RationalInterval {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    fn iv(a: i64, b: i64) -> RationalInterval {
        RationalInterval::new(int(a), int(b)).unwrap()
    }

    #[test]
    fn rejects_reversed_endpoints() {
        assert_eq!(
            RationalInterval::new(int(2), int(1)),
            Err(Error::EmptyInterval)
        );
    }

    #[test]
    fn multiplication_sign_cases() {
        assert_eq!(&iv(-2, 3) * &iv(-1, 4), iv(-8, 12));
        assert_eq!(&iv(-3, -2) * &iv(-5, -4), iv(8, 15));
    }

    #[test]
    fn division_by_zero_interval_rejected() {
        assert_eq!(iv(1, 2).checked_div(&iv(-1, 1)), Err(Error::DivisionByZero));
        assert_eq!(iv(1, 2).checked_div(&iv(0, 1)), Err(Error::DivisionByZero));
        let q = iv(1, 2).checked_div(&iv(2, 4)).unwrap();
        assert_eq!(q, RationalInterval::new(rat(1, 4), int(1)).unwrap());
    }

    #[test]
    fn even_power_straddling_zero() {
        assert_eq!(iv(-3, 2).pow(2), iv(0, 9));
        assert_eq!(iv(-3, -2).pow(2), iv(4, 9));
        assert_eq!(iv(-3, 2).pow(3), iv(-27, 8));
        assert_eq!(iv(-3, 2).pow(0), iv(1, 1));
    }

    #[test]
    fn outward_rounding_contains_original() {
        let x = RationalInterval::new(rat(1, 3), rat(2, 3)).unwrap();
        let r = x.round_outward(8);
        assert!(x.is_subset_of(&r));
        assert!(r.width() <= x.width() + rat(2, 256));
    }

    #[test]
    fn separation_and_intersection() {
        assert!(iv(0, 1).strictly_below(&iv(2, 3)));
        assert!(!iv(0, 2).strictly_below(&iv(2, 3)));
        assert!(iv(0, 2).intersects(&iv(2, 3)));
        assert_eq!(iv(0, 2).intersection(&iv(1, 3)), Some(iv(1, 2)));
        assert_eq!(iv(0, 1).intersection(&iv(2, 3)), None);
    }
}
