use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::RationalPolynomial;
use crate::error::{Error, Result};
use crate::exact::Rational;

/// Quotient of two exact polynomials. No gcd cancellation is performed, so
/// degrees reflect the construction path.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalFunction {
    num: RationalPolynomial,
    den: RationalPolynomial,
}

impl RationalFunction {
    pub fn new(num: RationalPolynomial, den: RationalPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Degenerate("denominator is identically zero".into()));
        }
        Ok(Self { num, den })
    }

    pub fn from_poly(p: RationalPolynomial) -> Self {
        Self {
            num: p,
            den: RationalPolynomial::constant(Rational::one()),
        }
    }

    pub fn num(&self) -> &RationalPolynomial {
        &self.num
    }

    pub fn den(&self) -> &RationalPolynomial {
        &self.den
    }

    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        let d = self.den.eval_at(x);
        if d.is_zero() {
            return Err(Error::Domain(format!("denominator vanishes at {x}")));
        }
        Ok(self.num.eval_at(x) / d)
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self {
                num: self.num.add(&other.num),
                den: self.den.clone(),
            };
        }
        Self {
            num: self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            den: self.den.mul(&other.den),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self {
            num: self.num.mul(&other.num),
            den: self.den.mul(&other.den),
        }
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Self::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn mul_poly(&self, p: &RationalPolynomial) -> Self {
        Self {
            num: self.num.mul(p),
            den: self.den.clone(),
        }
    }

    /// Quotient-rule pieces `(φ, ψ)` with `f' = φ/ψ`,
    /// `φ = num'·den − num·den'` and `ψ = den²`.
    pub fn derivative_numerator(&self) -> (RationalPolynomial, RationalPolynomial) {
        let phi = self
            .num
            .derivative()
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.derivative()));
        let psi = self.den.mul(&self.den);
        (phi, psi)
    }

    /// True when both represent the same function: `n₁·d₂ = n₂·d₁`.
    pub fn same_function(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    /// `Some(k)` when `other = (k·num)/(k·den)` coefficient by coefficient.
    pub fn proportional_factor(&self, other: &Self) -> Option<Rational> {
        let lead = self.den.leading()?;
        let k = other.den.leading()? / lead;
        (self.num.scale(&k) == other.num && self.den.scale(&k) == other.den).then_some(k)
    }

    /// Ratio of the numerator and denominator leading coefficients when the
    /// degrees agree, i.e. the limit at infinity.
    pub fn limit_at_infinity(&self) -> Option<Rational> {
        if self.num.degree()? != self.den.degree()? {
            return None;
        }
        Some(self.num.leading()? / self.den.leading()?)
    }

    /// Cancels the polynomial gcd of numerator and denominator, then
    /// applies [`Self::normalized`].
    pub fn reduced(&self) -> Self {
        let g = self.num.gcd(&self.den);
        if g.degree().unwrap_or(0) == 0 {
            return self.normalized();
        }
        Self {
            num: self.num.exact_div(&g).expect("gcd divides numerator"),
            den: self.den.exact_div(&g).expect("gcd divides denominator"),
        }
        .normalized()
    }

    /// Scales numerator and denominator by one common rational so that all
    /// coefficients become coprime integers and the denominator's leading
    /// coefficient is positive.
    pub fn normalized(&self) -> Self {
        let all = self.num.coeffs().iter().chain(self.den.coeffs());
        let lcm = all.clone().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let gcd = all.fold(BigInt::zero(), |acc, c| {
            acc.gcd(&(c.numer() * &lcm / c.denom()))
        });
        let mut k = Rational::new(lcm, gcd);
        if self.den.leading().is_some_and(|c| c.is_negative()) {
            k = -k;
        }
        Self {
            num: self.num.scale(&k),
            den: self.den.scale(&k),
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn p(c: &[i64]) -> RationalPolynomial {
        RationalPolynomial::from_ints(c)
    }

    #[test]
    fn reduction_cancels_common_factor() {
        // (x² − 1)/(2x − 2) = (x + 1)/2
        let f = RationalFunction::new(p(&[-1, 0, 1]), p(&[-2, 2])).unwrap();
        let g = f.reduced();
        assert_eq!(g.num(), &p(&[1, 1]));
        assert_eq!(g.den(), &p(&[2]));
        assert!(g.same_function(&f));
    }

    #[test]
    fn rejects_zero_denominator() {
        assert!(RationalFunction::new(p(&[1]), RationalPolynomial::zero()).is_err());
    }

    #[test]
    fn quotient_rule_small_cases() {
        let f = RationalFunction::new(p(&[1]), p(&[0, 1])).unwrap();
        let (phi, psi) = f.derivative_numerator();
        assert_eq!(phi, p(&[-1]));
        assert_eq!(psi, p(&[0, 0, 1]));

        let g = RationalFunction::from_poly(p(&[0, 0, 1]));
        let (phi, psi) = g.derivative_numerator();
        assert_eq!(phi, p(&[0, 2]));
        assert_eq!(psi, p(&[1]));
    }

    #[test]
    fn arithmetic_agrees_with_evaluation() {
        let f = RationalFunction::new(p(&[1, 2]), p(&[3, 0, 1])).unwrap();
        let g = RationalFunction::new(p(&[-1, 0, 1]), p(&[1, 1])).unwrap();
        for x in [rat(1, 3), int(2), rat(-5, 7)] {
            let (a, b) = (f.eval(&x).unwrap(), g.eval(&x).unwrap());
            assert_eq!(f.add(&g).eval(&x).unwrap(), &a + &b);
            assert_eq!(f.sub(&g).eval(&x).unwrap(), &a - &b);
            assert_eq!(f.mul(&g).eval(&x).unwrap(), &a * &b);
            assert_eq!(f.div(&g).unwrap().eval(&x).unwrap(), &a / &b);
        }
    }

    #[test]
    fn proportionality_and_normalization() {
        let f = RationalFunction::new(p(&[2, 4]), p(&[6, 8])).unwrap();
        let g = RationalFunction::new(p(&[-1, -2]), p(&[-3, -4])).unwrap();
        assert_eq!(f.proportional_factor(&g), Some(rat(-1, 2)));
        assert!(f.same_function(&g));
        let n = g.normalized();
        assert_eq!(n.num(), &p(&[1, 2]));
        assert_eq!(n.den(), &p(&[3, 4]));
        assert_eq!(f.limit_at_infinity(), Some(rat(1, 2)));
    }

    #[test]
    fn evaluation_at_pole_is_error() {
        let f = RationalFunction::new(p(&[1]), p(&[-1, 1])).unwrap();
        assert!(f.eval(&int(1)).is_err());
    }
}
