use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{Rational, RationalInterval};

/// Scalars a dense polynomial can carry: exact rationals or rational
/// intervals (the latter standing for a whole family of polynomials).
pub trait Coefficient: Clone + fmt::Debug + PartialEq {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, k: &Rational) -> Self;
    fn from_rational(q: Rational) -> Self;
    /// Smallest value the coefficient can take.
    fn lower(&self) -> &Rational;
    /// Largest value the coefficient can take.
    fn upper(&self) -> &Rational;
    fn to_interval(&self) -> RationalInterval;
}

impl Coefficient for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, k: &Rational) -> Self {
        self * k
    }
    fn from_rational(q: Rational) -> Self {
        q
    }
    fn lower(&self) -> &Rational {
        self
    }
    fn upper(&self) -> &Rational {
        self
    }
    fn to_interval(&self) -> RationalInterval {
        RationalInterval::point(self.clone())
    }
}

impl Coefficient for RationalInterval {
    fn zero() -> Self {
        RationalInterval::zero()
    }
    fn is_zero(&self) -> bool {
        self.is_point() && Zero::is_zero(self.lo())
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, k: &Rational) -> Self {
        RationalInterval::scale(self, k)
    }
    fn from_rational(q: Rational) -> Self {
        RationalInterval::point(q)
    }
    fn lower(&self) -> &Rational {
        self.lo()
    }
    fn upper(&self) -> &Rational {
        self.hi()
    }
    fn to_interval(&self) -> RationalInterval {
        self.clone()
    }
}

/// Dense univariate polynomial; `coeffs[i]` multiplies `x^i`.
///
/// Canonical: no trailing zero coefficients, so the zero polynomial has an
/// empty coefficient list and no degree.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<C: Coefficient> {
    coeffs: Vec<C>,
}

pub type RationalPolynomial = Polynomial<Rational>;
pub type IntervalPolynomial = Polynomial<RationalInterval>;

impl<C: Coefficient> Polynomial<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    /// `c · x^k`
    pub fn monomial(c: C, k: usize) -> Self {
        let mut coeffs = vec![C::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn x() -> Self {
        Self::monomial(C::from_rational(Rational::one()), 1)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i).sub(&other.coeff(i))).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(C::neg).collect())
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.scale(k)).collect())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::constant(C::from_rational(Rational::one()));
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&Rational::from_integer(i.into())))
                .collect(),
        )
    }

    /// `p(x²)`, for building even polynomials in `r` from polynomials in `r²`.
    pub fn in_square(&self) -> Self {
        let mut out = vec![C::zero(); 2 * self.coeffs.len()];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[2 * i] = c.clone();
        }
        Self::new(out)
    }

    /// `p(w·x)`.
    pub fn scale_variable(&self, w: &Rational) -> Self {
        let mut power = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c.scale(&power));
            power *= w;
        }
        Self::new(out)
    }

    /// Horner evaluation at a coefficient-typed point.
    pub fn eval(&self, x: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc.mul(x).add(c))
    }

    /// Interval Horner evaluation; contains `p(t)` for every `t ∈ x` and every
    /// member polynomial.
    pub fn eval_interval(&self, x: &RationalInterval) -> RationalInterval {
        self.coeffs
            .iter()
            .rev()
            .fold(RationalInterval::zero(), |acc, c| {
                &(&acc * x) + &c.to_interval()
            })
    }

    /// `q(x) = p(x + s)` by repeated synthetic division (Horner's scheme
    /// applied `deg + 1` times).
    pub fn taylor_shift(&self, s: &Rational) -> Self {
        let mut a = self.coeffs.clone();
        let n = a.len();
        if n < 2 || Zero::is_zero(s) {
            return self.clone();
        }
        for i in 0..n - 1 {
            for j in (i..n - 1).rev() {
                let carry = a[j + 1].scale(s);
                a[j] = a[j].add(&carry);
            }
        }
        Self::new(a)
    }

    /// `x^d · p(1/x)` for a declared degree `d ≥ deg p`.
    pub fn reversed(&self, degree: usize) -> Self {
        assert!(self.coeffs.len() <= degree + 1, "declared degree too small");
        let mut out = vec![C::zero(); degree + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[degree - i] = c.clone();
        }
        Self::new(out)
    }

    /// `(x + s)^d · p(1/(x + s))` with `d = deg p`: reversal followed by a
    /// Taylor shift. Positive coefficients of the image prove `p > 0` on
    /// `(0, 1/s]` (or on `(0, ∞)` when `s = 0`).
    pub fn reciprocal_transform(&self, s: &Rational) -> Self {
        match self.degree() {
            None => Self::zero(),
            Some(d) => self.reversed(d).taylor_shift(s),
        }
    }
}

impl RationalPolynomial {
    pub fn from_rationals(coeffs: &[Rational]) -> Self {
        Self::new(coeffs.to_vec())
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn eval_at(&self, x: &Rational) -> Rational {
        self.eval(x)
    }

    pub fn to_interval_polynomial(&self) -> IntervalPolynomial {
        Polynomial::new(self.coeffs.iter().map(Coefficient::to_interval).collect())
    }

    /// Euclidean division `self = q·d + r` with `deg r < deg d`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let d = divisor
            .degree()
            .ok_or_else(|| Error::Domain("polynomial division by zero".into()))?;
        let lead = divisor.coeffs[d].clone();
        let mut rem = self.coeffs.clone();
        let Some(n) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if n < d {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![<Rational as Zero>::zero(); n - d + 1];
        for k in (0..=n - d).rev() {
            let q = &rem[k + d] / &lead;
            if !Zero::is_zero(&q) {
                for (j, c) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &q * c;
                }
            }
            quot[k] = q;
        }
        rem.truncate(d);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Exact quotient; errors when the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Domain("polynomial division is not exact".into()));
        }
        Ok(q)
    }

    /// Same polynomial scaled to leading coefficient 1.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lead) => self.scale(&lead.recip()),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.monic(), other.monic());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a
    }

    /// Number of strict sign changes in the coefficient sequence.
    pub fn sign_variations(&self) -> usize {
        let signs: Vec<bool> = self
            .coeffs
            .iter()
            .filter(|c| !Zero::is_zero(*c))
            .map(|c| c.is_positive())
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Cauchy bound: every real root lies in `[-B, B]`.
    pub fn cauchy_root_bound(&self) -> Option<Rational> {
        let lead = self.leading()?.abs();
        let max = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| c.abs() / &lead)
            .max()
            .unwrap_or_else(<Rational as Zero>::zero);
        Some(Rational::one() + max)
    }
}

impl<C: Coefficient + fmt::Display> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{i}")?,
            }
        }
        Ok(())
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
    fn arithmetic_basics() {
        assert_eq!(p(&[1, 1]).mul(&p(&[-1, 1])), p(&[-1, 0, 1]));
        assert_eq!(
            p(&[3, 2, 1]).add(&RationalPolynomial::zero()),
            p(&[3, 2, 1])
        );
        assert_eq!(p(&[1, 2]).sub(&p(&[1, 2])), RationalPolynomial::zero());
        assert_eq!(RationalPolynomial::zero().degree(), None);
        assert_eq!(p(&[0, 0, 0]).degree(), None);
        assert_eq!(p(&[1, 1]).pow(3), p(&[1, 3, 3, 1]));
    }

    #[test]
    fn derivative_basics() {
        assert_eq!(p(&[0, 0, 0, 1]).derivative(), p(&[0, 0, 3]));
        assert_eq!(p(&[7]).derivative(), RationalPolynomial::zero());
    }

    #[test]
    fn shift_and_reciprocal_small_cases() {
        let q = p(&[1, 2, 3]);
        assert_eq!(q.taylor_shift(&int(0)), q);
        // (x+1)^2 = x^2 + 2x + 1
        assert_eq!(p(&[0, 0, 1]).taylor_shift(&int(1)), p(&[1, 2, 1]));
        assert_eq!(p(&[0, 0, 1]).reciprocal_transform(&int(0)), p(&[1]));
        assert_eq!(p(&[1, 1]).reciprocal_transform(&int(1)), p(&[2, 1]));
    }

    #[test]
    fn euclidean_division() {
        let a = p(&[-1, 0, 0, 1]);
        let (q, r) = a.div_rem(&p(&[-1, 1])).unwrap();
        assert_eq!(q, p(&[1, 1, 1]));
        assert!(r.is_zero());
        let (q, r) = p(&[1, 0, 1]).div_rem(&p(&[0, 2])).unwrap();
        assert_eq!(q, RationalPolynomial::new(vec![int(0), rat(1, 2)]));
        assert_eq!(r, p(&[1]));
        assert!(p(&[1, 0, 1]).exact_div(&p(&[1, 1])).is_err());
        assert!(p(&[1]).div_rem(&RationalPolynomial::zero()).is_err());
    }

    #[test]
    fn square_substitution_and_scaling() {
        assert_eq!(p(&[1, 2]).in_square(), p(&[1, 0, 2]));
        assert_eq!(p(&[1, 1, 1]).scale_variable(&int(2)), p(&[1, 2, 4]));
    }

    #[test]
    fn interval_horner_contains_point_values() {
        let q = p(&[-1, 3, -2, 1]);
        let x = RationalInterval::new(rat(-1, 2), rat(3, 2)).unwrap();
        let enclosure = q.eval_interval(&x);
        for k in 0..=8 {
            let t = rat(-1, 2) + rat(k, 4);
            assert!(enclosure.contains(&q.eval_at(&t)));
        }
    }

    #[test]
    fn cauchy_bound_and_variations() {
        let q = p(&[-6, 11, -6, 1]); // roots 1, 2, 3
        assert_eq!(q.sign_variations(), 3);
        assert_eq!(q.cauchy_root_bound().unwrap(), int(12));
        assert_eq!(RationalPolynomial::zero().cauchy_root_bound(), None);
    }
}
