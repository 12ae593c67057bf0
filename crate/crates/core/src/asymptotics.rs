//! Truncated formal Laurent series in `x = 1/r²` and the large-`r`
//! expansions of S(r) and α(r).

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{bernoulli, int, rat, Rational};

/// `Σ_{i} c_i x^{valuation+i} + O(x^order)`.
///
/// `order == None` marks an exact finite sum. Every arithmetic result
/// carries the smallest order that is guaranteed correct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentSeries {
    valuation: i64,
    coeffs: Vec<Rational>,
    order: Option<i64>,
}

impl LaurentSeries {
    /// Series with known coefficients from `valuation` up to `order`
    /// (exclusive). Missing coefficients below `order` are zero.
    pub fn new(valuation: i64, mut coeffs: Vec<Rational>, order: i64) -> Result<Self> {
        let len =
            i64::try_from(coeffs.len()).map_err(|_| Error::Domain("too many terms".into()))?;
        if valuation + len > order {
            return Err(Error::Domain(format!(
                "{len} coefficients from x^{valuation} exceed order {order}"
            )));
        }
        coeffs.resize((order - valuation) as usize, Rational::zero());
        Ok(Self::normalize(valuation, coeffs, Some(order)))
    }

    /// Exact finite sum `Σ c_i x^{valuation+i}`.
    pub fn exact(valuation: i64, coeffs: Vec<Rational>) -> Self {
        Self::normalize(valuation, coeffs, None)
    }

    pub fn monomial(c: Rational, power: i64) -> Self {
        Self::exact(power, vec![c])
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    fn normalize(mut valuation: i64, mut coeffs: Vec<Rational>, order: Option<i64>) -> Self {
        let lead = coeffs.iter().position(|c| !c.is_zero());
        match lead {
            Some(i) => {
                coeffs.drain(..i);
                valuation += i as i64;
            }
            None => {
                coeffs.clear();
                valuation = order.unwrap_or(0);
            }
        }
        if order.is_none() {
            while coeffs.last().is_some_and(|c| c.is_zero()) {
                coeffs.pop();
            }
        }
        Self {
            valuation,
            coeffs,
            order,
        }
    }

    /// Lowest power with a nonzero coefficient; equals `order` when nothing
    /// is known to be nonzero.
    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    pub fn order(&self) -> Option<i64> {
        self.order
    }

    pub fn is_exact(&self) -> bool {
        self.order.is_none()
    }

    /// Coefficients from the valuation upward.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^power`; `None` when `power ≥ order`.
    pub fn coeff(&self, power: i64) -> Option<Rational> {
        if self.order.is_some_and(|o| power >= o) {
            return None;
        }
        let i = power - self.valuation;
        Some(if i < 0 {
            Rational::zero()
        } else {
            self.coeffs
                .get(i as usize)
                .cloned()
                .unwrap_or_else(Rational::zero)
        })
    }

    /// Known coefficients of `x^0 … x^{n-1}`.
    pub fn leading_coefficients(&self, n: usize) -> Result<Vec<Rational>> {
        (0..n as i64)
            .map(|p| {
                self.coeff(p).ok_or_else(|| {
                    Error::PrecisionInsufficient(format!("x^{p} lies beyond the series order"))
                })
            })
            .collect()
    }

    fn end(&self) -> i64 {
        self.order
            .unwrap_or(self.valuation + self.coeffs.len() as i64)
    }

    fn known(&self, power: i64) -> Rational {
        self.coeff(power).unwrap_or_else(Rational::zero)
    }

    /// Drops every term of power `≥ order`.
    pub fn truncated(&self, order: i64) -> Self {
        let order = self.order.map_or(order, |o| o.min(order));
        let coeffs = (self.valuation.min(order)..order)
            .map(|p| self.known(p))
            .collect();
        Self::normalize(self.valuation.min(order), coeffs, Some(order))
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = min_order(self.order, other.order);
        let lo = self.valuation.min(other.valuation);
        let end = order.unwrap_or_else(|| self.end().max(other.end()));
        let coeffs = (lo..end.max(lo))
            .map(|p| self.known(p) + other.known(p))
            .collect();
        Self::normalize(lo, coeffs, order)
    }

    pub fn neg(&self) -> Self {
        Self {
            valuation: self.valuation,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            order: self.order,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::normalize(
            self.valuation,
            self.coeffs.iter().map(|c| c * k).collect(),
            self.order,
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        let lo = self.valuation + other.valuation;
        let order = min_order(
            self.order.map(|o| o + other.valuation),
            other.order.map(|o| o + self.valuation),
        );
        let end = order.unwrap_or(self.end() + other.end() - 1);
        let mut coeffs = vec![Rational::zero(); (end - lo).max(0) as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                let k = i + j;
                if k < coeffs.len() {
                    coeffs[k] += a * b;
                }
            }
        }
        Self::normalize(lo, coeffs, order)
    }

    /// Reciprocal known through `relative` powers past its valuation.
    fn reciprocal(&self, relative: i64) -> Result<Self> {
        let b0 = self.coeffs.first().ok_or(Error::DivisionByZero)?.clone();
        let inv0 = b0.recip();
        let n = relative.max(0) as usize;
        let mut c: Vec<Rational> = Vec::with_capacity(n);
        for m in 0..n {
            if m == 0 {
                c.push(inv0.clone());
                continue;
            }
            let mut acc = Rational::zero();
            for j in 1..=m.min(self.coeffs.len() - 1) {
                acc += &self.coeffs[j] * &c[m - j];
            }
            c.push(-(&inv0 * acc));
        }
        Ok(Self::normalize(
            -self.valuation,
            c,
            Some(-self.valuation + relative),
        ))
    }

    /// `self / other`. An exact divisor must be a single monomial unless the
    /// dividend is truncated, whose relative precision then bounds the
    /// quotient.
    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.coeffs.is_empty() {
            return Err(Error::DivisionByZero);
        }
        let relative = match (other.order, self.order) {
            (Some(o), _) => o - other.valuation,
            (None, _) if other.coeffs.len() == 1 => {
                let k = other.coeffs[0].recip();
                let shifted = Self {
                    valuation: self.valuation - other.valuation,
                    coeffs: self.coeffs.clone(),
                    order: self.order.map(|o| o - other.valuation),
                };
                return Ok(shifted.scale(&k));
            }
            (None, Some(o)) => o - self.valuation,
            (None, None) => {
                return Err(Error::Precondition(
                    "dividing two exact series needs a truncation order".into(),
                ))
            }
        };
        Ok(self.mul(&other.reciprocal(relative)?))
    }

    /// `Σ c_i x^{valuation+i}` over the known coefficients.
    pub fn evaluate(&self, x: &Rational) -> Result<Rational> {
        if self.valuation < 0 && x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        Ok(acc * pow_i64(x, self.valuation))
    }
}

fn pow_i64(x: &Rational, e: i64) -> Rational {
    let base = if e < 0 { x.recip() } else { x.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

fn min_order(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, None) => a,
        (None, b) => b,
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c})x^{}", self.valuation + i as i64)?;
        }
        match self.order {
            Some(o) if first => write!(f, "O(x^{o})"),
            Some(o) => write!(f, " + O(x^{o})"),
            None if first => f.write_str("0"),
            None => Ok(()),
        }
    }
}

/// `x − Σ_{i=1..k} B_{2i} x^{i+1} + O(x^{k+2})`: the expansion of S(r) in
/// `x = 1/r²`.
pub fn s_series(k: usize) -> Result<LaurentSeries> {
    if k == 0 {
        return Err(Error::Domain("expansion order must be at least 1".into()));
    }
    let mut coeffs = vec![Rational::one()];
    for i in 1..=k {
        coeffs.push(-bernoulli(i)?);
    }
    LaurentSeries::new(1, coeffs, k as i64 + 2)
}

/// Formal image of the S expansion under
/// `S ↦ ((12x⁻² + 2x⁻¹ − 1)S − 12x⁻¹) / (12 − (12x⁻¹ + 6)S)`.
///
/// With `s_series(k)` as input the result is known through `x^{k-2}`.
pub fn alpha_series(k: usize) -> Result<LaurentSeries> {
    if k < 3 {
        return Err(Error::InsufficientOrder { required_k: 3 });
    }
    let s = s_series(k)?;
    let x_inv = |c: i64| LaurentSeries::monomial(int(c), -1);
    let num_factor = LaurentSeries::exact(-2, vec![int(12), int(2), int(-1)]);
    let num = num_factor.mul(&s).sub(&x_inv(12));
    let den_factor = x_inv(12).add(&LaurentSeries::constant(int(6)));
    let den = LaurentSeries::constant(int(12)).sub(&den_factor.mul(&s));
    num.div(&den)
}

/// First `n` coefficients `a_0 … a_{n-1}` of `α(r) ∼ Σ a_j r^{-2j}`.
pub fn alpha_coefficients(n: usize) -> Result<Vec<Rational>> {
    if n == 0 {
        return Err(Error::Domain("at least one coefficient required".into()));
    }
    let k = (n + 1).max(3);
    alpha_series(k)?.leading_coefficients(n)
}

/// Smallest `k` for which [`alpha_series`] resolves `n` coefficients.
pub fn required_k(n: usize) -> usize {
    (n + 1).max(3)
}

/// `1/(r² + 1/2 − (4r²+1)/12 · (r² + A)⁻¹)` where `A` is the truncated α
/// series evaluated at `x = 1/r²`.
pub fn nested_approximant(alpha_trunc: &LaurentSeries, r: &Rational) -> Result<Rational> {
    if *r <= Rational::zero() {
        return Err(Error::Domain(format!("r must be positive, got {r}")));
    }
    if alpha_trunc.valuation() < 0 && !alpha_trunc.coeffs().is_empty() {
        return Err(Error::Precondition(
            "α truncation must have nonnegative valuation".into(),
        ));
    }
    let r2 = r * r;
    let a = alpha_trunc.evaluate(&r2.recip())?;
    let shifted = &r2 + a;
    if shifted.is_zero() {
        return Err(Error::Domain("r² + α vanishes".into()));
    }
    let inner = &r2 + rat(1, 2) - (int(4) * &r2 + int(1)) / (int(12) * shifted);
    if inner.is_zero() {
        return Err(Error::Domain("nested denominator vanishes".into()));
    }
    Ok(inner.recip())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s_series_coefficients() {
        let s = s_series(5).unwrap();
        assert_eq!(s.valuation(), 1);
        assert_eq!(s.order(), Some(7));
        let expected = [
            int(1),
            rat(-1, 6),
            rat(-1, 30),
            rat(-1, 42),
            rat(-1, 30),
            rat(-5, 66),
        ];
        assert_eq!(s.coeffs(), &expected);
        assert_eq!(s_series(6).unwrap().coeff(7), Some(rat(-691, 2730)));
        assert_eq!(s_series(1).unwrap().coeffs(), &[int(1), rat(-1, 6)]);
    }

    #[test]
    fn identity_division() {
        let x = LaurentSeries::monomial(int(1), 1);
        let q = x.div(&x).unwrap();
        assert_eq!(q, LaurentSeries::constant(int(1)));
        let t = x.truncated(4);
        let q = t.div(&t).unwrap();
        assert_eq!(q.valuation(), 0);
        assert_eq!(q.order(), Some(3));
        assert_eq!(q.coeffs(), &[int(1), int(0), int(0)]);
    }

    #[test]
    fn difference_of_squares() {
        let a = LaurentSeries::exact(0, vec![int(1), int(1)]);
        let b = LaurentSeries::exact(0, vec![int(1), int(-1)]);
        assert_eq!(
            a.mul(&b),
            LaurentSeries::exact(0, vec![int(1), int(0), int(-1)])
        );
        let ta = a.truncated(2);
        let p = ta.mul(&b);
        assert_eq!(p.order(), Some(2));
        assert_eq!(p.coeffs(), &[int(1), int(0)]);
    }

    #[test]
    fn geometric_reciprocal() {
        let one_minus_x = LaurentSeries::new(0, vec![int(1), int(-1)], 6).unwrap();
        let inv = LaurentSeries::constant(int(1)).div(&one_minus_x).unwrap();
        assert_eq!(inv.order(), Some(6));
        assert_eq!(inv.coeffs(), &vec![int(1); 6][..]);
    }

    #[test]
    fn alpha_denominator_valuation() {
        let s = s_series(4).unwrap();
        let den = LaurentSeries::constant(int(12)).sub(
            &LaurentSeries::monomial(int(12), -1)
                .add(&LaurentSeries::constant(int(6)))
                .mul(&s),
        );
        assert_eq!(den.valuation(), 1);
        assert_eq!(den.coeff(1), Some(int(-4)));
    }

    #[test]
    fn alpha_coefficients_match_known_values() {
        let a = alpha_coefficients(4).unwrap();
        assert_eq!(
            a,
            vec![
                rat(13, 30),
                rat(104, 525),
                rat(592, 2625),
                rat(404_032, 1_010_625)
            ]
        );
        assert_eq!(alpha_series(5).unwrap().order(), Some(4));
        assert!(matches!(
            alpha_series(2),
            Err(Error::InsufficientOrder { required_k: 3 })
        ));
    }

    #[test]
    fn alpha_coefficients_stable_in_k() {
        let base = alpha_series(8).unwrap().leading_coefficients(7).unwrap();
        for k in 9..12 {
            let more = alpha_series(k).unwrap().leading_coefficients(7).unwrap();
            assert_eq!(base, more);
        }
    }

    #[test]
    fn zero_divisor_rejected() {
        let zero = LaurentSeries::new(0, vec![], 3).unwrap();
        assert!(LaurentSeries::constant(int(1)).div(&zero).is_err());
    }

    #[test]
    fn nested_with_constant_term() {
        let c = LaurentSeries::constant(rat(13, 30));
        assert_eq!(nested_approximant(&c, &int(1)).unwrap(), rat(43, 52));
    }
}
