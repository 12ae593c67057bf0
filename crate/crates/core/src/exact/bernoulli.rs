use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

fn cache() -> &'static Mutex<Vec<Rational>> {
    static CACHE: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![Rational::one()]))
}

/// Signed Bernoulli number `b_m` with `b_1 = -1/2`, from
/// `Σ_{j=0}^{m} C(m+1, j) b_j = 0`.
pub fn signed_bernoulli(m: usize) -> Rational {
    let mut table = cache().lock().unwrap_or_else(|e| e.into_inner());
    while table.len() <= m {
        let n = table.len();
        // C(n+1, j) for j = 0..n, built incrementally.
        let mut binom = BigInt::one();
        let mut acc = Rational::zero();
        for (j, b) in table.iter().enumerate() {
            acc += b * Rational::from_integer(binom.clone());
            binom = binom * BigInt::from(n + 1 - j) / BigInt::from(j + 1);
        }
        let b_n = -acc / Rational::from_integer(BigInt::from(n + 1));
        table.push(b_n);
    }
    table[m].clone()
}

/// `B_{2i}` in the all-positive convention
/// `x/(eˣ−1) = 1 − x/2 + B₂x²/2! − B₄x⁴/4! + …`, so `B₂ = 1/6, B₄ = 1/30`.
pub fn bernoulli(i: usize) -> Result<Rational> {
    if i == 0 {
        return Err(Error::Domain("bernoulli index must be >= 1".into()));
    }
    let b = signed_bernoulli(2 * i);
    Ok(if i % 2 == 1 { b } else { -b })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    fn binomial(n: usize, k: usize) -> BigInt {
        (0..k).fold(BigInt::one(), |acc, j| acc * (n - j) / (j + 1))
    }

    #[test]
    fn positive_convention_values() {
        assert_eq!(bernoulli(1).unwrap(), rat(1, 6));
        assert_eq!(bernoulli(2).unwrap(), rat(1, 30));
        assert_eq!(bernoulli(3).unwrap(), rat(1, 42));
        assert_eq!(bernoulli(4).unwrap(), rat(1, 30));
        assert_eq!(bernoulli(5).unwrap(), rat(5, 66));
        assert_eq!(bernoulli(6).unwrap(), rat(691, 2730));
        assert_eq!(bernoulli(7).unwrap(), rat(7, 6));
        assert_eq!(
            bernoulli(0),
            Err(Error::Domain("bernoulli index must be >= 1".into()))
        );
    }

    #[test]
    fn signed_values_and_odd_zeros() {
        assert_eq!(signed_bernoulli(1), rat(-1, 2));
        assert_eq!(signed_bernoulli(4), rat(-1, 30));
        for m in (3..40).step_by(2) {
            assert!(signed_bernoulli(m).is_zero());
        }
    }

    #[test]
    fn defining_recurrence_holds() {
        for m in 2..40 {
            let sum = (0..m).fold(Rational::zero(), |acc, j| {
                acc + Rational::from_integer(binomial(m, j)) * signed_bernoulli(j)
            });
            assert!(sum.is_zero(), "m = {m}");
        }
    }

    #[test]
    fn concurrent_access_agrees() {
        let handles: Vec<_> = (0..8)
            .map(|t| std::thread::spawn(move || signed_bernoulli(30 + 2 * t)))
            .collect();
        let values: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        for (t, v) in values.iter().enumerate() {
            assert_eq!(*v, signed_bernoulli(30 + 2 * t));
        }
    }
}
