//! Coefficient-sign certificates and the bisection fallback.
//!
//! A polynomial whose coefficients are all positive is positive on
//! `(0, ∞)`. Composing with a Taylor shift or a reciprocal transform moves
//! that ray onto the range of interest:
//!
//! * `p(x + c)` all positive ⇒ `p > 0` on `(c, ∞)`;
//! * `(x + s)^d p(1/(x + s))` all positive ⇒ `p > 0` on `(0, 1/s]`.

use num_traits::{One, Signed, Zero};

use super::poly::{Coefficient, Polynomial, RationalPolynomial};
use crate::exact::{Rational, RationalInterval};

pub const DEFAULT_DEPTH_CAP: u32 = 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignVerdict {
    AllPositive,
    AllNegative,
    Inconclusive,
}

/// How the inspected polynomial was obtained from the original one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateTransform {
    Identity,
    TaylorShift,
    Reciprocal,
}

/// Coefficient rule used for the verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignRule {
    /// Every coefficient strictly signed.
    Strict,
    /// Every coefficient signed or zero, at least one nonzero. Still proves
    /// a strict sign for `x > 0`.
    Weak,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SignCertificate<C: Coefficient> {
    pub verdict: SignVerdict,
    pub rule: SignRule,
    pub transform: CertificateTransform,
    pub shift: Rational,
    pub transformed: Polynomial<C>,
    /// First offending coefficient index when inconclusive.
    pub witness_index: Option<usize>,
}

impl<C: Coefficient> SignCertificate<C> {
    fn inspect(
        transformed: Polynomial<C>,
        transform: CertificateTransform,
        shift: Rational,
        rule: SignRule,
    ) -> Self {
        let coeffs = transformed.coeffs();
        let positive = |c: &C| match rule {
            SignRule::Strict => c.lower().is_positive(),
            SignRule::Weak => !c.lower().is_negative(),
        };
        let negative = |c: &C| match rule {
            SignRule::Strict => c.upper().is_negative(),
            SignRule::Weak => !c.upper().is_positive(),
        };
        // the weak rule still needs one coefficient bounded away from zero
        let some_pos = coeffs.iter().any(|c| c.lower().is_positive());
        let some_neg = coeffs.iter().any(|c| c.upper().is_negative());
        let (verdict, witness_index) = if coeffs.is_empty() {
            (SignVerdict::Inconclusive, Some(0))
        } else if some_pos && coeffs.iter().all(positive) {
            (SignVerdict::AllPositive, None)
        } else if some_neg && coeffs.iter().all(negative) {
            (SignVerdict::AllNegative, None)
        } else {
            // blame the first coefficient breaking the sign of the first
            // definite one
            let expect_pos = coeffs
                .iter()
                .find(|c| c.lower().is_positive() || c.upper().is_negative())
                .is_none_or(|c| c.lower().is_positive());
            let idx = coeffs
                .iter()
                .position(|c| {
                    if expect_pos {
                        !positive(c)
                    } else {
                        !negative(c)
                    }
                })
                .unwrap_or(0);
            (SignVerdict::Inconclusive, Some(idx))
        };
        Self {
            verdict,
            rule,
            transform,
            shift,
            transformed,
            witness_index,
        }
    }
}

/// Strict coefficient-sign check of `p` itself.
pub fn sign_certificate<C: Coefficient>(p: &Polynomial<C>) -> SignCertificate<C> {
    SignCertificate::inspect(
        p.clone(),
        CertificateTransform::Identity,
        <Rational as Zero>::zero(),
        SignRule::Strict,
    )
}

/// As [`sign_certificate`] with the weak rule (zero coefficients allowed).
pub fn sign_certificate_weak<C: Coefficient>(p: &Polynomial<C>) -> SignCertificate<C> {
    SignCertificate::inspect(
        p.clone(),
        CertificateTransform::Identity,
        <Rational as Zero>::zero(),
        SignRule::Weak,
    )
}

/// Certificate for the ray `(c, ∞)`: inspects `p(x + c)`.
pub fn certify_ray<C: Coefficient>(p: &Polynomial<C>, c: &Rational) -> SignCertificate<C> {
    SignCertificate::inspect(
        p.taylor_shift(c),
        CertificateTransform::TaylorShift,
        c.clone(),
        SignRule::Strict,
    )
}

/// Certificate for `(0, 1/s]`: inspects `(x + s)^d p(1/(x + s))`.
pub fn certify_reciprocal<C: Coefficient>(p: &Polynomial<C>, s: &Rational) -> SignCertificate<C> {
    SignCertificate::inspect(
        p.reciprocal_transform(s),
        CertificateTransform::Reciprocal,
        s.clone(),
        SignRule::Strict,
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PositivityVerdict {
    ProvedPositive,
    NegativeSomewhere { witness: Rational },
    Inconclusive,
}

/// Upper end of a positivity range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UpperEnd {
    At(Rational),
    Infinity,
}

/// Decides whether `p > 0` on the open interval `(lo, hi)`.
///
/// Tries the one-shot certificates first, then bisects with interval Horner
/// evaluation and Descartes-style checks on each piece. Never claims
/// positivity it has not proved; hitting `depth_cap` yields `Inconclusive`.
pub fn positivity_on_interval(
    p: &RationalPolynomial,
    lo: &Rational,
    hi: &UpperEnd,
    depth_cap: u32,
) -> PositivityVerdict {
    if let UpperEnd::At(h) = hi {
        if h <= lo {
            return PositivityVerdict::Inconclusive;
        }
    }
    if p.is_zero() {
        return PositivityVerdict::NegativeSomewhere {
            witness: match hi {
                UpperEnd::At(h) => (lo + h) / Rational::from_integer(2.into()),
                UpperEnd::Infinity => lo + Rational::one(),
            },
        };
    }
    match hi {
        UpperEnd::At(h) => bounded(p, lo, h, depth_cap),
        UpperEnd::Infinity => unbounded(p, lo, depth_cap),
    }
}

fn weakly_positive(p: &RationalPolynomial) -> bool {
    sign_certificate_weak(p).verdict == SignVerdict::AllPositive
}

fn unbounded(p: &RationalPolynomial, lo: &Rational, depth_cap: u32) -> PositivityVerdict {
    if weakly_positive(&p.taylor_shift(lo)) {
        return PositivityVerdict::ProvedPositive;
    }
    let lead_negative = p.leading().is_some_and(|c| c.is_negative());
    if lead_negative {
        // p → -∞; walk out until a negative value shows up
        let mut step = Rational::one();
        loop {
            let x = lo + &step;
            if p.eval_at(&x).is_negative() {
                return PositivityVerdict::NegativeSomewhere { witness: x };
            }
            step *= Rational::from_integer(2.into());
        }
    }
    // no real root beyond the Cauchy bound and the leading coefficient is
    // positive, so p > 0 on (B, ∞)
    let bound = p.cauchy_root_bound().expect("nonzero polynomial");
    if &bound <= lo {
        return PositivityVerdict::ProvedPositive;
    }
    bounded(p, lo, &bound, depth_cap)
}

/// Proves `p > 0` on `(a, b]` by a reciprocal certificate on the
/// rescaled polynomial `q(t) = p(a + (b − a) t)`.
fn piece_certificate(p: &RationalPolynomial, a: &Rational, b: &Rational) -> bool {
    let q = p.taylor_shift(a).scale_variable(&(b - a));
    let t = q.reciprocal_transform(&Rational::one());
    t.coeff(0).is_positive() && weakly_positive(&t)
}

fn bounded(
    p: &RationalPolynomial,
    lo: &Rational,
    hi: &Rational,
    depth_cap: u32,
) -> PositivityVerdict {
    let mut stack = vec![(lo.clone(), hi.clone(), 0u32)];
    let mut exhausted = false;
    while let Some((a, b, depth)) = stack.pop() {
        let range = RationalInterval::new(a.clone(), b.clone()).expect("ordered");
        if p.eval_interval(&range).is_positive() || piece_certificate(p, &a, &b) {
            continue;
        }
        let mid = range.midpoint();
        if p.eval_at(&mid).is_negative() {
            return PositivityVerdict::NegativeSomewhere { witness: mid };
        }
        if depth >= depth_cap {
            exhausted = true;
            continue;
        }
        // left half on top so it is explored first
        stack.push((mid.clone(), b, depth + 1));
        stack.push((a, mid, depth + 1));
    }
    if exhausted {
        PositivityVerdict::Inconclusive
    } else {
        PositivityVerdict::ProvedPositive
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
    fn trivial_sign_certificates() {
        assert_eq!(
            sign_certificate(&p(&[1, 1])).verdict,
            SignVerdict::AllPositive
        );
        assert_eq!(
            sign_certificate(&p(&[-1, 0, -1])).verdict,
            SignVerdict::Inconclusive
        );
        assert_eq!(
            sign_certificate_weak(&p(&[-1, 0, -1])).verdict,
            SignVerdict::AllNegative
        );
        assert_eq!(
            sign_certificate(&p(&[-1, -2, -1])).verdict,
            SignVerdict::AllNegative
        );
        let mixed = sign_certificate(&p(&[1, 2, -3, 4]));
        assert_eq!(mixed.verdict, SignVerdict::Inconclusive);
        assert_eq!(mixed.witness_index, Some(2));
        let zero = sign_certificate(&RationalPolynomial::zero());
        assert_eq!(zero.verdict, SignVerdict::Inconclusive);
    }

    #[test]
    fn ray_certificate_proves_shifted_positivity() {
        // (x - 1)^2 + 1/10 shifted by 1 is x^2 + 1/10
        let q = p(&[1, -2, 1]).add(&RationalPolynomial::constant(rat(1, 10)));
        let cert = certify_ray(&q, &int(1));
        assert_eq!(cert.transformed.coeff(1), int(0));
        assert_eq!(cert.verdict, SignVerdict::Inconclusive);
        let cert = certify_ray(&q, &int(2));
        assert_eq!(cert.verdict, SignVerdict::AllPositive);
    }

    #[test]
    fn positivity_examples() {
        let inf = UpperEnd::Infinity;
        assert_eq!(
            positivity_on_interval(&p(&[1, 0, 1]), &int(0), &inf, DEFAULT_DEPTH_CAP),
            PositivityVerdict::ProvedPositive
        );
        assert_eq!(
            positivity_on_interval(
                &p(&[-1, 1]),
                &int(0),
                &UpperEnd::At(int(2)),
                DEFAULT_DEPTH_CAP
            ),
            PositivityVerdict::NegativeSomewhere { witness: rat(1, 2) }
        );
    }

    #[test]
    fn positivity_needs_bisection() {
        // (x - 1)^2 + 1/1000 on (0, 3): positive, not certifiable in one shot
        let q = p(&[1, -2, 1]).add(&RationalPolynomial::constant(rat(1, 1000)));
        assert_eq!(
            positivity_on_interval(&q, &int(0), &UpperEnd::At(int(3)), DEFAULT_DEPTH_CAP),
            PositivityVerdict::ProvedPositive
        );
        assert_eq!(
            positivity_on_interval(&q, &int(-5), &UpperEnd::Infinity, DEFAULT_DEPTH_CAP),
            PositivityVerdict::ProvedPositive
        );
    }

    #[test]
    fn double_root_is_inconclusive_not_false() {
        let q = p(&[1, -2, 1]);
        assert_eq!(
            positivity_on_interval(&q, &int(0), &UpperEnd::At(int(2)), 12),
            PositivityVerdict::Inconclusive
        );
    }

    #[test]
    fn negative_leading_coefficient_finds_witness() {
        let q = p(&[5, 0, -1]);
        match positivity_on_interval(&q, &int(0), &UpperEnd::Infinity, DEFAULT_DEPTH_CAP) {
            PositivityVerdict::NegativeSomewhere { witness } => {
                assert!(q.eval_at(&witness).is_negative())
            }
            other => panic!("{other:?}"),
        }
    }
}
