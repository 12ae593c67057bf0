//! α is decreasing on (0, 0.3] and stays between the two constants there.

use super::{
    combine, finish_status, is_positive_interval, strictly_less, BestConstants, CheckKind,
    CheckResult, CheckStatus, LemmaReport, VerifyConfig,
};
use crate::error::Result;
use crate::eval::{alpha, Method, MethodConfig};
use crate::exact::{int, pow10, rat, zeta_enclosure, AccuracyRequest, Rational, RationalInterval};
use crate::polyalg::{
    certify_reciprocal, IntervalPolynomial, Polynomial, RationalPolynomial, SignCertificate,
    SignVerdict,
};

fn zetas(width: &Rational) -> Result<Vec<RationalInterval>> {
    let acc = AccuracyRequest::new(width.clone())?;
    // index i holds ζ(2i + 3)
    (0..12).map(|i| zeta_enclosure(2 * i + 3, &acc)).collect()
}

/// Even polynomial `Σ c_j r^{2j}` with interval coefficients.
fn even(coeffs: Vec<RationalInterval>) -> IntervalPolynomial {
    let mut full = Vec::with_capacity(2 * coeffs.len());
    for (j, c) in coeffs.into_iter().enumerate() {
        if j > 0 {
            full.push(RationalInterval::zero());
        }
        full.push(c);
    }
    Polynomial::new(full)
}

fn lifted(c: &[i64], half: Option<usize>) -> IntervalPolynomial {
    let mut p = RationalPolynomial::from_ints(c);
    if let Some(i) = half {
        let mut coeffs = p.coeffs().to_vec();
        coeffs[i] += rat(1, 2);
        p = RationalPolynomial::new(coeffs);
    }
    p.to_interval_polynomial()
}

/// The degree-16 lower bound Q for T on (0, 0.3], together with the
/// four-term lower bound of S used in it.
fn q_parts(zeta_width: &Rational) -> Result<(IntervalPolynomial, IntervalPolynomial)> {
    let z = zetas(zeta_width)?;
    let (z3, z5, z7, z9) = (&z[0], &z[1], &z[2], &z[3]);
    let s_lower = even(vec![
        z3.scale(&int(2)),
        z5.scale(&int(-4)),
        z7.scale(&int(6)),
        z9.scale(&int(-8)),
    ]);
    let s_upper = even(vec![
        z3.scale(&int(2)),
        z5.scale(&int(-4)),
        z7.scale(&int(6)),
    ]);
    let c_upper = even(vec![
        z5.scale(&int(2)),
        z7.scale(&int(-6)),
        z9.scale(&int(12)),
    ]);
    // 3r⁴ + 3r² + 1/2, 6r² + 2, 2r² + 1/2
    let a = lifted(&[0, 0, 3, 0, 3], Some(0));
    let b = lifted(&[2, 0, 6], None);
    let k = lifted(&[0, 0, 2], Some(0));
    let q = a
        .mul(&s_lower.mul(&s_lower))
        .sub(&b.mul(&s_upper))
        .sub(&k.mul(&c_upper))
        .add(&Polynomial::constant(RationalInterval::point(int(3))));
    Ok((q, s_lower))
}

pub fn q_polynomial(zeta_width: &Rational) -> Result<IntervalPolynomial> {
    Ok(q_parts(zeta_width)?.0)
}

/// The reciprocal certificate of Q with shift 0, which does not separate
/// signs; used as a control for the certificate machinery.
pub fn lemma2_negative_control(zeta_width: &Rational) -> Result<SignCertificate<RationalInterval>> {
    Ok(certify_reciprocal(&q_polynomial(zeta_width)?, &rat(0, 1)))
}

pub fn verify_lemma2(cfg: &VerifyConfig) -> LemmaReport {
    let mut checks = vec![monotonicity(cfg)];
    match q_parts(&cfg.zeta_width) {
        Ok((q, s_lower)) => {
            checks.push(q_construction(&q, &s_lower));
            checks.push(q_certificate(&q));
        }
        Err(e) => {
            checks.push(CheckResult::from_error(
                "q-construction",
                CheckKind::Proved,
                &e,
            ));
            checks.push(CheckResult::from_error(
                "q-certificate",
                CheckKind::Proved,
                &e,
            ));
        }
    }
    checks.push(endpoints(cfg));
    LemmaReport::new("lemma2", checks)
}

/// `s_n` and `t_n` decrease at r = 0.3; their ratios grow with r, so this
/// covers every smaller r.
fn monotonicity(cfg: &VerifyConfig) -> CheckResult {
    const NAME: &str = "term-monotonicity";
    const TERMS: usize = 8;
    let z = match zetas(&cfg.zeta_width) {
        Ok(z) => z,
        Err(e) => return CheckResult::from_error(NAME, CheckKind::Proved, &e),
    };
    let r2 = rat(9, 100);
    let mut statuses = Vec::new();
    let mut witness = None;
    for n in 0..TERMS {
        let term = |n: usize, mu: u64| -> RationalInterval {
            let p = num_traits::pow(r2.clone(), n);
            let (coef, zeta) = if mu == 2 {
                (int(2 * n as i64 + 2), &z[n])
            } else {
                (int(((n + 1) * (n + 2)) as i64), &z[n + 1])
            };
            zeta.scale(&(coef * p))
        };
        for (label, mu) in [("s", 2), ("t", 3)] {
            let s = strictly_less(&term(n + 1, mu), &term(n, mu));
            if s != CheckStatus::Verified && witness.is_none() {
                witness = Some(format!("{label}_{} vs {label}_{n}", n + 1));
            }
            statuses.push(s);
        }
    }
    finish_status(
        NAME,
        CheckKind::Proved,
        combine(statuses),
        witness,
        format!("s_n, t_n strictly decreasing for n ≤ {TERMS} at r = 3/10"),
    )
}

fn q_construction(q: &IntervalPolynomial, s_lower: &IntervalPolynomial) -> CheckResult {
    const NAME: &str = "q-construction";
    let degree_ok = if q.degree() == Some(16) {
        CheckStatus::Verified
    } else {
        CheckStatus::Falsified
    };
    let q0 = q.coeff(0);
    let q0_pos = is_positive_interval(&q0);
    let lower_cert = certify_reciprocal(s_lower, &rat(10, 3));
    let lower_pos = if lower_cert.verdict == SignVerdict::AllPositive {
        CheckStatus::Verified
    } else {
        CheckStatus::Inconclusive
    };
    finish_status(
        NAME,
        CheckKind::Proved,
        combine([degree_ok, q0_pos, lower_pos]),
        Some(format!("deg Q = {:?}, Q(0) ∈ {}", q.degree(), q0.to_decimal_string(12))),
        format!(
            "deg Q = {:?} ({degree_ok}); Q(0) ∈ {} ({q0_pos}); four-term S bound > 0 on (0, 0.3] ({lower_pos})",
            q.degree(),
            q0.to_decimal_string(12)
        ),
    )
}

fn q_certificate(q: &IntervalPolynomial) -> CheckResult {
    const NAME: &str = "q-certificate";
    let cert = certify_reciprocal(q, &rat(10, 3));
    match cert.verdict {
        SignVerdict::AllPositive => CheckResult::verified(
            NAME,
            CheckKind::Proved,
            format!(
                "(r + 10/3)^16 Q(1/(r + 10/3)) has {} coefficients with positive lower bounds: Q > 0 on (0, 0.3]",
                cert.transformed.coeffs().len()
            ),
        ),
        _ => CheckResult::inconclusive(
            NAME,
            CheckKind::Proved,
            format!(
                "coefficient {:?} of the transformed Q is not certified positive",
                cert.witness_index
            ),
        )
        .with_witness(format!("coefficient index {:?}", cert.witness_index)),
    }
}

fn endpoints(cfg: &VerifyConfig) -> CheckResult {
    const NAME: &str = "alpha-endpoints";
    let bc = match BestConstants::compute(&cfg.zeta_width) {
        Ok(bc) => bc,
        Err(e) => return CheckResult::from_error(NAME, CheckKind::Spot, &e),
    };
    let at_03 = alpha(&rat(3, 10), &MethodConfig::combined(pow10(-12)));
    let small = MethodConfig::new(Method::ZetaSeries, None, pow10(-15)).expect("valid");
    let at_0 = alpha(&rat(1, 10_000), &small);
    let (a3, a0) = match (at_03, at_0) {
        (Ok(a), Ok(b)) => (a.enclosure, b.enclosure),
        (Err(e), _) | (_, Err(e)) => return CheckResult::from_error(NAME, CheckKind::Spot, &e),
    };
    let above = strictly_less(&RationalInterval::point(bc.b_star.clone()), &a3);
    let below = strictly_less(&a3, &RationalInterval::point(bc.a_star.lo().clone()));
    let gap = (&a0 - &bc.a_star).abs_max();
    let near = if gap <= pow10(-3) {
        CheckStatus::Verified
    } else {
        CheckStatus::Inconclusive
    };
    finish_status(
        NAME,
        CheckKind::Spot,
        combine([above, below, near]),
        Some(format!("α(0.3) ∈ {}", a3.to_decimal_string(12))),
        format!(
            "α(0.3) ∈ {} (> 13/30 {above}, < a* {below}); α(10⁻⁴) ∈ {} within {:.2e} of a* ({near})",
            a3.to_decimal_string(12),
            a0.to_decimal_string(12),
            crate::exact::to_f64(&gap)
        ),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negative_control_is_inconclusive() {
        let cert = lemma2_negative_control(&pow10(-20)).unwrap();
        assert_ne!(cert.verdict, SignVerdict::AllPositive);
    }

    #[test]
    fn q_has_degree_sixteen() {
        assert_eq!(q_polynomial(&pow10(-20)).unwrap().degree(), Some(16));
    }
}
