//! α stays between the two constants on (0.3, 2.57].

use std::sync::OnceLock;

use super::{
    alpha_transform, certified_sign, combine, finish_status, interval_truncates_to,
    positivity_check, strictly_less, BestConstants, CheckKind, CheckResult, CheckStatus,
    LemmaReport, VerifyConfig,
};
use crate::error::Result;
use crate::eval::eval_lampret;
use crate::exact::{int, rat, RationalInterval};
use crate::polyalg::{
    certify_reciprocal, sign_certificate_weak, RationalFunction, RationalPolynomial, SignRule,
    SignVerdict, UpperEnd,
};

/// Exact rational functions of r built from the Euler–Maclaurin form.
#[derive(Debug, Clone, PartialEq)]
pub struct Lemma3Functions {
    /// `m = 5` head minus remainder bound: a lower bound for S.
    pub z1: RationalFunction,
    /// `m = 4` head plus remainder bound: an upper bound for S.
    pub z2: RationalFunction,
    /// Reduced transforms of `z1` and `z2`.
    pub f1: RationalFunction,
    pub f2: RationalFunction,
    pub phi1: RationalPolynomial,
    pub psi1: RationalPolynomial,
    pub phi2: RationalPolynomial,
    pub psi2: RationalPolynomial,
}

/// `n² + r²` as a polynomial in r.
fn shifted_square(n: i64) -> RationalPolynomial {
    RationalPolynomial::from_ints(&[n * n, 0, 1])
}

/// Euler–Maclaurin form with index `m`, remainder bound added with the
/// given sign, over the common denominator `Π_{n<m}(n²+r²)²·(m²+r²)⁵`.
fn lampret_function(m: i64, sign: i64) -> RationalFunction {
    let q = shifted_square(m);
    let mut den = q.pow(5);
    for n in 1..m {
        den = den.mul(&shifted_square(n).pow(2));
    }
    let mut terms: Vec<(RationalPolynomial, RationalPolynomial)> = (1..m)
        .map(|n| {
            (
                RationalPolynomial::from_ints(&[2 * n]),
                shifted_square(n).pow(2),
            )
        })
        .collect();
    terms.push((RationalPolynomial::from_ints(&[1]), q.clone()));
    terms.push((RationalPolynomial::from_ints(&[m]), q.pow(2)));
    terms.push((
        RationalPolynomial::from_ints(&[3 * m * m, 0, -1]),
        q.pow(3).scale(&int(6)),
    ));
    terms.push((
        RationalPolynomial::from_ints(&[5 * m.pow(4), 0, 15 * m * m, 0, 6]).scale(&int(sign)),
        q.pow(5).scale(&int(16)),
    ));
    let mut num = RationalPolynomial::zero();
    for (n, d) in terms {
        num = num.add(
            &n.mul(
                &den.exact_div(&d)
                    .expect("term denominator divides the product"),
            ),
        );
    }
    RationalFunction::new(num, den).expect("nonzero denominator")
}

fn build() -> Result<Lemma3Functions> {
    let z1 = lampret_function(5, -1);
    let z2 = lampret_function(4, 1);
    let f1 = alpha_transform(&z1)?.reduced();
    let f2 = alpha_transform(&z2)?.reduced();
    let (phi1, psi1) = f1.derivative_numerator();
    let (phi2, psi2) = f2.derivative_numerator();
    Ok(Lemma3Functions {
        z1,
        z2,
        f1,
        f2,
        phi1,
        psi1,
        phi2,
        psi2,
    })
}

/// Memoized construction; the functions do not depend on any precision.
pub fn lemma3_functions() -> Result<&'static Lemma3Functions> {
    static CELL: OnceLock<std::result::Result<Lemma3Functions, crate::Error>> = OnceLock::new();
    CELL.get_or_init(build).as_ref().map_err(Clone::clone)
}

pub fn verify_lemma3(cfg: &VerifyConfig) -> LemmaReport {
    let fs = match lemma3_functions() {
        Ok(fs) => fs,
        Err(e) => {
            return LemmaReport::new(
                "lemma3",
                vec![CheckResult::from_error(
                    "z-construction",
                    CheckKind::Proved,
                    &e,
                )],
            )
        }
    };
    let checks = vec![
        construction(fs),
        side_condition(fs, cfg),
        phi1_certificate(fs),
        phi2_certificate(fs),
        endpoints(fs, cfg),
        psi_positivity(fs, cfg),
    ];
    LemmaReport::new("lemma3", checks)
}

/// Z₁ and Z₂ agree with the numeric evaluator's endpoints.
fn construction(fs: &Lemma3Functions) -> CheckResult {
    const NAME: &str = "z-construction";
    let mut bad = None;
    for r in [rat(3, 10), int(1), rat(257, 100), int(7)] {
        let (Ok(v5), Ok(v4)) = (eval_lampret(&r, 5), eval_lampret(&r, 4)) else {
            return CheckResult::inconclusive(NAME, CheckKind::Proved, "evaluation failed");
        };
        let z1 = fs.z1.eval(&r).ok();
        let z2 = fs.z2.eval(&r).ok();
        if z1.as_ref() != Some(v5.enclosure.lo()) || z2.as_ref() != Some(v4.enclosure.hi()) {
            bad = Some(r);
            break;
        }
    }
    match bad {
        None => CheckResult::verified(
            NAME,
            CheckKind::Proved,
            format!(
                "Z1 = {}-degree/{}-degree, Z2 = {}-degree/{}-degree; agree with the m = 5 lower and m = 4 upper endpoints",
                deg(fs.z1.num()),
                deg(fs.z1.den()),
                deg(fs.z2.num()),
                deg(fs.z2.den())
            ),
        ),
        Some(r) => CheckResult::falsified(
            NAME,
            CheckKind::Proved,
            format!("r = {r}"),
            "rational function disagrees with the Euler–Maclaurin evaluator",
        ),
    }
}

fn deg(p: &RationalPolynomial) -> String {
    p.degree().map_or_else(|| "-inf".into(), |d| d.to_string())
}

/// `Z₁ − 1/(r² + 1/2) > 0` for every `r > 0`.
fn side_condition(fs: &Lemma3Functions, cfg: &VerifyConfig) -> CheckResult {
    const NAME: &str = "z1-threshold";
    let threshold = RationalFunction::new(
        RationalPolynomial::from_ints(&[2]),
        RationalPolynomial::from_ints(&[1, 0, 2]),
    )
    .expect("nonzero");
    let diff = fs.z1.sub(&threshold).reduced();
    let zero = int(0);
    if certified_sign(diff.den(), &zero, &UpperEnd::Infinity, cfg.depth_cap) != Some(1) {
        return CheckResult::inconclusive(
            NAME,
            CheckKind::Proved,
            "denominator sign not certified",
        );
    }
    positivity_check(
        NAME,
        diff.num(),
        &zero,
        &UpperEnd::Infinity,
        cfg.depth_cap,
        "numerator of Z1 − 1/(r²+1/2)",
    )
}

fn phi1_certificate(fs: &Lemma3Functions) -> CheckResult {
    const NAME: &str = "phi1-certificate";
    let s = rat(100, 257);
    let cert = certify_reciprocal(&fs.phi1, &s);
    let (verdict, rule) = if cert.verdict == SignVerdict::Inconclusive {
        let weak = sign_certificate_weak(&cert.transformed);
        (weak.verdict, SignRule::Weak)
    } else {
        (cert.verdict, SignRule::Strict)
    };
    let detail = format!(
        "derived φ1 has degree {}; transformed with s = 100/257 has {} coefficients ({rule:?} rule)",
        deg(&fs.phi1),
        cert.transformed.coeffs().len()
    );
    match verdict {
        SignVerdict::AllNegative => CheckResult::verified(
            NAME,
            CheckKind::Proved,
            format!("{detail}, all negative: the Z1 transform decreases on (0, 2.57]"),
        ),
        _ => CheckResult::inconclusive(
            NAME,
            CheckKind::Proved,
            format!(
                "{detail}; coefficient {:?} not negative",
                cert.witness_index
            ),
        ),
    }
}

fn phi2_certificate(fs: &Lemma3Functions) -> CheckResult {
    const NAME: &str = "phi2-certificate";
    let direct = sign_certificate_weak(&fs.phi2);
    if direct.verdict == SignVerdict::AllNegative {
        return CheckResult::verified(
            NAME,
            CheckKind::Proved,
            format!(
                "derived φ2 has degree {} and no positive coefficient: the Z2 transform decreases on (0, ∞)",
                deg(&fs.phi2)
            ),
        );
    }
    let cert = certify_reciprocal(&fs.phi2, &rat(100, 257));
    let weak = sign_certificate_weak(&cert.transformed);
    if weak.verdict == SignVerdict::AllNegative {
        return CheckResult::verified(
            NAME,
            CheckKind::Proved,
            format!(
                "derived φ2 has degree {}; its s = 100/257 transform is all negative: decreasing on (0, 2.57]",
                deg(&fs.phi2)
            ),
        );
    }
    CheckResult::inconclusive(
        NAME,
        CheckKind::Proved,
        format!(
            "φ2 coefficient {:?} not negative, transform also inconclusive",
            direct.witness_index
        ),
    )
}

fn endpoints(fs: &Lemma3Functions, cfg: &VerifyConfig) -> CheckResult {
    const NAME: &str = "transform-endpoints";
    let bc = match BestConstants::compute(&cfg.zeta_width) {
        Ok(bc) => bc,
        Err(e) => return CheckResult::from_error(NAME, CheckKind::Proved, &e),
    };
    let (Ok(v1), Ok(v2)) = (fs.f1.eval(&rat(3, 10)), fs.f2.eval(&rat(257, 100))) else {
        return CheckResult::inconclusive(
            NAME,
            CheckKind::Proved,
            "transform undefined at an endpoint",
        );
    };
    let p1 = RationalInterval::point(v1.clone());
    let p2 = RationalInterval::point(v2.clone());
    let d1 = interval_truncates_to(&p1, 10, "0.9596637512");
    let d2 = interval_truncates_to(&p2, 10, "0.4360975104");
    let below = strictly_less(&p1, &RationalInterval::point(bc.a_star.lo().clone()));
    let above = strictly_less(&RationalInterval::point(bc.b_star.clone()), &p2);
    let text1 = crate::exact::to_decimal(&v1, 14, crate::exact::Rounding::Truncate);
    let text2 = crate::exact::to_decimal(&v2, 14, crate::exact::Rounding::Truncate);
    finish_status(
        NAME,
        CheckKind::Proved,
        combine([d1, d2, below, above]),
        Some(format!("F1(0.3) = {text1}, F2(2.57) = {text2}")),
        format!(
            "F1(0.3) = {text1}… (digits {d1}, < a* {below}); F2(2.57) = {text2}… (digits {d2}, > 13/30 {above})"
        ),
    )
}

/// ψ = D² is positive wherever D has no zero; certify that on (0, 2.57].
fn psi_positivity(fs: &Lemma3Functions, cfg: &VerifyConfig) -> CheckResult {
    const NAME: &str = "psi-positivity";
    let hi = rat(257, 100);
    let mut statuses = Vec::new();
    let mut detail = Vec::new();
    for (label, f) in [("ψ1", &fs.f1), ("ψ2", &fs.f2)] {
        let d = f.den();
        let sign = certified_sign(d, &int(0), &UpperEnd::At(hi.clone()), cfg.depth_cap);
        let end = d.eval_at(&hi);
        let ok = sign.is_some_and(|s| {
            use num_traits::Signed;
            (s > 0 && end.is_positive()) || (s < 0 && end.is_negative())
        });
        let s = if ok {
            CheckStatus::Verified
        } else {
            CheckStatus::Inconclusive
        };
        detail.push(format!(
            "{label}: denominator sign {sign:?} on (0, 2.57] ({s})"
        ));
        statuses.push(s);
    }
    finish_status(
        NAME,
        CheckKind::Proved,
        combine(statuses),
        None,
        detail.join("; "),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn endpoint_values_truncate_to_known_digits() {
        let fs = lemma3_functions().unwrap();
        let v1 = fs.f1.eval(&rat(3, 10)).unwrap();
        let v2 = fs.f2.eval(&rat(257, 100)).unwrap();
        assert!(super::super::truncates_to(&v1, 10, "0.9596637512"));
        assert!(super::super::truncates_to(&v2, 10, "0.4360975104"));
    }

    #[test]
    fn z_functions_match_evaluator() {
        let fs = lemma3_functions().unwrap();
        let r = rat(3, 2);
        assert_eq!(
            &fs.z1.eval(&r).unwrap(),
            eval_lampret(&r, 5).unwrap().enclosure.lo()
        );
        assert_eq!(
            &fs.z2.eval(&r).unwrap(),
            eval_lampret(&r, 4).unwrap().enclosure.hi()
        );
    }
}
