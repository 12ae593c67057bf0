//! α is decreasing beyond 2.57 and stays between the two constants there.

use num_traits::Signed;

use super::{
    alpha_transform, certified_sign, combine, finish_status, interval_truncates_to,
    positivity_check, strictly_less, BestConstants, CheckKind, CheckResult, CheckStatus,
    LemmaReport, VerifyConfig,
};
use crate::eval::{alpha, t_function, MethodConfig};
use crate::exact::{
    bernoulli, half_integer_binomial, int, parse_rational, pi_enclosure, pow10, rat,
    AccuracyRequest, Rational, RationalInterval,
};
use crate::polyalg::{
    sign_certificate, RationalFunction, RationalPolynomial, SignVerdict, UpperEnd,
};

/// Coefficients of `P(r + 2.57)` as printed, constant term first.
pub const P_SHIFTED_DISPLAY: [&str; 9] = [
    "5236655690345652768413/1970718750000000000000",
    "263340412300075879103/821132812500000000",
    "62685536289049749/111718750000000",
    "8482041695506649/18949218750000",
    "32175150922307/151593750000",
    "1584201713/24609375",
    "12123418/984375",
    "53456/39375",
    "104/1575",
];

/// Rational coarsenings of the `k = 3` remainder used to build G and K.
#[derive(Debug, Clone, PartialEq)]
pub struct Lemma1Constants {
    /// `1/42 + (π/2)·C(7/2,3)·B₆` must stay below this.
    pub lower_coarse: Rational,
    /// `(π/2)·C(7/2,3)·B₆ − 1/42` must stay below this.
    pub upper_coarse: Rational,
}

impl Default for Lemma1Constants {
    fn default() -> Self {
        Self {
            lower_coarse: rat(53, 500),
            upper_coarse: rat(3, 50),
        }
    }
}

/// `Σ c_i r^{-2(i+1)}` over a common denominator `r^{2n}`.
fn inverse_even_powers(coeffs: &[Rational]) -> RationalFunction {
    let n = coeffs.len();
    let mut num = vec![Rational::from_integer(0.into()); 2 * n - 1];
    for (i, c) in coeffs.iter().enumerate() {
        num[2 * (n - 1 - i)] = c.clone();
    }
    RationalFunction::new(
        RationalPolynomial::new(num),
        RationalPolynomial::monomial(int(1), 2 * n),
    )
    .expect("nonzero denominator")
}

/// `G(r) = 1/r² − 1/(6r⁴) − 1/(30r⁶) − c/r⁸`, a lower bound for S on r > 1
/// when `c = 53/500`.
pub fn g_function(c: &Rational) -> RationalFunction {
    inverse_even_powers(&[int(1), rat(-1, 6), rat(-1, 30), -c.clone()])
}

/// `K(r) = 1/r² − 1/(6r⁴) − 1/(30r⁶) + c/r⁸`, an upper bound for S when
/// `c = 3/50`.
pub fn k_function(c: &Rational) -> RationalFunction {
    inverse_even_powers(&[int(1), rat(-1, 6), rat(-1, 30), c.clone()])
}

/// The degree-8 polynomial whose positivity beyond 2.57 yields T(r) > 0.
pub fn p_polynomial() -> RationalPolynomial {
    RationalPolynomial::from_rationals(&[
        rat(-11_997_107, 4_204_200),
        rat(-1051, 800),
        rat(-16_728_577, 1_576_575),
        rat(-1051, 200),
        rat(23171, 80850),
        int(0),
        rat(164, 1575),
        int(0),
        rat(104, 1575),
    ])
}

fn displayed_g_transform() -> RationalFunction {
    RationalFunction::new(
        RationalPolynomial::from_ints(&[-159, 0, 268, 0, 1758, 0, 2600]),
        RationalPolynomial::from_ints(&[-954, 0, -2208, 0, -2100, 0, 6000]),
    )
    .expect("nonzero")
}

fn displayed_k_transform() -> RationalFunction {
    RationalFunction::new(
        RationalPolynomial::from_ints(&[9, 0, -23, 0, -123, 0, 260]),
        RationalPolynomial::from_ints(&[54, 0, 78, 0, -210, 0, 600]),
    )
    .expect("nonzero")
}

pub fn verify_lemma1(cfg: &VerifyConfig) -> LemmaReport {
    verify_lemma1_with(cfg, &Lemma1Constants::default())
}

pub fn verify_lemma1_with(cfg: &VerifyConfig, consts: &Lemma1Constants) -> LemmaReport {
    let best = BestConstants::compute(&cfg.zeta_width);
    let mut checks = vec![remainder_constants(consts), g_threshold(consts, cfg)];
    match &best {
        Ok(bc) => checks.push(g_transform_bound(consts, bc, cfg)),
        Err(e) => checks.push(CheckResult::from_error("eq5-bound", CheckKind::Proved, e)),
    }
    checks.push(simplification(consts));
    checks.push(limits(consts));
    checks.push(p_certificate());
    checks.push(t_grid(cfg));
    match &best {
        Ok(bc) => checks.push(endpoint(bc)),
        Err(e) => checks.push(CheckResult::from_error(
            "alpha-endpoint",
            CheckKind::Spot,
            e,
        )),
    }
    LemmaReport::new("lemma1", checks)
}

fn remainder_constants(consts: &Lemma1Constants) -> CheckResult {
    const NAME: &str = "remainder-constants";
    let acc = AccuracyRequest::new(pow10(-30)).expect("positive");
    let pi = match pi_enclosure(&acc) {
        Ok(p) => p,
        Err(e) => return CheckResult::from_error(NAME, CheckKind::Proved, &e),
    };
    let coeff = |k: u32| -> RationalInterval {
        let b = bernoulli(k as usize).expect("k >= 1");
        let c = half_integer_binomial(k).expect("k >= 1");
        pi.scale(&(c * b / int(2)))
    };
    let c3 = coeff(3);
    let c6 = coeff(6);
    let b6 = rat(1, 42);
    let point = |q: Rational| RationalInterval::point(q);
    let items = [
        (
            "1/42 + (π/2)C(7/2,3)B6 < lower coarsening",
            c3.add_scalar(&b6),
            point(consts.lower_coarse.clone()),
        ),
        (
            "(π/2)C(7/2,3)B6 − 1/42 < upper coarsening",
            c3.add_scalar(&-b6.clone()),
            point(consts.upper_coarse.clone()),
        ),
        (
            "(π/2)C(13/2,6)B12 < 1 + 691/2730",
            c6.clone(),
            point(int(1) + rat(691, 2730)),
        ),
        (
            "(π/2)C(13/2,6)B12 < (3967 − 691)/2730",
            c6,
            point(rat(3967 - 691, 2730)),
        ),
    ];
    let mut statuses = Vec::new();
    let mut detail = Vec::new();
    let mut witness = None;
    for (label, lhs, rhs) in items {
        let s = strictly_less(&lhs, &rhs);
        if s == CheckStatus::Falsified && witness.is_none() {
            witness = Some(format!(
                "{label}: lhs ∈ {}, rhs = {}",
                lhs.to_decimal_string(12),
                rhs.lo()
            ));
        }
        detail.push(format!("{label}: {s}"));
        statuses.push(s);
    }
    finish_status(
        NAME,
        CheckKind::Proved,
        combine(statuses),
        witness,
        detail.join("; "),
    )
}

/// `G(r) − 1/(r² + 1/2) > 0` for `r > 1`.
fn g_threshold(consts: &Lemma1Constants, cfg: &VerifyConfig) -> CheckResult {
    const NAME: &str = "g-threshold";
    let threshold = RationalFunction::new(
        RationalPolynomial::from_ints(&[2]),
        RationalPolynomial::from_ints(&[1, 0, 2]),
    )
    .expect("nonzero");
    let diff = g_function(&consts.lower_coarse).sub(&threshold).reduced();
    let one = int(1);
    if certified_sign(diff.den(), &one, &UpperEnd::Infinity, cfg.depth_cap) != Some(1) {
        return CheckResult::inconclusive(
            NAME,
            CheckKind::Proved,
            "denominator sign not certified",
        );
    }
    positivity_check(
        NAME,
        diff.num(),
        &one,
        &UpperEnd::Infinity,
        cfg.depth_cap,
        "numerator of G − 1/(r²+1/2)",
    )
}

/// The transform of G stays below `a*` for `r > 1.3`.
fn g_transform_bound(
    consts: &Lemma1Constants,
    bc: &BestConstants,
    cfg: &VerifyConfig,
) -> CheckResult {
    const NAME: &str = "eq5-bound";
    let f = match alpha_transform(&g_function(&consts.lower_coarse)) {
        Ok(f) => f.reduced(),
        Err(e) => return CheckResult::from_error(NAME, CheckKind::Proved, &e),
    };
    let lo = rat(13, 10);
    let Some(sign) = certified_sign(f.den(), &lo, &UpperEnd::Infinity, cfg.depth_cap) else {
        return CheckResult::inconclusive(
            NAME,
            CheckKind::Proved,
            "denominator sign not certified on (1.3, ∞)",
        );
    };
    // a·D − N > 0 (D > 0) or N − a·D > 0 (D < 0), with a ≥ a*.lo
    let a = bc.a_star.lo();
    let mut diff = f.den().scale(a).sub(f.num());
    if sign < 0 {
        diff = diff.neg();
    }
    let mut c = positivity_check(
        NAME,
        &diff,
        &lo,
        &UpperEnd::Infinity,
        cfg.depth_cap,
        "cleared difference a*·D − N",
    );
    c.detail = format!("{}; denominator sign {sign:+}; transform {f}", c.detail);
    c
}

fn simplification(consts: &Lemma1Constants) -> CheckResult {
    const NAME: &str = "eq5-simplification";
    let pairs = [
        (
            "G",
            g_function(&consts.lower_coarse),
            displayed_g_transform(),
        ),
        (
            "K",
            k_function(&consts.upper_coarse),
            displayed_k_transform(),
        ),
    ];
    let mut statuses = Vec::new();
    let mut detail = Vec::new();
    let mut witness = None;
    for (label, f, shown) in pairs {
        match alpha_transform(&f) {
            Ok(t) => {
                let reduced = t.reduced();
                let ok = reduced.proportional_factor(&shown.normalized()).is_some();
                let s = if ok {
                    CheckStatus::Verified
                } else {
                    CheckStatus::Falsified
                };
                if !ok && witness.is_none() {
                    witness = Some(format!("transform of {label} = {reduced}"));
                }
                detail.push(format!("transform of {label} = {reduced}: {s}"));
                statuses.push(s);
            }
            Err(e) => {
                detail.push(format!("transform of {label} failed: {e}"));
                statuses.push(CheckStatus::Inconclusive);
            }
        }
    }
    finish_status(
        NAME,
        CheckKind::Proved,
        combine(statuses),
        witness,
        detail.join("; "),
    )
}

fn limits(consts: &Lemma1Constants) -> CheckResult {
    const NAME: &str = "limits";
    let target = rat(13, 30);
    let mut statuses = Vec::new();
    let mut detail = Vec::new();
    for (label, f) in [
        ("G", g_function(&consts.lower_coarse)),
        ("K", k_function(&consts.upper_coarse)),
    ] {
        let lim = alpha_transform(&f).ok().and_then(|t| t.limit_at_infinity());
        let s = match &lim {
            Some(l) if *l == target => CheckStatus::Verified,
            Some(_) => CheckStatus::Falsified,
            None => CheckStatus::Inconclusive,
        };
        detail.push(format!(
            "limit of transform of {label} = {}",
            lim.map_or_else(|| "undefined".into(), |l| l.to_string())
        ));
        statuses.push(s);
    }
    let status = combine(statuses);
    finish_status(
        NAME,
        CheckKind::Proved,
        status,
        Some(detail.join("; ")),
        detail.join("; "),
    )
}

fn p_certificate() -> CheckResult {
    const NAME: &str = "p-certificate";
    let shifted = p_polynomial().taylor_shift(&rat(257, 100));
    for (i, text) in P_SHIFTED_DISPLAY.iter().enumerate() {
        let shown = parse_rational(text).expect("valid literal");
        if shifted.coeff(i) != shown {
            return CheckResult::falsified(
                NAME,
                CheckKind::Proved,
                format!("coefficient {i}"),
                format!(
                    "P(r + 2.57) coefficient {i} is {}, display has {shown}",
                    shifted.coeff(i)
                ),
            );
        }
    }
    let cert = sign_certificate(&shifted);
    match cert.verdict {
        SignVerdict::AllPositive => CheckResult::verified(
            NAME,
            CheckKind::Proved,
            "P(r + 2.57) reproduces all 9 displayed coefficients, all positive: P > 0 on (2.57, ∞)",
        ),
        _ => CheckResult::inconclusive(
            NAME,
            CheckKind::Proved,
            format!(
                "coefficient {:?} of P(r + 2.57) is not positive",
                cert.witness_index
            ),
        ),
    }
}

fn t_grid(cfg: &VerifyConfig) -> CheckResult {
    const NAME: &str = "t-positivity-grid";
    let mut statuses = Vec::new();
    let mut detail = Vec::new();
    let mut witness = None;
    for r in &cfg.t_grid {
        let s = match t_function(r, &MethodConfig::combined(cfg.eval_width.clone())) {
            Ok(t) => {
                let e = &t.enclosure;
                let s = if e.lo().is_positive() {
                    CheckStatus::Verified
                } else if !e.hi().is_positive() {
                    CheckStatus::Falsified
                } else {
                    CheckStatus::Inconclusive
                };
                if s == CheckStatus::Falsified && witness.is_none() {
                    witness = Some(format!("r = {r}"));
                }
                detail.push(format!(
                    "T({r}) ∈ [{:.3e}, {:.3e}]",
                    to_f(e.lo()),
                    to_f(e.hi())
                ));
                s
            }
            Err(e) => {
                detail.push(format!("T({r}): {e}"));
                CheckStatus::Inconclusive
            }
        };
        statuses.push(s);
    }
    finish_status(
        NAME,
        CheckKind::Spot,
        combine(statuses),
        witness,
        detail.join("; "),
    )
}

fn to_f(q: &Rational) -> f64 {
    crate::exact::to_f64(q)
}

fn endpoint(bc: &BestConstants) -> CheckResult {
    const NAME: &str = "alpha-endpoint";
    let r = rat(257, 100);
    let a = match alpha(&r, &MethodConfig::combined(pow10(-14))) {
        Ok(v) => v.enclosure,
        Err(e) => return CheckResult::from_error(NAME, CheckKind::Spot, &e),
    };
    let width_ok = if a.width() <= pow10(-10) {
        CheckStatus::Verified
    } else {
        CheckStatus::Inconclusive
    };
    let digits = interval_truncates_to(&a, 10, "0.4709258826");
    let above = strictly_less(&RationalInterval::point(bc.b_star.clone()), &a);
    let below = strictly_less(&a, &RationalInterval::point(bc.a_star.lo().clone()));
    let status = combine([width_ok, digits, above, below]);
    let detail = format!(
        "α(2.57) ∈ {}; digits {digits}; > 13/30 {above}; < a*.lo {below}",
        a.to_decimal_string(14)
    );
    finish_status(
        NAME,
        CheckKind::Spot,
        status,
        Some(format!("α(2.57) ∈ {}", a.to_decimal_string(14))),
        detail,
    )
}
