//! The two-sided nested bound with the extremal constants.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{
    combine, finish_status, strictly_less, BestConstants, CheckKind, CheckResult, CheckStatus,
    LemmaReport, VerifyConfig,
};
use crate::eval::{
    alpha, alpha_map, alzer_bound, alzer_bound_interval, eval_s, hoorfar_qi_bound, MethodConfig,
};
use crate::exact::{int, pow10, rat, zeta_enclosure, AccuracyRequest, Rational, RationalInterval};

/// Seed of [`order_reversal_check`] when none is given.
pub const ORDER_REVERSAL_SEED: u64 = 0x6d61_7468_6965_7521;

/// Status of `lower(r) < S(r) < upper(r)` where the bounds use the nested
/// form with constants `lower_c` and `upper_c`.
pub fn theorem_point_check(
    r: &Rational,
    s: &RationalInterval,
    lower_c: &RationalInterval,
    upper_c: &RationalInterval,
) -> crate::Result<(CheckStatus, RationalInterval, RationalInterval)> {
    let lower = hoorfar_qi_bound(r, lower_c)?;
    let upper = hoorfar_qi_bound(r, upper_c)?;
    let status = combine([strictly_less(&lower, s), strictly_less(s, &upper)]);
    Ok((status, lower, upper))
}

fn s_width(cfg: &VerifyConfig) -> Rational {
    &cfg.eval_width * pow10(-4)
}

pub fn verify_theorem(grid: &[Rational], cfg: &VerifyConfig) -> LemmaReport {
    let bc = match BestConstants::compute(&cfg.zeta_width) {
        Ok(bc) => bc,
        Err(e) => {
            return LemmaReport::new(
                "theorem",
                vec![CheckResult::from_error("bracket-grid", CheckKind::Spot, &e)],
            )
        }
    };
    let upper = RationalInterval::point(bc.b_star.clone());
    let mut report = verify_theorem_with(grid, cfg, &bc.a_star, &upper);
    report.checks.push(alzer_grid(grid, cfg));
    report.checks.push(alpha_bracket(grid, &bc));
    report.checks.push(lower_sharpness(&bc));
    report.checks.push(upper_dominance(&bc, cfg));
    report
        .checks
        .push(order_reversal_check(1000, ORDER_REVERSAL_SEED));
    report
}

/// The nested bracket on `grid` with arbitrary constants; swapping the
/// constants gives a control that must fail.
pub fn verify_theorem_with(
    grid: &[Rational],
    cfg: &VerifyConfig,
    lower_c: &RationalInterval,
    upper_c: &RationalInterval,
) -> LemmaReport {
    const NAME: &str = "bracket-grid";
    if grid.is_empty() {
        return LemmaReport::new(
            "theorem",
            vec![CheckResult::inconclusive(
                NAME,
                CheckKind::Spot,
                "empty grid",
            )],
        );
    }
    let mut statuses = Vec::new();
    let mut detail = Vec::new();
    let mut witness = None;
    for r in grid {
        let s = match eval_s(r, &MethodConfig::combined(s_width(cfg))) {
            Ok(v) => v.enclosure,
            Err(e) => {
                detail.push(format!("r = {r}: {e}"));
                statuses.push(CheckStatus::Inconclusive);
                continue;
            }
        };
        match theorem_point_check(r, &s, lower_c, upper_c) {
            Ok((status, lower, upper)) => {
                if status == CheckStatus::Falsified && witness.is_none() {
                    witness = Some(format!("r = {r}"));
                }
                if *r == int(1) {
                    detail.push(format!(
                        "r = 1: lower ∈ {}, S ∈ {}, upper ∈ {}",
                        lower.to_decimal_string(15),
                        s.to_decimal_string(15),
                        upper.to_decimal_string(15)
                    ));
                } else {
                    detail.push(format!("r = {r}: {status}"));
                }
                statuses.push(status);
            }
            Err(e) => {
                detail.push(format!("r = {r}: {e}"));
                statuses.push(CheckStatus::Inconclusive);
            }
        }
    }
    let check = finish_status(
        NAME,
        CheckKind::Spot,
        combine(statuses),
        witness,
        detail.join("; "),
    );
    LemmaReport::new("theorem", vec![check])
}

fn alzer_grid(grid: &[Rational], cfg: &VerifyConfig) -> CheckResult {
    const NAME: &str = "alzer-grid";
    let zeta3 = match zeta_enclosure(
        3,
        &AccuracyRequest::new(cfg.zeta_width.clone()).expect("positive"),
    ) {
        Ok(z) => z,
        Err(e) => return CheckResult::from_error(NAME, CheckKind::Spot, &e),
    };
    let c_lower = match zeta3.scale(&int(2)).recip() {
        Ok(c) => c,
        Err(e) => return CheckResult::from_error(NAME, CheckKind::Spot, &e),
    };
    let mut statuses = Vec::new();
    let mut witness = None;
    for r in grid {
        let parts = eval_s(r, &MethodConfig::combined(s_width(cfg))).and_then(|s| {
            let lo = alzer_bound_interval(r, &c_lower)?;
            let hi = RationalInterval::point(alzer_bound(r, &rat(1, 6))?);
            Ok(combine([
                strictly_less(&lo, &s.enclosure),
                strictly_less(&s.enclosure, &hi),
            ]))
        });
        let s = parts.unwrap_or(CheckStatus::Inconclusive);
        if s == CheckStatus::Falsified && witness.is_none() {
            witness = Some(format!("r = {r}"));
        }
        statuses.push(s);
    }
    finish_status(
        NAME,
        CheckKind::Spot,
        combine(statuses),
        witness,
        format!(
            "1/(r² + 1/(2ζ(3))) < S(r) < 1/(r² + 1/6) on {} grid points",
            grid.len()
        ),
    )
}

fn alpha_bracket(grid: &[Rational], bc: &BestConstants) -> CheckResult {
    const NAME: &str = "alpha-bracket";
    let mut statuses = Vec::new();
    let mut witness = None;
    let bracket_lo = RationalInterval::point(bc.b_star.clone());
    let bracket_hi = RationalInterval::point(bc.a_star.hi().clone());
    for r in grid {
        let s = match alpha(r, &MethodConfig::combined(pow10(-12))) {
            Ok(a) => combine([
                strictly_less(&bracket_lo, &a.enclosure),
                strictly_less(&a.enclosure, &bracket_hi),
            ]),
            Err(_) => CheckStatus::Inconclusive,
        };
        if s == CheckStatus::Falsified && witness.is_none() {
            witness = Some(format!("r = {r}"));
        }
        statuses.push(s);
    }
    finish_status(
        NAME,
        CheckKind::Spot,
        combine(statuses),
        witness,
        format!("13/30 < α(r) < a* on {} grid points", grid.len()),
    )
}

fn lower_sharpness(bc: &BestConstants) -> CheckResult {
    const NAME: &str = "lower-sharpness";
    let r = rat(1, 10_000);
    let result = (|| -> crate::Result<Rational> {
        let lower = hoorfar_qi_bound(&r, &bc.a_star)?;
        let z = zeta_enclosure(3, &AccuracyRequest::decimal(-20))?.scale(&int(2));
        Ok((&lower - &z).abs_max())
    })();
    match result {
        Ok(gap) if gap <= pow10(-3) => CheckResult::verified(
            NAME,
            CheckKind::Spot,
            format!(
                "lower bound at r = 10⁻⁴ within {:.3e} of 2ζ(3)",
                crate::exact::to_f64(&gap)
            ),
        ),
        Ok(gap) => CheckResult::inconclusive(
            NAME,
            CheckKind::Spot,
            format!("gap {:.3e} exceeds 10⁻³", crate::exact::to_f64(&gap)),
        ),
        Err(e) => CheckResult::from_error(NAME, CheckKind::Spot, &e),
    }
}

fn upper_dominance(bc: &BestConstants, cfg: &VerifyConfig) -> CheckResult {
    const NAME: &str = "upper-dominance";
    let r = int(50);
    let result = (|| -> crate::Result<CheckStatus> {
        let s = eval_s(&r, &MethodConfig::combined(s_width(cfg)))?.enclosure;
        let nested = hoorfar_qi_bound(&r, &RationalInterval::point(bc.b_star.clone()))?;
        let alzer = RationalInterval::point(alzer_bound(&r, &rat(1, 6))?);
        Ok(strictly_less(&(&nested - &s), &(&alzer - &s)))
    })();
    match result {
        Ok(CheckStatus::Verified) => CheckResult::verified(
            NAME,
            CheckKind::Spot,
            "at r = 50 the nested upper bound is closer to S than 1/(r² + 1/6)",
        ),
        Ok(CheckStatus::Falsified) => CheckResult::falsified(
            NAME,
            CheckKind::Spot,
            "r = 50",
            "1/(r² + 1/6) is closer to S than the nested bound",
        ),
        Ok(CheckStatus::Inconclusive) => {
            CheckResult::inconclusive(NAME, CheckKind::Spot, "enclosures overlap at r = 50")
        }
        Err(e) => CheckResult::from_error(NAME, CheckKind::Spot, &e),
    }
}

/// Random pairs `A ≤ B` in `(1/(r²+1/2), 1/(r²+1/6))` must map to
/// `α(B) ≤ α(A)`.
pub fn order_reversal_check(samples: usize, seed: u64) -> CheckResult {
    const NAME: &str = "order-reversal";
    if samples == 0 {
        return CheckResult::inconclusive(NAME, CheckKind::Spot, "no samples requested");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let unit = |rng: &mut ChaCha8Rng| rat(rng.gen_range(1..(1i64 << 32)), 1i64 << 32);
    for i in 0..samples {
        let r = rat(rng.gen_range(1..=100_000), 1000);
        let r2 = &r * &r;
        let t = (&r2 + rat(1, 2)).recip();
        let cap = (&r2 + rat(1, 6)).recip();
        let span = &cap - &t;
        let mut a = &t + &span * unit(&mut rng);
        let mut b = if i % 100 == 0 {
            a.clone()
        } else {
            &t + &span * unit(&mut rng)
        };
        if b < a {
            std::mem::swap(&mut a, &mut b);
        }
        let (Ok(ia), Ok(ib)) = (alpha_map(&r, &a), alpha_map(&r, &b)) else {
            return CheckResult::inconclusive(
                NAME,
                CheckKind::Spot,
                format!("map undefined at sample {i}"),
            );
        };
        if ib > ia || (a == b && ia != ib) {
            return CheckResult::falsified(
                NAME,
                CheckKind::Spot,
                format!("r = {r}, A = {a}, B = {b}"),
                format!("order not reversed at sample {i} (seed {seed:#x})"),
            );
        }
    }
    CheckResult::verified(
        NAME,
        CheckKind::Spot,
        format!("{samples} random pairs reversed (seed {seed:#x})"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reversal_small_run() {
        assert_eq!(order_reversal_check(50, 7).status, CheckStatus::Verified);
        assert_eq!(order_reversal_check(0, 7).status, CheckStatus::Inconclusive);
    }

    #[test]
    fn swapped_constants_fail() {
        let cfg = VerifyConfig::default();
        let bc = BestConstants::compute(&cfg.zeta_width).unwrap();
        let b = RationalInterval::point(bc.b_star.clone());
        let report = verify_theorem_with(&[int(1)], &cfg, &b, &bc.a_star);
        assert_eq!(report.overall(), CheckStatus::Falsified);
    }
}
