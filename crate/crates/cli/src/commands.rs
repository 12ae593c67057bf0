use mathieu_core::asymptotics::{alpha_coefficients, alpha_series, required_k};
use mathieu_core::eval::{
    alpha, alpha_from_enclosure, companion_cube_sum, eval_s, hoorfar_qi_bound, t_function,
    CertifiedValue, Method, MethodConfig,
};
use mathieu_core::exact::{parse_rational, pow10, to_decimal, to_f64, Rounding};
use mathieu_core::verify::{
    default_theorem_grid, verify_all, verify_lemma1, verify_lemma2, verify_lemma3, verify_theorem,
    BestConstants, CheckStatus, VerifyConfig,
};
use mathieu_core::{Rational, RationalInterval};
use serde_json::json;

use crate::render::{interval_json, outward, report_json, report_plain};
use crate::{AsymptoticArgs, EvalArgs, Failure, Format, Quantity, TableArgs, Target, VerifyArgs};

type Output = Result<(String, u8), Failure>;

/// Number of values reproduced from the printed expansion.
const PUBLISHED_ALPHA_TERMS: usize = 4;

const MAX_TABLE_ROWS: usize = 10_000;

fn parse(text: &str, what: &str) -> Result<Rational, Failure> {
    parse_rational(text).map_err(|_| Failure::usage(format!("cannot parse {what} {text:?}")))
}

fn positive(text: &str, what: &str) -> Result<Rational, Failure> {
    let q = parse(text, what)?;
    if q <= Rational::from_integer(0.into()) {
        return Err(Failure::usage(format!(
            "{what} must be positive, got {text}"
        )));
    }
    Ok(q)
}

fn pretty(v: &serde_json::Value) -> String {
    format!(
        "{}\n",
        serde_json::to_string_pretty(v).expect("serializable")
    )
}

/// Exact decimal when `q` has a terminating expansion of at most 30
/// digits, `p/q` otherwise.
fn exact_text(q: &Rational) -> String {
    for digits in 0..=30 {
        let scaled = q * pow10(digits as i32);
        if scaled.is_integer() {
            return to_decimal(q, digits, Rounding::Truncate);
        }
    }
    q.to_string()
}

pub fn eval(a: &EvalArgs) -> Output {
    let r = positive(&a.r, "r")?;
    let method = Method::parse(&a.method)
        .ok_or_else(|| Failure::usage(format!("unknown method {:?}", a.method)))?;
    let width = positive(&a.width, "width")?;
    let cfg = MethodConfig::new(method, a.order, width)?;
    let (label, v): (&str, CertifiedValue) = match a.quantity {
        Quantity::S => ("S(r)", eval_s(&r, &cfg)?),
        Quantity::Companion => ("sum 2n/(n^2+r^2)^3", companion_cube_sum(&r, &cfg)?),
        Quantity::Alpha => ("alpha(r)", alpha(&r, &cfg)?),
        Quantity::T => ("T(r)", t_function(&r, &cfg)?),
    };
    let e = &v.enclosure;
    let text = match a.format {
        Format::Json => pretty(&json!({
            "quantity": label,
            "r": r.to_string(),
            "method": v.method.name(),
            "terms_used": v.terms_used,
            "enclosure": interval_json(e, a.digits),
        })),
        Format::Plain | Format::Csv => {
            let (lo, hi) = outward(e, a.digits);
            format!(
                "quantity: {label}\nr: {}\nmethod: {}\nterms_used: {}\nlo: {}\nhi: {}\n\
                 decimal ({} digits, outward): [{lo}, {hi}]\nwidth (approx): {:.3e}\n",
                exact_text(&r),
                v.method,
                v.terms_used,
                e.lo(),
                e.hi(),
                a.digits,
                to_f64(&e.width())
            )
        }
    };
    Ok((text, 0))
}

struct Row {
    r: Rational,
    s: RationalInterval,
    lower: RationalInterval,
    upper: RationalInterval,
    alpha: RationalInterval,
}

pub const TABLE_COLUMNS: [&str; 7] = [
    "r",
    "S_lo",
    "S_hi",
    "lower_bound",
    "upper_bound",
    "alpha_lo",
    "alpha_hi",
];

pub fn table(a: &TableArgs) -> Output {
    let rmin = positive(&a.rmin, "rmin")?;
    let rmax = positive(&a.rmax, "rmax")?;
    let step = positive(&a.step, "step")?;
    let width = positive(&a.width, "width")?;
    if rmin > rmax {
        return Err(Failure::usage("rmin must not exceed rmax"));
    }
    let count = ((&rmax - &rmin) / &step).floor().to_integer();
    if count >= MAX_TABLE_ROWS.into() {
        return Err(Failure::usage(format!(
            "table limited to {MAX_TABLE_ROWS} rows"
        )));
    }
    let bc = BestConstants::compute(&pow10(-20))?;
    let b = RationalInterval::point(bc.b_star.clone());
    let mut rows = Vec::new();
    let mut r = rmin;
    while r <= rmax {
        let s = eval_s(&r, &MethodConfig::combined(width.clone()))?.enclosure;
        let alpha_iv = match alpha_from_enclosure(&r, &s) {
            Ok(iv) => iv,
            Err(_) => alpha(&r, &MethodConfig::combined(pow10(-12)))?.enclosure,
        };
        rows.push(Row {
            lower: hoorfar_qi_bound(&r, &bc.a_star)?,
            upper: hoorfar_qi_bound(&r, &b)?,
            r: r.clone(),
            s,
            alpha: alpha_iv,
        });
        r += &step;
    }
    let d = a.digits;
    let text = match a.format {
        Format::Json => pretty(&json!({
            "columns": TABLE_COLUMNS,
            "rows": rows.iter().map(|row| json!({
                "r": row.r.to_string(),
                "S": interval_json(&row.s, d),
                "lower_bound": interval_json(&row.lower, d),
                "upper_bound": interval_json(&row.upper, d),
                "alpha": interval_json(&row.alpha, d),
            })).collect::<Vec<_>>(),
        })),
        Format::Csv | Format::Plain => {
            eprintln!(
                "note: {d} fractional digits; S and alpha rounded outward, \
                 lower_bound rounded up, upper_bound rounded down"
            );
            let mut out = TABLE_COLUMNS.join(",");
            out.push('\n');
            for row in &rows {
                let (s_lo, s_hi) = outward(&row.s, d);
                // bounds rounded away from S so the printed bracket stays sound
                let (_, lower) = outward(&row.lower, d);
                let (upper, _) = outward(&row.upper, d);
                let (a_lo, a_hi) = outward(&row.alpha, d);
                out.push_str(&format!(
                    "{},{s_lo},{s_hi},{lower},{upper},{a_lo},{a_hi}\n",
                    exact_text(&row.r)
                ));
            }
            out
        }
    };
    Ok((text, 0))
}

pub fn verify(a: &VerifyArgs) -> Output {
    let cfg = VerifyConfig {
        zeta_width: positive(&a.zeta_width, "zeta width")?,
        eval_width: positive(&a.eval_width, "evaluation width")?,
        depth_cap: a.depth_cap,
        ..VerifyConfig::default()
    };
    let grid = match &a.grid {
        Some(text) => text
            .split(',')
            .map(|t| positive(t.trim(), "grid point"))
            .collect::<Result<Vec<_>, _>>()?,
        None => default_theorem_grid(),
    };
    let report = match a.target {
        Target::Lemma1 => verify_lemma1(&cfg),
        Target::Lemma2 => verify_lemma2(&cfg),
        Target::Lemma3 => verify_lemma3(&cfg),
        Target::Theorem => verify_theorem(&grid, &cfg),
        Target::All => verify_all(&cfg),
    };
    let code = match report.overall() {
        CheckStatus::Verified => 0,
        CheckStatus::Falsified => 1,
        CheckStatus::Inconclusive => 3,
    };
    let text = match a.format {
        Format::Plain | Format::Csv => report_plain(&report),
        Format::Json => pretty(&report_json(&report)),
    };
    Ok((text, code))
}

pub fn asymptotic(a: &AsymptoticArgs) -> Output {
    let n = a.terms as usize;
    let coeffs = alpha_coefficients(n)?;
    let k = required_k(n);
    let stable = alpha_series(k + 2)?.leading_coefficients(n)? == coeffs;
    let source = |j: usize| {
        if j < PUBLISHED_ALPHA_TERMS {
            "printed expansion"
        } else {
            "derived, no paper reference"
        }
    };
    let text = match a.format {
        Format::Json => pretty(&json!({
            "variable": "x = 1/r^2",
            "k": k,
            "stable_under_k_plus_2": stable,
            "coefficients": coeffs.iter().enumerate().map(|(j, c)| json!({
                "power": j,
                "value": c.to_string(),
                "source": source(j),
            })).collect::<Vec<_>>(),
        })),
        Format::Plain | Format::Csv => {
            let mut out =
                format!("alpha(r) ~ sum_j a_j x^j, x = 1/r^2 (S expansion order k = {k})\n");
            for (j, c) in coeffs.iter().enumerate() {
                out.push_str(&format!("a_{j} = {c}  ({})\n", source(j)));
            }
            out.push_str(&format!(
                "stable under k + 2: {}\n",
                if stable { "yes" } else { "no" }
            ));
            out
        }
    };
    Ok((text, if stable { 0 } else { 3 }))
}
