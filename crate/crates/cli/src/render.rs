//! Text, JSON and CSV rendering of intervals and reports.

use mathieu_core::exact::{to_decimal, Rounding};
use mathieu_core::verify::{CheckResult, LemmaReport};
use mathieu_core::RationalInterval;
use serde_json::{json, Value};

/// Lower endpoint rounded down, upper endpoint rounded up.
pub fn outward(iv: &RationalInterval, digits: usize) -> (String, String) {
    (
        to_decimal(iv.lo(), digits, Rounding::Floor),
        to_decimal(iv.hi(), digits, Rounding::Ceil),
    )
}

pub fn interval_json(iv: &RationalInterval, digits: usize) -> Value {
    let (lo, hi) = outward(iv, digits);
    json!({
        "lo": iv.lo().to_string(),
        "hi": iv.hi().to_string(),
        "lo_decimal": lo,
        "hi_decimal": hi,
        "decimal_digits": digits,
        "decimal_rounding": "outward (lo floor, hi ceil)",
    })
}

fn check_json(c: &CheckResult) -> Value {
    json!({
        "name": c.name,
        "status": c.status.as_str(),
        "witness": c.witness,
        "detail": format!("[{}] {}", c.kind.as_str(), c.detail),
    })
}

pub fn report_json(r: &LemmaReport) -> Value {
    json!({
        "target": r.target,
        "overall": r.overall().as_str(),
        "checks": r.checks.iter().map(check_json).collect::<Vec<_>>(),
    })
}

pub fn report_plain(r: &LemmaReport) -> String {
    let mut out = format!("{}: {}\n", r.target, r.overall());
    for c in &r.checks {
        out.push_str(&format!(
            "  {:<12} {} [{}] {}\n",
            c.status.as_str(),
            c.name,
            c.kind.as_str(),
            c.detail
        ));
        if let Some(w) = &c.witness {
            out.push_str(&format!("               witness: {w}\n"));
        }
    }
    out
}
