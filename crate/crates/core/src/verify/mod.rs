//! Machine-checkable replications of the lemmas and the main two-sided
//! bound.
//!
//! Each check is either a certificate (a proof valid on a whole range,
//! labelled `proved`) or an evaluation on finitely many points (labelled
//! `spot`). A report is `Verified` only when every check is.

mod lemma1;
mod lemma2;
mod lemma3;
mod theorem;

pub use lemma1::{
    g_function, k_function, p_polynomial, verify_lemma1, verify_lemma1_with, Lemma1Constants,
    P_SHIFTED_DISPLAY,
};
pub use lemma2::{lemma2_negative_control, q_polynomial, verify_lemma2};
pub use lemma3::{lemma3_functions, verify_lemma3, Lemma3Functions};
pub use theorem::{order_reversal_check, theorem_point_check, verify_theorem, verify_theorem_with};

use std::fmt;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exact::{
    pow10, rat, to_decimal, zeta_enclosure, AccuracyRequest, Rational, RationalInterval, Rounding,
};
use crate::polyalg::{
    positivity_on_interval, PositivityVerdict, RationalFunction, RationalPolynomial, UpperEnd,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckStatus {
    Verified,
    Falsified,
    Inconclusive,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Verified => "VERIFIED",
            Self::Falsified => "FALSIFIED",
            Self::Inconclusive => "INCONCLUSIVE",
        }
    }
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Whether a check proves a statement on a range or samples it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckKind {
    Proved,
    Spot,
}

impl CheckKind {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Proved => "proved",
            Self::Spot => "spot",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: String,
    pub status: CheckStatus,
    pub kind: CheckKind,
    /// Always present when `status` is `Falsified`.
    pub witness: Option<String>,
    pub detail: String,
}

impl CheckResult {
    pub fn verified(name: &str, kind: CheckKind, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            status: CheckStatus::Verified,
            kind,
            witness: None,
            detail: detail.into(),
        }
    }

    pub fn falsified(
        name: &str,
        kind: CheckKind,
        witness: impl Into<String>,
        detail: impl Into<String>,
    ) -> Self {
        Self {
            name: name.into(),
            status: CheckStatus::Falsified,
            kind,
            witness: Some(witness.into()),
            detail: detail.into(),
        }
    }

    pub fn inconclusive(name: &str, kind: CheckKind, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            status: CheckStatus::Inconclusive,
            kind,
            witness: None,
            detail: detail.into(),
        }
    }

    pub fn with_witness(mut self, witness: impl Into<String>) -> Self {
        self.witness = Some(witness.into());
        self
    }

    /// Errors become inconclusive results: a failed computation proves
    /// nothing either way.
    fn from_error(name: &str, kind: CheckKind, err: &Error) -> Self {
        Self::inconclusive(name, kind, format!("computation failed: {err}"))
    }
}

fn finish_status(
    name: &str,
    kind: CheckKind,
    status: CheckStatus,
    witness: Option<String>,
    detail: String,
) -> CheckResult {
    match status {
        CheckStatus::Verified => CheckResult::verified(name, kind, detail),
        CheckStatus::Falsified => CheckResult::falsified(
            name,
            kind,
            witness.unwrap_or_else(|| "see detail".into()),
            detail,
        ),
        CheckStatus::Inconclusive => CheckResult::inconclusive(name, kind, detail),
    }
}

/// Combined status of several checks: any falsified wins, then any
/// inconclusive.
pub fn combine(statuses: impl IntoIterator<Item = CheckStatus>) -> CheckStatus {
    let mut out = CheckStatus::Verified;
    for s in statuses {
        match s {
            CheckStatus::Falsified => return CheckStatus::Falsified,
            CheckStatus::Inconclusive => out = CheckStatus::Inconclusive,
            CheckStatus::Verified => {}
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct LemmaReport {
    pub target: String,
    pub checks: Vec<CheckResult>,
}

impl LemmaReport {
    pub fn new(target: &str, checks: Vec<CheckResult>) -> Self {
        Self {
            target: target.into(),
            checks,
        }
    }

    pub fn overall(&self) -> CheckStatus {
        combine(self.checks.iter().map(|c| c.status))
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Concatenation of several reports under one target name.
    pub fn merged(target: &str, reports: Vec<LemmaReport>) -> Self {
        let checks = reports
            .into_iter()
            .flat_map(|r| {
                let prefix = r.target;
                r.checks.into_iter().map(move |mut c| {
                    c.name = format!("{prefix}/{}", c.name);
                    c
                })
            })
            .collect();
        Self::new(target, checks)
    }
}

/// Precision and grid settings shared by the reports.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    /// Width of every ζ enclosure entering a certificate.
    pub zeta_width: Rational,
    /// Target width for certified evaluations of S, α and T.
    pub eval_width: Rational,
    pub depth_cap: u32,
    /// Spot grid for T(r) > 0 beyond 2.57.
    pub t_grid: Vec<Rational>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            zeta_width: pow10(-20),
            eval_width: pow10(-20),
            depth_cap: crate::polyalg::DEFAULT_DEPTH_CAP,
            t_grid: vec![
                rat(258, 100),
                rat(26, 10),
                int_r(3),
                int_r(5),
                int_r(10),
                int_r(50),
            ],
        }
    }
}

fn int_r(n: i64) -> Rational {
    rat(n, 1)
}

/// Grid of the theorem spot check.
pub fn default_theorem_grid() -> Vec<Rational> {
    vec![
        rat(1, 100),
        rat(1, 10),
        rat(1, 2),
        int_r(1),
        int_r(2),
        rat(257, 100),
        int_r(5),
        int_r(10),
        int_r(100),
    ]
}

/// Enclosures of the two extremal constants: `a* = ζ(3)/(6ζ(3)−6)` and
/// `b* = 13/30`.
#[derive(Debug, Clone, PartialEq)]
pub struct BestConstants {
    pub a_star: RationalInterval,
    pub b_star: Rational,
}

impl BestConstants {
    /// `a*` from a ζ(3) enclosure of the given width. `z ↦ z/(6z−6)` is
    /// decreasing for `z > 1`, so the image is `[a(z.hi), a(z.lo)]`.
    pub fn compute(zeta_width: &Rational) -> Result<Self> {
        let z = zeta_enclosure(3, &AccuracyRequest::new(zeta_width.clone())?)?;
        let a = |z: &Rational| z / (rat(6, 1) * z - rat(6, 1));
        Ok(Self {
            a_star: RationalInterval::new(a(z.hi()), a(z.lo()))?,
            b_star: rat(13, 30),
        })
    }

    pub fn b_star_decimal(&self) -> String {
        to_decimal(&self.b_star, 10, Rounding::Truncate)
    }
}

/// `((12r⁴+2r²−1)f − 12r²) / (12 − (12r²+6)f)` as an exact rational
/// function.
pub fn alpha_transform(f: &RationalFunction) -> Result<RationalFunction> {
    let (n, d) = (f.num(), f.den());
    let p = |c: &[i64]| RationalPolynomial::from_ints(c);
    let num = p(&[-1, 0, 2, 0, 12]).mul(n).sub(&p(&[0, 0, 12]).mul(d));
    let den = p(&[12]).mul(d).sub(&p(&[6, 0, 12]).mul(n));
    if den.is_zero() {
        return Err(Error::Degenerate(
            "the transformed denominator vanishes identically".into(),
        ));
    }
    RationalFunction::new(num, den)
}

/// True when `q` truncated to `digits` decimals reads `expected`.
pub fn truncates_to(q: &Rational, digits: usize, expected: &str) -> bool {
    to_decimal(q, digits, Rounding::Truncate) == expected
}

/// Status of "the quantity enclosed by `iv` truncates to `expected`":
/// verified when both endpoints do, falsified when the enclosure misses
/// the whole decimal cell.
pub fn interval_truncates_to(iv: &RationalInterval, digits: usize, expected: &str) -> CheckStatus {
    let lo_ok = truncates_to(iv.lo(), digits, expected);
    let hi_ok = truncates_to(iv.hi(), digits, expected);
    if lo_ok && hi_ok {
        return CheckStatus::Verified;
    }
    let Ok(cell_lo) = crate::exact::parse_rational(expected) else {
        return CheckStatus::Inconclusive;
    };
    let step = pow10(-(digits as i32));
    let cell = RationalInterval::new(cell_lo.clone(), &cell_lo + step).expect("ordered");
    if iv.intersects(&cell) {
        CheckStatus::Inconclusive
    } else {
        CheckStatus::Falsified
    }
}

/// Status of `lhs < rhs` for enclosed quantities.
pub fn strictly_less(lhs: &RationalInterval, rhs: &RationalInterval) -> CheckStatus {
    if lhs.hi() < rhs.lo() {
        CheckStatus::Verified
    } else if lhs.lo() >= rhs.hi() {
        CheckStatus::Falsified
    } else {
        CheckStatus::Inconclusive
    }
}

/// Sign of `p` on `(lo, hi)` when it is certified to be nonvanishing there.
pub fn certified_sign(
    p: &RationalPolynomial,
    lo: &Rational,
    hi: &UpperEnd,
    depth_cap: u32,
) -> Option<i8> {
    if positivity_on_interval(p, lo, hi, depth_cap) == PositivityVerdict::ProvedPositive {
        return Some(1);
    }
    if positivity_on_interval(&p.neg(), lo, hi, depth_cap) == PositivityVerdict::ProvedPositive {
        return Some(-1);
    }
    None
}

/// Maps a positivity verdict onto a check result.
fn positivity_check(
    name: &str,
    p: &RationalPolynomial,
    lo: &Rational,
    hi: &UpperEnd,
    depth_cap: u32,
    what: &str,
) -> CheckResult {
    let range = match hi {
        UpperEnd::At(h) => format!("({lo}, {h})"),
        UpperEnd::Infinity => format!("({lo}, ∞)"),
    };
    match positivity_on_interval(p, lo, hi, depth_cap) {
        PositivityVerdict::ProvedPositive => CheckResult::verified(
            name,
            CheckKind::Proved,
            format!("{what} > 0 on {range}; numerator degree {}", deg(p)),
        ),
        PositivityVerdict::NegativeSomewhere { witness } => CheckResult::falsified(
            name,
            CheckKind::Proved,
            format!("r = {witness}"),
            format!("{what} is not positive at r = {witness}"),
        ),
        PositivityVerdict::Inconclusive => CheckResult::inconclusive(
            name,
            CheckKind::Proved,
            format!("{what} positivity on {range} undecided at depth cap {depth_cap}"),
        ),
    }
}

fn deg(p: &RationalPolynomial) -> String {
    p.degree().map_or_else(|| "-inf".into(), |d| d.to_string())
}

fn is_positive_interval(iv: &RationalInterval) -> CheckStatus {
    if iv.lo().is_positive() {
        CheckStatus::Verified
    } else if !iv.hi().is_positive() {
        CheckStatus::Falsified
    } else {
        CheckStatus::Inconclusive
    }
}

/// Every report.
pub fn verify_all(cfg: &VerifyConfig) -> LemmaReport {
    LemmaReport::merged(
        "all",
        vec![
            verify_lemma1(cfg),
            verify_lemma2(cfg),
            verify_lemma3(cfg),
            verify_theorem(&default_theorem_grid(), cfg),
        ],
    )
}
