//! Certified evaluation of S(r), the cubed companion sum, α(r), T(r) and
//! the closed-form bounds.

mod bounds;
mod series;

pub use bounds::{
    alpha, alpha_from_enclosure, alpha_map, alzer_bound, alzer_bound_interval, hoorfar_qi_bound,
    hoorfar_qi_value, t_from_enclosures, t_function,
};
pub use series::{
    companion_direct, companion_zeta_series, eval_direct, eval_direct_with, eval_lampret,
    eval_russell, eval_zeta_series, russell_expansion, russell_remainder_bound, zeta_series,
    TailRule, ZetaSeriesKind, EXACT_TERM_LIMIT, LAMPRET_MAX_M, ZETA_SERIES_MAX_R,
};

use std::fmt;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exact::{pow10, rat, AccuracyRequest, Rational, RationalInterval};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Direct,
    Russell,
    ZetaSeries,
    Lampret,
    Combined,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Self::Direct => "direct",
            Self::Russell => "russell",
            Self::ZetaSeries => "zeta",
            Self::Lampret => "lampret",
            Self::Combined => "combined",
        }
    }

    pub fn parse(text: &str) -> Option<Self> {
        Some(match text.to_ascii_lowercase().as_str() {
            "direct" => Self::Direct,
            "russell" => Self::Russell,
            "zeta" | "zeta-series" | "zeta_series" => Self::ZetaSeries,
            "lampret" => Self::Lampret,
            "combined" | "auto" => Self::Combined,
            _ => return None,
        })
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An interval guaranteed to contain a true analytic quantity.
#[derive(Debug, Clone, PartialEq)]
pub struct CertifiedValue {
    pub enclosure: RationalInterval,
    pub method: Method,
    /// Truncation data: `N`, `k`, `m` or number of series terms.
    pub terms_used: u64,
    pub r: Rational,
}

/// Evaluation strategy.
///
/// `order` is the method's truncation parameter (`N` for direct summation,
/// `k` for the Bernoulli expansion, `m` for the Euler–Maclaurin form,
/// number of exact terms for the ζ series). When absent, the evaluator
/// picks the smallest value meeting `target_width`.
#[derive(Debug, Clone, PartialEq)]
pub struct MethodConfig {
    pub method: Method,
    pub order: Option<u64>,
    pub target_width: Rational,
}

impl MethodConfig {
    pub fn new(method: Method, order: Option<u64>, target_width: Rational) -> Result<Self> {
        if !target_width.is_positive() {
            return Err(Error::Domain("target width must be positive".into()));
        }
        if order == Some(0) {
            return Err(Error::Domain("truncation order must be positive".into()));
        }
        Ok(Self {
            method,
            order,
            target_width,
        })
    }

    pub fn combined(target_width: Rational) -> Self {
        Self {
            method: Method::Combined,
            order: None,
            target_width,
        }
    }

    pub fn with_width(&self, target_width: Rational) -> Self {
        Self {
            target_width,
            ..self.clone()
        }
    }
}

impl Default for MethodConfig {
    fn default() -> Self {
        Self::combined(pow10(-20))
    }
}

pub(crate) fn check_r(r: &Rational) -> Result<()> {
    if !r.is_positive() {
        return Err(Error::Domain(format!("r must be positive, got {r}")));
    }
    Ok(())
}

fn order_u32(order: u64) -> Result<u32> {
    u32::try_from(order).map_err(|_| Error::Domain("truncation order too large".into()))
}

/// Regime boundaries of the automatic method choice.
pub fn zeta_regime_max() -> Rational {
    rat(3, 10)
}

pub fn lampret_regime_max() -> Rational {
    rat(257, 100)
}

/// Certified enclosure of S(r) under the given strategy.
///
/// `Combined` follows the three regimes: ζ series for `r ≤ 3/10`, the
/// Euler–Maclaurin form for `r ≤ 2.57`, the Bernoulli expansion beyond,
/// each falling back to longer forms and finally direct summation when the
/// target width is out of reach.
pub fn eval_s(r: &Rational, cfg: &MethodConfig) -> Result<CertifiedValue> {
    check_r(r)?;
    let w = &cfg.target_width;
    match cfg.method {
        Method::Direct => match cfg.order {
            Some(n) => eval_direct(r, n),
            None => series::direct_to_width(r, 2, w),
        },
        Method::Russell => match cfg.order {
            Some(k) => eval_russell(r, order_u32(k)?),
            None => series::russell_to_width(r, w),
        },
        Method::Lampret => match cfg.order {
            Some(m) => eval_lampret(r, m),
            None => series::lampret_to_width(r, w),
        },
        Method::ZetaSeries => match cfg.order {
            Some(t) => {
                let acc = AccuracyRequest::new(w / rat(1 << 12, 1))?;
                eval_zeta_series(r, order_u32(t)?, &acc)
            }
            None => series::zeta_series_to_width(ZetaSeriesKind::Mathieu, r, w),
        },
        Method::Combined => {
            if *r <= zeta_regime_max() {
                if let Ok(v) = series::zeta_series_to_width(ZetaSeriesKind::Mathieu, r, w) {
                    return Ok(v);
                }
            } else if *r <= lampret_regime_max() {
                if let Ok(v) = series::lampret_to_width(r, w) {
                    return Ok(v);
                }
            } else {
                if let Ok(v) = series::russell_to_width(r, w) {
                    return Ok(v);
                }
                if let Ok(v) = series::lampret_to_width(r, w) {
                    return Ok(v);
                }
            }
            series::direct_to_width(r, 2, w)
        }
    }
}

/// Certified enclosure of `Σ_{n≥1} 2n/(n²+r²)³`.
///
/// Supports direct summation and the ζ series; `Combined` uses the ζ
/// series for `r ≤ 3/10` and convex-tail direct summation otherwise.
pub fn companion_cube_sum(r: &Rational, cfg: &MethodConfig) -> Result<CertifiedValue> {
    check_r(r)?;
    let w = &cfg.target_width;
    match cfg.method {
        Method::Direct => match cfg.order {
            Some(n) => companion_direct(r, n, TailRule::Integral),
            None => series::direct_to_width(r, 3, w),
        },
        Method::ZetaSeries => match cfg.order {
            Some(t) => {
                let acc = AccuracyRequest::new(w / rat(1 << 12, 1))?;
                companion_zeta_series(r, order_u32(t)?, &acc)
            }
            None => series::zeta_series_to_width(ZetaSeriesKind::Companion, r, w),
        },
        Method::Russell | Method::Lampret => Err(Error::MethodInapplicable(format!(
            "{} has no companion-sum form",
            cfg.method
        ))),
        Method::Combined => {
            if *r <= zeta_regime_max() {
                if let Ok(v) = series::zeta_series_to_width(ZetaSeriesKind::Companion, r, w) {
                    return Ok(v);
                }
            }
            series::direct_to_width(r, 3, w)
        }
    }
}
