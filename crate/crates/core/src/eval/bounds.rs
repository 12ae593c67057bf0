use num_traits::{Signed, Zero};

use super::{check_r, companion_cube_sum, eval_s, CertifiedValue, Method, MethodConfig};
use crate::error::{Error, Result};
use crate::exact::{int, rat, Rational, RationalInterval};

/// `v ↦ ((12r⁴+2r²−1)v − 12r²) / (12 − (12r²+6)v)`; α(r) is its value at
/// `v = S(r)`. The map is decreasing on each side of its pole
/// `v = 1/(r²+1/2)`.
pub fn alpha_map(r: &Rational, v: &Rational) -> Result<Rational> {
    let r2 = r * r;
    let den = int(12) - (int(12) * &r2 + int(6)) * v;
    if den.is_zero() {
        return Err(Error::Domain("alpha map pole".into()));
    }
    let num = (int(12) * &r2 * &r2 + int(2) * &r2 - int(1)) * v - int(12) * &r2;
    Ok(num / den)
}

/// Exact image of an S enclosure under [`alpha_map`].
pub fn alpha_from_enclosure(r: &Rational, s: &RationalInterval) -> Result<RationalInterval> {
    let r2 = r * r;
    let den = |v: &Rational| int(12) - (int(12) * &r2 + int(6)) * v;
    let den_range = RationalInterval::hull_of(den(s.lo()), den(s.hi()));
    if den_range.contains_zero() {
        return Err(Error::PrecisionInsufficient(format!(
            "alpha denominator interval {den_range} contains 0 at r = {r}; tighten the S enclosure"
        )));
    }
    Ok(RationalInterval::hull_of(
        alpha_map(r, s.lo())?,
        alpha_map(r, s.hi())?,
    ))
}

/// Certified enclosure of α(r). Under `Combined` the target width applies
/// to α itself and the S enclosure is tightened until it is met.
pub fn alpha(r: &Rational, cfg: &MethodConfig) -> Result<CertifiedValue> {
    check_r(r)?;
    if cfg.method != Method::Combined {
        let s = eval_s(r, cfg)?;
        return Ok(CertifiedValue {
            enclosure: alpha_from_enclosure(r, &s.enclosure)?,
            ..s
        });
    }
    let target = &cfg.target_width;
    let mut width = target.clone();
    let mut last_err = None;
    for _ in 0..12 {
        let s = eval_s(r, &cfg.with_width(width.clone()))?;
        match alpha_from_enclosure(r, &s.enclosure) {
            Ok(a) if a.width() <= *target => {
                return Ok(CertifiedValue { enclosure: a, ..s });
            }
            Ok(a) => {
                // α inherits the S width times the local slope of the map
                let achieved = (&width).min(&s.enclosure.width()).clone();
                width = achieved * target / a.width() / int(2);
            }
            Err(e) => {
                width /= int(1000);
                last_err = Some(e);
            }
        }
    }
    Err(last_err.unwrap_or_else(|| {
        Error::PrecisionExhausted(format!("alpha at r = {r} did not reach width {target}"))
    }))
}

/// Tight image of `a·v² − b·v` over `v ∈ s` for `a > 0`.
fn quadratic_image(a: &Rational, b: &Rational, s: &RationalInterval) -> RationalInterval {
    let g = |v: &Rational| a * v * v - b * v;
    let vertex = b / (int(2) * a);
    let (glo, ghi) = (g(s.lo()), g(s.hi()));
    let hi = (&glo).max(&ghi).clone();
    let lo = if s.contains(&vertex) {
        g(&vertex)
    } else {
        glo.min(ghi)
    };
    RationalInterval::new(lo, hi).expect("ordered")
}

/// `T = (3r⁴+3r²+1/2)S² − (6r²+2)S − (2r²+1/2)C + 3` over enclosures of S
/// and the companion sum C.
pub fn t_from_enclosures(
    r: &Rational,
    s: &RationalInterval,
    c: &RationalInterval,
) -> RationalInterval {
    let r2 = r * r;
    let a = int(3) * &r2 * &r2 + int(3) * &r2 + rat(1, 2);
    let b = int(6) * &r2 + int(2);
    let k = int(2) * &r2 + rat(1, 2);
    (&quadratic_image(&a, &b, s) - &c.scale(&k)).add_scalar(&int(3))
}

fn companion_config(cfg: &MethodConfig) -> MethodConfig {
    match cfg.method {
        Method::Direct | Method::ZetaSeries => cfg.clone(),
        Method::Russell | Method::Lampret | Method::Combined => {
            MethodConfig::combined(cfg.target_width.clone())
        }
    }
}

/// Certified enclosure of T(r). Under `Combined` the target width is
/// refined (down to a floor) until the enclosure excludes zero.
pub fn t_function(r: &Rational, cfg: &MethodConfig) -> Result<CertifiedValue> {
    check_r(r)?;
    let once = |cfg: &MethodConfig| -> Result<CertifiedValue> {
        let s = eval_s(r, cfg)?;
        let c = companion_cube_sum(r, &companion_config(cfg))?;
        let method = if s.method == c.method {
            s.method
        } else {
            Method::Combined
        };
        Ok(CertifiedValue {
            enclosure: t_from_enclosures(r, &s.enclosure, &c.enclosure),
            method,
            terms_used: s.terms_used.max(c.terms_used),
            r: r.clone(),
        })
    };
    let mut v = once(cfg)?;
    if cfg.method == Method::Combined {
        let mut width = cfg.target_width.clone();
        for _ in 0..5 {
            if !v.enclosure.contains_zero() {
                break;
            }
            width /= int(1_000_000);
            v = once(&cfg.with_width(width.clone()))?;
        }
    }
    Ok(v)
}

/// `1 / (r² + 1/2 − (4r²+1)/(12(r²+c)))` at an exact constant `c`.
pub fn hoorfar_qi_value(r: &Rational, c: &Rational) -> Result<Rational> {
    check_r(r)?;
    let r2 = r * r;
    let shifted = &r2 + c;
    if !shifted.is_positive() {
        return Err(Error::Domain(format!("r² + c must be positive (c = {c})")));
    }
    let inner = &r2 + rat(1, 2) - (int(4) * &r2 + int(1)) / (int(12) * shifted);
    if !inner.is_positive() {
        return Err(Error::Domain(format!(
            "nested bound denominator is not positive at r = {r}, c = {c}"
        )));
    }
    Ok(inner.recip())
}

/// Image of the nested bound over an interval of constants; the map is
/// decreasing in `c`.
pub fn hoorfar_qi_bound(r: &Rational, c: &RationalInterval) -> Result<RationalInterval> {
    let upper = hoorfar_qi_value(r, c.lo())?;
    let lower = hoorfar_qi_value(r, c.hi())?;
    RationalInterval::new(lower, upper)
}

/// `1/(r² + c)`.
pub fn alzer_bound(r: &Rational, c: &Rational) -> Result<Rational> {
    check_r(r)?;
    let d = r * r + c;
    if !d.is_positive() {
        return Err(Error::Domain("r² + c must be positive".into()));
    }
    Ok(d.recip())
}

pub fn alzer_bound_interval(r: &Rational, c: &RationalInterval) -> Result<RationalInterval> {
    let upper = alzer_bound(r, c.lo())?;
    let lower = alzer_bound(r, c.hi())?;
    RationalInterval::new(lower, upper)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nested_bound_at_one() {
        // 1/(1 + 1/2 − 5/(12·43/30)) = 1/(3/2 − 25/86) = 43/52
        assert_eq!(
            hoorfar_qi_value(&int(1), &rat(13, 30)).unwrap(),
            rat(43, 52)
        );
        assert!(hoorfar_qi_value(&int(1), &int(-2)).is_err());
    }

    #[test]
    fn nested_bound_decreasing_in_c() {
        let r = rat(3, 2);
        let small = hoorfar_qi_value(&r, &rat(1, 4)).unwrap();
        let large = hoorfar_qi_value(&r, &rat(3, 2)).unwrap();
        assert!(large < small);
        let iv = RationalInterval::new(rat(1, 4), rat(3, 2)).unwrap();
        let image = hoorfar_qi_bound(&r, &iv).unwrap();
        assert_eq!(image.lo(), &large);
        assert_eq!(image.hi(), &small);
    }

    #[test]
    fn alzer_values() {
        assert_eq!(alzer_bound(&int(1), &rat(1, 6)).unwrap(), rat(6, 7));
        assert!(alzer_bound(&rat(1, 2), &int(-1)).is_err());
        // the nested bound with 13/30 beats 1/(r²+1/6) at r = 2
        let nested = hoorfar_qi_value(&int(2), &rat(13, 30)).unwrap();
        assert!(nested < alzer_bound(&int(2), &rat(1, 6)).unwrap());
    }

    #[test]
    fn alpha_map_pole_and_reversal() {
        let r = int(2);
        let pole = rat(2, 9); // 1/(r² + 1/2)
        assert!(alpha_map(&r, &pole).is_err());
        let a = alpha_map(&r, &rat(23, 100)).unwrap();
        let b = alpha_map(&r, &rat(24, 100)).unwrap();
        assert!(b < a);
        let straddle = RationalInterval::new(rat(1, 5), rat(1, 4)).unwrap();
        assert!(matches!(
            alpha_from_enclosure(&r, &straddle),
            Err(Error::PrecisionInsufficient(_))
        ));
    }

    #[test]
    fn t_at_point_values_matches_formula() {
        let r = rat(5, 2);
        let (s, c) = (rat(3, 20), rat(1, 100));
        let r2 = &r * &r;
        let expected = (int(3) * &r2 * &r2 + int(3) * &r2 + rat(1, 2)) * &s * &s
            - (int(6) * &r2 + int(2)) * &s
            - (int(2) * &r2 + rat(1, 2)) * &c
            + int(3);
        let t = t_from_enclosures(&r, &RationalInterval::point(s), &RationalInterval::point(c));
        assert_eq!(t, RationalInterval::point(expected));
    }

    #[test]
    fn alpha_reaches_width_when_s_overshoots() {
        let target = crate::exact::pow10(-12);
        let a = alpha(&int(40), &MethodConfig::combined(target.clone())).unwrap();
        assert!(a.enclosure.width() <= target);
        assert!(a.enclosure.lo() > &rat(13, 30));
    }

    #[test]
    fn quadratic_image_with_vertex_inside() {
        let s = RationalInterval::new(int(0), int(3)).unwrap();
        // v² − 2v on [0, 3] spans [−1, 3]
        let image = quadratic_image(&int(1), &int(2), &s);
        assert_eq!(image, RationalInterval::new(int(-1), int(3)).unwrap());
    }
}
