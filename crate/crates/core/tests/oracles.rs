//! Independent oracles: slow direct sums and floating-point sanity checks
//! compared against the fast certified evaluators.

use mathieu_core::eval::{
    alzer_bound, eval_direct, eval_direct_with, eval_s, Method, MethodConfig, TailRule,
};
use mathieu_core::exact::{
    bernoulli, parse_rational, pi_enclosure, pow10, rat, to_f64, zeta_enclosure,
    zeta_integral_bracket,
};
use mathieu_core::{AccuracyRequest, Rational, RationalInterval};

fn q(text: &str) -> Rational {
    parse_rational(text).unwrap()
}

/// `Σ_{n ≤ N} n^{-3}` in compensated `f64`, with the midpoint-rule tail.
fn zeta3_float(n: u64) -> f64 {
    let (mut sum, mut comp) = (0.0f64, 0.0f64);
    for k in (1..=n).rev() {
        let x = (k as f64).powi(-3) - comp;
        let t = sum + x;
        comp = (t - sum) - x;
        sum = t;
    }
    let m = n as f64 + 0.5;
    sum + 1.0 / (2.0 * m * m)
}

#[test]
fn zeta3_integral_bracket_oracle() {
    let narrow = zeta_enclosure(3, &AccuracyRequest::decimal(-20)).unwrap();
    let bracket = zeta_integral_bracket(3, 1000).unwrap();
    assert!(
        narrow.is_subset_of(&bracket),
        "{narrow} not inside {bracket}"
    );
    assert!(narrow.width() <= pow10(-20));

    let float = zeta3_float(1_000_000);
    let mid = to_f64(&narrow.midpoint());
    assert!((float - mid).abs() < 1e-15, "{float} vs {mid}");
    assert!(narrow.contains(&q("1.20205690315959428539973816")));
}

#[test]
fn small_zeta_values_against_closed_forms() {
    // ζ(2) = π²/6, ζ(4) = π⁴/90
    let pi = pi_enclosure(&AccuracyRequest::decimal(-30)).unwrap();
    let z2 = zeta_enclosure(2, &AccuracyRequest::decimal(-25)).unwrap();
    let z4 = zeta_enclosure(4, &AccuracyRequest::decimal(-25)).unwrap();
    assert!(z2.intersects(&pi.pow(2).scale(&rat(1, 6))));
    assert!(z4.intersects(&pi.pow(4).scale(&rat(1, 90))));
}

#[test]
fn bernoulli_table() {
    let expected = [
        rat(1, 6),
        rat(1, 30),
        rat(1, 42),
        rat(1, 30),
        rat(5, 66),
        rat(691, 2730),
    ];
    for (i, b) in expected.iter().enumerate() {
        assert_eq!(&bernoulli(i + 1).unwrap(), b);
    }
}

#[test]
fn direct_million_terms_at_one() {
    let slow = eval_direct(&rat(1, 1), 1_000_000).unwrap().enclosure;
    assert!(slow.width() < pow10(-11));
    let fast = eval_s(&rat(1, 1), &MethodConfig::combined(pow10(-20))).unwrap();
    assert!(fast.enclosure.is_subset_of(&slow));
    assert!(slow.contains(&q("0.79423354275931886558")));
}

#[test]
fn integral_and_convex_tails_agree() {
    for r in ["0.5", "3", "17/4"] {
        let r = q(r);
        let plain = eval_direct_with(&r, 2000, TailRule::Integral)
            .unwrap()
            .enclosure;
        let convex = eval_direct_with(&r, 2000, TailRule::Convex)
            .unwrap()
            .enclosure;
        assert!(convex.is_subset_of(&plain));
        assert!(convex.width() < plain.width());
    }
}

#[test]
fn small_r_approaches_twice_zeta3() {
    let z = zeta_enclosure(3, &AccuracyRequest::decimal(-22))
        .unwrap()
        .scale(&rat(2, 1));
    let s = eval_s(&pow10(-6), &MethodConfig::combined(pow10(-20)))
        .unwrap()
        .enclosure;
    // S(0⁺) − S(r) = O(r²)
    assert!(strictly_below(&s, &z));
    assert!((z.lo() - s.hi()) < pow10(-10));
}

fn strictly_below(a: &RationalInterval, b: &RationalInterval) -> bool {
    a.hi() < b.lo()
}

#[test]
fn alzer_bracket_holds() {
    let half_inv_zeta = zeta_enclosure(3, &AccuracyRequest::decimal(-20))
        .unwrap()
        .scale(&rat(2, 1))
        .recip()
        .unwrap();
    for r in ["0.05", "1", "2.57", "12"] {
        let r = q(r);
        let s = eval_s(&r, &MethodConfig::combined(pow10(-20)))
            .unwrap()
            .enclosure;
        let upper = alzer_bound(&r, &rat(1, 6)).unwrap();
        let lower = alzer_bound(&r, half_inv_zeta.lo()).unwrap();
        assert!(&lower < s.lo() && s.hi() < &upper);
    }
}

/// S'(r) = −4r·Σ 2n/(n²+r²)³, checked against a central difference.
/// Floating point only; not part of any certificate.
#[test]
fn derivative_identity_finite_difference() {
    let cfg = MethodConfig::combined(pow10(-24));
    for r in [0.25f64, 1.0, 3.5] {
        let h = 1e-5;
        let at = |x: f64| {
            let x = Rational::from_float(x).unwrap();
            to_f64(&eval_s(&x, &cfg).unwrap().enclosure.midpoint())
        };
        let fd = (at(r + h) - at(r - h)) / (2.0 * h);
        let rq = Rational::from_float(r).unwrap();
        let c = mathieu_core::eval::companion_cube_sum(&rq, &cfg).unwrap();
        let identity = -4.0 * r * to_f64(&c.enclosure.midpoint());
        assert!(
            (fd - identity).abs() < 1e-8 * identity.abs().max(1.0),
            "{fd} vs {identity}"
        );
    }
}

#[test]
fn every_method_reports_its_name() {
    let r = rat(1, 5);
    for (m, order) in [
        (Method::Direct, Some(100)),
        (Method::ZetaSeries, Some(6)),
        (Method::Lampret, Some(4)),
        (Method::Russell, Some(3)),
    ] {
        let cfg = MethodConfig::new(m, order, pow10(-10)).unwrap();
        assert_eq!(eval_s(&r, &cfg).unwrap().method, m);
    }
}
