use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mathieu"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).expect("valid json")
}

#[test]
fn eval_direct_meets_width() {
    let o = run(&[
        "eval", "--r", "1", "--method", "direct", "--width", "1e-9", "--format", "json",
    ]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["method"], "direct");
    let lo: f64 = v["enclosure"]["lo_decimal"]
        .as_str()
        .unwrap()
        .parse()
        .unwrap();
    let hi: f64 = v["enclosure"]["hi_decimal"]
        .as_str()
        .unwrap()
        .parse()
        .unwrap();
    assert!(hi - lo <= 1.1e-9);
    assert!(lo < 0.794233542759 && 0.794233542760 < hi + 1e-12);
}

#[test]
fn eval_small_r_is_near_twice_zeta3() {
    let o = run(&["eval", "--r", "0.0001", "--method", "zeta"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("method: zeta"), "{text}");
    assert!(text.contains("[2.40411376"), "{text}");
}

#[test]
fn eval_accepts_fraction_syntax() {
    let a = stdout(&run(&["eval", "--r", "257/100", "--quantity", "alpha"]));
    let b = stdout(&run(&["eval", "--r", "2.57", "--quantity", "alpha"]));
    assert_eq!(a, b);
    assert!(a.contains("0.4709258826"), "{a}");
}

#[test]
fn eval_rejects_bad_input() {
    assert_eq!(code(&run(&["eval", "--r", "-1"])), 2);
    assert_eq!(code(&run(&["eval", "--r", "0"])), 2);
    assert_eq!(code(&run(&["eval", "--r", "abc"])), 2);
    assert_eq!(code(&run(&["eval", "--r", "1", "--method", "nope"])), 2);
}

#[test]
fn table_matches_golden_file() {
    let o = run(&[
        "table", "--rmin", "0.5", "--rmax", "3", "--step", "0.5", "--digits", "20",
    ]);
    assert_eq!(code(&o), 0);
    let golden = include_str!("golden/table_0.5_3_0.5.csv");
    assert_eq!(stdout(&o), golden);
}

#[test]
fn table_rows_respect_bracket() {
    let o = run(&["table", "--rmin", "0.25", "--rmax", "10", "--step", "0.75"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("r,S_lo,S_hi,lower_bound,upper_bound,alpha_lo,alpha_hi")
    );
    let mut rows = 0;
    for line in lines {
        let f: Vec<&str> = line.split(',').collect();
        assert_eq!(f.len(), 7);
        // fixed-width decimals with equal integer parts compare lexically
        assert!(f[3] < f[1], "lower bound not below S in {line}");
        assert!(f[2] < f[4], "S not below upper bound in {line}");
        assert!(f[5] <= f[6]);
        rows += 1;
    }
    assert_eq!(rows, 14);
}

#[test]
fn table_single_point_at_threshold() {
    let o = run(&["table", "--rmin", "2.57", "--rmax", "2.57", "--step", "1"]);
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 1);
    let f: Vec<&str> = rows[0].split(',').collect();
    assert_eq!(f[0], "2.57");
    assert!(f[5].starts_with("0.4709258826"));
    assert!(f[6].starts_with("0.4709258826"));
}

#[test]
fn table_json_rows() {
    let v = json(&run(&[
        "table", "--rmin", "1", "--rmax", "2", "--step", "1/2", "--format", "json",
    ]));
    assert_eq!(v["rows"].as_array().unwrap().len(), 3);
    assert_eq!(v["rows"][2]["r"], "2");
    assert!(v["rows"][0]["S"]["lo"].as_str().unwrap().contains('/'));
}

#[test]
fn table_rejects_bad_range() {
    assert_eq!(
        code(&run(&[
            "table", "--rmin", "3", "--rmax", "1", "--step", "1"
        ])),
        2
    );
    assert_eq!(
        code(&run(&[
            "table", "--rmin", "0", "--rmax", "1", "--step", "1"
        ])),
        2
    );
    assert_eq!(
        code(&run(&[
            "table", "--rmin", "1", "--rmax", "2", "--step", "0"
        ])),
        2
    );
}

#[test]
fn verify_all_exits_zero_with_schema() {
    let o = run(&["verify", "all"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let v = json(&o);
    assert_eq!(v["target"], "all");
    assert_eq!(v["overall"], "VERIFIED");
    for c in v["checks"].as_array().unwrap() {
        for key in ["name", "status", "witness", "detail"] {
            assert!(c.get(key).is_some(), "missing {key} in {c}");
        }
        assert_eq!(c["status"], "VERIFIED", "{c}");
    }
}

#[test]
fn verify_coarse_zeta_is_inconclusive() {
    let o = run(&["verify", "lemma2", "--zeta-width", "1e-2"]);
    assert_eq!(code(&o), 3);
    assert_eq!(json(&o)["overall"], "INCONCLUSIVE");
}

#[test]
fn verify_theorem_custom_grid() {
    let o = run(&[
        "verify",
        "theorem",
        "--grid",
        "0.5, 7/2, 40",
        "--format",
        "plain",
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("theorem: VERIFIED"));
}

#[test]
fn verify_unknown_target_is_usage_error() {
    assert_eq!(code(&run(&["verify", "bogus"])), 2);
}

#[test]
fn asymptotic_coefficients() {
    let o = run(&["asymptotic", "--terms", "4"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    for c in ["13/30", "104/525", "592/2625", "404032/1010625"] {
        assert!(text.contains(c), "{c} missing from {text}");
    }
    assert!(!text.contains("derived"));

    let one = stdout(&run(&["asymptotic", "--terms", "1"]));
    assert!(one.contains("a_0 = 13/30") && !one.contains("a_1"));

    let six = json(&run(&["asymptotic", "--terms", "6", "--format", "json"]));
    let coeffs = six["coefficients"].as_array().unwrap();
    assert_eq!(coeffs.len(), 6);
    assert_eq!(coeffs[4]["source"], "derived, no paper reference");
    assert_eq!(coeffs[5]["source"], "derived, no paper reference");
    assert_eq!(six["stable_under_k_plus_2"], true);

    assert_eq!(code(&run(&["asymptotic", "--terms", "0"])), 2);
}
