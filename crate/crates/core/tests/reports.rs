use mathieu_core::verify::{
    default_theorem_grid, verify_lemma1, verify_lemma2, verify_lemma3, verify_theorem, CheckStatus,
    LemmaReport, VerifyConfig,
};

fn show(r: &LemmaReport) {
    println!("== {} : {}", r.target, r.overall());
    for c in &r.checks {
        println!(
            "  [{}] {} ({}): {}",
            c.status,
            c.name,
            c.kind.as_str(),
            c.detail
        );
        if let Some(w) = &c.witness {
            println!("      witness: {w}");
        }
    }
}

#[test]
fn lemma1_verified() {
    let r = verify_lemma1(&VerifyConfig::default());
    show(&r);
    assert_eq!(r.overall(), CheckStatus::Verified);
}

#[test]
fn lemma2_verified() {
    let r = verify_lemma2(&VerifyConfig::default());
    show(&r);
    assert_eq!(r.overall(), CheckStatus::Verified);
}

#[test]
fn lemma3_verified() {
    let r = verify_lemma3(&VerifyConfig::default());
    show(&r);
    assert_eq!(r.overall(), CheckStatus::Verified);
}

#[test]
fn theorem_verified() {
    let r = verify_theorem(&default_theorem_grid(), &VerifyConfig::default());
    show(&r);
    assert_eq!(r.overall(), CheckStatus::Verified);
}
