use super::*;
use crate::error::Error;
use crate::polyring::{parse_polynomial, Polynomial, Vars};
use crate::standard_basis::{Budget, Colength};

fn ring(names: &[&str]) -> Vars {
    Vars::new(names).unwrap()
}

fn p(v: &Vars, s: &str) -> Polynomial {
    parse_polynomial(s, v).unwrap()
}

fn germ(v: &Vars, phi: &[&str]) -> MapGerm {
    MapGerm::new(v, phi.iter().map(|s| p(v, s)).collect()).unwrap()
}

fn on(v: &Vars, phi: &[&str], f: &str) -> FunctionOnGerm {
    FunctionOnGerm::new(germ(v, phi), p(v, f)).unwrap()
}

const B: Budget = Budget {
    max_steps: 1_000_000,
    max_time: std::time::Duration::from_secs(60),
};

#[test]
fn mu_rel_examples() {
    let xyz = ring(&["x", "y", "z"]);
    assert_eq!(
        mu_rel(&on(&xyz, &["x^5+y^3+z^2"], "x*y"), B).unwrap(),
        Colength::Finite(17)
    );
    let xy = ring(&["x", "y"]);
    assert_eq!(mu_rel(&on(&xy, &["x^2-y^3"], "x"), B).unwrap(), Colength::Finite(4));
    assert_eq!(mu_rel(&on(&xy, &[], "x^3+y^3"), B).unwrap(), Colength::Finite(4));
    // non-isolated: f = x^2 on C^2
    assert_eq!(mu_rel(&on(&xy, &[], "x^2"), B).unwrap(), Colength::Infinite);
}

#[test]
fn mu_icis_examples() {
    let xy = ring(&["x", "y"]);
    assert_eq!(mu_icis(&germ(&xy, &["x^2-y^3"]), 0, B).unwrap(), Colength::Finite(2));
    let xyz = ring(&["x", "y", "z"]);
    assert_eq!(
        mu_icis(&germ(&xyz, &["x^5+y^3+z^2"]), 0, B).unwrap(),
        Colength::Finite(8)
    );
    assert_eq!(mu_icis(&germ(&xyz, &[]), 0, B).unwrap(), Colength::Finite(0));
}

#[test]
fn non_icis_is_a_hypothesis_failure() {
    let xyz = ring(&["x", "y", "z"]);
    let err = mu_icis(&germ(&xyz, &["x^2"]), 0, B).unwrap_err();
    assert!(matches!(err, Error::Hypothesis(_)), "{err:?}");
}

#[test]
fn germ_validation() {
    let xy = ring(&["x", "y"]);
    assert!(MapGerm::new(&xy, vec![p(&xy, "x"), p(&xy, "y")]).is_err());
    assert!(MapGerm::new(&xy, vec![p(&xy, "x+1")]).is_err());
    assert!(FunctionOnGerm::new(germ(&xy, &[]), p(&xy, "1+x")).is_err());
}

#[test]
fn milnor_report_examples() {
    let xy = ring(&["x", "y"]);
    let r = milnor_report(&on(&xy, &["x^2-y^3"], "x"), 0, B).unwrap();
    assert_eq!(
        (r.mu_rel, r.mu_x, r.mu_section),
        (Colength::Finite(4), Colength::Finite(2), Colength::Finite(2))
    );
    let xyz = ring(&["x", "y", "z"]);
    let r = milnor_report(&on(&xyz, &["x^5+y^3+z^2"], "x*y"), 0, B).unwrap();
    assert_eq!(
        (r.mu_rel, r.mu_x, r.mu_section),
        (Colength::Finite(17), Colength::Finite(8), Colength::Finite(9))
    );
    let r = milnor_report(&on(&xy, &[], "x^2+y^2"), 0, B).unwrap();
    assert_eq!(
        (r.mu_rel, r.mu_x, r.mu_section),
        (Colength::Finite(1), Colength::Finite(0), Colength::Finite(1))
    );
}

#[test]
fn family_example_not_constant() {
    let xyz = ring(&["x", "y", "z"]);
    let txyz = ring(&["x", "y", "z", "t"]);
    let fam = FamilyFixedX::new(germ(&xyz, &["x^5+y^3+z^2"]), "t", p(&txyz, "x*y - t*z")).unwrap();
    let check = family_mu_check(&fam, 3, 0, B).unwrap();
    assert_eq!(check.mu0, 17);
    assert_eq!(check.mu_gen, Some(16));
    assert_eq!(check.verdict, Verdict::NotConstant);
}

#[test]
fn cusp_families() {
    let xy = ring(&["x", "y"]);
    let txy = ring(&["x", "y", "t"]);
    let fam = FamilyFixedX::new(germ(&xy, &["x^2-y^3"]), "t", p(&txy, "x+t*y")).unwrap();
    let check = family_mu_check(&fam, 3, 7, B).unwrap();
    assert_eq!(
        (check.mu0, check.mu_gen, check.verdict),
        (4, Some(3), Verdict::NotConstant)
    );

    let fam = FamilyFixedX::new(germ(&xy, &["x^4-y^3"]), "t", p(&txy, "x+t*y")).unwrap();
    let check = family_mu_check(&fam, 3, 7, B).unwrap();
    assert_eq!(check.verdict, Verdict::Constant);
    assert_eq!(Some(check.mu0), check.mu_gen);
}

#[test]
fn deformed_germ_families() {
    let xy = ring(&["x", "y"]);
    let txy = ring(&["x", "y", "t"]);
    let fam = FamilyDeformedX::new(&xy, "t", vec![p(&txy, "x^2-y^3-t*y^2")], p(&xy, "x")).unwrap();
    let check = family_mu_check_deformed_x(&fam, 3, 1, B).unwrap();
    assert_eq!(check.mu0, 4);
    assert_eq!(check.mu_gen, Some(2));
    assert_eq!(check.verdict, Verdict::NotConstant);

    let fam = FamilyDeformedX::new(&xy, "t", vec![p(&txy, "x^2-y^3")], p(&xy, "x")).unwrap();
    assert_eq!(
        family_mu_check_deformed_x(&fam, 3, 1, B).unwrap().verdict,
        Verdict::Constant
    );

    let xyz = ring(&["x", "y", "z"]);
    let txyz = ring(&["x", "y", "z", "t"]);
    let fam = FamilyDeformedX::new(&xyz, "t", vec![p(&txyz, "x^2 + t*y^2")], p(&xyz, "z")).unwrap();
    let err = family_mu_check_deformed_x(&fam, 3, 1, B).unwrap_err();
    assert!(matches!(err, Error::Hypothesis(_)));
}

#[test]
fn seeds_are_deterministic() {
    assert_eq!(sample_parameters(3, 42), sample_parameters(3, 42));
    assert_ne!(sample_parameters(3, 42), sample_parameters(3, 43));
    let xy = ring(&["x", "y"]);
    let txy = ring(&["x", "y", "t"]);
    let fam = FamilyFixedX::new(germ(&xy, &["x^2-y^3"]), "t", p(&txy, "x+t*y")).unwrap();
    assert_eq!(
        family_mu_check(&fam, 4, 9, B).unwrap(),
        family_mu_check(&fam, 4, 9, B).unwrap()
    );
}

#[test]
fn split_form() {
    let xy = ring(&["x", "y"]);
    let txy = ring(&["x", "y", "t"]);
    let fam = FamilyFixedX::new(germ(&xy, &["x^2-y^3"]), "t", p(&txy, "x+t*y")).unwrap();
    assert_eq!(fam.split(), Some((p(&xy, "x"), p(&xy, "y"))));
    let fam = FamilyFixedX::new(germ(&xy, &["x^2-y^3"]), "t", p(&txy, "x+t^2*y")).unwrap();
    assert_eq!(fam.split(), None);
    assert_eq!(fam.t_expansion().unwrap(), vec![p(&xy, "x"), p(&xy, "0"), p(&xy, "y")]);
}
