use super::*;
use crate::polyring::parse_polynomial;

fn ring(names: &[&str]) -> Vars {
    Vars::new(names).unwrap()
}

fn polys(v: &Vars, gens: &[&str]) -> Vec<Polynomial> {
    gens.iter().map(|g| parse_polynomial(g, v).unwrap()).collect()
}

fn local_sb(v: &Vars, gens: &[&str]) -> StandardBasis {
    compute_standard_basis(&IdealBasis::local(polys(v, gens)).unwrap(), Budget::default()).unwrap()
}

fn global_sb(v: &Vars, gens: &[&str]) -> StandardBasis {
    compute_standard_basis(&IdealBasis::global(polys(v, gens)).unwrap(), Budget::default()).unwrap()
}

fn ev(e: &[u32]) -> ExponentVector {
    ExponentVector::new(e.to_vec())
}

#[test]
fn monomial_ideal_is_its_own_basis() {
    let v = ring(&["x", "y"]);
    let sb = local_sb(&v, &["x^2", "y^3"]);
    assert_eq!(sb.basis(), &polys(&v, &["x^2", "y^3"])[..]);
    assert_eq!(sb.staircase(), &[ev(&[2, 0]), ev(&[0, 3])]);
    assert_eq!(sb.colength(), Colength::Finite(6));
}

#[test]
fn specialized_cusp_pair() {
    // <x^2 - y^3, 3y^2 + 2x>: 2x leads locally, eliminating x leaves a
    // unit times y^3.
    let v = ring(&["x", "y"]);
    let sb = local_sb(&v, &["x^2-y^3", "3*y^2+2*x"]);
    let mut stairs = sb.staircase().to_vec();
    stairs.sort();
    assert_eq!(stairs, vec![ev(&[0, 3]), ev(&[1, 0])]);
    assert_eq!(sb.colength(), Colength::Finite(3));
}

#[test]
fn unit_ideal() {
    let v = ring(&["x", "y"]);
    let sb = local_sb(&v, &["1"]);
    assert_eq!(sb.staircase(), &[ev(&[0, 0])]);
    assert_eq!(sb.colength(), Colength::Finite(0));
    // 1 + x is a unit of the local ring but not of the polynomial ring
    assert!(local_sb(&v, &["1+x"]).is_unit());
    assert!(!global_sb(&v, &["1+x", "y"]).is_unit());
}

#[test]
fn colength_examples() {
    let v = ring(&["x", "y"]);
    let ideal = |g: &[&str]| IdealBasis::local(polys(&v, g)).unwrap();
    assert_eq!(
        colength(&ideal(&["x^2", "y^3"]), Budget::default()).unwrap(),
        Colength::Finite(6)
    );
    assert_eq!(
        colength(&ideal(&["x^2-y^3", "y^2"]), Budget::default()).unwrap(),
        Colength::Finite(4)
    );
    assert_eq!(colength(&ideal(&["x"]), Budget::default()).unwrap(), Colength::Infinite);
    assert_eq!(colength(&ideal(&["0"]), Budget::default()).unwrap(), Colength::Infinite);
}

#[test]
fn unit_ideal_examples() {
    let v = ring(&["x", "y"]);
    let g = |gens: &[&str]| IdealBasis::global(polys(&v, gens)).unwrap();
    assert!(is_unit_ideal(&g(&["x", "1-x"]), Budget::default()).unwrap());
    assert!(!is_unit_ideal(&g(&["x", "y"]), Budget::default()).unwrap());
    let vu = ring(&["x", "y", "u"]);
    let torus = IdealBasis::global(polys(&vu, &["x^2+2*x*y+y^2", "u*x*y-1"])).unwrap();
    assert!(!is_unit_ideal(&torus, Budget::default()).unwrap());
}

#[test]
fn normal_form_examples() {
    let v = ring(&["x", "y"]);
    let sb = local_sb(&v, &["y"]);
    assert_eq!(
        sb.normal_form(&parse_polynomial("x^2+y", &v).unwrap()).unwrap(),
        parse_polynomial("x^2", &v).unwrap()
    );
    let sb = local_sb(&v, &["x^2-y^3", "y^2"]);
    for g in ["x^2-y^3", "y^2", "x^2*y - y^4 + 5*y^2"] {
        assert!(sb.contains(&parse_polynomial(g, &v).unwrap()).unwrap(), "{g}");
    }
    let x = ring(&["x"]);
    let sb = local_sb(&x, &["x^2"]);
    assert_eq!(
        sb.normal_form(&parse_polynomial("x^3+x", &x).unwrap()).unwrap(),
        parse_polynomial("x", &x).unwrap()
    );
    let sb = global_sb(&v, &["x^2", "y"]);
    assert_eq!(
        sb.normal_form(&parse_polynomial("x^3+x*y+x+3", &v).unwrap()).unwrap(),
        parse_polynomial("x+3", &v).unwrap()
    );
}

#[test]
fn local_unit_multiples_reduce_to_zero() {
    // x - x^2 = x * (1 - x): x lies in the ideal of the local ring
    let v = ring(&["x", "y"]);
    let sb = local_sb(&v, &["x-x^2", "y^2"]);
    assert!(sb.contains(&parse_polynomial("x", &v).unwrap()).unwrap());
    assert!(!sb.contains(&parse_polynomial("y", &v).unwrap()).unwrap());
    assert_eq!(sb.colength(), Colength::Finite(2));
}

#[test]
fn budget_exhaustion_is_reported() {
    let v = ring(&["x", "y", "z"]);
    let ideal = IdealBasis::local(polys(&v, &["x^5+y^3+z^2", "3*y^3-5*x^5", "y*z", "x*z"])).unwrap();
    let tiny = Budget {
        max_steps: 3,
        max_time: Duration::from_secs(60),
    };
    match compute_standard_basis(&ideal, tiny) {
        Err(Error::ComputationLimit(msg)) => assert!(msg.contains("budget")),
        other => panic!("expected a computation limit, got {other:?}"),
    }
}

#[test]
fn deterministic_output() {
    let v = ring(&["x", "y", "z"]);
    let a = local_sb(&v, &["x^5+y^3+z^2", "3*y^3-5*x^5", "y*z", "x*z"]);
    let b = local_sb(&v, &["x^5+y^3+z^2", "3*y^3-5*x^5", "y*z", "x*z"]);
    assert_eq!(a.basis(), b.basis());
    assert_eq!(a.colength(), Colength::Finite(17));
}

#[test]
fn staircase_counting() {
    let st = [ev(&[2, 0, 0]), ev(&[0, 3, 0]), ev(&[0, 0, 1])];
    assert_eq!(staircase_colength(&st, 3), Colength::Finite(6));
    let st = [ev(&[3, 0]), ev(&[1, 1]), ev(&[0, 2])];
    assert_eq!(staircase_colength(&st, 2), Colength::Finite(4));
    let st = [ev(&[1, 1]), ev(&[2, 0])];
    assert_eq!(staircase_colength(&st, 2), Colength::Infinite);
}
