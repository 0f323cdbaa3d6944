use num_bigint::BigInt;

use super::*;
use crate::invariants::{FamilyFixedX, MapGerm};
use crate::polyring::{parse_polynomial, ExponentVector, Polynomial, Vars};
use crate::standard_basis::Budget;

fn ring(names: &[&str]) -> Vars {
    Vars::new(names).unwrap()
}

fn polys(v: &Vars, src: &[&str]) -> Vec<Polynomial> {
    src.iter().map(|s| parse_polynomial(s, v).unwrap()).collect()
}

fn ev(e: &[u32]) -> ExponentVector {
    ExponentVector::new(e.to_vec())
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn family(space: &[&str], phi: &[&str], family: &str) -> FamilyFixedX {
    let v = ring(space);
    let mut total: Vec<&str> = space.to_vec();
    total.push("t");
    let tv = ring(&total);
    let germ = MapGerm::new(&v, polys(&v, phi)).unwrap();
    FamilyFixedX::new(germ, "t", parse_polynomial(family, &tv).unwrap()).unwrap()
}

#[test]
fn brieskorn_vertices() {
    let v = ring(&["x", "y", "z"]);
    let np = newton_polyhedron(&polys(&v, &["x^5+y^3+z^2"])).unwrap();
    assert_eq!(np.vertices(), &[ev(&[0, 0, 2]), ev(&[0, 3, 0]), ev(&[5, 0, 0])]);
    assert!(!np.contains(&ev(&[0, 0, 1])));
    assert!(np.contains(&ev(&[1, 1, 1])));
    // 6x + 10y + 15z >= 30 and the three coordinate half-spaces
    assert_eq!(np.facets().len(), 4);
    assert!(np
        .facets()
        .iter()
        .any(|f| f.normal == ints(&[6, 10, 15]) && f.value == BigInt::from(30)));
}

#[test]
fn one_variable_and_constant() {
    let x = ring(&["x"]);
    let np = newton_polyhedron(&polys(&x, &["x^2"])).unwrap();
    assert_eq!(np.vertices(), &[ev(&[2])]);
    assert_eq!(
        np.facets(),
        &[Facet {
            normal: ints(&[1]),
            value: BigInt::from(2)
        }]
    );
    assert_eq!(np.compact_faces().len(), 1);

    let xy = ring(&["x", "y"]);
    let whole = newton_polyhedron(&polys(&xy, &["1+x"])).unwrap();
    assert_eq!(whole.vertices(), &[ev(&[0, 0])]);
    assert!(whole.contains(&ev(&[0, 0])) && whole.contains(&ev(&[7, 3])));
}

#[test]
fn two_point_faces() {
    let v = ring(&["x", "y"]);
    let np = newton_polyhedron(&polys(&v, &["x^2", "y^3"])).unwrap();
    let faces = np.compact_faces();
    assert_eq!(faces.len(), 3);
    assert_eq!(faces[2].dimension, 1);
    assert_eq!(faces[2].weight, ints(&[3, 2]));
    assert_eq!(faces[2].value, BigInt::from(6));
    assert!(faces.iter().all(|f| f.weight.iter().all(|w| w > &BigInt::from(0))));
}

#[test]
fn face_restrictions() {
    let v = ring(&["x", "y"]);
    let gens = polys(&v, &["(x+y)^2", "x^3", "y^3"]);
    let np = newton_polyhedron(&gens).unwrap();
    let faces = np.compact_faces();
    let edge = faces.iter().find(|f| f.dimension == 1).unwrap();
    assert_eq!(face_restriction(&gens[0], edge), gens[0]);
    assert!(face_restriction(&gens[1], edge).is_zero());
    let vertex = faces.iter().find(|f| f.vertices == [ev(&[2, 0])]).unwrap();
    assert_eq!(face_restriction(&gens[0], vertex), polys(&v, &["x^2"])[0]);
}

#[test]
fn nondegeneracy() {
    let v = ring(&["x", "y"]);
    let report = is_newton_nondegenerate(&polys(&v, &["(x+y)^2", "x^3", "y^3"]), Budget::default()).unwrap();
    assert!(!report.is_nondegenerate());
    let report = is_newton_nondegenerate(&polys(&v, &["x^2+y^2", "x*y"]), Budget::default()).unwrap();
    assert!(report.is_nondegenerate());
    assert!(is_newton_nondegenerate(&polys(&v, &["x^2"]), Budget::default()).is_err());

    let xyz = ring(&["x", "y", "z"]);
    let space_curve = polys(&xyz, &["x*y", "x^15+y^10+z^6", "6*x*z^5+10*y^10-15*x^15"]);
    assert!(is_newton_nondegenerate(&space_curve, Budget::default())
        .unwrap()
        .is_nondegenerate());
    let surface = polys(
        &xyz,
        &[
            "x^3+y^3+z^4+x*y*z",
            "-x^2*y+6*y^2*z+2*x*z^2-4*x*z^3",
            "-x*y^2+6*x^2*z+2*y*z^2-4*y*z^3",
            "-3*x^3+3*y^3",
        ],
    );
    assert!(is_newton_nondegenerate(&surface, Budget::default())
        .unwrap()
        .is_nondegenerate());
}

#[test]
fn torus_zeros() {
    let v = ring(&["x", "y"]);
    assert!(has_torus_zero(&polys(&v, &["x+y"]), Budget::default()).unwrap());
    assert!(!has_torus_zero(&polys(&v, &["x*y"]), Budget::default()).unwrap());
    assert!(!has_torus_zero(&polys(&v, &["x+y", "x-y"]), Budget::default()).unwrap());
    // a variable named u does not clash with the auxiliary one
    let u = ring(&["u", "v"]);
    assert!(has_torus_zero(&polys(&u, &["u-v"]), Budget::default()).unwrap());
}

#[test]
fn weights() {
    let xy = ring(&["x", "y"]);
    let w = find_weights(&polys(&xy, &["x^2-y^3"])).unwrap().unwrap();
    assert_eq!((w.weights, w.degrees), (vec![3, 2], vec![6]));
    let w = find_weights(&polys(&xy, &["x^4-y^3", "x"])).unwrap().unwrap();
    assert_eq!((w.weights, w.degrees), (vec![3, 4], vec![12, 3]));
    assert!(find_weights(&polys(&xy, &["x+y^2", "x^2+y^2"])).unwrap().is_none());
    assert!(find_weights(&polys(&xy, &["x+x^2"])).unwrap().is_none());
    assert!(find_weights(&polys(&xy, &["0"])).is_err());

    let xyz = ring(&["x", "y", "z"]);
    let w = find_weights(&polys(&xyz, &["x*y", "x^15+y^10+z^6"])).unwrap().unwrap();
    assert_eq!((w.weights, w.degrees), (vec![2, 3, 5], vec![5, 30]));
    // a two-dimensional cone of solutions: lexicographically smallest
    let w = find_weights(&polys(&xyz, &["x^2-y*z"])).unwrap().unwrap();
    assert_eq!(w.weights, vec![1, 1, 1]);
    let w = find_weights(&polys(&xyz, &["x*y"])).unwrap().unwrap();
    assert_eq!(w.weights, vec![1, 1, 1]);
}

#[test]
fn weighted_certificates() {
    let cert =
        certify_weighted_nonnegative(&family(&["x", "y"], &["x^4-y^3"], "x+t*y"), None, 0, Budget::default()).unwrap();
    assert_eq!(cert.verdict, CertificateVerdict::Certified, "{cert:?}");
    assert_eq!(cert.weights.as_ref().unwrap().weights, vec![3, 4]);

    let cert =
        certify_weighted_nonnegative(&family(&["x", "y"], &["x^2-y^3"], "x+t*y"), None, 0, Budget::default()).unwrap();
    assert_eq!(cert.verdict, CertificateVerdict::Failed, "{cert:?}");

    let cert = certify_weighted_nonnegative(
        &family(&["x", "y", "z"], &["x*y", "x^15+y^10+z^6"], "x+z+t*x*y"),
        None,
        0,
        Budget::default(),
    )
    .unwrap();
    assert_eq!(cert.verdict, CertificateVerdict::NotApplicable, "{cert:?}");

    // a valid hint is used as given, an invalid one is noted and replaced
    let fam = family(&["x", "y"], &["x^4-y^3"], "x+t*y");
    let cert = certify_weighted_nonnegative(&fam, Some(&[6, 8]), 0, Budget::default()).unwrap();
    assert_eq!(cert.weights.as_ref().unwrap().weights, vec![6, 8]);
    let cert = certify_weighted_nonnegative(&fam, Some(&[1, 1]), 0, Budget::default()).unwrap();
    assert_eq!(cert.weights.as_ref().unwrap().weights, vec![3, 4]);
    assert_eq!(cert.notes.len(), 1);
    assert_eq!(cert.verdict, CertificateVerdict::Certified);
}

#[test]
fn newton_certificates() {
    let space_curve = family(&["x", "y", "z"], &["x*y", "x^15+y^10+z^6"], "x+z+t*x*y");
    let cert = certify_newton(&space_curve, Budget::default()).unwrap();
    assert_eq!(cert.verdict, CertificateVerdict::Certified, "{:?}", cert.checks);

    let surface = family(&["x", "y", "z"], &["x^3+y^3+z^4+x*y*z"], "x*y+z^2+t*x^3");
    let cert = certify_newton(&surface, Budget::default()).unwrap();
    assert_eq!(cert.verdict, CertificateVerdict::Certified, "{:?}", cert.checks);

    let brieskorn = family(&["x", "y", "z"], &["x^5+y^3+z^2"], "x*y-t*z");
    let cert = certify_newton(&brieskorn, Budget::default()).unwrap();
    assert_eq!(cert.verdict, CertificateVerdict::Failed, "{:?}", cert.checks);

    let quadratic = family(&["x", "y"], &["x^2-y^3"], "x+t^2*y");
    let cert = certify_newton(&quadratic, Budget::default()).unwrap();
    assert_eq!(cert.verdict, CertificateVerdict::NotApplicable);
}
