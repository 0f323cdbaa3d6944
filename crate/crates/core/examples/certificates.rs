// Weighted-homogeneous and Newton-polyhedron certificates.

use icis::invariants::{FamilyFixedX, MapGerm};
use icis::newton::{certify_newton, certify_weighted_nonnegative, CertificateVerdict};
use icis::polyring::{parse_polynomial, Vars};
use icis::standard_basis::Budget;

fn family(space: &[&str], phi: &[&str], f: &str) -> FamilyFixedX {
    let v = Vars::new(space).unwrap();
    let mut names = space.to_vec();
    names.push("t");
    let tv = Vars::new(&names).unwrap();
    let phi = phi.iter().map(|p| parse_polynomial(p, &v).unwrap()).collect();
    FamilyFixedX::new(MapGerm::new(&v, phi).unwrap(), "t", parse_polynomial(f, &tv).unwrap()).unwrap()
}

fn main() {
    let e6 = family(&["x", "y"], &["x^4-y^3"], "x+t*y");
    let cert = certify_weighted_nonnegative(&e6, None, 0, Budget::default()).unwrap();
    println!("x + t*y on x^4 = y^3: {} ({})", cert.verdict.label(), cert.reason);
    assert_eq!(cert.verdict, CertificateVerdict::Certified);

    let curve = family(&["x", "y", "z"], &["x*y", "x^15+y^10+z^6"], "x+z+t*x*y");
    let cert = certify_newton(&curve, Budget::default()).unwrap();
    println!("x + z + t*x*y on a space curve: {}", cert.verdict.label());
    for check in &cert.checks {
        println!("  {} {}", if check.passed { "ok  " } else { "FAIL" }, check.description);
    }
}
