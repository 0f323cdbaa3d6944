// mu-constancy of `x + t*y` on the plane curves `x^p = y^q`.

use icis::invariants::{family_mu_check, FamilyFixedX, MapGerm};
use icis::polyring::{parse_polynomial, Vars};
use icis::standard_basis::Budget;

fn main() {
    let space = Vars::new(&["x", "y"]).unwrap();
    let total = Vars::new(&["x", "y", "t"]).unwrap();
    for (p, q) in [(2, 3), (3, 5), (4, 3)] {
        let phi = parse_polynomial(&format!("x^{p}-y^{q}"), &space).unwrap();
        let family = parse_polynomial("x+t*y", &total).unwrap();
        let fam = FamilyFixedX::new(MapGerm::new(&space, vec![phi]).unwrap(), "t", family).unwrap();
        let check = family_mu_check(&fam, 3, 0, Budget::default()).unwrap();
        println!(
            "x^{p} - y^{q}: mu_0 = {}, mu_gen = {:?}, {}",
            check.mu0,
            check.mu_gen,
            check.verdict.label()
        );
    }
}
