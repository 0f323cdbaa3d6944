// Refuting (2_X) and (3_X) with an arc.

use std::collections::BTreeMap;

use icis::arcs::{test_conditions_on_arcs, Arc, ArcOutcome};
use icis::invariants::{FamilyFixedX, MapGerm};
use icis::polyring::{parse_polynomial, Vars};

fn main() {
    let space = Vars::new(&["x", "y", "z"]).unwrap();
    let total = Vars::new(&["x", "y", "z", "t"]).unwrap();
    let s = Vars::new(&["s"]).unwrap();
    let phi = parse_polynomial("x^5+y^3+z^2", &space).unwrap();
    let fam = FamilyFixedX::new(
        MapGerm::new(&space, vec![phi]).unwrap(),
        "t",
        parse_polynomial("x*y-t*z", &total).unwrap(),
    )
    .unwrap();
    let arc = Arc::new(
        &s,
        BTreeMap::from([
            ("x".to_string(), parse_polynomial("-s^2", &s).unwrap()),
            ("z".to_string(), parse_polynomial("s^5", &s).unwrap()),
        ]),
    )
    .unwrap();
    let report = test_conditions_on_arcs(&fam, &[arc]).unwrap();
    if let ArcOutcome::Evaluated(r) = &report.outcomes[0] {
        println!("nu(dF/dt) = {}, nu(J_X) = {}", r.nu_dfdt, r.nu_jx);
    }
    println!("(2_X): {}, (3_X): {}", report.condition_2, report.condition_3);
}
