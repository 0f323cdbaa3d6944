// Milnor numbers of a function on an ICIS and the Lê-Greuel split.

use icis::invariants::{milnor_report, FunctionOnGerm, MapGerm};
use icis::polyring::{parse_polynomial, Vars};
use icis::standard_basis::Budget;

fn main() {
    let vars = Vars::new(&["x", "y", "z"]).unwrap();
    let phi = parse_polynomial("x^5+y^3+z^2", &vars).unwrap();
    let f = parse_polynomial("x*y", &vars).unwrap();
    let fg = FunctionOnGerm::new(MapGerm::new(&vars, vec![phi]).unwrap(), f).unwrap();
    let report = milnor_report(&fg, 0, Budget::default()).unwrap();
    println!("mu(f|X) = {}", report.mu_rel);
    println!("mu(X) = {}", report.mu_x);
    println!("mu(X ∩ f^-1(0)) = {}", report.mu_section);
    assert_eq!(report.mu_rel.finite(), Some(17));
}
