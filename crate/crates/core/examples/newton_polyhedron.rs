// Newton polyhedron, compact faces and non-degeneracy of an ideal.

use icis::newton::is_newton_nondegenerate;
use icis::polyring::{parse_polynomial, Vars};
use icis::standard_basis::Budget;

fn main() {
    let v = Vars::new(&["x", "y"]).unwrap();
    for gens in [["x^2+y^2", "x*y", "x^3"], ["(x+y)^2", "x^3", "y^3"]] {
        let ideal: Vec<_> = gens.iter().map(|g| parse_polynomial(g, &v).unwrap()).collect();
        let report = is_newton_nondegenerate(&ideal, Budget::default()).unwrap();
        let vertices: Vec<String> = report.polyhedron.vertices().iter().map(ToString::to_string).collect();
        println!("<{}>: vertices {}", gens.join(", "), vertices.join(" "));
        for line in report.transcript() {
            println!("  {line}");
        }
        println!("  non-degenerate: {}", report.is_nondegenerate());
    }
}
