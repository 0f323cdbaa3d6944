// Parsing a problem file and rendering a report, as the `icis` binary does.

use icis::cli::{parse_problem, run_command, Command, Format, RunOptions};

const PROBLEM: &str = "\
# x + t*y on the cusp
vars: x y
phi: x^2-y^3
f: x
g: y
";

fn main() {
    let problem = parse_problem(PROBLEM).unwrap();
    let report = run_command(Command::FamilyCheck, &problem, &RunOptions::default()).unwrap();
    print!("{}", report.render(Format::Text));
}
