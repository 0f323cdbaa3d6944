//! One pass/fail line per acceptance criterion. All comparisons are on
//! exact integers, so the tolerance is zero throughout; each criterion must
//! also finish within `TIME_LIMIT`.

mod common;

use std::time::{Duration, Instant};

use common::*;
use icis::cli::{run_command, validate_conditions, Command, ReportDocument, RunOptions, Status};
use icis::invariants::{milnor_report, mu_rel, FunctionOnGerm, MapGerm};
use icis::polyring::{MonomialOrder, OrderKind, Rational};
use icis::standard_basis::{colength, Budget, Colength, IdealBasis};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Exact integer comparisons.
const TOLERANCE: u64 = 0;
const TIME_LIMIT: Duration = Duration::from_secs(30);

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

#[allow(clippy::absurd_extreme_comparisons)]
fn exact(got: &str, want: u64, what: &str) -> Result<(), String> {
    let g: u64 = got.parse().map_err(|_| format!("{what}: {got} is not an integer"))?;
    check(g.abs_diff(want) <= TOLERANCE, format!("{what}: got {g}, want {want}"))
}

fn doc(cmd: Command, name: &str) -> Result<ReportDocument, String> {
    run_command(cmd, &fixture(name), &RunOptions::default()).map_err(|e| format!("{} on {name}: {e}", cmd.name()))
}

fn field(d: &ReportDocument, path: &[&str]) -> String {
    let mut v = &d.results;
    for p in path {
        v = if let Ok(i) = p.parse::<usize>() { &v[i] } else { &v[*p] };
    }
    v.as_str().map(str::to_string).unwrap_or_else(|| v.to_string())
}

fn criterion_1() -> Outcome {
    let m = doc(Command::Milnor, "brieskorn_xy_minus_tz.icis")?;
    exact(&field(&m, &["mu_rel"]), 17, "mu_0")?;
    let f = doc(Command::FamilyCheck, "brieskorn_xy_minus_tz.icis")?;
    exact(&field(&f, &["mu_gen"]), 16, "mu_gen")?;
    check(field(&f, &["verdict"]) == "NOT CONSTANT", "verdict")?;
    Ok("mu_0 = 17, mu_gen = 16, NOT CONSTANT".into())
}

fn criterion_2() -> Outcome {
    for (name, p, q) in [("cusp_x_plus_ty.icis", 2, 3), ("x3_y5_x_plus_ty.icis", 3, 5)] {
        let f = doc(Command::FamilyCheck, name)?;
        exact(&field(&f, &["mu0"]), p * q - p, "mu_0")?;
        exact(&field(&f, &["mu_gen"]), p * q - q, "mu_gen")?;
    }
    Ok("(2,3): 4 -> 3, (3,5): 12 -> 10".into())
}

fn criterion_3() -> Outcome {
    let c = doc(Command::Certify, "e6_x_plus_ty.icis")?;
    check(
        field(&c, &["certified_by"]) == "weighted-nonnegative",
        "certificate kind",
    )?;
    check(
        c.results["certificates"][0]["weights"]["w"] == serde_json::json!(["3", "4"]),
        "weights (3,4)",
    )?;
    let f = doc(Command::FamilyCheck, "e6_x_plus_ty.icis")?;
    check(field(&f, &["verdict"]).starts_with("CONSTANT"), "family-check CONSTANT")?;
    let a = doc(Command::ArcTest, "e6_x_plus_ty.icis")?;
    check(
        a.conditions.get(2) == Status::Refuted && a.conditions.get(3) == Status::Refuted,
        "arc refutes (2_X), (3_X)",
    )?;
    Ok("CERTIFIED w = (3,4), CONSTANT, (2_X) and (3_X) refuted by (0, s^3, s^4)".into())
}

fn criterion_4() -> Outcome {
    let a = doc(Command::ArcTest, "brieskorn_xy_minus_tz.icis")?;
    exact(&field(&a, &["arcs", "0", "nu_dFdt"]), 5, "nu(dF/dt)")?;
    exact(&field(&a, &["arcs", "0", "nu_JX"]), 7, "nu(J_X)")?;
    check(a.conditions.get(3) == Status::Refuted, "(3_X) REFUTED")?;
    Ok("valuations 5 and 7, (3_X) REFUTED".into())
}

fn criterion_5() -> Outcome {
    let q = 2;
    let a = doc(Command::ArcTest, "x4_y2_tx5.icis")?;
    exact(&field(&a, &["arcs", "0", "nu_dFdt"]), 4 * q - 3, "nu(dF/dt)")?;
    exact(&field(&a, &["arcs", "0", "nu_JX"]), 4 * q - 3, "nu(J_X)")?;
    check(a.conditions.get(2) == Status::Refuted, "(2_X) REFUTED")?;
    check(field(&a, &["(3_X)"]) == "NO-REFUTATION-FOUND", "(3_X) not refuted")?;
    Ok("both valuations 5, (2_X) REFUTED only".into())
}

fn criterion_6() -> Outcome {
    for name in ["space_curve_x_plus_z.icis", "surface_xy_z2_tx3.icis"] {
        let n = doc(Command::Newton, name)?;
        check(n.results["nondegenerate"] == true, format!("{name}: non-degenerate"))?;
        let c = doc(Command::Certify, name)?;
        check(
            field(&c, &["certified_by"]) == "newton-inclusion",
            format!("{name}: newton-inclusion"),
        )?;
        let f = doc(Command::FamilyCheck, name)?;
        check(
            field(&f, &["verdict"]).starts_with("CONSTANT"),
            format!("{name}: CONSTANT"),
        )?;
    }
    Ok("non-degenerate, CERTIFIED by newton-inclusion and CONSTANT for both".into())
}

fn criterion_7() -> Outcome {
    // Brieskorn
    let names = ["x", "y", "z"];
    let mut count = 0;
    for n in 1..=3usize {
        let v = ring(&names[..n]);
        for code in 0..4usize.pow(n as u32) {
            let exps: Vec<u32> = (0..n).map(|i| (code / 4usize.pow(i as u32) % 4) as u32 + 2).collect();
            let f = exps
                .iter()
                .zip(names)
                .map(|(a, x)| format!("{x}^{a}"))
                .collect::<Vec<_>>()
                .join("+");
            let fg = FunctionOnGerm::new(MapGerm::ambient(&v).unwrap(), poly(&v, &f)).unwrap();
            let want: u64 = exps.iter().map(|&a| u64::from(a - 1)).product();
            let got = mu_rel(&fg, Budget::default()).map_err(|e| e.to_string())?;
            check(got == Colength::Finite(want), format!("Brieskorn {f}: {got}"))?;
            count += 1;
        }
    }
    // Lê-Greuel cross-check on every fixture with a finite Milnor number
    let mut crosschecked = 0;
    for name in fixture_names() {
        let fg = fixture(&name).function_at_zero().map_err(|e| e.to_string())?;
        let r = milnor_report(&fg, 0, Budget::default()).map_err(|e| format!("{name}: {e}"))?;
        if r.mu_rel.is_finite() {
            check(
                r.diagnostics.iter().any(|d| d.contains("cross-check passed")),
                format!("{name}: cross-check"),
            )?;
            crosschecked += 1;
        }
    }
    // two local orders and the Macaulay oracle
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let v = ring(&["x", "y"]);
    let weighted = MonomialOrder::weighted(
        OrderKind::LocalNegDeg,
        &[Rational::from_integer(2.into()), Rational::from_integer(3.into())],
    )
    .unwrap();
    for case in 0..25 {
        let (a, b) = (rng.gen_range(2..7), rng.gen_range(2..7));
        let (c1, c2) = (rng.gen_range(-4..5), rng.gen_range(-4..5));
        let (i, j) = (rng.gen_range(0..4), rng.gen_range(0..4));
        let gens = vec![
            poly(&v, &format!("x^{a} + {c1}*x^{i}*y^{}", j + 1)),
            poly(&v, &format!("y^{b} + {c2}*x^{}*y^{j}", i + 1)),
            poly(&v, &format!("x^{}*y^{}", a + 1, b)),
        ];
        let oracle =
            macaulay_colength(&gens, 2, 40).ok_or(format!("case {case}: oracle did not converge on {gens:?}"))?;
        let local =
            colength(&IdealBasis::local(gens.clone()).unwrap(), Budget::default()).map_err(|e| e.to_string())?;
        let other = colength(
            &IdealBasis::new(gens.clone(), weighted.clone()).unwrap(),
            Budget::default(),
        )
        .map_err(|e| e.to_string())?;
        check(
            local == Colength::Finite(oracle),
            format!("case {case}: {local} vs oracle {oracle}"),
        )?;
        check(local == other, format!("case {case}: orders disagree"))?;
    }
    Ok(format!(
        "{count} Brieskorn germs, {crosschecked} fixtures cross-checked, 25 random ideals"
    ))
}

fn criterion_8() -> Outcome {
    let mut reports = 0;
    for name in fixture_names() {
        let p = fixture(&name);
        for cmd in ALL_COMMANDS {
            if let Ok(d) = run_command(cmd, &p, &RunOptions::default()) {
                validate_conditions(&d.to_json()["conditions"])
                    .map_err(|e| format!("{} on {name}: {e}", cmd.name()))?;
                reports += 1;
            }
        }
    }
    Ok(format!("{reports} reports satisfy the implication constraints"))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("Brieskorn surface with f = xy - tz", criterion_1),
        ("plane curve families x^p - y^q", criterion_2),
        ("mu-constant family violating (3_X)", criterion_3),
        ("arc valuations for xy - tz", criterion_4),
        ("arc on x^4 = y^2 with equal valuations", criterion_5),
        ("Newton non-degenerate examples", criterion_6),
        ("property suite", criterion_7),
        ("report validator", criterion_8),
    ];
    let mut failures = 0;
    for (i, (title, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f().and_then(|msg| {
            let t = start.elapsed();
            if t > TIME_LIMIT {
                Err(format!("took {t:?}"))
            } else {
                Ok(msg)
            }
        });
        match outcome {
            Ok(msg) => println!("criterion {}: PASS  {title}: {msg} ({:.2?})", i + 1, start.elapsed()),
            Err(msg) => {
                failures += 1;
                println!("criterion {}: FAIL  {title}: {msg}", i + 1);
            }
        }
    }
    if failures > 0 {
        println!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
}
