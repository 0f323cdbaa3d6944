use std::time::Instant;

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use super::problem::{Configuration, ProblemFile};
use super::report::{validate_conditions, ConditionMap, ReportDocument, Status};
use crate::arcs::{test_conditions_on_arcs, ArcOutcome, ArcVerdict};
use crate::error::{Error, Result};
use crate::invariants::{
    family_mu_check, family_mu_check_deformed_x, milnor_report, relative_jacobian_ideal, FamilyCheck, FamilyFixedX,
    Verdict,
};
use crate::newton::{
    certify_newton, certify_weighted_nonnegative, is_newton_nondegenerate, Certificate, CertificateVerdict,
};
use crate::polyring::Polynomial;
use crate::standard_basis::Budget;

/// Settings shared by all commands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunOptions {
    pub samples: usize,
    pub seed: u64,
    pub budget: Budget,
    pub timings: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            samples: crate::invariants::DEFAULT_SAMPLES,
            seed: 0,
            budget: Budget::default(),
            timings: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Milnor,
    FamilyCheck,
    Certify,
    ArcTest,
    Newton,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Milnor => "milnor",
            Command::FamilyCheck => "family-check",
            Command::Certify => "certify",
            Command::ArcTest => "arc-test",
            Command::Newton => "newton",
        }
    }
}

pub fn run_command(cmd: Command, problem: &ProblemFile, opts: &RunOptions) -> Result<ReportDocument> {
    match cmd {
        Command::Milnor => cmd_milnor(problem, opts),
        Command::FamilyCheck => cmd_family_check(problem, opts),
        Command::Certify => cmd_certify(problem, opts),
        Command::ArcTest => cmd_arc_test(problem, opts),
        Command::Newton => cmd_newton(problem, opts),
    }
}

struct Timer {
    enabled: bool,
    phases: Map<String, Value>,
    last: Instant,
}

impl Timer {
    fn new(enabled: bool) -> Self {
        Timer {
            enabled,
            phases: Map::new(),
            last: Instant::now(),
        }
    }

    fn lap(&mut self, phase: &str) {
        let now = Instant::now();
        let ms = (now - self.last).as_millis();
        self.phases.insert(phase.to_string(), Value::String(ms.to_string()));
        self.last = now;
    }

    fn finish(self) -> Option<Value> {
        self.enabled.then_some(Value::Object(self.phases))
    }
}

fn document(
    cmd: Command,
    problem: &ProblemFile,
    opts: &RunOptions,
    results: Value,
    mut conditions: ConditionMap,
    timer: Timer,
) -> Result<ReportDocument> {
    conditions.propagate()?;
    let rendered = conditions.to_json();
    validate_conditions(&rendered).map_err(|e| Error::Internal(format!("condition map: {e}")))?;
    let digest = format!("{:x}", Sha256::digest(problem.canonical.as_bytes()));
    Ok(ReportDocument {
        command: cmd.name().to_string(),
        input: problem.canonical.clone(),
        digest,
        seed: opts.seed,
        samples: opts.samples,
        results,
        conditions,
        timings: timer.finish(),
    })
}

fn base_conditions(problem: &ProblemFile) -> ConditionMap {
    match problem.configuration {
        Configuration::Germ(_) => ConditionMap::not_applicable("no deformation given"),
        Configuration::DeformedX(_) => {
            ConditionMap::not_applicable("the conditions concern deformations of f on a fixed X")
        }
        Configuration::FixedX(_) => ConditionMap::unknown(),
    }
}

fn fixed_family(problem: &ProblemFile, cmd: Command) -> Result<&FamilyFixedX> {
    match &problem.configuration {
        Configuration::FixedX(fam) => Ok(fam),
        _ => Err(Error::input(format!(
            "{} needs a family on a fixed X (give F, or f and g)",
            cmd.name()
        ))),
    }
}

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

const MINOR_CONVENTION: &str =
    "maximal minors use rows (f, phi_1, ..., phi_p) and ascending column subsets; signs may differ from other conventions";

/// Milnor numbers of `f` on `X` (of `F(0, x)` for families).
pub fn cmd_milnor(problem: &ProblemFile, opts: &RunOptions) -> Result<ReportDocument> {
    let mut timer = Timer::new(opts.timings);
    let fg = problem.function_at_zero()?;
    let report = milnor_report(&fg, opts.seed, opts.budget)?;
    timer.lap("milnor");
    let mut results = json!({
        "mu_rel": report.mu_rel.to_string(),
        "mu_x": report.mu_x.to_string(),
        "mu_section": report.mu_section.to_string(),
        "diagnostics": report.diagnostics,
        "f": fg.function().to_string(),
        "minor_convention": MINOR_CONVENTION,
    });
    if !matches!(problem.configuration, Configuration::Germ(_)) {
        results["evaluated_at"] = json!(format!("{} = 0", problem.param));
    }
    document(Command::Milnor, problem, opts, results, base_conditions(problem), timer)
}

fn family_json(check: &FamilyCheck, param: &str) -> Value {
    let samples: Vec<Value> = check
        .samples
        .iter()
        .map(|s| json!({ param: s.value.to_string(), "mu": s.mu.to_string() }))
        .collect();
    json!({
        "mu0": check.mu0.to_string(),
        "mu_gen": check.mu_gen.map_or("-".to_string(), |m| m.to_string()),
        "samples": samples,
        "verdict": check.verdict.label(),
        "warnings": check.warnings,
    })
}

/// mu-constancy by specialization at seeded random parameter values.
pub fn cmd_family_check(problem: &ProblemFile, opts: &RunOptions) -> Result<ReportDocument> {
    let mut timer = Timer::new(opts.timings);
    let mut conditions = base_conditions(problem);
    let (check, shape) = match &problem.configuration {
        Configuration::FixedX(fam) => (family_mu_check(fam, opts.samples, opts.seed, opts.budget)?, "fixed X"),
        Configuration::DeformedX(fam) => (
            family_mu_check_deformed_x(fam, opts.samples, opts.seed, opts.budget)?,
            "deformed X",
        ),
        Configuration::Germ(_) => return Err(Error::input("family-check needs a family (give F, f and g, or Phi)")),
    };
    timer.lap("family_check");
    if matches!(problem.configuration, Configuration::FixedX(_)) {
        match check.verdict {
            Verdict::Constant => {
                let why = format!(
                    "mu = {} at {} = 0 and at {} sampled values (generic specialization)",
                    check.mu0,
                    problem.param,
                    check.samples.len()
                );
                conditions.set(1, Status::Verified, why.clone());
                conditions.set(6, Status::Verified, format!("equivalent to (1_X); {why}"));
            }
            Verdict::NotConstant => {
                let why = format!(
                    "mu = {} at {} = 0 but {} at a sampled value",
                    check.mu0,
                    problem.param,
                    check.mu_gen.map_or("-".to_string(), |m| m.to_string())
                );
                conditions.set(1, Status::Refuted, why.clone());
                conditions.set(6, Status::Refuted, format!("equivalent to (1_X); {why}"));
            }
            Verdict::Inconclusive => {}
        }
    }
    let mut results = family_json(&check, &problem.param);
    results["configuration"] = json!(shape);
    document(Command::FamilyCheck, problem, opts, results, conditions, timer)
}

fn certificate_json(c: &Certificate) -> Value {
    let checks: Vec<Value> = c
        .checks
        .iter()
        .map(|k| json!({"check": k.description, "passed": k.passed}))
        .collect();
    let mut v = json!({
        "kind": c.kind.name(),
        "verdict": c.verdict.label(),
        "reason": c.reason,
        "checks": checks,
        "notes": c.notes,
    });
    if let Some(w) = &c.weights {
        v["weights"] = json!({"w": strings(&w.weights), "degrees": strings(&w.degrees)});
    }
    if let Some(nd) = &c.nondegeneracy {
        v["nondegeneracy"] = json!({
            "nondegenerate": nd.is_nondegenerate(),
            "faces": nd.transcript(),
        });
    }
    v
}

/// Sufficient certificates: weighted-nonnegative first, then Newton
/// inclusion.
pub fn cmd_certify(problem: &ProblemFile, opts: &RunOptions) -> Result<ReportDocument> {
    let mut timer = Timer::new(opts.timings);
    let fam = fixed_family(problem, Command::Certify)?;
    let mut certs = vec![certify_weighted_nonnegative(
        fam,
        problem.weights.as_deref(),
        opts.seed,
        opts.budget,
    )?];
    timer.lap("weighted_nonnegative");
    if certs[0].verdict != CertificateVerdict::Certified {
        certs.push(certify_newton(fam, opts.budget)?);
        timer.lap("newton_inclusion");
    }
    let winner = certs.iter().find(|c| c.verdict == CertificateVerdict::Certified);
    let mut conditions = base_conditions(problem);
    let results = match winner {
        Some(c) => {
            conditions.set(4, Status::Verified, format!("{} certificate", c.kind.name()));
            json!({
                "verdict": "CERTIFIED",
                "certified_by": c.kind.name(),
                "certificates": certs.iter().map(certificate_json).collect::<Vec<_>>(),
            })
        }
        None => json!({
            "verdict": "UNKNOWN",
            "certified_by": "-",
            "note": "no certificate applies; certificates are only sufficient, so FAILED does not mean the family is not mu-constant (see family-check)",
            "certificates": certs.iter().map(certificate_json).collect::<Vec<_>>(),
        }),
    };
    document(Command::Certify, problem, opts, results, conditions, timer)
}

/// Valuations of `∂F/∂t` and `J_X` along the arcs of the problem file.
pub fn cmd_arc_test(problem: &ProblemFile, opts: &RunOptions) -> Result<ReportDocument> {
    let mut timer = Timer::new(opts.timings);
    let fam = fixed_family(problem, Command::ArcTest)?;
    if problem.arcs.is_empty() {
        return Err(Error::input("arc-test needs at least one `arc:` line"));
    }
    let report = test_conditions_on_arcs(fam, &problem.arcs)?;
    timer.lap("arcs");
    let arcs: Vec<Value> = problem
        .arcs
        .iter()
        .zip(&report.outcomes)
        .map(|(arc, o)| match o {
            ArcOutcome::Evaluated(r) => json!({
                "arc": arc.to_string(),
                "status": "evaluated",
                "nu_dFdt": r.nu_dfdt.to_string(),
                "nu_JX": r.nu_jx.to_string(),
                "per_generator": strings(&r.per_generator),
                "refutes_2X": r.refutes_2,
                "refutes_3X": r.refutes_3,
            }),
            ArcOutcome::Rejected(why) => json!({
                "arc": arc.to_string(),
                "status": "rejected",
                "reason": why,
            }),
        })
        .collect();
    let mut conditions = base_conditions(problem);
    let witness = |pick: fn(&crate::arcs::ValuationReport) -> bool| {
        report.outcomes.iter().zip(&problem.arcs).find_map(|(o, a)| match o {
            ArcOutcome::Evaluated(r) if pick(r) => {
                Some(format!("arc {a}: nu(dF/dt) = {} vs nu(J_X) = {}", r.nu_dfdt, r.nu_jx))
            }
            _ => None,
        })
    };
    if let Some(why) = witness(|r| r.refutes_3) {
        conditions.set(3, Status::Refuted, why);
    }
    if let Some(why) = witness(|r| r.refutes_2) {
        conditions.set(2, Status::Refuted, why);
    }
    let label = |v: ArcVerdict| v.label();
    let results = json!({
        "dF/dt": report.dfdt.to_string(),
        "J_X": strings(&report.generators),
        "arcs": arcs,
        "(2_X)": label(report.condition_2),
        "(3_X)": label(report.condition_3),
        "(4_X)": label(report.condition_4),
        "minor_convention": MINOR_CONVENTION,
    });
    document(Command::ArcTest, problem, opts, results, conditions, timer)
}

/// Newton polyhedron, compact faces and non-degeneracy of
/// `<phi> + J(f, phi)` (or of the explicit `ideal`).
pub fn cmd_newton(problem: &ProblemFile, opts: &RunOptions) -> Result<ReportDocument> {
    let mut timer = Timer::new(opts.timings);
    let ideal: Vec<Polynomial> = match &problem.ideal {
        Some(gens) => gens.clone(),
        None => relative_jacobian_ideal(&problem.function_at_zero()?)?,
    };
    let report = is_newton_nondegenerate(&ideal, opts.budget)?;
    timer.lap("newton");
    let poly = &report.polyhedron;
    let faces: Vec<Value> = report
        .faces
        .iter()
        .map(|f| {
            json!({
                "dimension": f.face.dimension.to_string(),
                "vertices": strings(&f.face.vertices),
                "points": strings(&f.face.points),
                "weight": strings(&f.face.weight),
                "value": f.face.value.to_string(),
                "restrictions": strings(&f.restrictions),
                "torus_zero": f.torus_zero,
            })
        })
        .collect();
    let results = json!({
        "ideal": strings(&ideal),
        "vertices": strings(poly.vertices()),
        "facets": strings(poly.facets()),
        "compact_faces": faces,
        "nondegenerate": report.is_nondegenerate(),
    });
    document(Command::Newton, problem, opts, results, base_conditions(problem), timer)
}
