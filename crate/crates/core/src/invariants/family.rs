use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{mu_rel, FamilyDeformedX, FamilyFixedX, FunctionOnGerm};
use crate::error::{Error, Result};
use crate::polyring::Rational;
use crate::standard_basis::{Budget, Colength};

pub const DEFAULT_SAMPLES: usize = 3;

/// Result of comparing `mu` at `t = 0` with `mu` at sampled parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    /// Every sample agrees with `mu_0`. Specialization at finitely many
    /// points is a semi-decision; conclusive proofs come from certificates.
    Constant,
    NotConstant,
    /// No sample produced a finite Milnor number.
    Inconclusive,
}

impl Verdict {
    pub fn label(self) -> &'static str {
        match self {
            Verdict::Constant => "CONSTANT (generically certified by specialization)",
            Verdict::NotConstant => "NOT CONSTANT",
            Verdict::Inconclusive => "INCONCLUSIVE",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sample {
    pub value: Rational,
    pub mu: Colength,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyCheck {
    pub mu0: u64,
    /// Minimum over the finite samples.
    pub mu_gen: Option<u64>,
    pub samples: Vec<Sample>,
    pub verdict: Verdict,
    pub warnings: Vec<String>,
}

/// `count` distinct positive rationals `a/b` with `1 <= a, b <= 1000`.
pub fn sample_parameters(count: usize, seed: u64) -> Vec<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let a: i64 = rng.gen_range(1..=1000);
        let b: i64 = rng.gen_range(1..=1000);
        let v = Rational::new(BigInt::from(a), BigInt::from(b));
        if seen.insert(v.clone()) {
            out.push(v);
        }
    }
    out
}

/// mu-constancy of `F(t, x)` on a fixed ICIS, decided by specializing `t`.
pub fn family_mu_check(fam: &FamilyFixedX, samples: usize, seed: u64, budget: Budget) -> Result<FamilyCheck> {
    let germ = fam.germ().clone();
    let at = |v: &Rational| -> Result<Colength> { mu_rel(&FunctionOnGerm::new(germ.clone(), fam.at(v)?)?, budget) };
    run_check(&at, samples, seed, "f_0")
}

/// mu-constancy of `f` on the deformed germs `phi_t`, decided by
/// specializing `t`.
pub fn family_mu_check_deformed_x(
    fam: &FamilyDeformedX,
    samples: usize,
    seed: u64,
    budget: Budget,
) -> Result<FamilyCheck> {
    let at = |v: &Rational| -> Result<Colength> { mu_rel(&fam.at(v)?, budget) };
    run_check(&at, samples, seed, "f on X_0")
}

fn run_check(
    at: &(dyn Fn(&Rational) -> Result<Colength> + Sync),
    samples: usize,
    seed: u64,
    what: &str,
) -> Result<FamilyCheck> {
    let Colength::Finite(mu0) = at(&Rational::zero())? else {
        return Err(Error::hypothesis(format!(
            "{what} has a non-isolated singularity (infinite Milnor number at t = 0)"
        )));
    };
    let values = sample_parameters(samples, seed);
    // Samples are independent; results are merged in sample order.
    let results: Vec<Result<Colength>> = std::thread::scope(|scope| {
        let handles: Vec<_> = values.iter().map(|v| scope.spawn(move || at(v))).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("sample worker panicked"))
            .collect()
    });
    let mut out = Vec::with_capacity(values.len());
    let mut warnings = Vec::new();
    for (value, mu) in values.into_iter().zip(results) {
        let mu = mu?;
        if mu == Colength::Infinite {
            warnings.push(format!("t = {value}: infinite Milnor number, sample discarded"));
        }
        out.push(Sample { value, mu });
    }
    let finite: Vec<u64> = out.iter().filter_map(|s| s.mu.finite()).collect();
    let mu_gen = finite.iter().copied().min();
    if finite.iter().any(|&m| m > mu0) {
        warnings.push(format!(
            "a sampled Milnor number exceeds mu_0 = {mu0}, contradicting semicontinuity"
        ));
    }
    let verdict = if finite.is_empty() {
        warnings.push("all samples discarded".into());
        Verdict::Inconclusive
    } else if finite.iter().all(|&m| m == mu0) {
        Verdict::Constant
    } else {
        Verdict::NotConstant
    };
    Ok(FamilyCheck {
        mu0,
        mu_gen,
        samples: out,
        verdict,
        warnings,
    })
}
