use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{FunctionOnGerm, MapGerm};
use crate::error::{Error, Result};
use crate::polyring::{jacobian, maximal_minors, Polynomial, Rational, Vars};
use crate::standard_basis::{colength, Budget, Colength, IdealBasis};

/// Randomized retries of the Lê-Greuel chain after the original ordering.
pub const CHAIN_RETRIES: usize = 5;

/// Generators of `<phi> + J(f, phi)`, the ideal whose colength is `mu(f|X)`.
///
/// The minors are those of the Jacobian of `(f, phi_1, ..., phi_p)` in that
/// row order, columns in increasing order.
pub fn relative_jacobian_ideal(fg: &FunctionOnGerm) -> Result<Vec<Polynomial>> {
    let germ = fg.germ();
    let mut rows = vec![fg.function().clone()];
    rows.extend_from_slice(germ.equations());
    let mut gens = germ.equations().to_vec();
    gens.extend(maximal_minors(&jacobian(&rows, germ.vars().names())?)?);
    Ok(gens)
}

/// Milnor number `mu(f|X) = dim O_n / (<phi> + J(f, phi))`.
///
/// `Infinite` means `f` does not have an isolated singularity on `X`.
pub fn mu_rel(fg: &FunctionOnGerm, budget: Budget) -> Result<Colength> {
    colength(&IdealBasis::local(relative_jacobian_ideal(fg)?)?, budget)
}

/// Milnor number of the ICIS `X = phi^{-1}(0)`; zero for `p = 0`.
pub fn mu_icis(germ: &MapGerm, seed: u64, budget: Budget) -> Result<Colength> {
    chain_milnor(germ.vars(), germ.equations(), seed, budget).map(|c| c.mu)
}

/// Outcome of the Lê-Greuel chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct ChainResult {
    pub mu: Colength,
    /// Number of randomized attempts used (0 = original generator order).
    pub attempt: usize,
    pub colengths: Vec<u64>,
}

/// `mu(X_k) = dim O / (<phi_1..phi_{k-1}> + J_k(phi_1..phi_k)) - mu(X_{k-1})`
/// with `mu(X_0) = 0`. Accepts `p <= n` so that `(phi, f)` can be fed in.
pub(crate) fn chain_milnor(vars: &Vars, phi: &[Polynomial], seed: u64, budget: Budget) -> Result<ChainResult> {
    if phi.len() > vars.len() {
        return Err(Error::input("more equations than variables"));
    }
    if phi.is_empty() {
        return Ok(ChainResult {
            mu: Colength::Finite(0),
            attempt: 0,
            colengths: Vec::new(),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..=CHAIN_RETRIES {
        let gens = if attempt == 0 {
            phi.to_vec()
        } else {
            mix_generators(phi, &mut rng)
        };
        if let Some(result) = try_chain(vars, &gens, budget)? {
            return Ok(ChainResult { attempt, ..result });
        }
    }
    Err(Error::hypothesis(format!(
        "prefix chain not ICIS after randomization ({CHAIN_RETRIES} retries)"
    )))
}

fn try_chain(vars: &Vars, phi: &[Polynomial], budget: Budget) -> Result<Option<ChainResult>> {
    let mut previous = 0u64;
    let mut colengths = Vec::with_capacity(phi.len());
    for k in 1..=phi.len() {
        let mut gens = phi[..k - 1].to_vec();
        gens.extend(maximal_minors(&jacobian(&phi[..k], vars.names())?)?);
        let Colength::Finite(c) = colength(&IdealBasis::local(gens)?, budget)? else {
            return Ok(None);
        };
        colengths.push(c);
        previous = c.checked_sub(previous).ok_or_else(|| {
            Error::Internal(format!(
                "negative Milnor number in the chain at step {k} (colength {c} < {previous})"
            ))
        })?;
    }
    Ok(Some(ChainResult {
        mu: Colength::Finite(previous),
        attempt: 0,
        colengths,
    }))
}

/// `M * phi` for a random invertible integer matrix `M`.
fn mix_generators(phi: &[Polynomial], rng: &mut ChaCha8Rng) -> Vec<Polynomial> {
    let p = phi.len();
    loop {
        let m: Vec<Vec<i64>> = (0..p)
            .map(|_| (0..p).map(|_| rng.gen_range(-7..=7)).collect())
            .collect();
        if determinant(&m).is_zero() {
            continue;
        }
        return m
            .iter()
            .map(|row| {
                row.iter()
                    .zip(phi)
                    .fold(Polynomial::zero(phi[0].vars()), |acc, (&c, g)| {
                        &acc + &g.scale(&Rational::from_integer(BigInt::from(c)))
                    })
            })
            .collect();
    }
}

fn determinant(m: &[Vec<i64>]) -> Rational {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .map(|r| r.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect())
        .collect();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        det *= a[col][col].clone();
        for r in col + 1..n {
            let factor = &a[r][col] / &a[col][col];
            #[allow(clippy::needless_range_loop)]
            for c in col..n {
                let sub = &factor * &a[col][c];
                a[r][c] -= sub;
            }
        }
    }
    det
}

/// The three Milnor numbers of the Lê-Greuel formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MilnorReport {
    /// `mu(f|X)`
    pub mu_rel: Colength,
    /// `mu(X, 0)`
    pub mu_x: Colength,
    /// `mu(X ∩ f^{-1}(0), 0)`
    pub mu_section: Colength,
    pub diagnostics: Vec<String>,
}

/// Computes `mu(f|X)`, `mu(X)` and `mu(X ∩ f^{-1}(0)) = mu(f|X) - mu(X)`,
/// and recomputes the last one as the ICIS Milnor number of `(phi, f)`.
pub fn milnor_report(fg: &FunctionOnGerm, seed: u64, budget: Budget) -> Result<MilnorReport> {
    let germ = fg.germ();
    let mut diagnostics = Vec::new();
    let rel = mu_rel(fg, budget)?;
    let chain_x = chain_milnor(germ.vars(), germ.equations(), seed, budget)?;
    if chain_x.attempt > 0 {
        diagnostics.push(format!("mu(X): generators randomized (attempt {})", chain_x.attempt));
    }
    let (Colength::Finite(r), Colength::Finite(x)) = (rel, chain_x.mu) else {
        diagnostics.push("mu(f|X) is infinite: f has a non-isolated singularity on X".into());
        return Ok(MilnorReport {
            mu_rel: rel,
            mu_x: chain_x.mu,
            mu_section: Colength::Infinite,
            diagnostics,
        });
    };
    let section = r
        .checked_sub(x)
        .ok_or_else(|| Error::Internal(format!("mu(f|X) = {r} is smaller than mu(X) = {x}")))?;

    let mut extended = germ.equations().to_vec();
    extended.push(fg.function().clone());
    let chain_s = chain_milnor(germ.vars(), &extended, seed, budget)?;
    if chain_s.attempt > 0 {
        diagnostics.push(format!(
            "mu(X ∩ f^-1(0)): generators randomized (attempt {})",
            chain_s.attempt
        ));
    }
    if chain_s.mu != Colength::Finite(section) {
        return Err(Error::Internal(format!(
            "Lê-Greuel mismatch: mu(f|X) - mu(X) = {section}, but the extended chain gives {}",
            chain_s.mu
        )));
    }
    diagnostics.push("Lê-Greuel cross-check passed".into());
    Ok(MilnorReport {
        mu_rel: rel,
        mu_x: chain_x.mu,
        mu_section: Colength::Finite(section),
        diagnostics,
    })
}
