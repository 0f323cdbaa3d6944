use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::linalg::{primitive_integer, rref};
use super::lp::{LinearSystem, Relation};
use crate::error::{Error, Result};
use crate::polyring::{ExponentVector, Polynomial, Rational};

/// Search box for the free coordinates of a weight vector.
pub const WEIGHT_SEARCH_BOUND: u64 = 64;
const SEARCH_NODE_LIMIT: u64 = 200_000;

/// Positive integer weights making each polynomial weighted homogeneous.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weights {
    pub weights: Vec<u64>,
    /// Weighted degree of each input polynomial, in input order.
    pub degrees: Vec<u64>,
}

pub fn weighted_degree(w: &[u64], e: &ExponentVector) -> u64 {
    w.iter().zip(e.entries()).map(|(&a, &b)| a * u64::from(b)).sum()
}

/// Smallest weighted degree of a term of `p` (`None` for zero).
pub fn weighted_order(w: &[u64], p: &Polynomial) -> Option<u64> {
    p.terms().map(|(e, _)| weighted_degree(w, e)).min()
}

/// Whether every polynomial is weighted homogeneous for `w`.
pub fn is_weighted_homogeneous(w: &[u64], polys: &[Polynomial]) -> bool {
    polys.iter().all(|p| {
        let mut degrees = p.terms().map(|(e, _)| weighted_degree(w, e));
        let first = degrees.next();
        degrees.all(|d| Some(d) == first)
    })
}

/// Finds positive integer weights `w` for which all `polys` are weighted
/// homogeneous, or `None` if there are none.
///
/// The answer is the lexicographically smallest solution whose free
/// coordinates (after solving the homogeneity equations for the later
/// coordinates) are at most [`WEIGHT_SEARCH_BOUND`]; failing that, the
/// primitive integer multiple of a vertex of `{w >= 1}`.
pub fn find_weights(polys: &[Polynomial]) -> Result<Option<Weights>> {
    let first = polys.first().ok_or_else(|| Error::input("no polynomials given"))?;
    if polys.iter().any(Polynomial::is_zero) {
        return Err(Error::input("weights of the zero polynomial"));
    }
    let n = first.nvars();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for p in polys {
        let support = p.support();
        for k in &support[1..] {
            rows.push(
                (0..n)
                    .map(|i| Rational::from_integer(BigInt::from(i64::from(k[i]) - i64::from(support[0][i]))))
                    .collect(),
            );
        }
    }
    let w = if rows.is_empty() {
        Some(vec![1; n])
    } else {
        lex_search(&rows, n).or_else(|| lp_solution(&rows, n))
    };
    Ok(w.map(|weights| {
        let degrees = polys
            .iter()
            .map(|p| weighted_degree(&weights, &p.support()[0]))
            .collect();
        Weights { weights, degrees }
    }))
}

fn lex_search(rows: &[Vec<Rational>], n: usize) -> Option<Vec<u64>> {
    // Pivot on the last columns first so that each pivot coordinate is an
    // expression in free coordinates of smaller index.
    let order: Vec<usize> = (0..n).rev().collect();
    let (reduced, pivots) = rref(rows.to_vec(), &order);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    if free.is_empty() {
        return None;
    }
    // pivot column -> (coefficient per free column)
    let exprs: Vec<(usize, Vec<(usize, Rational)>)> = reduced
        .iter()
        .zip(&pivots)
        .map(|(row, &p)| {
            let deps = free
                .iter()
                .filter(|&&f| !row[f].is_zero())
                .map(|&f| (f, -row[f].clone()))
                .collect();
            (p, deps)
        })
        .collect();
    let mut w = vec![0u64; n];
    let mut nodes = 0;
    if search(0, &free, &exprs, &mut w, &mut nodes) {
        Some(w)
    } else {
        None
    }
}

fn search(
    depth: usize,
    free: &[usize],
    exprs: &[(usize, Vec<(usize, Rational)>)],
    w: &mut [u64],
    nodes: &mut u64,
) -> bool {
    // Coordinates below the next free one are fully determined now.
    let limit = free.get(depth).copied().unwrap_or(w.len());
    for (p, deps) in exprs {
        if *p >= limit {
            continue;
        }
        let value: Rational = deps
            .iter()
            .map(|(f, c)| c * Rational::from_integer(BigInt::from(w[*f])))
            .sum();
        if !value.is_integer() || !value.is_positive() {
            return false;
        }
        w[*p] = value.to_integer().to_u64().unwrap_or(u64::MAX);
    }
    if depth == free.len() {
        return true;
    }
    for v in 1..=WEIGHT_SEARCH_BOUND {
        *nodes += 1;
        if *nodes > SEARCH_NODE_LIMIT {
            return false;
        }
        w[free[depth]] = v;
        if search(depth + 1, free, exprs, w, nodes) {
            return true;
        }
    }
    w[free[depth]] = 0;
    false
}

fn lp_solution(rows: &[Vec<Rational>], n: usize) -> Option<Vec<u64>> {
    let mut lp = LinearSystem::new(n);
    for row in rows {
        lp.add(row.clone(), Relation::Eq, Rational::zero());
    }
    for i in 0..n {
        let mut unit = vec![Rational::zero(); n];
        unit[i] = Rational::one();
        lp.add(unit, Relation::Ge, Rational::one());
    }
    let x = lp.feasible_point()?;
    primitive_integer(&x).iter().map(ToPrimitive::to_u64).collect()
}
