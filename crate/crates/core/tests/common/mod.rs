//! Shared helpers and test-only oracles.

#![allow(dead_code)]

use std::path::{Path, PathBuf};

use icis::cli::{parse_problem, run_command, Command, ProblemFile, ReportDocument, RunOptions};
use icis::newton::lp::{LinearSystem, Relation};
use icis::polyring::{parse_polynomial, ExponentVector, Polynomial, Rational, Vars};
use num_traits::{One, Zero};

pub const ALL_COMMANDS: [Command; 5] = [
    Command::Milnor,
    Command::FamilyCheck,
    Command::Certify,
    Command::ArcTest,
    Command::Newton,
];

pub fn fixture_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub fn fixture_names() -> Vec<String> {
    let mut names: Vec<String> = std::fs::read_dir(fixture_dir())
        .expect("fixtures directory")
        .filter_map(|e| e.ok())
        .map(|e| e.file_name().to_string_lossy().into_owned())
        .filter(|n| n.ends_with(".icis"))
        .collect();
    names.sort();
    names
}

pub fn fixture(name: &str) -> ProblemFile {
    let text = std::fs::read_to_string(fixture_dir().join(name)).expect("readable fixture");
    parse_problem(&text).expect("fixture parses")
}

pub fn run(cmd: Command, name: &str) -> ReportDocument {
    run_command(cmd, &fixture(name), &RunOptions::default()).unwrap_or_else(|e| panic!("{} on {name}: {e}", cmd.name()))
}

pub fn ring(names: &[&str]) -> Vars {
    Vars::new(names).unwrap()
}

pub fn poly(v: &Vars, s: &str) -> Polynomial {
    parse_polynomial(s, v).unwrap()
}

/// All exponent vectors in `n` variables of total degree below `d`.
pub fn monomials_below(n: usize, d: u32) -> Vec<ExponentVector> {
    fn rec(n: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
        if prefix.len() == n {
            out.push(ExponentVector::new(prefix.clone()));
            return;
        }
        for e in 0..=left {
            prefix.push(e);
            rec(n, left - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if d > 0 {
        rec(n, d - 1, &mut Vec::new(), &mut out);
    }
    out
}

#[allow(clippy::needless_range_loop)]
/// Rank of a dense rational matrix by Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = &rows[i][c] / &pivot;
                for j in c..cols {
                    let delta = &factor * &rows[r][j];
                    rows[i][j] -= delta;
                }
            }
        }
        r += 1;
    }
    r
}

/// `dim O_n / (I + m^d)` from the Macaulay matrix of all products
/// `x^a * g` truncated below degree `d`.
pub fn truncated_colength(gens: &[Polynomial], n: usize, d: u32) -> usize {
    let cols = monomials_below(n, d);
    let index: std::collections::HashMap<ExponentVector, usize> =
        cols.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let mut rows = Vec::new();
    for g in gens {
        for a in &cols {
            let mut row = vec![Rational::zero(); cols.len()];
            let mut any = false;
            for (e, c) in g.terms() {
                if let Some(&j) = index.get(&e.add(a)) {
                    row[j] = c.clone();
                    any = true;
                }
            }
            if any {
                rows.push(row);
            }
        }
    }
    cols.len() - rank(rows)
}

/// Colength of an ideal of finite colength in the local ring: the first
/// `d` with `colength(I + m^d) == colength(I + m^(d+1))` gives
/// `m^d ⊂ I` by Nakayama's lemma.
pub fn macaulay_colength(gens: &[Polynomial], n: usize, max_degree: u32) -> Option<u64> {
    let mut prev = truncated_colength(gens, n, 1);
    for d in 1..max_degree {
        let next = truncated_colength(gens, n, d + 1);
        if next == prev {
            return Some(prev as u64);
        }
        prev = next;
    }
    None
}

/// Point sets of the compact faces of the Newton polyhedron of `support`,
/// by testing every subset for a strictly positive supporting weight.
pub fn compact_faces_by_subsets(support: &[ExponentVector]) -> Vec<Vec<ExponentVector>> {
    let n = support[0].len();
    let mut out = Vec::new();
    for mask in 1u32..(1 << support.len()) {
        // variables: w_1 .. w_n, c
        let mut sys = LinearSystem::new(n + 1);
        for i in 0..n {
            let mut row = vec![Rational::zero(); n + 1];
            row[i] = Rational::one();
            sys.add(row, Relation::Ge, Rational::one());
        }
        for (j, p) in support.iter().enumerate() {
            let mut row: Vec<Rational> = p.entries().iter().map(|&e| Rational::from_integer(e.into())).collect();
            row.push(-Rational::one());
            if mask & (1 << j) != 0 {
                sys.add(row, Relation::Eq, Rational::zero());
            } else {
                sys.add(row, Relation::Ge, Rational::one());
            }
        }
        if sys.is_feasible() {
            let mut pts: Vec<ExponentVector> = support
                .iter()
                .enumerate()
                .filter(|(j, _)| mask & (1 << j) != 0)
                .map(|(_, p)| p.clone())
                .collect();
            pts.sort();
            out.push(pts);
        }
    }
    out.sort();
    out
}
