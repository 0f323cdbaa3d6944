use super::{Polynomial, Vars};
use crate::error::{Error, Result};

/// Rectangular matrix of polynomials over one ambient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    vars: Vars,
    rows: Vec<Vec<Polynomial>>,
}

impl PolyMatrix {
    pub fn new(rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let first = rows.first().ok_or_else(|| Error::input("matrix without rows"))?;
        let width = first.len();
        let vars = first
            .first()
            .map(|p| p.vars().clone())
            .ok_or_else(|| Error::input("matrix without columns"))?;
        for row in &rows {
            if row.len() != width {
                return Err(Error::input("ragged matrix rows"));
            }
            if row.iter().any(|p| p.vars() != &vars) {
                return Err(Error::input("matrix entries over different rings"));
            }
        }
        Ok(PolyMatrix { vars, rows })
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows[0].len()
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<Polynomial>] {
        &self.rows
    }
}

/// Jacobian matrix: row `i`, column `j` holds `d maps[i] / d vars[j]`.
pub fn jacobian<S: AsRef<str>>(maps: &[Polynomial], vars: &[S]) -> Result<PolyMatrix> {
    if maps.is_empty() {
        return Err(Error::input("jacobian of an empty list of maps"));
    }
    if vars.is_empty() {
        return Err(Error::input("jacobian with respect to no variables"));
    }
    let ring = maps[0].vars().clone();
    if maps.iter().any(|m| m.vars() != &ring) {
        return Err(Error::input("jacobian of maps over different rings"));
    }
    let indices = vars
        .iter()
        .map(|v| ring.require(v.as_ref()))
        .collect::<Result<Vec<_>>>()?;
    let rows = maps
        .iter()
        .map(|m| indices.iter().map(|&j| m.differentiate_index(j)).collect())
        .collect();
    PolyMatrix::new(rows)
}

/// All maximal (rows x rows) minors, indexed by increasing column subsets.
/// Each minor is the determinant of the selected columns in the given row
/// order.
pub fn maximal_minors(m: &PolyMatrix) -> Result<Vec<Polynomial>> {
    let r = m.nrows();
    let c = m.ncols();
    if r > c {
        return Err(Error::input(format!("maximal minors need rows <= cols, got {r} x {c}")));
    }
    let rows: Vec<usize> = (0..r).collect();
    Ok(combinations(c, r)
        .into_iter()
        .map(|cols| determinant(m, &rows, &cols))
        .collect())
}

/// Determinant of the submatrix on `rows` x `cols` by cofactor expansion
/// along the first selected row.
fn determinant(m: &PolyMatrix, rows: &[usize], cols: &[usize]) -> Polynomial {
    debug_assert_eq!(rows.len(), cols.len());
    match rows.len() {
        0 => Polynomial::one(m.vars()),
        1 => m.get(rows[0], cols[0]).clone(),
        _ => {
            let mut acc = Polynomial::zero(m.vars());
            let rest = &rows[1..];
            for (k, &col) in cols.iter().enumerate() {
                let entry = m.get(rows[0], col);
                if entry.is_zero() {
                    continue;
                }
                let sub_cols: Vec<usize> = cols
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != k)
                    .map(|(_, &j)| j)
                    .collect();
                let term = entry * &determinant(m, rest, &sub_cols);
                acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

/// Increasing `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            if n - i < k - current.len() {
                break;
            }
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_polynomial;

    fn ring(names: &[&str]) -> Vars {
        Vars::new(names).unwrap()
    }

    fn p(v: &Vars, s: &str) -> Polynomial {
        parse_polynomial(s, v).unwrap()
    }

    #[test]
    fn jacobian_of_example_pair() {
        let v = ring(&["x", "y", "z"]);
        let j = jacobian(&[p(&v, "x*y"), p(&v, "x^5+y^3+z^2")], &["x", "y", "z"]).unwrap();
        let expected = [["y", "x", "0"], ["5*x^4", "3*y^2", "2*z"]];
        for (i, row) in expected.iter().enumerate() {
            for (k, s) in row.iter().enumerate() {
                assert_eq!(j.get(i, k), &p(&v, s));
            }
        }
    }

    #[test]
    fn jacobian_small_cases() {
        let v = ring(&["x", "y"]);
        let j = jacobian(&[p(&v, "x")], &["x", "y"]).unwrap();
        assert_eq!(j.rows()[0], vec![p(&v, "1"), p(&v, "0")]);
        let j = jacobian(&[p(&v, "x^2-y^3")], &["x", "y"]).unwrap();
        assert_eq!(j.rows()[0], vec![p(&v, "2*x"), p(&v, "-3*y^2")]);
        assert!(jacobian(&[], &["x"]).is_err());
        assert!(jacobian::<&str>(&[p(&v, "x")], &[]).is_err());
        assert!(jacobian(&[p(&v, "x")], &["w"]).is_err());
    }

    #[test]
    fn minors_of_deformed_example() {
        let v = ring(&["t", "x", "y", "z"]);
        let m = PolyMatrix::new(vec![
            vec![p(&v, "y"), p(&v, "x"), p(&v, "-t")],
            vec![p(&v, "5*x^4"), p(&v, "3*y^2"), p(&v, "2*z")],
        ])
        .unwrap();
        let minors = maximal_minors(&m).unwrap();
        assert_eq!(
            minors,
            vec![p(&v, "3*y^3-5*x^5"), p(&v, "2*y*z+5*t*x^4"), p(&v, "2*x*z+3*t*y^2"),]
        );
    }

    #[test]
    fn minors_small_cases() {
        let v = ring(&["x", "y"]);
        let m = PolyMatrix::new(vec![vec![p(&v, "1"), p(&v, "0")], vec![p(&v, "2*x"), p(&v, "-3*y^2")]]).unwrap();
        assert_eq!(maximal_minors(&m).unwrap(), vec![p(&v, "-3*y^2")]);
        let row = PolyMatrix::new(vec![vec![p(&v, "x"), p(&v, "y^2"), p(&v, "3")]]).unwrap();
        assert_eq!(
            maximal_minors(&row).unwrap(),
            vec![p(&v, "x"), p(&v, "y^2"), p(&v, "3")]
        );
        let tall = PolyMatrix::new(vec![vec![p(&v, "x")], vec![p(&v, "y")]]).unwrap();
        assert!(maximal_minors(&tall).is_err());
    }

    #[test]
    fn combinations_are_lexicographic() {
        assert_eq!(
            combinations(4, 2),
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
    }
}
