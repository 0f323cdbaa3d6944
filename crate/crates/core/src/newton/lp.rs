//! Exact rational linear feasibility by the two-phase simplex method with
//! Bland's rule (no cycling, no floating point).

use num_traits::{One, Signed, Zero};

use crate::polyring::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

/// Constraints over non-negative variables.
#[derive(Debug, Clone, Default)]
pub struct LinearSystem {
    nvars: usize,
    rows: Vec<(Vec<Rational>, Relation, Rational)>,
}

impl LinearSystem {
    pub fn new(nvars: usize) -> Self {
        LinearSystem {
            nvars,
            rows: Vec::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add(&mut self, coeffs: Vec<Rational>, rel: Relation, rhs: Rational) {
        assert_eq!(coeffs.len(), self.nvars, "constraint width mismatch");
        self.rows.push((coeffs, rel, rhs));
    }

    /// A non-negative solution, if one exists.
    pub fn feasible_point(&self) -> Option<Vec<Rational>> {
        // Standard form A y = b, y >= 0, b >= 0, with y = (x, slacks).
        let nslack = self.rows.iter().filter(|r| r.1 != Relation::Eq).count();
        let width = self.nvars + nslack;
        let m = self.rows.len();
        let mut a: Vec<Vec<Rational>> = Vec::with_capacity(m);
        let mut b: Vec<Rational> = Vec::with_capacity(m);
        let mut slack = self.nvars;
        for (coeffs, rel, rhs) in &self.rows {
            let mut row = coeffs.clone();
            row.resize(width, Rational::zero());
            match rel {
                Relation::Le => {
                    row[slack] = Rational::one();
                    slack += 1;
                }
                Relation::Ge => {
                    row[slack] = -Rational::one();
                    slack += 1;
                }
                Relation::Eq => {}
            }
            let mut rhs = rhs.clone();
            if rhs.is_negative() {
                row.iter_mut().for_each(|c| *c = -c.clone());
                rhs = -rhs;
            }
            a.push(row);
            b.push(rhs);
        }
        // Phase I tableau: one artificial per row, minimize their sum.
        let total = width + m;
        let mut tab: Vec<Vec<Rational>> = a
            .into_iter()
            .enumerate()
            .map(|(i, mut row)| {
                row.resize(total, Rational::zero());
                row[width + i] = Rational::one();
                row
            })
            .collect();
        let mut basis: Vec<usize> = (width..total).collect();
        // reduced costs of the phase I objective
        let mut cost = vec![Rational::zero(); total];
        let mut value = Rational::zero();
        for (row, rhs) in tab.iter().zip(&b) {
            for j in 0..width {
                cost[j] -= &row[j];
            }
            value -= rhs;
        }
        let mut rhs = b;
        // Bland: smallest index with negative reduced cost
        while let Some(enter) = (0..total).find(|&j| cost[j].is_negative()) {
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..m {
                if tab[i][enter].is_positive() {
                    let ratio = &rhs[i] / &tab[i][enter];
                    let better = match &leave {
                        None => true,
                        Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            let Some((r, _)) = leave else {
                // unbounded cannot happen for phase I
                break;
            };
            pivot(&mut tab, &mut rhs, &mut cost, &mut value, r, enter);
            basis[r] = enter;
        }
        if !value.is_zero() {
            return None;
        }
        let mut x = vec![Rational::zero(); self.nvars];
        for (i, &j) in basis.iter().enumerate() {
            if j < self.nvars {
                x[j] = rhs[i].clone();
            }
        }
        Some(x)
    }

    pub fn is_feasible(&self) -> bool {
        self.feasible_point().is_some()
    }
}

fn pivot(
    tab: &mut [Vec<Rational>],
    rhs: &mut [Rational],
    cost: &mut [Rational],
    value: &mut Rational,
    r: usize,
    c: usize,
) {
    let p = tab[r][c].clone();
    for x in tab[r].iter_mut() {
        *x /= &p;
    }
    rhs[r] /= &p;
    let prow = tab[r].clone();
    let prhs = rhs[r].clone();
    for i in 0..tab.len() {
        if i == r || tab[i][c].is_zero() {
            continue;
        }
        let f = tab[i][c].clone();
        for (x, y) in tab[i].iter_mut().zip(&prow) {
            if !y.is_zero() {
                *x -= &f * y;
            }
        }
        rhs[i] -= &f * &prhs;
    }
    if !cost[c].is_zero() {
        let f = cost[c].clone();
        for (x, y) in cost.iter_mut().zip(&prow) {
            if !y.is_zero() {
                *x -= &f * y;
            }
        }
        *value -= &f * &prhs;
    }
}
