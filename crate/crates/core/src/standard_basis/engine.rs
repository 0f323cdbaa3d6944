//! Fraction-free reduction machinery shared by the local (Mora) and global
//! (Buchberger) standard-basis computations.

use std::cmp::Ordering;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Budget;
use crate::error::{Error, Result};
use crate::polyring::{ExponentVector, MonomialOrder, OrderKind, Polynomial, Rational, Vars};

#[derive(Clone, Debug)]
pub(crate) struct Term {
    pub deg: u64,
    pub exp: Box<[u32]>,
    pub coef: BigInt,
}

/// Polynomial with integer coefficients, terms sorted leading-first.
#[derive(Clone, Debug)]
pub(crate) struct EPoly {
    pub terms: Vec<Term>,
    /// Largest weighted degree of any term (for the ecart).
    pub max_deg: u64,
}

impl EPoly {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> &Term {
        &self.terms[0]
    }

    /// `deg(f) - deg(LM(f))`, the ecart used by Mora's reducer selection.
    pub fn ecart(&self) -> u64 {
        self.max_deg - self.terms[0].deg
    }
}

pub(crate) struct Ctx {
    pub order: MonomialOrder,
    steps: u64,
    budget: Budget,
    started: Instant,
    /// Terms of weighted degree at least this bound are discarded.
    truncation: Option<u64>,
}

impl Ctx {
    pub fn new(order: MonomialOrder, budget: Budget) -> Self {
        Ctx {
            order,
            steps: 0,
            budget,
            started: Instant::now(),
            truncation: None,
        }
    }

    pub fn set_truncation(&mut self, bound: Option<u64>) {
        self.truncation = bound;
    }

    fn keeps(&self, deg: u64) -> bool {
        self.truncation.is_none_or(|d| deg < d)
    }

    pub fn steps(&self) -> u64 {
        self.steps
    }

    pub fn is_local(&self) -> bool {
        self.order.kind() == OrderKind::LocalNegDeg
    }

    pub fn cmp(&self, a: &Term, b: &Term) -> Ordering {
        let by_degree = match self.order.kind() {
            OrderKind::GlobalDeg => a.deg.cmp(&b.deg),
            OrderKind::LocalNegDeg => b.deg.cmp(&a.deg),
        };
        by_degree.then_with(|| {
            for (x, y) in a.exp.iter().zip(b.exp.iter()).rev() {
                match x.cmp(y) {
                    Ordering::Equal => continue,
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                }
            }
            Ordering::Equal
        })
    }

    pub fn degree(&self, exp: &[u32]) -> u64 {
        self.order.weighted_degree_slice(exp)
    }

    /// Counts one reduction step; fails once the budget is exhausted.
    pub fn tick(&mut self, what: impl FnOnce() -> String) -> Result<()> {
        self.steps += 1;
        if self.steps > self.budget.max_steps {
            return Err(Error::ComputationLimit(format!(
                "step budget of {} exhausted ({})",
                self.budget.max_steps,
                what()
            )));
        }
        if self.steps.is_multiple_of(256) && self.started.elapsed() > self.budget.max_time {
            return Err(Error::ComputationLimit(format!(
                "time budget of {:?} exhausted after {} steps ({})",
                self.budget.max_time,
                self.steps,
                what()
            )));
        }
        Ok(())
    }

    #[allow(clippy::wrong_self_convention)]
    pub fn from_polynomial(&self, p: &Polynomial) -> EPoly {
        let prim = p.primitive();
        let mut terms: Vec<Term> = prim
            .terms()
            .map(|(e, c)| Term {
                deg: self.degree(e.entries()),
                exp: e.entries().into(),
                coef: c.to_integer(),
            })
            .filter(|t| self.keeps(t.deg))
            .collect();
        terms.sort_by(|a, b| self.cmp(b, a));
        let max_deg = terms.iter().map(|t| t.deg).max().unwrap_or(0);
        let mut out = EPoly { terms, max_deg };
        normalize_sign(&mut out);
        out
    }

    pub fn to_polynomial(&self, vars: &Vars, p: &EPoly) -> Polynomial {
        Polynomial::from_terms(
            vars,
            p.terms.iter().map(|t| {
                (
                    ExponentVector::new(t.exp.to_vec()),
                    Rational::from_integer(t.coef.clone()),
                )
            }),
        )
    }

    /// `a * f - b * x^shift * g`, dropping zero terms. Both inputs are sorted
    /// and multiplication by a monomial preserves the order, so this is a
    /// single merge.
    pub fn combine(&self, a: &BigInt, f: &EPoly, b: &BigInt, shift: &[u32], g: &EPoly) -> EPoly {
        let shift_deg = self.degree(shift);
        let shifted = g.terms.iter().filter(|t| self.keeps(t.deg + shift_deg)).map(|t| Term {
            deg: t.deg + shift_deg,
            exp: t.exp.iter().zip(shift).map(|(x, y)| x + y).collect(),
            coef: -(b * &t.coef),
        });
        let mut out = Vec::with_capacity(f.terms.len() + g.terms.len());
        let mut left = f.terms.iter().filter(|t| self.keeps(t.deg)).peekable();
        let mut right = shifted.peekable();
        loop {
            let next = match (left.peek(), right.peek()) {
                (None, None) => break,
                (Some(_), None) => {
                    let t = left.next().unwrap();
                    Term {
                        deg: t.deg,
                        exp: t.exp.clone(),
                        coef: a * &t.coef,
                    }
                }
                (None, Some(_)) => right.next().unwrap(),
                (Some(l), Some(r)) => match self.cmp(l, r) {
                    Ordering::Greater => {
                        let t = left.next().unwrap();
                        Term {
                            deg: t.deg,
                            exp: t.exp.clone(),
                            coef: a * &t.coef,
                        }
                    }
                    Ordering::Less => right.next().unwrap(),
                    Ordering::Equal => {
                        let t = left.next().unwrap();
                        let r = right.next().unwrap();
                        Term {
                            deg: t.deg,
                            exp: r.exp,
                            coef: a * &t.coef + r.coef,
                        }
                    }
                },
            };
            if !next.coef.is_zero() {
                out.push(next);
            }
        }
        let max_deg = out.iter().map(|t| t.deg).max().unwrap_or(0);
        let mut p = EPoly { terms: out, max_deg };
        make_primitive(&mut p);
        p
    }

    /// Cancels the leading term of `h` against `g`, whose leading monomial
    /// must divide that of `h`.
    pub fn reduce_lead(&self, h: &EPoly, g: &EPoly) -> EPoly {
        let (lh, lg) = (h.lead(), g.lead());
        let shift: Vec<u32> = lh.exp.iter().zip(lg.exp.iter()).map(|(x, y)| x - y).collect();
        let d = lh.coef.gcd(&lg.coef);
        let a = &lg.coef / &d;
        let b = &lh.coef / &d;
        self.combine(&a, h, &b, &shift, g)
    }

    /// S-polynomial of `f` and `g` (fraction free).
    pub fn spoly(&self, f: &EPoly, g: &EPoly) -> EPoly {
        let (lf, lg) = (f.lead(), g.lead());
        let lcm: Vec<u32> = lf.exp.iter().zip(lg.exp.iter()).map(|(x, y)| *x.max(y)).collect();
        let sf: Vec<u32> = lcm.iter().zip(lf.exp.iter()).map(|(x, y)| x - y).collect();
        let sg: Vec<u32> = lcm.iter().zip(lg.exp.iter()).map(|(x, y)| x - y).collect();
        let d = lf.coef.gcd(&lg.coef);
        let a = &lg.coef / &d;
        let b = &lf.coef / &d;
        let left = self.shift(f, &sf);
        self.combine(&a, &left, &b, &sg, g)
    }

    fn shift(&self, f: &EPoly, s: &[u32]) -> EPoly {
        let sd = self.degree(s);
        EPoly {
            terms: f
                .terms
                .iter()
                .filter(|t| self.keeps(t.deg + sd))
                .map(|t| Term {
                    deg: t.deg + sd,
                    exp: t.exp.iter().zip(s).map(|(x, y)| x + y).collect(),
                    coef: t.coef.clone(),
                })
                .collect(),
            max_deg: f.max_deg + sd,
        }
    }

    /// Normal form in the sense of Mora (local orders) or plain top
    /// reduction (global orders): the result is zero or has a leading
    /// monomial outside the leading ideal of `basis`.
    ///
    /// For local orders the result is a weak normal form: `u * h - nf` lies
    /// in the ideal for some unit `u`.
    pub fn normal_form(&mut self, h: EPoly, basis: &[EPoly]) -> Result<EPoly> {
        // Truncated local arithmetic lives on a finite set of monomials, so
        // plain reduction terminates there.
        if self.is_local() && self.truncation.is_none() {
            self.mora_normal_form(h, basis)
        } else {
            self.top_reduce(h, basis)
        }
    }

    fn top_reduce(&mut self, mut h: EPoly, basis: &[EPoly]) -> Result<EPoly> {
        while !h.is_zero() {
            let Some(g) = basis.iter().find(|g| divides(&g.lead().exp, &h.lead().exp)) else {
                break;
            };
            h = self.reduce_lead(&h, g);
            let len = basis.len();
            self.tick(|| format!("top reduction against {len} basis elements"))?;
        }
        Ok(h)
    }

    fn mora_normal_form(&mut self, mut h: EPoly, basis: &[EPoly]) -> Result<EPoly> {
        let mut extra: Vec<EPoly> = Vec::new();
        while !h.is_zero() {
            let lead = &h.lead().exp;
            let mut best: Option<(u64, bool, usize)> = None;
            for (i, g) in basis.iter().enumerate() {
                if divides(&g.lead().exp, lead) {
                    let e = g.ecart();
                    if best.is_none_or(|(be, _, _)| e < be) {
                        best = Some((e, false, i));
                    }
                }
            }
            for (i, g) in extra.iter().enumerate() {
                if divides(&g.lead().exp, lead) {
                    let e = g.ecart();
                    if best.is_none_or(|(be, _, _)| e < be) {
                        best = Some((e, true, i));
                    }
                }
            }
            let Some((ecart, from_extra, i)) = best else {
                break;
            };
            let reducer = if from_extra { extra[i].clone() } else { basis[i].clone() };
            if ecart > h.ecart() {
                extra.push(h.clone());
            }
            h = self.reduce_lead(&h, &reducer);
            let (len, ext) = (basis.len(), extra.len());
            self.tick(|| format!("Mora reduction, basis {len}, reducer set {ext}"))?;
        }
        Ok(h)
    }
}

pub(crate) fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn make_primitive(p: &mut EPoly) {
    if p.terms.is_empty() {
        return;
    }
    let mut g = BigInt::zero();
    for t in &p.terms {
        g = g.gcd(&t.coef);
        if g.is_one() {
            break;
        }
    }
    if !g.is_one() && !g.is_zero() {
        for t in &mut p.terms {
            t.coef /= &g;
        }
    }
    normalize_sign(p);
}

fn normalize_sign(p: &mut EPoly) {
    if p.terms.first().is_some_and(|t| t.coef.is_negative()) {
        for t in &mut p.terms {
            t.coef = -std::mem::take(&mut t.coef);
        }
    }
}
