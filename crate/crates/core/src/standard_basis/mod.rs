//! Standard bases for local and global monomial orders.
//!
//! Local orders use Mora's tangent-cone normal form (reducers chosen by
//! minimal ecart, with the running remainder added to the reducer set when
//! needed); global orders use Buchberger's algorithm. Both share the same
//! pair queue: pairs are processed by ascending weighted degree of their lcm,
//! then by the order on the lcm, then by index. Arithmetic is exact.

mod engine;

use std::fmt;
use std::time::Duration;

use crate::error::{Error, Result};
use crate::polyring::{ExponentVector, MonomialOrder, OrderKind, Polynomial, Rational, Vars};
use engine::{divides, Ctx, EPoly};

/// Limits on a standard-basis computation. A step is one S-pair or one
/// leading-term cancellation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_steps: u64,
    pub max_time: Duration,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_steps: 1_000_000,
            max_time: Duration::from_secs(60),
        }
    }
}

/// Dimension of a quotient as a vector space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Colength {
    Finite(u64),
    Infinite,
}

impl Colength {
    pub fn finite(self) -> Option<u64> {
        match self {
            Colength::Finite(k) => Some(k),
            Colength::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Colength::Finite(_))
    }
}

impl fmt::Display for Colength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Colength::Finite(k) => write!(f, "{k}"),
            Colength::Infinite => write!(f, "inf"),
        }
    }
}

/// Generators of an ideal together with the order to compute with.
#[derive(Debug, Clone)]
pub struct IdealBasis {
    vars: Vars,
    generators: Vec<Polynomial>,
    order: MonomialOrder,
}

impl IdealBasis {
    /// Zero generators are dropped; if nothing is left the ideal is the zero
    /// ideal (see [`IdealBasis::is_zero_ideal`]).
    pub fn new(generators: Vec<Polynomial>, order: MonomialOrder) -> Result<Self> {
        let first = generators
            .first()
            .ok_or_else(|| Error::input("an ideal needs at least one generator"))?;
        let vars = first.vars().clone();
        if vars.is_empty() {
            return Err(Error::input("ideal in a ring without variables"));
        }
        if generators.iter().any(|g| g.vars() != &vars) {
            return Err(Error::input("ideal generators over different rings"));
        }
        order.check_dimension(vars.len())?;
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(IdealBasis {
            vars,
            generators,
            order,
        })
    }

    pub fn local(generators: Vec<Polynomial>) -> Result<Self> {
        Self::new(generators, MonomialOrder::local())
    }

    pub fn global(generators: Vec<Polynomial>) -> Result<Self> {
        Self::new(generators, MonomialOrder::global())
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn with_order(&self, order: MonomialOrder) -> Result<Self> {
        order.check_dimension(self.vars.len())?;
        Ok(IdealBasis {
            vars: self.vars.clone(),
            generators: self.generators.clone(),
            order,
        })
    }
}

/// A standard basis with its staircase (minimal generators of the leading
/// ideal).
#[derive(Debug, Clone)]
pub struct StandardBasis {
    vars: Vars,
    order: MonomialOrder,
    basis: Vec<Polynomial>,
    staircase: Vec<ExponentVector>,
    steps: u64,
}

impl StandardBasis {
    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn staircase(&self) -> &[ExponentVector] {
        &self.staircase
    }

    /// Reduction steps spent computing this basis.
    pub fn steps(&self) -> u64 {
        self.steps
    }

    pub fn is_unit(&self) -> bool {
        self.staircase.iter().any(|e| e.is_constant())
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.basis.is_empty()
    }

    /// Number of monomials outside the leading ideal.
    pub fn colength(&self) -> Colength {
        staircase_colength(&self.staircase, self.vars.len())
    }

    /// Remainder of `p` with no term divisible by a staircase monomial.
    ///
    /// Global orders: the usual division remainder. Local orders with finite
    /// colength: the remainder is computed in `O/m^D` where every monomial of
    /// degree `D` already lies in the ideal, so it represents the class of `p`
    /// exactly. Local orders with infinite colength: only the leading term is
    /// guaranteed to be reduced (Mora's weak normal form); the result is zero
    /// iff `p` lies in the ideal of the local ring.
    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        if p.vars() != &self.vars {
            return Err(Error::input("normal form of a polynomial over another ring"));
        }
        if self.order.is_local() {
            match self.truncation_degree() {
                Some(d) => Ok(self.divide(p, Some(d))),
                None => {
                    let mut ctx = Ctx::new(self.order.clone(), Budget::default());
                    let basis: Vec<EPoly> = self.basis.iter().map(|g| ctx.from_polynomial(g)).collect();
                    let h = ctx.from_polynomial(p);
                    let r = ctx.normal_form(h, &basis)?;
                    if r.is_zero() {
                        return Ok(Polynomial::zero(&self.vars));
                    }
                    // determined up to a unit factor
                    Ok(ctx.to_polynomial(&self.vars, &r))
                }
            }
        } else {
            Ok(self.divide(p, None))
        }
    }

    /// `true` iff `p` lies in the ideal (in the local ring for local orders).
    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// One more than the largest degree of a monomial outside the staircase.
    fn truncation_degree(&self) -> Option<u64> {
        let n = self.vars.len();
        let mut bounds = vec![None; n];
        for e in &self.staircase {
            if e.is_constant() {
                return Some(0);
            }
            if let Some((i, k)) = e.pure_power() {
                bounds[i] = Some(bounds[i].map_or(k, |b: u32| b.min(k)));
            }
        }
        let mut total = 0u64;
        for b in bounds {
            total += u64::from(b?) - 1;
        }
        Some(total + 1)
    }

    /// Division with rational coefficients, dropping terms of total degree at
    /// least `truncate` when given.
    fn divide(&self, p: &Polynomial, truncate: Option<u64>) -> Polynomial {
        let keep = |e: &ExponentVector| truncate.is_none_or(|d| e.degree() < d);
        let leads: Vec<(ExponentVector, Rational)> = self
            .basis
            .iter()
            .map(|g| {
                let (e, c) = g.leading_term(&self.order).expect("nonzero basis element");
                (e.clone(), c.clone())
            })
            .collect();
        let mut h = Polynomial::from_terms(
            &self.vars,
            p.terms().filter(|(e, _)| keep(e)).map(|(e, c)| (e.clone(), c.clone())),
        );
        let mut remainder = Polynomial::zero(&self.vars);
        while let Some((e, c)) = h.leading_term(&self.order).map(|(e, c)| (e.clone(), c.clone())) {
            match leads.iter().position(|(l, _)| l.divides(&e)) {
                Some(i) => {
                    let shift = e.checked_sub(&leads[i].0).expect("divides");
                    let factor = Polynomial::monomial(&self.vars, shift, &c / &leads[i].1);
                    let sub = &factor * &self.basis[i];
                    h = &h - &sub;
                    if truncate.is_some() {
                        h = Polynomial::from_terms(
                            &self.vars,
                            h.terms().filter(|(e, _)| keep(e)).map(|(e, c)| (e.clone(), c.clone())),
                        );
                    }
                }
                None => {
                    let lt = Polynomial::monomial(&self.vars, e, c);
                    h = &h - &lt;
                    remainder = &remainder + &lt;
                }
            }
        }
        remainder
    }
}

/// Computes a standard basis of `ideal` under its order.
///
/// The output is deterministic for a given input: generators are taken in
/// the given order and pair selection ties are broken by index.
pub fn compute_standard_basis(ideal: &IdealBasis, budget: Budget) -> Result<StandardBasis> {
    let mut ctx = Ctx::new(ideal.order.clone(), budget);
    let global = ideal.order.kind() == OrderKind::GlobalDeg;
    let truncated = if !global && ideal.order.weights().is_none() {
        truncated_local_basis(&mut ctx, ideal)?
    } else {
        None
    };
    let basis = match truncated {
        Some(basis) => basis,
        None => {
            let inputs = ideal.generators.iter().map(|g| ctx.from_polynomial(g)).collect();
            run_pairs(&mut ctx, inputs, global)?
        }
    };
    // Drop elements whose leading monomial is a multiple of another one.
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let (li, lj) = (&basis[i].lead().exp, &basis[j].lead().exp);
            if divides(lj, li) && (li != lj || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<&EPoly> = basis.iter().zip(&keep).filter_map(|(g, &k)| k.then_some(g)).collect();
    let staircase = minimal
        .iter()
        .map(|g| ExponentVector::new(g.lead().exp.to_vec()))
        .collect();
    Ok(StandardBasis {
        vars: ideal.vars.clone(),
        order: ideal.order.clone(),
        basis: minimal.iter().map(|g| ctx.to_polynomial(&ideal.vars, g)).collect(),
        staircase,
        steps: ctx.steps(),
    })
}

/// Upper limit on the number of monomials below the truncation degree.
const TRUNCATION_MONOMIAL_CAP: u64 = 60_000;

/// Buchberger's pair loop with the context's normal form.
fn run_pairs(ctx: &mut Ctx, inputs: Vec<EPoly>, global: bool) -> Result<Vec<EPoly>> {
    let mut basis: Vec<EPoly> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut pair_serial = 0u64;
    for g in inputs {
        if !g.is_zero() {
            add_element(&mut basis, &mut pairs, &mut pair_serial, g, global);
        }
    }
    while let Some(idx) = next_pair(ctx, &pairs) {
        let pair = pairs.swap_remove(idx);
        let (i, j) = (pair.i, pair.j);
        let s = ctx.spoly(&basis[i], &basis[j]);
        let (blen, plen) = (basis.len(), pairs.len());
        ctx.tick(|| format!("S-pair ({i},{j}), basis {blen}, pending pairs {plen}"))?;
        if s.is_zero() {
            continue;
        }
        let h = ctx.normal_form(s, &basis)?;
        if !h.is_zero() {
            add_element(&mut basis, &mut pairs, &mut pair_serial, h, global);
        }
    }
    Ok(basis)
}

/// Standard basis of `I + m^D` computed modulo `m^D`, for increasing `D`.
///
/// Once every monomial of degree `D - 1` is a leading monomial, Nakayama's
/// lemma gives `m^(D-1) ⊂ I`, and the truncated basis is a standard basis of
/// `I` itself. Returns `None` when the degree cap is reached first; the
/// caller then falls back to Mora's algorithm (needed for infinite colength).
fn truncated_local_basis(ctx: &mut Ctx, ideal: &IdealBasis) -> Result<Option<Vec<EPoly>>> {
    let n = ideal.vars.len();
    let top_order = ideal.generators.iter().filter_map(|g| g.order()).max().unwrap_or(0);
    let mut d = top_order + 2;
    let result = loop {
        if monomials_below(n, d) > TRUNCATION_MONOMIAL_CAP {
            break None;
        }
        ctx.set_truncation(Some(d));
        let inputs = ideal.generators.iter().map(|g| ctx.from_polynomial(g)).collect();
        let basis = run_pairs(ctx, inputs, false)?;
        let leads: Vec<&[u32]> = basis.iter().map(|g| &*g.lead().exp).collect();
        if leads.iter().any(|e| e.iter().all(|&k| k == 0)) || covers_degree(&leads, n, d - 1) {
            break Some(basis);
        }
        // Pure powers bound the degree at which the staircase closes.
        let mut corner = Some(1u64);
        for i in 0..n {
            let k = leads
                .iter()
                .filter(|e| e.iter().enumerate().all(|(j, &x)| j == i || x == 0))
                .map(|e| u64::from(e[i]))
                .min();
            corner = corner.zip(k).map(|(c, k)| c + k - 1);
        }
        d = match corner {
            Some(c) if c + 1 > d => (c + 1).min(2 * d),
            _ => 2 * d,
        };
    };
    ctx.set_truncation(None);
    Ok(result)
}

/// Number of monomials of degree below `d` in `n` variables, saturating.
fn monomials_below(n: usize, d: u64) -> u64 {
    // binomial(d - 1 + n, n)
    let mut acc: u128 = 1;
    for i in 1..=n as u128 {
        acc = acc * (u128::from(d) - 1 + i) / i;
        if acc > u128::from(u64::MAX) {
            return u64::MAX;
        }
    }
    acc as u64
}

/// `true` iff every monomial of degree `deg` is divisible by some lead.
fn covers_degree(leads: &[&[u32]], n: usize, deg: u64) -> bool {
    fn rec(leads: &[&[u32]], prefix: &mut Vec<u32>, n: usize, left: u64) -> bool {
        let i = prefix.len();
        let live: Vec<&[u32]> = leads.iter().copied().filter(|e| divides(&e[..i], prefix)).collect();
        if live.is_empty() {
            return false;
        }
        if i + 1 == n {
            prefix.push(left as u32);
            let ok = live.iter().any(|e| divides(e, prefix));
            prefix.pop();
            return ok;
        }
        for k in 0..=left {
            prefix.push(k as u32);
            let ok = rec(&live, prefix, n, left - k);
            prefix.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    if n == 0 {
        return leads.iter().any(|e| e.is_empty());
    }
    rec(leads, &mut Vec::with_capacity(n), n, deg)
}

/// Colength of the ideal under its order (use a local order for germs).
pub fn colength(ideal: &IdealBasis, budget: Budget) -> Result<Colength> {
    Ok(compute_standard_basis(ideal, budget)?.colength())
}

/// `true` iff the ideal is the whole ring (the local ring for local orders).
pub fn is_unit_ideal(ideal: &IdealBasis, budget: Budget) -> Result<bool> {
    Ok(compute_standard_basis(ideal, budget)?.is_unit())
}

/// Free-function form of [`StandardBasis::normal_form`].
pub fn normal_form(p: &Polynomial, sb: &StandardBasis) -> Result<Polynomial> {
    sb.normal_form(p)
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Vec<u32>,
    serial: u64,
}

fn add_element(basis: &mut Vec<EPoly>, pairs: &mut Vec<Pair>, serial: &mut u64, h: EPoly, global: bool) {
    let k = basis.len();
    let lh = h.lead().exp.clone();
    // Gebauer-Moeller criterion B on the pending pairs.
    pairs.retain(|p| {
        if !divides(&lh, &p.lcm) {
            return true;
        }
        let lik = lcm(&basis[p.i].lead().exp, &lh);
        let ljk = lcm(&basis[p.j].lead().exp, &lh);
        lik == p.lcm || ljk == p.lcm
    });
    for (i, g) in basis.iter().enumerate() {
        let lg = &g.lead().exp;
        if global && coprime(lg, &lh) {
            continue;
        }
        pairs.push(Pair {
            i,
            j: k,
            lcm: lcm(lg, &lh),
            serial: *serial,
        });
        *serial += 1;
    }
    basis.push(h);
}

fn next_pair(ctx: &Ctx, pairs: &[Pair]) -> Option<usize> {
    let key_order = ctx.order.with_kind(OrderKind::GlobalDeg);
    (0..pairs.len()).min_by(|&a, &b| {
        let (pa, pb) = (&pairs[a], &pairs[b]);
        ctx.degree(&pa.lcm)
            .cmp(&ctx.degree(&pb.lcm))
            .then_with(|| key_order.compare_slices(&pa.lcm, &pb.lcm))
            .then_with(|| pa.serial.cmp(&pb.serial))
    })
}

fn lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

/// Counts monomials not divisible by any staircase element.
pub(crate) fn staircase_colength(staircase: &[ExponentVector], n: usize) -> Colength {
    if staircase.iter().any(|e| e.is_constant()) {
        return Colength::Finite(0);
    }
    let mut bounds = vec![u32::MAX; n];
    for e in staircase {
        if let Some((i, k)) = e.pure_power() {
            bounds[i] = bounds[i].min(k);
        }
    }
    if bounds.contains(&u32::MAX) {
        return Colength::Infinite;
    }
    let gens: Vec<&[u32]> = staircase.iter().map(|e| e.entries()).collect();
    Colength::Finite(count_outside(&gens, &bounds))
}

fn count_outside(gens: &[&[u32]], bounds: &[u32]) -> u64 {
    if bounds.is_empty() {
        return if gens.is_empty() { 1 } else { 0 };
    }
    let mut total = 0;
    for e in 0..bounds[0] {
        let sub: Vec<&[u32]> = gens.iter().filter(|g| g[0] <= e).map(|g| &g[1..]).collect();
        if sub.iter().any(|g| g.iter().all(|&k| k == 0)) {
            // everything from here on is in the leading ideal
            break;
        }
        total += count_outside(&sub, &bounds[1..]);
    }
    total
}

#[cfg(test)]
mod tests;
