use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{ExponentVector, MonomialOrder, Rational};
use crate::error::{Error, Result};

/// An ordered list of variable names shared by every polynomial of a problem.
///
/// Cloning is cheap. Two lists are the same ambient iff their names agree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vars(Arc<[String]>);

impl Vars {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for name in names {
            let name = name.as_ref();
            if !is_identifier(name) {
                return Err(Error::input(format!("invalid variable name {name:?}")));
            }
            if !seen.insert(name) {
                return Err(Error::input(format!("variable {name:?} declared twice")));
            }
        }
        Ok(Vars(names.iter().map(|s| s.as_ref().to_string()).collect()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::input(format!("unknown variable {name:?}")))
    }
}

impl fmt::Debug for Vars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Sparse polynomial with exact rational coefficients.
///
/// Terms are kept in a map keyed by exponent vector; zero coefficients are
/// never stored, so structural equality is mathematical equality.
///
/// Arithmetic between polynomials over different ambients panics; convert
/// with [`Polynomial::reembed`] first.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    vars: Vars,
    terms: BTreeMap<ExponentVector, Rational>,
}

impl Polynomial {
    pub fn zero(vars: &Vars) -> Self {
        Polynomial {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &Vars, c: Rational) -> Self {
        Self::monomial(vars, ExponentVector::zeros(vars.len()), c)
    }

    pub fn from_int(vars: &Vars, c: i64) -> Self {
        Self::constant(vars, Rational::from_integer(BigInt::from(c)))
    }

    pub fn one(vars: &Vars) -> Self {
        Self::from_int(vars, 1)
    }

    pub fn var(vars: &Vars, name: &str) -> Result<Self> {
        let i = vars.require(name)?;
        Ok(Self::monomial(
            vars,
            ExponentVector::unit(vars.len(), i, 1),
            Rational::one(),
        ))
    }

    pub fn monomial(vars: &Vars, exps: ExponentVector, c: Rational) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length mismatch");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Polynomial {
            vars: vars.clone(),
            terms,
        }
    }

    /// Builds a polynomial from possibly repeated, possibly zero terms.
    pub fn from_terms<I>(vars: &Vars, terms: I) -> Self
    where
        I: IntoIterator<Item = (ExponentVector, Rational)>,
    {
        let mut p = Polynomial::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent vector length mismatch");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: ExponentVector, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &ExponentVector) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    /// Exponent vectors with nonzero coefficient.
    pub fn support(&self) -> Vec<ExponentVector> {
        self.terms.keys().cloned().collect()
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&ExponentVector::zeros(self.nvars()))
    }

    pub fn has_zero_constant_term(&self) -> bool {
        self.constant_term().is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.is_constant())
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|e| e.degree()).max()
    }

    /// Lowest total degree of a term (the order of the germ).
    pub fn order(&self) -> Option<u64> {
        self.terms.keys().map(|e| e.degree()).min()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.keys().any(|e| e[var] > 0)
    }

    /// Leading exponent and coefficient under `order`.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&ExponentVector, &Rational)> {
        self.terms.iter().max_by(|a, b| order.compare(a.0, b.0))
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.vars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Formal partial derivative with respect to the named variable.
    pub fn differentiate(&self, var: &str) -> Result<Polynomial> {
        let i = self.vars.require(var)?;
        Ok(self.differentiate_index(i))
    }

    pub fn differentiate_index(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(&self.vars);
        for (e, c) in &self.terms {
            let k = e[i];
            if k == 0 {
                continue;
            }
            let mut d = e.entries().to_vec();
            d[i] -= 1;
            out.add_term(ExponentVector::new(d), c * Rational::from_integer(BigInt::from(k)));
        }
        out
    }

    /// Composition: each variable in `assignment` is replaced by its image.
    ///
    /// All images must share one ambient, which becomes the ambient of the
    /// result. Variables that are not assigned are kept and must exist by
    /// name in that ambient. An empty assignment returns `self` unchanged.
    pub fn substitute(&self, assignment: &BTreeMap<String, Polynomial>) -> Result<Polynomial> {
        let Some(target) = assignment.values().next().map(|p| p.vars.clone()) else {
            return Ok(self.clone());
        };
        if assignment.values().any(|p| p.vars != target) {
            return Err(Error::input("substitution images live in different rings"));
        }
        let mut images = Vec::with_capacity(self.nvars());
        for (i, name) in self.vars.names().iter().enumerate() {
            let image = match assignment.get(name) {
                Some(p) => Some(p.clone()),
                None if self.uses_var(i) => {
                    let j = target.index_of(name).ok_or_else(|| {
                        Error::input(format!(
                            "variable {name:?} is neither assigned nor present in the target ring"
                        ))
                    })?;
                    Some(Polynomial::monomial(
                        &target,
                        ExponentVector::unit(target.len(), j, 1),
                        Rational::one(),
                    ))
                }
                None => None,
            };
            images.push(image);
        }
        for name in assignment.keys() {
            self.vars.require(name)?;
        }
        Ok(self.compose(&target, &images))
    }

    /// Composition with one image per variable (`None` only for variables
    /// that do not occur).
    pub(crate) fn compose(&self, target: &Vars, images: &[Option<Polynomial>]) -> Polynomial {
        let mut cache: HashMap<(usize, u32), Polynomial> = HashMap::new();
        let mut out = Polynomial::zero(target);
        for (e, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (i, &k) in e.entries().iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let image = images[i].as_ref().expect("image for used variable");
                let power = cache.entry((i, k)).or_insert_with(|| image.pow(k)).clone();
                term = &term * &power;
                if term.is_zero() {
                    break;
                }
            }
            out = &out + &term;
        }
        out
    }

    /// Substitutes a rational value for one variable, keeping the ambient.
    pub fn specialize(&self, var: &str, value: &Rational) -> Result<Polynomial> {
        let i = self.vars.require(var)?;
        let mut out = Polynomial::zero(&self.vars);
        for (e, c) in &self.terms {
            let k = e[i];
            let mut d = e.entries().to_vec();
            d[i] = 0;
            out.add_term(ExponentVector::new(d), c * num_traits::pow(value.clone(), k as usize));
        }
        Ok(out)
    }

    /// Moves the polynomial into another ambient, matching variables by
    /// name. Fails if a variable that occurs is missing from `target`.
    pub fn reembed(&self, target: &Vars) -> Result<Polynomial> {
        if &self.vars == target {
            return Ok(self.clone());
        }
        let mut map = Vec::with_capacity(self.nvars());
        for (i, name) in self.vars.names().iter().enumerate() {
            let j = target.index_of(name);
            if j.is_none() && self.uses_var(i) {
                return Err(Error::input(format!(
                    "polynomial uses {name:?}, which is not a variable of {target:?}"
                )));
            }
            map.push(j);
        }
        let mut out = Polynomial::zero(target);
        for (e, c) in &self.terms {
            let mut d = vec![0; target.len()];
            for (i, &k) in e.entries().iter().enumerate() {
                if let Some(j) = map[i] {
                    d[j] = k;
                }
            }
            out.add_term(ExponentVector::new(d), c.clone());
        }
        Ok(out)
    }

    /// Splits `self = sum_k var^k * coeff_k`, returning `coeff_k` indexed by
    /// `k` (still over the same ambient).
    pub fn coefficients_in(&self, var: usize) -> Vec<Polynomial> {
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut out = vec![Polynomial::zero(&self.vars); deg + 1];
        for (e, c) in &self.terms {
            let k = e[var] as usize;
            let mut d = e.entries().to_vec();
            d[var] = 0;
            out[k].add_term(ExponentVector::new(d), c.clone());
        }
        out
    }

    /// Multiplies by a nonzero constant so that coefficients are coprime
    /// integers with a positive leading (storage-order) coefficient.
    pub fn primitive(&self) -> Polynomial {
        use num_integer::Integer;
        if self.is_zero() {
            return self.clone();
        }
        let den = self.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let nums: Vec<BigInt> = self
            .terms
            .values()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let mut g = nums.iter().fold(BigInt::zero(), |acc, a| acc.gcd(a));
        if nums.last().is_some_and(|a| a.is_negative()) {
            g = -g;
        }
        let scale = Rational::new(den, g);
        self.scale(&scale)
    }

    fn check_same_ring(&self, other: &Polynomial) {
        assert!(
            self.vars == other.vars,
            "polynomial ambient mismatch: {:?} vs {:?}",
            self.vars,
            other.vars
        );
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, other: &Polynomial) -> Polynomial {
        self.check_same_ring(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, other: &Polynomial) -> Polynomial {
        self.check_same_ring(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, other: &Polynomial) -> Polynomial {
        self.check_same_ring(other);
        let mut out = Polynomial::zero(&self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea.add(eb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, other: Polynomial) -> Polynomial {
                (&self).$method(&other)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Display order: higher total degree first, then lexicographically
        // larger exponent first.
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then_with(|| b.0.cmp(a.0)));
        for (idx, (e, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors = Vec::new();
            if e.is_constant() || !abs.is_one() {
                factors.push(abs.to_string());
            }
            for (i, &k) in e.entries().iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(self.vars.names()[i].clone()),
                    _ => factors.push(format!("{}^{k}", self.vars.names()[i])),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self} over {:?})", self.vars)
    }
}
