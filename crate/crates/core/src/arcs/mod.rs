//! Valuations along polynomial arcs and refutation of the integral-closure
//! conditions on `∂F/∂t` by the valuative criterion.
//!
//! An arc `γ(s)` assigns a polynomial in one variable `s` to each ambient
//! coordinate (the parameter `t` and the space variables); coordinates that
//! are not given are zero. Testing finitely many arcs can refute but never
//! establish the conditions.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::invariants::{FamilyFixedX, MapGerm};
use num_traits::One;

use crate::polyring::{jacobian, maximal_minors, ExponentVector, Polynomial, Rational, Vars};


/// Order of vanishing at `s = 0`; `Infinite` for the zero series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(u64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<u64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

/// A parametrized curve through the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arc {
    param: Vars,
    coords: BTreeMap<String, Polynomial>,
}

impl Arc {
    /// `coords` maps coordinate names to polynomials in the single variable
    /// of `param`.
    pub fn new(param: &Vars, coords: BTreeMap<String, Polynomial>) -> Result<Self> {
        if param.len() != 1 {
            return Err(Error::input("an arc has exactly one parameter"));
        }
        let mut out = BTreeMap::new();
        for (name, p) in coords {
            if param.index_of(&name).is_some() {
                return Err(Error::input(format!("arc parameter {name:?} is also a coordinate")));
            }
            let p = p.reembed(param)?;
            if !p.has_zero_constant_term() {
                return Err(Error::input(format!(
                    "arc coordinate {name} = {p} does not pass through the origin"
                )));
            }
            out.insert(name, p);
        }
        if out.values().all(Polynomial::is_zero) {
            return Err(Error::input("the arc is constant"));
        }
        Ok(Arc {
            param: param.clone(),
            coords: out,
        })
    }

    pub fn param(&self) -> &str {
        &self.param.names()[0]
    }

    pub fn coordinate(&self, name: &str) -> Polynomial {
        self.coords
            .get(name)
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(&self.param))
    }

    pub fn coordinates(&self) -> &BTreeMap<String, Polynomial> {
        &self.coords
    }

    /// `p ∘ γ` as a polynomial in the arc parameter.
    pub fn compose(&self, p: &Polynomial) -> Polynomial {
        let images: BTreeMap<String, Polynomial> = p
            .vars()
            .names()
            .iter()
            .map(|n| (n.clone(), self.coordinate(n)))
            .collect();
        p.substitute(&images)
            .expect("every variable has an image in the parameter ring")
    }

    /// `γ(s^m)`.
    pub fn reparametrize(&self, m: u32) -> Arc {
        let s = Polynomial::monomial(&self.param, ExponentVector::new(vec![m]), Rational::one());
        let images = BTreeMap::from([(self.param().to_string(), s)]);
        Arc {
            param: self.param.clone(),
            coords: self
                .coords
                .iter()
                .map(|(k, p)| (k.clone(), p.substitute(&images).expect("single variable")))
                .collect(),
        }
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|(k, p)| format!("{k}={p}")).collect();
        f.write_str(&parts.join(", "))
    }
}

/// `ν(p ∘ γ)`.
pub fn valuation(p: &Polynomial, arc: &Arc) -> Valuation {
    match arc.compose(p).order() {
        Some(v) => Valuation::Finite(v),
        None => Valuation::Infinite,
    }
}

/// `γ` lies on `C × X`: every `phi_i ∘ γ` vanishes identically.
pub fn arc_on_variety(arc: &Arc, phi: &MapGerm) -> bool {
    phi.equations().iter().all(|p| arc.compose(p).is_zero())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuationReport {
    pub nu_dfdt: Valuation,
    /// Infimum over the generators of `J_X`.
    pub nu_jx: Valuation,
    pub per_generator: Vec<Valuation>,
    /// `ν(∂F/∂t ∘ γ) <= ν(J_X ∘ γ)`, with `J_X ∘ γ` not identically zero.
    pub refutes_2: bool,
    /// `ν(∂F/∂t ∘ γ) < ν(J_X ∘ γ)`.
    pub refutes_3: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArcOutcome {
    Evaluated(ValuationReport),
    Rejected(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArcVerdict {
    Refuted,
    NoRefutationFound,
}

impl ArcVerdict {
    pub fn label(self) -> &'static str {
        match self {
            ArcVerdict::Refuted => "REFUTED",
            ArcVerdict::NoRefutationFound => "NO-REFUTATION-FOUND",
        }
    }
}

impl fmt::Display for ArcVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcTestReport {
    /// Generators `B_i` of `J_X`: maximal minors of the Jacobian of
    /// `(F, phi)` in the space variables.
    pub generators: Vec<Polynomial>,
    pub dfdt: Polynomial,
    pub outcomes: Vec<ArcOutcome>,
    pub condition_2: ArcVerdict,
    pub condition_3: ArcVerdict,
    /// Equivalent to condition 3, so refuted together with it.
    pub condition_4: ArcVerdict,
}

/// Evaluates `ν(∂F/∂t ∘ γ)` against `ν(J_X ∘ γ)` on each arc.
///
/// Arcs not lying on `C × X` are rejected; so is an arc along which every
/// generator of `J_X` vanishes, since it carries no information.
pub fn test_conditions_on_arcs(fam: &FamilyFixedX, arcs: &[Arc]) -> Result<ArcTestReport> {
    let germ = fam.germ();
    let ring = fam.family().vars();
    let mut rows = vec![fam.family().clone()];
    for p in germ.equations() {
        rows.push(p.reembed(ring)?);
    }
    let generators = maximal_minors(&jacobian(&rows, germ.vars().names())?)?;
    let dfdt = fam.family().differentiate(fam.param())?;

    let mut outcomes = Vec::with_capacity(arcs.len());
    for arc in arcs {
        if !arc_on_variety(arc, germ) {
            outcomes.push(ArcOutcome::Rejected(format!("{arc}: does not lie on C x X")));
            continue;
        }
        let per_generator: Vec<Valuation> = generators.iter().map(|b| valuation(b, arc)).collect();
        let nu_jx = per_generator.iter().copied().min().unwrap_or(Valuation::Infinite);
        if nu_jx == Valuation::Infinite {
            outcomes.push(ArcOutcome::Rejected(format!(
                "{arc}: every generator of J_X vanishes along the arc"
            )));
            continue;
        }
        let nu_dfdt = valuation(&dfdt, arc);
        outcomes.push(ArcOutcome::Evaluated(ValuationReport {
            nu_dfdt,
            nu_jx,
            per_generator,
            refutes_2: nu_dfdt <= nu_jx,
            refutes_3: nu_dfdt < nu_jx,
        }));
    }
    let any = |pick: fn(&ValuationReport) -> bool| {
        let hit = outcomes
            .iter()
            .any(|o| matches!(o, ArcOutcome::Evaluated(r) if pick(r)));
        if hit {
            ArcVerdict::Refuted
        } else {
            ArcVerdict::NoRefutationFound
        }
    };
    let condition_2 = any(|r| r.refutes_2);
    let condition_3 = any(|r| r.refutes_3);
    Ok(ArcTestReport {
        generators,
        dfdt,
        outcomes,
        condition_2,
        condition_3,
        condition_4: condition_3,
    })
}
