use num_traits::Zero;

use crate::error::{Error, Result};
use crate::polyring::{Polynomial, Rational, Vars};

/// A map germ `phi: (C^n, 0) -> (C^p, 0)` with `n > p`, given by polynomial
/// representatives over the ring of space variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapGerm {
    vars: Vars,
    phi: Vec<Polynomial>,
}

impl MapGerm {
    pub fn new(vars: &Vars, phi: Vec<Polynomial>) -> Result<Self> {
        if vars.is_empty() {
            return Err(Error::input("a germ needs at least one space variable"));
        }
        if phi.len() >= vars.len() {
            return Err(Error::input(format!(
                "an ICIS in C^{} needs fewer than {} equations, got {}",
                vars.len(),
                vars.len(),
                phi.len()
            )));
        }
        let phi = phi.iter().map(|p| p.reembed(vars)).collect::<Result<Vec<_>>>()?;
        for (i, p) in phi.iter().enumerate() {
            if !p.has_zero_constant_term() {
                return Err(Error::input(format!(
                    "phi_{} = {p} does not vanish at the origin",
                    i + 1
                )));
            }
        }
        Ok(MapGerm {
            vars: vars.clone(),
            phi,
        })
    }

    /// The germ of the whole space (`p = 0`).
    pub fn ambient(vars: &Vars) -> Result<Self> {
        Self::new(vars, Vec::new())
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn equations(&self) -> &[Polynomial] {
        &self.phi
    }

    pub fn codimension(&self) -> usize {
        self.phi.len()
    }
}

/// A function germ `f: (X, 0) -> (C, 0)` on a map germ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionOnGerm {
    germ: MapGerm,
    f: Polynomial,
}

impl FunctionOnGerm {
    pub fn new(germ: MapGerm, f: Polynomial) -> Result<Self> {
        let f = f.reembed(germ.vars())?;
        if !f.has_zero_constant_term() {
            return Err(Error::input(format!("f = {f} does not vanish at the origin")));
        }
        Ok(FunctionOnGerm { germ, f })
    }

    pub fn germ(&self) -> &MapGerm {
        &self.germ
    }

    pub fn function(&self) -> &Polynomial {
        &self.f
    }
}

/// One-parameter deformation `F(t, x)` of a function on a fixed germ.
///
/// `F` lives in a ring containing the space variables and the parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyFixedX {
    germ: MapGerm,
    param: String,
    family: Polynomial,
}

impl FamilyFixedX {
    pub fn new(germ: MapGerm, param: &str, family: Polynomial) -> Result<Self> {
        check_param(germ.vars(), family.vars(), param)?;
        for name in germ.vars().names() {
            family.vars().require(name)?;
        }
        let fam = FamilyFixedX {
            germ,
            param: param.to_string(),
            family,
        };
        let f0 = fam.at(&Rational::zero())?;
        if !f0.has_zero_constant_term() {
            return Err(Error::input("F(0, x) does not vanish at the origin"));
        }
        Ok(fam)
    }

    /// `F = f + t * g`.
    pub fn from_split(germ: MapGerm, param: &str, f: &Polynomial, g: &Polynomial) -> Result<Self> {
        if f.vars() != g.vars() {
            return Err(Error::input("f and g live in different rings"));
        }
        let t = Polynomial::var(f.vars(), param)?;
        Self::new(germ, param, f + &(&t * g))
    }

    pub fn germ(&self) -> &MapGerm {
        &self.germ
    }

    pub fn param(&self) -> &str {
        &self.param
    }

    pub fn family(&self) -> &Polynomial {
        &self.family
    }

    /// `f_{t*}` as a polynomial in the space variables.
    pub fn at(&self, value: &Rational) -> Result<Polynomial> {
        self.family.specialize(&self.param, value)?.reembed(self.germ.vars())
    }

    /// `F(t, x)` reembedded over the space variables followed by the
    /// parameter, i.e. the ring `C^n x C`.
    pub fn total_ring(&self) -> Result<(Vars, Polynomial)> {
        let mut names: Vec<String> = self.germ.vars().names().to_vec();
        names.push(self.param.clone());
        let vars = Vars::new(&names)?;
        let fam = self.family.reembed(&vars)?;
        Ok((vars, fam))
    }

    /// `(f, g)` with `F = f + t g`, when `F` is affine in `t`. Both are over
    /// the space variables.
    pub fn split(&self) -> Option<(Polynomial, Polynomial)> {
        let t = self.family.vars().index_of(&self.param)?;
        let parts = self.family.coefficients_in(t);
        if parts.len() > 2 {
            return None;
        }
        let f = parts[0].reembed(self.germ.vars()).ok()?;
        let g = match parts.get(1) {
            Some(g) => g.reembed(self.germ.vars()).ok()?,
            None => Polynomial::zero(self.germ.vars()),
        };
        Some((f, g))
    }

    /// `[f, alpha_1, alpha_2, ...]` with `F = f + sum_k t^k alpha_k`.
    pub fn t_expansion(&self) -> Result<Vec<Polynomial>> {
        let t = self.family.vars().require(&self.param)?;
        self.family
            .coefficients_in(t)
            .iter()
            .map(|p| p.reembed(self.germ.vars()))
            .collect()
    }
}

/// A function on a deformed germ: `Phi(t, x) = phi_t(x)` and `f(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyDeformedX {
    space: Vars,
    param: String,
    phi_t: Vec<Polynomial>,
    f: Polynomial,
}

impl FamilyDeformedX {
    pub fn new(space: &Vars, param: &str, phi_t: Vec<Polynomial>, f: Polynomial) -> Result<Self> {
        if phi_t.len() >= space.len() {
            return Err(Error::input("too many equations for an ICIS"));
        }
        for p in &phi_t {
            check_param(space, p.vars(), param)?;
            for name in space.names() {
                p.vars().require(name)?;
            }
            // Phi(t, 0) must vanish identically in t: no pure-t terms.
            let t = p.vars().require(param)?;
            if p.terms().any(|(e, _)| (0..e.len()).all(|i| i == t || e[i] == 0)) {
                return Err(Error::input(format!(
                    "Phi component {p} does not vanish at x = 0 for all t"
                )));
            }
        }
        let f = f.reembed(space)?;
        if !f.has_zero_constant_term() {
            return Err(Error::input(format!("f = {f} does not vanish at the origin")));
        }
        Ok(FamilyDeformedX {
            space: space.clone(),
            param: param.to_string(),
            phi_t,
            f,
        })
    }

    pub fn space(&self) -> &Vars {
        &self.space
    }

    pub fn param(&self) -> &str {
        &self.param
    }

    pub fn equations(&self) -> &[Polynomial] {
        &self.phi_t
    }

    pub fn function(&self) -> &Polynomial {
        &self.f
    }

    /// The function on the specialized germ `phi_{t*}`.
    pub fn at(&self, value: &Rational) -> Result<FunctionOnGerm> {
        let phi = self
            .phi_t
            .iter()
            .map(|p| p.specialize(&self.param, value)?.reembed(&self.space))
            .collect::<Result<Vec<_>>>()?;
        FunctionOnGerm::new(MapGerm::new(&self.space, phi)?, self.f.clone())
    }
}

fn check_param(space: &Vars, ring: &Vars, param: &str) -> Result<()> {
    if space.index_of(param).is_some() {
        return Err(Error::input(format!("parameter {param:?} is also a space variable")));
    }
    ring.require(param)?;
    Ok(())
}
