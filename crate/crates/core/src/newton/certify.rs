use std::fmt;

use super::nondegenerate::{is_newton_nondegenerate, NondegeneracyReport};
use super::weights::{find_weights, is_weighted_homogeneous, weighted_order, Weights};
use crate::error::{Error, Result};
use crate::invariants::{mu_icis, mu_rel, relative_jacobian_ideal, FamilyFixedX, FunctionOnGerm};
use crate::polyring::{jacobian, maximal_minors, Polynomial};
use crate::standard_basis::{colength, Budget, Colength, IdealBasis};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CertificateKind {
    NewtonInclusion,
    WeightedNonnegative,
}

impl CertificateKind {
    pub fn name(self) -> &'static str {
        match self {
            CertificateKind::NewtonInclusion => "newton-inclusion",
            CertificateKind::WeightedNonnegative => "weighted-nonnegative",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CertificateVerdict {
    /// Every hypothesis and inclusion was verified: the family is
    /// mu-constant (and the certificate's conclusion holds).
    Certified,
    /// The hypotheses hold but some inclusion failed; nothing is concluded.
    Failed,
    /// A hypothesis of the certificate does not hold.
    NotApplicable,
}

impl CertificateVerdict {
    pub fn label(self) -> &'static str {
        match self {
            CertificateVerdict::Certified => "CERTIFIED",
            CertificateVerdict::Failed => "FAILED",
            CertificateVerdict::NotApplicable => "NOT APPLICABLE",
        }
    }
}

impl fmt::Display for CertificateVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub description: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub verdict: CertificateVerdict,
    pub reason: String,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
    pub weights: Option<Weights>,
    pub nondegeneracy: Option<NondegeneracyReport>,
}

impl Certificate {
    fn not_applicable(kind: CertificateKind, reason: impl Into<String>) -> Self {
        Certificate {
            kind,
            verdict: CertificateVerdict::NotApplicable,
            reason: reason.into(),
            checks: Vec::new(),
            notes: Vec::new(),
            weights: None,
            nondegeneracy: None,
        }
    }

    fn conclude(&mut self, success: &str) {
        if self.checks.iter().all(|c| c.passed) {
            self.verdict = CertificateVerdict::Certified;
            self.reason = success.into();
        } else {
            self.verdict = CertificateVerdict::Failed;
            let failed: Vec<&str> = self
                .checks
                .iter()
                .filter(|c| !c.passed)
                .map(|c| c.description.as_str())
                .collect();
            self.reason = format!("failed: {}", failed.join("; "));
        }
    }
}

/// Newton-polyhedron certificate for `F = f + t g` on a fixed ICIS.
///
/// With `I = <phi> + J(f, phi)` Newton non-degenerate of finite colength,
/// `Γ₊(g) ⊂ Γ₊(I)` and `Γ₊(C_i) ⊂ Γ₊(I)` for the maximal minors `C_i` of the
/// Jacobian of `(g, phi)`, the family is mu-constant.
pub fn certify_newton(fam: &FamilyFixedX, budget: Budget) -> Result<Certificate> {
    let kind = CertificateKind::NewtonInclusion;
    let Some((f, g)) = fam.split() else {
        return Ok(Certificate::not_applicable(kind, "F is not of the form f + t*g"));
    };
    let germ = fam.germ();
    let fg = FunctionOnGerm::new(germ.clone(), f)?;
    let ideal = relative_jacobian_ideal(&fg)?;
    if colength(&IdealBasis::local(ideal.clone())?, budget)? == Colength::Infinite {
        return Ok(Certificate::not_applicable(
            kind,
            "f does not have an isolated singularity on X",
        ));
    }
    let report = match is_newton_nondegenerate(&ideal, budget) {
        Ok(r) => r,
        Err(Error::ComputationLimit(msg)) if msg.contains("Newton polyhedra") => {
            return Ok(Certificate::not_applicable(kind, msg));
        }
        Err(e) => return Err(e),
    };
    let polyhedron = &report.polyhedron;
    let mut rows = vec![g.clone()];
    rows.extend_from_slice(germ.equations());
    let minors = maximal_minors(&jacobian(&rows, germ.vars().names())?)?;

    let outside = |p: &Polynomial| -> Vec<String> {
        p.support()
            .into_iter()
            .filter(|k| !polyhedron.contains(k))
            .map(|k| k.to_string())
            .collect()
    };
    let inclusion = |name: &str, p: &Polynomial| -> Check {
        let bad = outside(p);
        let description = if bad.is_empty() {
            format!("supp({name}) lies in the Newton polyhedron of I")
        } else {
            format!(
                "supp({name}) has points outside the Newton polyhedron of I: {}",
                bad.join(" ")
            )
        };
        Check {
            description,
            passed: bad.is_empty(),
        }
    };
    let mut checks = vec![Check {
        description: if report.is_nondegenerate() {
            "I is Newton non-degenerate".into()
        } else {
            "I is Newton degenerate (some face system has a torus zero)".into()
        },
        passed: report.is_nondegenerate(),
    }];
    checks.push(inclusion("g", &g));
    for (i, c) in minors.iter().enumerate() {
        checks.push(inclusion(&format!("C_{}", i + 1), c));
    }
    let mut cert = Certificate {
        kind,
        verdict: CertificateVerdict::Failed,
        reason: String::new(),
        checks,
        notes: Vec::new(),
        weights: None,
        nondegeneracy: Some(report),
    };
    cert.conclude("all face systems are torus-free and all supports lie in the Newton polyhedron");
    Ok(cert)
}

/// Weighted-homogeneous certificate for `F = f + sum t^k alpha_k`: if
/// `phi` and `f` are weighted homogeneous for positive weights `w` and each
/// `alpha_k` has weighted order at least `deg_w f`, the family is
/// mu-constant.
///
/// A `hint` is used when it is valid; otherwise weights are searched.
pub fn certify_weighted_nonnegative(
    fam: &FamilyFixedX,
    hint: Option<&[u64]>,
    seed: u64,
    budget: Budget,
) -> Result<Certificate> {
    let kind = CertificateKind::WeightedNonnegative;
    let germ = fam.germ();
    let expansion = fam.t_expansion()?;
    let f = &expansion[0];
    if f.is_zero() {
        return Ok(Certificate::not_applicable(kind, "f = F(0, x) is zero"));
    }
    let mut homogeneous: Vec<Polynomial> = germ.equations().to_vec();
    homogeneous.push(f.clone());
    if homogeneous.iter().any(Polynomial::is_zero) {
        return Ok(Certificate::not_applicable(kind, "a defining equation is zero"));
    }
    let mut notes = Vec::new();
    let hinted = hint.filter(|w| {
        let ok = w.len() == germ.vars().len() && w.iter().all(|&x| x > 0) && is_weighted_homogeneous(w, &homogeneous);
        if !ok {
            notes.push(format!(
                "weight hint {w:?} does not make phi and f weighted homogeneous; searching instead"
            ));
        }
        ok
    });
    let weights = match hinted {
        Some(w) => Weights {
            weights: w.to_vec(),
            degrees: homogeneous.iter().map(|p| weighted_order(w, p).unwrap_or(0)).collect(),
        },
        None => match find_weights(&homogeneous)? {
            Some(w) => w,
            None => {
                return Ok(Certificate::not_applicable(
                    kind,
                    "phi and f are not weighted homogeneous for any positive weights",
                ))
            }
        },
    };
    let fg = FunctionOnGerm::new(germ.clone(), f.clone())?;
    if mu_rel(&fg, budget)? == Colength::Infinite {
        return Ok(Certificate::not_applicable(
            kind,
            "f does not have an isolated singularity on X",
        ));
    }
    match mu_icis(germ, seed, budget) {
        Ok(Colength::Finite(_)) => {}
        Ok(Colength::Infinite) | Err(Error::Hypothesis(_)) => {
            return Ok(Certificate::not_applicable(kind, "X is not an ICIS"));
        }
        Err(e) => return Err(e),
    }
    let w = &weights.weights;
    let deg_f = *weights.degrees.last().expect("f is included");
    let mut checks = Vec::new();
    for (k, alpha) in expansion.iter().enumerate().skip(1) {
        let Some(order) = weighted_order(w, alpha) else {
            continue;
        };
        checks.push(Check {
            description: format!(
                "coefficient of t^{k} has weighted order {order} {} deg_w(f) = {deg_f}",
                if order >= deg_f { ">=" } else { "<" }
            ),
            passed: order >= deg_f,
        });
    }
    let mut cert = Certificate {
        kind,
        verdict: CertificateVerdict::Failed,
        reason: String::new(),
        checks,
        notes,
        weights: Some(weights),
        nondegeneracy: None,
    };
    cert.conclude("every t-coefficient has weighted order at least deg_w(f)");
    Ok(cert)
}
