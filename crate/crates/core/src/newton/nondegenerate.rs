use super::polyhedron::{face_restriction, newton_polyhedron, CompactFace, NewtonPolyhedron};
use crate::error::{Error, Result};
use crate::polyring::{Polynomial, Vars};
use crate::standard_basis::{colength, is_unit_ideal, Budget, Colength, IdealBasis};

/// The face system of one compact face and whether it has a zero in the
/// torus `(C*)^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceCheck {
    pub face: CompactFace,
    pub restrictions: Vec<Polynomial>,
    pub torus_zero: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NondegeneracyReport {
    pub polyhedron: NewtonPolyhedron,
    pub faces: Vec<FaceCheck>,
}

impl NondegeneracyReport {
    pub fn is_nondegenerate(&self) -> bool {
        self.faces.iter().all(|f| !f.torus_zero)
    }

    pub fn transcript(&self) -> Vec<String> {
        self.faces
            .iter()
            .map(|f| {
                let polys: Vec<String> = f.restrictions.iter().map(ToString::to_string).collect();
                format!(
                    "face {}: [{}] {}",
                    f.face,
                    polys.join(", "),
                    if f.torus_zero {
                        "has a zero in the torus"
                    } else {
                        "no zero in the torus"
                    }
                )
            })
            .collect()
    }
}

/// Checks every compact face of `Γ₊(generators)` for torus zeros of the face
/// system. The ideal must have finite colength.
pub fn is_newton_nondegenerate(generators: &[Polynomial], budget: Budget) -> Result<NondegeneracyReport> {
    let ideal = IdealBasis::local(generators.to_vec())?;
    if colength(&ideal, budget)? == Colength::Infinite {
        return Err(Error::hypothesis("the ideal does not have finite colength"));
    }
    let polyhedron = newton_polyhedron(generators)?;
    let faces = polyhedron
        .compact_faces()
        .into_iter()
        .map(|face| {
            let restrictions: Vec<Polynomial> = generators.iter().map(|g| face_restriction(g, &face)).collect();
            let torus_zero = has_torus_zero(&restrictions, budget)?;
            Ok(FaceCheck {
                face,
                restrictions,
                torus_zero,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(NondegeneracyReport { polyhedron, faces })
}

/// Rabinowitsch: the system has a zero with all coordinates nonzero iff
/// `<system, u * x_1 * ... * x_n - 1>` is a proper ideal.
pub fn has_torus_zero(system: &[Polynomial], budget: Budget) -> Result<bool> {
    let vars = system.first().ok_or_else(|| Error::input("empty face system"))?.vars();
    let mut names: Vec<String> = vars.names().to_vec();
    let mut fresh = String::from("u");
    while names.contains(&fresh) {
        fresh.push('_');
    }
    names.push(fresh.clone());
    let ext = Vars::new(&names)?;
    let mut gens = system.iter().map(|p| p.reembed(&ext)).collect::<Result<Vec<_>>>()?;
    let mut product = Polynomial::var(&ext, &fresh)?;
    for name in vars.names() {
        product = &product * &Polynomial::var(&ext, name)?;
    }
    gens.push(&product - &Polynomial::one(&ext));
    Ok(!is_unit_ideal(&IdealBasis::global(gens)?, budget)?)
}
