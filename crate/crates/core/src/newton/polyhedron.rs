use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::linalg::{dot, is_nonnegative, nullspace, primitive_integer, rank};
use super::lp::{LinearSystem, Relation};
use crate::error::{Error, Result};
use crate::polyring::{combinations, ExponentVector, Polynomial, Rational};

/// Largest supported ambient dimension.
pub const MAX_DIMENSION: usize = 6;
/// Largest supported number of distinct support points.
pub const MAX_SUPPORT: usize = 40;

/// Supporting inequality `<normal, k> >= value`, with a primitive
/// non-negative integer normal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Facet {
    pub normal: Vec<BigInt>,
    pub value: BigInt,
}

impl Facet {
    pub fn evaluate(&self, k: &ExponentVector) -> BigInt {
        dot(&self.normal, k.entries())
    }

    pub fn contains(&self, k: &ExponentVector) -> bool {
        self.evaluate(k) >= self.value
    }
}

impl fmt::Display for Facet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let normal: Vec<String> = self.normal.iter().map(ToString::to_string).collect();
        write!(f, "<({}), k> >= {}", normal.join(","), self.value)
    }
}

/// `Γ₊ = conv(support + R_{>=0}^n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    n: usize,
    support: Vec<ExponentVector>,
    vertices: Vec<ExponentVector>,
    facets: Arc<[Facet]>,
}

/// A compact face together with a strictly positive weight vector whose
/// minimum over the polyhedron is attained exactly on the face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompactFace {
    pub vertices: Vec<ExponentVector>,
    /// Support points lying on the face.
    pub points: Vec<ExponentVector>,
    pub weight: Vec<BigInt>,
    pub value: BigInt,
    pub dimension: usize,
    facets: Arc<[Facet]>,
}

impl CompactFace {
    /// Whether the lattice point `k` lies on the face.
    pub fn contains(&self, k: &ExponentVector) -> bool {
        dot(&self.weight, k.entries()) == self.value && self.facets.iter().all(|f| f.contains(k))
    }
}

impl fmt::Display for CompactFace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.vertices.iter().map(ToString::to_string).collect();
        let w: Vec<String> = self.weight.iter().map(ToString::to_string).collect();
        write!(
            f,
            "conv{{{}}} (w = ({}), min {})",
            v.join(", "),
            w.join(","),
            self.value
        )
    }
}

/// Newton polyhedron of the union of the supports of `polys`.
pub fn newton_polyhedron(polys: &[Polynomial]) -> Result<NewtonPolyhedron> {
    let first = polys
        .iter()
        .find(|p| !p.is_zero())
        .ok_or_else(|| Error::input("Newton polyhedron of the zero ideal"))?;
    let n = first.nvars();
    if polys.iter().any(|p| p.vars() != first.vars()) {
        return Err(Error::input("polynomials live in different rings"));
    }
    let support: BTreeSet<ExponentVector> = polys.iter().flat_map(|p| p.support()).collect();
    NewtonPolyhedron::from_support(n, support.into_iter().collect())
}

impl NewtonPolyhedron {
    pub fn from_support(n: usize, points: Vec<ExponentVector>) -> Result<Self> {
        if n > MAX_DIMENSION {
            return Err(Error::ComputationLimit(format!(
                "Newton polyhedra are supported up to dimension {MAX_DIMENSION}, got {n}"
            )));
        }
        let support: Vec<ExponentVector> = points.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        if support.is_empty() {
            return Err(Error::input("empty support"));
        }
        if support.len() > MAX_SUPPORT {
            return Err(Error::ComputationLimit(format!(
                "Newton polyhedra are supported up to {MAX_SUPPORT} support points, got {}",
                support.len()
            )));
        }
        if support.iter().any(|k| k.len() != n) {
            return Err(Error::input("support point of the wrong dimension"));
        }
        let vertices = find_vertices(&support);
        let facets: Arc<[Facet]> = find_facets(n, &vertices).into();
        Ok(NewtonPolyhedron {
            n,
            support,
            vertices,
            facets,
        })
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn support(&self) -> &[ExponentVector] {
        &self.support
    }

    pub fn vertices(&self) -> &[ExponentVector] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Membership by the facet inequalities.
    pub fn contains(&self, k: &ExponentVector) -> bool {
        k.len() == self.n && self.facets.iter().all(|f| f.contains(k))
    }

    /// Membership by linear feasibility: `k >= sum λ_j s_j` with `λ` a
    /// probability vector over the support.
    pub fn contains_by_lp(&self, k: &ExponentVector) -> bool {
        k.len() == self.n && dominated_by_hull(&self.support, k)
    }

    /// All compact faces (of every dimension), ordered by dimension and then
    /// by vertex list.
    pub fn compact_faces(&self) -> Vec<CompactFace> {
        let m = self.vertices.len();
        let facet_sets: Vec<BTreeSet<usize>> = self
            .facets
            .iter()
            .map(|f| (0..m).filter(|&i| f.evaluate(&self.vertices[i]) == f.value).collect())
            .collect();
        // Faces are the nonempty intersections of facets; a pointed
        // polyhedron has a vertex on each of them.
        let mut faces: BTreeSet<BTreeSet<usize>> = facet_sets.iter().cloned().collect();
        let mut frontier: Vec<BTreeSet<usize>> = faces.iter().cloned().collect();
        while let Some(face) = frontier.pop() {
            for fs in &facet_sets {
                let meet: BTreeSet<usize> = face.intersection(fs).copied().collect();
                if !meet.is_empty() && faces.insert(meet.clone()) {
                    frontier.push(meet);
                }
            }
        }
        let mut out = Vec::new();
        for face in faces {
            let containing: Vec<&Facet> = self
                .facets
                .iter()
                .zip(&facet_sets)
                .filter(|(_, fs)| face.is_subset(fs))
                .map(|(f, _)| f)
                .collect();
            let mut weight = vec![BigInt::zero(); self.n];
            let mut value = BigInt::zero();
            for f in &containing {
                for (w, a) in weight.iter_mut().zip(&f.normal) {
                    *w += a;
                }
                value += &f.value;
            }
            if weight.iter().any(|w| !w.is_positive()) {
                continue;
            }
            let vertices: Vec<ExponentVector> = face.iter().map(|&i| self.vertices[i].clone()).collect();
            let points: Vec<ExponentVector> = self
                .support
                .iter()
                .filter(|k| dot(&weight, k.entries()) == value)
                .cloned()
                .collect();
            let dimension = affine_dimension(&vertices);
            out.push(CompactFace {
                vertices,
                points,
                weight,
                value,
                dimension,
                facets: self.facets.clone(),
            });
        }
        out.sort_by(|a, b| (a.dimension, &a.vertices).cmp(&(b.dimension, &b.vertices)));
        out
    }
}

/// `g_Δ`: the terms of `g` whose exponents lie on the face.
pub fn face_restriction(g: &Polynomial, face: &CompactFace) -> Polynomial {
    Polynomial::from_terms(
        g.vars(),
        g.terms()
            .filter(|(e, _)| face.contains(e))
            .map(|(e, c)| (e.clone(), c.clone())),
    )
}

fn to_rational(e: &ExponentVector) -> Vec<Rational> {
    e.entries()
        .iter()
        .map(|&x| Rational::from_integer(BigInt::from(x)))
        .collect()
}

/// Is `k` in `conv(points) + R_{>=0}^n`?
fn dominated_by_hull(points: &[ExponentVector], k: &ExponentVector) -> bool {
    if points.is_empty() {
        return false;
    }
    let n = k.len();
    let m = points.len();
    let mut lp = LinearSystem::new(m);
    lp.add(vec![Rational::one(); m], Relation::Eq, Rational::one());
    for i in 0..n {
        let row = points
            .iter()
            .map(|p| Rational::from_integer(BigInt::from(p[i])))
            .collect();
        lp.add(row, Relation::Le, Rational::from_integer(BigInt::from(k[i])));
    }
    lp.is_feasible()
}

fn find_vertices(support: &[ExponentVector]) -> Vec<ExponentVector> {
    support
        .iter()
        .enumerate()
        .filter(|&(i, p)| {
            let others: Vec<ExponentVector> = support
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, q)| q.clone())
                .collect();
            if others.iter().any(|q| q.divides(p)) {
                return false;
            }
            !dominated_by_hull(&others, p)
        })
        .map(|(_, p)| p.clone())
        .collect()
}

/// Facets are spanned by `d` vertices and `n - d` coordinate directions;
/// each candidate hyperplane is kept when its normal is non-negative and it
/// supports all vertices.
fn find_facets(n: usize, vertices: &[ExponentVector]) -> Vec<Facet> {
    let mut found: BTreeMap<Vec<BigInt>, BigInt> = BTreeMap::new();
    for d in 1..=n.min(vertices.len()) {
        for pts in combinations(vertices.len(), d) {
            for dirs in combinations(n, n - d) {
                let mut rows: Vec<Vec<Rational>> = pts
                    .iter()
                    .map(|&i| {
                        let mut r = to_rational(&vertices[i]);
                        r.push(-Rational::one());
                        r
                    })
                    .collect();
                for &e in &dirs {
                    let mut r = vec![Rational::zero(); n + 1];
                    r[e] = Rational::one();
                    rows.push(r);
                }
                let null = nullspace(rows, n + 1);
                if null.len() != 1 {
                    continue;
                }
                let mut v = null.into_iter().next().unwrap();
                if v[..n].iter().all(|x| !x.is_positive()) {
                    v.iter_mut().for_each(|x| *x = -x.clone());
                }
                if !is_nonnegative(&v[..n]) || v[..n].iter().all(Zero::is_zero) {
                    continue;
                }
                let normal = primitive_integer(&v[..n]);
                let value = dot(&normal, vertices[pts[0]].entries());
                if vertices.iter().all(|u| dot(&normal, u.entries()) >= value) {
                    found.insert(normal, value);
                }
            }
        }
    }
    found
        .into_iter()
        .map(|(normal, value)| Facet { normal, value })
        .collect()
}

fn affine_dimension(points: &[ExponentVector]) -> usize {
    let base = to_rational(&points[0]);
    let rows: Vec<Vec<Rational>> = points[1..]
        .iter()
        .map(|p| to_rational(p).iter().zip(&base).map(|(a, b)| a - b).collect())
        .collect();
    if rows.is_empty() {
        0
    } else {
        rank(rows)
    }
}
