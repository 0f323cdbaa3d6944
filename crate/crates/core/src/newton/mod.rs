//! Newton polyhedra of ideals, Newton non-degeneracy and sufficient
//! certificates for mu-constancy.
//!
//! All polyhedral computations are exact: vertices come from rational linear
//! feasibility, facets from hyperplanes spanned by vertices and coordinate
//! directions, and compact faces from intersections of facets.

mod certify;
mod linalg;
pub mod lp;
mod nondegenerate;
mod polyhedron;
mod weights;

pub use certify::{
    certify_newton, certify_weighted_nonnegative, Certificate, CertificateKind, CertificateVerdict, Check,
};
pub use nondegenerate::{has_torus_zero, is_newton_nondegenerate, FaceCheck, NondegeneracyReport};
pub use polyhedron::{
    face_restriction, newton_polyhedron, CompactFace, Facet, NewtonPolyhedron, MAX_DIMENSION, MAX_SUPPORT,
};
pub use weights::{
    find_weights, is_weighted_homogeneous, weighted_degree, weighted_order, Weights, WEIGHT_SEARCH_BOUND,
};

#[cfg(test)]
mod tests;
