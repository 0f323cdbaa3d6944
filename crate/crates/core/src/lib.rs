//! Exact computations for functions on isolated complete intersection
//! singularities (ICIS).
//!
//! * [`polyring`]: sparse rational polynomials, monomial orders, Jacobians.
//! * [`standard_basis`]: Mora / Buchberger standard bases, colength.
//! * [`invariants`]: Milnor numbers and mu-constancy by specialization.
//! * [`newton`]: Newton polyhedra, non-degeneracy, certificates.
//! * [`arcs`]: valuations along parametrized curves.
//! * [`cli`]: problem files, commands and JSON reports.

pub mod arcs;
pub mod cli;
pub mod error;
pub mod invariants;
pub mod newton;
pub mod polyring;
pub mod standard_basis;

pub use error::{Error, Result};
