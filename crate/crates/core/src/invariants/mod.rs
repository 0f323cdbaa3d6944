//! Milnor numbers of functions on ICIS and mu-constancy of families.
//!
//! `mu(f|X)` is the colength of `<phi> + J(f, phi)` in the local ring;
//! `mu(X)` comes from the Lê-Greuel chain over the prefixes of `phi`.

mod family;
mod germ;
mod milnor;

pub use family::{
    family_mu_check, family_mu_check_deformed_x, sample_parameters, FamilyCheck, Sample, Verdict, DEFAULT_SAMPLES,
};
pub use germ::{FamilyDeformedX, FamilyFixedX, FunctionOnGerm, MapGerm};
pub use milnor::{milnor_report, mu_icis, mu_rel, relative_jacobian_ideal, MilnorReport, CHAIN_RETRIES};

#[cfg(test)]
mod tests;
