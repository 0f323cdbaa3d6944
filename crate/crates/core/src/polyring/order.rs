use std::cmp::Ordering;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use super::{ExponentVector, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Negative (weighted) degree: the lowest-degree part of a germ leads.
    LocalNegDeg,
    /// (Weighted) degree: the highest-degree part leads.
    GlobalDeg,
}

/// A monomial order: (weighted) degree, local or global, with reverse
/// lexicographic tie-break.
///
/// `compare(a, b) == Greater` means `x^a` leads `x^b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    /// Positive integer weights, scaled from the rational input.
    weights: Option<Vec<u64>>,
}

impl MonomialOrder {
    pub fn local() -> Self {
        MonomialOrder {
            kind: OrderKind::LocalNegDeg,
            weights: None,
        }
    }

    pub fn global() -> Self {
        MonomialOrder {
            kind: OrderKind::GlobalDeg,
            weights: None,
        }
    }

    /// Weighted order. Weights must be strictly positive; they are scaled by
    /// the lcm of their denominators, which leaves the order unchanged.
    pub fn weighted(kind: OrderKind, weights: &[Rational]) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::input("empty weight vector"));
        }
        if weights.iter().any(|w| !w.is_positive()) {
            return Err(Error::input("monomial order weights must be positive"));
        }
        let den = weights
            .iter()
            .fold(num_bigint::BigInt::one(), |acc, w| acc.lcm(w.denom()));
        let scaled = weights
            .iter()
            .map(|w| {
                (w * Rational::from_integer(den.clone()))
                    .to_integer()
                    .to_u64()
                    .ok_or_else(|| Error::input("monomial order weight too large"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MonomialOrder {
            kind,
            weights: Some(scaled),
        })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn is_local(&self) -> bool {
        self.kind == OrderKind::LocalNegDeg
    }

    pub fn weights(&self) -> Option<&[u64]> {
        self.weights.as_deref()
    }

    /// The same order with the opposite kind and identical weights.
    pub fn with_kind(&self, kind: OrderKind) -> Self {
        MonomialOrder {
            kind,
            weights: self.weights.clone(),
        }
    }

    pub fn weighted_degree(&self, e: &ExponentVector) -> u64 {
        self.weighted_degree_slice(e.entries())
    }

    pub(crate) fn weighted_degree_slice(&self, e: &[u32]) -> u64 {
        match &self.weights {
            None => e.iter().map(|&k| u64::from(k)).sum(),
            Some(w) => e.iter().zip(w).map(|(&k, &w)| u64::from(k) * w).sum(),
        }
    }

    /// Total order on exponent vectors of equal length.
    pub fn compare(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        self.compare_slices(a.entries(), b.entries())
    }

    pub(crate) fn compare_slices(&self, a: &[u32], b: &[u32]) -> Ordering {
        let da = self.weighted_degree_slice(a);
        let db = self.weighted_degree_slice(b);
        let by_degree = match self.kind {
            OrderKind::GlobalDeg => da.cmp(&db),
            OrderKind::LocalNegDeg => db.cmp(&da),
        };
        by_degree.then_with(|| revlex(a, b))
    }

    /// Checks the weight vector length against an ambient dimension.
    pub fn check_dimension(&self, n: usize) -> Result<()> {
        match &self.weights {
            Some(w) if w.len() != n => Err(Error::input(format!(
                "order has {} weights but the ring has {n} variables",
                w.len()
            ))),
            _ => Ok(()),
        }
    }
}

/// Reverse lexicographic tie-break: `a` leads iff the last nonzero entry of
/// `a - b` is negative.
fn revlex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

/// Compares two monomials; `Greater` means `a` leads.
pub fn compare_monomials(a: &ExponentVector, b: &ExponentVector, order: &MonomialOrder) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(Error::input(format!(
            "exponent vectors of different lengths ({} and {})",
            a.len(),
            b.len()
        )));
    }
    order.check_dimension(a.len())?;
    Ok(order.compare(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    #[test]
    fn local_prefers_low_degree() {
        let ord = MonomialOrder::local();
        assert_eq!(
            compare_monomials(&ev(&[1, 0]), &ev(&[0, 2]), &ord).unwrap(),
            Ordering::Greater
        );
        assert_eq!(ord.compare(&ev(&[0, 0]), &ev(&[1, 0])), Ordering::Greater);
    }

    #[test]
    fn global_prefers_high_degree() {
        let ord = MonomialOrder::global();
        assert_eq!(
            compare_monomials(&ev(&[1, 0]), &ev(&[0, 2]), &ord).unwrap(),
            Ordering::Less
        );
    }

    #[test]
    fn equal_and_mismatch() {
        let ord = MonomialOrder::global();
        assert_eq!(
            compare_monomials(&ev(&[1, 2]), &ev(&[1, 2]), &ord).unwrap(),
            Ordering::Equal
        );
        assert!(compare_monomials(&ev(&[1, 2]), &ev(&[1]), &ord).is_err());
    }

    #[test]
    fn revlex_tie_break() {
        // x > y > z in degree-1 monomials
        let ord = MonomialOrder::global();
        assert_eq!(ord.compare(&ev(&[1, 0, 0]), &ev(&[0, 1, 0])), Ordering::Greater);
        assert_eq!(ord.compare(&ev(&[0, 1, 0]), &ev(&[0, 0, 1])), Ordering::Greater);
        // x*z vs y^2: revlex puts y^2 ahead
        assert_eq!(ord.compare(&ev(&[1, 0, 1]), &ev(&[0, 2, 0])), Ordering::Less);
    }

    #[test]
    fn weighted_scaling() {
        let w = [Rational::new(1.into(), 2.into()), Rational::from_integer(1.into())];
        let ord = MonomialOrder::weighted(OrderKind::LocalNegDeg, &w).unwrap();
        assert_eq!(ord.weights(), Some(&[1u64, 2][..]));
        // x^3 has weighted degree 3, y has 2: y leads locally
        assert_eq!(ord.compare(&ev(&[0, 1]), &ev(&[3, 0])), Ordering::Greater);
        assert!(MonomialOrder::weighted(OrderKind::GlobalDeg, &[Rational::zero()]).is_err());
    }
}
