use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::index_set::IndexSet;

/// A sparse inclusion-exclusion coefficient vector: a map from nonempty
/// index sets to arbitrary-precision integer coefficients.
///
/// Coefficients are big integers on purpose: the unique vector supported on
/// the Venn diagram can grow like 4^(n/5), which overflows fixed-width
/// integers near n ≈ 80.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IEVector {
    n: u32,
    coeffs: BTreeMap<IndexSet, BigInt>,
}

impl IEVector {
    pub fn new(n: u32) -> Self {
        IEVector { n, coeffs: BTreeMap::new() }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Adds `coeff` to the coefficient of `set`; zero entries are dropped so
    /// the stored support is exactly the nonzero support.
    pub fn add_term(&mut self, set: IndexSet, coeff: BigInt) {
        assert!(!set.is_empty(), "IE-vector terms are indexed by nonempty sets");
        assert!(set.max_label() <= self.n, "term mentions a label above n");
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(set.clone()).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&set);
        }
    }

    pub fn coeff(&self, set: &IndexSet) -> BigInt {
        self.coeffs.get(set).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Number of nonzero coefficients.
    pub fn support_size(&self) -> usize {
        self.coeffs.len()
    }

    /// Terms in canonical (cardinality, lex) order.
    pub fn iter(&self) -> impl Iterator<Item = (&IndexSet, &BigInt)> {
        self.coeffs.iter()
    }

    /// Sum of absolute coefficient values.
    pub fn l1_norm(&self) -> BigInt {
        self.coeffs.values().map(|c| c.abs()).sum()
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs.values().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero)
    }

    /// Largest term cardinality, or 0 for the empty vector.
    pub fn max_term_size(&self) -> usize {
        self.coeffs.keys().map(|s| s.len()).max().unwrap_or(0)
    }

    /// Keeps only the terms on sets of size at most `r` (Bonferroni-style
    /// truncation; meaningful when the vector comes from an abstract tube).
    pub fn truncate(&self, r: usize) -> IEVector {
        assert!(r >= 1, "truncation depth must be at least 1");
        IEVector {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(s, _)| s.len() <= r)
                .map(|(s, c)| (s.clone(), c.clone()))
                .collect(),
        }
    }

    /// The full 2^n − 1 term formula with coefficients (−1)^{|I|+1}.
    pub fn standard(n: u32) -> IEVector {
        assert!(n <= 24, "standard vector is exponential in n");
        let mut v = IEVector::new(n);
        let full: IndexSet = (1..=n).collect();
        for s in full.nonempty_subsets() {
            let sign = if s.len() % 2 == 1 { BigInt::from(1) } else { BigInt::from(-1) };
            v.add_term(s, sign);
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut v = IEVector::new(3);
        v.add_term(IndexSet::singleton(1), BigInt::from(2));
        v.add_term(IndexSet::singleton(1), BigInt::from(-2));
        assert_eq!(v.support_size(), 0);
        assert_eq!(v.l1_norm(), BigInt::zero());
    }

    #[test]
    fn l1_norm_sums_absolute_values() {
        let mut v = IEVector::new(3);
        v.add_term(IndexSet::singleton(1), BigInt::from(-4));
        v.add_term(IndexSet::from_labels([1, 2]), BigInt::from(3));
        assert_eq!(v.l1_norm(), BigInt::from(7));
        assert_eq!(v.max_abs_coeff(), BigInt::from(4));
    }

    #[test]
    fn truncate_keeps_small_terms() {
        let v = IEVector::standard(3);
        assert_eq!(v.support_size(), 7);
        let t = v.truncate(1);
        assert_eq!(t.support_size(), 3);
        assert!(t.iter().all(|(s, c)| s.len() == 1 && *c == BigInt::from(1)));
        // wide enough truncation is the identity
        assert_eq!(v.truncate(3), v);
        assert_eq!(v.truncate(17), v);
    }
}
