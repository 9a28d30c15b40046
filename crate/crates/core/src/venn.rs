use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::index_set::IndexSet;

/// The Venn diagram of a set system: the distinct nonempty membership sets
/// τ ⊆ [n] whose region is nonempty, kept sorted by (cardinality, lex).
///
/// This is the standardized form every solver works on; `m = regions.len()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VennDiagram {
    n: u32,
    regions: Vec<IndexSet>,
}

impl VennDiagram {
    /// Builds a Venn diagram from region index sets in any order.
    /// Regions must be nonempty and distinct, with labels in `1..=n`, and
    /// there must be at least one of them.
    pub fn new(n: u32, regions: Vec<IndexSet>) -> Result<Self> {
        if regions.is_empty() {
            return Err(Error::EmptyUnion);
        }
        let mut sorted: BTreeSet<IndexSet> = BTreeSet::new();
        for r in regions {
            if r.is_empty() {
                return Err(Error::InvalidInput("empty region in Venn diagram".into()));
            }
            if r.max_label() > n {
                return Err(Error::InvalidInput(format!(
                    "region {} mentions a label above n = {}",
                    r, n
                )));
            }
            if !sorted.insert(r) {
                return Err(Error::InvalidInput("duplicate region in Venn diagram".into()));
            }
        }
        Ok(VennDiagram { n, regions: sorted.into_iter().collect() })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of regions.
    pub fn m(&self) -> usize {
        self.regions.len()
    }

    pub fn regions(&self) -> &[IndexSet] {
        &self.regions
    }

    pub fn region(&self, index: usize) -> &IndexSet {
        &self.regions[index]
    }

    pub fn contains_region(&self, r: &IndexSet) -> bool {
        self.regions.binary_search(r).is_ok()
    }

    /// Indices of the regions containing `s`, i.e. the row pattern of the
    /// incidence column of `s`.
    pub fn upset_of(&self, s: &IndexSet) -> Vec<usize> {
        self.regions
            .iter()
            .enumerate()
            .filter(|(_, tau)| s.is_subset_of(tau))
            .map(|(j, _)| j)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regions_are_sorted_and_deduplicated_on_input_order() {
        let v = VennDiagram::new(
            3,
            vec![
                IndexSet::from_labels([1, 2, 3]),
                IndexSet::from_labels([2]),
                IndexSet::from_labels([1, 2]),
                IndexSet::from_labels([1]),
            ],
        )
        .unwrap();
        let got: Vec<Vec<u32>> = v.regions().iter().map(|r| r.to_labels()).collect();
        assert_eq!(got, vec![vec![1], vec![2], vec![1, 2], vec![1, 2, 3]]);
        assert_eq!(v.m(), 4);
    }

    #[test]
    fn rejects_empty_and_duplicate_regions() {
        assert!(VennDiagram::new(2, vec![]).is_err());
        assert!(VennDiagram::new(2, vec![IndexSet::empty()]).is_err());
        assert!(VennDiagram::new(
            2,
            vec![IndexSet::singleton(1), IndexSet::singleton(1)]
        )
        .is_err());
    }
}
