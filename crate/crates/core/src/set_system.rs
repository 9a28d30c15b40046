use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::index_set::IndexSet;

/// A family of `n` labeled sets over a finite ground set, given point by
/// point: `points[p]` is the membership set `{i : p ∈ F_i}`.
///
/// Points with empty membership are allowed on input; standardization drops
/// them since they lie outside the union.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetSystem {
    n: u32,
    points: Vec<IndexSet>,
}

impl SetSystem {
    /// Builds a set system and checks that the `n` sets are pairwise
    /// distinct (two labels with identical incidence across all points, or
    /// two labels appearing in no point at all, name the same set).
    pub fn new(n: u32, points: Vec<IndexSet>) -> Result<Self> {
        let sys = Self::from_parts(n, points)?;
        if let Some((a, b)) = sys.find_duplicate_sets() {
            return Err(Error::DuplicateSets { first: a, second: b });
        }
        Ok(sys)
    }

    /// Builds a set system checking only label ranges, not set distinctness.
    /// Used for generated property-test systems and decoded files, where
    /// coinciding sets are tolerated: everything downstream is driven by the
    /// Venn diagram, which is well defined either way.
    pub(crate) fn from_parts(n: u32, points: Vec<IndexSet>) -> Result<Self> {
        for (p, m) in points.iter().enumerate() {
            if m.max_label() > n {
                return Err(Error::InvalidInput(format!(
                    "point {} mentions label {} but n = {}",
                    p,
                    m.max_label(),
                    n
                )));
            }
        }
        Ok(SetSystem { n, points })
    }

    fn find_duplicate_sets(&self) -> Option<(u32, u32)> {
        // Key each label by its incidence vector over the points.
        let words = self.points.len().div_ceil(64);
        let mut seen: HashMap<Vec<u64>, u32> = HashMap::new();
        for i in 1..=self.n {
            let mut incidence = vec![0u64; words];
            for (p, m) in self.points.iter().enumerate() {
                if m.contains(i) {
                    incidence[p / 64] |= 1u64 << (p % 64);
                }
            }
            if let Some(&j) = seen.get(&incidence) {
                return Some((j, i));
            }
            seen.insert(incidence, i);
        }
        None
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn ground_size(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[IndexSet] {
        &self.points
    }

    /// The membership set of one ground point (possibly empty).
    pub fn region_of(&self, point: usize) -> Result<&IndexSet> {
        self.points
            .get(point)
            .ok_or_else(|| Error::InvalidInput(format!("unknown point id {}", point)))
    }
}
