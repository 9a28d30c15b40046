use std::collections::BTreeSet;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::index_set::IndexSet;
use crate::set_system::SetSystem;
use crate::venn::VennDiagram;

/// Default cap on nerve size; `|N|` can reach 2^n, so explicit enumeration
/// is guarded.
pub const DEFAULT_NERVE_BUDGET: usize = 1 << 22;

/// Contracts a raw set system to its Venn diagram: the distinct nonempty
/// membership sets of its points, sorted by (cardinality, lex). Points with
/// empty membership lie outside the union and are dropped.
pub fn compute_venn(fs: &SetSystem) -> Result<VennDiagram> {
    let mut regions: BTreeSet<IndexSet> = BTreeSet::new();
    for m in fs.points() {
        if !m.is_empty() {
            regions.insert(m.clone());
        }
    }
    if regions.is_empty() {
        return Err(Error::EmptyUnion);
    }
    VennDiagram::new(fs.n(), regions.into_iter().collect())
}

/// The nerve of a standardized system: every nonempty σ contained in some
/// Venn region. Computed as the downward closure of the regions — a σ ⊆ τ ∈ V
/// already witnesses a nonempty intersection, so the raw points are never
/// consulted. Exponential in general; refuses beyond `budget` faces.
pub fn compute_nerve_with_budget(venn: &VennDiagram, budget: usize) -> Result<SimplicialComplex> {
    let mut faces: BTreeSet<IndexSet> = BTreeSet::new();
    for tau in venn.regions() {
        // guard before materializing the 2^|τ| − 1 subsets of one region
        if tau.len() >= usize::BITS as usize - 1 || (1usize << tau.len()) - 1 > budget {
            return Err(Error::NerveTooLarge { budget });
        }
        if faces.contains(tau) {
            continue;
        }
        for sigma in tau.nonempty_subsets() {
            faces.insert(sigma);
            if faces.len() > budget {
                return Err(Error::NerveTooLarge { budget });
            }
        }
    }
    SimplicialComplex::from_faces_unchecked(venn.n(), faces)
}

pub fn compute_nerve(venn: &VennDiagram) -> Result<SimplicialComplex> {
    compute_nerve_with_budget(venn, DEFAULT_NERVE_BUDGET)
}

/// Membership set of one ground point (possibly empty).
pub fn region_of(fs: &SetSystem, point: usize) -> Result<IndexSet> {
    fs.region_of(point).cloned()
}
