use std::collections::BTreeSet;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::ie_vector::IEVector;
use crate::index_set::IndexSet;
use crate::venn::VennDiagram;

/// A selector induced by a permutation ρ of the labels: each Venn region τ
/// is assigned its smallest element in the ordering ρ(1) ≺ ρ(2) ≺ ⋯.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Selector {
    /// `rank[i-1]` = position of label `i` in ρ; lower rank means earlier.
    rank: Vec<u32>,
}

impl Selector {
    /// Natural order: 1 ≺ 2 ≺ ⋯ ≺ n.
    pub fn identity(n: u32) -> Selector {
        Selector { rank: (0..n).collect() }
    }

    pub fn n(&self) -> u32 {
        self.rank.len() as u32
    }

    /// The ρ-smallest member of `tau`.
    pub fn select(&self, tau: &IndexSet) -> u32 {
        tau.iter()
            .min_by_key(|&i| self.rank[(i - 1) as usize])
            .expect("selector applied to an empty set")
    }

    /// Recovers ρ as the label sequence ρ(1), ρ(2), ….
    pub fn permutation(&self) -> Vec<u32> {
        let mut perm = vec![0u32; self.rank.len()];
        for (i, &r) in self.rank.iter().enumerate() {
            perm[r as usize] = i as u32 + 1;
        }
        perm
    }
}

/// Builds the selector w_ρ from an explicit permutation of `1..=n`.
pub fn selector_from_permutation(venn: &VennDiagram, rho: &[u32]) -> Result<Selector> {
    let n = venn.n();
    if rho.len() != n as usize {
        return Err(Error::InvalidInput(format!(
            "permutation has {} entries, expected n = {}",
            rho.len(),
            n
        )));
    }
    let mut rank = vec![u32::MAX; n as usize];
    for (pos, &label) in rho.iter().enumerate() {
        if label < 1 || label > n {
            return Err(Error::InvalidInput(format!("label {} out of range 1..={}", label, n)));
        }
        if rank[(label - 1) as usize] != u32::MAX {
            return Err(Error::InvalidInput(format!("label {} repeats in permutation", label)));
        }
        rank[(label - 1) as usize] = pos as u32;
    }
    Ok(Selector { rank })
}

/// The face-size cap of the randomized construction:
/// D = ⌈2e·ln m⌉ · ⌈2 + ln(n / ln m)⌉, capped at n (no simplex has more
/// than n vertices). Natural logarithms, ceilings exactly as written.
pub fn d_bound(n: u32, m: usize) -> u32 {
    assert!(n >= 1, "need at least one set");
    assert!(m >= 2, "m = 1 is special-cased by build_tube");
    let n_f = n as f64;
    let ln_m = (m as f64).ln();
    let first = (2.0 * std::f64::consts::E * ln_m).ceil();
    let second = (2.0 + (n_f / ln_m).ln()).ceil();
    let raw = first * second;
    if raw >= n_f {
        n
    } else {
        raw as u32
    }
}

/// The membership predicate of K_ρ for a single candidate set: θ is
/// "witnessed" iff some region τ has w_ρ(τ) ∈ θ ⊆ τ. Brute-force scan over
/// the m regions.
pub fn face_condition(venn: &VennDiagram, sel: &Selector, theta: &IndexSet) -> bool {
    assert!(!theta.is_empty(), "the face condition is defined for nonempty sets");
    venn.regions()
        .iter()
        .any(|tau| theta.is_subset_of(tau) && theta.contains(sel.select(tau)))
}

/// Same scan with the per-region selections computed once up front;
/// `selected[j]` must equal `sel.select(regions[j])`.
fn face_condition_cached(venn: &VennDiagram, selected: &[u32], theta: &IndexSet) -> bool {
    venn.regions()
        .iter()
        .zip(selected)
        .any(|(tau, &w)| theta.contains(w) && theta.is_subset_of(tau))
}

/// Outcome of one complex construction attempt.
#[derive(Clone, Debug)]
pub enum BuildOutcome {
    Complete(SimplicialComplex),
    /// Some face of size `max_size + 1` belongs to K_ρ; the permutation is
    /// rejected. A normal outcome, not a failure.
    SizeExceeded,
}

/// Computes K_ρ = {σ : every nonempty ϑ ⊆ σ is witnessed} by breadth-first
/// search over cardinality levels.
///
/// A candidate σ ∪ {i} is accepted iff it satisfies the face condition and
/// every cardinality-|σ| facet is already accepted; by induction on face
/// size this yields exactly the defined complex. Aborts with `SizeExceeded`
/// as soon as a face larger than `max_size` would be accepted.
pub fn build_complex(venn: &VennDiagram, sel: &Selector, max_size: usize) -> BuildOutcome {
    assert!(max_size >= 1);
    let n = venn.n();
    let selected: Vec<u32> = venn.regions().iter().map(|tau| sel.select(tau)).collect();
    let mut accepted: BTreeSet<IndexSet> = BTreeSet::new();
    let mut level: Vec<IndexSet> = Vec::new();

    for i in 1..=n {
        let theta = IndexSet::singleton(i);
        if face_condition_cached(venn, &selected, &theta) {
            accepted.insert(theta.clone());
            level.push(theta);
        }
    }

    let mut size = 1usize;
    while !level.is_empty() {
        size += 1;
        let mut next: Vec<IndexSet> = Vec::new();
        let mut tested: BTreeSet<IndexSet> = BTreeSet::new();
        for sigma in &level {
            for i in 1..=n {
                if sigma.contains(i) {
                    continue;
                }
                let candidate = sigma.with(i);
                if !tested.insert(candidate.clone()) {
                    continue;
                }
                let all_facets_in = candidate
                    .iter()
                    .all(|v| accepted.contains(&candidate.without(v)));
                if all_facets_in && face_condition_cached(venn, &selected, &candidate) {
                    if size > max_size {
                        return BuildOutcome::SizeExceeded;
                    }
                    next.push(candidate);
                }
            }
        }
        for f in &next {
            accepted.insert(f.clone());
        }
        level = next;
    }

    BuildOutcome::Complete(
        SimplicialComplex::from_faces_unchecked(n, accepted)
            .expect("BFS produces in-range nonempty faces"),
    )
}

/// Result of a successful tube construction.
#[derive(Clone, Debug)]
pub struct TubeResult {
    /// The selector complex K_ρ.
    pub complex: SimplicialComplex,
    /// The ±1 formula: coefficient (−1)^{|I|+1} on every face I of the complex.
    pub ie: IEVector,
    /// The accepted permutation, as the label sequence ρ(1), ρ(2), ….
    pub permutation: Vec<u32>,
    /// Number of rejected permutations before acceptance.
    pub restarts: u32,
    /// The face-size cap used.
    pub d_bound: u32,
}

fn alternating_vector(n: u32, complex: &SimplicialComplex) -> IEVector {
    let mut ie = IEVector::new(n);
    for face in complex.faces() {
        let sign = if face.len() % 2 == 1 { BigInt::from(1) } else { BigInt::from(-1) };
        ie.add_term(face.clone(), sign);
    }
    ie
}

/// Las-Vegas construction of an abstract-tube formula with ±1 coefficients.
///
/// Draws permutations from a ChaCha stream seeded with `seed` (Fisher–Yates
/// shuffles), builds K_ρ capped at D = `d_bound(n, m)`, and redraws whenever
/// the cap is exceeded. With the cap, each trial fails with probability at
/// most 1/2, so the default 64 restarts make exhaustion astronomically
/// unlikely; exhaustion is reported as an error carrying the restart count.
///
/// The Venn diagram with a single region τ₁ short-circuits: the formula is
/// the single term +1·τ₁ and the bookkeeping complex is the closure of τ₁.
pub fn build_tube(venn: &VennDiagram, seed: u64, max_restarts: u32) -> Result<TubeResult> {
    assert!(max_restarts >= 1);
    let n = venn.n();

    if venn.m() == 1 {
        let tau = venn.region(0).clone();
        let complex = SimplicialComplex::closure_of(n, &tau)?;
        let mut ie = IEVector::new(n);
        ie.add_term(tau, BigInt::from(1));
        return Ok(TubeResult {
            complex,
            ie,
            permutation: (1..=n).collect(),
            restarts: 0,
            d_bound: n,
        });
    }

    let d = d_bound(n, venn.m());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<u32> = (1..=n).collect();
    for attempt in 0..max_restarts {
        perm.shuffle(&mut rng);
        let sel = selector_from_permutation(venn, &perm)?;
        match build_complex(venn, &sel, d as usize) {
            BuildOutcome::Complete(complex) => {
                let ie = alternating_vector(n, &complex);
                return Ok(TubeResult {
                    complex,
                    ie,
                    permutation: perm,
                    restarts: attempt,
                    d_bound: d,
                });
            }
            BuildOutcome::SizeExceeded => continue,
        }
    }
    Err(Error::RestartsExhausted { restarts: max_restarts })
}

/// Bonferroni-style truncation: keep the terms of size at most `r`.
/// Meaningful when `ie` came from an abstract tube.
pub fn truncate(ie: &IEVector, r: usize) -> IEVector {
    ie.truncate(r)
}
