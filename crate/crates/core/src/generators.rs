use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::index_set::IndexSet;
use crate::projective::ProjectiveLattice;
use crate::set_system::SetSystem;
use crate::standardize::{compute_nerve_with_budget, DEFAULT_NERVE_BUDGET};
use crate::venn::VennDiagram;

/// Default cap on projective lattice size (element count).
pub const DEFAULT_LATTICE_BUDGET: u64 = 1_000_000;

/// The family with a unique IE-vector: ground points are the proper subsets
/// T ⊊ [n], and point T lies in F_i iff i ∉ T. Its Venn diagram is all
/// 2^n − 1 nonempty subsets and the only valid formula is the standard one.
pub fn gen_uniqueness(n: u32) -> Result<SetSystem> {
    if !(1..=20).contains(&n) {
        return Err(Error::InvalidInput(format!(
            "uniqueness family needs 1 ≤ n ≤ 20 (2^n − 1 ground points), got {}",
            n
        )));
    }
    let full = (1u32 << n) - 1;
    let points = (0..full)
        .map(|t| IndexSet::from_labels((1..=n).filter(|&i| t >> (i - 1) & 1 == 0)))
        .collect();
    SetSystem::new(n, points)
}

/// The family whose unique Venn-supported formula has exponentially large
/// coefficients: S = [y·ℓ], F_i = {i} ∪ {g(i)+1, …, y·ℓ} with
/// g(i) = y⌈i/y⌉. Block k of the Möbius coefficients equals (−(y−1))^(k−1).
pub fn gen_exponential(ell: u32, y: u32) -> Result<SetSystem> {
    if ell < 1 {
        return Err(Error::InvalidInput("need ell ≥ 1".into()));
    }
    if y < 2 {
        return Err(Error::InvalidInput("need y ≥ 2".into()));
    }
    let n = y * ell;
    // point j lies in F_i iff i = j or j > g(i); the qualifying i form the
    // full blocks strictly below j
    let points = (1..=n)
        .map(|j| {
            let below = y * ((j - 1) / y);
            IndexSet::from_labels((1..=below).chain(std::iter::once(j)))
        })
        .collect();
    SetSystem::new(n, points)
}

/// The q-integer [k]_q = 1 + q + ⋯ + q^(k−1).
fn q_int(k: u32, q: u64) -> BigInt {
    let mut acc = BigInt::zero();
    let mut pw = BigInt::one();
    let q = BigInt::from(q);
    for _ in 0..k {
        acc += &pw;
        pw *= &q;
    }
    acc
}

/// The Gaussian binomial coefficient: the number of k-dimensional linear
/// subspaces of F_q^n. Computed as the defining quotient of q-integer
/// products; the division is exact and a nonzero remainder panics, since it
/// would indicate an arithmetic bug.
pub fn gauss_binomial(n: u32, k: u32, q: u64) -> BigInt {
    assert!(k <= n, "gauss_binomial needs 0 ≤ k ≤ n");
    assert!(q >= 2, "gauss_binomial needs q ≥ 2");
    let mut numerator = BigInt::one();
    for j in n - k + 1..=n {
        numerator *= q_int(j, q);
    }
    let mut denominator = BigInt::one();
    for j in 1..=k {
        denominator *= q_int(j, q);
    }
    use num_integer::Integer;
    let (quot, rem) = numerator.div_rem(&denominator);
    assert!(rem.is_zero(), "q-binomial division must be exact");
    quot
}

/// Checks the Cauchy binomial theorem at one evaluation point, in exact
/// rational arithmetic:
/// Σ_{i=0}^{k} q^{i(i−1)/2} · C(k,i)_q · t^i  =  Π_{i=0}^{k−1} (1 + t·q^i).
pub fn cauchy_identity_check(k: u32, q: u64, t: &BigRational) -> bool {
    let mut lhs = BigRational::zero();
    let mut t_power = BigRational::one();
    for i in 0..=k {
        let q_exp = BigInt::from(q).pow(i * i.saturating_sub(1) / 2);
        lhs += BigRational::from(q_exp * gauss_binomial(k, i, q)) * &t_power;
        t_power *= t;
    }
    let mut rhs = BigRational::one();
    for i in 0..k {
        rhs *= BigRational::one() + t * BigRational::from(BigInt::from(q).pow(i));
    }
    lhs == rhs
}

/// The lower-bound family from the subspace lattice of PG(d, q): atoms are
/// the projective points, the ground set is the nonzero lattice elements,
/// and the membership of the point for element x is At_x (the atoms below
/// x). Only prime q is supported.
pub fn gen_projective(d: u32, q: u64) -> Result<(SetSystem, ProjectiveLattice)> {
    gen_projective_with_budget(d, q, DEFAULT_LATTICE_BUDGET)
}

pub fn gen_projective_with_budget(
    d: u32,
    q: u64,
    budget: u64,
) -> Result<(SetSystem, ProjectiveLattice)> {
    let lattice = ProjectiveLattice::build(d, q, budget)?;
    let points: Vec<IndexSet> =
        lattice.nonzero_elements().map(|x| lattice.atoms_below(x)).collect();
    let fs = SetSystem::new(lattice.atom_count(), points)?;
    Ok((fs, lattice))
}

/// Closed-form ℓ1-norm of the Venn-supported formula for PG(d, q):
/// Σ_{k=0}^{d} q^{k(k+1)/2} · C(d+1, k+1)_q.
pub fn projective_expected_l1(d: u32, q: u64) -> BigInt {
    (0..=d)
        .map(|k| BigInt::from(q).pow(k * (k + 1) / 2) * gauss_binomial(d + 1, k + 1, q))
        .sum()
}

/// A random standardized system for property tests: exactly `m_target`
/// distinct nonempty subsets of [n] as regions, one ground point each.
/// Deterministic for a fixed seed. The induced sets F_i may coincide for a
/// degenerate draw (e.g. a single region); that is fine for test fodder,
/// which operates on the Venn diagram.
pub fn gen_random(n: u32, m_target: u64, seed: u64) -> Result<SetSystem> {
    if n < 1 {
        return Err(Error::InvalidInput("need n ≥ 1".into()));
    }
    if m_target < 1 {
        return Err(Error::InvalidInput("need m ≥ 1".into()));
    }
    if n < 63 && m_target > (1u64 << n) - 1 {
        return Err(Error::InvalidInput(format!(
            "cannot pick {} distinct nonempty subsets of [{}]",
            m_target, n
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let regions: Vec<IndexSet> = if n <= 20 && 2 * m_target > (1u64 << n) - 1 {
        // dense request: shuffle the whole power set rather than rejection-sample
        let mut all: Vec<u64> = (1..(1u64 << n)).collect();
        all.shuffle(&mut rng);
        all.truncate(m_target as usize);
        all.into_iter().map(|mask| mask_to_set(mask, n)).collect()
    } else {
        let mut seen: HashSet<IndexSet> = HashSet::new();
        let mut out: Vec<IndexSet> = Vec::with_capacity(m_target as usize);
        while out.len() < m_target as usize {
            let s = random_subset(n, &mut rng);
            if !s.is_empty() && seen.insert(s.clone()) {
                out.push(s);
            }
        }
        out
    };
    SetSystem::from_parts(n, regions)
}

fn mask_to_set(mask: u64, n: u32) -> IndexSet {
    IndexSet::from_labels((1..=n).filter(|&i| mask >> (i - 1) & 1 == 1))
}

fn random_subset(n: u32, rng: &mut ChaCha8Rng) -> IndexSet {
    let mut s = IndexSet::empty();
    let mut i = 1;
    while i <= n {
        let word: u64 = rng.gen();
        let width = 64.min(n - i + 1);
        for b in 0..width {
            if word >> b & 1 == 1 {
                s.insert(i + b);
            }
        }
        i += width;
    }
    s
}

/// The structural certificate behind ℓ1-minimality for lattice systems:
/// every nerve column of the incidence matrix duplicates some Venn column.
/// Concretely, for every σ in the nerve there must be a region ν with
/// {τ ∈ V : σ ⊆ τ} = {τ ∈ V : ν ⊆ τ}. When this holds, the Venn-supported
/// Möbius vector has minimal ℓ1-norm among all IE-vectors.
///
/// Enumerates the nerve, so it is guarded to n ≤ 20 and the nerve budget.
pub fn check_lattice_column_property(venn: &VennDiagram) -> Result<bool> {
    if venn.n() > 20 {
        return Err(Error::NerveTooLarge { budget: DEFAULT_NERVE_BUDGET });
    }
    let nerve = compute_nerve_with_budget(venn, DEFAULT_NERVE_BUDGET)?;
    let venn_signatures: HashSet<Vec<usize>> =
        venn.regions().iter().map(|nu| venn.upset_of(nu)).collect();
    let all_matched = nerve
        .faces()
        .all(|sigma| venn_signatures.contains(&venn.upset_of(sigma)));
    Ok(all_matched)
}
