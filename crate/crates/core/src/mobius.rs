use num_bigint::BigInt;
use num_traits::One;

use crate::ie_vector::IEVector;
use crate::venn::VennDiagram;

/// The unique IE-vector supported on the Venn diagram, by Möbius inversion
/// of the constant function 1 on V ordered by inclusion.
///
/// In region order (cardinality, then lex) the constraint matrix is
/// unitriangular, so the recursion
///
///   α(τ_j) = 1 − Σ { α(τ) : τ ∈ V, τ ⊊ τ_j }
///
/// solves the system exactly, with integer coefficients. Proper subsets are
/// found by scanning earlier regions with a bitset subset test rather than
/// materializing the m×m zeta matrix.
///
/// Zero coefficients are dropped from the returned sparse vector, so its
/// `support_size` counts nonzeros; the support in the uniqueness statement
/// ("supported on V") is the full set of m regions.
pub fn mobius_ie_vector(venn: &VennDiagram) -> IEVector {
    let regions = venn.regions();
    let mut alpha: Vec<BigInt> = Vec::with_capacity(regions.len());
    for (j, tau_j) in regions.iter().enumerate() {
        let mut a = BigInt::one();
        for (i, tau_i) in regions[..j].iter().enumerate() {
            // regions are sorted by cardinality, so every proper subset of
            // τ_j among the regions appears strictly earlier
            if tau_i.is_subset_of(tau_j) {
                a -= &alpha[i];
            }
        }
        debug_assert_eq!(alpha.len(), j);
        alpha.push(a);
    }
    let mut x = IEVector::new(venn.n());
    for (tau, a) in regions.iter().zip(alpha) {
        x.add_term(tau.clone(), a);
    }
    x
}

/// Sum of absolute coefficient values of a formula.
pub fn l1_norm(x: &IEVector) -> BigInt {
    x.l1_norm()
}
