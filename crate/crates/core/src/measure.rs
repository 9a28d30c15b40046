use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ie_vector::IEVector;
use crate::index_set::IndexSet;
use crate::venn::VennDiagram;

/// A finite measure on a standardized system: one nonnegative integer weight
/// per Venn region, indexed like `VennDiagram::regions`.
///
/// Weights are integers, not floats, so validation equalities are exact;
/// callers with real weights scale to integers themselves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Measure {
    weights: Vec<u64>,
}

impl Measure {
    pub fn new(weights: Vec<u64>) -> Self {
        Measure { weights }
    }

    pub fn uniform(m: usize, w: u64) -> Self {
        Measure { weights: vec![w; m] }
    }

    pub fn ones(m: usize) -> Self {
        Self::uniform(m, 1)
    }

    /// Unit mass on region `j`, zero elsewhere (the μ_j of the A·x = 1
    /// characterization proof).
    pub fn indicator(m: usize, j: usize) -> Self {
        let mut weights = vec![0; m];
        weights[j] = 1;
        Measure { weights }
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn weight(&self, region: usize) -> Option<u64> {
        self.weights.get(region).copied()
    }

    fn check_covers(&self, venn: &VennDiagram) -> Result<()> {
        if self.weights.len() < venn.m() {
            let j = self.weights.len();
            return Err(Error::MissingWeight { index: j, region: venn.region(j).to_string() });
        }
        if self.weights.len() > venn.m() {
            return Err(Error::InvalidInput(format!(
                "measure has {} weights but the Venn diagram has {} regions",
                self.weights.len(),
                venn.m()
            )));
        }
        Ok(())
    }
}

/// Measure of the union: the regions partition ∪F_i, so this is the plain
/// sum of all region weights.
pub fn evaluate_union(venn: &VennDiagram, mu: &Measure) -> Result<BigInt> {
    mu.check_covers(venn)?;
    Ok(mu.weights().iter().map(|&w| BigInt::from(w)).sum())
}

/// Value of the formula `x` under `mu`: Σ_σ x_σ · μ(∩_{i∈σ} F_i), where each
/// intersection measure is the sum of the weights of the regions containing
/// σ. Exact integer arithmetic throughout.
pub fn evaluate_formula(venn: &VennDiagram, x: &IEVector, mu: &Measure) -> Result<BigInt> {
    assert_eq!(x.n(), venn.n(), "IE-vector and Venn diagram disagree on n");
    mu.check_covers(venn)?;
    let mut total = BigInt::zero();
    for (sigma, coeff) in x.iter() {
        let intersection_mass: u128 = venn
            .regions()
            .iter()
            .zip(mu.weights())
            .filter(|(tau, _)| sigma.is_subset_of(tau))
            .map(|(_, &w)| w as u128)
            .sum();
        total += coeff * BigInt::from(intersection_mass);
    }
    Ok(total)
}

/// Intersection measure of a single index set (a helper shared by the
/// truncation checks): Σ over regions ⊇ σ of their weights.
pub fn intersection_measure(venn: &VennDiagram, sigma: &IndexSet, mu: &Measure) -> Result<BigInt> {
    mu.check_covers(venn)?;
    let mass: u128 = venn
        .regions()
        .iter()
        .zip(mu.weights())
        .filter(|(tau, _)| sigma.is_subset_of(tau))
        .map(|(_, &w)| w as u128)
        .sum();
    Ok(BigInt::from(mass))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn three_sets_venn() -> VennDiagram {
        VennDiagram::new(
            3,
            [
                vec![1],
                vec![2],
                vec![3],
                vec![1, 2],
                vec![2, 3],
                vec![1, 2, 3],
            ]
            .into_iter()
            .map(IndexSet::from_labels)
            .collect(),
        )
        .unwrap()
    }

    #[test]
    fn union_is_the_sum_of_region_weights() {
        let venn = three_sets_venn();
        assert_eq!(evaluate_union(&venn, &Measure::ones(6)).unwrap(), BigInt::from(6));
        assert_eq!(evaluate_union(&venn, &Measure::uniform(6, 0)).unwrap(), BigInt::zero());
        // weights (2,3,5,7,11,13) sum to 41
        let mu = Measure::new(vec![2, 3, 5, 7, 11, 13]);
        assert_eq!(evaluate_union(&venn, &mu).unwrap(), BigInt::from(41));
    }

    #[test]
    fn missing_weight_names_the_region() {
        let venn = three_sets_venn();
        let err = evaluate_union(&venn, &Measure::new(vec![1, 1])).unwrap_err();
        match err {
            Error::MissingWeight { index, region } => {
                assert_eq!(index, 2);
                assert_eq!(region, "{3}");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn five_term_formula_evaluates_exactly() {
        // μ(F1)+μ(F2)+μ(F3)−μ(F1∩F2)−μ(F2∩F3) on unit weights = 6.
        let venn = three_sets_venn();
        let mut x = IEVector::new(3);
        for single in [1, 2, 3] {
            x.add_term(IndexSet::singleton(single), BigInt::from(1));
        }
        x.add_term(IndexSet::from_labels([1, 2]), BigInt::from(-1));
        x.add_term(IndexSet::from_labels([2, 3]), BigInt::from(-1));
        let mu = Measure::ones(6);
        assert_eq!(evaluate_formula(&venn, &x, &mu).unwrap(), BigInt::from(6));

        // empty support evaluates to zero
        let empty = IEVector::new(3);
        assert_eq!(evaluate_formula(&venn, &empty, &mu).unwrap(), BigInt::zero());
    }

    #[test]
    fn standard_vector_matches_brute_force_inclusion_exclusion() {
        // Oracle: evaluate the full alternating formula directly on the raw
        // points of the three-sets demo system, with no Venn machinery.
        let memberships: Vec<IndexSet> = [
            vec![1],
            vec![2],
            vec![3],
            vec![1, 2],
            vec![2, 3],
            vec![1, 2, 3],
        ]
        .into_iter()
        .map(IndexSet::from_labels)
        .collect();
        let mut brute = 0i64;
        for mask in 1u32..8 {
            let subset = IndexSet::from_labels((1..=3).filter(|&i| mask >> (i - 1) & 1 == 1));
            let intersection_count =
                memberships.iter().filter(|m| subset.is_subset_of(m)).count() as i64;
            let sign = if subset.len() % 2 == 1 { 1 } else { -1 };
            brute += sign * intersection_count;
        }
        assert_eq!(brute, 6);

        let venn = three_sets_venn();
        let x = IEVector::standard(3);
        assert_eq!(
            evaluate_formula(&venn, &x, &Measure::ones(6)).unwrap(),
            BigInt::from(brute)
        );
    }

    #[test]
    fn formula_is_linear_in_the_measure() {
        let venn = three_sets_venn();
        let x = IEVector::standard(3);
        let mu1 = Measure::new(vec![2, 3, 5, 7, 11, 13]);
        let mu2 = Measure::new(vec![4, 6, 10, 14, 22, 26]);
        let v1 = evaluate_formula(&venn, &x, &mu1).unwrap();
        let v2 = evaluate_formula(&venn, &x, &mu2).unwrap();
        assert_eq!(v2, v1 * 2);
    }
}
