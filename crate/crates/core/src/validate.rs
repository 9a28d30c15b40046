use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::ie_vector::IEVector;
use crate::index_set::IndexSet;
use crate::measure::{evaluate_formula, evaluate_union, intersection_measure, Measure};
use crate::tube::Selector;
use crate::venn::VennDiagram;

/// Weights of randomly drawn check measures stay within [0, 10^6]; large
/// enough to catch sign and counting bugs, small enough for fast big-int
/// products.
pub const MAX_RANDOM_WEIGHT: u64 = 1_000_000;

/// A single certification failure, with enough context to reproduce it.
/// Numeric values are carried as decimal strings so reports serialize
/// losslessly even for huge coefficients.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// Σ of coefficients under region τ differs from 1.
    RegionSum { region: IndexSet, sum: String },
    /// A face whose facet is missing: the complex is not hereditary.
    NotHereditary { face: IndexSet, missing: IndexSet },
    /// Some Venn region induces an empty subcomplex.
    EmptyInduced { region: IndexSet },
    /// χ(K[τ]) ≠ 1.
    EulerCharacteristic { region: IndexSet, chi: String },
    /// K[τ] is not a cone with the selected apex.
    ConeFailure { region: IndexSet, apex: u32, face: IndexSet },
    /// Formula and union disagree under a concrete measure.
    MeasureMismatch { measure: String, formula: String, union: String },
    /// A truncated tube formula broke its Bonferroni side.
    BonferroniViolation { depth: usize, measure: String, truncated: String, union: String },
}

/// Outcome of one check: empty `violations` means PASS. Warnings flag
/// suspicious but harmless findings.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub violations: Vec<Violation>,
    pub warnings: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// The exact linear-system check: x is an IE-vector iff the coefficients
/// under every Venn region sum to exactly 1. Lists every violating region.
/// Support keys contained in no region sit on an empty intersection; they
/// never influence any sum and are reported as warnings.
pub fn check_ie_vector(venn: &VennDiagram, x: &IEVector) -> Report {
    assert_eq!(x.n(), venn.n(), "IE-vector and Venn diagram disagree on n");
    let mut report = Report::default();
    for tau in venn.regions() {
        let sum: BigInt = x
            .iter()
            .filter(|(sigma, _)| sigma.is_subset_of(tau))
            .map(|(_, c)| c.clone())
            .sum();
        if !sum.is_one() {
            report
                .violations
                .push(Violation::RegionSum { region: tau.clone(), sum: sum.to_string() });
        }
    }
    for (sigma, _) in x.iter() {
        if !venn.regions().iter().any(|tau| sigma.is_subset_of(tau)) {
            report.warnings.push(format!(
                "term {} lies in no region: coefficient on an empty intersection",
                sigma
            ));
        }
    }
    report
}

fn random_measure(m: usize, rng: &mut ChaCha8Rng) -> Measure {
    Measure::new((0..m).map(|_| rng.gen_range(0..=MAX_RANDOM_WEIGHT)).collect())
}

/// Spot-checks the defining identity "formula = union for every finite
/// measure" on concrete measures: the all-ones measure, every single-region
/// indicator, and `trials` random nonnegative measures.
pub fn measure_oracle_check(venn: &VennDiagram, x: &IEVector, trials: u32, seed: u64) -> Report {
    assert!(trials >= 1);
    let m = venn.m();
    let mut cases: Vec<(String, Measure)> = Vec::with_capacity(m + trials as usize + 1);
    cases.push(("all-ones".into(), Measure::ones(m)));
    for j in 0..m {
        cases.push((format!("indicator of region {}", venn.region(j)), Measure::indicator(m, j)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for t in 0..trials {
        cases.push((format!("random trial {t}"), random_measure(m, &mut rng)));
    }

    let mut report = Report::default();
    for (desc, mu) in cases {
        let lhs = evaluate_union(venn, &mu).expect("measure covers all regions");
        let rhs = evaluate_formula(venn, x, &mu).expect("measure covers all regions");
        if lhs != rhs {
            report.violations.push(Violation::MeasureMismatch {
                measure: desc,
                formula: rhs.to_string(),
                union: lhs.to_string(),
            });
        }
    }
    report
}

/// Structural audit of an abstract-tube candidate. Contractibility itself is
/// out of reach, so the check uses the two decidable surrogates the theory
/// leans on: χ(K[τ]) = 1 for every region (necessary), and — when a selector
/// is supplied — the cone-with-apex certificate (sufficient). Non-hereditary
/// input fails structurally before any per-region check.
pub fn check_abstract_tube(
    venn: &VennDiagram,
    k: &SimplicialComplex,
    sel: Option<&Selector>,
) -> Report {
    let mut report = Report::default();
    if let Some((face, missing)) = k.heredity_violation() {
        report.violations.push(Violation::NotHereditary { face, missing });
        return report;
    }
    for tau in venn.regions() {
        let induced: Vec<&IndexSet> = k.induced_faces(tau).collect();
        if induced.is_empty() {
            report.violations.push(Violation::EmptyInduced { region: tau.clone() });
            continue;
        }
        let mut chi = BigInt::from(0);
        for f in &induced {
            if f.len() % 2 == 1 {
                chi += 1;
            } else {
                chi -= 1;
            }
        }
        if !chi.is_one() {
            report.violations.push(Violation::EulerCharacteristic {
                region: tau.clone(),
                chi: chi.to_string(),
            });
        }
        if let Some(sel) = sel {
            let apex = sel.select(tau);
            // cone test: adjoining the apex to ∅ and to every induced face
            // stays inside K[τ]
            let apex_face = IndexSet::singleton(apex);
            let mut offenders: Vec<IndexSet> = Vec::new();
            if !k.contains(&apex_face) {
                offenders.push(IndexSet::empty());
            }
            for f in &induced {
                let widened = f.with(apex);
                if !k.contains(&widened) {
                    offenders.push((*f).clone());
                }
            }
            for face in offenders {
                report.violations.push(Violation::ConeFailure {
                    region: tau.clone(),
                    apex,
                    face,
                });
            }
        }
    }
    report
}

/// Empirical Bonferroni audit of a tube formula: for every truncation depth
/// r and each sampled nonnegative measure, the truncated formula must
/// over-estimate the union for odd r and under-estimate it for even r.
/// Reports the first violation per (depth, measure) with a full witness.
pub fn bonferroni_check(venn: &VennDiagram, ie: &IEVector, trials: u32, seed: u64) -> Report {
    assert!(trials >= 1);
    let m = venn.m();
    let depth = ie.max_term_size();
    let mut report = Report::default();
    if depth == 0 {
        return report;
    }

    // per-term intersection masses are measure-independent in structure;
    // group the terms by cardinality once
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for t in 0..trials {
        let mu = random_measure(m, &mut rng);
        let union = evaluate_union(venn, &mu).expect("measure covers all regions");
        // partial[r] = value of the depth-r truncation
        let mut by_size: Vec<BigInt> = vec![BigInt::from(0); depth + 1];
        for (sigma, coeff) in ie.iter() {
            let mass = intersection_measure(venn, sigma, &mu).expect("measure covers all regions");
            by_size[sigma.len()] += coeff * mass;
        }
        let mut running = BigInt::from(0);
        for (r, level_sum) in by_size.iter().enumerate().skip(1) {
            running += level_sum;
            let ok = if r % 2 == 1 { running >= union } else { running <= union };
            if !ok {
                report.violations.push(Violation::BonferroniViolation {
                    depth: r,
                    measure: format!("random trial {t}"),
                    truncated: running.to_string(),
                    union: union.to_string(),
                });
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::mobius::mobius_ie_vector;
    use crate::standardize::compute_venn;
    use crate::tube::{build_tube, truncate};

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
    fn three_sets_vectors_pass_the_exact_check() {
        let venn = three_sets_venn();
        assert!(check_ie_vector(&venn, &mobius_ie_vector(&venn)).passed());
        assert!(check_ie_vector(&venn, &IEVector::standard(3)).passed());
    }

    #[test]
    fn deleting_a_term_is_caught_with_both_witnesses() {
        let venn = three_sets_venn();
        let mut x = mobius_ie_vector(&venn);
        // delete the {2,3} term
        x.add_term(IndexSet::from_labels([2, 3]), BigInt::from(1));
        let report = check_ie_vector(&venn, &x);
        assert!(!report.passed());
        let mut hits: Vec<(String, String)> = report
            .violations
            .iter()
            .map(|v| match v {
                Violation::RegionSum { region, sum } => (region.to_string(), sum.clone()),
                other => panic!("unexpected violation {other:?}"),
            })
            .collect();
        hits.sort();
        // after the deletion, the sums under {2,3} and {1,2,3} are both
        // 1 + 1 = 2 resp. 3 − 1 = 2
        assert_eq!(
            hits,
            vec![
                ("{1,2,3}".to_string(), "2".to_string()),
                ("{2,3}".to_string(), "2".to_string())
            ]
        );
    }

    #[test]
    fn perturbing_any_coefficient_flips_some_region() {
        let venn = compute_venn(&generators::gen_random(6, 20, 3).unwrap()).unwrap();
        let x = mobius_ie_vector(&venn);
        for (sigma, _) in x.iter() {
            for delta in [1i64, -1] {
                let mut y = x.clone();
                y.add_term(sigma.clone(), BigInt::from(delta));
                assert!(!check_ie_vector(&venn, &y).passed());
            }
        }
    }

    #[test]
    fn off_nerve_terms_only_warn() {
        let venn = VennDiagram::new(
            3,
            vec![IndexSet::singleton(1), IndexSet::singleton(2), IndexSet::singleton(3)],
        )
        .unwrap();
        let mut x = mobius_ie_vector(&venn);
        x.add_term(IndexSet::from_labels([1, 2]), BigInt::from(5));
        let report = check_ie_vector(&venn, &x);
        assert!(report.passed());
        assert_eq!(report.warnings.len(), 1);
    }

    #[test]
    fn measure_oracle_agrees_with_exact_check() {
        let venn = three_sets_venn();
        let x = mobius_ie_vector(&venn);
        let report = measure_oracle_check(&venn, &x, 10, 99);
        assert!(report.passed());

        // a broken vector is caught by some deterministic indicator measure
        let mut y = x.clone();
        y.add_term(IndexSet::from_labels([2, 3]), BigInt::from(1));
        assert!(!measure_oracle_check(&venn, &y, 1, 99).passed());
    }

    #[test]
    fn indicator_measures_put_unit_mass_on_both_sides() {
        let venn = three_sets_venn();
        let x = mobius_ie_vector(&venn);
        for j in 0..venn.m() {
            let mu = Measure::indicator(venn.m(), j);
            assert_eq!(evaluate_union(&venn, &mu).unwrap(), BigInt::from(1));
            assert_eq!(evaluate_formula(&venn, &x, &mu).unwrap(), BigInt::from(1));
        }
    }

    #[test]
    fn zero_measure_agrees_trivially() {
        let venn = three_sets_venn();
        let x = mobius_ie_vector(&venn);
        let mu = Measure::uniform(venn.m(), 0);
        assert_eq!(evaluate_union(&venn, &mu).unwrap(), BigInt::from(0));
        assert_eq!(evaluate_formula(&venn, &x, &mu).unwrap(), BigInt::from(0));
    }

    #[test]
    fn full_simplex_is_an_abstract_tube_for_three_sets_system() {
        let venn = three_sets_venn();
        let full =
            SimplicialComplex::closure_of(3, &IndexSet::from_labels([1, 2, 3])).unwrap();
        let sel = Selector::identity(3);
        assert!(check_abstract_tube(&venn, &full, Some(&sel)).passed());
    }

    #[test]
    fn two_points_without_an_edge_fail_euler() {
        let venn = VennDiagram::new(
            2,
            vec![IndexSet::singleton(1), IndexSet::singleton(2), IndexSet::from_labels([1, 2])],
        )
        .unwrap();
        let k = SimplicialComplex::from_faces_unchecked(
            2,
            [IndexSet::singleton(1), IndexSet::singleton(2)].into_iter().collect(),
        )
        .unwrap();
        let report = check_abstract_tube(&venn, &k, None);
        assert!(!report.passed());
        assert!(report.violations.iter().any(|v| matches!(
            v,
            Violation::EulerCharacteristic { chi, .. } if chi == "2"
        )));
    }

    #[test]
    fn non_hereditary_input_fails_structurally() {
        let venn = three_sets_venn();
        let k = SimplicialComplex::from_faces_unchecked(
            3,
            [IndexSet::from_labels([1, 2])].into_iter().collect(),
        )
        .unwrap();
        let report = check_abstract_tube(&venn, &k, None);
        assert_eq!(report.violations.len(), 1);
        assert!(matches!(report.violations[0], Violation::NotHereditary { .. }));
    }

    #[test]
    fn tube_outputs_pass_the_audit() {
        for seed in 0..5u64 {
            let fs = generators::gen_random(7, 25, 40 + seed).unwrap();
            let venn = compute_venn(&fs).unwrap();
            let tube = build_tube(&venn, seed, 64).unwrap();
            let sel =
                crate::tube::selector_from_permutation(&venn, &tube.permutation).unwrap();
            assert!(check_abstract_tube(&venn, &tube.complex, Some(&sel)).passed());
            assert!(check_ie_vector(&venn, &tube.ie).passed());
        }
    }

    #[test]
    fn bonferroni_on_the_standard_vector() {
        // full Venn diagram on 3 sets, unit weights: depth 1 gives 12 ≥ 7
        let venn = compute_venn(&generators::gen_uniqueness(3).unwrap()).unwrap();
        let x = IEVector::standard(3);
        let mu = Measure::ones(7);
        let union = evaluate_union(&venn, &mu).unwrap();
        assert_eq!(union, BigInt::from(7));
        let depth1 = evaluate_formula(&venn, &truncate(&x, 1), &mu).unwrap();
        assert_eq!(depth1, BigInt::from(12));
        assert!(depth1 >= union);
        // depth 2 underestimates
        let depth2 = evaluate_formula(&venn, &truncate(&x, 2), &mu).unwrap();
        assert!(depth2 <= union);
        // full depth is exact
        let depth3 = evaluate_formula(&venn, &truncate(&x, 3), &mu).unwrap();
        assert_eq!(depth3, union);

        assert!(bonferroni_check(&venn, &x, 25, 5).passed());
    }

    #[test]
    fn bonferroni_over_random_tubes() {
        let fs = generators::gen_random(8, 40, 77).unwrap();
        let venn = compute_venn(&fs).unwrap();
        let tube = build_tube(&venn, 1, 64).unwrap();
        assert!(bonferroni_check(&venn, &tube.ie, 100, 123).passed());
    }
}
