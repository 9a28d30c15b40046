//! The full invariant grid for the projective lower-bound family,
//! d ≤ 3, q ∈ {2, 3, 5}: grade counts, per-dimension coefficients, the
//! closed-form ℓ1-norm, the column-duplication certificate (where the nerve
//! guard admits it), and atomisticity of the lattice.

use num_bigint::BigInt;
use num_traits::One;

use ievec::generators::{
    check_lattice_column_property, gauss_binomial, gen_exponential, gen_projective,
    projective_expected_l1,
};
use ievec::mobius::mobius_ie_vector;
use ievec::standardize::compute_venn;

#[test]
fn projective_invariants_d_up_to_3_q_in_2_3_5() {
    for d in 1..=3u32 {
        for q in [2u64, 3, 5] {
            let (fs, lattice) = gen_projective(d, q).unwrap();
            let venn = compute_venn(&fs).unwrap();

            // grade counts match the q-binomials
            for k in 0..=d as i32 {
                assert_eq!(
                    BigInt::from(lattice.elements_of_dim(k).len()),
                    gauss_binomial(d + 1, (k + 1) as u32, q),
                    "PG({d},{q}) grade {k}"
                );
            }

            // one region per nonzero lattice element
            let expected_m: BigInt = (0..=d).map(|k| gauss_binomial(d + 1, k + 1, q)).sum();
            assert_eq!(BigInt::from(venn.m()), expected_m);

            // coefficients (−1)^k q^(k(k+1)/2) per dimension, ℓ1 closed form
            let x = mobius_ie_vector(&venn);
            for k in 0..=d {
                let sign = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                let expected = sign * BigInt::from(q).pow(k * (k + 1) / 2);
                for subspace in lattice.elements_of_dim(k as i32) {
                    assert_eq!(x.coeff(&lattice.atoms_below(subspace)), expected);
                }
            }
            assert_eq!(x.l1_norm(), projective_expected_l1(d, q), "PG({d},{q}) ℓ1");

            // ℓ1-minimality certificate, where the nerve guard admits it
            if fs.n() <= 20 {
                assert!(check_lattice_column_property(&venn).unwrap(), "PG({d},{q})");
            }

            assert!(lattice.is_atomistic(), "PG({d},{q}) not atomistic");
        }
    }
}

#[test]
fn exponential_growth_basis_for_general_y() {
    // the largest coefficient magnitude is exactly (y−1)^(ℓ−1)
    for y in [2u32, 3, 5] {
        for ell in 1..=4u32 {
            let venn = compute_venn(&gen_exponential(ell, y).unwrap()).unwrap();
            let x = mobius_ie_vector(&venn);
            assert_eq!(
                x.max_abs_coeff(),
                BigInt::from(y - 1).pow(ell - 1),
                "y={y}, ell={ell}"
            );
        }
    }
}
