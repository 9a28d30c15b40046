//! Provably valid, *small* inclusion-exclusion formulas for arbitrary
//! finite set systems.
//!
//! Given a family F₁, …, Fₙ presented point-by-point, this crate
//!
//! - standardizes it to its Venn diagram (the distinct nonempty membership
//!   patterns),
//! - computes the unique formula supported on the Venn diagram by exact
//!   Möbius inversion ([`mobius::mobius_ie_vector`]),
//! - builds randomized abstract-tube formulas whose coefficients are all
//!   ±1 ([`tube::build_tube`]), using a restart loop over random label
//!   permutations with a face-size cap,
//! - generates the named extremal families (the uniqueness family, the
//!   exponential-coefficient family, and projective-space lattice systems
//!   over prime fields), and
//! - certifies any formula against any system with exact integer
//!   arithmetic ([`validate`]).
//!
//! All validation is exact: measures are nonnegative integers and
//! coefficients are arbitrary-precision integers, so "formula equals union"
//! is checked with zero tolerance. Every type is immutable after
//! construction and safe to share across threads.

pub mod complex;
pub mod error;
pub mod generators;
pub mod ie_vector;
pub mod index_set;
pub mod json;
pub mod measure;
pub mod mobius;
pub mod projective;
pub mod set_system;
pub mod standardize;
pub mod tube;
pub mod validate;
pub mod venn;

pub use complex::SimplicialComplex;
pub use error::{Error, Result};
pub use ie_vector::IEVector;
pub use index_set::IndexSet;
pub use measure::{evaluate_formula, evaluate_union, Measure};
pub use set_system::SetSystem;
pub use venn::VennDiagram;

#[cfg(test)]
mod thread_safety {
    fn assert_shareable<T: Send + Sync>() {}

    #[test]
    fn domain_types_are_shareable_across_threads() {
        assert_shareable::<crate::IndexSet>();
        assert_shareable::<crate::SetSystem>();
        assert_shareable::<crate::VennDiagram>();
        assert_shareable::<crate::IEVector>();
        assert_shareable::<crate::Measure>();
        assert_shareable::<crate::SimplicialComplex>();
        assert_shareable::<crate::projective::ProjectiveLattice>();
        assert_shareable::<crate::tube::Selector>();
        assert_shareable::<crate::tube::TubeResult>();
    }
}
