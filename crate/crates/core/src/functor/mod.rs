//! gr^op-modules and their polynomial analysis.
//!
//! This layer turns the combinatorics of [`crate::grop`] into linear
//! algebra. A [`GropModule`] is a functor from the opposite category of
//! free groups to vector spaces; the two families implemented are the
//! exponential modules ℰ_H of cocommutative Hopf algebras
//! ([`ExponentialModule`]) and the simplicial degree modules
//! ([`DeltaCatModule`]). On top of the action interface sit the
//! module-level invariants: cross-effects and their direct-sum
//! decomposition, the polynomial filtration, primitive parts with their
//! Lie-word action, the generated filtration, and the two structural
//! comparison checks (polynomial vs. coradical filtration, inner
//! conjugations vs. commutativity).

pub mod analysis;
pub mod deltacat;
pub mod exponential;
pub mod module;

pub use analysis::{
    corad_eq_poly_check, cross_effect, decomposition_check, j_apply, lie_action, outer_check,
    poly_conilpotency_degree, poly_filtration, primitive_part, q_filtration, ConilpotencyEntry,
    CoradPolyEntry, CoradPolyReport, DecompositionPart, DecompositionReport, OuterEntry,
    OuterReport,
};
pub use deltacat::DeltaCatModule;
pub use exponential::ExponentialModule;
pub use module::{compute_act, ActCache, GropModule};
