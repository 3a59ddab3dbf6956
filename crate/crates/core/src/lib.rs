//! Exact computation of coradical, polynomial and primitive filtrations.
//!
//! This crate provides, over ℚ or 𝔽_p:
//!
//! * exact sparse linear algebra with tensor-indexed bases
//!   ([`matrix`], [`subspace`], [`tensor`]);
//! * basis-presented coaugmented coalgebras, bialgebras and Hopf algebras,
//!   with a library of constructors — group algebras, truncated polynomial
//!   Hopf algebras, linear duals, and degree windows onto the polynomial,
//!   shuffle and tensor (free associative) bialgebras ([`coalgebra`],
//!   [`hopf`], [`builders`]);
//! * the coradical filtration P_n = Ker δ^{n+1}, primitives, conilpotency,
//!   the primitive-power filtration P₁ⁿ and "goodness" (equality of the two),
//!   plus the digit-sum combinatorics controlling 𝕜[t] in characteristic p
//!   ([`coalgebra`], [`hopf`], [`lucas`]);
//! * the opposite category of finitely generated free groups: reduced words,
//!   morphism composition, the θ-ideal with a terminating rewriting procedure
//!   to multilinear normal forms, the word categories of the associative and
//!   Lie operads, and a bit-exact text grammar ([`grop`]);
//! * functors from that category to vector spaces: exponential modules
//!   attached to cocommutative Hopf algebras, cross-effects, the polynomial
//!   and primitive filtrations of functors, and the verification suite tying
//!   the functor-level filtrations back to the coalgebra-level ones
//!   ([`functor`]);
//! * JSON ingestion/serialization, a named builder registry, and an optional
//!   content-addressed result cache ([`json`], [`registry`], [`cache`]).
//!
//! Everything is exact: no floating point, no tolerances. Data-parallel inner
//! loops use rayon when the default `parallel` feature is on and plain loops
//! otherwise; results are identical.

pub mod error;
pub mod field;
pub mod matrix;
pub mod par;
pub mod subspace;
pub mod tensor;

pub mod coalgebra;
pub mod hopf;
pub mod builders;
pub mod lucas;
pub mod grop;
pub mod functor;

pub mod cache;
pub mod json;
pub mod registry;

pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use matrix::{Matrix, SparseVec};
pub use subspace::Subspace;
pub use tensor::TensorIndex;
