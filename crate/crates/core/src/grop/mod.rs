//! The free-group category side: words, morphisms, linearization, and the
//! rewriting of duplicated variables into multilinear normal forms.
//!
//! Morphisms here point opposite to group homomorphisms: `[w1|…|wm]_n`
//! records a homomorphism from the free group on `m` generators into the
//! free group on `n` generators, read as a morphism `n → m`. This is the
//! natural indexing when such morphisms *act* on powers of an algebra — the
//! diagonal `[x1|x1]_1` becomes a comultiplication, the two-letter word
//! `[x1x2]_2` a multiplication, and `[x1^-1]_1` an antipode.
//!
//! Layered on the plain category are:
//!
//! * [`LinMorphism`] — formal scalar combinations of morphisms, composed
//!   bilinearly ([`linear`]);
//! * [`reduce_mod_ideal`] — reduction modulo the left ideal generated by
//!   `θ = [x1|x1]_1 − [e|x1]_1 − [x1|e]_1`, landing every combination on
//!   multilinear representatives ([`rewrite`]);
//! * [`AssWordTuple`] and [`LieTupleMorphism`] — the finite word categories
//!   that index those representatives, with bracket trees expanded by
//!   `[u,v] ↦ uv − vu` ([`assword`], [`lie`]);
//! * a bit-exact text grammar for everything above ([`parse`]).

pub mod assword;
pub mod lie;
pub mod linear;
pub mod morphism;
pub mod parse;
pub mod rewrite;
pub mod word;

pub use assword::{ass_basis, AssWordTuple};
pub use lie::{compose_expansions, BracketTree, LieTupleMorphism};
pub use linear::{theta, theta_insertion, LinMorphism};
pub use morphism::{inner_conjugation, iterated_diagonal, tau, GropMorphism};
pub use parse::{parse_lin, parse_morphism};
pub use rewrite::{is_multilinear, reduce_mod_ideal, reduce_mod_ideal_with, Occurrence};
pub use word::{reduce_word, FreeWord, Letter};
