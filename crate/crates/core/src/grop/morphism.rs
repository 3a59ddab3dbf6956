//! Morphisms of the opposite category of finitely generated free groups.
//!
//! A morphism `n → m` is written `[w1|…|wm]_n`: a list of `m` freely reduced
//! words in the generators `x1..xn`. It stands for the group homomorphism
//! from the free group on `m` generators to the free group on `n` generators
//! sending the `i`-th generator to `w_i` — read *backwards*, which is what
//! makes this the opposite category. Composition is therefore substitution:
//! in `g ∘ f` the words of `f` are substituted for the variables appearing in
//! the words of `g`.
//!
//! The distinguished morphisms of the category — diagonal, multiplication,
//! inversion, unit and counit — generate it together with permutations, and
//! most constructions downstream are phrased in terms of them:
//!
//! * `Δ = [x1|x1]_1 : 1 → 2` (diagonal),
//! * `∇ = [x1x2]_2 : 2 → 1` (multiplication),
//! * `γ = [x1^-1]_1 : 1 → 1` (inversion),
//! * `η = [e]_0 : 0 → 1` and `ε = []_1 : 1 → 0` (unit and counit).
//!
//! For instance `∇ ∘ Δ = [x1x1]_1`: substituting `x1` for both variables of
//! `x1x2` squares the generator.

use std::fmt;

use super::word::FreeWord;
use crate::error::{Error, Result};

/// A morphism `[w1|…|wm]_n : n → m` in the opposite category of finitely
/// generated free groups.
///
/// Invariants: every word is freely reduced (guaranteed by [`FreeWord`]) and
/// uses only the variables `x1..xn`. The target is the number of words.
///
/// The derived ordering — source first, then the word list with the
/// length-then-letters word order — is what keeps linear combinations keyed
/// by morphisms canonical.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GropMorphism {
    source: usize,
    words: Vec<FreeWord>,
}

impl GropMorphism {
    /// Build `[words]_source`, checking that no word uses a variable beyond
    /// `x_source`.
    pub fn new(source: usize, words: Vec<FreeWord>) -> Result<Self> {
        for (k, w) in words.iter().enumerate() {
            if w.max_var() > source {
                return Err(Error::InvalidInput(format!(
                    "word {} of a morphism with source {} uses x{}",
                    k + 1,
                    source,
                    w.max_var()
                )));
            }
        }
        Ok(GropMorphism { source, words })
    }

    /// The identity `[x1|…|xn]_n`.
    pub fn identity(n: usize) -> Self {
        GropMorphism {
            source: n,
            words: (1..=n).map(FreeWord::generator).collect(),
        }
    }

    /// The diagonal `Δ = [x1|x1]_1 : 1 → 2`.
    pub fn diagonal() -> Self {
        GropMorphism {
            source: 1,
            words: vec![FreeWord::generator(1), FreeWord::generator(1)],
        }
    }

    /// The multiplication `∇ = [x1x2]_2 : 2 → 1`.
    pub fn multiplication() -> Self {
        GropMorphism {
            source: 2,
            words: vec![FreeWord::generator(1).concat(&FreeWord::generator(2))],
        }
    }

    /// The inversion `γ = [x1^-1]_1 : 1 → 1`.
    pub fn inversion() -> Self {
        GropMorphism {
            source: 1,
            words: vec![FreeWord::generator(1).inverse()],
        }
    }

    /// The unit `η = [e]_0 : 0 → 1`.
    pub fn unit() -> Self {
        GropMorphism {
            source: 0,
            words: vec![FreeWord::empty()],
        }
    }

    /// The counit `ε = []_1 : 1 → 0`.
    pub fn counit() -> Self {
        GropMorphism {
            source: 1,
            words: Vec::new(),
        }
    }

    /// Source object `n`.
    pub fn source(&self) -> usize {
        self.source
    }

    /// Target object `m` (the number of words).
    pub fn target(&self) -> usize {
        self.words.len()
    }

    /// The word list `w1..wm`.
    pub fn words(&self) -> &[FreeWord] {
        &self.words
    }

    /// Whether this is the identity on its source.
    pub fn is_identity(&self) -> bool {
        self.words.len() == self.source
            && self
                .words
                .iter()
                .enumerate()
                .all(|(i, w)| *w == FreeWord::generator(i + 1))
    }

    /// The composite `self ∘ other` for `other : n → m`, `self : m → l`.
    ///
    /// Substitutes `other`'s words for the variables of `self`'s words and
    /// reduces. Associative, with the identities as two-sided units.
    pub fn compose(&self, other: &GropMorphism) -> Result<GropMorphism> {
        if self.source != other.target() {
            return Err(Error::ObjectMismatch {
                f: other.to_string(),
                g: self.to_string(),
            });
        }
        let words = self
            .words
            .iter()
            .map(|w| w.substitute(other.words()))
            .collect();
        Ok(GropMorphism {
            source: other.source,
            words,
        })
    }

    /// The free product `self ∗ other : (n+n′) → (m+m′)`: `other`'s variables
    /// are shifted past `self`'s and the word lists are concatenated.
    pub fn free_product(&self, other: &GropMorphism) -> GropMorphism {
        let mut words = self.words.clone();
        words.extend(other.words.iter().map(|w| w.shift(self.source)));
        GropMorphism {
            source: self.source + other.source,
            words,
        }
    }
}

impl fmt::Display for GropMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, w) in self.words.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, "]_{}", self.source)
    }
}

/// The `n`-fold diagonal `X → nX`: the word list `x1..xX` repeated `n` times.
/// `iterated_diagonal(x, 1)` is the identity and `iterated_diagonal(1, 2)`
/// is `Δ`.
pub fn iterated_diagonal(x: usize, copies: usize) -> GropMorphism {
    let mut words = Vec::with_capacity(x * copies);
    for _ in 0..copies {
        words.extend((1..=x).map(FreeWord::generator));
    }
    GropMorphism { source: x, words }
}

/// The endomorphism of `X = X_1 + … + X_k` that collapses the `block`-th
/// summand through the zero object (every generator of that block goes to the
/// empty word) and fixes the rest. `block` is 1-based.
///
/// These are the commuting idempotents whose products carve a module's value
/// on a sum into cross-effects.
pub fn tau(block: usize, block_sizes: &[usize]) -> Result<GropMorphism> {
    if block == 0 || block > block_sizes.len() {
        return Err(Error::IndexOutOfRange {
            context: "tau block index",
            index: block,
            bound: block_sizes.len(),
        });
    }
    let total: usize = block_sizes.iter().sum();
    let mut words = Vec::with_capacity(total);
    let mut var = 1;
    for (b, &size) in block_sizes.iter().enumerate() {
        for _ in 0..size {
            if b + 1 == block {
                words.push(FreeWord::empty());
            } else {
                words.push(FreeWord::generator(var));
            }
            var += 1;
        }
    }
    Ok(GropMorphism {
        source: total,
        words,
    })
}

/// Conjugation by a fixed word: `[w x1 w^-1 | … | w xn w^-1]_n`. Each word is
/// freely reduced, so e.g. conjugating `x1` by itself collapses back to `x1`:
/// `inner_conjugation(2, x1) = [x1 | x1x2x1^-1]_2`.
pub fn inner_conjugation(n: usize, by: &FreeWord) -> Result<GropMorphism> {
    if by.max_var() > n {
        return Err(Error::InvalidInput(format!(
            "conjugating word {} uses x{} but the object is {}",
            by,
            by.max_var(),
            n
        )));
    }
    let inv = by.inverse();
    let words = (1..=n)
        .map(|i| by.concat(&FreeWord::generator(i)).concat(&inv))
        .collect();
    Ok(GropMorphism { source: n, words })
}
