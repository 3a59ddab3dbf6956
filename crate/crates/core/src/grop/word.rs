//! Freely reduced words in finitely generated free groups.
//!
//! The combinatorial side of the crate is built from words in generators
//! `x1, x2, …`: sequences of letters, each a generator or the inverse of one.
//! A [`FreeWord`] is kept *freely reduced* at all times — no letter ever
//! stands next to its own inverse — so structural equality of words is
//! equality in the free group and no separate word-problem machinery is
//! needed.
//!
//! Free reduction is confluent: however one chooses the order in which
//! cancelling pairs are removed, the end result is the same word. The stack
//! algorithm in [`reduce_word`] realises one such order in a single pass.

use std::cmp::Ordering;
use std::fmt;

/// A single letter `x_i` or `x_i^-1` of a free-group word.
///
/// Variables are indexed from 1, matching the ambient naming `x1, x2, …`.
/// The exponent is always `+1` or `-1`; higher powers are spelled out as
/// repeated letters, so `x1^3` is three letters long.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter {
    /// 1-based index of the generator.
    pub var: usize,
    /// `+1` for the generator itself, `-1` for its inverse.
    pub exp: i8,
}

impl Letter {
    /// The letter `x_var`.
    pub fn positive(var: usize) -> Self {
        assert!(var >= 1, "variable indices are 1-based");
        Letter { var, exp: 1 }
    }

    /// The letter `x_var^-1`.
    pub fn negative(var: usize) -> Self {
        assert!(var >= 1, "variable indices are 1-based");
        Letter { var, exp: -1 }
    }

    /// The formally inverse letter.
    pub fn inverse(self) -> Self {
        Letter {
            var: self.var,
            exp: -self.exp,
        }
    }

    /// Whether `self` followed by `other` is a cancelling pair.
    fn cancels(self, other: Letter) -> bool {
        self.var == other.var && self.exp == -other.exp
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp < 0 {
            write!(f, "x{}^-1", self.var)
        } else {
            write!(f, "x{}", self.var)
        }
    }
}

/// A freely reduced word in the free group on `x1, x2, …`.
///
/// The empty word is the group identity and prints as `e`. Words are ordered
/// by length first and then by the letter sequence; this is the ordering used
/// everywhere to canonicalise linear combinations of morphisms, so that equal
/// combinations have equal printed forms.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct FreeWord {
    letters: Vec<Letter>,
}

/// Freely reduce a letter sequence.
///
/// Single left-to-right pass with a stack: a letter cancelling the current
/// top annihilates it, anything else is pushed. Cascading cancellations such
/// as `x1 x2 x2^-1 x1^-1 → e` fall out of the stack discipline. The result is
/// independent of cancellation order and the map is idempotent.
pub fn reduce_word(letters: impl IntoIterator<Item = Letter>) -> FreeWord {
    let mut stack: Vec<Letter> = Vec::new();
    for l in letters {
        debug_assert!(
            l.var >= 1 && (l.exp == 1 || l.exp == -1),
            "malformed letter {l:?}"
        );
        match stack.last() {
            Some(&top) if top.cancels(l) => {
                stack.pop();
            }
            _ => stack.push(l),
        }
    }
    FreeWord { letters: stack }
}

impl FreeWord {
    /// The empty word (the group identity).
    pub fn empty() -> Self {
        FreeWord { letters: Vec::new() }
    }

    /// The one-letter word `x_var`.
    pub fn generator(var: usize) -> Self {
        FreeWord {
            letters: vec![Letter::positive(var)],
        }
    }

    /// The word `x_var^k`, spelled as `|k|` letters of the sign of `k`.
    /// `k = 0` gives the empty word.
    pub fn generator_power(var: usize, k: i64) -> Self {
        let letter = if k >= 0 {
            Letter::positive(var)
        } else {
            Letter::negative(var)
        };
        FreeWord {
            letters: vec![letter; k.unsigned_abs() as usize],
        }
    }

    /// Build a word from arbitrary letters, reducing them.
    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        reduce_word(letters)
    }

    /// The reduced letter sequence.
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Number of letters of the reduced word.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Whether this is the empty word.
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest variable index occurring in the word; 0 for the empty word.
    pub fn max_var(&self) -> usize {
        self.letters.iter().map(|l| l.var).max().unwrap_or(0)
    }

    /// How many letters (of either sign) use the variable `var`.
    pub fn occurrences_of(&self, var: usize) -> usize {
        self.letters.iter().filter(|l| l.var == var).count()
    }

    /// The group inverse: letters reversed and individually inverted.
    /// Reducedness is preserved, so no re-reduction is needed.
    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Concatenation followed by reduction at the seam.
    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        reduce_word(self.letters.iter().chain(other.letters.iter()).copied())
    }

    /// The same word with every variable index raised by `by` — the right
    /// factor's half of a free product.
    pub fn shift(&self, by: usize) -> FreeWord {
        FreeWord {
            letters: self
                .letters
                .iter()
                .map(|l| Letter { var: l.var + by, exp: l.exp })
                .collect(),
        }
    }

    /// Substitute `images[i-1]` for every occurrence of `x_i` (inverting it at
    /// inverse letters) and reduce. This is the action of a group homomorphism
    /// specified on generators.
    ///
    /// Panics if the word uses a variable beyond `images.len()`; callers
    /// validate variable ranges before substituting.
    pub fn substitute(&self, images: &[FreeWord]) -> FreeWord {
        let mut letters = Vec::new();
        for l in &self.letters {
            assert!(
                l.var <= images.len(),
                "substitute: word uses x{} but only {} images were given",
                l.var,
                images.len()
            );
            let image = &images[l.var - 1];
            if l.exp > 0 {
                letters.extend_from_slice(image.letters());
            } else {
                letters.extend(image.letters.iter().rev().map(|m| m.inverse()));
            }
        }
        reduce_word(letters)
    }
}

impl Ord for FreeWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for FreeWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(letters: &[(usize, i8)]) -> FreeWord {
        FreeWord::from_letters(letters.iter().map(|&(v, e)| Letter { var: v, exp: e }))
    }

    #[test]
    fn adjacent_inverse_pair_cancels() {
        assert_eq!(w(&[(1, 1), (1, -1)]), FreeWord::empty());
        assert_eq!(w(&[(1, -1), (1, 1)]), FreeWord::empty());
    }

    #[test]
    fn single_cancellation_inside_a_word() {
        // x2 x1 x1^-1 x2 reduces to x2 x2.
        assert_eq!(w(&[(2, 1), (1, 1), (1, -1), (2, 1)]), w(&[(2, 1), (2, 1)]));
    }

    #[test]
    fn cascading_cancellation() {
        // x1 x2 x2^-1 x1^-1: the outer pair only meets after the inner one
        // has gone.
        assert_eq!(w(&[(1, 1), (2, 1), (2, -1), (1, -1)]), FreeWord::empty());
    }

    #[test]
    fn reduction_is_idempotent_on_reduced_words() {
        let u = w(&[(2, 1), (1, -1), (2, 1), (1, 1)]);
        assert_eq!(FreeWord::from_letters(u.letters().to_vec()), u);
    }

    #[test]
    fn inverse_law() {
        let u = w(&[(1, 1), (2, -1), (1, 1), (3, 1)]);
        assert_eq!(u.concat(&u.inverse()), FreeWord::empty());
        assert_eq!(u.inverse().concat(&u), FreeWord::empty());
        assert_eq!(u.inverse().inverse(), u);
    }

    #[test]
    fn generator_power_spells_out_letters() {
        assert_eq!(FreeWord::generator_power(1, 3), w(&[(1, 1), (1, 1), (1, 1)]));
        assert_eq!(FreeWord::generator_power(2, -2), w(&[(2, -1), (2, -1)]));
        assert_eq!(FreeWord::generator_power(1, 0), FreeWord::empty());
    }

    #[test]
    fn substitution_acts_as_a_homomorphism_on_examples() {
        // x1 ↦ x1 x2, x2 ↦ x1^-1 applied to x1 x2 x1^-1.
        let images = [w(&[(1, 1), (2, 1)]), w(&[(1, -1)])];
        let word = w(&[(1, 1), (2, 1), (1, -1)]);
        // (x1 x2)(x1^-1)(x1 x2)^-1 = x1 x2 x1^-1 x2^-1 x1^-1.
        assert_eq!(
            word.substitute(&images),
            w(&[(1, 1), (2, 1), (1, -1), (2, -1), (1, -1)])
        );
    }

    #[test]
    fn ordering_is_length_first() {
        let short = w(&[(3, 1)]);
        let long = w(&[(1, 1), (1, 1)]);
        assert!(short < long, "a 1-letter word precedes every 2-letter word");
        // Same length: letter sequence decides, inverse before plain letter.
        assert!(w(&[(1, -1)]) < w(&[(1, 1)]));
        assert!(w(&[(1, 1), (2, 1)]) < w(&[(2, 1), (1, 1)]));
    }

    #[test]
    fn display_matches_grammar() {
        assert_eq!(FreeWord::empty().to_string(), "e");
        assert_eq!(w(&[(2, 1), (1, -1), (2, 1)]).to_string(), "x2x1^-1x2");
    }
}
