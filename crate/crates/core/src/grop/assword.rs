//! The category of multilinear word tuples.
//!
//! An [`AssWordTuple`] `n → m` is a list of `m` formal words in `x1..xn` in
//! which every variable appears exactly once in total, always positively —
//! for example `(x2x3, 1, x4x1)` with four variables spread over three
//! slots. These tuples are exactly the normal forms produced by the
//! rewriting engine, and they form a category of their own under
//! substitution: composing multilinear tuples again uses every variable
//! exactly once.
//!
//! Reading the formal words as free-group words embeds this category into
//! the free-group category; the embedding is faithful and functorial, e.g.
//! `(x2x3, 1, x4x1)` becomes `[x2x3|e|x4x1]_4`. Hom-sets here are finite:
//! there are `m(m+1)⋯(m+n−1)` tuples `n → m`, enumerated by
//! [`ass_basis`] — each of the `n` variables is inserted in turn into any
//! of the gaps the previous ones left behind.

use std::fmt;

use super::morphism::GropMorphism;
use super::word::FreeWord;
use crate::error::{Error, Result};

/// A tuple of `m` formal words over `x1..xn`, each variable used exactly
/// once, positively. Words are lists of variable indices; the empty list is
/// the empty word.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct AssWordTuple {
    source: usize,
    words: Vec<Vec<usize>>,
}

impl AssWordTuple {
    /// Build a tuple, checking multilinearity: the concatenation of all
    /// words must use each of `1..=source` exactly once.
    pub fn new(source: usize, words: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; source];
        for w in &words {
            for &v in w {
                if v == 0 || v > source {
                    return Err(Error::InvalidInput(format!(
                        "word tuple uses x{v} but the source is {source}"
                    )));
                }
                if seen[v - 1] {
                    return Err(Error::InvalidInput(format!(
                        "word tuple uses x{v} twice; each variable must appear exactly once"
                    )));
                }
                seen[v - 1] = true;
            }
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidInput(format!(
                "word tuple never uses x{}",
                missing + 1
            )));
        }
        Ok(AssWordTuple { source, words })
    }

    /// The identity tuple `(x1, x2, …, xn)`.
    pub fn identity(n: usize) -> Self {
        AssWordTuple {
            source: n,
            words: (1..=n).map(|v| vec![v]).collect(),
        }
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.words.len()
    }

    pub fn words(&self) -> &[Vec<usize>] {
        &self.words
    }

    /// The composite `self ∘ other` by word substitution: each variable
    /// `x_j` in `self`'s words is replaced by `other`'s `j`-th word.
    /// Multilinearity is preserved, since `self` uses each `x_j` once and
    /// `other`'s words partition its own variables.
    pub fn compose(&self, other: &AssWordTuple) -> Result<AssWordTuple> {
        if self.source != other.target() {
            return Err(Error::ObjectMismatch {
                f: other.to_string(),
                g: self.to_string(),
            });
        }
        let words: Vec<Vec<usize>> = self
            .words
            .iter()
            .map(|w| {
                w.iter()
                    .flat_map(|&j| other.words[j - 1].iter().copied())
                    .collect()
            })
            .collect();
        let composed = AssWordTuple {
            source: other.source,
            words,
        };
        debug_assert!(
            AssWordTuple::new(composed.source, composed.words.clone()).is_ok(),
            "substitution of multilinear tuples stays multilinear"
        );
        Ok(composed)
    }

    /// Read the formal words as free-group words: the faithful, functorial
    /// embedding into the free-group category. The identity tuple embeds to
    /// the identity morphism.
    pub fn embed(&self) -> GropMorphism {
        let words = self
            .words
            .iter()
            .map(|w| FreeWord::from_letters(w.iter().map(|&v| super::word::Letter::positive(v))))
            .collect();
        GropMorphism::new(self.source, words)
            .expect("multilinear variables are within the source range")
    }
}

impl fmt::Display for AssWordTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.embed())
    }
}

/// All multilinear tuples `n → m`, in a deterministic order.
///
/// Built by inserting `x1, x2, …` in turn: `x_k` can land in any of the
/// `m + (k−1)` gaps of the tuple built so far (one more gap than letters in
/// each word), so the total count is the rising factorial
/// `m(m+1)⋯(m+n−1)`.
pub fn ass_basis(n: usize, m: usize) -> Vec<AssWordTuple> {
    let mut tuples: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); m]];
    for var in 1..=n {
        let mut next = Vec::new();
        for t in &tuples {
            for (wi, w) in t.iter().enumerate() {
                for gap in 0..=w.len() {
                    let mut inserted = t.clone();
                    inserted[wi].insert(gap, var);
                    next.push(inserted);
                }
            }
        }
        tuples = next;
    }
    tuples
        .into_iter()
        .map(|words| AssWordTuple { source: n, words })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grop::parse::parse_morphism;
    use crate::grop::rewrite::is_multilinear;

    #[test]
    fn identity_embeds_to_the_identity_morphism() {
        for n in 0..=4 {
            assert_eq!(AssWordTuple::identity(n).embed(), GropMorphism::identity(n));
        }
    }

    #[test]
    fn embedding_matches_the_expected_word_form() {
        let t = AssWordTuple::new(4, vec![vec![2, 3], vec![], vec![4, 1]]).unwrap();
        assert_eq!(t.embed(), parse_morphism("[x2x3|e|x4x1]_4").unwrap());
    }

    #[test]
    fn multilinearity_is_enforced() {
        assert!(AssWordTuple::new(2, vec![vec![1, 1], vec![2]]).is_err());
        assert!(AssWordTuple::new(2, vec![vec![1]]).is_err());
        assert!(AssWordTuple::new(1, vec![vec![1, 2]]).is_err());
        assert!(AssWordTuple::new(0, vec![vec![], vec![]]).is_ok());
    }

    #[test]
    fn basis_count_is_the_rising_factorial() {
        for m in 0..=3usize {
            for n in 0..=4usize {
                let expected: usize = (0..n).map(|k| m + k).product();
                assert_eq!(
                    ass_basis(n, m).len(),
                    expected,
                    "count of tuples {n} -> {m}"
                );
            }
        }
    }

    #[test]
    fn basis_of_two_by_two_is_the_six_known_tuples() {
        let basis = ass_basis(2, 2);
        assert_eq!(basis.len(), 6);
        let mut words: Vec<String> = basis.iter().map(|t| t.to_string()).collect();
        let mut expected = vec![
            "[x1x2|e]_2",
            "[x2x1|e]_2",
            "[x1|x2]_2",
            "[x2|x1]_2",
            "[e|x1x2]_2",
            "[e|x2x1]_2",
        ];
        words.sort();
        expected.sort();
        assert_eq!(words, expected);
    }

    #[test]
    fn basis_tuples_are_distinct_and_multilinear() {
        let basis = ass_basis(3, 2);
        for t in &basis {
            assert!(is_multilinear(&t.embed()));
        }
        let mut dedup = basis.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), basis.len());
    }

    #[test]
    fn composition_substitutes_words() {
        // (x1x2) ∘ (x2x3, x1) : substitute the first word for x1, the
        // second for x2.
        let outer = AssWordTuple::new(2, vec![vec![1, 2]]).unwrap();
        let inner = AssWordTuple::new(3, vec![vec![2, 3], vec![1]]).unwrap();
        let composed = outer.compose(&inner).unwrap();
        assert_eq!(
            composed,
            AssWordTuple::new(3, vec![vec![2, 3, 1]]).unwrap()
        );
    }

    #[test]
    fn embedding_is_functorial() {
        let a = AssWordTuple::new(3, vec![vec![2], vec![3, 1]]).unwrap(); // 3 -> 2
        let b = AssWordTuple::new(2, vec![vec![2, 1]]).unwrap(); // 2 -> 1
        let lhs = b.compose(&a).unwrap().embed();
        let rhs = b.embed().compose(&a.embed()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn composition_with_identities_is_neutral() {
        let a = AssWordTuple::new(3, vec![vec![2], vec![3, 1]]).unwrap();
        assert_eq!(
            AssWordTuple::identity(2).compose(&a).unwrap(),
            a
        );
        assert_eq!(a.compose(&AssWordTuple::identity(3)).unwrap(), a);
    }
}
