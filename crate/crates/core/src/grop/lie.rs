//! Bracket-tree morphisms and their expansion into word tuples.
//!
//! A [`LieTupleMorphism`] `n → m` distributes the variables `x1..xn` over
//! `m` slots and equips each occupied slot with a binary bracket tree — a
//! formal iterated commutator of its variables. Empty slots stand for the
//! unit. The tree `[x1, x2]` placed in a single slot, for instance, is the
//! formal commutator of the two variables.
//!
//! These morphisms are never normalised against the Jacobi identity here.
//! Everything downstream consumes them through [`LieTupleMorphism::expand`],
//! which rewrites each bracket as `[u, v] ↦ uv − vu` recursively and lands
//! in integer combinations of multilinear [`AssWordTuple`]s, e.g.
//!
//! ```text
//! [[x1,x2],x3] ↦ x1x2x3 − x2x1x3 − x3x1x2 + x3x2x1.
//! ```
//!
//! Composition of expansions is provided for combinations, so functor-level
//! composition laws can be checked without ever composing trees directly.

use std::collections::BTreeMap;

use super::assword::AssWordTuple;
use crate::error::{Error, Result};

/// A binary bracket tree over distinct variables: a leaf `x_v` or a formal
/// bracket of two subtrees.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum BracketTree {
    Leaf(usize),
    Bracket(Box<BracketTree>, Box<BracketTree>),
}

impl BracketTree {
    /// The leaf `x_v`.
    pub fn leaf(v: usize) -> Self {
        BracketTree::Leaf(v)
    }

    /// The bracket `[left, right]`.
    pub fn bracket(left: BracketTree, right: BracketTree) -> Self {
        BracketTree::Bracket(Box::new(left), Box::new(right))
    }

    /// Leaf variables in left-to-right order.
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            BracketTree::Leaf(v) => out.push(*v),
            BracketTree::Bracket(l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    /// Expand brackets into signed words: `[u, v] ↦ uv − vu`, recursively.
    fn expand_words(&self) -> Vec<(Vec<usize>, i64)> {
        match self {
            BracketTree::Leaf(v) => vec![(vec![*v], 1)],
            BracketTree::Bracket(l, r) => {
                let left = l.expand_words();
                let right = r.expand_words();
                let mut out = Vec::with_capacity(2 * left.len() * right.len());
                for (lw, lc) in &left {
                    for (rw, rc) in &right {
                        let mut fwd = lw.clone();
                        fwd.extend_from_slice(rw);
                        out.push((fwd, lc * rc));
                        let mut bwd = rw.clone();
                        bwd.extend_from_slice(lw);
                        out.push((bwd, -lc * rc));
                    }
                }
                out
            }
        }
    }
}

/// A partition of `x1..xn` into `m` slots, each nonempty slot carrying a
/// bracket tree on its variables; `None` is an empty slot (the unit).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieTupleMorphism {
    source: usize,
    blocks: Vec<Option<BracketTree>>,
}

impl LieTupleMorphism {
    /// Build a tuple of trees, checking that their leaves taken together
    /// use each of `x1..xn` exactly once.
    pub fn new(source: usize, blocks: Vec<Option<BracketTree>>) -> Result<Self> {
        let mut seen = vec![false; source];
        for tree in blocks.iter().flatten() {
            for v in tree.leaves() {
                if v == 0 || v > source {
                    return Err(Error::InvalidInput(format!(
                        "bracket tree uses x{v} but the source is {source}"
                    )));
                }
                if seen[v - 1] {
                    return Err(Error::InvalidInput(format!(
                        "bracket trees use x{v} twice; leaves must be distinct"
                    )));
                }
                seen[v - 1] = true;
            }
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidInput(format!(
                "bracket trees never use x{}",
                missing + 1
            )));
        }
        Ok(LieTupleMorphism { source, blocks })
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Option<BracketTree>] {
        &self.blocks
    }

    /// Expand every bracket via `[u, v] ↦ uv − vu` and collect the result
    /// as a canonical integer combination of multilinear word tuples. All
    /// coefficients are ±1 before collection; none can collide, since
    /// distinct expansions yield distinct letter orders.
    pub fn expand(&self) -> Vec<(AssWordTuple, i64)> {
        let per_block: Vec<Vec<(Vec<usize>, i64)>> = self
            .blocks
            .iter()
            .map(|b| match b {
                None => vec![(Vec::new(), 1)],
                Some(tree) => tree.expand_words(),
            })
            .collect();
        // Cartesian product across blocks.
        let mut acc: Vec<(Vec<Vec<usize>>, i64)> = vec![(Vec::new(), 1)];
        for block in &per_block {
            let mut next = Vec::with_capacity(acc.len() * block.len());
            for (words, c) in &acc {
                for (w, wc) in block {
                    let mut extended = words.clone();
                    extended.push(w.clone());
                    next.push((extended, c * wc));
                }
            }
            acc = next;
        }
        let mut combined: BTreeMap<AssWordTuple, i64> = BTreeMap::new();
        for (words, c) in acc {
            let tuple = AssWordTuple::new(self.source, words)
                .expect("bracket leaves are exactly the source variables");
            *combined.entry(tuple).or_insert(0) += c;
        }
        combined.retain(|_, c| *c != 0);
        combined.into_iter().collect()
    }
}

/// Compose two integer combinations of word tuples pairwise, collecting like
/// terms. Used to check composition laws of tree actions through their
/// expansions.
pub fn compose_expansions(
    outer: &[(AssWordTuple, i64)],
    inner: &[(AssWordTuple, i64)],
) -> Result<Vec<(AssWordTuple, i64)>> {
    let mut combined: BTreeMap<AssWordTuple, i64> = BTreeMap::new();
    for (b, cb) in outer {
        for (a, ca) in inner {
            *combined.entry(b.compose(a)?).or_insert(0) += cb * ca;
        }
    }
    combined.retain(|_, c| *c != 0);
    Ok(combined.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(source: usize, blocks: Vec<Option<BracketTree>>) -> LieTupleMorphism {
        LieTupleMorphism::new(source, blocks).unwrap()
    }

    #[test]
    fn single_leaf_expands_to_itself() {
        let l = t(1, vec![Some(BracketTree::leaf(1))]);
        assert_eq!(
            l.expand(),
            vec![(AssWordTuple::identity(1), 1)]
        );
    }

    #[test]
    fn one_bracket_expands_to_a_commutator() {
        let l = t(
            2,
            vec![Some(BracketTree::bracket(
                BracketTree::leaf(1),
                BracketTree::leaf(2),
            ))],
        );
        let expanded = l.expand();
        assert_eq!(
            expanded,
            vec![
                (AssWordTuple::new(2, vec![vec![1, 2]]).unwrap(), 1),
                (AssWordTuple::new(2, vec![vec![2, 1]]).unwrap(), -1),
            ]
        );
    }

    #[test]
    fn nested_bracket_expands_to_four_terms() {
        let l = t(
            3,
            vec![Some(BracketTree::bracket(
                BracketTree::bracket(BracketTree::leaf(1), BracketTree::leaf(2)),
                BracketTree::leaf(3),
            ))],
        );
        let expanded = l.expand();
        let coeff = |word: &[usize]| {
            expanded
                .iter()
                .find(|(t, _)| t.words()[0] == word)
                .map(|(_, c)| *c)
                .unwrap_or(0)
        };
        assert_eq!(expanded.len(), 4);
        assert_eq!(coeff(&[1, 2, 3]), 1);
        assert_eq!(coeff(&[2, 1, 3]), -1);
        assert_eq!(coeff(&[3, 1, 2]), -1);
        assert_eq!(coeff(&[3, 2, 1]), 1);
    }

    #[test]
    fn empty_blocks_become_empty_words() {
        let l = t(1, vec![None, Some(BracketTree::leaf(1))]);
        assert_eq!(
            l.expand(),
            vec![(AssWordTuple::new(1, vec![vec![], vec![1]]).unwrap(), 1)]
        );
    }

    #[test]
    fn leaf_bijection_is_enforced() {
        // Missing variable.
        assert!(LieTupleMorphism::new(2, vec![Some(BracketTree::leaf(1))]).is_err());
        // Duplicated variable.
        assert!(LieTupleMorphism::new(
            1,
            vec![Some(BracketTree::bracket(
                BracketTree::leaf(1),
                BracketTree::leaf(1)
            ))]
        )
        .is_err());
        // Out of range.
        assert!(LieTupleMorphism::new(1, vec![Some(BracketTree::leaf(2))]).is_err());
    }

    #[test]
    fn antisymmetry_shows_up_in_expansions() {
        let ab = t(
            2,
            vec![Some(BracketTree::bracket(
                BracketTree::leaf(1),
                BracketTree::leaf(2),
            ))],
        )
        .expand();
        let ba = t(
            2,
            vec![Some(BracketTree::bracket(
                BracketTree::leaf(2),
                BracketTree::leaf(1),
            ))],
        )
        .expand();
        let negated: Vec<(AssWordTuple, i64)> =
            ba.into_iter().map(|(t, c)| (t, -c)).collect();
        assert_eq!(ab, negated);
    }

    #[test]
    fn composing_expansions_collects_cancellations() {
        // Substituting an empty word into a commutator kills it:
        // expand([x1, x2-slot]) ∘ (empty, x1) has the two terms collide.
        let bracket = t(
            2,
            vec![Some(BracketTree::bracket(
                BracketTree::leaf(1),
                BracketTree::leaf(2),
            ))],
        )
        .expand();
        let unit_in_first = vec![(AssWordTuple::new(1, vec![vec![], vec![1]]).unwrap(), 1)];
        let composed = compose_expansions(&bracket, &unit_in_first).unwrap();
        assert!(composed.is_empty(), "[1, x] = 0 after expansion");
    }
}
