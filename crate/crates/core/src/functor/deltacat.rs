//! The degree-n simplicial modules.
//!
//! The degree-n module Δ_n sends the object m to the span of the
//! multilinear tensor words: tuples of words over n letters, spread over m
//! tensor slots, with every letter used exactly once across the tuple.
//! Its dimension at m is the rising factorial m·(m+1)⋯(m+n−1), with the
//! associative word tuples of [`crate::grop::ass_basis`] as the canonical
//! basis. Morphisms act by the same comultiply–route–multiply recipe as the
//! exponential module; multilinearity is preserved because every letter of
//! the input reappears exactly once in the image (or the whole term dies
//! under a counit).
//!
//! Concretely Δ_n is carried by the exponential module of the free
//! tensor Hopf algebra on n primitive generators, truncated at degree n —
//! the degree-n multilinear part never meets the truncation, since a slot
//! product of multilinear legs has length at most n. The implementation
//! keeps a local index per object (the `ass_basis` ordering) and translates
//! to and from the global tensor index of the carrier on every column.
//! Going through the carrier's *full* action matrices would be wrong as
//! well as wasteful: columns outside the multilinear span can genuinely
//! overflow the truncation window.
//!
//! These modules are the extremes of polynomiality: Δ_n is polynomial of
//! degree exactly n, i.e. its (n+1)-st cross-effect vanishes while the n-th
//! does not.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use crate::builders::{tensor_hopf_window, word_index, words_up_to};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::grop::{ass_basis, GropMorphism};
use crate::matrix::{Matrix, SparseVec};
use crate::tensor::TensorIndex;

use super::exponential::ExponentialModule;
use super::module::{compute_act, ActCache, GropModule};

/// Translation between a local `ass_basis` index and the carrier's global
/// tensor index, per object.
#[derive(Debug)]
struct IndexMap {
    to_global: Vec<usize>,
    from_global: HashMap<usize, usize>,
}

/// The degree-n simplicial gr^op-module Δ_n.
#[derive(Debug)]
pub struct DeltaCatModule {
    degree: usize,
    inner: ExponentialModule,
    /// H_n basis index of each word over the letters 0..n−1.
    word_lookup: BTreeMap<Vec<usize>, usize>,
    index_maps: Mutex<HashMap<usize, Arc<IndexMap>>>,
    cache: ActCache,
}

impl DeltaCatModule {
    /// The degree-`degree` module over `field`.
    pub fn new(field: FieldSpec, degree: usize) -> Result<Self> {
        let carrier = tensor_hopf_window(field, degree, degree)?;
        let words = words_up_to(degree, degree);
        let word_lookup = word_index(&words);
        Ok(DeltaCatModule {
            degree,
            inner: ExponentialModule::new(carrier)?,
            word_lookup,
            index_maps: Mutex::new(HashMap::new()),
            cache: ActCache::new(),
        })
    }

    /// The polynomial degree n.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The carrier exponential module.
    pub fn carrier(&self) -> &ExponentialModule {
        &self.inner
    }

    fn index_map(&self, m: usize) -> Result<Arc<IndexMap>> {
        if let Some(hit) = self.index_maps.lock().unwrap().get(&m) {
            return Ok(Arc::clone(hit));
        }
        let d = self.inner.hopf().dim();
        let slots = TensorIndex::power(d, m);
        let basis = ass_basis(self.degree, m);
        let mut to_global = Vec::with_capacity(basis.len());
        let mut from_global = HashMap::with_capacity(basis.len());
        for (local, tuple) in basis.iter().enumerate() {
            let mut per_slot = Vec::with_capacity(m);
            for word in tuple.words() {
                let zero_based: Vec<usize> = word.iter().map(|&v| v - 1).collect();
                let idx = self.word_lookup.get(&zero_based).ok_or_else(|| {
                    Error::Validation(format!(
                        "basis tuple {tuple} uses a word outside the degree-{} carrier",
                        self.degree
                    ))
                })?;
                per_slot.push(*idx);
            }
            let global = slots.encode(&per_slot)?;
            from_global.insert(global, local);
            to_global.push(global);
        }
        let fresh = Arc::new(IndexMap {
            to_global,
            from_global,
        });
        let mut guard = self.index_maps.lock().unwrap();
        Ok(Arc::clone(guard.entry(m).or_insert(fresh)))
    }
}

impl GropModule for DeltaCatModule {
    fn field(&self) -> FieldSpec {
        self.inner.field()
    }

    /// The rising factorial m·(m+1)⋯(m+n−1).
    fn dim(&self, m: usize) -> Result<usize> {
        let mut out: usize = 1;
        for k in 0..self.degree {
            out = out.checked_mul(m + k).ok_or_else(|| {
                Error::Validation(format!(
                    "dim of the degree-{} module at object {m} overflows the index space",
                    self.degree
                ))
            })?;
        }
        Ok(out)
    }

    fn act_column(&self, f: &GropMorphism, col: usize) -> Result<SparseVec> {
        let source = self.index_map(f.source())?;
        let target = self.index_map(f.target())?;
        let global_col = *source.to_global.get(col).ok_or(Error::IndexOutOfRange {
            context: "module basis column",
            index: col,
            bound: source.to_global.len(),
        })?;
        let image = self.inner.act_column(f, global_col)?;
        let mut out = SparseVec::new();
        for (global, s) in image {
            match target.from_global.get(&global) {
                Some(&local) => {
                    out.insert(local, s);
                }
                None => {
                    // Unreachable for genuine morphisms — the action
                    // preserves multilinearity — so escaping the span means
                    // the carrier tables are corrupt.
                    return Err(Error::Validation(format!(
                        "image of {f} left the degree-{} multilinear span",
                        self.degree
                    )));
                }
            }
        }
        Ok(out)
    }

    fn act(&self, f: &GropMorphism) -> Result<Matrix> {
        let cached = self.cache.get_or_compute(f, || compute_act(self, f))?;
        Ok((*cached).clone())
    }
}
