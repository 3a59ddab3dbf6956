//! The interface a gr^op-module exposes to the analysis layer.
//!
//! A gr^op-module is a functor F from the opposite category of finitely
//! generated free groups to vector spaces: a dimension for every object n
//! and a linear map F(f) : F(n) → F(m) for every morphism f : n → m,
//! compatible with composition. Concrete modules (the exponential module,
//! the simplicial-degree modules) only have to say how F(f) acts on a
//! single basis column; everything else — full matrices, action on sparse
//! vectors, action of formal linear combinations of morphisms — is derived
//! here.
//!
//! `act_column` is the required method rather than `act` because the
//! interesting computations (polynomial filtrations over huge tensor
//! powers) never materialize a full matrix: they stream columns through
//! kernels. Implementations that *can* afford full matrices override `act`
//! to memoize them in an [`ActCache`].

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::grop::{GropMorphism, LinMorphism};
use crate::matrix::{svec, Matrix, SparseVec};
use crate::par::par_map_range;

/// A functor from gr^op to vector spaces, presented by its action on basis
/// columns.
///
/// The `Sync` bound lets the derived `act` fan columns out over threads.
pub trait GropModule: Sync {
    /// The coefficient field of every value F(n).
    fn field(&self) -> FieldSpec;

    /// dim F(n). Fails when the dimension overflows `usize` — values are
    /// only ever touched through sparse vectors, but their index space must
    /// still be addressable.
    fn dim(&self, n: usize) -> Result<usize>;

    /// The `col`-th column of F(f), as a sparse vector over F(target).
    fn act_column(&self, f: &GropMorphism, col: usize) -> Result<SparseVec>;

    /// The full matrix of F(f) : F(source) → F(target).
    fn act(&self, f: &GropMorphism) -> Result<Matrix> {
        compute_act(self, f)
    }

    /// F(f) applied to a sparse vector: the column combination
    /// Σ_j v_j · F(f)(e_j). Cost scales with the support of `v`, not with
    /// dim F(source).
    fn act_vec(&self, f: &GropMorphism, v: &SparseVec) -> Result<SparseVec> {
        let mut out = SparseVec::new();
        for (&j, c) in v {
            let col = self.act_column(f, j)?;
            svec::add_scaled(&mut out, &col, c);
        }
        Ok(out)
    }

    /// The matrix of F extended linearly to a formal combination of
    /// parallel morphisms.
    fn act_lin(&self, l: &LinMorphism) -> Result<Matrix> {
        if l.field() != self.field() {
            return Err(Error::FieldMismatch(l.field(), self.field()));
        }
        let mut out = Matrix::zero(self.field(), self.dim(l.target())?, self.dim(l.source())?);
        for (f, c) in l.terms() {
            out = out.add(&self.act(f)?.scale(c));
        }
        Ok(out)
    }

    /// A formal combination applied to a sparse vector.
    fn act_lin_vec(&self, l: &LinMorphism, v: &SparseVec) -> Result<SparseVec> {
        if l.field() != self.field() {
            return Err(Error::FieldMismatch(l.field(), self.field()));
        }
        let mut out = SparseVec::new();
        for (f, c) in l.terms() {
            let term = self.act_vec(f, v)?;
            svec::add_scaled(&mut out, &term, c);
        }
        Ok(out)
    }
}

/// Assembles F(f) column by column, in parallel. This is the default body
/// of [`GropModule::act`], exposed separately so caching overrides can
/// still reach the uncached computation.
pub fn compute_act<M: GropModule + ?Sized>(module: &M, f: &GropMorphism) -> Result<Matrix> {
    let rows = module.dim(f.target())?;
    let cols = module.dim(f.source())?;
    let columns: Result<Vec<SparseVec>> = par_map_range(cols, |j| module.act_column(f, j))
        .into_iter()
        .collect();
    Ok(Matrix::from_columns(module.field(), rows, columns?))
}

/// A memo table for full action matrices, keyed by morphism.
///
/// The cross-effect decomposition applies the same block collapses over and
/// over while ranging over subsets; caching their matrices turns that from
/// quadratically many evaluations into one per collapse. Misses compute
/// outside the lock — a racing duplicate computation is idempotent, and
/// the first finished result wins.
#[derive(Debug, Default)]
pub struct ActCache {
    map: Mutex<HashMap<GropMorphism, Arc<Matrix>>>,
}

impl ActCache {
    pub fn new() -> Self {
        ActCache::default()
    }

    /// The cached matrix for `f`, computing it on a miss.
    pub fn get_or_compute(
        &self,
        f: &GropMorphism,
        compute: impl FnOnce() -> Result<Matrix>,
    ) -> Result<Arc<Matrix>> {
        if let Some(hit) = self.map.lock().unwrap().get(f) {
            return Ok(Arc::clone(hit));
        }
        let fresh = Arc::new(compute()?);
        let mut guard = self.map.lock().unwrap();
        Ok(Arc::clone(guard.entry(f.clone()).or_insert(fresh)))
    }

    /// Number of memoized morphisms.
    pub fn len(&self) -> usize {
        self.map.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
