//! Polynomial analysis of gr^op-modules.
//!
//! Everything here consumes a [`GropModule`] through its action interface,
//! so the same machinery runs over exponential modules and the simplicial
//! degree modules alike. The central objects:
//!
//! * **cross-effects** — the images of the products Π(id − F(τ_i)) of
//!   complementary block collapses, which carve F(X₁+…+X_k) into the
//!   pieces genuinely depending on each subset of summands;
//! * **the polynomial filtration** p_n F(X): the part of F(X) killed by the
//!   (n+1)-st cross-effect of the (n+1)-fold diagonal — degree-≤-n behaviour;
//! * **the primitive part** Prim F(n): the intersection of the kernels of
//!   the θ-insertions, carrying an action of Lie-algebra words;
//! * **the generated filtration** q_n F(m): what associative word tuples
//!   build out of primitive parts in degrees ≤ n. Always inside p_n F(m);
//!   equality is the interesting question, and fails in general.
//!
//! For an exponential module the polynomial filtration of ℰ_H(X) is claimed
//! by the theory to coincide with the coradical filtration of H^{⊗X} —
//! [`corad_eq_poly_check`] tests exactly that, n by n and X by X, together
//! with the derived comparison of conilpotency degrees. [`outer_check`]
//! tests the other structural claim of that kind: inner conjugations act
//! trivially on ℰ_H exactly when H is commutative.

use crate::error::{Error, Result};
use crate::grop::{
    ass_basis, inner_conjugation, iterated_diagonal, tau, theta_insertion, AssWordTuple,
    GropMorphism, LieTupleMorphism,
};
use crate::grop::FreeWord;
use crate::hopf::HopfAlgebra;
use crate::matrix::{svec, Matrix, SparseVec};
use crate::par::par_map_range;
use crate::subspace::Subspace;

use super::exponential::ExponentialModule;
use super::module::GropModule;

/// The action matrices of the block collapses τ_i for a sum decomposition,
/// verified to be commuting idempotents — the two facts every cross-effect
/// argument rests on.
fn checked_collapses(module: &dyn GropModule, blocks: &[usize]) -> Result<Vec<Matrix>> {
    let mut collapses = Vec::with_capacity(blocks.len());
    for i in 1..=blocks.len() {
        collapses.push(module.act(&tau(i, blocks)?)?);
    }
    for (i, t) in collapses.iter().enumerate() {
        if t.mul(t) != *t {
            return Err(Error::Validation(format!(
                "collapse of block {} does not act idempotently",
                i + 1
            )));
        }
    }
    for i in 0..collapses.len() {
        for j in i + 1..collapses.len() {
            if collapses[i].mul(&collapses[j]) != collapses[j].mul(&collapses[i]) {
                return Err(Error::Validation(format!(
                    "collapses of blocks {} and {} do not commute",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(collapses)
}

/// The k-th cross-effect cr_k F(X₁,…,X_k) as a subspace of F(X₁+…+X_k):
/// the image of Π_i (id − F(τ_i)).
///
/// An empty block list gives the 0-th cross-effect, all of F(0).
pub fn cross_effect(module: &dyn GropModule, blocks: &[usize]) -> Result<Subspace> {
    let total: usize = blocks.iter().sum();
    let dim = module.dim(total)?;
    let field = module.field();
    let collapses = checked_collapses(module, blocks)?;
    let id = Matrix::identity(field, dim);
    let mut chi = id.clone();
    for t in &collapses {
        chi = chi.mul(&id.sub(t));
    }
    Ok(chi.image())
}

/// One summand of the cross-effect decomposition of F(X₁+…+X_k).
#[derive(Debug, Clone)]
pub struct DecompositionPart {
    /// Which blocks this summand depends on (1-based, ascending).
    pub subset: Vec<usize>,
    /// dim of the image of the idempotent carved out for this subset.
    pub dim: usize,
    /// dim of the independently computed cross-effect of the sub-tuple.
    pub cross_effect_dim: usize,
}

/// The full cross-effect decomposition
/// F(X₁+…+X_k) = ⊕_{S ⊆ {1..k}} cr_{|S|} F(X_i : i ∈ S).
#[derive(Debug, Clone)]
pub struct DecompositionReport {
    pub blocks: Vec<usize>,
    pub total_dim: usize,
    pub parts: Vec<DecompositionPart>,
    /// Whether the summands met trivially and filled the whole space.
    pub direct_sum: bool,
}

impl DecompositionReport {
    /// Every summand matches its independently computed cross-effect and
    /// the sum is direct and exhaustive.
    pub fn ok(&self) -> bool {
        self.direct_sum && self.parts.iter().all(|p| p.dim == p.cross_effect_dim)
    }
}

/// Decomposes F(X₁+…+X_k) along the commuting idempotents
/// e_S = Π_{i∈S}(id − t_i) · Π_{i∉S} t_i and compares every summand with
/// the cross-effect of the corresponding sub-tuple, computed from scratch
/// at the smaller object.
pub fn decomposition_check(
    module: &dyn GropModule,
    blocks: &[usize],
) -> Result<DecompositionReport> {
    let k = blocks.len();
    let total: usize = blocks.iter().sum();
    let total_dim = module.dim(total)?;
    let field = module.field();
    let collapses = checked_collapses(module, blocks)?;
    let id = Matrix::identity(field, total_dim);

    let mut parts = Vec::with_capacity(1 << k);
    let mut accumulated = Subspace::zero(field, total_dim);
    let mut direct = true;
    for mask in 0u32..(1u32 << k) {
        let mut idempotent = id.clone();
        let mut subset = Vec::new();
        for (i, t) in collapses.iter().enumerate() {
            if mask & (1 << i) != 0 {
                subset.push(i + 1);
                idempotent = idempotent.mul(&id.sub(t));
            } else {
                idempotent = idempotent.mul(t);
            }
        }
        let image = idempotent.image();
        let sub_blocks: Vec<usize> = subset.iter().map(|&i| blocks[i - 1]).collect();
        let independent = cross_effect(module, &sub_blocks)?;
        let before = accumulated.dim();
        accumulated = accumulated.sum(&image)?;
        if accumulated.dim() != before + image.dim() {
            direct = false;
        }
        parts.push(DecompositionPart {
            subset,
            dim: image.dim(),
            cross_effect_dim: independent.dim(),
        });
    }
    Ok(DecompositionReport {
        blocks: blocks.to_vec(),
        total_dim,
        parts,
        direct_sum: direct && accumulated.dim() == total_dim,
    })
}

/// The polynomial filtration stage p_n F(X) ⊆ F(X): the kernel of the
/// (n+1)-st cross-effect map
/// χ = Π_{i=1}^{n+1} (id − F(τ_i)) ∘ F(n+1-fold diagonal).
///
/// χ lands in F((n+1)·X), whose dimension is usually astronomically large;
/// nothing here materializes it. Each basis column of F(X) is pushed
/// through the diagonal and the collapses as a sparse vector, and the
/// kernel is read off the nonzero rows of the resulting tall matrix.
pub fn poly_filtration(module: &dyn GropModule, n: usize, x: usize) -> Result<Subspace> {
    let dim = module.dim(x)?;
    let copies = n + 1;
    // Fails early when the target index space is unaddressable.
    let target_dim = module.dim(x * copies)?;
    let field = module.field();
    let diagonal = iterated_diagonal(x, copies);
    let block_sizes = vec![x; copies];
    let mut collapses = Vec::with_capacity(copies);
    for i in 1..=copies {
        collapses.push(tau(i, &block_sizes)?);
    }
    let minus_one = field.one().neg();
    let columns: Result<Vec<SparseVec>> = par_map_range(dim, |j| {
        let mut v = module.act_column(&diagonal, j)?;
        for t in &collapses {
            let tv = module.act_vec(t, &v)?;
            svec::add_scaled(&mut v, &tv, &minus_one);
        }
        Ok(v)
    })
    .into_iter()
    .collect();
    Ok(Matrix::from_columns(field, target_dim, columns?).kernel())
}

/// The least n with p_n F(X) = F(X), or `None` when the filtration
/// stabilizes strictly below F(X).
///
/// The stages are nested, so the dimension sequence grows until it either
/// reaches dim F(X) or repeats; the first repeat decides divergence. This
/// mirrors the stopping rule of
/// [`crate::coalgebra::Coalgebra::conilpotency_degree`], which the result
/// is compared against for exponential modules.
pub fn poly_conilpotency_degree(module: &dyn GropModule, x: usize) -> Result<Option<usize>> {
    let full = module.dim(x)?;
    let mut prev: Option<usize> = None;
    for n in 0..=full {
        let stage = poly_filtration(module, n, x)?.dim();
        if stage == full {
            return Ok(Some(n));
        }
        if prev == Some(stage) {
            return Ok(None);
        }
        prev = Some(stage);
    }
    Ok(None)
}

/// The slot-swap morphism `[x1|…|x_{i+1}|x_i|…|xm]_m` exchanging slots
/// i and i+1. Adjacent swaps generate the symmetric-group action on F(m).
fn adjacent_swap(m: usize, i: usize) -> GropMorphism {
    let mut words: Vec<FreeWord> = (1..=m).map(FreeWord::generator).collect();
    words.swap(i - 1, i);
    GropMorphism::new(m, words).expect("generator words are within range")
}

/// The primitive part Prim F(n) = ∩_{i=1}^{n} Ker F(θ-insertion at slot i),
/// with Prim F(0) = F(0).
///
/// The computed space is checked to be stable under the symmetric-group
/// action — a structural property of primitive parts that a correct module
/// cannot violate.
pub fn primitive_part(module: &dyn GropModule, n: usize) -> Result<Subspace> {
    let field = module.field();
    let dim = module.dim(n)?;
    if n == 0 {
        return Ok(Subspace::full(field, dim));
    }
    let mut prim = Subspace::full(field, dim);
    for i in 1..=n {
        let insertion = theta_insertion(field, n, i)?;
        prim = prim.intersect(&module.act_lin(&insertion)?.kernel())?;
    }
    for i in 1..n {
        let swapped = prim.map_by(&module.act(&adjacent_swap(n, i))?)?;
        if !prim.contains_subspace(&swapped) {
            return Err(Error::Validation(format!(
                "primitive part at object {n} is not stable under swapping slots {i} and {}",
                i + 1
            )));
        }
    }
    Ok(prim)
}

/// An associative word tuple applied to a module element — the J-action.
pub fn j_apply(module: &dyn GropModule, tuple: &AssWordTuple, v: &SparseVec) -> Result<SparseVec> {
    module.act_vec(&tuple.embed(), v)
}

/// The generated filtration stage q_n F(m): the span of everything the
/// associative word tuples of degree k ≤ n build out of Prim F(k).
///
/// Degree 0 contributes the image of F(0) under the unit insertions; for an
/// exponential module that is the line through 1^{⊗m}.
pub fn q_filtration(module: &dyn GropModule, n: usize, m: usize) -> Result<Subspace> {
    let field = module.field();
    let ambient = module.dim(m)?;
    let mut spanning: Vec<SparseVec> = Vec::new();
    for k in 0..=n {
        let prim = primitive_part(module, k)?;
        if prim.dim() == 0 {
            continue;
        }
        for tuple in ass_basis(k, m) {
            let f = tuple.embed();
            for b in prim.basis() {
                spanning.push(module.act_vec(&f, b)?);
            }
        }
    }
    Ok(Subspace::from_rows(field, ambient, spanning))
}

/// A Lie word tuple applied to a primitive element: the expansion of the
/// brackets into signed associative tuples, acted slot by slot.
///
/// Demanding `v ∈ Prim F(source)` is a genuine precondition — the bracket
/// action is only defined there — and the result landing back in the
/// primitive part at the target is a theorem, enforced as a validation.
pub fn lie_action(
    module: &dyn GropModule,
    l: &LieTupleMorphism,
    v: &SparseVec,
) -> Result<SparseVec> {
    let field = module.field();
    if !primitive_part(module, l.source())?.contains(v) {
        return Err(Error::Precondition(format!(
            "lie word tuples act on the primitive part at object {} only",
            l.source()
        )));
    }
    let mut out = SparseVec::new();
    for (tuple, c) in l.expand() {
        let term = module.act_vec(&tuple.embed(), v)?;
        svec::add_scaled(&mut out, &term, &field.from_integer(c));
    }
    if !primitive_part(module, l.target())?.contains(&out) {
        return Err(Error::Validation(format!(
            "lie action left the primitive part at object {}",
            l.target()
        )));
    }
    Ok(out)
}

/// One (X, n) comparison between the polynomial filtration of ℰ_H(X) and
/// the coradical filtration of H^{⊗X}.
#[derive(Debug, Clone)]
pub struct CoradPolyEntry {
    pub x: usize,
    pub n: usize,
    pub poly_dim: usize,
    pub corad_dim: usize,
    /// Exact subspace equality, not just matching dimensions.
    pub equal: bool,
}

/// Conilpotency read off both sides at one X.
#[derive(Debug, Clone)]
pub struct ConilpotencyEntry {
    pub x: usize,
    pub coalgebra_degree: Option<usize>,
    pub functor_degree: Option<usize>,
    pub agree: bool,
}

/// The verdict of [`corad_eq_poly_check`].
#[derive(Debug, Clone)]
pub struct CoradPolyReport {
    pub entries: Vec<CoradPolyEntry>,
    pub conilpotency: Vec<ConilpotencyEntry>,
}

impl CoradPolyReport {
    pub fn ok(&self) -> bool {
        self.entries.iter().all(|e| e.equal) && self.conilpotency.iter().all(|c| c.agree)
    }
}

/// Compares, for every X ≤ x_max and n ≤ n_max, the polynomial filtration
/// stage p_n ℰ_H(X) with the coradical stage P_n(H^{⊗X}) — two entirely
/// different computations: one routes columns through block collapses, the
/// other takes kernels of the reduced iterated comultiplications δ^{n+1}.
/// The conilpotency degrees derived from both filtrations are compared as
/// well.
pub fn corad_eq_poly_check(
    hopf: &HopfAlgebra,
    n_max: usize,
    x_max: usize,
) -> Result<CoradPolyReport> {
    let module = ExponentialModule::new(hopf.clone())?;
    let mut entries = Vec::new();
    let mut conilpotency = Vec::new();
    for x in 1..=x_max {
        let mut power = hopf.coalgebra().clone();
        for _ in 1..x {
            power = power.tensor(hopf.coalgebra())?;
        }
        let corad = power.coradical_filtration(n_max);
        for (n, stage) in corad.iter().enumerate() {
            let poly = poly_filtration(&module, n, x)?;
            entries.push(CoradPolyEntry {
                x,
                n,
                poly_dim: poly.dim(),
                corad_dim: stage.dim(),
                equal: poly == *stage,
            });
        }
        let coalgebra_degree = power.conilpotency_degree();
        let functor_degree = poly_conilpotency_degree(&module, x)?;
        conilpotency.push(ConilpotencyEntry {
            x,
            coalgebra_degree,
            functor_degree,
            agree: coalgebra_degree == functor_degree,
        });
    }
    Ok(CoradPolyReport {
        entries,
        conilpotency,
    })
}

/// One inner conjugation tested for triviality on ℰ_H.
#[derive(Debug, Clone)]
pub struct OuterEntry {
    /// The object n being conjugated.
    pub object: usize,
    /// The generator x_j doing the conjugating.
    pub generator: usize,
    pub trivial: bool,
}

/// The verdict of [`outer_check`].
#[derive(Debug, Clone)]
pub struct OuterReport {
    pub entries: Vec<OuterEntry>,
    pub all_trivial: bool,
    pub commutative: bool,
}

impl OuterReport {
    /// Inner conjugations act trivially exactly when H is commutative.
    pub fn ok(&self) -> bool {
        self.all_trivial == self.commutative
    }
}

/// Tests whether every inner conjugation `[x_j x_i x_j⁻¹]` at objects up to
/// `n_max` acts as the identity on ℰ_H, and records the comparison with
/// commutativity of H. Conjugation by x_j at object 1 freely reduces to the
/// identity morphism, so the first informative entries sit at object 2.
pub fn outer_check(hopf: &HopfAlgebra, n_max: usize) -> Result<OuterReport> {
    let module = ExponentialModule::new(hopf.clone())?;
    let commutative = hopf.bialgebra.is_commutative();
    let mut entries = Vec::new();
    for k in 1..=n_max {
        let id = Matrix::identity(module.field(), module.dim(k)?);
        for j in 1..=k {
            let conjugation = inner_conjugation(k, &FreeWord::generator(j))?;
            let action = module.act(&conjugation)?;
            entries.push(OuterEntry {
                object: k,
                generator: j,
                trivial: action == id,
            });
        }
    }
    let all_trivial = entries.iter().all(|e| e.trivial);
    Ok(OuterReport {
        entries,
        all_trivial,
        commutative,
    })
}
