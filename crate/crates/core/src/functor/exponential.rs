//! The exponential module of a cocommutative Hopf algebra.
//!
//! For a Hopf algebra H the exponential module ℰ_H sends the object n to
//! H^{⊗n} — one tensor slot per free-group generator — and a morphism
//! `[w1|…|wm]_n` to the map built from the Hopf structure: comultiply each
//! input slot as many times as its variable occurs in the words, push the
//! resulting legs through the antipode wherever the occurrence is inverted,
//! route every leg to the word position it occupies, and multiply each
//! word's legs back down to one slot. On `Δ = [x1|x1]_1`, `∇ = [x1x2]_2`,
//! `γ`, `η`, `ε` this recovers exactly Δ, ∇, S, η, ε of H — hence the name.
//!
//! Cocommutativity is what makes the middle step well defined: the legs of
//! Δ^{(k)}(a) are handed out to occurrences in reading order, and any other
//! order must give the same map for functoriality to survive free
//! reduction. Construction therefore rejects non-cocommutative H.
//!
//! Two independent evaluation strategies live here. `act_column` routes a
//! single basis tensor through the recipe above, never building anything of
//! size dim H^{⊗m}; it is what the filtration machinery streams through.
//! [`ExponentialModule::act_via_generators`] instead assembles the full
//! matrix as a product of Kronecker factors — one per structural generator
//! in a canonical factorization of the morphism. The two agree on every
//! morphism; the tests lean on that as a cross-check, since the
//! implementations share nothing but the Hopf tables.

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::grop::GropMorphism;
use crate::hopf::HopfAlgebra;
use crate::matrix::{svec, Matrix, SparseVec};
use crate::tensor::TensorIndex;

use super::module::{compute_act, ActCache, GropModule};

/// The exponential gr^op-module ℰ_H of a cocommutative Hopf algebra H:
/// ℰ_H(n) = H^{⊗n}.
#[derive(Debug)]
pub struct ExponentialModule {
    hopf: HopfAlgebra,
    cache: ActCache,
}

impl ExponentialModule {
    /// Wraps a Hopf algebra, refusing non-cocommutative ones — the action
    /// on general group words is not well defined without cocommutativity.
    pub fn new(hopf: HopfAlgebra) -> Result<Self> {
        if !hopf.bialgebra.is_cocommutative() {
            return Err(Error::NotCocommutative);
        }
        Ok(ExponentialModule {
            hopf,
            cache: ActCache::new(),
        })
    }

    /// The underlying Hopf algebra.
    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    /// How often each variable `x1..xn` occurs across the words, counting
    /// inverted letters; index 0 is unused.
    fn occurrence_counts(f: &GropMorphism) -> Vec<usize> {
        let mut counts = vec![0usize; f.source() + 1];
        for w in f.words() {
            for l in w.letters() {
                counts[l.var] += 1;
            }
        }
        counts
    }

    /// One column of ℰ_H(f), evaluated by routing.
    fn eval_column(&self, f: &GropMorphism, col: usize) -> Result<SparseVec> {
        let d = self.hopf.dim();
        let field = self.hopf.field();
        let coalg = self.hopf.coalgebra();
        let n = f.source();
        let input = TensorIndex::power(d, n).decode(col)?;
        let counts = Self::occurrence_counts(f);

        // Δ^{(k_v)} of each input slot, each term pre-split into its legs.
        // A variable that never occurs gets Δ^{(0)} = ε: a scalar with no
        // legs, absent entirely when ε kills the slot.
        let mut supports: Vec<Vec<(Vec<usize>, Scalar)>> = Vec::with_capacity(n);
        for v in 1..=n {
            let legs_index = TensorIndex::power(d, counts[v]);
            let spread = coalg.iterated_comul_vec(counts[v], &svec::unit(input[v - 1], field));
            let terms = spread
                .into_iter()
                .map(|(t, s)| Ok((legs_index.decode(t)?, s)))
                .collect::<Result<Vec<_>>>()?;
            supports.push(terms);
        }

        // Every way of picking one comultiplication term per variable.
        let mut combos: Vec<(Vec<usize>, Scalar)> = vec![(Vec::new(), field.one())];
        for support in &supports {
            let mut next = Vec::with_capacity(combos.len() * support.len());
            for (prefix, c) in &combos {
                for (term, (_, s)) in support.iter().enumerate() {
                    let mut picked = prefix.clone();
                    picked.push(term);
                    next.push((picked, c.mul(s)));
                }
            }
            combos = next;
        }

        let mut out = SparseVec::new();
        let one = field.one();
        for (choice, coeff) in combos {
            // Hand legs to occurrences in reading order — the same scan
            // that produced the counts — and multiply out each word.
            let mut next_leg = vec![0usize; n + 1];
            let mut acc: SparseVec = [(0usize, coeff)].into_iter().collect();
            for w in f.words() {
                let mut factors: Vec<SparseVec> = Vec::with_capacity(w.len());
                for l in w.letters() {
                    let leg = supports[l.var - 1][choice[l.var - 1]].0[next_leg[l.var]];
                    next_leg[l.var] += 1;
                    let e = svec::unit(leg, field);
                    factors.push(if l.exp > 0 {
                        e
                    } else {
                        self.hopf.antipode.apply(&e)
                    });
                }
                let slot = self.hopf.bialgebra.product_of(&factors)?;
                acc = svec::kronecker(&acc, &slot, d);
            }
            svec::add_scaled(&mut out, &acc, &one);
        }
        Ok(out)
    }

    /// μ^{(k)} : H^{⊗k} → H as a matrix (η for k = 0, the identity for
    /// k = 1), folded on the left like [`crate::hopf::Bialgebra::product_of`].
    fn iterated_mul(&self, k: usize) -> Matrix {
        let d = self.hopf.dim();
        let field = self.hopf.field();
        match k {
            0 => {
                let mut unit = Matrix::zero(field, d, 1);
                for (&i, s) in &self.hopf.coalgebra().unit {
                    unit.set(i, 0, s.clone());
                }
                unit
            }
            1 => Matrix::identity(field, d),
            _ => {
                let id = Matrix::identity(field, d);
                self.hopf
                    .bialgebra
                    .mul
                    .mul(&Matrix::kronecker(&self.iterated_mul(k - 1), &id))
            }
        }
    }

    /// The matrix of ℰ_H(f) assembled from a factorization through the
    /// structural generators:
    ///
    /// 1. comultiply each variable to its occurrence count (variable-major
    ///    legs),
    /// 2. apply the antipode on legs feeding inverted letters,
    /// 3. permute legs from variable-major order to word positions,
    /// 4. multiply each word's legs down to one slot.
    ///
    /// Independent of [`GropModule::act_column`]; used to cross-check it.
    /// Only total multiplications qualify — a windowed product table has
    /// silent zeros where the window was exceeded, which this assembly
    /// cannot distinguish from honest cancellation.
    pub fn act_via_generators(&self, f: &GropMorphism) -> Result<Matrix> {
        if self.hopf.bialgebra.window.is_some() {
            return Err(Error::RequiresTotalMul);
        }
        let d = self.hopf.dim();
        let field = self.hopf.field();
        let coalg = self.hopf.coalgebra();
        let n = f.source();
        let counts = Self::occurrence_counts(f);
        let legs_total: usize = counts[1..].iter().sum();

        let mut comuls = Matrix::identity(field, 1);
        for v in 1..=n {
            comuls = Matrix::kronecker(&comuls, &coalg.iterated_comul(counts[v]));
        }

        // Legs are laid out variable-major here, each variable's legs in
        // reading order; the permutation below fixes the interleaving
        // between variables.
        let id = Matrix::identity(field, d);
        let mut antipodes = Matrix::identity(field, 1);
        let mut exps: Vec<Vec<i8>> = vec![Vec::new(); n + 1];
        for w in f.words() {
            for l in w.letters() {
                exps[l.var].push(l.exp);
            }
        }
        for v in 1..=n {
            for &e in &exps[v] {
                antipodes =
                    Matrix::kronecker(&antipodes, if e > 0 { &id } else { &self.hopf.antipode });
            }
        }

        // sigma[variable-major leg] = global letter position of that
        // occurrence across the concatenated words.
        let mut offsets = vec![0usize; n + 2];
        for v in 1..=n {
            offsets[v + 1] = offsets[v] + counts[v];
        }
        let mut sigma = vec![0usize; legs_total];
        let mut seen = vec![0usize; n + 1];
        let mut position = 0usize;
        for w in f.words() {
            for l in w.letters() {
                sigma[offsets[l.var] + seen[l.var]] = position;
                seen[l.var] += 1;
                position += 1;
            }
        }
        let route = Matrix::permute_factors(field, &sigma, &vec![d; legs_total]);

        let mut muls = Matrix::identity(field, 1);
        for w in f.words() {
            muls = Matrix::kronecker(&muls, &self.iterated_mul(w.len()));
        }

        Ok(muls.mul(&route).mul(&antipodes).mul(&comuls))
    }
}

impl GropModule for ExponentialModule {
    fn field(&self) -> FieldSpec {
        self.hopf.field()
    }

    fn dim(&self, n: usize) -> Result<usize> {
        let exp = u32::try_from(n)
            .ok()
            .and_then(|n| self.hopf.dim().checked_pow(n));
        exp.ok_or_else(|| {
            Error::Validation(format!(
                "dim H^⊗{n} with dim H = {} overflows the index space",
                self.hopf.dim()
            ))
        })
    }

    fn act_column(&self, f: &GropMorphism, col: usize) -> Result<SparseVec> {
        self.eval_column(f, col)
    }

    fn act(&self, f: &GropMorphism) -> Result<Matrix> {
        let cached = self.cache.get_or_compute(f, || compute_act(self, f))?;
        Ok((*cached).clone())
    }
}
