//! Bialgebras and Hopf algebras on top of [`Coalgebra`], and the
//! interplay between their two filtrations.
//!
//! A [`Bialgebra`] adds a multiplication table ∇ : H⊗H → H to a coalgebra;
//! a [`HopfAlgebra`] adds an antipode S.  Infinite graded examples enter
//! through degree windows ([`TruncationWindow`]): the comultiplication of a
//! window is exact, but products may land above the degree bound.  Such
//! products are recorded in an overflow set at construction time and any
//! computation that needs one fails with [`Error::WindowOverflow`] — results
//! are never silently truncated, because a truncated product would break the
//! bialgebra compatibility this whole module exists to exploit.
//!
//! The filtration-side operations:
//!
//! * [`Bialgebra::primitive_power_filtration`] — the chain P₁(H)ⁿ spanned
//!   by n-fold products of elements of P₁(H);
//! * [`Bialgebra::is_good`] — whether P₁ⁿ = P_n up to a bound, with a
//!   witness vector on failure (P₁ⁿ ⊆ P_n always holds);
//! * [`Bialgebra::shuffle_compat_check`] — δ^{n+m}(ab) = δⁿ(a) ⧢ δᵐ(b)
//!   for a ∈ P_n, b ∈ P_m;
//! * [`Bialgebra::symmetry_and_goodness_checks`] — Σ_n-invariance of
//!   δⁿ(P_n), its containment in Prim(H)^{⊗n}, and the factorization
//!   identity f_n∘h_n = s_n (iterated product of primitives followed by δⁿ
//!   equals the unnormalized symmetrization);
//! * [`HopfAlgebra::prim_closure_checks`] — Prim(H) closed under
//!   commutators and, in characteristic p, under p-th powers.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::coalgebra::{Coalgebra, TruncationWindow, ValidationReport};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::{svec, Matrix, SparseVec};
use crate::subspace::Subspace;
use crate::tensor::TensorIndex;

/// A bialgebra: a coalgebra plus an associative multiplication ∇ (d × d²)
/// whose unit is the coaugmentation 1_H, with Δ and ε algebra maps.
///
/// For windowed algebras, basis pairs whose product would exceed the degree
/// bound form the `overflow` set; their columns in `mul` are empty and any
/// product touching them is an error.
#[derive(Debug, Clone)]
pub struct Bialgebra {
    pub coalgebra: Coalgebra,
    pub mul: Matrix,
    pub window: Option<TruncationWindow>,
    overflow: BTreeSet<(usize, usize)>,
    /// Column j·d+k of ∇, i.e. the coordinates of e_j·e_k, precomputed.
    mul_cols: Vec<SparseVec>,
}

impl Bialgebra {
    /// Assembles a bialgebra, checking table shapes and window coherence.
    /// Axioms are checked by [`Bialgebra::validate`], not here.
    ///
    /// With a window present the coalgebra must be graded; every basis pair
    /// whose degrees sum past the bound goes into the overflow set and must
    /// have an empty product column.
    pub fn new(coalgebra: Coalgebra, mul: Matrix, window: Option<TruncationWindow>) -> Result<Self> {
        let d = coalgebra.dim();
        if mul.rows() != d || mul.cols() != d * d {
            return Err(Error::DimensionMismatch {
                context: "multiplication table",
                expected: d * d,
                got: mul.cols(),
            });
        }
        if mul.field() != coalgebra.field {
            return Err(Error::FieldMismatch(mul.field(), coalgebra.field));
        }
        let mut overflow = BTreeSet::new();
        if let Some(w) = &window {
            if !w.comultiplication_exact {
                return Err(Error::Validation(
                    "truncation windows with inexact comultiplication are not supported".into(),
                ));
            }
            let degrees = coalgebra.degrees.as_ref().ok_or_else(|| {
                Error::Validation("a windowed bialgebra must carry a basis grading".into())
            })?;
            for i in 0..d {
                for j in 0..d {
                    if degrees[i] + degrees[j] > w.max_degree {
                        overflow.insert((i, j));
                    }
                }
            }
            if w.multiplication_exact != overflow.is_empty() {
                return Err(Error::Validation(
                    "window exactness flag disagrees with the basis degrees".into(),
                ));
            }
        }
        let mut mul_cols = vec![SparseVec::new(); d * d];
        for (row, col, s) in mul.iter_entries() {
            mul_cols[col].insert(row, s.clone());
        }
        for &(i, j) in &overflow {
            if !mul_cols[i * d + j].is_empty() {
                return Err(Error::Validation(format!(
                    "product column for overflow pair ({}, {}) must be empty",
                    coalgebra.labels[i], coalgebra.labels[j]
                )));
            }
        }
        Ok(Bialgebra {
            coalgebra,
            mul,
            window,
            overflow,
            mul_cols,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.coalgebra.field
    }

    pub fn dim(&self) -> usize {
        self.coalgebra.dim()
    }

    pub fn labels(&self) -> &[String] {
        &self.coalgebra.labels
    }

    /// Basis pairs whose product exceeds the window.
    pub fn overflow_pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.overflow
    }

    /// The product of two coordinate vectors. Fails with
    /// [`Error::WindowOverflow`] if any contributing basis pair overflows
    /// the window.
    pub fn mul_vec(&self, a: &SparseVec, b: &SparseVec) -> Result<SparseVec> {
        let d = self.dim();
        let mut out = SparseVec::new();
        for (&i, sa) in a {
            for (&j, sb) in b {
                let c = sa.mul(sb);
                if c.is_zero() {
                    continue;
                }
                if self.overflow.contains(&(i, j)) {
                    return Err(self.overflow_error(i, j));
                }
                svec::add_scaled(&mut out, &self.mul_cols[i * d + j], &c);
            }
        }
        Ok(out)
    }

    fn overflow_error(&self, i: usize, j: usize) -> Error {
        Error::WindowOverflow {
            left: self.coalgebra.labels[i].clone(),
            right: self.coalgebra.labels[j].clone(),
            max_degree: self.window.map(|w| w.max_degree).unwrap_or(0),
        }
    }

    /// Left-iterated product v₁·v₂·…·v_k (the empty product is 1_H).
    pub fn product_of(&self, vs: &[SparseVec]) -> Result<SparseVec> {
        let mut acc = self.coalgebra.unit.clone();
        for v in vs {
            acc = self.mul_vec(&acc, v)?;
        }
        Ok(acc)
    }

    /// Checks all bialgebra axioms. The report contains the coalgebra
    /// failures first, then multiplication-side failures; windowed algebras
    /// are checked on the triples/pairs whose total degree stays inside the
    /// window (outside it there is nothing to check — both sides of each
    /// axiom are undefined there).
    pub fn validate(&self) -> Result<ValidationReport> {
        let mut report = self.coalgebra.validate()?;
        let d = self.dim();
        let degrees = self.coalgebra.degrees.as_ref();
        let max_deg = self.window.map(|w| w.max_degree);

        // Grading of ∇: nonzero products of homogeneous elements are
        // homogeneous of the summed degree.
        if let Some(deg) = degrees {
            let bad = self
                .mul
                .iter_entries()
                .find(|(row, col, _)| deg[col / d] + deg[col % d] != deg[*row]);
            if let Some((_, col, _)) = bad {
                report.fail(
                    "grading-mul",
                    Some(format!(
                        "{}·{}",
                        self.coalgebra.labels[col / d],
                        self.coalgebra.labels[col % d]
                    )),
                );
            }
        }

        let in_window = |total: usize| match (max_deg, degrees) {
            (Some(max), Some(_)) => total <= max,
            _ => true,
        };
        let deg_of = |i: usize| degrees.map(|deg| deg[i]).unwrap_or(0);

        // Associativity (e_i·e_j)·e_k = e_i·(e_j·e_k) on in-window triples.
        'assoc: for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    if !in_window(deg_of(i) + deg_of(j) + deg_of(k)) {
                        continue;
                    }
                    let left = self.mul_vec(&self.mul_cols[i * d + j].clone(), &svec::unit(k, self.field()))?;
                    let right = self.mul_vec(&svec::unit(i, self.field()), &self.mul_cols[j * d + k].clone())?;
                    if left != right {
                        report.fail(
                            "associativity",
                            Some(format!(
                                "{}·{}·{}",
                                self.labels()[i],
                                self.labels()[j],
                                self.labels()[k]
                            )),
                        );
                        break 'assoc;
                    }
                }
            }
        }

        // Unit law 1·a = a = a·1 (degree-0 unit never overflows).
        for j in 0..d {
            let ej = svec::unit(j, self.field());
            if self.mul_vec(&self.coalgebra.unit, &ej)? != ej
                || self.mul_vec(&ej, &self.coalgebra.unit)? != ej
            {
                report.fail("unit-law", Some(self.labels()[j].clone()));
                break;
            }
        }

        // Δ(a·b) = Δ(a)·Δ(b) and ε(a·b) = ε(a)ε(b) on in-window pairs.
        let comul_cols = self.comul_columns();
        'compat: for i in 0..d {
            for j in 0..d {
                if !in_window(deg_of(i) + deg_of(j)) {
                    continue;
                }
                let prod = &self.mul_cols[i * d + j];
                let lhs = self.coalgebra.comul.apply(prod);
                let mut rhs = SparseVec::new();
                for (a, b, s1) in &comul_cols[i] {
                    for (c, e, s2) in &comul_cols[j] {
                        let ac = self.mul_cols[a * d + c].clone();
                        let be = self.mul_cols[b * d + e].clone();
                        let term = svec::kronecker(&ac, &be, d);
                        svec::add_scaled(&mut rhs, &term, &s1.mul(s2));
                    }
                }
                if lhs != rhs {
                    report.fail(
                        "bialgebra-compat-comul",
                        Some(format!("{}·{}", self.labels()[i], self.labels()[j])),
                    );
                    break 'compat;
                }
                let eps_prod = self.coalgebra.counit_of(prod);
                let eps_sep = self
                    .coalgebra
                    .counit
                    .get(0, i)
                    .mul(&self.coalgebra.counit.get(0, j));
                if eps_prod != eps_sep {
                    report.fail(
                        "bialgebra-compat-counit",
                        Some(format!("{}·{}", self.labels()[i], self.labels()[j])),
                    );
                    break 'compat;
                }
            }
        }

        Ok(report)
    }

    fn comul_columns(&self) -> Vec<Vec<(usize, usize, Scalar)>> {
        let d = self.dim();
        let mut cols = vec![Vec::new(); d];
        for (row, col, s) in self.coalgebra.comul.iter_entries() {
            cols[col].push((row / d, row % d, s.clone()));
        }
        cols
    }

    /// ∇∘τ = ∇, checked pairwise (overflow pairs are symmetric, so both
    /// sides are undefined together and impose nothing).
    pub fn is_commutative(&self) -> bool {
        let d = self.dim();
        for i in 0..d {
            for j in 0..i {
                if self.overflow.contains(&(i, j)) {
                    continue;
                }
                if self.mul_cols[i * d + j] != self.mul_cols[j * d + i] {
                    return false;
                }
            }
        }
        true
    }

    /// τ∘Δ = Δ.
    pub fn is_cocommutative(&self) -> bool {
        self.coalgebra.is_cocommutative()
    }

    /// The chain P₁(H)⁰ ⊆ P₁(H)¹ ⊆ … ⊆ P₁(H)^{n_max} of spans of at most
    /// n-fold products of elements of P₁(H) = Ker δ².  P₁(H)⁰ = span{1_H}.
    ///
    /// Because 1_H ∈ P₁(H), each step is P₁ⁿ = span{a·b : a ∈ P₁ⁿ⁻¹,
    /// b ∈ P₁} and the chain increases.
    pub fn primitive_power_filtration(&self, n_max: usize) -> Result<Vec<Subspace>> {
        let d = self.dim();
        let f = self.field();
        let mut chain = Vec::with_capacity(n_max + 1);
        chain.push(Subspace::from_rows(f, d, vec![self.coalgebra.unit.clone()]));
        if n_max == 0 {
            return Ok(chain);
        }
        let p1 = self.coalgebra.delta_map(2).kernel();
        for n in 1..=n_max {
            let prev = &chain[n - 1];
            let mut products = Vec::new();
            for a in prev.basis() {
                for b in p1.basis() {
                    products.push(self.mul_vec(a, b)?);
                }
            }
            chain.push(Subspace::from_rows(f, d, products));
        }
        Ok(chain)
    }

    /// Whether P₁(H)ⁿ = P_n(H) for all n ≤ n_max.  On failure reports the
    /// least failing n and a vector of P_n(H) outside P₁(H)ⁿ (the inclusion
    /// P₁ⁿ ⊆ P_n always holds, so a failure is a proper inclusion).
    pub fn is_good(&self, n_max: usize) -> Result<GoodnessResult> {
        let corad = self.coalgebra.coradical_filtration(n_max);
        let powers = self.primitive_power_filtration(n_max)?;
        for n in 0..=n_max {
            if powers[n] != corad[n] {
                let witness = corad[n]
                    .basis()
                    .iter()
                    .find(|v| !powers[n].contains(v))
                    .cloned();
                return Ok(GoodnessResult {
                    good: false,
                    failing_n: Some(n),
                    witness,
                });
            }
        }
        Ok(GoodnessResult {
            good: true,
            failing_n: None,
            witness: None,
        })
    }

    /// Verifies δ^{n+m}(a·b) = δⁿ(a) ⧢ δᵐ(b) for a ∈ P_n(H), b ∈ P_m(H),
    /// where ⧢ interleaves tensor components over all (n,m)-shuffles.
    /// Membership preconditions are enforced.
    pub fn shuffle_compat_check(
        &self,
        a: &SparseVec,
        b: &SparseVec,
        n: usize,
        m: usize,
    ) -> Result<bool> {
        if !self.coalgebra.delta_map(n + 1).kernel().contains(a) {
            return Err(Error::Precondition(format!("first argument is not in P_{n}")));
        }
        if !self.coalgebra.delta_map(m + 1).kernel().contains(b) {
            return Err(Error::Precondition(format!("second argument is not in P_{m}")));
        }
        let ab = self.mul_vec(a, b)?;
        let lhs = self.coalgebra.delta_vec(n + m, &ab);
        let rhs = shuffle_tensors(
            self.dim(),
            &self.coalgebra.delta_vec(n, a),
            n,
            &self.coalgebra.delta_vec(m, b),
            m,
        )?;
        Ok(lhs == rhs)
    }

    /// Per-n structural checks around the two filtrations:
    ///
    /// * is δⁿ(P_n(H)) fixed by the Σ_n-action on tensor factors?
    /// * does δⁿ(P_n(H)) land inside Prim(H)^{⊗n}?
    /// * does δⁿ∘h_n equal the unnormalized symmetrization s_n on
    ///   Prim(H)^{⊗n}, where h_n is the iterated product?
    pub fn symmetry_and_goodness_checks(&self, n_max: usize) -> Result<SymmetryReport> {
        let d = self.dim();
        let prim = self.coalgebra.primitives();
        let prim_basis: Vec<SparseVec> = prim.basis().to_vec();
        let mut entries = Vec::new();
        for n in 1..=n_max {
            let pn = self.coalgebra.delta_map(n + 1).kernel();
            let deltas: Vec<SparseVec> = pn
                .basis()
                .iter()
                .map(|v| self.coalgebra.delta_vec(n, v))
                .collect();

            // Σ_n-invariance: adjacent transpositions generate Σ_n.
            let mut symmetric = true;
            'sym: for v in &deltas {
                for i in 0..n.saturating_sub(1) {
                    let mut sigma: Vec<usize> = (0..n).collect();
                    sigma.swap(i, i + 1);
                    if permute_tensor_vec(d, &sigma, v)? != *v {
                        symmetric = false;
                        break 'sym;
                    }
                }
            }

            // δⁿ(P_n) ⊆ Prim^{⊗n}: check against the Kronecker subspace.
            let mut prim_power = Subspace::from_rows(self.field(), 1, vec![svec::unit(0, self.field())]);
            for _ in 0..n {
                prim_power = Subspace::kronecker(&prim_power, &prim);
            }
            let in_prim_power = deltas.iter().all(|v| prim_power.contains(v));

            // f_n∘h_n = s_n on the full basis of Prim^{⊗n}: all ordered
            // tuples, since the product side is not symmetric a priori.
            let mut factorization = true;
            'fact: for combo in std::iter::repeat(0..prim_basis.len())
                .take(n)
                .multi_cartesian_product()
            {
                let factors: Vec<SparseVec> =
                    combo.iter().map(|&i| prim_basis[i].clone()).collect();
                let product = self.product_of(&factors)?;
                let lhs = self.coalgebra.delta_vec(n, &product);
                let mut x = svec::unit(0, self.field());
                for v in &factors {
                    x = svec::kronecker(&x, v, d);
                }
                let mut rhs = SparseVec::new();
                for sigma in (0..n).permutations(n) {
                    let permuted = permute_tensor_vec(d, &sigma, &x)?;
                    svec::add_scaled(&mut rhs, &permuted, &self.field().one());
                }
                if lhs != rhs {
                    factorization = false;
                    break 'fact;
                }
            }

            entries.push(SymmetryEntry {
                n,
                delta_pn_symmetric: symmetric,
                delta_pn_in_prim_power: in_prim_power,
                factorization_equals_symmetrization: factorization,
            });
        }
        Ok(SymmetryReport { entries })
    }
}

/// Result of the goodness decision P₁ⁿ = P_n for n ≤ n_max.
#[derive(Debug, Clone)]
pub struct GoodnessResult {
    pub good: bool,
    pub failing_n: Option<usize>,
    /// A vector of P_n(H) \ P₁(H)ⁿ at the least failing n.
    pub witness: Option<SparseVec>,
}

/// One row of [`Bialgebra::symmetry_and_goodness_checks`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryEntry {
    pub n: usize,
    pub delta_pn_symmetric: bool,
    pub delta_pn_in_prim_power: bool,
    pub factorization_equals_symmetrization: bool,
}

#[derive(Debug, Clone)]
pub struct SymmetryReport {
    pub entries: Vec<SymmetryEntry>,
}

/// A Hopf algebra: a bialgebra with an antipode S satisfying
/// ∇∘(S⊗id)∘Δ = η∘ε = ∇∘(id⊗S)∘Δ.
#[derive(Debug, Clone)]
pub struct HopfAlgebra {
    pub bialgebra: Bialgebra,
    pub antipode: Matrix,
}

impl HopfAlgebra {
    pub fn new(bialgebra: Bialgebra, antipode: Matrix) -> Result<Self> {
        let d = bialgebra.dim();
        if antipode.rows() != d || antipode.cols() != d {
            return Err(Error::DimensionMismatch {
                context: "antipode table",
                expected: d,
                got: antipode.rows(),
            });
        }
        if antipode.field() != bialgebra.field() {
            return Err(Error::FieldMismatch(antipode.field(), bialgebra.field()));
        }
        Ok(HopfAlgebra { bialgebra, antipode })
    }

    pub fn field(&self) -> FieldSpec {
        self.bialgebra.field()
    }

    pub fn dim(&self) -> usize {
        self.bialgebra.dim()
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.bialgebra.coalgebra
    }

    /// Bialgebra axioms plus the antipode laws.
    pub fn validate(&self) -> Result<ValidationReport> {
        let mut report = self.bialgebra.validate()?;
        let d = self.dim();
        let comul_cols = self.bialgebra.comul_columns();
        let c = self.coalgebra();
        for j in 0..d {
            let target = svec::scaled(&c.unit, &c.counit.get(0, j));
            let mut left = SparseVec::new();
            let mut right = SparseVec::new();
            let mut failed = false;
            for (l, r, s) in &comul_cols[j] {
                let sl = self.antipode.apply(&svec::unit(*l, self.field()));
                let sr = self.antipode.apply(&svec::unit(*r, self.field()));
                match (
                    self.bialgebra.mul_vec(&sl, &svec::unit(*r, self.field())),
                    self.bialgebra.mul_vec(&svec::unit(*l, self.field()), &sr),
                ) {
                    (Ok(lv), Ok(rv)) => {
                        svec::add_scaled(&mut left, &lv, s);
                        svec::add_scaled(&mut right, &rv, s);
                    }
                    _ => {
                        failed = true;
                        break;
                    }
                }
            }
            if failed {
                report.fail("antipode-window", Some(c.labels[j].clone()));
                continue;
            }
            if left != target {
                report.fail("antipode-left", Some(c.labels[j].clone()));
            }
            if right != target {
                report.fail("antipode-right", Some(c.labels[j].clone()));
            }
        }
        Ok(report)
    }

    /// Prim(H) closure under the commutator bracket and (in characteristic
    /// p) under p-th powers.
    pub fn prim_closure_checks(&self) -> Result<ClosureReport> {
        let prim = self.coalgebra().primitives();
        let basis: Vec<SparseVec> = prim.basis().to_vec();
        let mut bracket_closed = true;
        let mut bracket_witness = None;
        'outer: for a in &basis {
            for b in &basis {
                let ab = self.bialgebra.mul_vec(a, b)?;
                let ba = self.bialgebra.mul_vec(b, a)?;
                let mut bracket = ab;
                svec::add_scaled(&mut bracket, &ba, &self.field().one().neg());
                if !prim.contains(&bracket) {
                    bracket_closed = false;
                    bracket_witness = Some(bracket);
                    break 'outer;
                }
            }
        }
        let p = self.field().characteristic();
        let (p_power_closed, p_power_witness) = if p == 0 {
            (None, None)
        } else {
            let mut closed = true;
            let mut witness = None;
            for a in &basis {
                let mut pw = a.clone();
                for _ in 1..p {
                    pw = self.bialgebra.mul_vec(&pw, a)?;
                }
                if !prim.contains(&pw) {
                    closed = false;
                    witness = Some(pw);
                    break;
                }
            }
            (Some(closed), witness)
        };
        Ok(ClosureReport {
            bracket_closed,
            bracket_witness,
            p_power_closed,
            p_power_witness,
        })
    }
}

/// Result of [`HopfAlgebra::prim_closure_checks`].
#[derive(Debug, Clone)]
pub struct ClosureReport {
    pub bracket_closed: bool,
    pub bracket_witness: Option<SparseVec>,
    /// `None` in characteristic zero.
    pub p_power_closed: Option<bool>,
    pub p_power_witness: Option<SparseVec>,
}

/// Applies a permutation of tensor factors to a sparse vector of H^{⊗n}
/// (all factors of dimension `d`): input leg k moves to output slot
/// `sigma[k]`.
pub fn permute_tensor_vec(d: usize, sigma: &[usize], v: &SparseVec) -> Result<SparseVec> {
    let n = sigma.len();
    let idx = TensorIndex::power(d, n);
    let mut out = SparseVec::new();
    for (&flat, s) in v {
        let parts = idx.decode(flat)?;
        let mut moved = vec![0usize; n];
        for k in 0..n {
            moved[sigma[k]] = parts[k];
        }
        svec::add_entry(&mut out, idx.encode(&moved)?, s);
    }
    Ok(out)
}

/// The shuffle product of tensor components: for u ∈ H^{⊗n}, v ∈ H^{⊗m},
/// the sum over all (n,m)-shuffles of the interleaved tensor u⊗v in
/// H^{⊗(n+m)}.
pub fn shuffle_tensors(
    d: usize,
    u: &SparseVec,
    n: usize,
    v: &SparseVec,
    m: usize,
) -> Result<SparseVec> {
    let idx_u = TensorIndex::power(d, n);
    let idx_v = TensorIndex::power(d, m);
    let idx_out = TensorIndex::power(d, n + m);
    let mut out = SparseVec::new();
    for (&fu, su) in u {
        let pu = idx_u.decode(fu)?;
        for (&fv, sv) in v {
            let pv = idx_v.decode(fv)?;
            let coeff = su.mul(sv);
            for positions in (0..n + m).combinations(n) {
                let mut parts = vec![usize::MAX; n + m];
                for (k, &pos) in positions.iter().enumerate() {
                    parts[pos] = pu[k];
                }
                let mut vi = 0;
                for slot in parts.iter_mut() {
                    if *slot == usize::MAX {
                        *slot = pv[vi];
                        vi += 1;
                    }
                }
                svec::add_entry(&mut out, idx_out.encode(&parts)?, &coeff);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders;

    #[test]
    fn permute_and_shuffle_helpers() {
        let f = FieldSpec::Q;
        // u = e0⊗e1 in dim 2; swap → e1⊗e0.
        let mut u = SparseVec::new();
        u.insert(1, f.one()); // (0,1)
        let swapped = permute_tensor_vec(2, &[1, 0], &u).unwrap();
        assert_eq!(swapped.keys().copied().collect::<Vec<_>>(), vec![2]);

        // [a] ⧢ [b] = a⊗b + b⊗a (indices 0, 1 in dim 2).
        let a = svec::unit(0, f);
        let b = svec::unit(1, f);
        let sh = shuffle_tensors(2, &a, 1, &b, 1).unwrap();
        assert_eq!(sh.get(&1), Some(&f.one())); // a⊗b
        assert_eq!(sh.get(&2), Some(&f.one())); // b⊗a

        // [a] ⧢ [a] = 2 a⊗a.
        let sh2 = shuffle_tensors(2, &a, 1, &a, 1).unwrap();
        assert_eq!(sh2.get(&0), Some(&f.from_integer(2)));

        // Empty shuffles multiply scalars.
        let scalar = svec::unit(0, f);
        let s0 = shuffle_tensors(2, &scalar, 0, &scalar, 0).unwrap();
        assert_eq!(s0, scalar);
    }

    #[test]
    fn z2_group_algebra_is_a_bicommutative_hopf_algebra() {
        let h = builders::group_algebra(&builders::FiniteGroupTable::cyclic(2), FieldSpec::Q)
            .unwrap();
        let report = h.validate().unwrap();
        assert!(report.passed(), "failures: {:?}", report.failures);
        assert!(h.bialgebra.is_commutative());
        assert!(h.bialgebra.is_cocommutative());
    }

    #[test]
    fn window_overflow_is_an_error_not_a_truncation() {
        let b = builders::polynomial_window(FieldSpec::Q, 2).unwrap();
        let t = svec::unit(1, b.field());
        let t2 = svec::unit(2, b.field());
        // t·t = t² stays inside; t·t² overflows.
        assert_eq!(b.mul_vec(&t, &t).unwrap(), t2);
        match b.mul_vec(&t, &t2) {
            Err(Error::WindowOverflow { max_degree, .. }) => assert_eq!(max_degree, 2),
            other => panic!("expected overflow, got {other:?}"),
        }
    }
}
