//! Coaugmented coalgebras presented by structure constants.
//!
//! A [`Coalgebra`] is a finite-dimensional 𝕜-module with a chosen basis,
//! a comultiplication Δ : H → H⊗H and counit ε : H → 𝕜 given by sparse
//! tables, and a coaugmentation η : 𝕜 → H singled out by the coordinate
//! vector of 1_H.  On top of the validated axioms this module computes the
//! derived structure the filtration theory runs on:
//!
//! * the reduced projection e_H = id − η∘ε,
//! * iterated comultiplications Δ⁽ⁿ⁾ (left-iterated bracketing),
//! * the reduced iterates δⁿ = e_H^{⊗n}∘Δ⁽ⁿ⁾,
//! * the coradical filtration P_n(H) = Ker δ^{n+1},
//! * primitives Prim(H) = Ker ε ∩ Ker δ²,
//! * conilpotency, tensor products, and the insertion maps (−)_S behind
//!   the subset decomposition Δ⁽ⁿ⁾(a) = Σ_{S⊆n̲} δ^{|S|}(a)_S.
//!
//! # Scale
//!
//! δⁿ lands in H^{⊗n}, whose dimension dⁿ grows fast; the matrices are
//! nonetheless extremely sparse.  Everything here is computed column by
//! column, expanding one tensor leg at a time and projecting finished legs
//! through e_H immediately, so the cost tracks the number of nonzero
//! entries rather than dⁿ.  Kernels of the resulting tall matrices are
//! taken via [`Matrix::kernel`], which only ever looks at nonzero rows.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::matrix::{svec, Matrix, SparseVec};
use crate::par::par_map_range;
use crate::subspace::Subspace;
use crate::tensor::TensorIndex;

/// A finite degree window onto a graded (co)algebra.
///
/// The graded examples (polynomial, shuffle, tensor bialgebras) are infinite
/// dimensional; we work with their degree ≤ `max_degree` part.  Since Δ
/// preserves total degree in all of them, the window is an honest
/// subcoalgebra and every coalgebra-side answer is exact
/// (`comultiplication_exact` is always true).  Multiplication can leave the
/// window; builders set `multiplication_exact = false` in that case and
/// products overflowing the window are reported as errors, never truncated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TruncationWindow {
    pub max_degree: usize,
    pub comultiplication_exact: bool,
    pub multiplication_exact: bool,
}

impl TruncationWindow {
    /// A window whose comultiplication is exact (the only kind we allow).
    pub fn new(max_degree: usize, multiplication_exact: bool) -> Self {
        TruncationWindow {
            max_degree,
            comultiplication_exact: true,
            multiplication_exact,
        }
    }
}

/// One failed axiom, with the basis element that witnesses the failure
/// when the check is local enough to name one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomFailure {
    pub axiom: String,
    pub witness: Option<String>,
}

/// Outcome of a structure validation: the list of axioms that failed.
#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub failures: Vec<AxiomFailure>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Collapses the report into an error naming the first broken axiom —
    /// for callers that treat any failure as fatal (ingestion, CLI).
    pub fn into_result(self) -> Result<()> {
        match self.failures.into_iter().next() {
            None => Ok(()),
            Some(AxiomFailure {
                axiom,
                witness: Some(w),
            }) => Err(Error::Validation(format!("{axiom} fails at {w}"))),
            Some(AxiomFailure { axiom, .. }) => {
                Err(Error::Validation(format!("{axiom} fails")))
            }
        }
    }

    pub(crate) fn fail(&mut self, axiom: &str, witness: Option<String>) {
        self.failures.push(AxiomFailure {
            axiom: axiom.to_string(),
            witness,
        });
    }
}

/// A coaugmented coalgebra (H, Δ, ε, η) with a distinguished basis.
///
/// `comul` is the d²×d matrix of Δ under the tensor ordering of
/// [`TensorIndex`] (left factor most significant), `counit` the 1×d matrix
/// of ε, and `unit` the coordinate vector of 1_H = η(1).  `degrees`, when
/// present, grades the basis; Δ must then respect total degree.
#[derive(Debug, Clone)]
pub struct Coalgebra {
    pub field: FieldSpec,
    pub labels: Vec<String>,
    pub comul: Matrix,
    pub counit: Matrix,
    pub unit: SparseVec,
    pub degrees: Option<Vec<usize>>,
}

impl Coalgebra {
    /// Assembles a coalgebra after checking that the tables have coherent
    /// shapes.  Axioms are *not* checked here; see [`Coalgebra::validate`].
    pub fn new(
        field: FieldSpec,
        labels: Vec<String>,
        comul: Matrix,
        counit: Matrix,
        unit: SparseVec,
        degrees: Option<Vec<usize>>,
    ) -> Result<Self> {
        let c = Coalgebra {
            field,
            labels,
            comul,
            counit,
            unit,
            degrees,
        };
        c.check_shapes()?;
        Ok(c)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    fn check_shapes(&self) -> Result<()> {
        let d = self.dim();
        if self.comul.rows() != d * d || self.comul.cols() != d {
            return Err(Error::DimensionMismatch {
                context: "comultiplication table",
                expected: d * d,
                got: self.comul.rows(),
            });
        }
        if self.counit.rows() != 1 || self.counit.cols() != d {
            return Err(Error::DimensionMismatch {
                context: "counit table",
                expected: d,
                got: self.counit.cols(),
            });
        }
        if let Some(&bad) = self.unit.keys().find(|&&i| i >= d) {
            return Err(Error::IndexOutOfRange {
                context: "unit vector",
                index: bad,
                bound: d,
            });
        }
        if self.unit.is_empty() {
            return Err(Error::Validation("unit vector is zero".into()));
        }
        if let Some(deg) = &self.degrees {
            if deg.len() != d {
                return Err(Error::DimensionMismatch {
                    context: "degree list",
                    expected: d,
                    got: deg.len(),
                });
            }
        }
        let mut seen = std::collections::BTreeSet::new();
        for l in &self.labels {
            if !seen.insert(l) {
                return Err(Error::Validation(format!("duplicate basis label {l:?}")));
            }
        }
        if self.comul.field() != self.field {
            return Err(Error::FieldMismatch(self.comul.field(), self.field));
        }
        if self.counit.field() != self.field {
            return Err(Error::FieldMismatch(self.counit.field(), self.field));
        }
        Ok(())
    }

    /// Checks the coalgebra axioms and returns a report naming each failed
    /// axiom together with a witness basis element where one exists.
    /// Structural defects (mismatched table shapes) surface as an error
    /// before any axiom is attempted.
    pub fn validate(&self) -> Result<ValidationReport> {
        self.check_shapes()?;
        let d = self.dim();
        let id = Matrix::identity(self.field, d);
        let mut report = ValidationReport::default();

        // (Δ⊗id)∘Δ = (id⊗Δ)∘Δ.
        let left = Matrix::kronecker(&self.comul, &id).mul(&self.comul);
        let right = Matrix::kronecker(&id, &self.comul).mul(&self.comul);
        if let Some(j) = first_bad_column(&left.sub(&right)) {
            report.fail("coassociativity", Some(self.labels[j].clone()));
        }

        // (ε⊗id)∘Δ = id = (id⊗ε)∘Δ.
        let lcu = Matrix::kronecker(&self.counit, &id).mul(&self.comul).sub(&id);
        if let Some(j) = first_bad_column(&lcu) {
            report.fail("counit-left", Some(self.labels[j].clone()));
        }
        let rcu = Matrix::kronecker(&id, &self.counit).mul(&self.comul).sub(&id);
        if let Some(j) = first_bad_column(&rcu) {
            report.fail("counit-right", Some(self.labels[j].clone()));
        }

        // Δ(1_H) = 1_H⊗1_H and ε(1_H) = 1.
        let comul_unit = self.comul.apply(&self.unit);
        let unit_sq = svec::kronecker(&self.unit, &self.unit, d);
        if comul_unit != unit_sq {
            report.fail("coaugmentation-comul", None);
        }
        if !self.counit_of(&self.unit).is_one() {
            report.fail("coaugmentation-counit", None);
        }

        // Grading: Δ(deg k) ⊆ ⊕_{i+j=k} deg i ⊗ deg j, and 1_H in degree 0.
        if let Some(deg) = &self.degrees {
            let bad = self
                .comul
                .iter_entries()
                .find(|(row, col, _)| deg[row / d] + deg[row % d] != deg[*col]);
            if let Some((_, col, _)) = bad {
                report.fail("grading-comul", Some(self.labels[col].clone()));
            }
            if let Some((&i, _)) = self.unit.iter().find(|(&i, _)| deg[i] != 0) {
                report.fail("grading-unit", Some(self.labels[i].clone()));
            }
        }

        Ok(report)
    }

    /// ε applied to a coordinate vector, as a scalar.
    pub fn counit_of(&self, v: &SparseVec) -> crate::field::Scalar {
        self.counit
            .apply(v)
            .remove(&0)
            .unwrap_or_else(|| self.field.zero())
    }

    /// τ∘Δ = Δ, checked entrywise on the comultiplication table.
    pub fn is_cocommutative(&self) -> bool {
        let d = self.dim();
        for (row, col, s) in self.comul.iter_entries() {
            let (l, r) = (row / d, row % d);
            if self.comul.get(r * d + l, col) != *s {
                return false;
            }
        }
        true
    }

    /// The reduced projection e_H = id − η∘ε.  Idempotent, kills 1_H,
    /// projects onto the reduced part Ker ε.
    pub fn e_map(&self) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::identity(self.field, d);
        // Subtract the rank-one map a ↦ ε(a)·1_H.
        for (&i, ui) in &self.unit {
            for j in 0..d {
                let ej = self.counit.get(0, j);
                if !ej.is_zero() {
                    m.set(i, j, m.get(i, j).sub(&ui.mul(&ej)));
                }
            }
        }
        m
    }

    /// Columns of e_H, used to project finished tensor legs in place.
    fn e_columns(&self) -> Vec<SparseVec> {
        let d = self.dim();
        let e = self.e_map();
        let mut cols = vec![SparseVec::new(); d];
        for (row, col, s) in e.iter_entries() {
            cols[col].insert(row, s.clone());
        }
        cols
    }

    /// Δ's columns as (left, right, scalar) triples, indexed by input basis.
    fn comul_columns(&self) -> Vec<Vec<(usize, usize, crate::field::Scalar)>> {
        let d = self.dim();
        let mut cols = vec![Vec::new(); d];
        for (row, col, s) in self.comul.iter_entries() {
            cols[col].push((row / d, row % d, s.clone()));
        }
        cols
    }

    /// Δ⁽ⁿ⁾ applied to a vector, without materializing any intermediate
    /// matrix.  Conventions: Δ⁽⁰⁾ = ε, Δ⁽¹⁾ = id, Δ⁽²⁾ = Δ, and
    /// Δ⁽ⁿ⁺¹⁾ = (Δ⊗id^{⊗(n−1)})∘Δ⁽ⁿ⁾ — the leftmost leg is expanded at
    /// every step (coassociativity makes the bracketing immaterial, but we
    /// fix one).
    pub fn iterated_comul_vec(&self, n: usize, v: &SparseVec) -> SparseVec {
        if n == 0 {
            return self.counit.apply(v);
        }
        let d = self.dim();
        let comul_cols = self.comul_columns();
        let mut state = v.clone();
        // After k−1 expansions the state lives in H^{⊗k}; the leftmost
        // factor is the live one, the d^{k−1} block to its right is final.
        let mut tail: usize = 1;
        for _ in 1..n {
            let mut next = SparseVec::new();
            for (&flat, s) in &state {
                let (live, rest) = (flat / tail, flat % tail);
                for (l, r, cs) in &comul_cols[live] {
                    let idx = (l * d + r) * tail + rest;
                    svec::add_entry(&mut next, idx, &s.mul(cs));
                }
            }
            state = next;
            tail *= d;
        }
        state
    }

    /// δⁿ = e_H^{⊗n}∘Δ⁽ⁿ⁾ applied to a vector (δ⁰ = ε, δ¹ = e_H).
    ///
    /// Each newly finished right leg is projected through e_H immediately,
    /// so terms whose finished legs hit 1_H are discarded before they can
    /// multiply up — this is what keeps δⁿ columns small even when dⁿ is
    /// astronomically large.
    pub fn delta_vec(&self, n: usize, v: &SparseVec) -> SparseVec {
        if n == 0 {
            return self.counit.apply(v);
        }
        let d = self.dim();
        let comul_cols = self.comul_columns();
        let e_cols = self.e_columns();
        let mut state = v.clone();
        let mut tail: usize = 1;
        for _ in 1..n {
            let mut next = SparseVec::new();
            for (&flat, s) in &state {
                let (live, rest) = (flat / tail, flat % tail);
                for (l, r, cs) in &comul_cols[live] {
                    let smul = s.mul(cs);
                    for (&re, es) in &e_cols[*r] {
                        let idx = (l * d + re) * tail + rest;
                        svec::add_entry(&mut next, idx, &smul.mul(es));
                    }
                }
            }
            state = next;
            tail *= d;
        }
        // The live leftmost leg still needs its e_H.
        let mut out = SparseVec::new();
        for (&flat, s) in &state {
            let (live, rest) = (flat / tail, flat % tail);
            for (&le, es) in &e_cols[live] {
                svec::add_entry(&mut out, le * tail + rest, &s.mul(es));
            }
        }
        out
    }

    /// The matrix of Δ⁽ⁿ⁾ : H → H^{⊗n}  (dⁿ × d; 1 × d for n = 0).
    pub fn iterated_comul(&self, n: usize) -> Matrix {
        let d = self.dim();
        let rows = if n == 0 { 1 } else { d.pow(n as u32) };
        let cols = par_map_range(d, |j| self.iterated_comul_vec(n, &svec::unit(j, self.field)));
        Matrix::from_columns(self.field, rows, cols)
    }

    /// The matrix of δⁿ : H → H^{⊗n}  (dⁿ × d; 1 × d for n = 0).
    pub fn delta_map(&self, n: usize) -> Matrix {
        let d = self.dim();
        let rows = if n == 0 { 1 } else { d.pow(n as u32) };
        let cols = par_map_range(d, |j| self.delta_vec(n, &svec::unit(j, self.field)));
        Matrix::from_columns(self.field, rows, cols)
    }

    /// The coradical filtration P₀ ⊆ P₁ ⊆ … ⊆ P_{n_max} with
    /// P_n = Ker δ^{n+1}.
    pub fn coradical_filtration(&self, n_max: usize) -> Vec<Subspace> {
        (0..=n_max)
            .map(|n| self.delta_map(n + 1).kernel())
            .collect()
    }

    /// Prim(H) = {a : ε(a) = 0 and δ²(a) = 0} = Ker Δ̄ on the reduced part.
    pub fn primitives(&self) -> Subspace {
        let d = self.dim();
        // Stack ε over δ² and take one kernel.
        let delta2 = self.delta_map(2);
        let mut stacked = Matrix::zero(self.field, 1 + d * d, d);
        for (row, col, s) in self.counit.iter_entries() {
            stacked.set(row, col, s.clone());
        }
        for (row, col, s) in delta2.iter_entries() {
            stacked.set(1 + row, col, s.clone());
        }
        stacked.kernel()
    }

    /// Least n with P_n(H) = H, or `None` when H is not conilpotent.
    ///
    /// The kernel chain Ker δ^{n+1} grows strictly until it stabilizes, so
    /// scanning n ≤ dim H decides the question.
    pub fn conilpotency_degree(&self) -> Option<usize> {
        let d = self.dim();
        let mut prev = None;
        for n in 0..=d {
            let dim_n = self.delta_map(n + 1).kernel().dim();
            if dim_n == d {
                return Some(n);
            }
            if prev == Some(dim_n) {
                // Stabilized below the full space: the union never reaches H.
                return None;
            }
            prev = Some(dim_n);
        }
        None
    }

    /// Tensor product of coalgebras: Δ_{H⊗K} = (id⊗τ⊗id)∘(Δ_H⊗Δ_K) with τ
    /// the middle-two-factor switch, ε = ε_H⊗ε_K, 1 = 1_H⊗1_K.
    pub fn tensor(&self, other: &Coalgebra) -> Result<Coalgebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        let (d1, d2) = (self.dim(), other.dim());
        let d = d1 * d2;
        let cols1 = self.comul_columns();
        let cols2 = other.comul_columns();

        let comul_cols = par_map_range(d, |j| {
            let (j1, j2) = (j / d2, j % d2);
            let mut col = SparseVec::new();
            for (l1, r1, s1) in &cols1[j1] {
                for (l2, r2, s2) in &cols2[j2] {
                    // (l1⊗l2) ⊗ (r1⊗r2) inside (H⊗K)⊗(H⊗K).
                    let left = l1 * d2 + l2;
                    let right = r1 * d2 + r2;
                    svec::add_entry(&mut col, left * d + right, &s1.mul(s2));
                }
            }
            col
        });
        let comul = Matrix::from_columns(self.field, d * d, comul_cols);

        let mut counit = Matrix::zero(self.field, 1, d);
        for j1 in 0..d1 {
            for j2 in 0..d2 {
                let prod = self.counit.get(0, j1).mul(&other.counit.get(0, j2));
                if !prod.is_zero() {
                    counit.set(0, j1 * d2 + j2, prod);
                }
            }
        }

        let unit = svec::kronecker(&self.unit, &other.unit, d2);
        let labels = (0..d)
            .map(|j| format!("{}⊗{}", self.labels[j / d2], self.labels[j % d2]))
            .collect();
        let degrees = match (&self.degrees, &other.degrees) {
            (Some(a), Some(b)) => Some((0..d).map(|j| a[j / d2] + b[j % d2]).collect()),
            _ => None,
        };

        Coalgebra::new(self.field, labels, comul, counit, unit, degrees)
    }

    /// The insertion (−)_S : H^{⊗|S|} → H^{⊗n}: the j-th tensor factor of
    /// `w` is placed in position m_j (for S = {m₁ < … < m_{|S|}}, 1-based)
    /// and every other position receives 1_H.
    pub fn insertion(&self, n: usize, s: &[usize], w: &SparseVec) -> Result<SparseVec> {
        let d = self.dim();
        if s.windows(2).any(|p| p[0] >= p[1]) {
            return Err(Error::Precondition(
                "insertion subset must be strictly sorted".into(),
            ));
        }
        if s.iter().any(|&m| m == 0 || m > n) {
            return Err(Error::Precondition(format!(
                "insertion subset not contained in 1..={n}"
            )));
        }
        let k = s.len();
        let idx = TensorIndex::power(d, k);
        let mut out = SparseVec::new();
        for (&wf, ws) in w {
            if wf >= idx.total_dim() {
                return Err(Error::IndexOutOfRange {
                    context: "insertion vector",
                    index: wf,
                    bound: idx.total_dim(),
                });
            }
            let parts = idx.decode(wf)?;
            // Fold across positions 1..=n, branching over the support of
            // 1_H in the positions outside S.
            let mut acc: Vec<(usize, crate::field::Scalar)> = vec![(0, ws.clone())];
            let mut next_s = 0;
            for pos in 1..=n {
                let fixed = if next_s < k && s[next_s] == pos {
                    let p = parts[next_s];
                    next_s += 1;
                    Some(p)
                } else {
                    None
                };
                let mut grown = Vec::with_capacity(acc.len());
                match fixed {
                    Some(p) => {
                        for (flat, sc) in &acc {
                            grown.push((flat * d + p, sc.clone()));
                        }
                    }
                    None => {
                        for (flat, sc) in &acc {
                            for (&u, us) in &self.unit {
                                grown.push((flat * d + u, sc.mul(us)));
                            }
                        }
                    }
                }
                acc = grown;
            }
            for (flat, sc) in acc {
                svec::add_entry(&mut out, flat, &sc);
            }
        }
        Ok(out)
    }

    /// Verifies Δ⁽ⁿ⁾(a) = Σ_{S ⊆ {1..n}} δ^{|S|}(a)_S exactly for one
    /// vector `a`.
    pub fn delta_decomposition_check(&self, n: usize, a: &SparseVec) -> Result<bool> {
        let lhs = self.iterated_comul_vec(n, a);
        // δ^k(a) depends only on |S| = k; compute each once.
        let deltas: Vec<SparseVec> = (0..=n).map(|k| self.delta_vec(k, a)).collect();
        let mut rhs = SparseVec::new();
        for mask in 0u32..(1u32 << n) {
            let s: Vec<usize> = (1..=n).filter(|&p| mask & (1 << (p - 1)) != 0).collect();
            let term = self.insertion(n, &s, &deltas[s.len()])?;
            for (flat, sc) in term {
                svec::add_entry(&mut rhs, flat, &sc);
            }
        }
        Ok(lhs == rhs)
    }
}

/// Smallest column index of a nonzero entry, if any — the witness extractor
/// for matrix-identity axioms.
fn first_bad_column(diff: &Matrix) -> Option<usize> {
    diff.iter_entries().map(|(_, col, _)| col).min()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q() -> FieldSpec {
        FieldSpec::Q
    }

    /// The group-like coalgebra on {e, g}: Δx = x⊗x, εx = 1, 1_H = e.
    fn grouplike2() -> Coalgebra {
        let f = q();
        let mut comul = Matrix::zero(f, 4, 2);
        comul.set(0, 0, f.one()); // Δe = e⊗e
        comul.set(3, 1, f.one()); // Δg = g⊗g
        let mut counit = Matrix::zero(f, 1, 2);
        counit.set(0, 0, f.one());
        counit.set(0, 1, f.one());
        Coalgebra::new(
            f,
            vec!["e".into(), "g".into()],
            comul,
            counit,
            svec::unit(0, f),
            None,
        )
        .unwrap()
    }

    /// Degree window {1, t, t²} of ℚ[t] with binomial comultiplication.
    fn poly_window2() -> Coalgebra {
        let f = q();
        let d = 3;
        let mut comul = Matrix::zero(f, d * d, d);
        for k in 0..d {
            for i in 0..=k {
                let j = k - i;
                let c = crate::field::binomial_big(k as u64, i as u64);
                comul.set(i * d + j, k, f.from_bigint(&BigInt::from(c)));
            }
        }
        let mut counit = Matrix::zero(f, 1, d);
        counit.set(0, 0, f.one());
        Coalgebra::new(
            f,
            vec!["1".into(), "t".into(), "t^2".into()],
            comul,
            counit,
            svec::unit(0, f),
            Some(vec![0, 1, 2]),
        )
        .unwrap()
    }

    #[test]
    fn grouplike_validates() {
        let c = grouplike2();
        let report = c.validate().unwrap();
        assert!(report.passed(), "failures: {:?}", report.failures);
    }

    #[test]
    fn broken_counit_is_caught_with_witness() {
        let mut c = grouplike2();
        // Sabotage: Δg = g⊗e.
        c.comul.set(3, 1, c.field.zero());
        c.comul.set(2, 1, c.field.one());
        let report = c.validate().unwrap();
        assert!(!report.passed());
        // (ε⊗id)Δ(g) = ε(g)·e = e ≠ g, so the left counit law breaks at g.
        let axioms: Vec<&str> = report.failures.iter().map(|f| f.axiom.as_str()).collect();
        assert!(axioms.contains(&"counit-left"), "got {axioms:?}");
        let witness = report
            .failures
            .iter()
            .find(|f| f.axiom == "counit-left")
            .unwrap();
        assert_eq!(witness.witness.as_deref(), Some("g"));
    }

    #[test]
    fn shape_error_before_axioms() {
        let f = q();
        let c = Coalgebra::new(
            f,
            vec!["a".into(), "b".into()],
            Matrix::zero(f, 3, 2), // should be 4×2
            Matrix::zero(f, 1, 2),
            svec::unit(0, f),
            None,
        );
        assert!(matches!(c, Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn e_map_on_grouplike() {
        let c = grouplike2();
        let e = c.e_map();
        // e(e) = 0, e(g) = g − e.
        assert!(e.apply(&svec::unit(0, c.field)).is_empty());
        let eg = e.apply(&svec::unit(1, c.field));
        assert_eq!(eg.get(&0), Some(&c.field.from_integer(-1)));
        assert_eq!(eg.get(&1), Some(&c.field.one()));
        // Idempotent.
        assert!(e.mul(&e).sub(&e).is_zero());
    }

    #[test]
    fn iterated_comul_conventions() {
        let c = grouplike2();
        assert!(c.iterated_comul(0).sub(&c.counit).is_zero());
        assert!(c
            .iterated_comul(1)
            .sub(&Matrix::identity(c.field, 2))
            .is_zero());
        assert!(c.iterated_comul(2).sub(&c.comul).is_zero());
        // Group-like: Δ⁽³⁾(g) = g⊗g⊗g.
        let d3 = c.iterated_comul_vec(3, &svec::unit(1, c.field));
        assert_eq!(d3.len(), 1);
        assert_eq!(d3.get(&7), Some(&c.field.one())); // (1,1,1) in base 2
    }

    #[test]
    fn iterated_comul_matches_right_bracketing() {
        // Left-iterated Δ⁽ⁿ⁾ equals (id^{⊗(n−2)}⊗Δ)∘Δ⁽ⁿ⁻¹⁾ by
        // coassociativity; check the matrices agree.
        for c in [grouplike2(), poly_window2()] {
            let d = c.dim();
            let mut right = Matrix::identity(c.field, d);
            for n in 2..=4usize {
                let id_left = Matrix::identity(c.field, d.pow((n - 2) as u32));
                right = Matrix::kronecker(&id_left, &c.comul).mul(&right);
                assert!(
                    c.iterated_comul(n).sub(&right).is_zero(),
                    "bracketing mismatch at n = {n}"
                );
            }
        }
    }

    #[test]
    fn trinomial_expansion_of_t_squared() {
        // Δ⁽³⁾(t²) = Σ_{k₁+k₂+k₃=2} (2; k₁,k₂,k₃) t^{k₁}⊗t^{k₂}⊗t^{k₃}:
        // coefficient 1 on permutations of (2,0,0), 2 on permutations of
        // (1,1,0).
        let c = poly_window2();
        let v = c.iterated_comul_vec(3, &svec::unit(2, c.field));
        let idx = TensorIndex::power(3, 3);
        let mut expected = SparseVec::new();
        for (parts, coeff) in [
            ([2, 0, 0], 1),
            ([0, 2, 0], 1),
            ([0, 0, 2], 1),
            ([1, 1, 0], 2),
            ([1, 0, 1], 2),
            ([0, 1, 1], 2),
        ] {
            expected.insert(idx.encode(&parts).unwrap(), c.field.from_integer(coeff));
        }
        assert_eq!(v, expected);
    }

    #[test]
    fn delta_conventions_and_grouplike_delta2() {
        let c = grouplike2();
        assert!(c.delta_map(0).sub(&c.counit).is_zero());
        assert!(c.delta_map(1).sub(&c.e_map()).is_zero());
        // δ²(g) = (g−e)⊗(g−e) = e⊗e − e⊗g − g⊗e + g⊗g.
        let d2 = c.delta_vec(2, &svec::unit(1, c.field));
        assert_eq!(d2.get(&0), Some(&c.field.one()));
        assert_eq!(d2.get(&1), Some(&c.field.from_integer(-1)));
        assert_eq!(d2.get(&2), Some(&c.field.from_integer(-1)));
        assert_eq!(d2.get(&3), Some(&c.field.one()));
        // δⁿ(1_H) = 0 for n ≥ 1.
        for n in 1..=3 {
            assert!(c.delta_vec(n, &c.unit).is_empty());
        }
    }

    #[test]
    fn delta_composition_identity() {
        // δ^{n+1} = (δ²⊗id^{⊗(n−1)})∘δⁿ for n ≥ 1, as matrices.
        for c in [grouplike2(), poly_window2()] {
            let d = c.dim();
            let delta2 = c.delta_map(2);
            for n in 1..=3usize {
                let lhs = c.delta_map(n + 1);
                let id = Matrix::identity(c.field, d.pow((n - 1) as u32));
                let rhs = Matrix::kronecker(&delta2, &id).mul(&c.delta_map(n));
                assert!(lhs.sub(&rhs).is_zero(), "composition identity at n = {n}");
            }
        }
    }

    #[test]
    fn grouplike_coradical_stalls_at_the_unit_line() {
        let c = grouplike2();
        let chain = c.coradical_filtration(3);
        for p in &chain {
            assert_eq!(p.dim(), 1);
            assert!(p.contains(&c.unit));
        }
        assert_eq!(c.conilpotency_degree(), None);
        assert_eq!(c.primitives().dim(), 0);
    }

    #[test]
    fn poly_window_coradical_is_degree_filtration() {
        let c = poly_window2();
        let chain = c.coradical_filtration(2);
        assert_eq!(
            chain.iter().map(|p| p.dim()).collect::<Vec<_>>(),
            vec![1, 2, 3]
        );
        // P₁ = span{1, t}; primitives = span{t}.
        assert!(chain[1].contains(&svec::unit(1, c.field)));
        let prim = c.primitives();
        assert_eq!(prim.dim(), 1);
        assert!(prim.contains(&svec::unit(1, c.field)));
        assert_eq!(c.conilpotency_degree(), Some(2));
    }

    #[test]
    fn tensor_with_trivial_is_identity_on_tables() {
        let c = grouplike2();
        let f = c.field;
        let mut comul = Matrix::zero(f, 1, 1);
        comul.set(0, 0, f.one());
        let mut counit = Matrix::zero(f, 1, 1);
        counit.set(0, 0, f.one());
        let triv = Coalgebra::new(
            f,
            vec!["1".into()],
            comul,
            counit,
            svec::unit(0, f),
            None,
        )
        .unwrap();
        let t = c.tensor(&triv).unwrap();
        assert!(t.validate().unwrap().passed());
        assert!(t.comul.sub(&c.comul).is_zero());
        assert!(t.counit.sub(&c.counit).is_zero());
        assert_eq!(t.unit, c.unit);
    }

    #[test]
    fn tensor_conilpotency_is_subadditive() {
        let a = poly_window2();
        let t = a.tensor(&a).unwrap();
        assert!(t.validate().unwrap().passed());
        let deg = t.conilpotency_degree().unwrap();
        assert!(deg <= 4, "deg {deg} exceeds sum of windows");
        assert_eq!(deg, 4); // t²⊗t² first enters at P₄
    }

    #[test]
    fn insertion_places_units() {
        let c = grouplike2();
        let f = c.field;
        let g = svec::unit(1, f);
        // S = {1..n}: identity embedding.
        let gg = svec::kronecker(&g, &g, 2);
        let idn = c.insertion(2, &[1, 2], &gg).unwrap();
        assert_eq!(idn, gg);
        // n = 2, S = {2}: 1⊗g.
        let v = c.insertion(2, &[2], &g).unwrap();
        assert_eq!(v, svec::kronecker(&c.unit, &g, 2));
        // n = 3, S = {1,3}: g⊗1⊗g at flat (1,0,1) = 5.
        let v3 = c.insertion(3, &[1, 3], &gg).unwrap();
        assert_eq!(v3.len(), 1);
        assert_eq!(v3.get(&5), Some(&f.one()));
        // Unsorted subset rejected.
        assert!(c.insertion(3, &[3, 1], &gg).is_err());
    }

    #[test]
    fn subset_decomposition_holds() {
        let poly = poly_window2();
        for c in [grouplike2(), poly] {
            for n in 0..=4usize {
                for j in 0..c.dim() {
                    assert!(
                        c.delta_decomposition_check(n, &svec::unit(j, c.field))
                            .unwrap(),
                        "decomposition failed at n = {n}, basis {j}"
                    );
                }
            }
        }
    }

    #[test]
    fn subset_decomposition_detects_sabotage() {
        // The decomposition identity holds for *every* valid coalgebra, so
        // the mutation has to break an axiom: doubling the 1⊗t² term of
        // Δ(t²) violates the counit law, and the identity then fails at t².
        let mut c = poly_window2();
        c.comul.set(2, 2, c.field.from_integer(2));
        assert!(!c.validate().unwrap().passed());
        let bad = (0..c.dim()).any(|j| {
            !c.delta_decomposition_check(2, &svec::unit(j, c.field))
                .unwrap()
        });
        assert!(bad, "sabotaged table passed the decomposition identity");
    }
}
