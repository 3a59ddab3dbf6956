//! Sparse exact matrices and vectors.
//!
//! A [`Matrix`] stores only its nonzero entries, row-major. Row and column
//! counts are plain `usize` but may be astronomically large (δⁿ maps land in
//! H^{⊗n}); everything here is written so that cost scales with the number of
//! nonzero entries, never with the ambient row count. In particular `kernel`
//! works off the set of nonzero rows — zero rows impose no constraint.

use std::collections::BTreeMap;

use crate::field::{FieldSpec, Scalar};
use crate::subspace::Subspace;
use crate::tensor::TensorIndex;

/// A sparse vector: index → nonzero scalar.
pub type SparseVec = BTreeMap<usize, Scalar>;

/// Sparse-vector helpers. All functions maintain the no-explicit-zeros rule.
pub mod svec {
    use super::*;

    /// `target += coeff * src`.
    pub fn add_scaled(target: &mut SparseVec, src: &SparseVec, coeff: &Scalar) {
        if coeff.is_zero() {
            return;
        }
        for (&i, s) in src {
            let add = s.mul(coeff);
            match target.get_mut(&i) {
                Some(t) => {
                    *t = t.add(&add);
                    if t.is_zero() {
                        target.remove(&i);
                    }
                }
                None => {
                    target.insert(i, add);
                }
            }
        }
    }

    /// `target[i] += s`.
    pub fn add_entry(target: &mut SparseVec, i: usize, s: &Scalar) {
        if s.is_zero() {
            return;
        }
        match target.get_mut(&i) {
            Some(t) => {
                *t = t.add(s);
                if t.is_zero() {
                    target.remove(&i);
                }
            }
            None => {
                target.insert(i, s.clone());
            }
        }
    }

    /// `coeff * v` as a fresh vector.
    pub fn scaled(v: &SparseVec, coeff: &Scalar) -> SparseVec {
        if coeff.is_zero() {
            return SparseVec::new();
        }
        v.iter().map(|(&i, s)| (i, s.mul(coeff))).collect()
    }

    pub fn unit(i: usize, field: FieldSpec) -> SparseVec {
        let mut v = SparseVec::new();
        v.insert(i, field.one());
        v
    }

    /// Kronecker product of two sparse vectors living in spaces of dimension
    /// `_` and `right_dim`: index (i, j) ↦ i·right_dim + j.
    pub fn kronecker(a: &SparseVec, b: &SparseVec, right_dim: usize) -> SparseVec {
        let mut out = SparseVec::new();
        for (&i, s) in a {
            for (&j, t) in b {
                out.insert(i * right_dim + j, s.mul(t));
            }
        }
        out
    }
}

/// A sparse `rows × cols` matrix over a fixed field, with no explicit zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    /// row index → (col index → nonzero entry)
    entries: BTreeMap<usize, SparseVec>,
}

impl Matrix {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.entries.insert(i, svec::unit(i, field));
        }
        m
    }

    /// Build from integer entries, mostly for tests and structure tables.
    pub fn from_int_rows(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Matrix::zero(field, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, field.from_integer(x));
            }
        }
        m
    }

    /// Assemble from columns (column j given as row-index → scalar).
    pub fn from_columns(field: FieldSpec, rows: usize, columns: Vec<SparseVec>) -> Self {
        let cols = columns.len();
        let mut m = Matrix::zero(field, rows, cols);
        for (j, col) in columns.into_iter().enumerate() {
            for (i, s) in col {
                debug_assert!(!s.is_zero());
                debug_assert!(i < rows, "row index out of bounds");
                m.entries.entry(i).or_default().insert(j, s);
            }
        }
        m
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Set one entry, keeping the no-explicit-zeros invariant.
    pub fn set(&mut self, r: usize, c: usize, s: Scalar) {
        assert!(r < self.rows && c < self.cols, "matrix index out of range");
        if s.is_zero() {
            if let Some(row) = self.entries.get_mut(&r) {
                row.remove(&c);
                if row.is_empty() {
                    self.entries.remove(&r);
                }
            }
        } else {
            self.entries.entry(r).or_default().insert(c, s);
        }
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.entries
            .get(&r)
            .and_then(|row| row.get(&c))
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.values().map(|r| r.len()).sum()
    }

    /// Iterate nonzero entries as (row, col, scalar).
    pub fn iter_entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.entries
            .iter()
            .flat_map(|(&r, row)| row.iter().map(move |(&c, s)| (r, c, s)))
    }

    /// The nonzero rows, as (row index, sparse row) pairs.
    pub fn nonzero_rows(&self) -> impl Iterator<Item = (usize, &SparseVec)> {
        self.entries.iter().map(|(&r, row)| (r, row))
    }

    pub fn transpose(&self) -> Matrix {
        let mut m = Matrix::zero(self.field, self.cols, self.rows);
        for (r, c, s) in self.iter_entries() {
            m.entries.entry(c).or_default().insert(r, s.clone());
        }
        m
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in add");
        let mut out = self.clone();
        for (&r, row) in &other.entries {
            let target = out.entries.entry(r).or_default();
            for (&c, s) in row {
                match target.get_mut(&c) {
                    Some(t) => {
                        *t = t.add(s);
                        if t.is_zero() {
                            target.remove(&c);
                        }
                    }
                    None => {
                        target.insert(c, s.clone());
                    }
                }
            }
            if out.entries.get(&r).is_some_and(|row| row.is_empty()) {
                out.entries.remove(&r);
            }
        }
        out
    }

    pub fn scale(&self, coeff: &Scalar) -> Matrix {
        if coeff.is_zero() {
            return Matrix::zero(self.field, self.rows, self.cols);
        }
        let mut out = self.clone();
        for row in out.entries.values_mut() {
            for s in row.values_mut() {
                *s = s.mul(coeff);
            }
        }
        out
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&self.field.one().neg())
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.neg())
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let mut out = Matrix::zero(self.field, self.rows, other.cols);
        for (&i, row) in &self.entries {
            let mut acc = SparseVec::new();
            for (&j, a) in row {
                if let Some(brow) = other.entries.get(&j) {
                    svec::add_scaled(&mut acc, brow, a);
                }
            }
            if !acc.is_empty() {
                out.entries.insert(i, acc);
            }
        }
        out
    }

    /// Apply to a column vector (index → scalar over `cols`).
    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&i, row) in &self.entries {
            let mut acc = self.field.zero();
            // dot of sparse row with sparse v; iterate the smaller one
            if row.len() <= v.len() {
                for (c, a) in row {
                    if let Some(b) = v.get(c) {
                        acc = acc.add(&a.mul(b));
                    }
                }
            } else {
                for (c, b) in v {
                    if let Some(a) = row.get(c) {
                        acc = acc.add(&a.mul(b));
                    }
                }
            }
            if !acc.is_zero() {
                out.insert(i, acc);
            }
        }
        out
    }

    /// Kronecker (tensor) product under the mixed-radix index convention of
    /// [`TensorIndex`]: entry ((i_a, i_b), (j_a, j_b)) = a[i_a, j_a]·b[i_b, j_b].
    pub fn kronecker(a: &Matrix, b: &Matrix) -> Matrix {
        assert_eq!(a.field, b.field, "field mismatch in kronecker");
        let mut out = Matrix::zero(a.field, a.rows * b.rows, a.cols * b.cols);
        for (ra, ca, sa) in a.iter_entries() {
            for (rb, cb, sb) in b.iter_entries() {
                let r = ra * b.rows + rb;
                let c = ca * b.cols + cb;
                out.entries.entry(r).or_default().insert(c, sa.mul(sb));
            }
        }
        out
    }

    /// The permutation matrix on V₁⊗…⊗V_n sending e_{i₁}⊗…⊗e_{i_n} to the
    /// basis tensor whose σ(k)-th slot is i_k (that is, slot j of the output
    /// carries i_{σ⁻¹(j)}). `sigma` is 0-based: `sigma[k]` = σ(k).
    pub fn permute_factors(field: FieldSpec, sigma: &[usize], dims: &[usize]) -> Matrix {
        assert_eq!(sigma.len(), dims.len(), "permutation/dims length mismatch");
        let n = dims.len();
        let mut seen = vec![false; n];
        for &s in sigma {
            assert!(s < n && !seen[s], "not a permutation");
            seen[s] = true;
        }
        let in_index = TensorIndex::new(dims.to_vec());
        let mut out_dims = vec![0usize; n];
        for k in 0..n {
            out_dims[sigma[k]] = dims[k];
        }
        let out_index = TensorIndex::new(out_dims);
        let total = in_index.total_dim();
        let mut m = Matrix::zero(field, total, total);
        for flat_in in 0..total {
            let idx = in_index.decode(flat_in).expect("in range");
            let mut out = vec![0usize; n];
            for k in 0..n {
                out[sigma[k]] = idx[k];
            }
            let flat_out = out_index.encode(&out).expect("in range");
            m.entries
                .entry(flat_out)
                .or_default()
                .insert(flat_in, field.one());
        }
        m
    }

    /// Reduced row-echelon form. Zero rows are dropped, so the result has
    /// exactly `rank` rows (at indices 0..rank); the row space is preserved.
    pub fn rref(&self) -> Matrix {
        let reduced = rref_rows(self.field, self.entries.values().cloned().collect());
        let rank = reduced.len();
        let mut out = Matrix::zero(self.field, rank, self.cols);
        for (i, row) in reduced.into_iter().enumerate() {
            out.entries.insert(i, row);
        }
        out
    }

    pub fn rank(&self) -> usize {
        rref_rows(self.field, self.entries.values().cloned().collect()).len()
    }

    /// Kernel {v : Mv = 0} as a subspace of the domain 𝕜^cols.
    pub fn kernel(&self) -> Subspace {
        let reduced = rref_rows(self.field, self.entries.values().cloned().collect());
        // pivot columns, in increasing order (rref_rows sorts by pivot)
        let pivots: Vec<usize> = reduced
            .iter()
            .map(|r| *r.keys().next().expect("rref rows are nonzero"))
            .collect();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for f in 0..self.cols {
            if pivot_set.contains(&f) {
                continue;
            }
            let mut v = SparseVec::new();
            v.insert(f, self.field.one());
            for (row, &p) in reduced.iter().zip(&pivots) {
                if let Some(a) = row.get(&f) {
                    v.insert(p, a.neg());
                }
            }
            basis.push(v);
        }
        Subspace::from_rows(self.field, self.cols, basis)
    }

    /// Column space as a subspace of the codomain 𝕜^rows.
    pub fn image(&self) -> Subspace {
        let cols = self.transpose();
        Subspace::from_rows(self.field, self.rows, cols.entries.into_values().collect())
    }
}

/// Incremental reduced row-echelon form of a list of sparse rows.
/// Returns fully reduced nonzero rows sorted by pivot column; each pivot
/// entry is 1 and is the only nonzero entry in its column.
pub(crate) fn rref_rows(field: FieldSpec, rows: Vec<SparseVec>) -> Vec<SparseVec> {
    let _ = field;
    // basis kept sorted by pivot column
    let mut basis: Vec<SparseVec> = Vec::new();
    for mut row in rows {
        // eliminate existing pivots from the incoming row
        for b in &basis {
            let p = *b.keys().next().expect("nonzero basis row");
            if let Some(coeff) = row.get(&p).cloned() {
                svec::add_scaled(&mut row, b, &coeff.neg());
            }
        }
        if row.is_empty() {
            continue;
        }
        // normalize the leading entry to 1
        let p = *row.keys().next().expect("nonzero");
        let lead = row.get(&p).expect("leading entry").clone();
        if !lead.is_one() {
            let inv = lead.inv();
            for s in row.values_mut() {
                *s = s.mul(&inv);
            }
        }
        // eliminate the new pivot from the existing basis
        for b in basis.iter_mut() {
            if let Some(coeff) = b.get(&p).cloned() {
                svec::add_scaled(b, &row, &coeff.neg());
            }
        }
        let pos = basis
            .binary_search_by_key(&p, |b| *b.keys().next().expect("nonzero"))
            .expect_err("duplicate pivot after elimination");
        basis.insert(pos, row);
    }
    basis
}
