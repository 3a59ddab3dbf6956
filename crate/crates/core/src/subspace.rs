//! Subspaces of 𝕜^n in reduced row-echelon form.
//!
//! The RREF basis is a canonical representative, so subspace equality is
//! literal equality of the stored data — exactly what filtration-equality
//! checks need. Lattice operations (sum, intersection) re-echelonize;
//! intersection uses the Zassenhaus block-matrix trick.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::matrix::{rref_rows, svec, Matrix, SparseVec};

/// A subspace of 𝕜^ambient, stored as an RREF row basis plus pivot columns.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    /// RREF basis rows, sorted by pivot column.
    rows: Vec<SparseVec>,
    /// Pivot column of each basis row.
    pivots: Vec<usize>,
}

impl Subspace {
    /// Span of arbitrary generating rows (echelonized here).
    pub fn from_rows(field: FieldSpec, ambient: usize, rows: Vec<SparseVec>) -> Self {
        debug_assert!(rows
            .iter()
            .all(|r| r.keys().all(|&c| c < ambient)));
        let rows = rref_rows(field, rows);
        let pivots = rows
            .iter()
            .map(|r| *r.keys().next().expect("rref rows are nonzero"))
            .collect();
        Subspace {
            field,
            ambient,
            rows,
            pivots,
        }
    }

    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        let rows = (0..ambient).map(|i| svec::unit(i, field)).collect();
        Subspace {
            field,
            ambient,
            rows,
            pivots: (0..ambient).collect(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The basis as a dim × ambient matrix.
    pub fn to_matrix(&self) -> Matrix {
        let mut m = Matrix::zero(self.field, self.dim(), self.ambient);
        for (i, row) in self.rows.iter().enumerate() {
            for (&c, s) in row {
                m.set(i, c, s.clone());
            }
        }
        m
    }

    /// Residue of `v` after eliminating all pivots (zero iff `v` ∈ self).
    fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if let Some(c) = v.get(&p).cloned() {
                svec::add_scaled(&mut v, row, &c.neg());
            }
        }
        v
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                context: "subspace ambient dimension",
                expected: self.ambient,
                got: other.ambient,
            });
        }
        Ok(())
    }

    /// Lattice join: span of the union of the bases.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(Subspace::from_rows(self.field, self.ambient, rows))
    }

    /// Lattice meet, by the Zassenhaus algorithm: echelonize rows
    /// [a | a] for a in A and [b | 0] for b in B; rows whose left half
    /// vanishes have right halves spanning A ∩ B.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let n = self.ambient;
        let mut block: Vec<SparseVec> = Vec::new();
        for a in &self.rows {
            let mut row = a.clone();
            for (&c, s) in a {
                row.insert(c + n, s.clone());
            }
            block.push(row);
        }
        for b in &other.rows {
            block.push(b.clone());
        }
        let reduced = rref_rows(self.field, block);
        let mut inter = Vec::new();
        for row in reduced {
            if row.keys().next().is_some_and(|&c| c >= n) {
                inter.push(row.into_iter().map(|(c, s)| (c - n, s)).collect());
            }
        }
        Ok(Subspace::from_rows(self.field, n, inter))
    }

    /// The image of this subspace under a linear map (ambient = m.cols).
    pub fn map_by(&self, m: &Matrix) -> Result<Subspace> {
        if m.cols() != self.ambient {
            return Err(Error::DimensionMismatch {
                context: "matrix applied to subspace",
                expected: self.ambient,
                got: m.cols(),
            });
        }
        let rows = self.rows.iter().map(|r| m.apply(r)).collect();
        Ok(Subspace::from_rows(self.field, m.rows(), rows))
    }

    /// Kronecker product of subspaces: span of pairwise tensor products of
    /// basis vectors, inside the tensor product of the ambients.
    pub fn kronecker(a: &Subspace, b: &Subspace) -> Subspace {
        assert_eq!(a.field, b.field, "field mismatch in subspace kronecker");
        let ambient = a.ambient * b.ambient;
        let mut rows = Vec::new();
        for x in &a.rows {
            for y in &b.rows {
                rows.push(svec::kronecker(x, y, b.ambient));
            }
        }
        Subspace::from_rows(a.field, ambient, rows)
    }
}
