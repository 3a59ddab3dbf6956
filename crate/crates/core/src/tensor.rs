//! Mixed-radix indexing of tensor-product bases.
//!
//! A basis vector of V₁⊗…⊗V_n is addressed either by its per-factor indices
//! (i₁, …, i_n) or by a single flat index. The leftmost factor is the most
//! significant digit: flat = ((i₁·d₂ + i₂)·d₃ + i₃)·… . One convention,
//! everywhere — tensor-index mismatches are the dominant bug class in this
//! kind of code, so all encoding goes through this type.

use crate::error::{Error, Result};

/// Shape of a tensor-product basis: the list of factor dimensions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorIndex {
    dims: Vec<usize>,
}

impl TensorIndex {
    pub fn new(dims: Vec<usize>) -> Self {
        TensorIndex { dims }
    }

    /// The n-fold power d⊗…⊗d.
    pub fn power(d: usize, n: usize) -> Self {
        TensorIndex { dims: vec![d; n] }
    }

    pub fn arity(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Product of the factor dimensions (1 for the empty tensor product).
    pub fn total_dim(&self) -> usize {
        self.dims.iter().product()
    }

    /// Flat index of the basis tensor e_{i₁}⊗…⊗e_{i_n}.
    pub fn encode(&self, indices: &[usize]) -> Result<usize> {
        if indices.len() != self.dims.len() {
            return Err(Error::DimensionMismatch {
                context: "tensor index arity",
                expected: self.dims.len(),
                got: indices.len(),
            });
        }
        let mut flat = 0usize;
        for (&i, &d) in indices.iter().zip(&self.dims) {
            if i >= d {
                return Err(Error::IndexOutOfRange {
                    context: "tensor factor index",
                    index: i,
                    bound: d,
                });
            }
            flat = flat * d + i;
        }
        Ok(flat)
    }

    /// Per-factor indices of a flat index.
    pub fn decode(&self, mut flat: usize) -> Result<Vec<usize>> {
        if flat >= self.total_dim() {
            return Err(Error::IndexOutOfRange {
                context: "flat tensor index",
                index: flat,
                bound: self.total_dim(),
            });
        }
        let mut out = vec![0usize; self.dims.len()];
        for k in (0..self.dims.len()).rev() {
            out[k] = flat % self.dims[k];
            flat /= self.dims[k];
        }
        Ok(out)
    }
}
