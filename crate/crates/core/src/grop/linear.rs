//! Scalar linear combinations of free-group morphisms.
//!
//! Linearizing the category turns its hom-sets into vector spaces: a
//! [`LinMorphism`] is a finite formal sum `c1·f1 + … + ck·fk` of morphisms
//! sharing a source and target, with nonzero coefficients in a fixed field.
//! Composition and free product extend bilinearly.
//!
//! The star of the linearized category is the element
//!
//! ```text
//! θ = [x1|x1]_1 − [e|x1]_1 − [x1|e]_1 : 1 → 2,
//! ```
//!
//! the failure of the diagonal to be "additive". The left ideal generated by
//! θ is what the rewriting engine in [`super::rewrite`] quotients by; its
//! insertions `id ∗ θ ∗ id` cut out primitive parts of modules downstream.
//!
//! Combinations are stored in a map keyed by the canonical morphism order, so
//! two equal combinations are structurally equal and print identically.

use std::collections::BTreeMap;
use std::fmt;

use super::morphism::GropMorphism;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

/// A finite formal sum of morphisms `n → m` with nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinMorphism {
    field: FieldSpec,
    source: usize,
    target: usize,
    terms: BTreeMap<GropMorphism, Scalar>,
}

impl LinMorphism {
    /// The zero combination of signature `source → target`.
    ///
    /// Zero is the one value whose signature carries no information; the
    /// expression parser labels a bare `0` with signature `0 → 0`.
    pub fn zero(field: FieldSpec, source: usize, target: usize) -> Self {
        LinMorphism {
            field,
            source,
            target,
            terms: BTreeMap::new(),
        }
    }

    /// The combination `1·f`.
    pub fn from_morphism(field: FieldSpec, f: GropMorphism) -> Self {
        let mut lin = LinMorphism::zero(field, f.source(), f.target());
        let one = field.one();
        lin.add_term_scaled(f, &one).expect("fresh term matches signature");
        lin
    }

    /// Build a combination from `(morphism, coefficient)` pairs, all of
    /// signature `source → target`. Coefficients of equal morphisms combine;
    /// zero coefficients are dropped.
    pub fn from_terms(
        field: FieldSpec,
        source: usize,
        target: usize,
        terms: impl IntoIterator<Item = (GropMorphism, Scalar)>,
    ) -> Result<Self> {
        let mut lin = LinMorphism::zero(field, source, target);
        for (f, c) in terms {
            lin.add_term_scaled(f, &c)?;
        }
        Ok(lin)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    /// The terms in canonical ascending morphism order.
    pub fn terms(&self) -> impl Iterator<Item = (&GropMorphism, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient of `f`, zero if absent.
    pub fn coefficient(&self, f: &GropMorphism) -> Scalar {
        self.terms.get(f).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Add `c·f` into the combination.
    pub fn add_term_scaled(&mut self, f: GropMorphism, c: &Scalar) -> Result<()> {
        if c.field() != self.field {
            return Err(Error::FieldMismatch(self.field, c.field()));
        }
        if f.source() != self.source || f.target() != self.target {
            return Err(Error::ObjectMismatch {
                f: f.to_string(),
                g: format!("a combination of signature {} -> {}", self.source, self.target),
            });
        }
        if c.is_zero() {
            return Ok(());
        }
        let updated = match self.terms.get(&f) {
            Some(old) => old.add(c),
            None => c.clone(),
        };
        if updated.is_zero() {
            self.terms.remove(&f);
        } else {
            self.terms.insert(f, updated);
        }
        Ok(())
    }

    /// The sum of two combinations of equal signature.
    pub fn add(&self, other: &LinMorphism) -> Result<LinMorphism> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        if (self.source, self.target) != (other.source, other.target) {
            return Err(Error::ObjectMismatch {
                f: other.to_string(),
                g: self.to_string(),
            });
        }
        let mut out = self.clone();
        for (f, c) in &other.terms {
            out.add_term_scaled(f.clone(), c)?;
        }
        Ok(out)
    }

    /// The combination scaled by `c`.
    pub fn scale(&self, c: &Scalar) -> Result<LinMorphism> {
        if c.field() != self.field {
            return Err(Error::FieldMismatch(self.field, c.field()));
        }
        let mut out = LinMorphism::zero(self.field, self.source, self.target);
        if c.is_zero() {
            return Ok(out);
        }
        for (f, k) in &self.terms {
            out.terms.insert(f.clone(), k.mul(c));
        }
        Ok(out)
    }

    /// The negated combination.
    pub fn neg(&self) -> LinMorphism {
        self.scale(&self.field.one().neg())
            .expect("negation cannot mismatch fields")
    }

    /// The difference of two combinations of equal signature.
    pub fn sub(&self, other: &LinMorphism) -> Result<LinMorphism> {
        self.add(&other.neg())
    }

    /// Bilinear composite `self ∘ other`: every pair of summands composes by
    /// substitution and like terms combine.
    pub fn compose(&self, other: &LinMorphism) -> Result<LinMorphism> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        if self.source != other.target {
            return Err(Error::ObjectMismatch {
                f: other.to_string(),
                g: self.to_string(),
            });
        }
        let mut out = LinMorphism::zero(self.field, other.source, self.target);
        for (g, cg) in &self.terms {
            for (f, cf) in &other.terms {
                out.add_term_scaled(g.compose(f)?, &cg.mul(cf))?;
            }
        }
        Ok(out)
    }

    /// Bilinear free product `self ∗ other`.
    pub fn free_product(&self, other: &LinMorphism) -> Result<LinMorphism> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        let mut out = LinMorphism::zero(
            self.field,
            self.source + other.source,
            self.target + other.target,
        );
        for (g, cg) in &self.terms {
            for (f, cf) in &other.terms {
                out.add_term_scaled(g.free_product(f), &cg.mul(cf))?;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for LinMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let magnitude = if negative { c.neg() } else { c.clone() };
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if !magnitude.is_one() {
                write!(f, "{}*", magnitude.to_text())?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// The element `θ = [x1|x1]_1 − [e|x1]_1 − [x1|e]_1 : 1 → 2`.
pub fn theta(field: FieldSpec) -> LinMorphism {
    use super::word::FreeWord;
    let one = field.one();
    let minus_one = one.neg();
    let dup = GropMorphism::diagonal();
    let left_unit =
        GropMorphism::new(1, vec![FreeWord::empty(), FreeWord::generator(1)]).unwrap();
    let right_unit =
        GropMorphism::new(1, vec![FreeWord::generator(1), FreeWord::empty()]).unwrap();
    LinMorphism::from_terms(
        field,
        1,
        2,
        [
            (dup, one),
            (left_unit, minus_one.clone()),
            (right_unit, minus_one),
        ],
    )
    .expect("theta's three terms share signature 1 -> 2")
}

/// The insertion `id_{i-1} ∗ θ ∗ id_{n-i} : n → n+1` (1 ≤ i ≤ n).
///
/// These combinations generate the left ideal the rewriting engine reduces
/// by, and their kernels under a module cut out its primitive part.
pub fn theta_insertion(field: FieldSpec, n: usize, i: usize) -> Result<LinMorphism> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange {
            context: "theta insertion slot",
            index: i,
            bound: n,
        });
    }
    let left = LinMorphism::from_morphism(field, GropMorphism::identity(i - 1));
    let right = LinMorphism::from_morphism(field, GropMorphism::identity(n - i));
    left.free_product(&theta(field))?.free_product(&right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grop::parse::parse_morphism;

    #[test]
    fn theta_prints_in_canonical_order() {
        // Ascending morphism order puts the two unit-padded words first.
        assert_eq!(
            theta(FieldSpec::Q).to_string(),
            "-[e|x1]_1 - [x1|e]_1 + [x1|x1]_1"
        );
    }

    #[test]
    fn like_terms_combine_and_cancel() {
        let f = GropMorphism::diagonal();
        let mut lin = LinMorphism::from_morphism(FieldSpec::Q, f.clone());
        lin.add_term_scaled(f.clone(), &FieldSpec::Q.from_integer(2)).unwrap();
        assert_eq!(lin.coefficient(&f), FieldSpec::Q.from_integer(3));
        lin.add_term_scaled(f.clone(), &FieldSpec::Q.from_integer(-3)).unwrap();
        assert!(lin.is_zero());
    }

    #[test]
    fn mixed_signatures_are_rejected() {
        let mut lin = LinMorphism::from_morphism(FieldSpec::Q, GropMorphism::diagonal());
        let err = lin
            .add_term_scaled(GropMorphism::multiplication(), &FieldSpec::Q.one())
            .unwrap_err();
        assert!(matches!(err, Error::ObjectMismatch { .. }));
    }

    #[test]
    fn composition_is_bilinear() {
        let q = FieldSpec::Q;
        let two = q.from_integer(2);
        let nabla = LinMorphism::from_morphism(q, GropMorphism::multiplication());
        let delta = LinMorphism::from_morphism(q, GropMorphism::diagonal());
        // (2∇) ∘ Δ = 2(∇ ∘ Δ) = 2[x1x1]_1.
        let lhs = nabla.scale(&two).unwrap().compose(&delta).unwrap();
        let square = parse_morphism("[x1x1]_1").unwrap();
        assert_eq!(lhs.num_terms(), 1);
        assert_eq!(lhs.coefficient(&square), two);
    }

    #[test]
    fn theta_insertion_in_context() {
        let t = theta_insertion(FieldSpec::Q, 2, 1).unwrap();
        assert_eq!((t.source(), t.target()), (2, 3));
        assert_eq!(t.to_string(), "-[e|x1|x2]_2 - [x1|e|x2]_2 + [x1|x1|x2]_2");
        let t2 = theta_insertion(FieldSpec::Q, 2, 2).unwrap();
        assert_eq!(t2.to_string(), "-[x1|e|x2]_2 - [x1|x2|e]_2 + [x1|x2|x2]_2");
        assert!(theta_insertion(FieldSpec::Q, 2, 3).is_err());
    }

    #[test]
    fn free_product_of_combinations_interchanges_with_composition() {
        let q = FieldSpec::Q;
        let th = theta(q);
        let id1 = LinMorphism::from_morphism(q, GropMorphism::identity(1));
        let nabla = LinMorphism::from_morphism(q, GropMorphism::multiplication());
        // (∇ ∗ id) ∘ (θ ∗ γ) = (∇∘θ) ∗ (id∘γ).
        let gamma = LinMorphism::from_morphism(q, GropMorphism::inversion());
        let lhs = nabla
            .free_product(&id1)
            .unwrap()
            .compose(&th.free_product(&gamma).unwrap())
            .unwrap();
        let rhs = nabla
            .compose(&th)
            .unwrap()
            .free_product(&id1.compose(&gamma).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }
}
