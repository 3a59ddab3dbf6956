//! Cross-builder laws for the coalgebra layer.
//!
//! The unit tests in `coalgebra.rs` pin individual formulas on single
//! examples; this suite runs the structural laws across the whole builder
//! menagerie — group algebras, truncated polynomial algebras, their duals,
//! and the three graded windows — because the laws are exactly the places
//! where a convention mismatch (tensor ordering, bracketing, reduced-part
//! bookkeeping) would hide.

use hopfcorad_core::builders::{
    group_algebra, polynomial_window, shuffle_window, tensor_hopf_window,
    truncated_polynomial_hopf, dual_hopf, FiniteGroupTable,
};
use hopfcorad_core::coalgebra::Coalgebra;
use hopfcorad_core::field::FieldSpec;
use hopfcorad_core::lucas::digit_sum;
use hopfcorad_core::matrix::{svec, Matrix, SparseVec};
use hopfcorad_core::subspace::Subspace;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every coalgebra the builder layer can produce, at small sizes: the
/// structural laws below must hold on each of them.
fn menagerie() -> Vec<(String, Coalgebra)> {
    let q = FieldSpec::rationals();
    let f2 = FieldSpec::fp(2).unwrap();
    vec![
        (
            "QZ2".into(),
            group_algebra(&FiniteGroupTable::cyclic(2), q).unwrap().bialgebra.coalgebra,
        ),
        (
            "QS3".into(),
            group_algebra(&FiniteGroupTable::symmetric(3), q).unwrap().bialgebra.coalgebra,
        ),
        (
            "F2[t]/(t4)".into(),
            truncated_polynomial_hopf(2, 2).unwrap().bialgebra.coalgebra,
        ),
        (
            "F3[t]/(t3)".into(),
            truncated_polynomial_hopf(3, 1).unwrap().bialgebra.coalgebra,
        ),
        (
            "dual F2[t]/(t4)".into(),
            dual_hopf(&truncated_polynomial_hopf(2, 2).unwrap()).unwrap().bialgebra.coalgebra,
        ),
        (
            "Q[t] window 4".into(),
            polynomial_window(q, 4).unwrap().coalgebra,
        ),
        (
            "Sh(V) dimV=2 window 3".into(),
            shuffle_window(q, 2, 3).unwrap().bialgebra.coalgebra,
        ),
        (
            "Sh(V) dimV=1 window 3 over F2".into(),
            shuffle_window(f2, 1, 3).unwrap().bialgebra.coalgebra,
        ),
        (
            "H_2 window 3".into(),
            tensor_hopf_window(q, 2, 3).unwrap().bialgebra.coalgebra,
        ),
    ]
}

/// δ^{n+1} = (δ² ⊗ id^{⊗(n−1)}) ∘ δⁿ on the reduced part: precomposing
/// both sides with e kills the unit line, where the identity genuinely
/// needs it.
#[test]
fn delta_recursion_identity_on_all_builders() {
    for (name, c) in menagerie() {
        let d = c.dim();
        let e = c.e_map();
        for n in 1..=4usize {
            let lhs = Matrix::kronecker(&c.delta_map(2), &Matrix::identity(c.field, d.pow(n as u32 - 1)))
                .mul(&c.delta_map(n))
                .mul(&e);
            let rhs = c.delta_map(n + 1).mul(&e);
            assert_eq!(lhs, rhs, "δ-recursion fails at n = {n} on {name}");
        }
    }
}

#[test]
fn coradical_chain_is_increasing_and_contains_the_unit() {
    for (name, c) in menagerie() {
        let stages = c.coradical_filtration(4);
        assert_eq!(stages.len(), 5);
        for (n, stage) in stages.iter().enumerate() {
            assert!(stage.contains(&c.unit), "1 ∉ P_{n} on {name}");
            if n > 0 {
                assert!(
                    stage.contains_subspace(&stages[n - 1]),
                    "P_{} ⊄ P_{n} on {name}",
                    n - 1
                );
            }
        }
    }
}

/// Each coradical stage is a subcoalgebra: Δ(P_n) ⊆ P_n ⊗ P_n.
#[test]
fn coradical_stages_are_subcoalgebras() {
    for (name, c) in menagerie() {
        for (n, stage) in c.coradical_filtration(3).iter().enumerate() {
            let square = Subspace::kronecker(stage, stage);
            for b in stage.basis() {
                assert!(
                    square.contains(&c.comul.apply(b)),
                    "Δ(P_{n}) escapes P_{n}⊗P_{n} on {name}"
                );
            }
        }
    }
}

/// The characteristic-p polynomial window filters by base-p digit sums: a
/// small-window version of the law the acceptance suite checks at D = 40.
#[test]
fn polynomial_window_digit_sum_dimensions() {
    for p in [2u64, 3, 5] {
        let window = polynomial_window(FieldSpec::fp(p).unwrap(), 12).unwrap();
        let stages = window.coalgebra.coradical_filtration(6);
        for (n, stage) in stages.iter().enumerate() {
            let expected = (0..=12u64).filter(|&i| digit_sum(p, i) <= n as u64).count();
            assert_eq!(stage.dim(), expected, "P_{n} dimension over F{p}");
        }
    }
}

/// Over the shuffle window the filtration is the word-length filtration:
/// P_n is exactly the span of the words of length ≤ n, as subspaces.
#[test]
fn shuffle_window_filtration_is_the_length_filtration() {
    for field in [FieldSpec::rationals(), FieldSpec::fp(2).unwrap()] {
        let h = shuffle_window(field, 2, 3).unwrap();
        let c = &h.bialgebra.coalgebra;
        let stages = c.coradical_filtration(3);
        for (n, stage) in stages.iter().enumerate() {
            // Basis is enumerated by length layer, so lengths ≤ n form a prefix.
            let count: usize = (0..=n).map(|i| 2usize.pow(i as u32)).sum();
            let prefix = Subspace::from_rows(
                field,
                c.dim(),
                (0..count).map(|i| svec::unit(i, field)).collect(),
            );
            assert_eq!(stage, &prefix, "P_{n} of the shuffle window over {field}");
        }
    }
}

/// The subset-decomposition identity Δ⁽ⁿ⁾(a) = Σ_S δ^{|S|}(a)_S holds on
/// random vectors of a dimension-9 truncated polynomial algebra.
#[test]
fn subset_decomposition_on_random_vectors() {
    let h = truncated_polynomial_hopf(3, 2).unwrap();
    let c = &h.bialgebra.coalgebra;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 0..=4usize {
        for _ in 0..5 {
            let mut a = SparseVec::new();
            for i in 0..c.dim() {
                let coeff = rng.gen_range(0..3i64);
                if coeff != 0 {
                    a.insert(i, c.field.from_integer(coeff));
                }
            }
            assert!(
                c.delta_decomposition_check(n, &a).unwrap(),
                "decomposition fails at n = {n} for {a:?}"
            );
        }
    }
}

/// Primitives complement the unit line inside P₁ on every builder:
/// P₁ = span{1} ⊕ Prim as an internal direct sum.
#[test]
fn primitives_complement_the_unit_inside_p1() {
    for (name, c) in menagerie() {
        let p1 = &c.coradical_filtration(1)[1];
        let prim = c.primitives();
        let unit_line = Subspace::from_rows(c.field, c.dim(), vec![c.unit.clone()]);
        assert_eq!(
            prim.sum(&unit_line).unwrap(),
            p1.clone(),
            "span{{1}} + Prim ≠ P₁ on {name}"
        );
        assert_eq!(
            prim.intersect(&unit_line).unwrap().dim(),
            0,
            "Prim meets the unit line on {name}"
        );
    }
}
