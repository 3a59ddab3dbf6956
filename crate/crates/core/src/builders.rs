//! Constructors for the concrete (co/bi/Hopf) algebras the test corpus and
//! CLI work on:
//!
//! * [`group_algebra`] — 𝕜G for a finite group G (Δg = g⊗g, Sg = g⁻¹);
//! * [`truncated_polynomial_hopf`] — 𝔽_p[t]/(t^{p^k}) with primitive t;
//! * [`dual_hopf`] — the linear dual, roles of all tables swapped; the dual
//!   of a truncated polynomial algebra is the divided-power algebra
//!   Γ = span{γ_m} with Δγ_m = Σ_{i+j=m} γ_i⊗γ_j and γ_iγ_j = C(i+j,i)γ_{i+j},
//!   the standard finite-dimensional source of conilpotent non-primitively
//!   generated examples in characteristic p;
//! * [`polynomial_window`] — the degree ≤ D part of 𝕜[t] (a bialgebra
//!   window; products past D overflow);
//! * [`shuffle_window`] — the degree ≤ D part of the shuffle Hopf algebra
//!   Sh(V): basis the words over a basis of V, deconcatenation
//!   comultiplication, shuffle product, antipode
//!   S[v₁|…|v_n] = (−1)ⁿ[v_n|…|v₁];
//! * [`tensor_hopf_window`] — the degree ≤ D part of the tensor (free
//!   associative) Hopf algebra 𝕜⟨x₁,…,x_n⟩ with every generator primitive:
//!   concatenation product, Δ(w) = Σ_S w_S ⊗ w_{S^c} over subsets of letter
//!   positions, S(w) = (−1)^{|w|}·reverse(w).
//!
//! Windowed builders mark multiplication partial and rely on the overflow
//! machinery of [`Bialgebra`]; their comultiplications are exact because all
//! three gradings are preserved by Δ.

use num_bigint::BigInt;

use crate::coalgebra::{Coalgebra, TruncationWindow};
use crate::error::{Error, Result};
use crate::field::{binomial_big, FieldSpec};
use crate::hopf::{Bialgebra, HopfAlgebra};
use crate::matrix::{svec, Matrix, SparseVec};

/// A finite group given by its multiplication table. Associativity,
/// identity and inverses are verified at construction.
#[derive(Debug, Clone)]
pub struct FiniteGroupTable {
    labels: Vec<String>,
    /// `table[i][j]` = index of gᵢ·gⱼ.
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroupTable {
    /// Builds and verifies a group from a raw multiplication table.
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if labels.len() != n {
            return Err(Error::DimensionMismatch {
                context: "group labels",
                expected: n,
                got: labels.len(),
            });
        }
        for row in &table {
            if row.len() != n {
                return Err(Error::Validation("group table is not square".into()));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::IndexOutOfRange {
                    context: "group table entry",
                    index: bad,
                    bound: n,
                });
            }
        }
        // identity: a two-sided unit
        let identity = (0..n)
            .find(|&e| (0..n).all(|j| table[e][j] == j && table[j][e] == j))
            .ok_or_else(|| Error::Validation("group table has no identity".into()))?;
        // associativity
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::Validation(format!(
                            "group table not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        // inverses
        let mut inverse = vec![0usize; n];
        for a in 0..n {
            inverse[a] = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| {
                    Error::Validation(format!("group element {a} has no inverse"))
                })?;
        }
        Ok(FiniteGroupTable {
            labels,
            table,
            identity,
            inverse,
        })
    }

    /// The cyclic group ℤ/n (n ≥ 1), labels e, g, g^2, ….
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group needs n >= 1");
        let labels = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{k}"),
            })
            .collect();
        let table = (0..n)
            .map(|i| (0..n).map(|j| (i + j) % n).collect())
            .collect();
        FiniteGroupTable::new(labels, table).expect("cyclic table is a group")
    }

    /// The symmetric group S_n (n ≥ 1) on {1,…,n}, elements in lexicographic
    /// one-line order (identity first), labelled by cycle notation.
    pub fn symmetric(n: usize) -> Self {
        assert!((1..=6).contains(&n), "symmetric group supported for n <= 6");
        let mut perms: Vec<Vec<usize>> = permutations_of(n);
        perms.sort();
        let index_of = |p: &[usize]| perms.binary_search_by(|q| q.as_slice().cmp(p)).unwrap();
        let table = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    // (a·b)(x) = a(b(x)): right factor acts first.
                    .map(|b| {
                        let ab: Vec<usize> = (0..n).map(|x| a[b[x]]).collect();
                        index_of(&ab)
                    })
                    .collect()
            })
            .collect();
        let labels = perms.iter().map(|p| cycle_notation(p)).collect();
        FiniteGroupTable::new(labels, table).expect("symmetric table is a group")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.inverse[i]
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }
}

fn permutations_of(n: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    (0..n).permutations(n).collect()
}

/// Cycle notation for a permutation of {0,…,n−1}, written on 1-based
/// points: [1,2,0] → "(1 2 3)"; the identity is "e".
fn cycle_notation(p: &[usize]) -> String {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || p[start] == start {
            seen[start] = true;
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut x = p[start];
        while x != start {
            seen[x] = true;
            cycle.push(x);
            x = p[x];
        }
        out.push('(');
        out.push_str(
            &cycle
                .iter()
                .map(|&i| (i + 1).to_string())
                .collect::<Vec<_>>()
                .join(" "),
        );
        out.push(')');
    }
    if out.is_empty() {
        "e".to_string()
    } else {
        out
    }
}

/// The group algebra 𝕜G: basis G, Δg = g⊗g, εg = 1, ∇ from the group law,
/// S(g) = g⁻¹. Validated before being returned.
pub fn group_algebra(g: &FiniteGroupTable, field: FieldSpec) -> Result<HopfAlgebra> {
    let d = g.order();
    let mut comul = Matrix::zero(field, d * d, d);
    let mut counit = Matrix::zero(field, 1, d);
    let mut mul = Matrix::zero(field, d, d * d);
    let mut antipode = Matrix::zero(field, d, d);
    for i in 0..d {
        comul.set(i * d + i, i, field.one());
        counit.set(0, i, field.one());
        antipode.set(g.inverse(i), i, field.one());
        for j in 0..d {
            mul.set(g.mul(i, j), i * d + j, field.one());
        }
    }
    let coalgebra = Coalgebra::new(
        field,
        g.labels().to_vec(),
        comul,
        counit,
        svec::unit(g.identity(), field),
        None,
    )?;
    let bialgebra = Bialgebra::new(coalgebra, mul, None)?;
    let hopf = HopfAlgebra::new(bialgebra, antipode)?;
    ensure_valid(&hopf, "group algebra")?;
    Ok(hopf)
}

/// 𝔽_p[t]/(t^{p^k}) with t primitive: Δ(t^m) = Σ C(m,i) tⁱ⊗t^{m−i},
/// S(t^m) = (−1)^m t^m.  The quotient is a Hopf algebra precisely because
/// the ideal (t^{p^k}) is generated by a primitive-power element:
/// freshman's dream makes Δ(t^{p^k}) ≡ t^{p^k}⊗1 + 1⊗t^{p^k}.
pub fn truncated_polynomial_hopf(p: u64, k: u32) -> Result<HopfAlgebra> {
    let field = FieldSpec::fp(p)?;
    let d64 = p.checked_pow(k).ok_or_else(|| {
        Error::InvalidInput(format!("p^k = {p}^{k} does not fit in a machine word"))
    })?;
    let d = usize::try_from(d64)
        .map_err(|_| Error::InvalidInput(format!("dimension {d64} too large")))?;
    if k == 0 {
        return Err(Error::InvalidInput("truncation exponent k must be >= 1".into()));
    }
    let labels = power_labels("t", d);
    let mut comul = Matrix::zero(field, d * d, d);
    let mut counit = Matrix::zero(field, 1, d);
    let mut mul = Matrix::zero(field, d, d * d);
    let mut antipode = Matrix::zero(field, d, d);
    counit.set(0, 0, field.one());
    for m in 0..d {
        for i in 0..=m {
            let c = field.from_bigint(&BigInt::from(binomial_big(m as u64, i as u64)));
            if !c.is_zero() {
                comul.set(i * d + (m - i), m, c);
            }
        }
        antipode.set(m, m, field.from_integer(if m % 2 == 0 { 1 } else { -1 }));
        for j in 0..d {
            if m + j < d {
                // t^m · t^j = t^{m+j}; products reaching t^{p^k} are zero.
                mul.set(m + j, m * d + j, field.one());
            }
        }
    }
    let coalgebra = Coalgebra::new(
        field,
        labels,
        comul,
        counit,
        svec::unit(0, field),
        Some((0..d).collect()),
    )?;
    let bialgebra = Bialgebra::new(coalgebra, mul, None)?;
    let hopf = HopfAlgebra::new(bialgebra, antipode)?;
    ensure_valid(&hopf, "truncated polynomial Hopf algebra")?;
    Ok(hopf)
}

/// The linear dual Hopf algebra: every table transposed, multiplication and
/// comultiplication trading places, unit and counit likewise. Only total
/// (non-windowed) algebras dualize — a partial product would give a partial
/// comultiplication, which nothing downstream could use.
pub fn dual_hopf(h: &HopfAlgebra) -> Result<HopfAlgebra> {
    if h.bialgebra.window.is_some() {
        return Err(Error::RequiresTotalMul);
    }
    let field = h.field();
    let d = h.dim();
    let c = h.coalgebra();
    let comul = h.bialgebra.mul.transpose();
    let mul = c.comul.transpose();
    // 1_{H*} = ε_H as a vector; ε_{H*} = evaluation at 1_H.
    let mut unit = SparseVec::new();
    for j in 0..d {
        let s = c.counit.get(0, j);
        if !s.is_zero() {
            unit.insert(j, s);
        }
    }
    let mut counit = Matrix::zero(field, 1, d);
    for (&i, s) in &c.unit {
        counit.set(0, i, s.clone());
    }
    let labels = c.labels.iter().map(|l| format!("{l}*")).collect();
    let coalgebra = Coalgebra::new(field, labels, comul, counit, unit, c.degrees.clone())?;
    let bialgebra = Bialgebra::new(coalgebra, mul, None)?;
    let hopf = HopfAlgebra::new(bialgebra, h.antipode.transpose())?;
    ensure_valid(&hopf, "dual Hopf algebra")?;
    Ok(hopf)
}

/// The degree ≤ D window of the polynomial bialgebra 𝕜[t] with t primitive.
/// The comultiplication is exact; t^a·t^b overflows when a+b > D.
pub fn polynomial_window(field: FieldSpec, max_degree: usize) -> Result<Bialgebra> {
    let d = max_degree + 1;
    let labels = power_labels("t", d);
    let mut comul = Matrix::zero(field, d * d, d);
    let mut counit = Matrix::zero(field, 1, d);
    let mut mul = Matrix::zero(field, d, d * d);
    counit.set(0, 0, field.one());
    for m in 0..d {
        for i in 0..=m {
            let c = field.from_bigint(&BigInt::from(binomial_big(m as u64, i as u64)));
            if !c.is_zero() {
                comul.set(i * d + (m - i), m, c);
            }
        }
        for j in 0..d {
            if m + j < d {
                mul.set(m + j, m * d + j, field.one());
            }
        }
    }
    let coalgebra = Coalgebra::new(
        field,
        labels,
        comul,
        counit,
        svec::unit(0, field),
        Some((0..d).collect()),
    )?;
    let window = TruncationWindow::new(max_degree, max_degree == 0);
    let bialgebra = Bialgebra::new(coalgebra, mul, Some(window))?;
    ensure_valid_bialgebra(&bialgebra, "polynomial window")?;
    Ok(bialgebra)
}

/// Words of length ≤ max_len over an alphabet of `letters` symbols, ordered
/// by length then lexicographically; paired with a map back to indices.
/// Shared with the functor layer, which selects multilinear words out of
/// this basis.
pub(crate) fn words_up_to(letters: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut words: Vec<Vec<usize>> = vec![Vec::new()];
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for a in 0..letters {
                let mut v = w.clone();
                v.push(a);
                next.push(v);
            }
        }
        words.extend(next.iter().cloned());
        layer = next;
    }
    words
}

pub(crate) fn word_index(words: &[Vec<usize>]) -> std::collections::BTreeMap<Vec<usize>, usize> {
    words
        .iter()
        .enumerate()
        .map(|(i, w)| (w.clone(), i))
        .collect()
}

fn word_label(prefix: &str, w: &[usize]) -> String {
    if w.is_empty() {
        "[]".to_string()
    } else {
        format!(
            "[{}]",
            w.iter()
                .map(|&a| format!("{prefix}{}", a + 1))
                .collect::<Vec<_>>()
                .join("|")
        )
    }
}

/// The degree ≤ D window of the shuffle Hopf algebra Sh(V) on a space V of
/// dimension `dim_v`: basis the words [v_{i₁}|…|v_{iℓ}] with ℓ ≤ D,
/// deconcatenation comultiplication, shuffle product, antipode
/// S[v₁|…|v_n] = (−1)ⁿ[v_n|…|v₁]. Cocommutative only when dim V ≤ 1.
pub fn shuffle_window(field: FieldSpec, dim_v: usize, max_degree: usize) -> Result<HopfAlgebra> {
    if dim_v == 0 {
        return Err(Error::InvalidInput("shuffle window needs dim V >= 1".into()));
    }
    let words = words_up_to(dim_v, max_degree);
    let index = word_index(&words);
    let d = words.len();
    let labels: Vec<String> = words.iter().map(|w| word_label("v", w)).collect();
    let degrees: Vec<usize> = words.iter().map(|w| w.len()).collect();

    let mut comul = Matrix::zero(field, d * d, d);
    let mut counit = Matrix::zero(field, 1, d);
    let mut mul = Matrix::zero(field, d, d * d);
    let mut antipode = Matrix::zero(field, d, d);
    counit.set(0, 0, field.one());
    for (j, w) in words.iter().enumerate() {
        // Deconcatenation: Δ[w] = Σ_{i} [w_{<i}] ⊗ [w_{≥i}].
        for cut in 0..=w.len() {
            let l = index[&w[..cut].to_vec()];
            let r = index[&w[cut..].to_vec()];
            comul.set(l * d + r, j, comul.get(l * d + r, j).add(&field.one()));
        }
        // S[w] = (−1)^{|w|} [reverse w].
        let mut rev = w.clone();
        rev.reverse();
        antipode.set(
            index[&rev],
            j,
            field.from_integer(if w.len() % 2 == 0 { 1 } else { -1 }),
        );
    }
    // Shuffle product on in-window pairs.
    use itertools::Itertools;
    for (i, u) in words.iter().enumerate() {
        for (j, v) in words.iter().enumerate() {
            let total = u.len() + v.len();
            if total > max_degree {
                continue;
            }
            for positions in (0..total).combinations(u.len()) {
                let mut w = vec![usize::MAX; total];
                for (k, &pos) in positions.iter().enumerate() {
                    w[pos] = u[k];
                }
                let mut vi = 0;
                for slot in w.iter_mut() {
                    if *slot == usize::MAX {
                        *slot = v[vi];
                        vi += 1;
                    }
                }
                let target = index[&w];
                mul.set(target, i * d + j, mul.get(target, i * d + j).add(&field.one()));
            }
        }
    }

    let coalgebra = Coalgebra::new(
        field,
        labels,
        comul,
        counit,
        svec::unit(0, field),
        Some(degrees),
    )?;
    let window = TruncationWindow::new(max_degree, max_degree == 0);
    let bialgebra = Bialgebra::new(coalgebra, mul, Some(window))?;
    let hopf = HopfAlgebra::new(bialgebra, antipode)?;
    ensure_valid(&hopf, "shuffle window")?;
    Ok(hopf)
}

/// The degree ≤ D window of the tensor Hopf algebra 𝕜⟨x₁,…,x_n⟩ with each
/// generator primitive: concatenation product,
/// Δ(w) = Σ_{S ⊆ positions} w_S ⊗ w_{S^c}, S(w) = (−1)^{|w|}·reverse(w).
/// Cocommutative for every n (the subsets pair off S ↔ S^c).
pub fn tensor_hopf_window(field: FieldSpec, n_vars: usize, max_degree: usize) -> Result<HopfAlgebra> {
    if n_vars == 0 {
        return Err(Error::InvalidInput("tensor Hopf window needs n >= 1".into()));
    }
    let words = words_up_to(n_vars, max_degree);
    let index = word_index(&words);
    let d = words.len();
    let labels: Vec<String> = words.iter().map(|w| word_label("x", w)).collect();
    let degrees: Vec<usize> = words.iter().map(|w| w.len()).collect();

    let mut comul = Matrix::zero(field, d * d, d);
    let mut counit = Matrix::zero(field, 1, d);
    let mut mul = Matrix::zero(field, d, d * d);
    let mut antipode = Matrix::zero(field, d, d);
    counit.set(0, 0, field.one());
    for (j, w) in words.iter().enumerate() {
        let len = w.len();
        // Δ(x_{i₁}⋯x_{iℓ}) = Π (x_i⊗1 + 1⊗x_i), expanded by subsets.
        for mask in 0u32..(1u32 << len) {
            let mut left = Vec::new();
            let mut right = Vec::new();
            for (pos, &letter) in w.iter().enumerate() {
                if mask & (1 << pos) != 0 {
                    left.push(letter);
                } else {
                    right.push(letter);
                }
            }
            let l = index[&left];
            let r = index[&right];
            comul.set(l * d + r, j, comul.get(l * d + r, j).add(&field.one()));
        }
        let mut rev = w.clone();
        rev.reverse();
        antipode.set(
            index[&rev],
            j,
            field.from_integer(if len % 2 == 0 { 1 } else { -1 }),
        );
        // Concatenation on in-window pairs.
        for (k, v) in words.iter().enumerate() {
            if len + v.len() > max_degree {
                continue;
            }
            let mut wv = w.clone();
            wv.extend_from_slice(v);
            mul.set(index[&wv], j * d + k, field.one());
        }
    }

    let coalgebra = Coalgebra::new(
        field,
        labels,
        comul,
        counit,
        svec::unit(0, field),
        Some(degrees),
    )?;
    let window = TruncationWindow::new(max_degree, max_degree == 0);
    let bialgebra = Bialgebra::new(coalgebra, mul, Some(window))?;
    let hopf = HopfAlgebra::new(bialgebra, antipode)?;
    ensure_valid(&hopf, "tensor Hopf window")?;
    Ok(hopf)
}

fn power_labels(var: &str, d: usize) -> Vec<String> {
    (0..d)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        })
        .collect()
}

fn ensure_valid(h: &HopfAlgebra, what: &str) -> Result<()> {
    let report = h.validate()?;
    if report.passed() {
        Ok(())
    } else {
        Err(Error::Validation(format!(
            "{what} failed validation: {:?}",
            report.failures
        )))
    }
}

fn ensure_valid_bialgebra(b: &Bialgebra, what: &str) -> Result<()> {
    let report = b.validate()?;
    if report.passed() {
        Ok(())
    } else {
        Err(Error::Validation(format!(
            "{what} failed validation: {:?}",
            report.failures
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_and_symmetric_tables() {
        let z4 = FiniteGroupTable::cyclic(4);
        assert_eq!(z4.order(), 4);
        assert_eq!(z4.mul(1, 3), 0); // g·g³ = e
        assert_eq!(z4.inverse(1), 3);

        let s3 = FiniteGroupTable::symmetric(3);
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.labels()[0], "e");
        // (1 2)·(1 3) ≠ (1 3)·(1 2) in S₃.
        let t12 = s3.labels().iter().position(|l| l == "(1 2)").unwrap();
        let t13 = s3.labels().iter().position(|l| l == "(1 3)").unwrap();
        assert_ne!(s3.mul(t12, t13), s3.mul(t13, t12));
    }

    #[test]
    fn bad_tables_are_rejected() {
        // A "table" without identity.
        let t = vec![vec![1, 0], vec![1, 0]];
        assert!(FiniteGroupTable::new(vec!["a".into(), "b".into()], t).is_err());
        // Non-associative magma on 3 elements (identity present):
        // 1·(1·1) = 1·2 = 0 but (1·1)·1 = 2·1 = 1 under this table.
        let t = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 1, 0]];
        assert!(FiniteGroupTable::new(
            vec!["e".into(), "a".into(), "b".into()],
            t
        )
        .is_err());
    }

    #[test]
    fn trivial_group_algebra() {
        let h = group_algebra(&FiniteGroupTable::cyclic(1), FieldSpec::Q).unwrap();
        assert_eq!(h.dim(), 1);
        assert!(h.validate().unwrap().passed());
    }

    #[test]
    fn s3_group_algebra_commutativity() {
        let h = group_algebra(&FiniteGroupTable::symmetric(3), FieldSpec::Q).unwrap();
        assert!(h.bialgebra.is_cocommutative());
        assert!(!h.bialgebra.is_commutative());
    }

    #[test]
    fn truncated_polynomial_f2_dim2() {
        let h = truncated_polynomial_hopf(2, 1).unwrap();
        assert_eq!(h.dim(), 2);
        let prim = h.coalgebra().primitives();
        assert_eq!(prim.dim(), 1);
        assert!(prim.contains(&svec::unit(1, h.field())));
        assert_eq!(h.coalgebra().conilpotency_degree(), Some(1));
    }

    #[test]
    fn dual_of_dual_restores_tables() {
        let h = truncated_polynomial_hopf(2, 2).unwrap();
        let dd = dual_hopf(&dual_hopf(&h).unwrap()).unwrap();
        assert!(dd.bialgebra.mul.sub(&h.bialgebra.mul).is_zero());
        assert!(dd
            .coalgebra()
            .comul
            .sub(&h.coalgebra().comul)
            .is_zero());
        assert!(dd.antipode.sub(&h.antipode).is_zero());
        assert_eq!(dd.coalgebra().unit, h.coalgebra().unit);
    }

    #[test]
    fn dual_of_truncated_polynomial_is_divided_powers() {
        // γ_i·γ_j = C(i+j, i) γ_{i+j} in dual(𝔽₂[t]/(t⁴)): γ₁·γ₁ = 2γ₂ = 0,
        // γ₁·γ₂ = 3γ₃ = γ₃.
        let h = dual_hopf(&truncated_polynomial_hopf(2, 2).unwrap()).unwrap();
        let f = h.field();
        let g1 = svec::unit(1, f);
        let g2 = svec::unit(2, f);
        assert!(h.bialgebra.mul_vec(&g1, &g1).unwrap().is_empty());
        assert_eq!(h.bialgebra.mul_vec(&g1, &g2).unwrap(), svec::unit(3, f));
        // Δγ₃ = Σ_{i+j=3} γᵢ⊗γⱼ — four summands, all coefficient 1.
        let d3 = h.coalgebra().comul.apply(&svec::unit(3, f));
        assert_eq!(d3.len(), 4);
        assert!(d3.values().all(|s| s.is_one()));
    }

    #[test]
    fn shuffle_window_products() {
        // ℚ: [v]⧢[v] = 2[v|v]; 𝔽₂: the same product vanishes.
        let hq = shuffle_window(FieldSpec::Q, 1, 2).unwrap();
        let v = svec::unit(1, hq.field());
        let prod = hq.bialgebra.mul_vec(&v, &v).unwrap();
        assert_eq!(prod.len(), 1);
        assert_eq!(prod.get(&2), Some(&hq.field().from_integer(2)));

        let h2 = shuffle_window(FieldSpec::fp(2).unwrap(), 1, 2).unwrap();
        let v = svec::unit(1, h2.field());
        assert!(h2.bialgebra.mul_vec(&v, &v).unwrap().is_empty());
    }

    #[test]
    fn shuffle_cocommutativity_exactly_when_dim_v_is_one() {
        assert!(shuffle_window(FieldSpec::Q, 1, 3)
            .unwrap()
            .bialgebra
            .is_cocommutative());
        let h = shuffle_window(FieldSpec::Q, 2, 3).unwrap();
        assert!(h.bialgebra.is_commutative());
        assert!(!h.bialgebra.is_cocommutative());
    }

    #[test]
    fn tensor_hopf_comultiplication_of_x1x2() {
        let h = tensor_hopf_window(FieldSpec::Q, 2, 2).unwrap();
        let f = h.field();
        let lbl = |s: &str| {
            h.bialgebra
                .labels()
                .iter()
                .position(|l| l == s)
                .unwrap_or_else(|| panic!("missing label {s}"))
        };
        let (one, x1, x2, x1x2) = (lbl("[]"), lbl("[x1]"), lbl("[x2]"), lbl("[x1|x2]"));
        let d = h.dim();
        let dx = h.coalgebra().comul.apply(&svec::unit(x1x2, f));
        // Δ(x₁x₂) = x₁x₂⊗1 + x₁⊗x₂ + x₂⊗x₁ + 1⊗x₁x₂.
        let mut expected = SparseVec::new();
        expected.insert(x1x2 * d + one, f.one());
        expected.insert(x1 * d + x2, f.one());
        expected.insert(x2 * d + x1, f.one());
        expected.insert(one * d + x1x2, f.one());
        assert_eq!(dx, expected);
        assert!(h.bialgebra.is_cocommutative());
        assert!(!h.bialgebra.is_commutative());
    }
}
