//! Randomized laws for the free-group category and its rewriting layer.
//!
//! The unit tests pin each rewriting rule on a hand example; here the rules
//! are exercised in bulk: ideal membership always reduces to zero, the
//! missing-variable and monomial lemmas hold across their stated ranges,
//! randomized split strategies land on the same normal form as the leftmost
//! one, the word-tuple embedding into group words is functorial, and the
//! printer/parser pair round-trips arbitrary combinations.

use hopfcorad_core::field::FieldSpec;
use hopfcorad_core::grop::{
    ass_basis, parse_lin, reduce_mod_ideal, reduce_mod_ideal_with, theta_insertion, FreeWord,
    GropMorphism, Letter, LinMorphism,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn q() -> FieldSpec {
    FieldSpec::rationals()
}

fn random_word(rng: &mut ChaCha8Rng, vars: usize, max_len: usize) -> FreeWord {
    let len = rng.gen_range(0..=max_len);
    FreeWord::from_letters((0..len).map(|_| {
        let var = rng.gen_range(1..=vars);
        if rng.gen_bool(0.3) {
            Letter { var, exp: -1 }
        } else {
            Letter { var, exp: 1 }
        }
    }))
}

fn random_morphism(rng: &mut ChaCha8Rng, source: usize, target: usize) -> GropMorphism {
    loop {
        let words = (0..target).map(|_| random_word(rng, source, 4)).collect();
        if let Ok(m) = GropMorphism::new(source, words) {
            return m;
        }
    }
}

fn random_lin(rng: &mut ChaCha8Rng, source: usize, target: usize, terms: usize) -> LinMorphism {
    let mut l = LinMorphism::zero(q(), source, target);
    for _ in 0..terms {
        let c = q().from_integer(rng.gen_range(-2..=2i64));
        l.add_term_scaled(random_morphism(rng, source, target), &c)
            .unwrap();
    }
    l
}

/// A tuple omitting one variable entirely is congruent to zero — here as
/// the identity tuple with slot i deleted, for every n ≤ 4 and i ≤ n.
#[test]
fn tuples_missing_a_variable_reduce_to_zero() {
    for n in 1..=4usize {
        for skip in 1..=n {
            let words: Vec<FreeWord> = (1..=n)
                .filter(|&v| v != skip)
                .map(FreeWord::generator)
                .collect();
            let m = GropMorphism::new(n, words).unwrap();
            let mut l = LinMorphism::zero(q(), n, n - 1);
            l.add_term_scaled(m, &q().one()).unwrap();
            assert!(
                reduce_mod_ideal(&l).is_zero(),
                "identity-minus-x{skip} at n = {n} should die"
            );
        }
    }
}

/// Left-ideal membership: anything of the form g ∘ (id ∗ θ ∗ id) reduces
/// to zero, for random g over every insertion position.
#[test]
fn left_multiples_of_theta_insertions_vanish() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let n = rng.gen_range(1..=3usize);
        let i = rng.gen_range(1..=n);
        let insertion = theta_insertion(q(), n, i).unwrap();
        let m_out = rng.gen_range(1..=3usize);
        let g = random_morphism(&mut rng, n + 1, m_out);
        let mut g_lin = LinMorphism::zero(q(), n + 1, m_out);
        g_lin.add_term_scaled(g, &q().one()).unwrap();
        let member = g_lin.compose(&insertion).unwrap();
        assert!(
            reduce_mod_ideal(&member).is_zero(),
            "ideal member survived reduction: {member}"
        );
    }
}

/// The monomial lemma on randomized instances: a single word
/// x_{σ(1)}^{a₁} ⋯ x_{σ(n)}^{aₙ} collapses to the product of exponents
/// times the multilinear word (a zero exponent omits the variable and
/// correctly kills the whole thing).
#[test]
fn monomial_words_scale_by_the_exponent_product() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..60 {
        let n = rng.gen_range(1..=3usize);
        let mut sigma: Vec<usize> = (1..=n).collect();
        for i in (1..n).rev() {
            let j = rng.gen_range(0..=i);
            sigma.swap(i, j);
        }
        let exps: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3i64)).collect();

        let word = sigma
            .iter()
            .zip(&exps)
            .fold(FreeWord::from_letters([]), |acc, (&v, &a)| {
                acc.concat(&FreeWord::generator_power(v, a))
            });
        let mut input = LinMorphism::zero(q(), n, 1);
        input
            .add_term_scaled(GropMorphism::new(n, vec![word]).unwrap(), &q().one())
            .unwrap();

        let coeff: i64 = exps.iter().product();
        let plain = sigma
            .iter()
            .fold(FreeWord::from_letters([]), |acc, &v| {
                acc.concat(&FreeWord::generator(v))
            });
        let mut expected = LinMorphism::zero(q(), n, 1);
        expected
            .add_term_scaled(
                GropMorphism::new(n, vec![plain]).unwrap(),
                &q().from_integer(coeff),
            )
            .unwrap();
        assert_eq!(
            reduce_mod_ideal(&input),
            expected,
            "monomial law fails for σ = {sigma:?}, exponents {exps:?}"
        );
    }
}

/// Twenty split strategies — leftmost plus nineteen seeded random pickers —
/// agree on the normal form of random combinations.
#[test]
fn randomized_strategies_agree_with_leftmost() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for case in 0..30 {
        let n = rng.gen_range(1..=3usize);
        let m = rng.gen_range(1..=3usize);
        let input = random_lin(&mut rng, n, m, rng.gen_range(1..=3));
        let reference = reduce_mod_ideal(&input);
        for strategy in 0..19u64 {
            let mut picker = ChaCha8Rng::seed_from_u64(1000 * case + strategy);
            let candidate = reduce_mod_ideal_with(&input, |_, occurrences| {
                picker.gen_range(0..occurrences.len())
            });
            assert_eq!(
                candidate, reference,
                "strategy {strategy} diverges on case {case}: {input}"
            );
        }
    }
}

/// ℰ is a functor: embedding word tuples commutes with composition, over
/// random composable pairs from the enumerated bases.
#[test]
fn embedding_is_functorial_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for _ in 0..200 {
        let n = rng.gen_range(1..=3usize);
        let mid = rng.gen_range(1..=3usize);
        let l = rng.gen_range(1..=3usize);
        let inner = &ass_basis(n, mid);
        let outer = &ass_basis(mid, l);
        let a = &inner[rng.gen_range(0..inner.len())];
        let b = &outer[rng.gen_range(0..outer.len())];
        let composed = b.compose(a).unwrap();
        assert_eq!(
            composed.embed(),
            b.embed().compose(&a.embed()).unwrap(),
            "ℰ(b∘a) ≠ ℰ(b)∘ℰ(a) for a = {:?}, b = {:?}",
            a.words(),
            b.words()
        );
    }
}

/// Printing and reparsing is the identity on normal-form combinations and
/// on raw random ones.
#[test]
fn text_round_trip_on_random_combinations() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..50 {
        let n = rng.gen_range(1..=3usize);
        let m = rng.gen_range(1..=3usize);
        let raw = random_lin(&mut rng, n, m, rng.gen_range(1..=3));
        let reparsed = parse_lin(&raw.to_text(), q()).unwrap();
        assert_eq!(reparsed, raw);

        let normal = reduce_mod_ideal(&raw);
        let reparsed_normal = parse_lin(&normal.to_text(), q()).unwrap();
        assert_eq!(reparsed_normal, normal);
    }
}

/// Rewriting is a projection: normal forms are fixed points, so reducing
/// twice equals reducing once on random inputs.
#[test]
fn reduction_is_idempotent_on_random_inputs() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    for _ in 0..40 {
        let n = rng.gen_range(1..=3usize);
        let m = rng.gen_range(1..=3usize);
        let input = random_lin(&mut rng, n, m, rng.gen_range(1..=3));
        let once = reduce_mod_ideal(&input);
        assert_eq!(reduce_mod_ideal(&once), once);
    }
}
