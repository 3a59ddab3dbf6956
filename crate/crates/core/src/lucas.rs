//! Digit-sum combinatorics behind the coradical filtration of 𝕜[t] in
//! characteristic p.
//!
//! For the polynomial bialgebra over 𝔽_p, t^m lies in P_r exactly when some
//! multinomial coefficient (m; k₁,…,k_r) with positive parts is coprime to
//! p — equivalently (by Lucas's theorem, carried in base p) when r does not
//! exceed the digit sum L_p(m).  [`lucas_predicate`] decides the left-hand
//! side by exhaustive search over compositions, with exact integer
//! multinomials reduced mod p; the digit-sum formula stays an independent
//! cross-check, not the implementation.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::field::binomial_big;

/// L_p(m): the sum of the base-p digits of m.
pub fn digit_sum(p: u64, mut m: u64) -> u64 {
    assert!(p >= 2, "digit sum needs a base >= 2");
    let mut s = 0;
    while m > 0 {
        s += m % p;
        m /= p;
    }
    s
}

/// Whether there exist k₁,…,k_r ≥ 1 with k₁+⋯+k_r = m and the multinomial
/// (m; k₁,…,k_r) coprime to p.
///
/// Brute force over compositions, organized as a recursion on the first
/// part: (m; k₁,…,k_r) = C(m, k₁)·(m−k₁; k₂,…,k_r), and a product of
/// residues is nonzero mod p iff every factor is — so branches whose
/// leading binomial vanishes are discarded without losing any composition,
/// and visited states (m, r) are memoized.
pub fn lucas_predicate(m: u64, r: u64, p: u64) -> bool {
    assert!(crate::field::is_prime_u64(p), "modulus must be prime");
    assert!(r >= 1, "the predicate needs at least one part");
    let mut memo = HashMap::new();
    predicate_inner(m, r, p, &mut memo)
}

fn predicate_inner(m: u64, r: u64, p: u64, memo: &mut HashMap<(u64, u64), bool>) -> bool {
    if r == 1 {
        // One block: the multinomial is 1, which is always coprime to p.
        return m >= 1;
    }
    if m < r {
        return false; // not enough room for r positive parts
    }
    if let Some(&hit) = memo.get(&(m, r)) {
        return hit;
    }
    let big_p = BigUint::from(p);
    let mut found = false;
    for k1 in 1..=(m - (r - 1)) {
        if (binomial_big(m, k1) % &big_p).is_zero() {
            continue;
        }
        if predicate_inner(m - k1, r - 1, p, memo) {
            found = true;
            break;
        }
    }
    memo.insert((m, r), found);
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digit_sums() {
        assert_eq!(digit_sum(2, 3), 2); // 11₂
        assert_eq!(digit_sum(2, 8), 1); // 1000₂
        assert_eq!(digit_sum(3, 8), 4); // 22₃
        assert_eq!(digit_sum(5, 0), 0);
        assert_eq!(digit_sum(5, 24), 8); // 44₅
    }

    #[test]
    fn predicate_hand_cases() {
        // (1,2) works for m=3, r=2 mod 2: C(3,1) = 3 is odd.
        assert!(lucas_predicate(3, 2, 2));
        // (1,1,1) is the only composition of 3 into 3 parts; 3!/1 = 6 even.
        assert!(!lucas_predicate(3, 3, 2));
        // Single block always works.
        for m in 1..=64 {
            assert!(lucas_predicate(m, 1, 2));
            assert!(lucas_predicate(m, 1, 3));
        }
    }

    #[test]
    fn predicate_equals_digit_sum_bound() {
        for p in [2u64, 3, 5] {
            for m in 1..=40u64 {
                for r in 1..=m {
                    assert_eq!(
                        lucas_predicate(m, r, p),
                        r <= digit_sum(p, m),
                        "mismatch at m={m}, r={r}, p={p}"
                    );
                }
            }
        }
    }
}
