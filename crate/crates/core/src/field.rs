//! Exact scalars over the two supported ground fields: the rationals and the
//! prime fields 𝔽_p.
//!
//! Rationals are arbitrary-precision and kept in lowest terms with positive
//! denominator (guaranteed by `BigRational`); 𝔽_p elements are residues in
//! `0..p` with the modulus carried alongside. Mixing scalars from different
//! fields in one arithmetic operation is a programming error and panics;
//! fallible conversions live at API boundaries.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::error::{Error, Result};

/// The ground field: characteristic 0 (ℚ) or a prime characteristic p (𝔽_p).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum FieldSpec {
    /// The rational numbers.
    Q,
    /// The prime field with `p` elements. Constructed only through
    /// [`FieldSpec::fp`], which checks primality.
    Fp(u64),
}

impl FieldSpec {
    /// The rationals.
    pub fn rationals() -> Self {
        FieldSpec::Q
    }

    /// The prime field 𝔽_p. Fails if `p` is not prime.
    pub fn fp(p: u64) -> Result<Self> {
        if is_prime_u64(p) {
            Ok(FieldSpec::Fp(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    /// 0 for ℚ, p for 𝔽_p.
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Q => 0,
            FieldSpec::Fp(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Q => Scalar::Rat(BigRational::zero()),
            FieldSpec::Fp(p) => Scalar::ModP { r: 0, p: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Q => Scalar::Rat(BigRational::one()),
            FieldSpec::Fp(p) => Scalar::ModP { r: 1, p: *p },
        }
    }

    /// The image of an integer under the canonical map ℤ → 𝕜.
    pub fn from_integer(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Q => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Fp(p) => {
                let r = n.rem_euclid(*p as i64) as u64;
                Scalar::ModP { r, p: *p }
            }
        }
    }

    /// The image of an arbitrary-precision integer under ℤ → 𝕜.
    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self {
            FieldSpec::Q => Scalar::Rat(BigRational::from_integer(n.clone())),
            FieldSpec::Fp(p) => {
                let m = BigInt::from(*p);
                let r = ((n % &m) + &m) % &m;
                let digits = r.to_u64_digits().1;
                Scalar::ModP {
                    r: digits.first().copied().unwrap_or(0),
                    p: *p,
                }
            }
        }
    }

    /// Parse a scalar from its text form: an integer, or `a/b`.
    /// Over 𝔽_p the fraction means a·b⁻¹ (b must be a unit).
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let bad = || Error::ScalarParse(s.to_string());
        let (num_s, den_s) = match s.split_once('/') {
            Some((a, b)) => (a.trim(), Some(b.trim())),
            None => (s, None),
        };
        let num: BigInt = num_s.parse().map_err(|_| bad())?;
        let num = self.from_bigint(&num);
        match den_s {
            None => Ok(num),
            Some(d) => {
                let den: BigInt = d.parse().map_err(|_| bad())?;
                let den = self.from_bigint(&den);
                if den.is_zero() {
                    return Err(bad());
                }
                Ok(num.mul(&den.inv()))
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Q => write!(f, "Q"),
            FieldSpec::Fp(p) => write!(f, "F{p}"),
        }
    }
}

/// An exact field element. Rationals are stored in lowest terms with positive
/// denominator; residues are reduced mod p and remember their modulus.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Scalar {
    Rat(BigRational),
    ModP { r: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rat(_) => FieldSpec::Q,
            Scalar::ModP { p, .. } => FieldSpec::Fp(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(q) => q.is_zero(),
            Scalar::ModP { r, .. } => *r == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(q) => q.is_one(),
            Scalar::ModP { r, .. } => *r == 1,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::ModP { r: a, p }, Scalar::ModP { r: b, p: q }) => {
                assert_eq!(p, q, "mixed moduli in scalar arithmetic");
                Scalar::ModP {
                    r: ((*a as u128 + *b as u128) % *p as u128) as u64,
                    p: *p,
                }
            }
            _ => panic!("mixed fields in scalar arithmetic"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::ModP { r: a, p }, Scalar::ModP { r: b, p: q }) => {
                assert_eq!(p, q, "mixed moduli in scalar arithmetic");
                Scalar::ModP {
                    r: ((*a as u128 * *b as u128) % *p as u128) as u64,
                    p: *p,
                }
            }
            _ => panic!("mixed fields in scalar arithmetic"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::ModP { r, p } => Scalar::ModP {
                r: if *r == 0 { 0 } else { p - r },
                p: *p,
            },
        }
    }

    /// Multiplicative inverse. Panics on zero (callers check first).
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => {
                assert!(!a.is_zero(), "inverse of zero");
                Scalar::Rat(a.recip())
            }
            Scalar::ModP { r, p } => {
                assert!(*r != 0, "inverse of zero");
                Scalar::ModP {
                    r: mod_pow(*r, p - 2, *p),
                    p: *p,
                }
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }

    /// Text form accepted back by [`FieldSpec::parse_scalar`]: `a/b` for
    /// non-integral rationals, plain integer otherwise, residue for 𝔽_p.
    pub fn to_text(&self) -> String {
        match self {
            Scalar::Rat(q) => {
                if q.is_integer() {
                    q.numer().to_string()
                } else {
                    format!("{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::ModP { r, .. } => r.to_string(),
        }
    }

    /// `true` for rationals with negative sign (used only for pretty-printing
    /// linear combinations; residues are never negative).
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rat(q) => q.is_negative(),
            Scalar::ModP { .. } => false,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Deterministic Miller–Rabin, valid for all u64 inputs with this witness set.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let m = modulus as u128;
    let mut acc: u128 = 1;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Exact binomial coefficient as an arbitrary-precision integer.
pub fn binomial_big(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(3));
        assert!(is_prime_u64(5));
        assert!(is_prime_u64(97));
        assert!(is_prime_u64(2_147_483_647)); // Mersenne prime 2^31 - 1
        assert!(!is_prime_u64(0));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(4));
        assert!(!is_prime_u64(91)); // 7 * 13
        assert!(FieldSpec::fp(6).is_err());
    }

    #[test]
    fn rational_arithmetic_lowest_terms() {
        let f = FieldSpec::Q;
        let half = f.parse_scalar("1/2").unwrap();
        let third = f.parse_scalar("1/3").unwrap();
        let sum = half.add(&third);
        assert_eq!(sum.to_text(), "5/6");
        let neg = f.parse_scalar("-2/4").unwrap();
        assert_eq!(neg.to_text(), "-1/2");
        assert_eq!(half.mul(&f.from_integer(2)).to_text(), "1");
    }

    #[test]
    fn mod_p_arithmetic() {
        let f = FieldSpec::fp(5).unwrap();
        let a = f.from_integer(3);
        let b = f.from_integer(4);
        assert_eq!(a.add(&b).to_text(), "2");
        assert_eq!(a.mul(&b).to_text(), "2");
        assert_eq!(a.neg().to_text(), "2");
        assert_eq!(a.inv().mul(&a).to_text(), "1");
        assert_eq!(f.from_integer(-1).to_text(), "4");
        // 1/2 = 3 in F5
        assert_eq!(f.parse_scalar("1/2").unwrap().to_text(), "3");
    }

    #[test]
    fn parse_round_trip() {
        let f = FieldSpec::Q;
        for s in ["0", "7", "-3", "22/7", "-5/9"] {
            let x = f.parse_scalar(s).unwrap();
            assert_eq!(f.parse_scalar(&x.to_text()).unwrap(), x);
        }
        assert!(f.parse_scalar("1/0").is_err());
        assert!(f.parse_scalar("x").is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial_big(6, 3), BigUint::from(20u32));
        assert_eq!(binomial_big(10, 0), BigUint::one());
        assert_eq!(binomial_big(4, 7), BigUint::zero());
        // C(63, 31) is odd (all base-2 digits of 63 are 1)
        assert_eq!(binomial_big(63, 31) % BigUint::from(2u32), BigUint::one());
    }
}
