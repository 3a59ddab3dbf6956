//! Flag parsing, witness formatting, and seeded sampling shared by the
//! commands.

use hopfcorad_core::field::{FieldSpec, Scalar};
use hopfcorad_core::matrix::{svec, SparseVec};
use hopfcorad_core::subspace::Subspace;
use hopfcorad_core::tensor::TensorIndex;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// `--field` grammar: `Q` or `Fp:<p>`.
pub fn parse_field_flag(s: &str) -> Result<FieldSpec, String> {
    if s == "Q" {
        return Ok(FieldSpec::Q);
    }
    if let Some(p) = s.strip_prefix("Fp:") {
        let p: u64 = p.parse().map_err(|e| format!("bad prime in {s:?}: {e}"))?;
        return FieldSpec::fp(p).map_err(|e| e.to_string());
    }
    Err(format!("expected Q or Fp:<p>, got {s:?}"))
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// A sparse vector of H^{⊗power} as text over the basis labels, e.g.
/// `t⊗1 + 2*1⊗t`. Terms come out in index order; the zero vector is `0`.
pub fn format_vec(labels: &[String], power: usize, v: &SparseVec) -> String {
    if v.is_empty() {
        return "0".to_string();
    }
    let idx = TensorIndex::power(labels.len(), power);
    let mut parts = Vec::with_capacity(v.len());
    for (&flat, s) in v {
        let name = match idx.decode(flat) {
            Ok(factors) => factors
                .iter()
                .map(|&i| labels[i].clone())
                .collect::<Vec<_>>()
                .join("⊗"),
            Err(_) => format!("e_{flat}"),
        };
        if s.is_one() {
            parts.push(name);
        } else {
            parts.push(format!("{}*{}", s.to_text(), name));
        }
    }
    parts.join(" + ")
}

/// The label of one tensor-power basis vector.
pub fn basis_label(labels: &[String], power: usize, flat: usize) -> String {
    format_vec(labels, power, &svec::unit(flat, FieldSpec::Q))
}

/// A random combination of the subspace's basis: small integers over ℚ,
/// uniform residues over 𝔽_p. The zero vector is a legitimate draw.
pub fn sample_in(rng: &mut ChaCha8Rng, space: &Subspace) -> SparseVec {
    let field = space.field();
    let mut v = SparseVec::new();
    for b in space.basis() {
        let c = random_scalar(rng, field);
        svec::add_scaled(&mut v, b, &c);
    }
    v
}

pub fn random_scalar(rng: &mut ChaCha8Rng, field: FieldSpec) -> Scalar {
    match field {
        FieldSpec::Q => field.from_integer(rng.gen_range(-3..=3)),
        FieldSpec::Fp(p) => field.from_integer(rng.gen_range(0..p) as i64),
    }
}
