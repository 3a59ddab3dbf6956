//! Named builders: the textual algebra references accepted by the CLI.
//!
//! A reference is either a builder name with parameters or a path to a JSON
//! definition file (see [`crate::json`]):
//!
//! | name                       | structure                                   |
//! |----------------------------|---------------------------------------------|
//! | `group:Z<n>`               | 𝕜[ℤ/n] over the ambient field               |
//! | `group:S<n>`               | 𝕜[Σ_n] over the ambient field               |
//! | `group:<table.json>`       | group algebra of a multiplication table     |
//! | `trunc-poly:p^k`           | 𝔽_p[t]/(t^{pᵏ}), field forced to 𝔽_p       |
//! | `dual:<name>`              | dual Hopf algebra of another reference      |
//! | `poly-window:D`            | 𝕜[t] truncated at degree D (no antipode)    |
//! | `shuffle-window:dimV:D`    | Sh(V) truncated at degree D                 |
//! | `tensor-hopf-window:n:D`   | tensor Hopf algebra on n primitives, deg ≤ D|
//! | anything else              | path to a JSON definition file              |
//!
//! The ambient field is the CLI's `--field` flag; builders that determine
//! their own field (`trunc-poly`, and definition files, which carry one)
//! reject a contradictory ambient field instead of silently ignoring it.
//!
//! Table files are `{"order": N, "table": [[..]]}` with `table[i][j]` the
//! index of gᵢ·gⱼ; the identity is found, and inverses and associativity
//! verified, during construction. Labels default to `g0..g{N−1}` with the
//! identity relabeled `e`.

use std::path::Path;

use serde_json::Value;

use crate::builders::{
    dual_hopf, group_algebra, polynomial_window, shuffle_window, tensor_hopf_window,
    truncated_polynomial_hopf, FiniteGroupTable,
};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::json::{algebra_from_str, AlgebraDef};

fn unknown(name: &str, why: impl std::fmt::Display) -> Error {
    Error::UnknownAlgebra(format!("{name} ({why})"))
}

/// Resolves a reference against an optional ambient field (the CLI's
/// `--field` flag; `None` when the flag was not given, which means ℚ for
/// field-parametric builders).
pub fn resolve(name: &str, ambient: Option<FieldSpec>) -> Result<AlgebraDef> {
    let ambient_or_q = ambient.unwrap_or(FieldSpec::Q);
    match name.split_once(':') {
        Some(("group", rest)) => {
            let table = group_table(name, rest)?;
            Ok(AlgebraDef::Hopf(group_algebra(&table, ambient_or_q)?))
        }
        Some(("trunc-poly", rest)) => {
            let (p, k) = rest
                .split_once('^')
                .ok_or_else(|| unknown(name, "expected trunc-poly:p^k"))?;
            let p: u64 = p.parse().map_err(|e| unknown(name, e))?;
            let k: u32 = k.parse().map_err(|e| unknown(name, e))?;
            check_field(name, ambient, FieldSpec::fp(p)?)?;
            Ok(AlgebraDef::Hopf(truncated_polynomial_hopf(p, k)?))
        }
        Some(("dual", rest)) => {
            let inner = resolve(rest, ambient)?;
            let hopf = inner.hopf().ok_or_else(|| {
                Error::InvalidInput(format!(
                    "dual:{rest} needs a Hopf algebra, but {rest} has no antipode"
                ))
            })?;
            Ok(AlgebraDef::Hopf(dual_hopf(hopf)?))
        }
        Some(("poly-window", rest)) => {
            let d: usize = rest.parse().map_err(|e| unknown(name, e))?;
            Ok(AlgebraDef::Bialgebra(polynomial_window(ambient_or_q, d)?))
        }
        Some(("shuffle-window", rest)) => {
            let (dim_v, d) = two_numbers(name, rest)?;
            Ok(AlgebraDef::Hopf(shuffle_window(ambient_or_q, dim_v, d)?))
        }
        Some(("tensor-hopf-window", rest)) => {
            let (n, d) = two_numbers(name, rest)?;
            Ok(AlgebraDef::Hopf(tensor_hopf_window(ambient_or_q, n, d)?))
        }
        _ => {
            if !Path::new(name).is_file() {
                return Err(unknown(
                    name,
                    "not a builder name and not an existing definition file",
                ));
            }
            let def = algebra_from_str(&std::fs::read_to_string(name)?)?;
            if let Some(requested) = ambient {
                check_field(name, Some(requested), def.field())?;
            }
            validate_def(&def)?;
            Ok(def)
        }
    }
}

/// An ambient `--field` that contradicts a reference's intrinsic field is an
/// input error, not something to paper over.
fn check_field(name: &str, ambient: Option<FieldSpec>, intrinsic: FieldSpec) -> Result<()> {
    match ambient {
        Some(f) if f != intrinsic => Err(Error::InvalidInput(format!(
            "{name} lives over {intrinsic}, not {f}"
        ))),
        _ => Ok(()),
    }
}

fn two_numbers(name: &str, rest: &str) -> Result<(usize, usize)> {
    let (a, b) = rest
        .split_once(':')
        .ok_or_else(|| unknown(name, "expected two :-separated parameters"))?;
    Ok((
        a.parse().map_err(|e| unknown(name, e))?,
        b.parse().map_err(|e| unknown(name, e))?,
    ))
}

/// `Z<n>`, `S<n>`, or a table-file path.
fn group_table(name: &str, rest: &str) -> Result<FiniteGroupTable> {
    if let Some(n) = rest.strip_prefix('Z').and_then(|s| s.parse::<usize>().ok()) {
        if n == 0 {
            return Err(unknown(name, "Z0 is not a group"));
        }
        return Ok(FiniteGroupTable::cyclic(n));
    }
    if let Some(n) = rest.strip_prefix('S').and_then(|s| s.parse::<usize>().ok()) {
        if n == 0 || n > 6 {
            return Err(unknown(name, "S<n> supported for 1 <= n <= 6"));
        }
        return Ok(FiniteGroupTable::symmetric(n));
    }
    if !Path::new(rest).is_file() {
        return Err(unknown(name, "expected Z<n>, S<n>, or a table file"));
    }
    table_from_file(rest)
}

fn table_from_file(path: &str) -> Result<FiniteGroupTable> {
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    let obj = v
        .as_object()
        .ok_or_else(|| Error::InvalidInput(format!("{path}: table file must be a JSON object")))?;
    let order = obj
        .get("order")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::InvalidInput(format!("{path}: missing \"order\"")))?
        as usize;
    let rows = obj
        .get("table")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::InvalidInput(format!("{path}: missing \"table\" array")))?;
    if rows.len() != order {
        return Err(Error::InvalidInput(format!(
            "{path}: table has {} rows, order says {order}",
            rows.len()
        )));
    }
    let mut table = Vec::with_capacity(order);
    for row in rows {
        let row = row
            .as_array()
            .ok_or_else(|| Error::InvalidInput(format!("{path}: table rows must be arrays")))?
            .iter()
            .map(|x| {
                x.as_u64()
                    .map(|n| n as usize)
                    .ok_or_else(|| Error::InvalidInput(format!("{path}: table entries must be indices")))
            })
            .collect::<Result<Vec<usize>>>()?;
        table.push(row);
    }
    let labels = (0..order).map(|i| format!("g{i}")).collect();
    let g = FiniteGroupTable::new(labels, table)?;
    // Relabel the identity so group-algebra output reads naturally.
    let e = g.identity();
    let mut labels: Vec<String> = g.labels().to_vec();
    labels[e] = "e".to_string();
    FiniteGroupTable::new(labels, table_of(&g))
}

fn table_of(g: &FiniteGroupTable) -> Vec<Vec<usize>> {
    (0..g.order())
        .map(|i| (0..g.order()).map(|j| g.mul(i, j)).collect())
        .collect()
}

/// Definition files are untrusted input: run the axiom checks that builders
/// guarantee by construction.
fn validate_def(def: &AlgebraDef) -> Result<()> {
    let report = match def {
        AlgebraDef::Coalgebra(c) => c.validate()?,
        AlgebraDef::Bialgebra(b) => b.validate()?,
        AlgebraDef::Hopf(h) => h.validate()?,
    };
    report.into_result()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builder_names_resolve() {
        assert_eq!(resolve("group:Z4", None).unwrap().dim(), 4);
        assert_eq!(resolve("group:S3", None).unwrap().dim(), 6);
        assert_eq!(resolve("trunc-poly:2^2", None).unwrap().dim(), 4);
        assert_eq!(resolve("dual:trunc-poly:3^1", None).unwrap().dim(), 3);
        assert_eq!(resolve("poly-window:5", None).unwrap().dim(), 6);
        // dim Sh(V)-window = 1 + 2 + 4 = 7 for dim V = 2, D = 2.
        assert_eq!(resolve("shuffle-window:2:2", None).unwrap().dim(), 7);
        assert_eq!(resolve("tensor-hopf-window:2:2", None).unwrap().dim(), 7);
    }

    #[test]
    fn trunc_poly_rejects_a_contradictory_field() {
        let err = resolve("trunc-poly:2^2", Some(FieldSpec::rationals())).unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)), "{err}");
        // The matching field is fine.
        assert!(resolve("trunc-poly:2^2", Some(FieldSpec::fp(2).unwrap())).is_ok());
    }

    #[test]
    fn ambient_field_reaches_group_builders() {
        let def = resolve("group:Z2", Some(FieldSpec::fp(7).unwrap())).unwrap();
        assert_eq!(def.field(), FieldSpec::Fp(7));
    }

    #[test]
    fn poly_window_is_a_bialgebra_without_antipode() {
        let def = resolve("poly-window:3", None).unwrap();
        assert!(def.hopf().is_none());
        assert!(def.bialgebra().is_some());
    }

    #[test]
    fn dual_of_an_antipodeless_reference_is_rejected() {
        let err = resolve("dual:poly-window:3", None).unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)), "{err}");
    }

    #[test]
    fn nonsense_names_are_unknown() {
        for bad in [
            "group:Q8",
            "trunc-poly:4^1",
            "trunc-poly:nope",
            "shuffle-window:2",
            "no-such-builder:1",
            "/definitely/not/a/file.json",
        ] {
            assert!(resolve(bad, None).is_err(), "{bad} resolved");
        }
    }

    #[test]
    fn table_files_build_group_algebras() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("klein.json");
        // Klein four-group: every element is its own inverse.
        std::fs::write(
            &path,
            r#"{"order": 4, "table": [[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]]}"#,
        )
        .unwrap();
        let name = format!("group:{}", path.display());
        let def = resolve(&name, None).unwrap();
        assert_eq!(def.dim(), 4);
        def.hopf().unwrap().validate().unwrap().into_result().unwrap();

        // A non-associative table is rejected with a witness.
        let bad = dir.path().join("bad.json");
        std::fs::write(&bad, r#"{"order": 3, "table": [[0,1,2],[1,2,1],[2,0,0]]}"#).unwrap();
        assert!(resolve(&format!("group:{}", bad.display()), None).is_err());
    }

    #[test]
    fn definition_files_resolve_and_are_validated() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("h.json");
        let hopf = truncated_polynomial_hopf(2, 1).unwrap();
        std::fs::write(
            &path,
            crate::json::algebra_to_string(&AlgebraDef::Hopf(hopf)),
        )
        .unwrap();
        let def = resolve(path.to_str().unwrap(), None).unwrap();
        assert_eq!(def.dim(), 2);
        assert_eq!(def.field(), FieldSpec::Fp(2));
        // The intrinsic field wins over a contradictory ambient one.
        assert!(resolve(path.to_str().unwrap(), Some(FieldSpec::rationals())).is_err());

        // A definition that breaks the counit axiom ((id⊗ε)Δ(t) = 0 ≠ t
        // below) fails validation here, not deep inside a later computation.
        let broken = dir.path().join("broken.json");
        std::fs::write(
            &broken,
            r#"{
                "field": "Q",
                "basis": ["1", "t"],
                "unit": "1",
                "counit": [["1", "1"]],
                "comul": [
                    ["1", ["1", "1"], "1"],
                    ["t", ["1", "t"], "1"]
                ]
            }"#,
        )
        .unwrap();
        assert!(resolve(broken.to_str().unwrap(), None).is_err());
    }
}
