//! JSON definition files for coalgebras, bialgebras and Hopf algebras.
//!
//! The wire format is label-based and human-writable:
//!
//! ```json
//! {
//!   "field": {"p": 2},
//!   "basis": ["1", "t"],
//!   "unit": "1",
//!   "counit": [["1", "1"]],
//!   "comul": [
//!     ["1", ["1", "1"], "1"],
//!     ["t", ["t", "1"], "1"],
//!     ["t", ["1", "t"], "1"]
//!   ],
//!   "mul": [[["1", "1"], "1", "1"], [["1", "t"], "t", "1"], [["t", "1"], "t", "1"]],
//!   "antipode": [["1", "1"], ["t", "t"]]
//! }
//! ```
//!
//! * `field` is `"Q"` or `{"p": prime}`.
//! * `unit` is a basis label, or a dense array of scalar strings when the
//!   coaugmentation is a combination.
//! * `comul` entries are `[input, [left, right], scalar]`; `mul` entries
//!   mirror them with the pair on the input side:
//!   `[[left, right], output, scalar]`. Omitted pairs are zero.
//! * `counit` entries are `[label, scalar]`.
//! * `antipode` entries are `[input, output]` with an implicit coefficient
//!   of 1, or `[input, output, scalar]` — S(t) = −t needs the long form.
//! * `degrees` (optional) is an array of nonnegative integers; `window`
//!   (optional, for truncations) is
//!   `{"max_degree": D, "multiplication_exact": bool}`.
//!
//! Scalars are decimal strings, `a/b` fractions, or residues, exactly as
//! accepted by [`FieldSpec::parse_scalar`]. What is present decides what is
//! built: `mul` upgrades the coalgebra to a bialgebra, `antipode` to a Hopf
//! algebra. Serialization inverts deserialization bit for bit on the text
//! level: entries are emitted in basis order, so identical structures
//! produce identical files.

use serde_json::{json, Map, Value};

use crate::coalgebra::{Coalgebra, TruncationWindow};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::hopf::{Bialgebra, HopfAlgebra};
use crate::matrix::{svec, Matrix, SparseVec};

/// Whatever a definition file contains: the three structure levels share
/// the coalgebra core.
#[derive(Debug, Clone)]
pub enum AlgebraDef {
    Coalgebra(Coalgebra),
    Bialgebra(Bialgebra),
    Hopf(HopfAlgebra),
}

impl AlgebraDef {
    pub fn coalgebra(&self) -> &Coalgebra {
        match self {
            AlgebraDef::Coalgebra(c) => c,
            AlgebraDef::Bialgebra(b) => &b.coalgebra,
            AlgebraDef::Hopf(h) => h.coalgebra(),
        }
    }

    pub fn bialgebra(&self) -> Option<&Bialgebra> {
        match self {
            AlgebraDef::Coalgebra(_) => None,
            AlgebraDef::Bialgebra(b) => Some(b),
            AlgebraDef::Hopf(h) => Some(&h.bialgebra),
        }
    }

    pub fn hopf(&self) -> Option<&HopfAlgebra> {
        match self {
            AlgebraDef::Hopf(h) => Some(h),
            _ => None,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.coalgebra().field
    }

    pub fn dim(&self) -> usize {
        self.coalgebra().dim()
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

pub(crate) fn field_to_json(field: FieldSpec) -> Value {
    match field {
        FieldSpec::Q => json!("Q"),
        FieldSpec::Fp(p) => json!({ "p": p }),
    }
}

pub(crate) fn field_from_json(v: &Value) -> Result<FieldSpec> {
    match v {
        Value::String(s) if s == "Q" => Ok(FieldSpec::rationals()),
        Value::Object(o) => {
            let p = o
                .get("p")
                .and_then(Value::as_u64)
                .ok_or_else(|| bad("field object must be {\"p\": prime}"))?;
            FieldSpec::fp(p)
        }
        other => Err(bad(format!(
            "field must be \"Q\" or {{\"p\": prime}}, got {other}"
        ))),
    }
}

/// Label → index lookup, rejecting duplicates.
fn label_index(labels: &[String]) -> Result<std::collections::HashMap<&str, usize>> {
    let mut map = std::collections::HashMap::with_capacity(labels.len());
    for (i, l) in labels.iter().enumerate() {
        if map.insert(l.as_str(), i).is_some() {
            return Err(bad(format!("duplicate basis label {l:?}")));
        }
    }
    Ok(map)
}

fn want_str<'a>(v: &'a Value, what: &str) -> Result<&'a str> {
    v.as_str()
        .ok_or_else(|| bad(format!("{what} must be a string, got {v}")))
}

fn want_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| bad(format!("{what} must be an array, got {v}")))
}

fn lookup(map: &std::collections::HashMap<&str, usize>, label: &str) -> Result<usize> {
    map.get(label)
        .copied()
        .ok_or_else(|| bad(format!("unknown basis label {label:?}")))
}

/// The unit as either its bare label (single entry, coefficient 1) or a
/// dense coordinate array.
fn unit_to_json(c: &Coalgebra) -> Value {
    if c.unit.len() == 1 {
        let (&i, s) = c.unit.iter().next().expect("nonempty");
        if s.is_one() {
            return json!(c.labels[i]);
        }
    }
    let mut dense = Vec::with_capacity(c.dim());
    for i in 0..c.dim() {
        dense.push(json!(c
            .unit
            .get(&i)
            .map(|s| s.to_text())
            .unwrap_or_else(|| "0".to_string())));
    }
    Value::Array(dense)
}

fn unit_from_json(
    v: &Value,
    field: FieldSpec,
    index: &std::collections::HashMap<&str, usize>,
    dim: usize,
) -> Result<SparseVec> {
    match v {
        Value::String(label) => Ok(svec::unit(lookup(index, label)?, field)),
        Value::Array(coords) => {
            if coords.len() != dim {
                return Err(bad(format!(
                    "unit vector has {} coordinates for a basis of {dim}",
                    coords.len()
                )));
            }
            let mut out = SparseVec::new();
            for (i, c) in coords.iter().enumerate() {
                let s = field.parse_scalar(want_str(c, "unit coordinate")?)?;
                svec::add_entry(&mut out, i, &s);
            }
            Ok(out)
        }
        other => Err(bad(format!(
            "unit must be a label or a coordinate array, got {other}"
        ))),
    }
}

fn window_to_json(w: &TruncationWindow) -> Value {
    json!({
        "max_degree": w.max_degree,
        "multiplication_exact": w.multiplication_exact,
    })
}

fn window_from_json(v: &Value) -> Result<TruncationWindow> {
    let o = v
        .as_object()
        .ok_or_else(|| bad("window must be an object"))?;
    let max_degree = o
        .get("max_degree")
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("window.max_degree must be a nonnegative integer"))?;
    let mul_exact = o
        .get("multiplication_exact")
        .and_then(Value::as_bool)
        .unwrap_or(false);
    Ok(TruncationWindow::new(max_degree as usize, mul_exact))
}

/// Serializes the coalgebra core into the given JSON object.
fn put_coalgebra(obj: &mut Map<String, Value>, c: &Coalgebra) {
    let d = c.dim();
    obj.insert("field".into(), field_to_json(c.field));
    obj.insert("basis".into(), json!(c.labels));
    obj.insert("unit".into(), unit_to_json(c));
    let mut counit = Vec::new();
    for j in 0..d {
        let s = c.counit.get(0, j);
        if !s.is_zero() {
            counit.push(json!([c.labels[j], s.to_text()]));
        }
    }
    obj.insert("counit".into(), Value::Array(counit));
    let mut comul = Vec::new();
    for j in 0..d {
        // Column order, then row order within the column — basis order on
        // both sides makes serialization canonical.
        for (row, col, s) in c.comul.iter_entries().filter(|(_, col, _)| *col == j) {
            comul.push(json!([
                c.labels[col],
                [c.labels[row / d], c.labels[row % d]],
                s.to_text()
            ]));
        }
    }
    obj.insert("comul".into(), Value::Array(comul));
    if let Some(degrees) = &c.degrees {
        obj.insert("degrees".into(), json!(degrees));
    }
}

/// A coalgebra as a definition file value.
pub fn coalgebra_to_json(c: &Coalgebra) -> Value {
    let mut obj = Map::new();
    put_coalgebra(&mut obj, c);
    Value::Object(obj)
}

/// A bialgebra: the coalgebra core plus `mul` (and `window` if truncated).
pub fn bialgebra_to_json(b: &Bialgebra) -> Value {
    let mut obj = match coalgebra_to_json(&b.coalgebra) {
        Value::Object(o) => o,
        _ => unreachable!(),
    };
    let d = b.dim();
    let labels = b.labels();
    let mut mul = Vec::new();
    for col in 0..d * d {
        for (row, c, s) in b.mul.iter_entries().filter(|(_, c, _)| *c == col) {
            mul.push(json!([
                [labels[c / d], labels[c % d]],
                labels[row],
                s.to_text()
            ]));
        }
    }
    obj.insert("mul".into(), Value::Array(mul));
    if let Some(w) = &b.window {
        obj.insert("window".into(), window_to_json(w));
    }
    Value::Object(obj)
}

/// A Hopf algebra: the bialgebra plus `antipode` pairs.
pub fn hopf_to_json(h: &HopfAlgebra) -> Value {
    let mut obj = match bialgebra_to_json(&h.bialgebra) {
        Value::Object(o) => o,
        _ => unreachable!(),
    };
    let labels = h.bialgebra.labels();
    let d = h.dim();
    let mut antipode = Vec::new();
    for col in 0..d {
        for (row, c, s) in h.antipode.iter_entries().filter(|(_, c, _)| *c == col) {
            if s.is_one() {
                antipode.push(json!([labels[c], labels[row]]));
            } else {
                antipode.push(json!([labels[c], labels[row], s.to_text()]));
            }
        }
    }
    obj.insert("antipode".into(), Value::Array(antipode));
    Value::Object(obj)
}

/// Serializes whichever level the definition carries.
pub fn algebra_to_json(def: &AlgebraDef) -> Value {
    match def {
        AlgebraDef::Coalgebra(c) => coalgebra_to_json(c),
        AlgebraDef::Bialgebra(b) => bialgebra_to_json(b),
        AlgebraDef::Hopf(h) => hopf_to_json(h),
    }
}

/// Reads a definition value, building as much structure as the fields
/// present allow. Shapes are checked here; axioms are the caller's business
/// (see `Coalgebra::validate` and friends).
pub fn algebra_from_json(v: &Value) -> Result<AlgebraDef> {
    let obj = v
        .as_object()
        .ok_or_else(|| bad("definition must be a JSON object"))?;
    let field = field_from_json(obj.get("field").ok_or_else(|| bad("missing field"))?)?;
    let labels: Vec<String> = want_array(obj.get("basis").ok_or_else(|| bad("missing basis"))?, "basis")?
        .iter()
        .map(|l| want_str(l, "basis label").map(str::to_string))
        .collect::<Result<_>>()?;
    let d = labels.len();
    let index = label_index(&labels)?;

    let unit = unit_from_json(
        obj.get("unit").ok_or_else(|| bad("missing unit"))?,
        field,
        &index,
        d,
    )?;

    let mut counit = Matrix::zero(field, 1, d);
    for entry in want_array(
        obj.get("counit").ok_or_else(|| bad("missing counit"))?,
        "counit",
    )? {
        let pair = want_array(entry, "counit entry")?;
        if pair.len() != 2 {
            return Err(bad("counit entries are [label, scalar]"));
        }
        let j = lookup(&index, want_str(&pair[0], "counit label")?)?;
        let s = field.parse_scalar(want_str(&pair[1], "counit scalar")?)?;
        counit.set(0, j, counit.get(0, j).add(&s));
    }

    let mut comul = Matrix::zero(field, d * d, d);
    for entry in want_array(
        obj.get("comul").ok_or_else(|| bad("missing comul"))?,
        "comul",
    )? {
        let triple = want_array(entry, "comul entry")?;
        if triple.len() != 3 {
            return Err(bad("comul entries are [input, [left, right], scalar]"));
        }
        let j = lookup(&index, want_str(&triple[0], "comul input")?)?;
        let pair = want_array(&triple[1], "comul output pair")?;
        if pair.len() != 2 {
            return Err(bad("comul output must be [left, right]"));
        }
        let l = lookup(&index, want_str(&pair[0], "comul left")?)?;
        let r = lookup(&index, want_str(&pair[1], "comul right")?)?;
        let s = field.parse_scalar(want_str(&triple[2], "comul scalar")?)?;
        let row = l * d + r;
        comul.set(row, j, comul.get(row, j).add(&s));
    }

    let degrees = match obj.get("degrees") {
        None => None,
        Some(v) => {
            let arr = want_array(v, "degrees")?;
            if arr.len() != d {
                return Err(bad(format!(
                    "degrees has {} entries for a basis of {d}",
                    arr.len()
                )));
            }
            Some(
                arr.iter()
                    .map(|x| {
                        x.as_u64()
                            .map(|n| n as usize)
                            .ok_or_else(|| bad("degrees must be nonnegative integers"))
                    })
                    .collect::<Result<Vec<usize>>>()?,
            )
        }
    };

    let coalgebra = Coalgebra::new(field, labels.clone(), comul, counit, unit, degrees)?;

    let Some(mul_entries) = obj.get("mul") else {
        return Ok(AlgebraDef::Coalgebra(coalgebra));
    };
    let mut mul = Matrix::zero(field, d, d * d);
    for entry in want_array(mul_entries, "mul")? {
        let triple = want_array(entry, "mul entry")?;
        if triple.len() != 3 {
            return Err(bad("mul entries are [[left, right], output, scalar]"));
        }
        let pair = want_array(&triple[0], "mul input pair")?;
        if pair.len() != 2 {
            return Err(bad("mul input must be [left, right]"));
        }
        let l = lookup(&index, want_str(&pair[0], "mul left")?)?;
        let r = lookup(&index, want_str(&pair[1], "mul right")?)?;
        let out = lookup(&index, want_str(&triple[1], "mul output")?)?;
        let s = field.parse_scalar(want_str(&triple[2], "mul scalar")?)?;
        let col = l * d + r;
        mul.set(out, col, mul.get(out, col).add(&s));
    }
    let window = obj.get("window").map(window_from_json).transpose()?;
    let bialgebra = Bialgebra::new(coalgebra, mul, window)?;

    let Some(antipode_entries) = obj.get("antipode") else {
        return Ok(AlgebraDef::Bialgebra(bialgebra));
    };
    let mut antipode = Matrix::zero(field, d, d);
    for entry in want_array(antipode_entries, "antipode")? {
        let arr = want_array(entry, "antipode entry")?;
        let s = match arr.len() {
            2 => field.one(),
            3 => field.parse_scalar(want_str(&arr[2], "antipode scalar")?)?,
            _ => return Err(bad("antipode entries are [input, output] or [input, output, scalar]")),
        };
        let j = lookup(&index, want_str(&arr[0], "antipode input")?)?;
        let i = lookup(&index, want_str(&arr[1], "antipode output")?)?;
        antipode.set(i, j, antipode.get(i, j).add(&s));
    }
    Ok(AlgebraDef::Hopf(HopfAlgebra::new(bialgebra, antipode)?))
}

/// [`algebra_from_json`] on raw text.
pub fn algebra_from_str(text: &str) -> Result<AlgebraDef> {
    let v: Value = serde_json::from_str(text)?;
    algebra_from_json(&v)
}

/// Pretty definition text, ending in a newline.
pub fn algebra_to_string(def: &AlgebraDef) -> String {
    let mut s = serde_json::to_string_pretty(&algebra_to_json(def)).expect("serialization is infallible");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{dual_hopf, group_algebra, truncated_polynomial_hopf, FiniteGroupTable};

    #[test]
    fn truncated_polynomial_round_trips() {
        let hopf = truncated_polynomial_hopf(2, 2).unwrap();
        let text = algebra_to_string(&AlgebraDef::Hopf(hopf.clone()));
        let back = algebra_from_str(&text).unwrap();
        let h = back.hopf().expect("antipode present");
        assert_eq!(h.coalgebra().comul, hopf.coalgebra().comul);
        assert_eq!(h.coalgebra().counit, hopf.coalgebra().counit);
        assert_eq!(h.bialgebra.mul, hopf.bialgebra.mul);
        assert_eq!(h.antipode, hopf.antipode);
        assert_eq!(h.coalgebra().unit, hopf.coalgebra().unit);
        assert_eq!(h.coalgebra().degrees, hopf.coalgebra().degrees);
        // Canonical serialization: a second trip gives identical text.
        assert_eq!(algebra_to_string(&back), text);
    }

    #[test]
    fn group_algebra_round_trips_over_q() {
        let hopf = group_algebra(&FiniteGroupTable::symmetric(3), FieldSpec::rationals()).unwrap();
        let text = algebra_to_string(&AlgebraDef::Hopf(hopf.clone()));
        let back = algebra_from_str(&text).unwrap();
        let h = back.hopf().unwrap();
        assert_eq!(h.antipode, hopf.antipode);
        assert_eq!(h.bialgebra.mul, hopf.bialgebra.mul);
    }

    #[test]
    fn negative_antipode_entries_use_the_long_form() {
        // The dual of F2[t^...]/… has S = id in char 2; char-0 shuffle-like
        // antipodes need −1 coefficients — fake a tiny one by hand instead.
        let text = r#"{
            "field": "Q",
            "basis": ["1", "x"],
            "unit": "1",
            "counit": [["1", "1"]],
            "comul": [
                ["1", ["1", "1"], "1"],
                ["x", ["x", "1"], "1"],
                ["x", ["1", "x"], "1"]
            ],
            "mul": [
                [["1", "1"], "1", "1"],
                [["1", "x"], "x", "1"],
                [["x", "1"], "x", "1"]
            ],
            "antipode": [["1", "1"], ["x", "x", "-1"]]
        }"#;
        let def = algebra_from_str(text).unwrap();
        let h = def.hopf().unwrap();
        h.validate().unwrap();
        let one = FieldSpec::rationals().one();
        assert_eq!(h.antipode.get(1, 1), one.neg());
        // And the emitted form keeps the 3-element entry.
        let emitted = algebra_to_string(&def);
        assert!(emitted.contains("\"-1\""), "emitted: {emitted}");
    }

    #[test]
    fn coalgebra_only_definitions_stay_coalgebras() {
        let text = r#"{
            "field": {"p": 3},
            "basis": ["1", "t"],
            "unit": "1",
            "counit": [["1", "1"]],
            "comul": [
                ["1", ["1", "1"], "1"],
                ["t", ["t", "1"], "1"],
                ["t", ["1", "t"], "1"]
            ]
        }"#;
        let def = algebra_from_str(text).unwrap();
        assert!(matches!(def, AlgebraDef::Coalgebra(_)));
        def.coalgebra().validate().unwrap();
        assert!(def.bialgebra().is_none());
    }

    #[test]
    fn dual_of_truncated_polynomial_round_trips() {
        let hopf = dual_hopf(&truncated_polynomial_hopf(2, 2).unwrap()).unwrap();
        let text = algebra_to_string(&AlgebraDef::Hopf(hopf.clone()));
        let back = algebra_from_str(&text).unwrap();
        assert_eq!(back.hopf().unwrap().bialgebra.mul, hopf.bialgebra.mul);
        back.hopf().unwrap().validate().unwrap();
    }

    #[test]
    fn bad_labels_and_shapes_are_rejected() {
        let missing = r#"{"field": "Q", "basis": ["1"], "unit": "1", "counit": [], "comul": [["1", ["1", "nope"], "1"]]}"#;
        assert!(algebra_from_str(missing).is_err());
        let dup = r#"{"field": "Q", "basis": ["1", "1"], "unit": "1", "counit": [], "comul": []}"#;
        assert!(algebra_from_str(dup).is_err());
        let badfield = r#"{"field": {"p": 4}, "basis": ["1"], "unit": "1", "counit": [], "comul": []}"#;
        assert!(algebra_from_str(badfield).is_err());
    }

    #[test]
    fn windowed_bialgebras_keep_their_window() {
        let b = crate::builders::polynomial_window(FieldSpec::rationals(), 3).unwrap();
        let text = serde_json::to_string(&bialgebra_to_json(&b)).unwrap();
        let back = algebra_from_str(&text).unwrap();
        let bb = back.bialgebra().unwrap();
        let w = bb.window.expect("window survives");
        assert_eq!(w.max_degree, 3);
        assert_eq!(bb.mul, b.mul);
    }
}
