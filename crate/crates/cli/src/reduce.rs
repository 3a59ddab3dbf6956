//! `reduce`: normal forms in the linearized free-group category.
//!
//! Parses a linear combination of bracketed morphisms in the same grammar
//! the library prints — `3*[x1x2|x1^-1]_2 - [e|x2]_2` — reduces it modulo
//! the multilinearity ideal, and prints the normal form. Human mode prints
//! the bare expression; `--json`/`--csv` wrap it in the usual report.

use hopfcorad_core::field::FieldSpec;
use hopfcorad_core::grop::{parse_lin, reduce_mod_ideal};
use hopfcorad_core::Result;

use crate::report::{Report, Status};

pub fn run(expr: &str, ambient: Option<FieldSpec>) -> Result<Report> {
    let field = ambient.unwrap_or(FieldSpec::Q);
    let normal = reduce_mod_ideal(&parse_lin(expr, field)?);
    let text = normal.to_string();
    let mut r = Report::new("reduce");
    r.input("expr", expr);
    r.input("field", field.to_string());
    r.check("normal-form", Status::Computed, &text);
    r.human_override = Some(text);
    Ok(r)
}
