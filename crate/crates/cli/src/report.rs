//! The one report shape every command emits.
//!
//! A report is a command name, its effective inputs, a list of checks, and
//! zero or more named dimension tables. Checks carry one of three statuses:
//! `pass`/`fail` for verification items and `computed` for descriptive ones
//! (an `analyze` run never fails, it only reports). The process exit code
//! derives from the checks: any `fail` ⇒ 1.
//!
//! Rendering is deterministic everywhere it matters: checks are sorted by
//! id, inputs and tables are ordered maps, and the JSON form is exactly
//! `serde_json::to_string_pretty` of the struct — two identical invocations
//! produce byte-identical output.

use std::collections::BTreeMap;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Computed,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Computed => "computed",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub detail: String,
}

/// One table row: a label and ordered (key, value) cells. Cells are pairs,
/// not a map, so numeric keys keep numeric order.
#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub row: String,
    pub cells: Vec<(String, String)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub inputs: BTreeMap<String, serde_json::Value>,
    pub status: Status,
    pub checks: Vec<Check>,
    pub tables: BTreeMap<String, Vec<TableRow>>,
    pub witnesses: Vec<String>,
    /// Bare text to print instead of the human rendering (`reduce` prints
    /// just the normal form). Never serialized.
    #[serde(skip)]
    pub human_override: Option<String>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            schema: 1,
            command: command.to_string(),
            inputs: BTreeMap::new(),
            status: Status::Pass,
            checks: Vec::new(),
            tables: BTreeMap::new(),
            witnesses: Vec::new(),
            human_override: None,
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<serde_json::Value>) {
        self.inputs.insert(key.to_string(), value.into());
    }

    pub fn check(&mut self, id: &str, status: Status, detail: impl Into<String>) {
        self.checks.push(Check {
            id: id.to_string(),
            status,
            detail: detail.into(),
        });
    }

    pub fn table_row(&mut self, table: &str, row: &str, cells: Vec<(String, String)>) {
        self.tables.entry(table.to_string()).or_default().push(TableRow {
            row: row.to_string(),
            cells,
        });
    }

    pub fn witness(&mut self, text: impl Into<String>) {
        self.witnesses.push(text.into());
    }

    /// Sorts checks by id and settles the overall status. Call once, before
    /// rendering.
    pub fn finalize(&mut self) {
        self.checks.sort_by(|a, b| a.id.cmp(&b.id));
        self.status = if self.checks.iter().any(|c| c.status == Status::Fail) {
            Status::Fail
        } else {
            Status::Pass
        };
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }

    /// `check_id,status,detail` rows; table rows flattened as
    /// `table.<name>.<row>,<k>=<v>,...`; witnesses as `witness.<i>` rows.
    pub fn render_csv(&self) -> String {
        let mut out = String::from("check_id,status,detail\n");
        for c in &self.checks {
            out.push_str(&format!(
                "{},{},{}\n",
                csv_field(&c.id),
                c.status.as_str(),
                csv_field(&c.detail)
            ));
        }
        for (name, rows) in &self.tables {
            for r in rows {
                let cells: Vec<String> = r
                    .cells
                    .iter()
                    .map(|(k, v)| csv_field(&format!("{k}={v}")))
                    .collect();
                out.push_str(&format!(
                    "table.{}.{},{}\n",
                    name,
                    csv_field(&r.row),
                    cells.join(",")
                ));
            }
        }
        for (i, w) in self.witnesses.iter().enumerate() {
            out.push_str(&format!("witness.{i},computed,{}\n", csv_field(w)));
        }
        out
    }

    pub fn render_human(&self) -> String {
        if let Some(text) = &self.human_override {
            let mut t = text.clone();
            if !t.ends_with('\n') {
                t.push('\n');
            }
            return t;
        }
        let mut out = format!("command: {}\n", self.command);
        if !self.inputs.is_empty() {
            let parts: Vec<String> = self
                .inputs
                .iter()
                .map(|(k, v)| match v {
                    serde_json::Value::String(s) => format!("{k}={s}"),
                    other => format!("{k}={other}"),
                })
                .collect();
            out.push_str(&format!("inputs: {}\n", parts.join("  ")));
        }
        for (name, rows) in &self.tables {
            out.push_str(&format!("table {name}:\n"));
            for r in rows {
                let cells: Vec<String> =
                    r.cells.iter().map(|(k, v)| format!("{k}={v}")).collect();
                out.push_str(&format!("  {:<12} {}\n", r.row, cells.join(" ")));
            }
        }
        if !self.checks.is_empty() {
            out.push_str("checks:\n");
            let width = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
            for c in &self.checks {
                out.push_str(&format!(
                    "  {:<width$}  {:<8}  {}\n",
                    c.id,
                    c.status.as_str(),
                    c.detail,
                ));
            }
        }
        for w in &self.witnesses {
            out.push_str(&format!("witness: {w}\n"));
        }
        out.push_str(&format!("status: {}\n", self.status.as_str()));
        out
    }
}

/// Minimal RFC-4180 quoting: only fields containing a delimiter, quote or
/// newline get wrapped.
fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new("verify");
        r.input("alg", "x");
        r.check("zeta", Status::Pass, "ok");
        r.check("alpha", Status::Fail, "broke, badly");
        r.table_row(
            "dims",
            "X=1",
            vec![("0".into(), "1".into()), ("1".into(), "3".into())],
        );
        r.witness("v = t⊗t");
        r.finalize();
        r
    }

    #[test]
    fn checks_sort_and_failures_propagate() {
        let r = sample();
        assert_eq!(r.checks[0].id, "alpha");
        assert!(r.failed());
    }

    #[test]
    fn json_is_stable_across_identical_builds() {
        assert_eq!(sample().render_json(), sample().render_json());
        let v: serde_json::Value = serde_json::from_str(&sample().render_json()).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["checks"][0]["status"], "fail");
    }

    #[test]
    fn csv_quotes_only_what_needs_quoting() {
        let csv = sample().render_csv();
        assert!(csv.starts_with("check_id,status,detail\n"));
        assert!(csv.contains("alpha,fail,\"broke, badly\""));
        assert!(csv.contains("table.dims.X=1,0=1,1=3"));
        assert!(csv.contains("witness.0,computed,v = t⊗t"));
    }

    #[test]
    fn human_override_replaces_the_rendering() {
        let mut r = Report::new("reduce");
        r.human_override = Some("3*[x1]_1".into());
        assert_eq!(r.render_human(), "3*[x1]_1\n");
    }
}
