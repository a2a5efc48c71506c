//! Reports: per-job results plus provenance, rendered as JSON or as a plain
//! ASCII table. Neither rendering depends on timing or thread count.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;
use serde_json::Value;

use crate::data::Input;

pub const TOOL: &str = "foxhom";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, Serialize, PartialEq, Eq, PartialOrd, Ord)]
pub struct InputDigest {
    pub name: String,
    pub sha256: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Provenance {
    pub tool: &'static str,
    pub version: &'static str,
    pub inputs: Vec<InputDigest>,
}

/// One titled block of the table rendering.
#[derive(Clone, Debug, Default)]
pub struct Section {
    pub title: Option<String>,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Section {
    pub fn new<S: Into<String>>(title: Option<&str>, headers: impl IntoIterator<Item = S>) -> Self {
        Self {
            title: title.map(str::to_string),
            headers: headers.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn row<S: Into<String>>(&mut self, cells: impl IntoIterator<Item = S>) {
        self.rows.push(cells.into_iter().map(Into::into).collect());
    }

    fn render(&self, out: &mut String) {
        if let Some(t) = &self.title {
            let _ = writeln!(out, "{t}");
        }
        let ncols = self
            .headers
            .len()
            .max(self.rows.iter().map(Vec::len).max().unwrap_or(0));
        let mut widths = vec![0; ncols];
        for row in std::iter::once(&self.headers).chain(&self.rows) {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |cells: &[String]| {
            let mut s = String::new();
            for (i, w) in widths.iter().enumerate() {
                let cell = cells.get(i).map_or("", String::as_str);
                if i + 1 == ncols {
                    s.push_str(cell);
                } else {
                    let _ = write!(s, "{cell:<w$}  ");
                }
            }
            s.trim_end().to_string()
        };
        if !self.headers.is_empty() {
            let _ = writeln!(out, "{}", line(&self.headers));
            let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
            let _ = writeln!(out, "{}", line(&rule));
        }
        for row in &self.rows {
            let _ = writeln!(out, "{}", line(row));
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub params: BTreeMap<String, Value>,
    pub results: Vec<Value>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub status: Option<String>,
    pub provenance: Provenance,
    #[serde(skip)]
    pub sections: Vec<Section>,
    #[serde(skip)]
    pub mismatch: bool,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            params: BTreeMap::new(),
            results: Vec::new(),
            notes: Vec::new(),
            status: None,
            provenance: Provenance {
                tool: TOOL,
                version: VERSION,
                inputs: Vec::new(),
            },
            sections: Vec::new(),
            mismatch: false,
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) {
        self.params.insert(key.to_string(), value.into());
    }

    /// Records an input digest; inputs are kept sorted and deduplicated.
    pub fn input(&mut self, input: &Input) {
        let d = InputDigest {
            name: input.name.clone(),
            sha256: input.sha256.clone(),
        };
        if let Err(pos) = self.provenance.inputs.binary_search(&d) {
            self.provenance.inputs.insert(pos, d);
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{TOOL} {VERSION} {}", self.command);
        for (k, v) in &self.params {
            let v = match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            let _ = writeln!(out, "param {k} = {v}");
        }
        for d in &self.provenance.inputs {
            let _ = writeln!(out, "input {} sha256:{}", d.name, d.sha256);
        }
        for s in &self.sections {
            out.push('\n');
            s.render(&mut out);
        }
        if !self.notes.is_empty() {
            out.push('\n');
            for n in &self.notes {
                let _ = writeln!(out, "note: {n}");
            }
        }
        if let Some(status) = &self.status {
            let _ = writeln!(out, "\nstatus: {status}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_alignment() {
        let mut s = Section::new(None, ["n", "rank"]);
        s.row(["3", "0"]);
        s.row(["11", "12"]);
        let mut out = String::new();
        s.render(&mut out);
        assert_eq!(out, "n   rank\n--  ----\n3   0\n11  12\n");
    }

    #[test]
    fn inputs_sorted_and_unique() {
        let mut r = Report::new("x");
        r.input(&Input::new("b", "1".into()));
        r.input(&Input::new("a", "2".into()));
        r.input(&Input::new("b", "1".into()));
        let names: Vec<_> = r.provenance.inputs.iter().map(|d| d.name.as_str()).collect();
        assert_eq!(names, ["a", "b"]);
    }
}
