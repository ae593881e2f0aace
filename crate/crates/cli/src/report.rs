//! Report envelope `{tool_version, config, results}` and its three renderings.

use std::collections::BTreeSet;
use std::io::Write;

use hartogs::Complex64;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl Status {
    pub fn from_check(passed: bool) -> Self {
        if passed {
            Self::Pass
        } else {
            Self::Fail
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Self::Pass => "pass",
            Self::Fail => "fail",
            Self::Info => "info",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Record {
    pub name: String,
    pub status: Status,
    pub value: Value,
    pub expected: Value,
    pub tolerance: Value,
    /// Command-specific columns such as `params` or `classification`.
    #[serde(flatten)]
    pub extra: Map<String, Value>,
}

impl Record {
    pub fn info(name: impl Into<String>, value: Value) -> Self {
        Self {
            name: name.into(),
            status: Status::Info,
            value,
            expected: Value::Null,
            tolerance: Value::Null,
            extra: Map::new(),
        }
    }

    pub fn check(name: impl Into<String>, passed: bool, value: Value, expected: Value, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            status: Status::from_check(passed),
            value,
            expected,
            tolerance: json!(tolerance),
            extra: Map::new(),
        }
    }

    pub fn with(mut self, key: &str, value: Value) -> Self {
        self.extra.insert(key.to_string(), value);
        self
    }
}

pub fn complex(c: Complex64) -> Value {
    json!({ "re": c.re, "im": c.im })
}

/// Plain rows for CSV and LaTeX when the generic record layout reads badly.
#[derive(Debug, Clone)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    /// Raw LaTeX for the header row, used verbatim instead of escaping `header`.
    pub latex_header: Option<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub tool_version: &'static str,
    pub config: Value,
    pub results: Vec<Record>,
    #[serde(skip)]
    pub table: Option<Table>,
}

impl Report {
    pub fn new(config: Value, results: Vec<Record>) -> Self {
        Self {
            tool_version: env!("CARGO_PKG_VERSION"),
            config,
            results,
            table: None,
        }
    }

    pub fn any_failed(&self) -> bool {
        self.results.iter().any(|r| r.status == Status::Fail)
    }

    fn generic_table(&self) -> Table {
        let extras: BTreeSet<&String> = self.results.iter().flat_map(|r| r.extra.keys()).collect();
        let mut header: Vec<String> = ["name", "status", "value", "expected", "tolerance"].map(String::from).to_vec();
        header.extend(extras.iter().map(|k| k.to_string()));
        let rows = self
            .results
            .iter()
            .map(|r| {
                let mut row = vec![
                    r.name.clone(),
                    r.status.as_str().to_string(),
                    cell(&r.value),
                    cell(&r.expected),
                    cell(&r.tolerance),
                ];
                row.extend(extras.iter().map(|k| r.extra.get(*k).map(cell).unwrap_or_default()));
                row
            })
            .collect();
        Table {
            header,
            rows,
            latex_header: None,
        }
    }

    fn table(&self) -> Table {
        self.table.clone().unwrap_or_else(|| self.generic_table())
    }

    pub fn write_json<W: Write>(&self, mut out: W) -> Result<(), CliError> {
        serde_json::to_writer_pretty(&mut out, self)?;
        writeln!(out)?;
        Ok(())
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<(), CliError> {
        let table = self.table();
        let mut writer = csv::WriterBuilder::new().terminator(csv::Terminator::CRLF).from_writer(out);
        writer.write_record(&table.header)?;
        for row in &table.rows {
            writer.write_record(row)?;
        }
        writer.flush()?;
        Ok(())
    }

    pub fn write_latex<W: Write>(&self, mut out: W) -> Result<(), CliError> {
        let table = self.table();
        writeln!(out, "\\begin{{tabular}}{{{}}}", "l".repeat(table.header.len()))?;
        writeln!(out, "\\hline")?;
        let header = match &table.latex_header {
            Some(raw) => raw.clone(),
            None => table.header.iter().map(|h| latex_escape(h)).collect(),
        };
        writeln!(out, "{} \\\\", header.join(" & "))?;
        writeln!(out, "\\hline")?;
        for row in &table.rows {
            writeln!(out, "{} \\\\", row.iter().map(|c| latex_escape(c)).collect::<Vec<_>>().join(" & "))?;
        }
        writeln!(out, "\\hline")?;
        writeln!(out, "\\end{{tabular}}")?;
        Ok(())
    }
}

fn cell(value: &Value) -> String {
    match value {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn latex_escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '&' | '%' | '$' | '#' | '_' | '{' | '}' => {
                out.push('\\');
                out.push(c);
            }
            '~' => out.push_str("\\textasciitilde{}"),
            '^' => out.push_str("\\textasciicircum{}"),
            '\\' => out.push_str("\\textbackslash{}"),
            _ => out.push(c),
        }
    }
    out
}
