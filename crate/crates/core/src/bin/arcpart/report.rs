//! Report envelope and the three output renderings.
//!
//! Every command emits the same JSON envelope
//! `{"command", "config", "results": [...], "pass"}`; table and CSV
//! renderings flatten the row objects. Output is byte-deterministic for a
//! given config: fixed orderings, no timestamps.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use clap::ValueEnum;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

pub struct Report {
    command: String,
    config: Value,
    /// Flat row objects rendered as the table/CSV body.
    rows: Vec<Value>,
    /// Column order for table/CSV renderings.
    columns: Vec<String>,
    /// Extra structured payloads (certificates); JSON output only.
    attachments: Map<String, Value>,
    /// Human-relevant findings; carried in the JSON results too.
    findings: Vec<String>,
    pass: bool,
}

impl Report {
    pub fn new(command: &str, config: Value, columns: &[&str]) -> Self {
        Report {
            command: command.to_string(),
            config,
            rows: Vec::new(),
            columns: columns.iter().map(|s| s.to_string()).collect(),
            attachments: Map::new(),
            findings: Vec::new(),
            pass: true,
        }
    }

    pub fn push_row(&mut self, row: Value) {
        self.rows.push(row);
    }

    pub fn attach(&mut self, key: &str, value: Value) {
        self.attachments.insert(key.to_string(), value);
    }

    pub fn finding(&mut self, text: impl Into<String>) {
        self.findings.push(text.into());
    }

    pub fn set_pass(&mut self, pass: bool) {
        self.pass = pass;
    }

    fn to_json(&self) -> Value {
        let mut results: Vec<Value> = self.rows.clone();
        for f in &self.findings {
            results.push(json!({ "finding": f }));
        }
        if !self.attachments.is_empty() {
            results.push(Value::Object(self.attachments.clone()));
        }
        json!({
            "command": self.command,
            "config": self.config,
            "results": results,
            "pass": self.pass,
        })
    }

    fn cell(row: &Value, key: &str) -> String {
        match row.get(key) {
            None | Some(Value::Null) => String::new(),
            Some(Value::String(s)) => s.clone(),
            Some(v) => v.to_string(),
        }
    }

    fn to_table(&self) -> String {
        let mut widths: Vec<usize> = self.columns.iter().map(String::len).collect();
        for row in &self.rows {
            for (i, col) in self.columns.iter().enumerate() {
                widths[i] = widths[i].max(Self::cell(row, col).len());
            }
        }
        let mut out = String::new();
        for (i, col) in self.columns.iter().enumerate() {
            let _ = write!(out, "{:<w$}  ", col, w = widths[i]);
        }
        out.push('\n');
        for row in &self.rows {
            for (i, col) in self.columns.iter().enumerate() {
                let _ = write!(out, "{:<w$}  ", Self::cell(row, col), w = widths[i]);
            }
            out.push('\n');
        }
        for f in &self.findings {
            let _ = writeln!(out, "finding: {f}");
        }
        let _ = writeln!(out, "pass: {}", self.pass);
        out
    }

    fn to_csv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.columns.join(","));
        for row in &self.rows {
            let cells: Vec<String> = self
                .columns
                .iter()
                .map(|c| {
                    let cell = Self::cell(row, c);
                    if cell.contains(',') || cell.contains('"') {
                        format!("\"{}\"", cell.replace('"', "\"\""))
                    } else {
                        cell
                    }
                })
                .collect();
            let _ = writeln!(out, "{}", cells.join(","));
        }
        out
    }

    /// Renders and writes to the chosen sink; returns the pass flag.
    pub fn emit(&self, format: Format, out: &Option<PathBuf>) -> anyhow::Result<bool> {
        let body = match format {
            Format::Json => serde_json::to_string_pretty(&self.to_json())? + "\n",
            Format::Table => self.to_table(),
            Format::Csv => self.to_csv(),
        };
        match out {
            Some(path) => fs::write(path, body)?,
            None => print!("{body}"),
        }
        Ok(self.pass)
    }
}

/// Parses an inclusive range `a..b` or a single value `a`.
pub fn parse_range(s: &str) -> anyhow::Result<std::ops::RangeInclusive<u64>> {
    if let Some((a, b)) = s.split_once("..") {
        let a: u64 = a.parse()?;
        let b: u64 = b.parse()?;
        anyhow::ensure!(a <= b, "empty range {s}");
        Ok(a..=b)
    } else {
        let v: u64 = s.parse()?;
        Ok(v..=v)
    }
}
