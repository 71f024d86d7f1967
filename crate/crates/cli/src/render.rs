use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
    Bfile,
}

/// An integer sequence ready for output. Counts are kept as decimal strings.
pub struct Sequence {
    pub config: Map<String, Value>,
    pub method: String,
    pub rows: Vec<(usize, String)>,
}

impl Sequence {
    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Table => {
                let w = self
                    .rows
                    .iter()
                    .map(|(n, _)| n.to_string().len())
                    .max()
                    .unwrap_or(1)
                    .max(1);
                let _ = writeln!(out, "{:>w$}  count", "n");
                for (n, c) in &self.rows {
                    let _ = writeln!(out, "{n:>w$}  {c}");
                }
            }
            Format::Csv => {
                out.push_str("n,count\n");
                for (n, c) in &self.rows {
                    let _ = writeln!(out, "{n},{c}");
                }
            }
            Format::Bfile => {
                for (n, c) in &self.rows {
                    let _ = writeln!(out, "{n} {c}");
                }
            }
            Format::Json => {
                let rows: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|(n, c)| json!({ "n": n, "count": c }))
                    .collect();
                let doc = json!({
                    "config": Value::Object(self.config.clone()),
                    "rows": rows,
                    "method": self.method,
                });
                out = to_json(&doc);
            }
        }
        out
    }
}

pub fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

/// Renders records as CSV or an aligned table. Fields must not contain commas.
pub fn records(header: &[&str], rows: &[Vec<String>], format: Format) -> String {
    let mut out = String::new();
    if format == Format::Csv {
        out.push_str(&header.join(","));
        out.push('\n');
        for r in rows {
            out.push_str(&r.join(","));
            out.push('\n');
        }
        return out;
    }
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, f) in widths.iter_mut().zip(r) {
            *w = (*w).max(f.len());
        }
    }
    let line = |fields: Vec<&str>| {
        let cells: Vec<String> = fields
            .iter()
            .zip(&widths)
            .map(|(f, w)| format!("{f:>w$}"))
            .collect();
        cells.join("  ").trim_end().to_string()
    };
    out.push_str(&line(header.to_vec()));
    out.push('\n');
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
        out.push('\n');
    }
    out
}
