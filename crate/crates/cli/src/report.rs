//! The report envelope and its text, JSON and CSV renderings.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

/// Largest magnitude emitted as a JSON number; anything larger is a string.
pub const MAX_SAFE: i64 = (1 << 53) - 1;

pub type Record = Map<String, Value>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub input: Record,
    pub results: Vec<Record>,
    pub summary: Record,
    pub discrepancy_notes: Vec<String>,
    pub error: Option<(String, String)>,
    /// Column order for CSV; defaults to the keys of the first result.
    pub csv_columns: Option<Vec<&'static str>>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            input: Record::new(),
            results: Vec::new(),
            summary: Record::new(),
            discrepancy_notes: Vec::new(),
            error: None,
            csv_columns: None,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut out = json!({
            "command": self.command,
            "version": env!("CARGO_PKG_VERSION"),
            "input": self.input,
            "results": self.results,
            "summary": self.summary,
            "discrepancy_notes": self.discrepancy_notes,
        });
        if let Some((reason, message)) = &self.error {
            out["error"] = json!({ "reason": reason, "message": message });
        }
        out
    }

    pub fn render(&self, format: Format, color: bool) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
                s.push('\n');
                s
            }
            Format::Text => self.render_text(color),
            Format::Csv => self.render_csv(),
        }
    }

    fn render_text(&self, color: bool) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{} (eschbaz {})",
            self.command,
            env!("CARGO_PKG_VERSION")
        );
        if !self.input.is_empty() {
            let _ = writeln!(out, "input: {}", inline_map(&self.input));
        }
        for (i, r) in self.results.iter().enumerate() {
            let _ = writeln!(out);
            if self.results.len() > 1 {
                let _ = writeln!(out, "[{}]", i + 1);
            }
            write_fields(&mut out, r, color);
        }
        if !self.summary.is_empty() {
            let _ = writeln!(out, "\nsummary");
            write_fields(&mut out, &self.summary, color);
        }
        for note in &self.discrepancy_notes {
            let _ = writeln!(out, "\nnote: {note}");
        }
        if let Some((reason, message)) = &self.error {
            let tag = paint("error", "31", color);
            let _ = writeln!(out, "\n{tag} [{reason}]: {message}");
        }
        out
    }

    fn render_csv(&self) -> String {
        let columns: Vec<String> = match &self.csv_columns {
            Some(c) => c.iter().map(|s| s.to_string()).collect(),
            None => self
                .results
                .first()
                .map(|r| r.keys().cloned().collect())
                .unwrap_or_default(),
        };
        let mut w = csv::Writer::from_writer(Vec::new());
        if let Some((reason, message)) = &self.error {
            w.write_record(["reason", "message"]).expect("in-memory");
            w.write_record([reason, message]).expect("in-memory");
        } else {
            w.write_record(&columns).expect("in-memory");
            for r in &self.results {
                let row: Vec<String> = columns
                    .iter()
                    .map(|c| r.get(c).map(inline).unwrap_or_default())
                    .collect();
                w.write_record(&row).expect("in-memory");
            }
        }
        String::from_utf8(w.into_inner().expect("in-memory")).expect("utf-8")
    }
}

fn paint(s: &str, code: &str, color: bool) -> String {
    if color {
        format!("\x1b[{code}m{s}\x1b[0m")
    } else {
        s.to_string()
    }
}

fn write_fields(out: &mut String, r: &Record, color: bool) {
    let width = r.keys().map(|k| k.len()).max().unwrap_or(0);
    for (k, v) in r {
        let text = match v {
            Value::Bool(true) => paint("true", "32", color),
            Value::Bool(false) => paint("false", "33", color),
            other => inline(other),
        };
        let _ = writeln!(out, "  {k:<width$}  {text}");
    }
}

/// One-line rendering shared by text and CSV: integers exactly as in JSON,
/// scalar lists as tuples.
pub fn inline(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::Bool(b) => b.to_string(),
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        Value::Array(xs) if xs.iter().all(is_scalar) => {
            format!("({})", xs.iter().map(inline).collect::<Vec<_>>().join(","))
        }
        Value::Array(xs) => format!("[{}]", xs.iter().map(inline).collect::<Vec<_>>().join("; ")),
        Value::Object(m) => format!("{{{}}}", inline_map(m)),
    }
}

fn inline_map(m: &Record) -> String {
    m.iter()
        .map(|(k, v)| format!("{k}: {}", inline(v)))
        .collect::<Vec<_>>()
        .join(", ")
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

/// Exact integer: a JSON number inside the 53-bit safe range, otherwise a
/// decimal string.
pub fn int(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) if (-MAX_SAFE..=MAX_SAFE).contains(&v) => Value::from(v),
        _ => Value::String(x.to_string()),
    }
}

pub fn ints<'a>(xs: impl IntoIterator<Item = &'a BigInt>) -> Value {
    Value::Array(xs.into_iter().map(int).collect())
}
