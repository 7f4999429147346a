//! Results and their serialisations.

use std::fmt::Display;

use clap::ValueEnum;
use serde_json::{Map, Number, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Svg,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

/// What a subcommand produced. Text and JSON are always available; CSV
/// needs a table and SVG a drawing.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub text: String,
    pub json: Value,
    pub table: Option<Table>,
    pub svg: Option<String>,
}

impl Report {
    /// A single value; integers become JSON numbers.
    pub fn scalar(v: impl Display) -> Self {
        let s = v.to_string();
        Report { json: cell_json(&s), text: s, table: None, svg: None }
    }

    pub fn value(text: impl Into<String>, json: Value) -> Self {
        Report { text: text.into(), json, table: None, svg: None }
    }

    /// Rows under headers. JSON is an array of objects keyed by header.
    pub fn table(headers: &[&str], rows: Vec<Vec<String>>) -> Self {
        let table = Table { headers: headers.iter().map(|h| h.to_string()).collect(), rows };
        let json = Value::Array(
            table
                .rows
                .iter()
                .map(|r| {
                    let m: Map<String, Value> =
                        table.headers.iter().zip(r).map(|(h, c)| (h.clone(), cell_json(c))).collect();
                    Value::Object(m)
                })
                .collect(),
        );
        Report { text: align(&table), json, table: Some(table), svg: None }
    }

    /// One item per line, JSON array, single-column table.
    pub fn list(header: &str, items: Vec<String>) -> Self {
        let json = Value::Array(items.iter().map(|s| cell_json(s)).collect());
        let text = items.join("\n");
        let table = Table { headers: vec![header.to_string()], rows: items.into_iter().map(|s| vec![s]).collect() };
        Report { text, json, table: Some(table), svg: None }
    }

    pub fn with_text(mut self, text: impl Into<String>) -> Self {
        self.text = text.into();
        self
    }

    pub fn with_json(mut self, json: Value) -> Self {
        self.json = json;
        self
    }

    pub fn with_svg(mut self, svg: String) -> Self {
        self.svg = Some(svg);
        self
    }
}

/// Integers and decimals become numbers, everything else a string.
pub fn cell_json(s: &str) -> Value {
    let t = s.strip_prefix('-').unwrap_or(s);
    let integer = !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit()) && (t == "0" || !t.starts_with('0'));
    let decimal = t.split_once('.').is_some_and(|(a, b)| {
        !a.is_empty() && !b.is_empty() && a.bytes().chain(b.bytes()).all(|c| c.is_ascii_digit())
    });
    if integer || decimal {
        if let Ok(n) = s.parse::<Number>() {
            return Value::Number(n);
        }
    }
    Value::String(s.to_string())
}

/// Columns padded to their widest cell, two spaces apart.
fn align(t: &Table) -> String {
    let mut width: Vec<usize> = t.headers.iter().map(|h| h.chars().count()).collect();
    for r in &t.rows {
        for (i, c) in r.iter().enumerate() {
            width[i] = width[i].max(c.chars().count());
        }
    }
    let line = |cells: &[String]| {
        let mut s = String::new();
        for (i, c) in cells.iter().enumerate() {
            if i > 0 {
                s.push_str("  ");
            }
            s.push_str(c);
            if i + 1 < cells.len() {
                s.extend(std::iter::repeat_n(' ', width[i] - c.chars().count()));
            }
        }
        s.trim_end().to_string()
    };
    let mut out = vec![line(&t.headers)];
    out.extend(t.rows.iter().map(|r| line(r)));
    out.join("\n")
}

/// The document for `format`, or None when the report cannot take it.
pub fn render(r: &Report, format: Format) -> Option<String> {
    match format {
        Format::Text => Some(terminate(r.text.clone())),
        Format::Json => Some(terminate(serde_json::to_string(&r.json).expect("serialisable"))),
        Format::Csv => {
            let t = r.table.as_ref()?;
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&t.headers).ok()?;
            for row in &t.rows {
                w.write_record(row).ok()?;
            }
            String::from_utf8(w.into_inner().ok()?).ok()
        }
        Format::Svg => r.svg.clone().map(terminate),
    }
}

fn terminate(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}
