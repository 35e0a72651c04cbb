//! Command output: one document per invocation, rendered as JSON, CSV or
//! aligned plain text. Integers always serialize as decimal strings.

use std::fmt::Write as _;

use num_bigint::BigUint;
use serde_json::{json, Map};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Int(BigUint),
    Ints(Vec<BigUint>),
    Bool(bool),
    Text(String),
    Null,
}

impl Value {
    pub fn int(v: impl Into<BigUint>) -> Self {
        Value::Int(v.into())
    }

    fn to_json(&self) -> serde_json::Value {
        match self {
            Value::Int(v) => json!(v.to_string()),
            Value::Ints(vs) => vs.iter().map(|v| json!(v.to_string())).collect(),
            Value::Bool(b) => json!(b),
            Value::Text(s) => json!(s),
            Value::Null => serde_json::Value::Null,
        }
    }

    /// Flat text form shared by CSV and plain output.
    pub fn to_flat(&self) -> String {
        match self {
            Value::Int(v) => v.to_string(),
            Value::Ints(vs) => vs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "),
            Value::Bool(b) => b.to_string(),
            Value::Text(s) => s.clone(),
            Value::Null => String::new(),
        }
    }
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Value::Int(BigUint::from(v))
    }
}

impl From<BigUint> for Value {
    fn from(v: BigUint) -> Self {
        Value::Int(v)
    }
}

impl From<Option<BigUint>> for Value {
    fn from(v: Option<BigUint>) -> Self {
        v.map_or(Value::Null, Value::Int)
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Bool(v)
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Self {
        Value::Text(v.to_owned())
    }
}

/// Ordered key/value record.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Record(pub Vec<(String, Value)>);

impl Record {
    pub fn new() -> Self {
        Record::default()
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.0.push((key.to_owned(), value.into()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.0.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    fn to_json(&self) -> serde_json::Value {
        let map: Map<String, serde_json::Value> =
            self.0.iter().map(|(k, v)| (k.clone(), v.to_json())).collect();
        serde_json::Value::Object(map)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Mismatch,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Mismatch => "mismatch",
            Status::Error => "error",
        }
    }

    /// 0 ok, 1 mismatch, 2 usage or parse error.
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::Mismatch => 1,
            Status::Error => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputDocument {
    pub command: String,
    pub params: Record,
    pub rows: Vec<Record>,
    pub status: Status,
    /// Extra closing line for plain output.
    pub summary: Option<String>,
}

impl OutputDocument {
    pub fn new(command: &str, params: Record) -> Self {
        OutputDocument {
            command: command.to_owned(),
            params,
            rows: Vec::new(),
            status: Status::Ok,
            summary: None,
        }
    }

    pub fn error(command: &str, params: Record, message: &str) -> Self {
        let mut doc = Self::new(command, params);
        doc.rows.push(Record::new().with("error", message));
        doc.status = Status::Error;
        doc
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
            Format::Plain => self.to_plain(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut doc = Map::new();
        doc.insert("command".into(), json!(self.command));
        doc.insert("params".into(), self.params.to_json());
        doc.insert("rows".into(), self.rows.iter().map(Record::to_json).collect());
        doc.insert("status".into(), json!(self.status.as_str()));
        let mut out = serde_json::to_string_pretty(&serde_json::Value::Object(doc))
            .expect("document serializes");
        out.push('\n');
        out
    }

    fn header(&self) -> Vec<&str> {
        self.rows
            .first()
            .map(|r| r.0.iter().map(|(k, _)| k.as_str()).collect())
            .unwrap_or_default()
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let header = self.header();
        if !header.is_empty() {
            w.write_record(&header).expect("in-memory write");
        }
        for row in &self.rows {
            w.write_record(row.0.iter().map(|(_, v)| v.to_flat()))
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 output")
    }

    pub fn to_plain(&self) -> String {
        let header = self.header();
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.0.iter().map(|(_, v)| v.to_flat()).collect())
            .collect();
        let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
        for row in &cells {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(c.len());
            }
        }
        let mut out = String::new();
        let line = |out: &mut String, items: &mut dyn Iterator<Item = &str>| {
            let parts: Vec<String> = items
                .zip(&widths)
                .map(|(s, &w)| format!("{s:>w$}"))
                .collect();
            let _ = writeln!(out, "{}", parts.join("  ").trim_end());
        };
        if !header.is_empty() {
            line(&mut out, &mut header.iter().copied());
        }
        for row in &cells {
            line(&mut out, &mut row.iter().map(String::as_str));
        }
        if let Some(summary) = &self.summary {
            let _ = writeln!(out, "{summary}");
        }
        let _ = writeln!(out, "status: {}", self.status.as_str());
        out
    }
}
