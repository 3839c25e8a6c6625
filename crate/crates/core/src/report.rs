//! Deterministic command reports.
//!
//! Keys keep insertion order, floats are rounded to and printed with nine
//! decimals, and nothing depends on time or environment, so identical inputs
//! give byte-identical output in every format.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{Map, Number, Value};

use crate::error::{Error, Result};

pub const DECIMALS: usize = 9;
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Table,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "table" => Ok(Format::Table),
            other => Err(Error::InvalidInput(format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub slack_bits: f64,
    pub version: String,
}

/// Rounds every float in `value` to [`DECIMALS`] places. Non-finite values
/// become `null`.
pub fn normalize(value: Value) -> Value {
    match value {
        Value::Number(n) if n.is_f64() => {
            let x = n.as_f64().expect("f64 number");
            round(x).map_or(Value::Null, Value::Number)
        }
        Value::Array(items) => Value::Array(items.into_iter().map(normalize).collect()),
        Value::Object(map) => Value::Object(map.into_iter().map(|(k, v)| (k, normalize(v))).collect()),
        other => other,
    }
}

fn round(x: f64) -> Option<Number> {
    let scale = 10f64.powi(DECIMALS as i32);
    let r = (x * scale).round() / scale;
    // Avoid printing negative zero.
    Number::from_f64(if r == 0.0 { 0.0 } else { r })
}

/// Serializes any value into the normalized JSON model.
pub fn to_value<T: Serialize>(value: &T) -> Value {
    normalize(serde_json::to_value(value).expect("report payloads serialize"))
}

impl Report {
    pub fn new(command: impl Into<String>, inputs: Value, results: Value, slack_bits: f64) -> Self {
        Self {
            command: command.into(),
            inputs: normalize(inputs),
            results: normalize(results),
            slack_bits,
            version: VERSION.to_string(),
        }
    }

    pub fn to_value(&self) -> Value {
        let mut map = Map::new();
        map.insert("command".into(), Value::String(self.command.clone()));
        map.insert("inputs".into(), self.inputs.clone());
        map.insert("results".into(), self.results.clone());
        map.insert(
            "slack_bits".into(),
            round(self.slack_bits).map_or(Value::Null, Value::Number),
        );
        map.insert("version".into(), Value::String(self.version.clone()));
        Value::Object(map)
    }

    pub fn parse(json: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(json)
            .map_err(|e| Error::InvalidInput(format!("malformed report: {e}")))?;
        let field = |name: &str| {
            value
                .get(name)
                .cloned()
                .ok_or_else(|| Error::InvalidInput(format!("report lacks {name:?}")))
        };
        let text = |name: &str| -> Result<String> {
            field(name)?
                .as_str()
                .map(str::to_string)
                .ok_or_else(|| Error::InvalidInput(format!("report field {name:?} is not a string")))
        };
        Ok(Self {
            command: text("command")?,
            inputs: field("inputs")?,
            results: field("results")?,
            slack_bits: field("slack_bits")?.as_f64().unwrap_or(f64::NAN),
            version: text("version")?,
        })
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut out = String::new();
                write_json(&mut out, &self.to_value(), 0);
                out.push('\n');
                out
            }
            Format::Csv => {
                let mut out = String::from("key,value\n");
                for (k, v) in flatten(&self.to_value()) {
                    let _ = writeln!(out, "{},{}", csv_field(&k), csv_field(&v));
                }
                out
            }
            Format::Table => {
                let rows = flatten(&self.to_value());
                let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                rows.iter()
                    .map(|(k, v)| format!("{k:<width$}  {v}\n"))
                    .collect()
            }
        }
    }
}

fn format_number(n: &Number) -> String {
    match n.as_f64() {
        Some(x) if n.is_f64() => format!("{x:.DECIMALS$}"),
        _ => n.to_string(),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "null".into(),
        Value::Bool(b) => b.to_string(),
        Value::Number(n) => format_number(n),
        Value::String(s) => s.clone(),
        Value::Array(_) | Value::Object(_) => unreachable!("flattened"),
    }
}

/// Dotted-path rows of every scalar in document order.
fn flatten(value: &Value) -> Vec<(String, String)> {
    fn walk(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
        let join = |k: &str| {
            if prefix.is_empty() {
                k.to_string()
            } else {
                format!("{prefix}.{k}")
            }
        };
        match v {
            Value::Object(map) => map.iter().for_each(|(k, v)| walk(&join(k), v, out)),
            Value::Array(items) => items
                .iter()
                .enumerate()
                .for_each(|(i, v)| walk(&join(&i.to_string()), v, out)),
            other => out.push((prefix.to_string(), scalar(other))),
        }
    }
    let mut out = Vec::new();
    walk("", value, &mut out);
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn write_json(out: &mut String, v: &Value, indent: usize) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Number(n) => out.push_str(&format_number(n)),
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_json(out, item, indent + 1);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, item)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_json(out, item, indent + 1);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        other => out.push_str(&other.to_string()),
    }
}
