//! JSON file formats for distributions and truth tables.
//!
//! Distribution file: an array of `{"x1", "x2", "y", "p"}` records.
//!
//! Truth-table file:
//!
//! ```json
//! {
//!   "alphabet_sizes": [2, 2],
//!   "mapping": {"0,0": "0", "0,1": "1", "1,0": "1", "1,1": "0"},
//!   "input_distribution": "uniform"
//! }
//! ```
//!
//! Input symbols of a truth-table file are `"0"` to `"n-1"`.
//! `input_distribution` is `"uniform"` or an array of `{"x1", "x2", "p"}`
//! records; the same array is the format of a standalone input-distribution
//! file. Symbols may be JSON strings or integers, and `p` may be a number, a
//! decimal string or a fraction string such as `"3/8"`.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::error::{Error, Result};

use super::{InputDistribution, JointDistribution, TruthTable};

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum Symbol {
    Text(String),
    Int(i64),
}

impl Symbol {
    fn into_string(self) -> String {
        match self {
            Symbol::Text(s) => s,
            Symbol::Int(i) => i.to_string(),
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum Probability {
    Number(f64),
    Text(String),
}

impl Probability {
    fn value(&self) -> Result<f64> {
        match self {
            Probability::Number(p) => Ok(*p),
            Probability::Text(s) => parse_probability(s),
        }
    }
}

/// Parses `"0.25"`, `"1/4"` or `"1"`.
pub fn parse_probability(s: &str) -> Result<f64> {
    let bad = || Error::InvalidInput(format!("cannot parse probability {s:?}"));
    match s.split_once('/') {
        Some((num, den)) => {
            let num: f64 = num.trim().parse().map_err(|_| bad())?;
            let den: f64 = den.trim().parse().map_err(|_| bad())?;
            if den == 0.0 {
                return Err(bad());
            }
            Ok(num / den)
        }
        None => s.trim().parse().map_err(|_| bad()),
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct DistRecord {
    x1: Symbol,
    x2: Symbol,
    y: Symbol,
    p: Probability,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct InputRecord {
    x1: Symbol,
    x2: Symbol,
    p: Probability,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum InputSpec {
    Named(String),
    Records(Vec<InputRecord>),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableFile {
    alphabet_sizes: [usize; 2],
    mapping: BTreeMap<String, Symbol>,
    #[serde(default)]
    input_distribution: Option<InputSpec>,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::InvalidInput(format!("malformed JSON: {e}"))
}

pub fn parse_distribution(json: &str) -> Result<JointDistribution> {
    let records: Vec<DistRecord> = serde_json::from_str(json).map_err(json_error)?;
    let records = records
        .into_iter()
        .map(|r| {
            Ok((
                r.x1.into_string(),
                r.x2.into_string(),
                r.y.into_string(),
                r.p.value()?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    JointDistribution::from_records(&records)
}

fn input_from_records(table: &TruthTable, records: Vec<InputRecord>) -> Result<InputDistribution> {
    let (n1, n2) = table.sizes();
    let mut mass = vec![0.0; n1 * n2];
    for r in records {
        let (a, b) = (r.x1.into_string(), r.x2.into_string());
        let i = table.x1.iter().position(|s| *s == a);
        let j = table.x2.iter().position(|s| *s == b);
        match (i, j) {
            (Some(i), Some(j)) => mass[i * n2 + j] += r.p.value()?,
            _ => {
                return Err(Error::InvalidDistribution(format!(
                    "input ({a}, {b}) is not in the table"
                )))
            }
        }
    }
    Ok(InputDistribution::Joint(mass))
}

/// Parses a standalone input-distribution file for `table`.
pub fn parse_input_distribution(json: &str, table: &TruthTable) -> Result<InputDistribution> {
    let spec: InputSpec = serde_json::from_str(json).map_err(json_error)?;
    resolve_input(spec, table)
}

fn resolve_input(spec: InputSpec, table: &TruthTable) -> Result<InputDistribution> {
    match spec {
        InputSpec::Named(name) if name == "uniform" => Ok(InputDistribution::Uniform),
        InputSpec::Named(other) => Err(Error::InvalidInput(format!(
            "unknown input distribution {other:?}"
        ))),
        InputSpec::Records(records) => input_from_records(table, records),
    }
}

/// Parses a truth-table file into the table and its input distribution
/// (uniform when the field is absent).
pub fn parse_truth_table(json: &str) -> Result<(TruthTable, InputDistribution)> {
    let file: TableFile = serde_json::from_str(json).map_err(json_error)?;
    let [n1, n2] = file.alphabet_sizes;
    let x1: Vec<String> = (0..n1).map(|i| i.to_string()).collect();
    let x2: Vec<String> = (0..n2).map(|i| i.to_string()).collect();
    let mut outputs = vec![None; n1 * n2];
    for (key, y) in file.mapping {
        let (a, b) = key
            .split_once(',')
            .ok_or_else(|| Error::InvalidInput(format!("mapping key {key:?} is not \"x1,x2\"")))?;
        let parse = |s: &str, n: usize| {
            s.trim()
                .parse::<usize>()
                .ok()
                .filter(|&v| v < n)
                .ok_or_else(|| Error::InvalidInput(format!("mapping key {key:?} out of range")))
        };
        outputs[parse(a, n1)? * n2 + parse(b, n2)?] = Some(y.into_string());
    }
    let outputs = outputs
        .into_iter()
        .enumerate()
        .map(|(idx, y)| {
            y.ok_or_else(|| {
                Error::InvalidInput(format!("mapping misses input {},{}", idx / n2, idx % n2))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let table = TruthTable::new(x1, x2, outputs)?;
    let input = match file.input_distribution {
        None => InputDistribution::Uniform,
        Some(spec) => resolve_input(spec, &table)?,
    };
    Ok((table, input))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pid::{pid_decompose, VarSet};
    use approx::assert_abs_diff_eq;

    #[test]
    fn probabilities() {
        assert_eq!(parse_probability("1/4").unwrap(), 0.25);
        assert_eq!(parse_probability(" 0.5 ").unwrap(), 0.5);
        assert!(parse_probability("1/0").is_err());
        assert!(parse_probability("half").is_err());
    }

    #[test]
    fn distribution_file() {
        let json = r#"[
            {"x1": "0", "x2": "0", "y": "0", "p": "1/4"},
            {"x1": "0", "x2": "1", "y": "1", "p": 0.25},
            {"x1": 1, "x2": 0, "y": 1, "p": "0.25"},
            {"x1": "1", "x2": "1", "y": "0", "p": "1/4"}
        ]"#;
        let d = parse_distribution(json).unwrap();
        let pid = pid_decompose(&d);
        assert_abs_diff_eq!(pid.synergy, 1.0, epsilon = 1e-12);
        assert!(parse_distribution("[{\"x1\": 0}]").is_err());
    }

    #[test]
    fn truth_table_file() {
        let json = r#"{
            "alphabet_sizes": [2, 2],
            "mapping": {"0,0": "0", "0,1": "0", "1,0": "0", "1,1": "1"},
            "input_distribution": [
                {"x1": "0", "x2": "0", "p": "1/2"},
                {"x1": "1", "x2": "1", "p": "1/2"}
            ]
        }"#;
        let (table, input) = parse_truth_table(json).unwrap();
        let d = table.distribution(&input).unwrap();
        assert_abs_diff_eq!(crate::pid::entropy(&d, VarSet::Y).unwrap(), 1.0);
    }

    #[test]
    fn truth_table_errors() {
        let missing = r#"{"alphabet_sizes": [2, 1], "mapping": {"0,0": "a"}}"#;
        assert!(parse_truth_table(missing).is_err());
        let range = r#"{"alphabet_sizes": [1, 1], "mapping": {"0,3": "a"}}"#;
        assert!(parse_truth_table(range).is_err());
        let (t, i) = parse_truth_table(r#"{"alphabet_sizes": [1, 1], "mapping": {"0,0": "a"}}"#)
            .unwrap();
        assert_eq!(i, InputDistribution::Uniform);
        assert!(parse_input_distribution(r#""skewed""#, &t).is_err());
    }
}
