use crate::error::{Error, Result};

use super::JointDistribution;

/// Deterministic map `(x1, x2) -> y` over finite alphabets.
#[derive(Debug, Clone, PartialEq)]
pub struct TruthTable {
    pub x1: Vec<String>,
    pub x2: Vec<String>,
    /// Output symbol for each `(i, j)`, row-major.
    pub outputs: Vec<String>,
}

/// Distribution over the inputs of a truth table.
#[derive(Debug, Clone, PartialEq)]
pub enum InputDistribution {
    Uniform,
    /// Row-major `p(x1, x2)`.
    Joint(Vec<f64>),
}

pub const BUILTIN_TABLES: [&str; 5] = ["xor", "and", "or", "copy", "concat"];

impl TruthTable {
    pub fn new(x1: Vec<String>, x2: Vec<String>, outputs: Vec<String>) -> Result<Self> {
        if x1.is_empty() || x2.is_empty() || outputs.len() != x1.len() * x2.len() {
            return Err(Error::InvalidDistribution(format!(
                "{} outputs for a {}x{} table",
                outputs.len(),
                x1.len(),
                x2.len()
            )));
        }
        Ok(Self { x1, x2, outputs })
    }

    pub fn from_fn(
        x1: &[&str],
        x2: &[&str],
        f: impl Fn(&str, &str) -> String,
    ) -> Self {
        let outputs = x1
            .iter()
            .flat_map(|a| x2.iter().map(|b| f(a, b)).collect::<Vec<_>>())
            .collect();
        Self {
            x1: x1.iter().map(|s| s.to_string()).collect(),
            x2: x2.iter().map(|s| s.to_string()).collect(),
            outputs,
        }
    }

    /// `xor`, `and`, `or` and `copy` act on single bits; `copy` outputs the
    /// pair `x1,x2`. `concat` joins two 2-bit strings into a 4-bit string.
    pub fn builtin(name: &str) -> Result<Self> {
        let bit = ["0", "1"];
        let bool_gate = |f: fn(bool, bool) -> bool| {
            Self::from_fn(&bit, &bit, move |a, b| {
                if f(a == "1", b == "1") { "1" } else { "0" }.to_string()
            })
        };
        Ok(match name {
            "xor" => bool_gate(|a, b| a ^ b),
            "and" => bool_gate(|a, b| a & b),
            "or" => bool_gate(|a, b| a | b),
            "copy" => Self::from_fn(&bit, &bit, |a, b| format!("{a},{b}")),
            "concat" => {
                let pairs = ["00", "01", "10", "11"];
                Self::from_fn(&pairs, &pairs, |a, b| format!("{a}{b}"))
            }
            other => {
                return Err(Error::InvalidInput(format!(
                    "unknown table {other:?}; expected one of {}",
                    BUILTIN_TABLES.join(", ")
                )))
            }
        })
    }

    pub fn sizes(&self) -> (usize, usize) {
        (self.x1.len(), self.x2.len())
    }

    /// Whether distinct inputs always give distinct outputs.
    pub fn is_injective(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.outputs.iter().all(|y| seen.insert(y))
    }

    pub fn distribution(&self, input: &InputDistribution) -> Result<JointDistribution> {
        let (n1, n2) = self.sizes();
        let weights = match input {
            InputDistribution::Uniform => vec![1.0 / (n1 * n2) as f64; n1 * n2],
            InputDistribution::Joint(p) => {
                if p.len() != n1 * n2 {
                    return Err(Error::InvalidDistribution(format!(
                        "{} input masses for a {n1}x{n2} table",
                        p.len()
                    )));
                }
                p.clone()
            }
        };
        let records: Vec<(&str, &str, &str, f64)> = (0..n1)
            .flat_map(|i| (0..n2).map(move |j| (i, j)))
            .map(|(i, j)| {
                (
                    self.x1[i].as_str(),
                    self.x2[j].as_str(),
                    self.outputs[i * n2 + j].as_str(),
                    weights[i * n2 + j],
                )
            })
            .collect();
        JointDistribution::from_records(&records)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_have_expected_shapes() {
        for name in BUILTIN_TABLES {
            let t = TruthTable::builtin(name).unwrap();
            let d = t.distribution(&InputDistribution::Uniform).unwrap();
            let (n1, n2, _) = d.alphabet_sizes();
            assert_eq!((n1, n2), t.sizes());
        }
        assert_eq!(TruthTable::builtin("concat").unwrap().outputs[6], "0110");
        assert!(TruthTable::builtin("nand").is_err());
    }

    #[test]
    fn injectivity() {
        assert!(TruthTable::builtin("copy").unwrap().is_injective());
        assert!(!TruthTable::builtin("or").unwrap().is_injective());
    }

    #[test]
    fn input_mass_length_checked() {
        let t = TruthTable::builtin("xor").unwrap();
        assert!(t.distribution(&InputDistribution::Joint(vec![1.0])).is_err());
    }
}
