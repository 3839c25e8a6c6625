//! Two-source partial information decomposition on finite joint distributions.
//!
//! Mutual informations `I(X1;Y)`, `I(X2;Y)` and `I(X1,X2;Y)` are split into a
//! redundancy `R`, unique terms `U1`, `U2` and a synergy `S` satisfying
//!
//! ```text
//! R + U1          = I(X1;Y)
//! R + U2          = I(X2;Y)
//! R + U1 + U2 + S = I(X1,X2;Y)
//! ```
//!
//! The equalities leave one degree of freedom, fixed by a [`Redundancy`]
//! measure. The default is the expected minimum specific information.
//! All quantities are in bits with `0 log 0 = 0`.

pub mod format;
pub mod tables;

use crate::error::{Error, Result};

pub use tables::{InputDistribution, TruthTable};

/// Tolerance for equality checks and total probability mass.
pub const TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    X1,
    X2,
    Y,
}

/// A nonempty subset of `{X1, X2, Y}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VarSet(u8);

impl VarSet {
    pub const X1: VarSet = VarSet(0b001);
    pub const X2: VarSet = VarSet(0b010);
    pub const Y: VarSet = VarSet(0b100);
    pub const X1X2: VarSet = VarSet(0b011);
    pub const ALL: VarSet = VarSet(0b111);

    pub fn of(vars: &[Var]) -> VarSet {
        VarSet(vars.iter().fold(0, |acc, v| {
            acc | match v {
                Var::X1 => 0b001,
                Var::X2 => 0b010,
                Var::Y => 0b100,
            }
        }))
    }

    pub fn union(self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    pub fn is_disjoint(self, other: VarSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    fn contains(self, bit: u8) -> bool {
        self.0 & bit != 0
    }
}

/// Joint probability table over `(X1, X2, Y)` with named symbols.
#[derive(Debug, Clone, PartialEq)]
pub struct JointDistribution {
    x1: Vec<String>,
    x2: Vec<String>,
    y: Vec<String>,
    // row-major over (x1, x2, y)
    mass: Vec<f64>,
}

impl JointDistribution {
    /// Builds a distribution from `(x1, x2, y, p)` records. Symbols are
    /// ordered by first appearance; repeated triples accumulate.
    pub fn from_records<S: AsRef<str>>(records: &[(S, S, S, f64)]) -> Result<Self> {
        fn index_of(symbols: &mut Vec<String>, s: &str) -> usize {
            symbols.iter().position(|t| t == s).unwrap_or_else(|| {
                symbols.push(s.to_string());
                symbols.len() - 1
            })
        }
        let (mut x1, mut x2, mut y) = (Vec::new(), Vec::new(), Vec::new());
        let indexed: Vec<(usize, usize, usize, f64)> = records
            .iter()
            .map(|(a, b, c, p)| {
                (
                    index_of(&mut x1, a.as_ref()),
                    index_of(&mut x2, b.as_ref()),
                    index_of(&mut y, c.as_ref()),
                    *p,
                )
            })
            .collect();
        let mut mass = vec![0.0; x1.len() * x2.len() * y.len()];
        for (i, j, k, p) in indexed {
            mass[(i * x2.len() + j) * y.len() + k] += p;
        }
        Self::new(x1, x2, y, mass)
    }

    pub fn new(x1: Vec<String>, x2: Vec<String>, y: Vec<String>, mass: Vec<f64>) -> Result<Self> {
        if x1.is_empty() || x2.is_empty() || y.is_empty() {
            return Err(Error::InvalidDistribution("empty alphabet".into()));
        }
        if mass.len() != x1.len() * x2.len() * y.len() {
            return Err(Error::InvalidDistribution(format!(
                "{} masses for a {}x{}x{} table",
                mass.len(),
                x1.len(),
                x2.len(),
                y.len()
            )));
        }
        if let Some(p) = mass.iter().find(|p| !p.is_finite() || **p < 0.0) {
            return Err(Error::InvalidDistribution(format!("mass {p} is not a probability")));
        }
        let total: f64 = mass.iter().sum();
        if (total - 1.0).abs() > TOLERANCE {
            return Err(Error::InvalidDistribution(format!(
                "total mass {total} differs from 1"
            )));
        }
        Ok(Self { x1, x2, y, mass })
    }

    pub fn alphabet_sizes(&self) -> (usize, usize, usize) {
        (self.x1.len(), self.x2.len(), self.y.len())
    }

    pub fn symbols(&self, var: Var) -> &[String] {
        match var {
            Var::X1 => &self.x1,
            Var::X2 => &self.x2,
            Var::Y => &self.y,
        }
    }

    pub fn p(&self, i: usize, j: usize, k: usize) -> f64 {
        let (_, n2, ny) = self.alphabet_sizes();
        self.mass[(i * n2 + j) * ny + k]
    }

    /// Marginal table over `vars`, laid out row-major in (x1, x2, y) order.
    pub fn marginal(&self, vars: VarSet) -> Vec<f64> {
        let (n1, n2, ny) = self.alphabet_sizes();
        let d1 = if vars.contains(0b001) { n1 } else { 1 };
        let d2 = if vars.contains(0b010) { n2 } else { 1 };
        let dy = if vars.contains(0b100) { ny } else { 1 };
        let mut out = vec![0.0; d1 * d2 * dy];
        for i in 0..n1 {
            for j in 0..n2 {
                for k in 0..ny {
                    let idx = ((i % d1) * d2 + (j % d2)) * dy + (k % dy);
                    out[idx] += self.p(i, j, k);
                }
            }
        }
        out
    }

    /// Whether `X1` and `X2` are independent to within [`TOLERANCE`].
    pub fn inputs_independent(&self) -> bool {
        let (n1, n2, _) = self.alphabet_sizes();
        let joint = self.marginal(VarSet::X1X2);
        let p1 = self.marginal(VarSet::X1);
        let p2 = self.marginal(VarSet::X2);
        (0..n1).all(|i| (0..n2).all(|j| (joint[i * n2 + j] - p1[i] * p2[j]).abs() <= TOLERANCE))
    }
}

fn plogp_sum(probs: &[f64]) -> f64 {
    -probs
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| p * p.log2())
        .sum::<f64>()
}

pub fn entropy(dist: &JointDistribution, vars: VarSet) -> Result<f64> {
    if vars.is_empty() {
        return Err(Error::InvalidInput("entropy of an empty variable set".into()));
    }
    Ok(plogp_sum(&dist.marginal(vars)).max(0.0))
}

/// `I(a;b) = H(a) + H(b) - H(a ∪ b)` for disjoint nonempty sets.
pub fn mutual_information(dist: &JointDistribution, a: VarSet, b: VarSet) -> Result<f64> {
    if a.is_empty() || b.is_empty() || !a.is_disjoint(b) {
        return Err(Error::InvalidInput(
            "mutual information needs disjoint nonempty variable sets".into(),
        ));
    }
    let mi = entropy(dist, a)? + entropy(dist, b)? - entropy(dist, a.union(b))?;
    Ok(if mi.abs() < 1e-12 { 0.0 } else { mi })
}

/// Redundancy between `X1` and `X2` about `Y`.
pub trait Redundancy {
    fn name(&self) -> &'static str;
    fn redundancy(&self, dist: &JointDistribution) -> f64;
}

/// Expected minimum specific information:
/// `R = Σ_y p(y) · min_i Σ_a p(a|y) log(p(a|y) / p(a))`.
#[derive(Debug, Clone, Copy, Default)]
pub struct MinSpecificInformation;

impl MinSpecificInformation {
    /// Specific information each source carries about every outcome of `Y`.
    pub fn specific_information(dist: &JointDistribution, source: Var) -> Vec<f64> {
        let (n1, n2, ny) = dist.alphabet_sizes();
        let (na, joint, pa) = match source {
            Var::X1 => (n1, dist.marginal(VarSet::X1.union(VarSet::Y)), dist.marginal(VarSet::X1)),
            Var::X2 => (n2, dist.marginal(VarSet::X2.union(VarSet::Y)), dist.marginal(VarSet::X2)),
            Var::Y => panic!("Y is the target, not a source"),
        };
        let py = dist.marginal(VarSet::Y);
        (0..ny)
            .map(|k| {
                if py[k] <= 0.0 {
                    return 0.0;
                }
                (0..na)
                    .filter(|&a| joint[a * ny + k] > 0.0)
                    .map(|a| {
                        let cond = joint[a * ny + k] / py[k];
                        cond * (cond / pa[a]).log2()
                    })
                    .sum()
            })
            .collect()
    }
}

impl Redundancy for MinSpecificInformation {
    fn name(&self) -> &'static str {
        "imin"
    }

    fn redundancy(&self, dist: &JointDistribution) -> f64 {
        let py = dist.marginal(VarSet::Y);
        let s1 = Self::specific_information(dist, Var::X1);
        let s2 = Self::specific_information(dist, Var::X2);
        py.iter()
            .zip(s1.iter().zip(&s2))
            .filter(|(p, _)| **p > 0.0)
            .map(|(p, (a, b))| p * a.min(*b))
            .sum()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PidResult {
    pub redundancy: f64,
    pub unique1: f64,
    pub unique2: f64,
    pub synergy: f64,
    /// `I(X1;Y)`
    pub i1: f64,
    /// `I(X2;Y)`
    pub i2: f64,
    /// `I(X1,X2;Y)`
    pub i12: f64,
    pub redundancy_measure: &'static str,
}

impl PidResult {
    /// Largest violation of the three defining equalities.
    pub fn equality_error(&self) -> f64 {
        let e1 = self.redundancy + self.unique1 - self.i1;
        let e2 = self.redundancy + self.unique2 - self.i2;
        let e3 = self.redundancy + self.unique1 + self.unique2 + self.synergy - self.i12;
        e1.abs().max(e2.abs()).max(e3.abs())
    }
}

pub fn pid_decompose(dist: &JointDistribution) -> PidResult {
    pid_decompose_with(dist, &MinSpecificInformation)
}

pub fn pid_decompose_with(dist: &JointDistribution, measure: &dyn Redundancy) -> PidResult {
    let i1 = mutual_information(dist, VarSet::X1, VarSet::Y).expect("disjoint");
    let i2 = mutual_information(dist, VarSet::X2, VarSet::Y).expect("disjoint");
    let i12 = mutual_information(dist, VarSet::X1X2, VarSet::Y).expect("disjoint");
    let redundancy = measure.redundancy(dist);
    let unique1 = i1 - redundancy;
    let unique2 = i2 - redundancy;
    let synergy = i12 - redundancy - unique1 - unique2;
    PidResult {
        redundancy,
        unique1,
        unique2,
        synergy,
        i1,
        i2,
        i12,
        redundancy_measure: measure.name(),
    }
}

/// `I(X1,X2;Y) - I(X1;Y) - I(X2;Y)`, which equals `S - R`.
pub fn synergy_minus_redundancy(dist: &JointDistribution) -> f64 {
    let i1 = mutual_information(dist, VarSet::X1, VarSet::Y).expect("disjoint");
    let i2 = mutual_information(dist, VarSet::X2, VarSet::Y).expect("disjoint");
    let i12 = mutual_information(dist, VarSet::X1X2, VarSet::Y).expect("disjoint");
    i12 - i1 - i2
}

/// `H(X1,X2|Y)`.
pub fn input_equivocation(dist: &JointDistribution) -> f64 {
    let joint = entropy(dist, VarSet::ALL).expect("nonempty");
    let y = entropy(dist, VarSet::Y).expect("nonempty");
    (joint - y).max(0.0)
}

/// The inputs are recoverable from the output: `H(X1,X2|Y) <= tol`.
pub fn lossless_check(dist: &JointDistribution, tol: f64) -> bool {
    input_equivocation(dist) <= tol
}

/// `(S - R) + I(X1;X2)`, zero for every lossless channel.
pub fn theorem1_residual(dist: &JointDistribution) -> Result<f64> {
    if !lossless_check(dist, TOLERANCE) {
        return Err(Error::NotLossless(input_equivocation(dist)));
    }
    let pid = pid_decompose(dist);
    let shared = mutual_information(dist, VarSet::X1, VarSet::X2)?;
    Ok(pid.synergy - pid.redundancy + shared)
}

/// Bits needed to single out one of `n` alternatives.
pub fn repertoire_information(n: u64) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidInput("repertoire must have at least one state".into()));
    }
    Ok((n as f64).log2())
}
