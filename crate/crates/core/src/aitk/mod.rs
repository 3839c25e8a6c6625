//! Algorithmic-information estimators.
//!
//! True plain and conditional Kolmogorov complexity are not computable. This
//! module provides two computable surrogates behind one [`Estimator`] trait:
//!
//! * `toy`: exhaustive shortest-program search on the six-opcode machine in
//!   [`toy`], exact up to the search depth and a literal upper bound beyond.
//! * `lzss`: the bit length of the reference [`lzss`] token stream.
//!
//! Every identity that holds only up to an additive constant in the ideal
//! theory is checked here against a caller-supplied slack in bits.

pub mod lzss;
pub mod toy;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use crate::bits::{pair_encode, BitString};
use crate::error::{Error, Result};

pub use toy::{toy_run, toy_shortest, Op, ToyProgram};

/// Slack applied to constant-term identities unless a caller overrides it.
pub const DEFAULT_SLACK_BITS: f64 = 64.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EstimateKind {
    /// No shorter program exists on the toy machine.
    Exact,
    UpperBound,
}

impl EstimateKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EstimateKind::Exact => "exact",
            EstimateKind::UpperBound => "upper_bound",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Witness {
    Program(ToyProgram),
    Codec(String),
}

/// A complexity value in bits.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexityEstimate {
    pub value_bits: f64,
    pub kind: EstimateKind,
    pub witness: Option<Witness>,
    pub backend: String,
}

impl ComplexityEstimate {
    pub fn program(&self) -> Option<&ToyProgram> {
        match &self.witness {
            Some(Witness::Program(p)) => Some(p),
            _ => None,
        }
    }
}

/// A deterministic complexity estimator.
///
/// Implementations must return identical values for identical inputs and
/// satisfy `conditional(x, x) <= unconditional(x)` for nonempty `x`.
pub trait Estimator: Send + Sync {
    fn name(&self) -> &str;

    fn estimate(&self, x: &BitString) -> ComplexityEstimate;

    fn estimate_cond(&self, x: &BitString, y: &BitString) -> ComplexityEstimate;

    fn unconditional(&self, x: &BitString) -> f64 {
        self.estimate(x).value_bits
    }

    fn conditional(&self, x: &BitString, y: &BitString) -> f64 {
        self.estimate_cond(x, y).value_bits
    }
}

/// Shortest-program search on the toy machine.
#[derive(Debug, Clone, Default)]
pub struct ToyEstimator {
    /// Search depth in bits; `None` uses `min(3 * (|x| + 2), 30)`.
    pub max_bits: Option<usize>,
}

impl Estimator for ToyEstimator {
    fn name(&self) -> &str {
        "toy"
    }

    fn estimate(&self, x: &BitString) -> ComplexityEstimate {
        toy_shortest(x, &BitString::new(), self.max_bits)
    }

    fn estimate_cond(&self, x: &BitString, y: &BitString) -> ComplexityEstimate {
        toy_shortest(x, y, self.max_bits)
    }
}

/// Any compressor used as an estimator: `C(x)` is the compressed length and
/// `C(x|y)` is `C(pair(y, x)) - C(y)`, clamped to `[0, C(x)]`.
#[derive(Clone)]
pub struct CompressorEstimator {
    name: String,
    compress: Arc<dyn Fn(&BitString) -> usize + Send + Sync>,
}

impl CompressorEstimator {
    pub fn new(
        name: impl Into<String>,
        compressed_bits: impl Fn(&BitString) -> usize + Send + Sync + 'static,
    ) -> Self {
        Self {
            name: name.into(),
            compress: Arc::new(compressed_bits),
        }
    }

    /// The reference LZSS codec with the 3-bit pad field.
    pub fn lzss() -> Self {
        Self::new("lzss", lzss::padded_cost_bits)
    }
}

impl std::fmt::Debug for CompressorEstimator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CompressorEstimator")
            .field("name", &self.name)
            .finish()
    }
}

impl Estimator for CompressorEstimator {
    fn name(&self) -> &str {
        &self.name
    }

    fn estimate(&self, x: &BitString) -> ComplexityEstimate {
        ComplexityEstimate {
            value_bits: (self.compress)(x) as f64,
            kind: EstimateKind::UpperBound,
            witness: Some(Witness::Codec(self.name.clone())),
            backend: self.name.clone(),
        }
    }

    fn estimate_cond(&self, x: &BitString, y: &BitString) -> ComplexityEstimate {
        let joint = (self.compress)(&pair_encode(y, x)) as f64;
        let given = (self.compress)(y) as f64;
        let alone = (self.compress)(x) as f64;
        ComplexityEstimate {
            value_bits: (joint - given).max(0.0).min(alone),
            kind: EstimateKind::UpperBound,
            witness: Some(Witness::Codec(self.name.clone())),
            backend: self.name.clone(),
        }
    }
}

/// Memoizes another estimator. Results are pure functions of the inputs, so
/// sharing one cache across threads and callers is safe.
pub struct CachedEstimator<E> {
    inner: E,
    cache: Mutex<HashMap<(BitString, Option<BitString>), ComplexityEstimate>>,
}

impl<E: Estimator> CachedEstimator<E> {
    pub fn new(inner: E) -> Self {
        Self {
            inner,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn inner(&self) -> &E {
        &self.inner
    }

    fn lookup(
        &self,
        key: (BitString, Option<BitString>),
        compute: impl FnOnce() -> ComplexityEstimate,
    ) -> ComplexityEstimate {
        if let Some(hit) = self.cache.lock().expect("cache lock").get(&key) {
            return hit.clone();
        }
        let value = compute();
        self.cache
            .lock()
            .expect("cache lock")
            .insert(key, value.clone());
        value
    }
}

impl<E: Estimator> Estimator for CachedEstimator<E> {
    fn name(&self) -> &str {
        self.inner.name()
    }

    fn estimate(&self, x: &BitString) -> ComplexityEstimate {
        self.lookup((x.clone(), None), || self.inner.estimate(x))
    }

    fn estimate_cond(&self, x: &BitString, y: &BitString) -> ComplexityEstimate {
        self.lookup((x.clone(), Some(y.clone())), || self.inner.estimate_cond(x, y))
    }
}

/// Name-indexed set of estimators. Starts with `toy` and `lzss`.
#[derive(Clone)]
pub struct Registry {
    backends: BTreeMap<String, Arc<dyn Estimator>>,
}

impl Default for Registry {
    fn default() -> Self {
        let mut r = Self {
            backends: BTreeMap::new(),
        };
        r.register(Arc::new(ToyEstimator::default()));
        r.register(Arc::new(CompressorEstimator::lzss()));
        r
    }
}

impl Registry {
    pub fn register(&mut self, backend: Arc<dyn Estimator>) {
        self.backends.insert(backend.name().to_string(), backend);
    }

    pub fn get(&self, name: &str) -> Result<Arc<dyn Estimator>> {
        self.backends
            .get(name)
            .cloned()
            .ok_or_else(|| Error::UnknownBackend(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.backends.keys().map(String::as_str)
    }
}

pub fn c_hat(x: &BitString, backend: &dyn Estimator) -> f64 {
    backend.unconditional(x)
}

pub fn c_hat_cond(x: &BitString, y: &BitString, backend: &dyn Estimator) -> f64 {
    backend.conditional(x, y)
}

/// Both directions of the algorithmic mutual information estimate.
#[derive(Debug, Clone, PartialEq)]
pub struct MutualInfoReport {
    /// `max(0, C(x) - C(x|y))`
    pub forward: f64,
    /// `max(0, C(y) - C(y|x))`
    pub symmetric: f64,
    pub slack_bits: f64,
    /// The two directions differ by more than the slack.
    pub asymmetry_flag: bool,
}

pub fn mutual_info_hat(
    x: &BitString,
    y: &BitString,
    backend: &dyn Estimator,
    slack_bits: f64,
) -> MutualInfoReport {
    let forward = (c_hat(x, backend) - c_hat_cond(x, y, backend)).max(0.0);
    let symmetric = (c_hat(y, backend) - c_hat_cond(y, x, backend)).max(0.0);
    MutualInfoReport {
        forward,
        symmetric,
        slack_bits,
        asymmetry_flag: (forward - symmetric).abs() > slack_bits,
    }
}

/// `true` iff `C(x) >= |x| - slack`.
pub fn is_random_estimate(x: &BitString, backend: &dyn Estimator, slack_bits: f64) -> Result<bool> {
    if x.is_empty() {
        return Err(Error::InvalidInput("randomness needs a nonempty string".into()));
    }
    Ok(c_hat(x, backend) >= x.len() as f64 - slack_bits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> BitString {
        s.parse().unwrap()
    }

    #[test]
    fn registry_lookup() {
        let reg = Registry::default();
        assert_eq!(reg.names().collect::<Vec<_>>(), vec!["lzss", "toy"]);
        assert!(matches!(reg.get("gzip"), Err(Error::UnknownBackend(_))));
    }

    #[test]
    fn external_codecs_can_be_registered() {
        let mut reg = Registry::default();
        reg.register(Arc::new(CompressorEstimator::new("raw", |x: &BitString| x.len() + 8)));
        let raw = reg.get("raw").unwrap();
        assert_eq!(c_hat(&b("1010"), raw.as_ref()), 12.0);
    }

    #[test]
    fn lzss_estimates() {
        let lz = CompressorEstimator::lzss();
        assert_eq!(c_hat(&BitString::zeros(800), &lz), 131.0);
        assert_eq!(c_hat(&BitString::new(), &lz), 20.0);
        let x = BitString::from_bytes(b"the quick brown fox jumps over the lazy dog");
        assert!(c_hat_cond(&x, &x, &lz) <= c_hat(&x, &lz));
        assert!(c_hat_cond(&x, &x, &lz) < 0.5 * c_hat(&x, &lz));
    }

    #[test]
    fn toy_conditional_examples() {
        let toy = ToyEstimator::default();
        let x = b("0110101");
        assert_eq!(c_hat_cond(&x, &x, &toy), 3.0);
        assert_eq!(c_hat_cond(&b(""), &x, &toy), 0.0);
    }

    #[test]
    fn vacuous_condition_gives_zero_information() {
        let toy = ToyEstimator::default();
        let x = BitString::zeros(16);
        let mi = mutual_info_hat(&x, &b(""), &toy, DEFAULT_SLACK_BITS);
        assert_eq!(mi.forward, 0.0);
    }

    #[test]
    fn self_information_of_zeros() {
        let toy = ToyEstimator::default();
        let x = BitString::zeros(16);
        let mi = mutual_info_hat(&x, &x, &toy, DEFAULT_SLACK_BITS);
        assert_eq!(mi.forward, 12.0);
        assert_eq!(mi.symmetric, 12.0);
        assert!(!mi.asymmetry_flag);
    }

    #[test]
    fn randomness_threshold() {
        let toy = ToyEstimator::default();
        assert!(!is_random_estimate(&BitString::zeros(16), &toy, 0.0).unwrap());
        assert!(is_random_estimate(&b("1"), &toy, 0.0).unwrap());
        assert!(is_random_estimate(&b(""), &toy, 0.0).is_err());
    }
}
