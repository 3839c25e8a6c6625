//! Edit-distance integration of injective encoders.
//!
//! The integration of an encoder `m` at `z` is the smallest ratio
//! `C(m(z) | m(z')) / C(m(z))` over neighbors `z'` of `z`. A value near 0
//! means some small input edit is cheap to apply to the encoded form; a
//! value near 1 means the encoding hides every such edit. Logarithms are
//! base 2 and `|z|` is a bit length.
//!
//! The encoder-aware describer shows why a computable encoder cannot score
//! high against an observer who knows it: invert `m`, edit the input, and
//! re-encode. That costs an edit index plus a constant, [`C_AWARE`] bits.

mod avalanche;
mod encoders;
mod neighbors;

use serde::Serialize;

use crate::aitk::{c_hat, c_hat_cond, Estimator};
use crate::bits::BitString;
use crate::error::{Error, Result};

pub use avalanche::{avalanche_profile, AvalancheProfile};
pub use encoders::{
    builtin_encoder, builtin_encoders, Encoder, FeistelMix, ForwardOnly, Identity, LzssCodec,
    Reverse, XorMask, BUILTIN_ENCODERS, DEFAULT_KEY, DEFAULT_ROUNDS,
};
pub use neighbors::{ceil_log2, neighbors, NeighborhoodKind, NeighborhoodSpec};

/// Fixed size of the invert-edit-encode program, excluding the edit index.
pub const C_AWARE: usize = 8;

/// Longest input tried when an encoder without an inverse is searched.
pub const DEFAULT_CYCLE_LIMIT_BITS: usize = 16;

pub const LOG_CONVENTION: &str = "log base 2; |z| is bit length";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IntegrationReport {
    pub encoder: String,
    pub neighborhood: NeighborhoodKind,
    /// `numerator / denominator`, in `[0, 1]`.
    pub ratio: f64,
    pub argmin_neighbor: BitString,
    pub numerator: f64,
    pub denominator: f64,
    pub estimator: String,
    pub aware: bool,
    /// Neighbors skipped because they fall outside the encoder domain.
    pub skipped_neighbors: usize,
    pub log_convention: &'static str,
}

/// Integration of `encoder` at `z`.
///
/// With `aware` the conditional term is [`aware_conditional`]; otherwise it
/// is the backend's conditional estimate. Neighbors outside the encoder's
/// domain, such as odd-length deletions under a Feistel encoder, are
/// skipped and counted.
pub fn edit_integration(
    encoder: &dyn Encoder,
    z: &BitString,
    spec: NeighborhoodSpec,
    backend: &dyn Estimator,
    aware: bool,
) -> Result<IntegrationReport> {
    let mz = encoder.apply(z)?;
    let denominator = c_hat(&mz, backend);
    if denominator <= 0.0 {
        return Err(Error::ZeroDenominator);
    }
    let mut best: Option<(f64, BitString)> = None;
    let mut skipped = 0;
    for w in neighbors(z, spec)? {
        let mw = match encoder.apply(&w) {
            Ok(mw) => mw,
            Err(Error::OddLength(_) | Error::DomainViolation(_)) => {
                skipped += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        let numerator = if aware {
            aware_conditional(encoder, &mz, &mw, spec)? as f64
        } else {
            c_hat_cond(&mz, &mw, backend)
        };
        if best.as_ref().map_or(true, |(n, _)| numerator < *n) {
            best = Some((numerator, w));
        }
    }
    let (numerator, argmin) = best.ok_or(Error::NoMatchingNeighbor)?;
    let numerator = numerator.clamp(0.0, denominator);
    Ok(IntegrationReport {
        encoder: encoder.name(),
        neighborhood: spec.kind,
        ratio: numerator / denominator,
        argmin_neighbor: argmin,
        numerator,
        denominator,
        estimator: backend.name().to_string(),
        aware,
        skipped_neighbors: skipped,
        log_convention: LOG_CONVENTION,
    })
}

/// Recovers the input behind `out_given`, via the encoder's inverse or by
/// trying inputs in length-lexicographic order up to `cycle_limit` bits.
pub fn recover_input(
    encoder: &dyn Encoder,
    out_given: &BitString,
    cycle_limit: usize,
) -> Result<BitString> {
    if let Some(inverted) = encoder.invert(out_given) {
        return match inverted {
            Ok(z) if encoder.apply(&z).as_ref() == Ok(out_given) => Ok(z),
            _ => Err(Error::NotInImage),
        };
    }
    for len in 0..=cycle_limit {
        for z in all_strings(len) {
            if encoder.apply(&z).as_ref() == Ok(out_given) {
                return Ok(z);
            }
        }
    }
    Err(Error::NotInImage)
}

fn all_strings(len: usize) -> Box<dyn Iterator<Item = BitString>> {
    if len < 64 {
        Box::new(BitString::all_of_length(len))
    } else {
        Box::new(std::iter::empty())
    }
}

/// Length of the invert-edit-encode description of `out_target` given
/// `out_given`: `description_bits(|z|) + C_AWARE`, where `z` is the input
/// behind `out_given`.
pub fn aware_conditional(
    encoder: &dyn Encoder,
    out_target: &BitString,
    out_given: &BitString,
    spec: NeighborhoodSpec,
) -> Result<usize> {
    aware_conditional_with_limit(encoder, out_target, out_given, spec, DEFAULT_CYCLE_LIMIT_BITS)
}

pub fn aware_conditional_with_limit(
    encoder: &dyn Encoder,
    out_target: &BitString,
    out_given: &BitString,
    spec: NeighborhoodSpec,
    cycle_limit: usize,
) -> Result<usize> {
    let z = recover_input(encoder, out_given, cycle_limit)?;
    let found = neighbors::inverse_neighbors(&z, spec)
        .into_iter()
        .any(|w| encoder.apply(&w).as_ref() == Ok(out_target));
    if !found {
        return Err(Error::NoMatchingNeighbor);
    }
    Ok(spec.description_bits(z.len()) + C_AWARE)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationStatus {
    /// The aware description plus the edit beats `C(m(z'))` by more than
    /// the slack, so the integrating inequality fails for this encoder.
    Certificate,
    /// Every neighbor's output is too compressible for the inequality to
    /// bite at this size.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ViolationCandidate {
    pub neighbor: BitString,
    /// `aware_conditional(m, m(z'), m(z))`
    pub aware_bits: f64,
    /// `C(z' | z)`
    pub edit_bits: f64,
    /// `C(m(z'))`
    pub target_bits: f64,
    /// `target_bits - slack - aware_bits - edit_bits`; positive is a violation.
    pub margin: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ViolationReport {
    pub encoder: String,
    pub z: BitString,
    pub status: ViolationStatus,
    /// Candidate with the largest margin (first on ties).
    pub best: ViolationCandidate,
    pub candidates: Vec<ViolationCandidate>,
    pub description_bits: usize,
    pub slack_bits: f64,
    pub estimator: String,
}

/// Tests the integrating inequality `C(m(z')|m(z)) >= C(m(z')) - C(z'|z)`
/// against the aware describer at every neighbor of `z`.
pub fn integrating_violation_witness(
    encoder: &dyn Encoder,
    z: &BitString,
    spec: NeighborhoodSpec,
    backend: &dyn Estimator,
    slack_bits: f64,
) -> Result<ViolationReport> {
    let mz = encoder.apply(z)?;
    let mut candidates = Vec::new();
    for w in neighbors(z, spec)? {
        let mw = match encoder.apply(&w) {
            Ok(mw) => mw,
            Err(Error::OddLength(_) | Error::DomainViolation(_)) => continue,
            Err(e) => return Err(e),
        };
        let aware_bits = aware_conditional(encoder, &mw, &mz, spec)? as f64;
        let edit_bits = c_hat_cond(&w, z, backend);
        let target_bits = c_hat(&mw, backend);
        candidates.push(ViolationCandidate {
            neighbor: w,
            aware_bits,
            edit_bits,
            target_bits,
            margin: target_bits - slack_bits - aware_bits - edit_bits,
        });
    }
    let best = candidates
        .iter()
        .fold(None::<&ViolationCandidate>, |acc, c| match acc {
            Some(a) if a.margin >= c.margin => Some(a),
            _ => Some(c),
        })
        .cloned()
        .ok_or(Error::NoMatchingNeighbor)?;
    Ok(ViolationReport {
        encoder: encoder.name(),
        z: z.clone(),
        status: if best.margin > 0.0 {
            ViolationStatus::Certificate
        } else {
            ViolationStatus::Inconclusive
        },
        best,
        candidates,
        description_bits: spec.description_bits(z.len()),
        slack_bits,
        estimator: backend.name().to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aitk::{CachedEstimator, ToyEstimator};
    use crate::rng::XorShift64Star;

    fn b(s: &str) -> BitString {
        s.parse().unwrap()
    }

    fn incompressible_16(seed: u64, toy: &dyn Estimator) -> BitString {
        let mut rng = XorShift64Star::new(seed);
        loop {
            let z = rng.bits(16);
            if c_hat(&z, toy) == 48.0 {
                return z;
            }
        }
    }

    #[test]
    fn aware_examples() {
        let z = XorShift64Star::new(9).bits(16);
        let w = z.flipped(3);
        let spec = NeighborhoodSpec::FLIPS;
        assert_eq!(aware_conditional(&Identity, &w, &z, spec), Ok(12));
        let f = FeistelMix::default();
        let (mz, mw) = (f.apply(&z).unwrap(), f.apply(&w).unwrap());
        assert_eq!(aware_conditional(&f, &mw, &mz, spec), Ok(12));
        assert_eq!(aware_conditional(&ForwardOnly(f), &mw, &mz, spec), Ok(12));
        let far = z.flipped(0).flipped(1);
        assert_eq!(
            aware_conditional(&Identity, &far, &z, spec),
            Err(Error::NoMatchingNeighbor)
        );
    }

    #[test]
    fn outputs_outside_the_image() {
        let spec = NeighborhoodSpec::FLIPS;
        let junk = b("0000000000000000");
        assert_eq!(
            aware_conditional(&LzssCodec, &junk, &junk, spec),
            Err(Error::NotInImage)
        );
        assert_eq!(
            aware_conditional_with_limit(&ForwardOnly(LzssCodec), &junk, &junk, spec, 6),
            Err(Error::NotInImage)
        );
    }

    #[test]
    fn identity_and_feistel_on_toy() {
        let toy = CachedEstimator::new(ToyEstimator::default());
        let z = incompressible_16(1, &toy);
        let spec = NeighborhoodSpec::FLIPS;
        let id = edit_integration(&Identity, &z, spec, &toy, false).unwrap();
        assert_eq!((id.numerator, id.denominator), (9.0, 48.0));
        assert_eq!(id.argmin_neighbor, z.flipped(15));
        let aware = edit_integration(&FeistelMix::default(), &z, spec, &toy, true).unwrap();
        assert!(aware.ratio <= 12.0 / aware.denominator + 1e-12);
    }

    #[test]
    fn deletion_neighbors_under_feistel_are_skipped() {
        let toy = ToyEstimator::default();
        let z = b("01101001");
        let r = edit_integration(
            &FeistelMix::default(),
            &z,
            NeighborhoodSpec::FLIPS_AND_DELETION,
            &toy,
            true,
        )
        .unwrap();
        assert_eq!(r.skipped_neighbors, neighbors(&z, NeighborhoodSpec::FLIPS_AND_DELETION).unwrap().len() - 8);
        let id = edit_integration(&Identity, &z, NeighborhoodSpec::FLIPS_AND_DELETION, &toy, true)
            .unwrap();
        assert_eq!(id.skipped_neighbors, 0);
        assert_eq!(id.numerator, (3 + 3 + C_AWARE) as f64);
    }

    #[test]
    fn zero_string_witness_is_inconclusive() {
        let toy = ToyEstimator::default();
        let r = integrating_violation_witness(
            &Identity,
            &BitString::zeros(16),
            NeighborhoodSpec::FLIPS,
            &toy,
            crate::aitk::DEFAULT_SLACK_BITS,
        )
        .unwrap();
        assert_eq!(r.status, ViolationStatus::Inconclusive);
        assert_eq!(r.candidates.len(), 16);
    }
}
