//! Algorithmic synergy of the concatenation map `z = x·y`.
//!
//! The both-advice complexity `C(z | x ∩ y)` is the length of the shortest
//! program that prints `z` given either `x` or `y`. For `x = 0…` and `y = 1…`
//! of equal length such a program is "xor the advice with `w = x ⊕ y` to get
//! `d`; print `d·a` if `d` starts with 0 and `a·d` otherwise", whose payload
//! is `w`. [`DualAdviceProgram`] is that program.

use crate::aitk::{c_hat, c_hat_cond, mutual_info_hat, Estimator};
use crate::bits::{pair_encode, BitString};
use crate::error::{Error, Result};
use crate::rng::XorShift64Star;

/// Constant part charged to the dual-advice program on the toy machine.
pub const TOY_HEADER_BITS: usize = 6;
/// Constant part charged to the dual-advice program on codec backends.
pub const CODEC_HEADER_BITS: usize = 64;

pub fn default_header_bits(backend: &str) -> usize {
    if backend == "toy" {
        TOY_HEADER_BITS
    } else {
        CODEC_HEADER_BITS
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualAdviceProgram {
    /// `x ⊕ y`
    pub mask: BitString,
    pub header_bits: usize,
}

impl DualAdviceProgram {
    pub fn payload_bits(&self) -> usize {
        self.mask.len()
    }

    pub fn total_bits(&self) -> usize {
        self.mask.len() + self.header_bits
    }
}

pub fn dual_advice_build(x: &BitString, y: &BitString) -> Result<DualAdviceProgram> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    if x.is_empty() {
        return Err(Error::NormalizationViolation("halves must be nonempty".into()));
    }
    if x.get(0) != Some(false) || y.get(0) != Some(true) {
        return Err(Error::NormalizationViolation(format!(
            "expected x to start with 0 and y with 1, got {} and {}",
            x.get(0).map_or('?', |b| if b { '1' } else { '0' }),
            y.get(0).map_or('?', |b| if b { '1' } else { '0' }),
        )));
    }
    Ok(DualAdviceProgram {
        mask: x.xor(y)?,
        header_bits: TOY_HEADER_BITS,
    })
}

pub fn dual_advice_decode(prog: &DualAdviceProgram, advice: &BitString) -> Result<BitString> {
    let d = advice.xor(&prog.mask)?;
    Ok(if d.get(0) == Some(false) {
        d.concat(advice)
    } else {
        advice.concat(&d)
    })
}

/// Interval estimate of `S0(x,y:z) = C(z|x) + C(z|y) - C(z|xy) - C(z|x∩y)`.
#[derive(Debug, Clone, PartialEq)]
pub struct S0Estimate {
    pub lower: f64,
    pub upper: f64,
    /// `C(z|x)`
    pub given_x: f64,
    /// `C(z|y)`
    pub given_y: f64,
    /// `C(z|pair(x, y))`
    pub given_both: f64,
    /// `max(0, max(C(z|x), C(z|y)) - slack)`
    pub either_lower: f64,
    /// Dual-advice payload plus header.
    pub either_upper: f64,
    /// `either_lower <= either_upper`; when false the measured one-advice
    /// terms exceed the constructive bound by more than the slack.
    pub bounds_consistent: bool,
    pub backend: String,
}

impl S0Estimate {
    pub fn contains(&self, value: f64) -> bool {
        self.lower <= value && value <= self.upper
    }

    /// Gap between `value` and the interval, zero when contained.
    pub fn distance(&self, value: f64) -> f64 {
        (self.lower - value).max(value - self.upper).max(0.0)
    }
}

pub fn s0_bounds(
    x: &BitString,
    y: &BitString,
    backend: &dyn Estimator,
    header_bits: usize,
    slack_bits: f64,
) -> Result<S0Estimate> {
    let mut prog = dual_advice_build(x, y)?;
    prog.header_bits = header_bits;
    let z = x.concat(y);
    let given_x = c_hat_cond(&z, x, backend);
    let given_y = c_hat_cond(&z, y, backend);
    let given_both = c_hat_cond(&z, &pair_encode(x, y), backend);
    let either_upper = prog.total_bits() as f64;
    let either_lower = (given_x.max(given_y) - slack_bits).max(0.0);
    let base = given_x + given_y - given_both;
    Ok(S0Estimate {
        lower: base - either_upper,
        upper: base - either_lower.min(either_upper),
        given_x,
        given_y,
        given_both,
        either_lower,
        either_upper,
        bounds_consistent: either_lower <= either_upper,
        backend: backend.name().to_string(),
    })
}

/// Estimator-side `S - R` for the lossless pairing map.
#[derive(Debug, Clone, PartialEq)]
pub struct SlicesReport {
    /// `C(pair(x1, x2)) - C(x1) - C(x2)`
    pub value: f64,
    /// `-I(x1:x2)` from [`mutual_info_hat`]
    pub neg_mutual_info: f64,
    pub slack_bits: f64,
    /// The two routes differ by more than the slack.
    pub disagreement_flag: bool,
    pub backend: String,
}

pub fn c_slices_lossless(
    x1: &BitString,
    x2: &BitString,
    backend: &dyn Estimator,
    slack_bits: f64,
) -> SlicesReport {
    let value = c_hat(&pair_encode(x1, x2), backend) - c_hat(x1, backend) - c_hat(x2, backend);
    let neg_mutual_info = -mutual_info_hat(x1, x2, backend, slack_bits).forward;
    SlicesReport {
        value,
        neg_mutual_info,
        slack_bits,
        disagreement_flag: (value - neg_mutual_info).abs() > slack_bits,
        backend: backend.name().to_string(),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Theorem2Report {
    pub n: usize,
    pub seed: u64,
    pub x: BitString,
    pub y: BitString,
    pub mask: BitString,
    pub payload_bits: usize,
    pub decoded_from_x: bool,
    pub decoded_from_y: bool,
    pub s0: Option<S0Estimate>,
}

/// Normalized random halves of `n / 2` bits: `x = 0…`, `y = 1…`.
pub fn normalized_halves(n: usize, seed: u64) -> Result<(BitString, BitString)> {
    if n < 2 || n % 2 != 0 {
        return Err(Error::InvalidInput(format!("n = {n} must be even and at least 2")));
    }
    let mut rng = XorShift64Star::new(seed);
    let half = n / 2;
    let mut x = rng.bits(half - 1);
    let mut y = rng.bits(half - 1);
    x = BitString::from_bools(vec![false]).concat(&x);
    y = BitString::from_bools(vec![true]).concat(&y);
    Ok((x, y))
}

/// Builds the dual-advice program for seeded halves, decodes from both
/// advices and optionally attaches S0 bounds.
pub fn theorem2_demo(
    n: usize,
    seed: u64,
    backend: Option<&dyn Estimator>,
    slack_bits: f64,
) -> Result<Theorem2Report> {
    let (x, y) = normalized_halves(n, seed)?;
    let prog = dual_advice_build(&x, &y)?;
    let z = x.concat(&y);
    let decoded_from_x = dual_advice_decode(&prog, &x)? == z;
    let decoded_from_y = dual_advice_decode(&prog, &y)? == z;
    let s0 = backend
        .map(|b| s0_bounds(&x, &y, b, default_header_bits(b.name()), slack_bits))
        .transpose()?;
    Ok(Theorem2Report {
        n,
        seed,
        payload_bits: prog.payload_bits(),
        mask: prog.mask,
        x,
        y,
        decoded_from_x,
        decoded_from_y,
        s0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aitk::{CompressorEstimator, ToyEstimator, DEFAULT_SLACK_BITS};

    fn b(s: &str) -> BitString {
        s.parse().unwrap()
    }

    #[test]
    fn build_examples() {
        assert_eq!(dual_advice_build(&b("0101"), &b("1100")).unwrap().mask, b("1001"));
        assert_eq!(dual_advice_build(&b("0"), &b("1")).unwrap().mask, b("1"));
        assert!(matches!(
            dual_advice_build(&b("1101"), &b("0100")),
            Err(Error::NormalizationViolation(_))
        ));
        assert!(matches!(
            dual_advice_build(&b("01"), &b("100")),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn decode_examples() {
        let prog = DualAdviceProgram {
            mask: b("1001"),
            header_bits: TOY_HEADER_BITS,
        };
        assert_eq!(dual_advice_decode(&prog, &b("0101")).unwrap(), b("01011100"));
        assert_eq!(dual_advice_decode(&prog, &b("1100")).unwrap(), b("01011100"));
        assert!(matches!(
            dual_advice_decode(&prog, &b("111")),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn decode_is_exhaustively_correct_for_small_halves() {
        for half in 1..=6 {
            for x in BitString::all_of_length(half).filter(|s| s.get(0) == Some(false)) {
                for y in BitString::all_of_length(half).filter(|s| s.get(0) == Some(true)) {
                    let prog = dual_advice_build(&x, &y).unwrap();
                    let z = x.concat(&y);
                    assert_eq!(dual_advice_decode(&prog, &x).unwrap(), z);
                    assert_eq!(dual_advice_decode(&prog, &y).unwrap(), z);
                }
            }
        }
    }

    #[test]
    fn degenerate_single_bit_halves() {
        let est = s0_bounds(&b("0"), &b("1"), &ToyEstimator::default(), 6, DEFAULT_SLACK_BITS)
            .unwrap();
        assert!(est.contains(1.0), "{est:?}");
        assert!(est.lower <= est.upper);
    }

    #[test]
    fn demo_is_seed_deterministic() {
        let a = theorem2_demo(64, 3, None, DEFAULT_SLACK_BITS).unwrap();
        let b = theorem2_demo(64, 3, None, DEFAULT_SLACK_BITS).unwrap();
        assert_eq!(a, b);
        assert!(a.decoded_from_x && a.decoded_from_y);
        assert_eq!(a.payload_bits, 32);
        assert!(theorem2_demo(7, 1, None, 0.0).is_err());
        assert!(theorem2_demo(0, 1, None, 0.0).is_err());
    }

    #[test]
    fn slices_of_empty_component() {
        let lz = CompressorEstimator::lzss();
        let x2 = BitString::from_bytes(b"some bytes here");
        let r = c_slices_lossless(&BitString::new(), &x2, &lz, DEFAULT_SLACK_BITS);
        assert!(r.value.abs() <= DEFAULT_SLACK_BITS, "{r:?}");
    }
}
