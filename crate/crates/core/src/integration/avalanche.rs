use serde::Serialize;

use crate::bits::BitString;
use crate::error::{Error, Result};

use super::Encoder;

/// Decoded damage caused by flipping each bit of an encoded stream.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AvalancheProfile {
    pub codec: String,
    pub data_bits: usize,
    pub encoded_bits: usize,
    /// Corrupted fraction of the decoded output per flipped position. A
    /// failed decode counts as total loss.
    pub per_position: Vec<f64>,
    pub mean: f64,
    pub decode_failures: usize,
}

/// Flips every encoded bit in turn and measures how much of `data` the
/// decoder still returns intact.
pub fn avalanche_profile(codec: &dyn Encoder, data: &BitString) -> Result<AvalancheProfile> {
    if data.is_empty() {
        return Err(Error::InvalidInput("avalanche needs nonempty data".into()));
    }
    let encoded = codec.apply(data)?;
    if codec.invert(&encoded).is_none() {
        return Err(Error::InvalidInput(format!(
            "encoder {} has no inverse",
            codec.name()
        )));
    }
    let mut failures = 0;
    let mut corrupted = encoded.clone();
    let per_position: Vec<f64> = (0..encoded.len())
        .map(|i| {
            corrupted.flip(i);
            let decoded = codec.invert(&corrupted).expect("checked above");
            corrupted.flip(i);
            match decoded {
                Ok(d) => {
                    let span = d.len().max(data.len());
                    (d.padded_hamming(data) as f64 / span as f64).min(1.0)
                }
                Err(_) => {
                    failures += 1;
                    1.0
                }
            }
        })
        .collect();
    let mean = if per_position.is_empty() {
        0.0
    } else {
        per_position.iter().sum::<f64>() / per_position.len() as f64
    };
    Ok(AvalancheProfile {
        codec: codec.name(),
        data_bits: data.len(),
        encoded_bits: encoded.len(),
        per_position,
        mean,
        decode_failures: failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::integration::{Identity, LzssCodec};
    use approx::assert_relative_eq;

    #[test]
    fn identity_baseline() {
        let data = BitString::from_bytes(b"hello avalanche");
        let p = avalanche_profile(&Identity, &data).unwrap();
        let n = data.len() as f64;
        assert!(p.per_position.iter().all(|&v| (v - 1.0 / n).abs() < 1e-12));
        assert_relative_eq!(p.mean, 1.0 / n);
        assert_eq!(p.decode_failures, 0);
    }

    #[test]
    fn terminator_flips_fail_to_decode() {
        let data = BitString::from_bytes(b"abcabcabcabc");
        let p = avalanche_profile(&LzssCodec, &data).unwrap();
        let tail = &p.per_position[p.encoded_bits - 16..];
        assert!(tail.iter().all(|&v| v == 1.0));
        assert!(p.mean > 1.0 / data.len() as f64);
    }

    #[test]
    fn empty_data_rejected() {
        assert!(avalanche_profile(&Identity, &BitString::new()).is_err());
    }
}
