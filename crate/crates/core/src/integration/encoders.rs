//! Injective encoders used as test subjects for the integration measure.

use crate::aitk::lzss;
use crate::bits::BitString;
use crate::error::{Error, Result};
use crate::rng::XorShift64Star;

/// Key used by `xor_mask` and `feistel_mix` when none is given.
pub const DEFAULT_KEY: u64 = 0x243F_6A88_85A3_08D3;
pub const DEFAULT_ROUNDS: usize = 8;

pub const BUILTIN_ENCODERS: [&str; 5] = ["identity", "reverse", "xor_mask", "feistel_mix", "lzss_codec"];

/// A one-to-one map on bit strings.
pub trait Encoder: Send + Sync {
    fn name(&self) -> String;

    /// Human-readable input constraint.
    fn domain_note(&self) -> &'static str {
        "any length"
    }

    fn apply(&self, z: &BitString) -> Result<BitString>;

    /// `None` when the encoder ships no inverse.
    fn invert(&self, _encoded: &BitString) -> Option<Result<BitString>> {
        None
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Identity;

impl Encoder for Identity {
    fn name(&self) -> String {
        "identity".into()
    }

    fn apply(&self, z: &BitString) -> Result<BitString> {
        Ok(z.clone())
    }

    fn invert(&self, encoded: &BitString) -> Option<Result<BitString>> {
        Some(Ok(encoded.clone()))
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Reverse;

impl Encoder for Reverse {
    fn name(&self) -> String {
        "reverse".into()
    }

    fn apply(&self, z: &BitString) -> Result<BitString> {
        Ok(z.reversed())
    }

    fn invert(&self, encoded: &BitString) -> Option<Result<BitString>> {
        Some(Ok(encoded.reversed()))
    }
}

/// XOR with the 64-bit key repeated to the input length, key MSB first.
#[derive(Debug, Clone, Copy)]
pub struct XorMask {
    pub key: u64,
}

impl XorMask {
    fn keystream(&self, n: usize) -> BitString {
        let mut out = BitString::with_capacity(n);
        while out.len() < n {
            let width = (n - out.len()).min(64);
            out.push_uint(self.key >> (64 - width), width);
        }
        out
    }
}

impl Encoder for XorMask {
    fn name(&self) -> String {
        "xor_mask".into()
    }

    fn apply(&self, z: &BitString) -> Result<BitString> {
        z.xor(&self.keystream(z.len()))
    }

    fn invert(&self, encoded: &BitString) -> Option<Result<BitString>> {
        Some(self.apply(encoded))
    }
}

/// Balanced Feistel network on the two halves of an even-length input.
///
/// Round function `F(R, k) = rotl(R, 1) ^ (R & rotl(R, 2)) ^ k`. Round keys
/// come from xorshift64* seeded with `key`; half-widths above 64 bits
/// concatenate successive outputs and keep the low bits.
#[derive(Debug, Clone, Copy)]
pub struct FeistelMix {
    pub rounds: usize,
    pub key: u64,
}

impl Default for FeistelMix {
    fn default() -> Self {
        Self {
            rounds: DEFAULT_ROUNDS,
            key: DEFAULT_KEY,
        }
    }
}

impl FeistelMix {
    fn round_keys(&self, width: usize) -> Vec<BitString> {
        let mut rng = XorShift64Star::new(self.key);
        let words = width.div_ceil(64).max(1);
        (0..self.rounds)
            .map(|_| {
                let mut k = BitString::with_capacity(words * 64);
                for _ in 0..words {
                    k.push_uint(rng.next_u64(), 64);
                }
                k.slice(k.len() - width, k.len())
            })
            .collect()
    }

    fn round(r: &BitString, k: &BitString) -> BitString {
        let mixed = r.and(&r.rotate_left(2)).expect("equal lengths");
        r.rotate_left(1)
            .xor(&mixed)
            .and_then(|t| t.xor(k))
            .expect("equal lengths")
    }

    fn halves(z: &BitString) -> Result<(BitString, BitString)> {
        if z.len() % 2 != 0 {
            return Err(Error::OddLength(z.len()));
        }
        let w = z.len() / 2;
        Ok((z.slice(0, w), z.slice(w, z.len())))
    }

    fn decrypt(&self, encoded: &BitString) -> Result<BitString> {
        let (mut l, mut r) = Self::halves(encoded)?;
        for k in self.round_keys(l.len()).iter().rev() {
            let prev_l = r.xor(&Self::round(&l, k))?;
            r = l;
            l = prev_l;
        }
        Ok(l.concat(&r))
    }
}

impl Encoder for FeistelMix {
    fn name(&self) -> String {
        "feistel_mix".into()
    }

    fn domain_note(&self) -> &'static str {
        "even length"
    }

    fn apply(&self, z: &BitString) -> Result<BitString> {
        let (mut l, mut r) = Self::halves(z)?;
        for k in &self.round_keys(l.len()) {
            let next_r = l.xor(&Self::round(&r, k))?;
            l = r;
            r = next_r;
        }
        Ok(l.concat(&r))
    }

    fn invert(&self, encoded: &BitString) -> Option<Result<BitString>> {
        Some(self.decrypt(encoded))
    }
}

/// The reference LZSS codec with its pad field.
#[derive(Debug, Clone, Copy, Default)]
pub struct LzssCodec;

impl Encoder for LzssCodec {
    fn name(&self) -> String {
        "lzss_codec".into()
    }

    fn apply(&self, z: &BitString) -> Result<BitString> {
        Ok(lzss::encode_padded(z))
    }

    fn invert(&self, encoded: &BitString) -> Option<Result<BitString>> {
        Some(lzss::decode_padded(encoded))
    }
}

/// Hides the inverse of another encoder, forcing callers to search.
pub struct ForwardOnly<E>(pub E);

impl<E: Encoder> Encoder for ForwardOnly<E> {
    fn name(&self) -> String {
        self.0.name()
    }

    fn domain_note(&self) -> &'static str {
        self.0.domain_note()
    }

    fn apply(&self, z: &BitString) -> Result<BitString> {
        self.0.apply(z)
    }
}

/// Looks up a built-in encoder. `key` and `rounds` apply where relevant.
pub fn builtin_encoder(name: &str, key: u64, rounds: usize) -> Result<Box<dyn Encoder>> {
    Ok(match name {
        "identity" => Box::new(Identity),
        "reverse" => Box::new(Reverse),
        "xor_mask" => Box::new(XorMask { key }),
        "feistel_mix" => Box::new(FeistelMix { rounds, key }),
        "lzss_codec" => Box::new(LzssCodec),
        other => return Err(Error::UnknownEncoder(other.to_string())),
    })
}

/// Every built-in encoder with default parameters.
pub fn builtin_encoders() -> Vec<Box<dyn Encoder>> {
    BUILTIN_ENCODERS
        .iter()
        .map(|name| builtin_encoder(name, DEFAULT_KEY, DEFAULT_ROUNDS).expect("built-in"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn b(s: &str) -> BitString {
        s.parse().unwrap()
    }

    #[test]
    fn small_examples() {
        assert_eq!(Reverse.apply(&b("0011")).unwrap(), b("1100"));
        let m = XorMask { key: 0xF000_0000_0000_0000 };
        assert_eq!(m.apply(&b("00000")).unwrap(), b("11110"));
        assert_eq!(m.apply(&BitString::zeros(68)).unwrap().count_ones(), 8);
        assert!(matches!(
            FeistelMix::default().apply(&b("101")),
            Err(Error::OddLength(3))
        ));
        assert!(matches!(
            builtin_encoder("rot13", 0, 0),
            Err(Error::UnknownEncoder(_))
        ));
    }

    #[test]
    fn feistel_keys_use_low_bits() {
        let f = FeistelMix { rounds: 2, key: 5 };
        let mut rng = XorShift64Star::new(5);
        let first = rng.next_u64();
        assert_eq!(f.round_keys(8)[0], BitString::from_uint(first & 0xff, 8));
        let wide = f.round_keys(100);
        assert_eq!(wide[0].len(), 100);
        assert_eq!(wide[0].read_uint(36, 64), Some(rng.next_u64()));
    }

    #[test]
    fn all_builtins_are_injective_and_invertible_up_to_twelve_bits() {
        for enc in builtin_encoders() {
            for n in 0..=12 {
                if enc.name() == "feistel_mix" && n % 2 == 1 {
                    continue;
                }
                let mut seen = HashSet::new();
                for z in BitString::all_of_length(n) {
                    let out = enc.apply(&z).unwrap();
                    assert_eq!(enc.invert(&out).unwrap().unwrap(), z, "{}", enc.name());
                    assert!(seen.insert(out), "{} collides at {z}", enc.name());
                }
            }
        }
    }

    #[test]
    fn feistel_round_trips_ten_thousand_inputs() {
        let f = FeistelMix::default();
        let mut rng = XorShift64Star::new(2024);
        for _ in 0..10_000 {
            let n = 2 * (rng.below(80) as usize);
            let z = rng.bits(n);
            assert_eq!(f.decrypt(&f.apply(&z).unwrap()).unwrap(), z);
        }
    }
}
