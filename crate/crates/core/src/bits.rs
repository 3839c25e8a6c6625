//! Finite binary sequences and the self-delimiting pairing built on them.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite sequence of bits, indexed from the first (most significant) bit.
///
/// Bits are packed MSB first into 64-bit words. Bits past `len` in the last
/// word are always zero, so the derived equality and hash are by value.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BitString {
    words: Vec<u64>,
    len: usize,
}

fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

fn low_mask(width: usize) -> u64 {
    if width >= 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    }
}

impl BitString {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(n: usize) -> Self {
        Self {
            words: Vec::with_capacity(words_for(n)),
            len: 0,
        }
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            words: vec![0; words_for(n)],
            len: n,
        }
    }

    pub fn from_bools(bits: Vec<bool>) -> Self {
        bits.into_iter().collect()
    }

    /// Parses a literal made of `0`/`1` characters. ASCII whitespace and `_`
    /// are ignored so that grouped literals like `000 010 010` are accepted.
    pub fn parse_literal(s: &str) -> Result<Self> {
        let mut out = Self::with_capacity(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => out.push(false),
                '1' => out.push(true),
                c if c.is_ascii_whitespace() || c == '_' => {}
                other => {
                    return Err(Error::InvalidInput(format!(
                        "bit literal contains {other:?} at position {i}"
                    )))
                }
            }
        }
        Ok(out)
    }

    /// Interprets bytes most-significant-bit first.
    pub fn from_bytes(bytes: &[u8]) -> Self {
        let words = bytes
            .chunks(8)
            .map(|chunk| {
                let mut buf = [0u8; 8];
                buf[..chunk.len()].copy_from_slice(chunk);
                u64::from_be_bytes(buf)
            })
            .collect();
        Self {
            words,
            len: bytes.len() * 8,
        }
    }

    /// Packs the bits MSB first, zero-padding the final byte.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out: Vec<u8> = self.words.iter().flat_map(|w| w.to_be_bytes()).collect();
        out.truncate(self.len.div_ceil(8));
        out
    }

    /// Appends the `width` low bits of `value`, most significant first.
    pub fn push_uint(&mut self, value: u64, width: usize) {
        assert!(width <= 64, "push_uint width {width} exceeds 64");
        if width == 0 {
            return;
        }
        let value = value & low_mask(width);
        let used = self.len % 64;
        if used == 0 {
            self.words.push(value << (64 - width));
        } else {
            let free = 64 - used;
            let last = self.words.last_mut().expect("partial word exists");
            if width <= free {
                *last |= value << (free - width);
            } else {
                *last |= value >> (width - free);
                self.words.push(value << (64 - (width - free)));
            }
        }
        self.len += width;
    }

    /// Low `width` bits of a 64-bit word, MSB first.
    pub fn from_uint(value: u64, width: usize) -> Self {
        let mut s = Self::with_capacity(width);
        s.push_uint(value, width);
        s
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> Option<bool> {
        (i < self.len).then(|| (self.words[i / 64] >> (63 - i % 64)) & 1 == 1)
    }

    /// Inverts bit `i` in place. Panics when `i` is out of range.
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range for length {}", self.len);
        self.words[i / 64] ^= 1 << (63 - i % 64);
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| (self.words[i / 64] >> (63 - i % 64)) & 1 == 1)
    }

    pub fn push(&mut self, bit: bool) {
        self.push_uint(bit as u64, 1);
    }

    pub fn pop(&mut self) -> Option<bool> {
        let i = self.len.checked_sub(1)?;
        let bit = self.get(i);
        self.words[i / 64] &= !(1 << (63 - i % 64));
        self.len = i;
        self.words.truncate(words_for(i));
        bit
    }

    pub fn extend_from(&mut self, other: &BitString) {
        if self.len % 64 == 0 {
            self.words.extend_from_slice(&other.words);
            self.len += other.len;
            return;
        }
        let mut remaining = other.len;
        for &w in &other.words {
            let width = remaining.min(64);
            self.push_uint(w >> (64 - width), width);
            remaining -= width;
        }
    }

    pub fn concat(&self, other: &BitString) -> BitString {
        let mut out = Self::with_capacity(self.len + other.len);
        out.extend_from(self);
        out.extend_from(other);
        out
    }

    /// Bits `start..end`. Panics when the range is out of bounds.
    pub fn slice(&self, start: usize, end: usize) -> BitString {
        assert!(start <= end && end <= self.len, "slice {start}..{end} of {}", self.len);
        let mut out = Self::with_capacity(end - start);
        let mut pos = start;
        while pos < end {
            let width = (end - pos).min(64);
            out.push_uint(self.peek_u64(pos) >> (64 - width), width);
            pos += width;
        }
        out
    }

    /// The 64 bits starting at `pos`, zero-filled past the end.
    pub fn peek_u64(&self, pos: usize) -> u64 {
        let (w, off) = (pos / 64, pos % 64);
        let hi = self.words.get(w).copied().unwrap_or(0) << off;
        if off == 0 {
            hi
        } else {
            hi | self.words.get(w + 1).copied().unwrap_or(0) >> (64 - off)
        }
    }

    pub fn reversed(&self) -> BitString {
        let padded = Self {
            words: self.words.iter().rev().map(|w| w.reverse_bits()).collect(),
            len: self.words.len() * 64,
        };
        padded.slice(padded.len - self.len, padded.len)
    }

    pub fn reverse_in_place(&mut self) {
        *self = self.reversed();
    }

    pub fn flipped(&self, i: usize) -> BitString {
        let mut out = self.clone();
        out.flip(i);
        out
    }

    pub fn without(&self, i: usize) -> BitString {
        assert!(i < self.len, "bit {i} out of range for length {}", self.len);
        let mut out = self.slice(0, i);
        out.extend_from(&self.slice(i + 1, self.len));
        out
    }

    fn zip_words(&self, other: &BitString, f: impl Fn(u64, u64) -> u64) -> Result<BitString> {
        if self.len != other.len {
            return Err(Error::LengthMismatch {
                left: self.len,
                right: other.len,
            });
        }
        Ok(Self {
            words: self.words.iter().zip(&other.words).map(|(&a, &b)| f(a, b)).collect(),
            len: self.len,
        })
    }

    /// Bitwise XOR of two equal-length strings.
    pub fn xor(&self, other: &BitString) -> Result<BitString> {
        self.zip_words(other, |a, b| a ^ b)
    }

    pub fn and(&self, other: &BitString) -> Result<BitString> {
        self.zip_words(other, |a, b| a & b)
    }

    pub fn rotate_left(&self, k: usize) -> BitString {
        if self.len == 0 {
            return self.clone();
        }
        let k = k % self.len;
        self.slice(k, self.len).concat(&self.slice(0, k))
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Positions that differ over the common range, plus the length difference.
    pub fn padded_hamming(&self, other: &BitString) -> usize {
        let common = self.len.min(other.len);
        let full = common / 64;
        let mut diff: usize = self.words[..full]
            .iter()
            .zip(&other.words[..full])
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum();
        let rest = common % 64;
        if rest > 0 {
            let shift = 64 - rest;
            diff += ((self.words[full] >> shift) ^ (other.words[full] >> shift)).count_ones() as usize;
        }
        diff + self.len.abs_diff(other.len)
    }

    /// Reads `width <= 64` bits starting at `pos` as an unsigned integer,
    /// MSB first.
    pub fn read_uint(&self, pos: usize, width: usize) -> Option<u64> {
        if width > 64 || pos + width > self.len {
            return None;
        }
        if width == 0 {
            return Some(0);
        }
        Some(self.peek_u64(pos) >> (64 - width))
    }

    /// All strings of length `n`, in lexicographic order.
    pub fn all_of_length(n: usize) -> impl Iterator<Item = BitString> {
        assert!(n < 64, "exhaustive enumeration limited to < 64 bits");
        (0..(1u64 << n)).map(move |v| BitString::from_uint(v, n))
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString(\"{self}\")")
    }
}

impl serde::Serialize for BitString {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_literal(s)
    }
}

impl FromIterator<bool> for BitString {
    fn from_iter<I: IntoIterator<Item = bool>>(iter: I) -> Self {
        let mut out = Self::new();
        for bit in iter {
            out.push(bit);
        }
        out
    }
}

/// Elias-gamma code of a positive integer: `floor(log2 n)` zeros, then `n`
/// in binary.
pub fn elias_gamma(n: u64) -> BitString {
    assert!(n >= 1, "Elias gamma is undefined for 0");
    let width = 64 - n.leading_zeros() as usize;
    let mut out = BitString::zeros(width - 1);
    out.push_uint(n, width);
    out
}

/// Decodes one gamma codeword at `pos`, returning the value and the position
/// just past it.
pub fn elias_gamma_decode(s: &BitString, pos: usize) -> Result<(u64, usize)> {
    let mut zeros = 0;
    while s.get(pos + zeros) == Some(false) {
        zeros += 1;
    }
    if zeros >= 64 {
        return Err(Error::MalformedPrefix("gamma prefix exceeds 64 bits".into()));
    }
    let value = s
        .read_uint(pos + zeros, zeros + 1)
        .ok_or_else(|| Error::MalformedPrefix("truncated gamma codeword".into()))?;
    Ok((value, pos + 2 * zeros + 1))
}

/// Self-delimiting pairing: `gamma(|z1| + 1) · z1 · z2`.
pub fn pair_encode(z1: &BitString, z2: &BitString) -> BitString {
    let mut out = elias_gamma(z1.len() as u64 + 1);
    out.extend_from(z1);
    out.extend_from(z2);
    out
}

pub fn pair_decode(encoded: &BitString) -> Result<(BitString, BitString)> {
    let (n, pos) = elias_gamma_decode(encoded, 0)?;
    let first_len = (n - 1) as usize;
    if pos + first_len > encoded.len() {
        return Err(Error::MalformedPrefix(format!(
            "first component claims {first_len} bits but only {} remain",
            encoded.len() - pos
        )));
    }
    Ok((
        encoded.slice(pos, pos + first_len),
        encoded.slice(pos + first_len, encoded.len()),
    ))
}
