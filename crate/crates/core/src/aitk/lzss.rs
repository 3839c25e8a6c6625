//! Reference LZSS codec with a fully pinned, bit-exact token format.
//!
//! Tokens are packed MSB first:
//!
//! * literal: `0` + 8-bit byte
//! * copy: `1` + 12-bit backward offset (1-based) + 4-bit `length - 3`
//! * end of stream: `1` + twelve `0` bits + four `0` bits
//!
//! Parsing is greedy, taking the longest match in the last 4095 bytes and the
//! smallest offset among equally long matches. Matches may overlap the
//! position being encoded.

use crate::bits::BitString;
use crate::error::{Error, Result};

pub const WINDOW: usize = 4096;
pub const MIN_MATCH: usize = 3;
pub const MAX_MATCH: usize = 18;
const OFFSET_BITS: usize = 12;
const LENGTH_BITS: usize = 4;
const COPY_TOKEN_BITS: usize = 1 + OFFSET_BITS + LENGTH_BITS;
pub const LITERAL_TOKEN_BITS: usize = 9;
pub const TERMINATOR_BITS: usize = COPY_TOKEN_BITS;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Token {
    Literal(u8),
    Copy { offset: usize, length: usize },
}

/// Greedy parse of `data` into tokens (the terminator is not included).
pub fn tokenize(data: &[u8]) -> Vec<Token> {
    let mut tokens = Vec::new();
    let mut pos = 0;
    while pos < data.len() {
        let max_len = MAX_MATCH.min(data.len() - pos);
        let mut best = (0usize, 0usize);
        if max_len >= MIN_MATCH {
            let max_offset = pos.min(WINDOW - 1);
            for offset in 1..=max_offset {
                let start = pos - offset;
                let len = (0..max_len)
                    .take_while(|&k| data[start + k] == data[pos + k])
                    .count();
                if len > best.1 {
                    best = (offset, len);
                    if len == max_len {
                        break;
                    }
                }
            }
        }
        if best.1 >= MIN_MATCH {
            tokens.push(Token::Copy {
                offset: best.0,
                length: best.1,
            });
            pos += best.1;
        } else {
            tokens.push(Token::Literal(data[pos]));
            pos += 1;
        }
    }
    tokens
}

pub fn compress_bytes(data: &[u8]) -> BitString {
    let mut out = BitString::new();
    for token in tokenize(data) {
        match token {
            Token::Literal(byte) => {
                out.push(false);
                out.push_uint(byte as u64, 8);
            }
            Token::Copy { offset, length } => {
                out.push(true);
                out.push_uint(offset as u64, OFFSET_BITS);
                out.push_uint((length - MIN_MATCH) as u64, LENGTH_BITS);
            }
        }
    }
    out.push(true);
    out.push_uint(0, OFFSET_BITS + LENGTH_BITS);
    out
}

/// Compresses a byte-aligned bit string.
pub fn lzss_compress(data: &BitString) -> Result<BitString> {
    if data.len() % 8 != 0 {
        return Err(Error::InvalidInput(format!(
            "lzss input must be whole bytes, got {} bits",
            data.len()
        )));
    }
    Ok(compress_bytes(&data.to_bytes()))
}

pub fn decompress_bytes(encoded: &BitString) -> Result<Vec<u8>> {
    decompress_from(encoded, 0)
}

fn decompress_from(encoded: &BitString, start: usize) -> Result<Vec<u8>> {
    let mut out: Vec<u8> = Vec::new();
    let mut pos = start;
    loop {
        let avail = encoded.len().saturating_sub(pos);
        if avail == 0 {
            return Err(Error::MalformedStream("missing terminator".into()));
        }
        // One 64-bit window holds any whole token.
        let w = encoded.peek_u64(pos);
        if w >> 63 == 0 {
            if avail < LITERAL_TOKEN_BITS {
                return Err(Error::MalformedStream("truncated literal".into()));
            }
            out.push((w >> (64 - LITERAL_TOKEN_BITS)) as u8);
            pos += LITERAL_TOKEN_BITS;
            continue;
        }
        if avail < COPY_TOKEN_BITS {
            return Err(Error::MalformedStream("truncated copy token".into()));
        }
        let token = (w >> (64 - COPY_TOKEN_BITS)) as usize;
        let offset = (token >> LENGTH_BITS) & ((1 << OFFSET_BITS) - 1);
        let length_code = token & ((1 << LENGTH_BITS) - 1);
        pos += COPY_TOKEN_BITS;
        if offset == 0 {
            if length_code != 0 {
                return Err(Error::MalformedStream(format!(
                    "zero offset with length code {length_code}"
                )));
            }
            if pos != encoded.len() {
                return Err(Error::MalformedStream(format!(
                    "{} bits after terminator",
                    encoded.len() - pos
                )));
            }
            return Ok(out);
        }
        if offset > out.len() {
            return Err(Error::MalformedStream(format!(
                "offset {offset} beyond {} decoded bytes",
                out.len()
            )));
        }
        let start = out.len() - offset;
        for k in 0..length_code + MIN_MATCH {
            let byte = out[start + k];
            out.push(byte);
        }
    }
}

pub fn lzss_decompress(encoded: &BitString) -> Result<BitString> {
    decompress_bytes(encoded).map(|bytes| BitString::from_bytes(&bytes))
}

/// Bit-string encoding used by the lzss estimator and codec: a 3-bit count of
/// zero pad bits, then the token stream of the zero-padded input.
pub fn encode_padded(data: &BitString) -> BitString {
    let pad = (8 - data.len() % 8) % 8;
    let mut out = BitString::from_uint(pad as u64, 3);
    out.extend_from(&compress_bytes(&data.to_bytes()));
    out
}

pub fn decode_padded(encoded: &BitString) -> Result<BitString> {
    let pad = encoded
        .read_uint(0, 3)
        .ok_or_else(|| Error::MalformedStream("missing pad field".into()))? as usize;
    let bytes = decompress_from(encoded, 3)?;
    let bits = BitString::from_bytes(&bytes);
    if pad > bits.len() {
        return Err(Error::MalformedStream(format!(
            "pad of {pad} bits on {} decoded bits",
            bits.len()
        )));
    }
    let kept = bits.len() - pad;
    if bits.read_uint(kept, pad) != Some(0) {
        return Err(Error::MalformedStream("nonzero pad bits".into()));
    }
    Ok(bits.slice(0, kept))
}

/// Bit length of [`encode_padded`] without materializing the stream.
pub fn padded_cost_bits(data: &BitString) -> usize {
    3 + tokenize(&data.to_bytes())
        .iter()
        .map(|t| match t {
            Token::Literal(_) => LITERAL_TOKEN_BITS,
            Token::Copy { .. } => COPY_TOKEN_BITS,
        })
        .sum::<usize>()
        + TERMINATOR_BITS
}
