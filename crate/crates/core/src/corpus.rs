//! Seeded test corpora.
//!
//! Compressible corpora are space-separated words drawn with Zipf weights
//! `1/rank` from a 256-word vocabulary of lowercase words of 4 to 8
//! letters. Incompressible corpora are raw generator bytes.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rng::XorShift64Star;

pub const MAX_CORPUS_BYTES: usize = 1 << 24;
pub const VOCABULARY_SIZE: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CorpusKind {
    Compressible,
    Incompressible,
}

impl std::str::FromStr for CorpusKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "compressible" => Ok(CorpusKind::Compressible),
            "incompressible" => Ok(CorpusKind::Incompressible),
            other => Err(Error::InvalidInput(format!("unknown corpus kind {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusSpec {
    pub seed: u64,
    pub size_bytes: usize,
    pub kind: CorpusKind,
}

fn vocabulary(rng: &mut XorShift64Star) -> Vec<Vec<u8>> {
    (0..VOCABULARY_SIZE)
        .map(|_| {
            let len = 4 + rng.below(5) as usize;
            (0..len).map(|_| b'a' + rng.below(26) as u8).collect()
        })
        .collect()
}

pub fn generate_corpus(spec: CorpusSpec) -> Result<Vec<u8>> {
    if spec.size_bytes > MAX_CORPUS_BYTES {
        return Err(Error::SizeExceeded(spec.size_bytes));
    }
    let mut rng = XorShift64Star::new(spec.seed);
    match spec.kind {
        CorpusKind::Incompressible => Ok(rng.bytes(spec.size_bytes)),
        CorpusKind::Compressible => {
            let words = vocabulary(&mut rng);
            let cumulative: Vec<f64> = (1..=VOCABULARY_SIZE)
                .scan(0.0, |acc, rank| {
                    *acc += 1.0 / rank as f64;
                    Some(*acc)
                })
                .collect();
            let total = cumulative[VOCABULARY_SIZE - 1];
            let mut out = Vec::with_capacity(spec.size_bytes + 9);
            while out.len() < spec.size_bytes {
                let u = rng.next_f64() * total;
                let idx = cumulative.partition_point(|&c| c <= u).min(VOCABULARY_SIZE - 1);
                if !out.is_empty() {
                    out.push(b' ');
                }
                out.extend_from_slice(&words[idx]);
            }
            out.truncate(spec.size_bytes);
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aitk::lzss::compress_bytes;

    fn spec(seed: u64, size_bytes: usize, kind: CorpusKind) -> CorpusSpec {
        CorpusSpec {
            seed,
            size_bytes,
            kind,
        }
    }

    #[test]
    fn sizes_and_determinism() {
        for kind in [CorpusKind::Compressible, CorpusKind::Incompressible] {
            let a = generate_corpus(spec(3, 1000, kind)).unwrap();
            assert_eq!(a.len(), 1000);
            assert_eq!(a, generate_corpus(spec(3, 1000, kind)).unwrap());
            assert!(generate_corpus(spec(3, 0, kind)).unwrap().is_empty());
        }
        assert_eq!(
            generate_corpus(spec(1, MAX_CORPUS_BYTES + 1, CorpusKind::Compressible)),
            Err(Error::SizeExceeded(MAX_CORPUS_BYTES + 1))
        );
    }

    #[test]
    fn text_alphabet() {
        let text = generate_corpus(spec(5, 4096, CorpusKind::Compressible)).unwrap();
        assert!(text.iter().all(|&c| c == b' ' || c.is_ascii_lowercase()));
    }

    #[test]
    fn codec_ratios() {
        let n = 10_000;
        let text = generate_corpus(spec(1, n, CorpusKind::Compressible)).unwrap();
        let noise = generate_corpus(spec(1, n, CorpusKind::Incompressible)).unwrap();
        let ratio = |d: &[u8]| compress_bytes(d).len() as f64 / (8 * d.len()) as f64;
        assert!(ratio(&text) < 0.8, "{}", ratio(&text));
        assert!(ratio(&noise) >= 1.0, "{}", ratio(&noise));
    }
}
