use std::collections::HashSet;

use serde::Serialize;

use crate::bits::BitString;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NeighborhoodKind {
    #[default]
    BitFlips,
    BitFlipsPlusDeletion,
}

impl NeighborhoodKind {
    pub fn as_str(self) -> &'static str {
        match self {
            NeighborhoodKind::BitFlips => "bit-flips",
            NeighborhoodKind::BitFlipsPlusDeletion => "bit-flips-plus-deletion",
        }
    }
}

impl std::str::FromStr for NeighborhoodKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bit-flips" | "flips" => Ok(NeighborhoodKind::BitFlips),
            "bit-flips-plus-deletion" | "flips+del" => Ok(NeighborhoodKind::BitFlipsPlusDeletion),
            other => Err(Error::InvalidInput(format!("unknown neighborhood {other:?}"))),
        }
    }
}

/// Syntactic stand-in for "strings within `log |z|` bits of description".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct NeighborhoodSpec {
    pub kind: NeighborhoodKind,
}

/// `ceil(log2 n)`, with `0` for `n <= 1`.
pub fn ceil_log2(n: usize) -> usize {
    if n <= 1 {
        0
    } else {
        (usize::BITS - (n - 1).leading_zeros()) as usize
    }
}

impl NeighborhoodSpec {
    pub const FLIPS: Self = Self {
        kind: NeighborhoodKind::BitFlips,
    };
    pub const FLIPS_AND_DELETION: Self = Self {
        kind: NeighborhoodKind::BitFlipsPlusDeletion,
    };

    /// Bits beyond the position index needed to name one edit. The deletion
    /// kind also has to name the reverse edit (an insertion) and the
    /// inserted bit: 4m + 2 edits fit in `ceil(log2 m) + 3` bits.
    pub fn kind_constant(&self) -> usize {
        match self.kind {
            NeighborhoodKind::BitFlips => 0,
            NeighborhoodKind::BitFlipsPlusDeletion => 3,
        }
    }

    /// Upper bound on the description of a neighbor of an `n`-bit string.
    pub fn description_bits(&self, n: usize) -> usize {
        ceil_log2(n) + self.kind_constant()
    }
}

/// Flips in position order, then deletions in position order, without
/// repeats.
pub fn neighbors(z: &BitString, spec: NeighborhoodSpec) -> Result<Vec<BitString>> {
    if z.len() < 2 {
        return Err(Error::TooShort(z.len()));
    }
    let mut out: Vec<BitString> = (0..z.len()).map(|i| z.flipped(i)).collect();
    if spec.kind == NeighborhoodKind::BitFlipsPlusDeletion {
        let mut seen = HashSet::new();
        for i in 0..z.len() {
            let d = z.without(i);
            if seen.insert(d.clone()) {
                out.push(d);
            }
        }
    }
    Ok(out)
}

/// Strings `w` with `z` among the neighbors of `w`: the flips of `z` and, for
/// the deletion kind, every single-bit insertion into `z`.
pub(crate) fn inverse_neighbors(z: &BitString, spec: NeighborhoodSpec) -> Vec<BitString> {
    let mut out: Vec<BitString> = (0..z.len()).map(|i| z.flipped(i)).collect();
    if spec.kind == NeighborhoodKind::BitFlipsPlusDeletion {
        let mut seen = HashSet::new();
        for i in 0..=z.len() {
            for bit in [false, true] {
                let mut w = z.slice(0, i);
                w.push(bit);
                w.extend_from(&z.slice(i, z.len()));
                if seen.insert(w.clone()) {
                    out.push(w);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> BitString {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(neighbors(&b("01"), NeighborhoodSpec::FLIPS).unwrap(), vec![b("11"), b("00")]);
        assert_eq!(
            neighbors(&b("000"), NeighborhoodSpec::FLIPS_AND_DELETION).unwrap(),
            vec![b("100"), b("010"), b("001"), b("00")]
        );
        assert!(matches!(neighbors(&b("1"), NeighborhoodSpec::FLIPS), Err(Error::TooShort(1))));
    }

    #[test]
    fn flips_count_and_distinctness() {
        for z in BitString::all_of_length(6) {
            let n = neighbors(&z, NeighborhoodSpec::FLIPS).unwrap();
            assert_eq!(n.len(), 6);
            assert!(n.iter().all(|w| *w != z));
            for w in neighbors(&z, NeighborhoodSpec::FLIPS_AND_DELETION).unwrap() {
                assert_ne!(w, z);
                assert!(inverse_neighbors(&w, NeighborhoodSpec::FLIPS_AND_DELETION).contains(&z));
            }
        }
    }

    #[test]
    fn description_bits() {
        assert_eq!(ceil_log2(16), 4);
        assert_eq!(ceil_log2(17), 5);
        assert_eq!(ceil_log2(1), 0);
        assert_eq!(NeighborhoodSpec::FLIPS.description_bits(16), 4);
        assert_eq!(NeighborhoodSpec::FLIPS_AND_DELETION.description_bits(16), 7);
    }
}
