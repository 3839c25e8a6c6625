//! Bit-flip sensitivity of a codec on text and on noise.

use integrated_info::bits::BitString;
use integrated_info::corpus::{generate_corpus, CorpusKind, CorpusSpec};
use integrated_info::integration::{avalanche_profile, Identity, LzssCodec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for kind in [CorpusKind::Compressible, CorpusKind::Incompressible] {
        let bytes = generate_corpus(CorpusSpec { seed: 1, size_bytes: 2048, kind })?;
        let data = BitString::from_bytes(&bytes);
        let lzss = avalanche_profile(&LzssCodec, &data)?;
        let id = avalanche_profile(&Identity, &data)?;
        println!(
            "{kind:?}: {} -> {} bits, lzss mean {:.4} ({} failed decodes), identity mean {:.6}",
            lzss.data_bits, lzss.encoded_bits, lzss.mean, lzss.decode_failures, id.mean
        );
    }
    Ok(())
}
