//! Seeded corpora and how well they compress.

use integrated_info::aitk::lzss::compress_bytes;
use integrated_info::corpus::{generate_corpus, CorpusKind, CorpusSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = CorpusSpec { seed: 42, size_bytes: 4096, kind: CorpusKind::Compressible };
    let text = generate_corpus(spec)?;
    assert_eq!(text, generate_corpus(spec)?);
    println!("{}...", String::from_utf8_lossy(&text[..72]));

    for kind in [CorpusKind::Compressible, CorpusKind::Incompressible] {
        let bytes = generate_corpus(CorpusSpec { kind, ..spec })?;
        let ratio = compress_bytes(&bytes).len() as f64 / (8 * bytes.len()) as f64;
        println!("{kind:?}: compression ratio {ratio:.3}");
    }
    Ok(())
}
