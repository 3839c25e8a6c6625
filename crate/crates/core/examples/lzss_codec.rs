//! The LZSS codec on bytes and on arbitrary bit strings.

use integrated_info::aitk::lzss::{
    compress_bytes, decode_padded, decompress_bytes, encode_padded, tokenize,
};
use integrated_info::bits::{pair_decode, pair_encode, BitString};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = b"abracadabra abracadabra abracadabra";
    let encoded = compress_bytes(text);
    println!(
        "{} bytes -> {} bits in {} tokens",
        text.len(),
        encoded.len(),
        tokenize(text).len()
    );
    assert_eq!(decompress_bytes(&encoded)?, text);

    // Bit strings of any length go through the padded form.
    let bits: BitString = "1100110011001100110011001".parse()?;
    let padded = encode_padded(&bits);
    assert_eq!(decode_padded(&padded)?, bits);
    println!("{} bits -> {} padded bits", bits.len(), padded.len());

    // Self-delimiting pairing keeps both halves recoverable.
    let (a, b): (BitString, BitString) = ("101".parse()?, "0".parse()?);
    let paired = pair_encode(&a, &b);
    println!("pair({a}, {b}) = {paired}");
    assert_eq!(pair_decode(&paired)?, (a, b));
    Ok(())
}
