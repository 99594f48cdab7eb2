//! Round-trips a transformed field through GYRC, a PGM preview and a key file.

use gyrator::apps::CryptoKey;
use gyrator::images::test_field;
use gyrator::io::{crypto_key_to_string, decode_gyrc, encode_gyrc, encode_pgm, parse_crypto_key, Emit, PgmImage};
use gyrator::transforms::dgt_ccc;
use gyrator::{Angle, Result};

fn main() -> Result<()> {
    let g = dgt_ccc(&test_field(64, 0.3)?, Angle::from_degrees(35.0))?;
    let bytes = encode_gyrc(&g);
    println!("GYRC: {} bytes, bit-exact roundtrip {}", bytes.len(), decode_gyrc(&bytes)? == g);
    let preview = encode_pgm(&PgmImage::from_field(&g, Emit::Magnitude, 255)?);
    println!("magnitude PGM: {} bytes", preview.len());
    let key = CryptoKey::generate(Angle::from_degrees(70.0), 8, 3)?;
    let text = crypto_key_to_string(&key);
    println!("key file roundtrip exact: {}\n{text}", parse_crypto_key(&text)? == key);
    Ok(())
}
