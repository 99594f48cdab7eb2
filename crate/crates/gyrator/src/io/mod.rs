//! File formats: PGM images, GYRC complex fields, key files and CSV tables.

mod csv;
mod gyrc;
mod keyfile;
mod pgm;

pub use self::csv::{read_csv, write_csv};
pub use gyrc::{decode_gyrc, encode_gyrc, read_gyrc, write_gyrc, GYRC_HEADER_LEN, GYRC_MAGIC, GYRC_VERSION};
pub use keyfile::{
    bits_hex, crypto_key_to_string, interval_sidecar, parse_crypto_key, parse_interval_sidecar, parse_quant_meta,
    parse_watermark_params, quant_meta_to_string, sidecar_path, watermark_params_to_string, write_interval_sidecar,
    KeyValues,
};
pub use pgm::{decode_pgm, encode_pgm, read_pgm, write_pgm, Emit, PgmImage};
