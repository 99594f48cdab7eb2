//! GYRC: little-endian binary complex field.
//!
//! Layout: magic `GYRC`, version `u16 = 1`, `n1 u32`, `n2 u32`, `dx f64`,
//! `dy f64`, then `n1 * n2` pairs `(re f64, im f64)` in row-major order.

use std::path::Path;

use crate::error::{Error, Result};
use crate::field::{ComplexField, C64};

pub const GYRC_MAGIC: &[u8; 4] = b"GYRC";
pub const GYRC_VERSION: u16 = 1;
pub const GYRC_HEADER_LEN: usize = 30;

pub fn encode_gyrc(g: &ComplexField) -> Vec<u8> {
    let mut out = Vec::with_capacity(GYRC_HEADER_LEN + 16 * g.data().len());
    out.extend_from_slice(GYRC_MAGIC);
    out.extend_from_slice(&GYRC_VERSION.to_le_bytes());
    out.extend_from_slice(&(g.n1() as u32).to_le_bytes());
    out.extend_from_slice(&(g.n2() as u32).to_le_bytes());
    out.extend_from_slice(&g.dx().to_le_bytes());
    out.extend_from_slice(&g.dy().to_le_bytes());
    for z in g.data() {
        out.extend_from_slice(&z.re.to_le_bytes());
        out.extend_from_slice(&z.im.to_le_bytes());
    }
    out
}

fn take<const N: usize>(bytes: &[u8], at: usize) -> Result<[u8; N]> {
    bytes
        .get(at..at + N)
        .map(|s| s.try_into().expect("slice of length N"))
        .ok_or_else(|| Error::format(bytes.len(), format!("truncated: need {} bytes", at + N)))
}

pub fn decode_gyrc(bytes: &[u8]) -> Result<ComplexField> {
    if take::<4>(bytes, 0)? != *GYRC_MAGIC {
        return Err(Error::format(0, "bad magic, expected GYRC"));
    }
    let version = u16::from_le_bytes(take(bytes, 4)?);
    if version != GYRC_VERSION {
        return Err(Error::format(4, format!("unsupported version {version}")));
    }
    let n1 = u32::from_le_bytes(take(bytes, 6)?) as usize;
    let n2 = u32::from_le_bytes(take(bytes, 10)?) as usize;
    let dx = f64::from_le_bytes(take(bytes, 14)?);
    let dy = f64::from_le_bytes(take(bytes, 22)?);
    let count = n1
        .checked_mul(n2)
        .ok_or_else(|| Error::format(6, "dimensions overflow"))?;
    let need = GYRC_HEADER_LEN + 16 * count;
    if bytes.len() < need {
        return Err(Error::format(bytes.len(), format!("truncated: need {need} bytes")));
    }
    if bytes.len() > need {
        return Err(Error::format(need, "trailing bytes after the samples"));
    }
    let data = bytes[GYRC_HEADER_LEN..]
        .chunks_exact(16)
        .map(|c| {
            C64::new(
                f64::from_le_bytes(c[..8].try_into().expect("8 bytes")),
                f64::from_le_bytes(c[8..].try_into().expect("8 bytes")),
            )
        })
        .collect();
    ComplexField::new(n1, n2, dx, dy, data).map_err(|e| Error::format(6, e.to_string()))
}

pub fn read_gyrc(path: impl AsRef<Path>) -> Result<ComplexField> {
    decode_gyrc(&std::fs::read(path)?)
}

pub fn write_gyrc(path: impl AsRef<Path>, g: &ComplexField) -> Result<()> {
    Ok(std::fs::write(path, encode_gyrc(g))?)
}
