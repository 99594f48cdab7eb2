//! Binary PGM (P5) images, 8-bit and 16-bit big-endian.

use std::f64::consts::PI;
use std::path::Path;

use crate::error::{Error, Result};
use crate::field::ComplexField;

/// Raster of gray levels; row `i` of the image is row `i` of the field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PgmImage {
    pub width: usize,
    pub height: usize,
    pub maxval: u16,
    pub pixels: Vec<u16>,
}

/// What to write for a complex field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Emit {
    /// Real part, rounded and clamped.
    Real,
    /// Magnitude scaled min-max to the full range.
    Magnitude,
    /// Phase mapped linearly from `(-pi, pi]`, so phase 0 lands on the middle level.
    Phase,
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_space(&mut self) {
        while let Some(&b) = self.bytes.get(self.pos) {
            if b == b'#' {
                while self.bytes.get(self.pos).is_some_and(|&c| c != b'\n') {
                    self.pos += 1;
                }
            } else if b.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn number(&mut self, what: &str) -> Result<usize> {
        self.skip_space();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::format(start, format!("expected {what}")));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::format(start, format!("{what} out of range")))
    }
}

pub fn decode_pgm(bytes: &[u8]) -> Result<PgmImage> {
    if !bytes.starts_with(b"P5") {
        return Err(Error::format(0, "missing P5 magic"));
    }
    let mut c = Cursor { bytes, pos: 2 };
    if !bytes.get(2).is_some_and(u8::is_ascii_whitespace) {
        return Err(Error::format(2, "expected whitespace after magic"));
    }
    let width = c.number("width")?;
    let height = c.number("height")?;
    let at = c.pos;
    let maxval = c.number("maxval")?;
    if width == 0 || height == 0 {
        return Err(Error::format(at, "zero image dimension"));
    }
    if maxval == 0 || maxval > 65535 {
        return Err(Error::format(at, format!("maxval {maxval} outside 1..=65535")));
    }
    if !bytes.get(c.pos).is_some_and(u8::is_ascii_whitespace) {
        return Err(Error::format(c.pos, "expected a single whitespace before the raster"));
    }
    let start = c.pos + 1;
    let depth = if maxval < 256 { 1 } else { 2 };
    let need = width * height * depth;
    let raster = bytes
        .get(start..start + need)
        .ok_or_else(|| Error::format(bytes.len(), format!("raster truncated, need {need} bytes")))?;
    let pixels: Vec<u16> = if depth == 1 {
        raster.iter().map(|&b| b as u16).collect()
    } else {
        raster.chunks_exact(2).map(|p| u16::from_be_bytes([p[0], p[1]])).collect()
    };
    if let Some(i) = pixels.iter().position(|&p| p as usize > maxval) {
        return Err(Error::format(start + i * depth, format!("sample above maxval {maxval}")));
    }
    Ok(PgmImage {
        width,
        height,
        maxval: maxval as u16,
        pixels,
    })
}

pub fn encode_pgm(img: &PgmImage) -> Vec<u8> {
    let mut out = format!("P5\n{} {}\n{}\n", img.width, img.height, img.maxval).into_bytes();
    if img.maxval < 256 {
        out.extend(img.pixels.iter().map(|&p| p as u8));
    } else {
        out.extend(img.pixels.iter().flat_map(|p| p.to_be_bytes()));
    }
    out
}

pub fn read_pgm(path: impl AsRef<Path>) -> Result<PgmImage> {
    decode_pgm(&std::fs::read(path)?)
}

pub fn write_pgm(path: impl AsRef<Path>, img: &PgmImage) -> Result<()> {
    Ok(std::fs::write(path, encode_pgm(img))?)
}

impl PgmImage {
    /// Real field of shape `(height, width)` with equal intervals `d`.
    pub fn to_field(&self, d: f64) -> Result<ComplexField> {
        let values: Vec<f64> = self.pixels.iter().map(|&p| p as f64).collect();
        ComplexField::from_real(self.height, self.width, d, d, &values)
    }

    /// Gray levels as reals, row-major.
    pub fn values(&self) -> Vec<f64> {
        self.pixels.iter().map(|&p| p as f64).collect()
    }

    pub fn from_field(g: &ComplexField, emit: Emit, maxval: u16) -> Result<Self> {
        if maxval == 0 {
            return Err(Error::Range("maxval must be positive".into()));
        }
        let top = maxval as f64;
        let levels: Vec<f64> = match emit {
            Emit::Real => g.data().iter().map(|z| z.re).collect(),
            Emit::Magnitude => {
                let mag: Vec<f64> = g.data().iter().map(|z| z.norm()).collect();
                let lo = mag.iter().cloned().fold(f64::INFINITY, f64::min);
                let hi = mag.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
                let span = if hi > lo { hi - lo } else { 1.0 };
                mag.iter().map(|m| (m - lo) / span * top).collect()
            }
            Emit::Phase => g
                .data()
                .iter()
                .map(|z| (z.arg() / PI + 1.0) / 2.0 * top)
                .collect(),
        };
        Ok(Self {
            width: g.n2(),
            height: g.n1(),
            maxval,
            pixels: levels.iter().map(|v| v.round().clamp(0.0, top) as u16).collect(),
        })
    }
}
