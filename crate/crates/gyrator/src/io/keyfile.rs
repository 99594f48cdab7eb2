//! Plain-text `key = value` files for keys, quantization ranges and interval sidecars.
//!
//! Blank lines and lines starting with `#` are ignored. Reals are written in
//! shortest round-trip form. Key material that must survive bit-exactly is
//! written as `0x`-prefixed hex of the IEEE-754 bits.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use crate::angle::Angle;
use crate::apps::{Backend, CryptoKey, QuantMeta, WatermarkParams};
use crate::error::{Error, Result};
use crate::field::ComplexField;

/// Parsed `key = value` pairs with the byte offset of each line.
#[derive(Clone, Debug, Default)]
pub struct KeyValues {
    entries: HashMap<String, (String, usize)>,
}

impl KeyValues {
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = HashMap::new();
        let mut offset = 0;
        for line in text.split_inclusive('\n') {
            let t = line.trim();
            if !t.is_empty() && !t.starts_with('#') {
                let (k, v) = t
                    .split_once('=')
                    .ok_or_else(|| Error::format(offset, format!("expected 'key = value', got '{t}'")))?;
                let k = k.trim().to_string();
                if entries.insert(k.clone(), (v.trim().to_string(), offset)).is_some() {
                    return Err(Error::format(offset, format!("duplicate key '{k}'")));
                }
            }
            offset += line.len();
        }
        Ok(Self { entries })
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn get_str(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(|(v, _)| v.as_str())
    }

    fn offset(&self, key: &str) -> usize {
        self.entries.get(key).map_or(0, |&(_, o)| o)
    }

    /// Parses an optional value.
    pub fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>> {
        self.get_str(key)
            .map(|v| {
                v.parse()
                    .map_err(|_| Error::format(self.offset(key), format!("invalid value '{v}' for {key}")))
            })
            .transpose()
    }

    pub fn require<T: FromStr>(&self, key: &str) -> Result<T> {
        self.get(key)?
            .ok_or_else(|| Error::format(0, format!("missing key '{key}'")))
    }

    /// A real stored as hex bits.
    pub fn get_bits(&self, key: &str) -> Result<Option<f64>> {
        self.get_str(key)
            .map(|v| parse_bits(v).ok_or_else(|| Error::format(self.offset(key), format!("invalid hex real '{v}'"))))
            .transpose()
    }

    /// Comma-separated reals stored as hex bits.
    pub fn require_bits_list(&self, key: &str) -> Result<Vec<f64>> {
        let v = self
            .get_str(key)
            .ok_or_else(|| Error::format(0, format!("missing key '{key}'")))?;
        v.split(',')
            .map(|s| {
                parse_bits(s.trim())
                    .ok_or_else(|| Error::format(self.offset(key), format!("invalid hex real '{}'", s.trim())))
            })
            .collect()
    }

    /// Angle from `<prefix>_rad_bits` when present, else from `<prefix>_deg`.
    pub fn require_angle(&self, prefix: &str) -> Result<Angle> {
        let bits_key = format!("{prefix}_rad_bits");
        let deg_key = format!("{prefix}_deg");
        let deg: Option<f64> = self.get(&deg_key)?;
        match (self.get_bits(&bits_key)?, deg) {
            (Some(rad), deg) => {
                let a = Angle::from_radians(rad);
                if let Some(d) = deg {
                    if (Angle::from_degrees(d) - a).radians().abs() > 1e-9 {
                        return Err(Error::format(
                            self.offset(&deg_key),
                            format!("{deg_key} = {d} disagrees with {bits_key}"),
                        ));
                    }
                }
                Ok(a)
            }
            (None, Some(d)) => Ok(Angle::from_degrees(d)),
            (None, None) => Err(Error::format(0, format!("missing key '{deg_key}'"))),
        }
    }
}

pub fn bits_hex(v: f64) -> String {
    format!("0x{:016x}", v.to_bits())
}

fn parse_bits(s: &str) -> Option<f64> {
    let h = s.strip_prefix("0x").or_else(|| s.strip_prefix("0X"))?;
    u64::from_str_radix(h, 16).ok().map(f64::from_bits)
}

fn angle_lines(out: &mut String, prefix: &str, a: Angle) {
    let _ = writeln!(out, "{prefix}_deg = {}", a.degrees());
    let _ = writeln!(out, "{prefix}_rad_bits = {}", bits_hex(a.radians()));
}

fn check_kind(kv: &KeyValues, kind: &str) -> Result<()> {
    match kv.get_str("kind") {
        Some(k) if k == kind => Ok(()),
        other => Err(Error::format(
            kv.offset("kind"),
            format!("expected kind = {kind}, found {}", other.unwrap_or("nothing")),
        )),
    }
}

pub fn crypto_key_to_string(key: &CryptoKey) -> String {
    let mut s = String::from("# gyrator encryption key\nkind = crypto\n");
    angle_lines(&mut s, "alpha", key.alpha);
    let _ = writeln!(s, "bits = {}", key.bits);
    let _ = writeln!(s, "r = {}", key.r);
    let _ = writeln!(s, "burn_in = {}", key.burn_in);
    let _ = writeln!(s, "coupling = {}", key.coupling);
    let _ = writeln!(s, "backend = {}", key.backend);
    if let Some(r) = key.region {
        let _ = writeln!(s, "region = {r}");
    }
    let x0: Vec<String> = key.x0.iter().map(|&x| bits_hex(x)).collect();
    let _ = writeln!(s, "x0 = {}", x0.join(","));
    s
}

pub fn parse_crypto_key(text: &str) -> Result<CryptoKey> {
    let kv = KeyValues::parse(text)?;
    check_kind(&kv, "crypto")?;
    let key = CryptoKey {
        alpha: kv.require_angle("alpha")?,
        bits: kv.require("bits")?,
        x0: kv.require_bits_list("x0")?,
        r: kv.get("r")?.unwrap_or(CryptoKey::DEFAULT_R),
        burn_in: kv.get("burn_in")?.unwrap_or(CryptoKey::DEFAULT_BURN_IN),
        coupling: kv.get("coupling")?.unwrap_or(CryptoKey::DEFAULT_COUPLING),
        region: kv.get("region")?,
        backend: kv.get::<Backend>("backend")?.unwrap_or(Backend::Dhgf),
    };
    key.validate()?;
    Ok(key)
}

pub fn watermark_params_to_string(p: &WatermarkParams) -> String {
    let mut s = String::from("# gyrator watermark key\nkind = watermark\n");
    angle_lines(&mut s, "alpha", p.alpha);
    let _ = writeln!(s, "q = {}", p.q);
    let _ = writeln!(s, "l = {}", p.l);
    let _ = writeln!(s, "k1 = {}", p.k1);
    let _ = writeln!(s, "k2 = {}", p.k2);
    let _ = writeln!(s, "backend = {}", p.backend);
    s
}

pub fn parse_watermark_params(text: &str) -> Result<WatermarkParams> {
    let kv = KeyValues::parse(text)?;
    check_kind(&kv, "watermark")?;
    Ok(WatermarkParams {
        alpha: kv.require_angle("alpha")?,
        q: kv.require("q")?,
        l: kv.require("l")?,
        k1: kv.require("k1")?,
        k2: kv.require("k2")?,
        backend: kv.get::<Backend>("backend")?.unwrap_or(Backend::Ccc),
    })
}

pub fn quant_meta_to_string(m: &QuantMeta) -> String {
    let mut s = String::from("kind = quantization\n");
    let _ = writeln!(s, "bits = {}", m.bits);
    for (k, v) in [("re_lo", m.re_lo), ("re_hi", m.re_hi), ("im_lo", m.im_lo), ("im_hi", m.im_hi)] {
        let _ = writeln!(s, "{k} = {}", bits_hex(v));
    }
    s
}

pub fn parse_quant_meta(text: &str) -> Result<QuantMeta> {
    let kv = KeyValues::parse(text)?;
    check_kind(&kv, "quantization")?;
    let bits = |k: &str| -> Result<f64> {
        kv.get_bits(k)?
            .ok_or_else(|| Error::format(0, format!("missing key '{k}'")))
    };
    Ok(QuantMeta {
        bits: kv.require("bits")?,
        re_lo: bits("re_lo")?,
        re_hi: bits("re_hi")?,
        im_lo: bits("im_lo")?,
        im_hi: bits("im_hi")?,
    })
}

/// Sampling intervals and shape of a written field.
pub fn interval_sidecar(g: &ComplexField, note: &str) -> String {
    let mut s = String::from("kind = intervals\n");
    if !note.is_empty() {
        let _ = writeln!(s, "# {note}");
    }
    let _ = writeln!(s, "n1 = {}", g.n1());
    let _ = writeln!(s, "n2 = {}", g.n2());
    let _ = writeln!(s, "dx = {}", g.dx());
    let _ = writeln!(s, "dy = {}", g.dy());
    s
}

/// Reads `(n1, n2, dx, dy)` from an interval sidecar.
pub fn parse_interval_sidecar(text: &str) -> Result<(usize, usize, f64, f64)> {
    let kv = KeyValues::parse(text)?;
    check_kind(&kv, "intervals")?;
    Ok((kv.require("n1")?, kv.require("n2")?, kv.require("dx")?, kv.require("dy")?))
}

/// Path of the sidecar next to an output file: `<file>.meta`.
pub fn sidecar_path(path: &Path) -> std::path::PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".meta");
    s.into()
}

pub fn write_interval_sidecar(path: &Path, g: &ComplexField, note: &str) -> Result<()> {
    Ok(std::fs::write(sidecar_path(path), interval_sidecar(g, note))?)
}
