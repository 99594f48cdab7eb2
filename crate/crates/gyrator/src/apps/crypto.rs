//! Bit-plane encryption of quantized transform coefficients with logistic maps.
//!
//! Each of the `K` bit planes has its own logistic map. The maps are coupled
//! on a ring during burn-in, so a change in any initial condition reaches
//! every plane. After each code the states absorb the ciphertext code, so a
//! single code read back wrong garbles everything after it.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Backend;
use crate::angle::Angle;
use crate::error::{Error, Result};
use crate::field::{ComplexField, C64};

/// Encryption key. `x0` holds one initial condition per bit plane.
#[derive(Clone, Debug, PartialEq)]
pub struct CryptoKey {
    pub alpha: Angle,
    pub bits: u32,
    pub x0: Vec<f64>,
    pub r: f64,
    pub burn_in: usize,
    /// Ring coupling strength during burn-in.
    pub coupling: f64,
    /// Side of the centered block of coefficients to encrypt; all if `None`.
    pub region: Option<usize>,
    pub backend: Backend,
}

impl CryptoKey {
    pub const DEFAULT_R: f64 = 3.99;
    pub const DEFAULT_BURN_IN: usize = 1000;
    pub const DEFAULT_COUPLING: f64 = 0.1;

    /// Key with default map settings and the DHGF backend; `K = x0.len()`.
    pub fn new(alpha: Angle, x0: Vec<f64>) -> Result<Self> {
        let key = Self {
            alpha,
            bits: x0.len() as u32,
            x0,
            r: Self::DEFAULT_R,
            burn_in: Self::DEFAULT_BURN_IN,
            coupling: Self::DEFAULT_COUPLING,
            region: None,
            backend: Backend::Dhgf,
        };
        key.validate()?;
        Ok(key)
    }

    /// Random initial conditions for `bits` planes.
    pub fn generate(alpha: Angle, bits: u32, seed: u64) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x0 = (0..bits)
            .map(|_| loop {
                let x: f64 = rng.random();
                if !is_weak(x) && (x - 0.5).abs() > 1e-3 {
                    break x;
                }
            })
            .collect();
        Self::new(alpha, x0)
    }

    pub fn with_region(mut self, region: Option<usize>) -> Self {
        self.region = region;
        self
    }

    pub fn with_backend(mut self, backend: Backend) -> Self {
        self.backend = backend;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(1..=32).contains(&self.bits) {
            return Err(Error::Range(format!("{} bits per component, need 1..=32", self.bits)));
        }
        if self.x0.len() != self.bits as usize {
            return Err(Error::Config(format!(
                "{} initial conditions for {} bit planes",
                self.x0.len(),
                self.bits
            )));
        }
        if let Some((k, x)) = self.x0.iter().enumerate().find(|(_, &x)| is_weak(x)) {
            return Err(Error::WeakKey(format!(
                "initial condition {x} of plane {k} must lie in (0, 1) and differ from 0.5"
            )));
        }
        if !(self.r > 3.57 && self.r <= 4.0) {
            return Err(Error::Config(format!("logistic parameter {} outside (3.57, 4]", self.r)));
        }
        if !(0.0..1.0).contains(&self.coupling) {
            return Err(Error::Config(format!("coupling {} outside [0, 1)", self.coupling)));
        }
        if self.region == Some(0) {
            return Err(Error::Range("encryption region must be at least 1x1".into()));
        }
        Ok(())
    }
}

fn is_weak(x: f64) -> bool {
    !(x > 0.0 && x < 1.0) || x == 0.5
}

/// Quantization ranges of the real and imaginary parts.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuantMeta {
    pub bits: u32,
    pub re_lo: f64,
    pub re_hi: f64,
    pub im_lo: f64,
    pub im_hi: f64,
}

struct Quantizer {
    lo: f64,
    span: f64,
    levels: f64,
}

impl Quantizer {
    fn new(lo: f64, hi: f64, bits: u32) -> Self {
        Self {
            lo,
            span: hi - lo,
            levels: ((1u64 << bits) - 1) as f64,
        }
    }

    fn code(&self, v: f64) -> u64 {
        if self.span <= 0.0 {
            return 0;
        }
        ((v - self.lo) / self.span * self.levels).round().clamp(0.0, self.levels) as u64
    }

    fn value(&self, c: u64) -> f64 {
        if self.span <= 0.0 {
            return self.lo;
        }
        self.lo + c as f64 / self.levels * self.span
    }
}

/// Spreads consecutive codes over the unit interval. A shift that tracks the
/// code linearly sits near 0.5 for mid-range codes and drives the maps onto a
/// stable orbit close to their maximum.
const GOLDEN: f64 = 0.618_033_988_749_894_9;

struct Keystream {
    x: Vec<f64>,
    r: f64,
}

impl Keystream {
    fn new(key: &CryptoKey) -> Self {
        let r = key.r;
        let f = |x: f64| r * x * (1.0 - x);
        let mut x = key.x0.clone();
        let k = x.len();
        let e = key.coupling;
        for _ in 0..key.burn_in {
            let fx: Vec<f64> = x.iter().map(|&v| f(v)).collect();
            for i in 0..k {
                x[i] = (1.0 - e) * fx[i] + e * fx[(i + 1) % k];
            }
        }
        Self { x, r }
    }

    fn word(&self) -> u64 {
        self.x
            .iter()
            .enumerate()
            .fold(0, |w, (k, &v)| if v > 0.5 { w | (1 << k) } else { w })
    }

    fn advance(&mut self, cipher: u64) {
        let shift = ((cipher + 1) as f64 * GOLDEN).fract();
        for (k, v) in self.x.iter_mut().enumerate() {
            let mut y = (*v + shift).fract();
            if y == 0.0 {
                y = ((k + 1) as f64 * GOLDEN).fract();
            }
            *v = self.r * y * (1.0 - y);
        }
    }
}

/// Ciphertext: a complex image plus the quantization ranges needed to decrypt.
#[derive(Clone, Debug)]
pub struct Encrypted {
    pub image: ComplexField,
    pub meta: QuantMeta,
}

fn region_indices(s: &ComplexField, region: Option<usize>) -> Result<Vec<usize>> {
    let (n1, n2) = s.shape();
    let Some(r) = region else {
        return Ok((0..n1 * n2).collect());
    };
    if r > n1.min(n2) {
        return Err(Error::Range(format!("region {r} larger than the {n1}x{n2} grid")));
    }
    let (o1, o2) = (n1 / 2 - r / 2, n2 / 2 - r / 2);
    Ok((o1..o1 + r).flat_map(|m| (o2..o2 + r).map(move |n| m * n2 + n)).collect())
}

fn quantizers(meta: &QuantMeta) -> (Quantizer, Quantizer) {
    (
        Quantizer::new(meta.re_lo, meta.re_hi, meta.bits),
        Quantizer::new(meta.im_lo, meta.im_hi, meta.bits),
    )
}

/// Transforms, encrypts the bit planes of the selected coefficients and
/// transforms back.
pub fn encrypt(image: &ComplexField, key: &CryptoKey) -> Result<Encrypted> {
    key.validate()?;
    let mut s = key.backend.forward(image, key.alpha)?;
    let idx = region_indices(&s, key.region)?;
    let fold = |f: fn(f64, f64) -> f64, init: f64, part: fn(&C64) -> f64| {
        idx.iter().map(|&i| part(&s.data()[i])).fold(init, f)
    };
    let meta = QuantMeta {
        bits: key.bits,
        re_lo: fold(f64::min, f64::INFINITY, |z| z.re),
        re_hi: fold(f64::max, f64::NEG_INFINITY, |z| z.re),
        im_lo: fold(f64::min, f64::INFINITY, |z| z.im),
        im_hi: fold(f64::max, f64::NEG_INFINITY, |z| z.im),
    };
    let (qr, qi) = quantizers(&meta);
    let mut ks = Keystream::new(key);
    let data = s.data_mut();
    for &i in &idx {
        let mut part = |q: &Quantizer, v: f64| {
            let p = q.code(v);
            let c = p ^ ks.word();
            ks.advance(c);
            q.value(c)
        };
        data[i] = C64::new(part(&qr, data[i].re), part(&qi, data[i].im));
    }
    Ok(Encrypted {
        image: key.backend.inverse(&s, key.alpha)?,
        meta,
    })
}

/// Inverse of [`encrypt`]. Exact up to `K`-bit quantization with the right key.
pub fn decrypt(encrypted: &ComplexField, meta: &QuantMeta, key: &CryptoKey) -> Result<ComplexField> {
    key.validate()?;
    if meta.bits != key.bits {
        return Err(Error::Config(format!(
            "ciphertext uses {} bits, key has {}",
            meta.bits, key.bits
        )));
    }
    let mut s = key.backend.forward(encrypted, key.alpha)?;
    let idx = region_indices(&s, key.region)?;
    let (qr, qi) = quantizers(meta);
    let mut ks = Keystream::new(key);
    let data = s.data_mut();
    for &i in &idx {
        let mut part = |q: &Quantizer, v: f64| {
            let c = q.code(v);
            let p = c ^ ks.word();
            ks.advance(c);
            q.value(p)
        };
        data[i] = C64::new(part(&qr, data[i].re), part(&qi, data[i].im));
    }
    key.backend.inverse(&s, key.alpha)
}


