//! Watermarking of transform coefficients with middle energy.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Backend;
use crate::angle::Angle;
use crate::error::{Error, Result};
use crate::field::{ComplexField, C64};

/// Embedding parameters: payload of length `l` placed from rank `q` of the
/// coefficients sorted by ascending magnitude.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WatermarkParams {
    pub alpha: Angle,
    pub q: usize,
    pub l: usize,
    pub k1: f64,
    pub k2: f64,
    pub backend: Backend,
}

impl Default for WatermarkParams {
    fn default() -> Self {
        Self {
            alpha: Angle::from_degrees(40.0),
            q: 8000,
            l: 64 * 64,
            k1: 0.15,
            k2: 0.15,
            backend: Backend::Ccc,
        }
    }
}

/// Parameters plus the magnitude ordering of the host coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct WatermarkKey {
    params: WatermarkParams,
    permutation: Vec<usize>,
}

/// Indices sorted by ascending magnitude, ties broken by index.
fn magnitude_order(coeffs: &[C64]) -> Vec<usize> {
    let mag: Vec<f64> = coeffs.iter().map(|z| z.norm()).collect();
    let mut idx: Vec<usize> = (0..coeffs.len()).collect();
    idx.sort_by(|&a, &b| mag[a].total_cmp(&mag[b]).then(a.cmp(&b)));
    idx
}

impl WatermarkKey {
    /// Checks that `permutation` is a bijection and the payload fits.
    pub fn new(params: WatermarkParams, permutation: Vec<usize>) -> Result<Self> {
        let n = permutation.len();
        if params.q + params.l > n {
            return Err(Error::Range(format!(
                "payload ranks {}..{} exceed {n} coefficients",
                params.q,
                params.q + params.l
            )));
        }
        let mut seen = vec![false; n];
        for &i in &permutation {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Validation("sort permutation is not a bijection".into()));
            }
        }
        if !(params.k1.is_finite() && params.k2.is_finite()) {
            return Err(Error::Range("embedding strengths must be finite".into()));
        }
        Ok(Self { params, permutation })
    }

    /// Key for a host: its coefficients are sorted once here.
    pub fn for_host(host: &ComplexField, params: WatermarkParams) -> Result<Self> {
        let s = params.backend.forward(host, params.alpha)?;
        Self::new(params, magnitude_order(s.data()))
    }

    pub fn params(&self) -> &WatermarkParams {
        &self.params
    }

    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    fn slots(&self) -> &[usize] {
        &self.permutation[self.params.q..self.params.q + self.params.l]
    }

    fn check_field(&self, g: &ComplexField) -> Result<()> {
        if g.n1() * g.n2() != self.permutation.len() {
            return Err(Error::Shape(format!(
                "field {:?} does not match a key for {} coefficients",
                g.shape(),
                self.permutation.len()
            )));
        }
        Ok(())
    }

    fn check_payload(&self, w1: &[f64], w2: &[f64]) -> Result<()> {
        if w1.len() != self.params.l || w2.len() != self.params.l {
            return Err(Error::Range(format!(
                "watermarks of length {} and {} for payload length {}",
                w1.len(),
                w2.len(),
                self.params.l
            )));
        }
        if w1.iter().chain(w2).any(|v| !v.is_finite()) {
            return Err(Error::Range("watermark values must be finite".into()));
        }
        Ok(())
    }
}

/// Adds `k1 w1 + j k2 w2` to the payload coefficients and transforms back.
/// The result is complex; its real part is the displayable image.
pub fn watermark_embed(host: &ComplexField, w1: &[f64], w2: &[f64], key: &WatermarkKey) -> Result<ComplexField> {
    key.check_field(host)?;
    key.check_payload(w1, w2)?;
    let p = &key.params;
    let mut s = p.backend.forward(host, p.alpha)?;
    let data = s.data_mut();
    for (l, &i) in key.slots().iter().enumerate() {
        data[i] += C64::new(p.k1 * w1[l], p.k2 * w2[l]);
    }
    p.backend.inverse(&s, p.alpha)
}

/// Recovers both watermarks given the original host.
pub fn watermark_extract(
    watermarked: &ComplexField,
    host: &ComplexField,
    key: &WatermarkKey,
) -> Result<(Vec<f64>, Vec<f64>)> {
    let p = &key.params;
    if p.k1 == 0.0 || p.k2 == 0.0 {
        return Err(Error::DegenerateKey("embedding strengths must be non-zero".into()));
    }
    if watermarked.shape() != host.shape() {
        return Err(Error::Shape(format!(
            "watermarked {:?} and host {:?} differ",
            watermarked.shape(),
            host.shape()
        )));
    }
    key.check_field(host)?;
    let sw = p.backend.forward(watermarked, p.alpha)?;
    let sh = p.backend.forward(host, p.alpha)?;
    Ok(key
        .slots()
        .iter()
        .map(|&i| {
            let d = sw.data()[i] - sh.data()[i];
            (d.re / p.k1, d.im / p.k2)
        })
        .unzip())
}

fn payload_coefficients(suspect: &ComplexField, key: &WatermarkKey) -> Result<Vec<C64>> {
    key.check_field(suspect)?;
    let s = key.params.backend.forward(suspect, key.params.alpha)?;
    Ok(key.slots().iter().map(|&i| s.data()[i]).collect())
}

fn response(z: &[C64], w1: &[f64], w2: &[f64]) -> C64 {
    z.iter()
        .zip(w1.iter().zip(w2))
        .map(|(s, (&a, &b))| C64::new(a, -b) * s)
        .sum()
}

/// `d = sum (w1 - j w2) S`, over the payload ranks of the suspect's coefficients.
pub fn detector_response(suspect: &ComplexField, w1: &[f64], w2: &[f64], key: &WatermarkKey) -> Result<C64> {
    key.check_payload(w1, w2)?;
    Ok(response(&payload_coefficients(suspect, key)?, w1, w2))
}

/// Detector magnitudes over a set of candidate watermarks.
#[derive(Clone, Debug, PartialEq)]
pub struct DetectionSweep {
    /// `|d|` divided by its maximum over all candidates.
    pub normalized: Vec<f64>,
    pub correct_index: usize,
    pub argmax: usize,
    /// Mean and variance of the normalized responses of the wrong candidates.
    pub wrong_mean: f64,
    pub wrong_variance: f64,
}

impl DetectionSweep {
    pub fn detected(&self) -> bool {
        self.argmax == self.correct_index
    }
}

/// Compares the true watermarks, placed at `correct_index`, with `count - 1`
/// random candidates of integers in `[0, 255]` drawn from `seed`.
pub fn detection_sweep(
    suspect: &ComplexField,
    w1: &[f64],
    w2: &[f64],
    key: &WatermarkKey,
    count: usize,
    correct_index: usize,
    seed: u64,
) -> Result<DetectionSweep> {
    if correct_index >= count {
        return Err(Error::Range(format!("correct index {correct_index} not below {count}")));
    }
    key.check_payload(w1, w2)?;
    let z = payload_coefficients(suspect, key)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let l = key.params.l;
    let (mut c1, mut c2) = (vec![0.0; l], vec![0.0; l]);
    let mut mags = Vec::with_capacity(count);
    for i in 0..count {
        let d = if i == correct_index {
            response(&z, w1, w2)
        } else {
            for v in c1.iter_mut().chain(c2.iter_mut()) {
                *v = rng.random_range(0..=255u8) as f64;
            }
            response(&z, &c1, &c2)
        };
        mags.push(d.norm());
    }
    let max = mags.iter().cloned().fold(0.0, f64::max);
    let normalized: Vec<f64> = mags.iter().map(|m| if max > 0.0 { m / max } else { 0.0 }).collect();
    let argmax = normalized
        .iter()
        .enumerate()
        .fold(0, |best, (i, &v)| if v > normalized[best] { i } else { best });
    let wrong: Vec<f64> = normalized
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != correct_index)
        .map(|(_, &v)| v)
        .collect();
    let n = wrong.len().max(1) as f64;
    let wrong_mean = wrong.iter().sum::<f64>() / n;
    let wrong_variance = wrong.iter().map(|v| (v - wrong_mean).powi(2)).sum::<f64>() / n;
    Ok(DetectionSweep {
        normalized,
        correct_index,
        argmax,
        wrong_mean,
        wrong_variance,
    })
}

/// Adds white Gaussian noise of standard deviation `sigma` to the real part.
pub fn add_gaussian_noise(g: &ComplexField, sigma: f64, seed: u64) -> Result<ComplexField> {
    let normal = rand_distr::Normal::new(0.0, sigma)
        .map_err(|e| Error::Range(format!("noise deviation {sigma}: {e}")))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = g.clone();
    for z in out.data_mut() {
        z.re += rng.sample(normal);
    }
    Ok(out)
}
