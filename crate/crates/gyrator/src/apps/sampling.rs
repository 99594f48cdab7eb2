//! Sampling and reconstruction of signals band-limited in a gyrator domain.

use std::f64::consts::PI;

use crate::angle::Angle;
use crate::error::{Error, Result};
use crate::field::{centered, nrmse, ComplexField, C64};
use crate::oracle::fourier_upsample;
use crate::transforms::{dgt_dft, dgt_direct_on, OutputGrid};

fn check_upsample(upsample: usize) -> Result<()> {
    if upsample == 0 {
        return Err(Error::Range("upsampling factor must be at least 1".into()));
    }
    Ok(())
}

/// Reconstructs a gyrator-band-limited signal on a grid `upsample` times finer.
///
/// The samples go through the DFT-based transform at `alpha`, coefficients
/// farther than `mask_radius` samples from the center are cleared, the
/// gyrator domain is zero-padded by `upsample` and transformed back at
/// `-alpha`. The output interval is `dx / upsample`.
pub fn gyrator_lowpass_reconstruct(
    samples: &ComplexField,
    alpha: Angle,
    mask_radius: f64,
    upsample: usize,
) -> Result<ComplexField> {
    check_upsample(upsample)?;
    let mut spec = dgt_dft(samples, alpha)?;
    let (a, b) = spec.shape();
    let rmax = ((a / 2) as f64).hypot((b / 2) as f64);
    if !(mask_radius >= 0.0 && mask_radius <= rmax) {
        return Err(Error::Range(format!(
            "mask radius {mask_radius} outside [0, {rmax:.3}] for a {a}x{b} gyrator domain"
        )));
    }
    for p in 0..a {
        for q in 0..b {
            if (centered(p, a) as f64).hypot(centered(q, b) as f64) > mask_radius {
                spec.set(p, q, C64::new(0.0, 0.0));
            }
        }
    }
    dgt_dft(&spec.zero_pad(upsample * a, upsample * b)?, -alpha)
}

/// Band-limited interpolation of the samples in the Fourier domain.
pub fn fourier_lowpass_reconstruct(samples: &ComplexField, upsample: usize) -> Result<ComplexField> {
    check_upsample(upsample)?;
    fourier_upsample(samples, upsample)
}

/// Setup of the sampling comparison.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SamplingDemoConfig {
    pub n: usize,
    pub dx: f64,
    pub alpha: Angle,
    /// Radius in samples of the disk of gyrator coefficients defining the signal.
    pub disk_radius: f64,
    pub upsample: usize,
}

impl Default for SamplingDemoConfig {
    fn default() -> Self {
        Self {
            n: 100,
            dx: 0.666,
            alpha: Angle::from_degrees(15.0),
            disk_radius: 30.0,
            upsample: 2,
        }
    }
}

/// Spectrum of the demo signal: a uniform disk on the gyrator grid that
/// pairs with `n x n` samples at interval `dx`.
pub fn demo_signal(cfg: &SamplingDemoConfig) -> Result<ComplexField> {
    let s = cfg.alpha.sin().abs();
    if s == 0.0 || cfg.n == 0 || !(cfg.dx > 0.0) {
        return Err(Error::Range(format!("invalid sampling demo setup {cfg:?}")));
    }
    let du = 2.0 * PI * s / (cfg.n as f64 * cfg.dx);
    let r = cfg.disk_radius;
    ComplexField::from_fn(cfg.n, cfg.n, du, du, |p, q| {
        C64::new(if (p as f64).hypot(q as f64) <= r { 1.0 } else { 0.0 }, 0.0)
    })
}

/// Everything produced by [`sampling_demo`].
#[derive(Clone, Debug)]
pub struct SamplingDemo {
    pub spectrum: ComplexField,
    pub samples: ComplexField,
    pub truth: ComplexField,
    pub gyrator: ComplexField,
    pub fourier: ComplexField,
    pub gyrator_nrmse: f64,
    pub fourier_nrmse: f64,
}

/// Samples the demo signal, reconstructs it on the fine grid both ways and
/// scores each reconstruction against the exact signal.
pub fn sampling_demo(cfg: &SamplingDemoConfig) -> Result<SamplingDemo> {
    check_upsample(cfg.upsample)?;
    let spectrum = demo_signal(cfg)?;
    let at = |n: usize, d: f64| -> Result<ComplexField> {
        dgt_direct_on(&spectrum, -cfg.alpha, &OutputGrid::new(n, n, d, d)?)
    };
    let samples = at(cfg.n, cfg.dx)?;
    let fine = cfg.upsample * cfg.n;
    let truth = at(fine, cfg.dx / cfg.upsample as f64)?;
    let gyrator = gyrator_lowpass_reconstruct(&samples, cfg.alpha, cfg.disk_radius + 1.0, cfg.upsample)?;
    let fourier = fourier_lowpass_reconstruct(&samples, cfg.upsample)?;
    Ok(SamplingDemo {
        gyrator_nrmse: nrmse(&truth, &gyrator)?,
        fourier_nrmse: nrmse(&truth, &fourier)?,
        spectrum,
        samples,
        truth,
        gyrator,
        fourier,
    })
}
