//! Approximate additivity of the circular-chirp-convolution transform.

use crate::angle::Angle;
use crate::error::{Error, Result};
use crate::field::{nrmse, ComplexField, C64};
use crate::spectral::{centered_dft2, DftSign};
use crate::transforms::dgt_ccc;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AdditivityRow {
    pub n: usize,
    pub alpha1_deg: f64,
    pub alpha2_deg: f64,
    pub nrmse: f64,
}

/// Band-limited interpolation by an integer factor: the centered spectrum is
/// zero-padded and transformed back. Intervals shrink by `factor`.
pub fn fourier_upsample(g: &ComplexField, factor: usize) -> Result<ComplexField> {
    if factor == 0 {
        return Err(Error::Range("upsampling factor must be positive".into()));
    }
    if factor == 1 {
        return Ok(g.clone());
    }
    let (n1, n2) = g.shape();
    let spec = centered_dft2(g, DftSign::Minus).zero_pad(factor * n1, factor * n2)?;
    let out = centered_dft2(&spec, DftSign::Plus).scale(C64::new(1.0 / (n1 * n2) as f64, 0.0));
    out.with_intervals(g.dx() / factor as f64, g.dy() / factor as f64)
}

/// Prepares the `n x n` input of the additivity trend from a base image.
///
/// The growth factor `n / base` goes to zero padding first, up to 4x, and the
/// rest to Fourier upsampling: 2 = pad 2, 4 = pad 4, 8 = up 2 x pad 4.
pub fn additivity_input(base: &ComplexField, n: usize) -> Result<ComplexField> {
    let b = base.n1();
    if base.n2() != b || n % b != 0 || !(n / b).is_power_of_two() {
        return Err(Error::Range(format!(
            "size {n} must be a power-of-two multiple of the square base {b}"
        )));
    }
    let f = n / b;
    let up = f / f.min(4);
    let g = fourier_upsample(base, up)?;
    g.zero_pad(n, n)
}

/// NRMSE between the two-step transform at `a1` then `a2` and the one-step
/// transform at `a1 + a2`.
pub fn ccc_additivity_nrmse(g: &ComplexField, a1: Angle, a2: Angle) -> Result<f64> {
    let direct = dgt_ccc(g, a1 + a2)?;
    let composed = dgt_ccc(&dgt_ccc(g, a1)?, a2)?;
    nrmse(&direct, &composed)
}
