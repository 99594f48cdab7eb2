//! Conversion of Hermite-Gaussian modes by the gyrator transform.

use std::f64::consts::PI;

use crate::angle::Angle;
use crate::error::{Error, Result};
use crate::field::{ComplexField, GridOrigin, C64};
use crate::hgf::hermite_functions_upto;
use crate::transforms::{dgt_auto, DgtMethod};

/// Sampled mode `HG_k(x) HG_l(y)` on an `n x n` grid with interval `sqrt(2pi/n)`.
/// `x` runs along the first axis.
pub fn hg_mode(k: usize, l: usize, n: usize, origin: GridOrigin) -> Result<ComplexField> {
    if n == 0 {
        return Err(Error::Range("mode grid must be non-empty".into()));
    }
    let d = (2.0 * PI / n as f64).sqrt();
    let axis = |order: usize| -> Vec<f64> {
        (0..n)
            .map(|i| hermite_functions_upto(order, origin.index(i, n) * d)[order])
            .collect()
    };
    let (hx, hy) = (axis(k), axis(l));
    let data = hx
        .iter()
        .flat_map(|a| hy.iter().map(move |b| C64::new(a * b, 0.0)))
        .collect();
    ComplexField::new(n, n, d, d, data)
}

/// Grid origin used for `method`: half-sample offsets for DHGF.
pub fn mode_origin(method: &DgtMethod) -> GridOrigin {
    match method {
        DgtMethod::Dhgf => GridOrigin::HalfSample,
        _ => GridOrigin::Centered,
    }
}

/// Gyrator transform of the sampled mode `HG_{k,l}`. At 45° and 135° the
/// result is a Laguerre-Gaussian mode.
pub fn mode_convert(k: usize, l: usize, alpha: Angle, n: usize, method: &DgtMethod) -> Result<ComplexField> {
    dgt_auto(&hg_mode(k, l, n, mode_origin(method))?, alpha, method)
}

/// Relative standard deviation over `bins` angular sectors of the mean
/// magnitude inside the inscribed disk around the grid origin. The
/// magnitude is interpolated bilinearly on a polar grid so that sectors see
/// equal areas. Zero for a circularly symmetric field.
pub fn angular_rsd(g: &ComplexField, bins: usize, origin: GridOrigin) -> Result<f64> {
    if bins < 2 {
        return Err(Error::Range("need at least two angular bins".into()));
    }
    let (n1, n2) = g.shape();
    if n1.min(n2) < 4 {
        return Err(Error::Range(format!("{n1}x{n2} grid too small for angular statistics")));
    }
    let (c1, c2) = (-origin.index(0, n1), -origin.index(0, n2));
    let rmax = ((n1.min(n2) - 1) / 2) as f64 - 1.0;
    let mag = |x: f64, y: f64| -> f64 {
        let (m, n) = (x + c1, y + c2);
        let (m0, n0) = (m.floor() as usize, n.floor() as usize);
        let (fm, fn_) = (m - m0 as f64, n - n0 as f64);
        let at = |a: usize, b: usize| g.get(a, b).norm();
        (1.0 - fm) * ((1.0 - fn_) * at(m0, n0) + fn_ * at(m0, n0 + 1))
            + fm * ((1.0 - fn_) * at(m0 + 1, n0) + fn_ * at(m0 + 1, n0 + 1))
    };
    const SUB: usize = 16;
    let rings = (2.0 * rmax) as usize;
    let means: Vec<f64> = (0..bins)
        .map(|b| {
            let mut acc = 0.0;
            for t in 0..SUB {
                let th = 2.0 * PI * (b as f64 + (t as f64 + 0.5) / SUB as f64) / bins as f64;
                let (s, c) = th.sin_cos();
                for i in 0..rings {
                    let r = (i as f64 + 0.5) * 0.5;
                    acc += r * mag(r * c, r * s);
                }
            }
            acc
        })
        .collect();
    let mean = means.iter().sum::<f64>() / bins as f64;
    if mean == 0.0 {
        return Err(Error::Range("field is zero inside the disk".into()));
    }
    let var = means.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / bins as f64;
    Ok(var.sqrt() / mean)
}
