//! NRMSE of the discrete transforms against continuous references.

use std::f64::consts::PI;

use rayon::prelude::*;

use super::reference::{
    gaussian_gyrator_closed_form, rhgf_gyrator_reference, sampled_rhgf, scaled_gaussian, SampleGrid,
};
use super::MethodKind;
use crate::angle::Angle;
use crate::error::{Error, Result};
use crate::field::{nrmse, ComplexField, GridOrigin};
use crate::transforms::{dgt_auto_with, DgtMethod};

/// Input of an accuracy experiment.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum InputKind {
    /// `exp(-s (x^2 + y^2) / 2)`.
    ScaledGaussian { s: f64 },
    /// Continuous rotated HGF of orders `(k, l)`.
    SampledRhgf { k: usize, l: usize },
}

impl InputKind {
    fn input(&self, grid: &SampleGrid) -> ComplexField {
        match *self {
            InputKind::ScaledGaussian { s } => scaled_gaussian(s, grid),
            InputKind::SampledRhgf { k, l } => sampled_rhgf(k, l, grid),
        }
    }

    fn reference(&self, alpha: Angle, grid: &SampleGrid) -> ComplexField {
        match *self {
            InputKind::ScaledGaussian { s } => gaussian_gyrator_closed_form(s, alpha, grid),
            InputKind::SampledRhgf { k, l } => rhgf_gyrator_reference(k, l, alpha, grid),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AccuracyRow {
    pub alpha_deg: f64,
    pub nrmse: f64,
}

/// One accuracy measurement on an `n x n` grid with interval `sqrt(2pi/n)`.
///
/// DHGF samples at half-sample offsets, the other methods on the centered
/// grid. The reference is evaluated on the output grid reported by the
/// transform.
pub fn accuracy_at(
    method: MethodKind,
    input: InputKind,
    n: usize,
    alpha: Angle,
    tau: f64,
) -> Result<f64> {
    let d = (2.0 * PI / n as f64).sqrt();
    let origin = match method {
        MethodKind::Dhgf => GridOrigin::HalfSample,
        _ => GridOrigin::Centered,
    };
    let grid = SampleGrid::square(n, d, origin);
    let g = input.input(&grid);
    let dgt = match method {
        MethodKind::Direct => DgtMethod::Direct { du: d, dv: d },
        MethodKind::Lcc => DgtMethod::lcc(d, d),
        MethodKind::Dft => DgtMethod::Dft,
        MethodKind::Ccc => DgtMethod::Ccc,
        MethodKind::Dhgf => DgtMethod::Dhgf,
    };
    let out = dgt_auto_with(&g, alpha, &dgt, tau)?;
    let reference = input.reference(alpha, &SampleGrid::of(&out, origin));
    nrmse(&reference, &out)
}

/// NRMSE over a list of angles, evaluated in parallel.
pub fn accuracy_sweep(
    method: MethodKind,
    input: InputKind,
    n: usize,
    alphas: &[Angle],
    tau: f64,
) -> Result<Vec<AccuracyRow>> {
    if n < 2 {
        return Err(Error::Range(format!("sweep size {n} too small")));
    }
    alphas
        .par_iter()
        .map(|&a| {
            Ok(AccuracyRow {
                alpha_deg: a.degrees(),
                nrmse: accuracy_at(method, input, n, a, tau)?,
            })
        })
        .collect()
}
