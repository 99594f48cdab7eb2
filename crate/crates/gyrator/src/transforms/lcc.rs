use std::f64::consts::PI;

use super::check_kpi;
use crate::angle::Angle;
use crate::error::{Error, Result};
use crate::field::{ComplexField, C64};
use crate::spectral::{apply_chirp, chirp_grid, linear_convolve2, linear_deconvolve2};

/// Input sampling grid needed to undo a linear-chirp-convolution transform.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InputGrid {
    pub n1: usize,
    pub n2: usize,
    pub dx: f64,
    pub dy: f64,
}

/// Full `(3n2-2) x (3n1-2)` output of the linear-chirp-convolution DGT.
#[derive(Clone, Debug)]
pub struct LccOutput {
    full: ComplexField,
    input: InputGrid,
}

impl LccOutput {
    pub fn full(&self) -> &ComplexField {
        &self.full
    }

    pub fn into_full(self) -> ComplexField {
        self.full
    }

    pub fn input_grid(&self) -> InputGrid {
        self.input
    }

    /// The `n2 x n1` block free of truncation error.
    pub fn central(&self) -> ComplexField {
        self.full
            .central_block(self.input.n2, self.input.n1)
            .expect("full output always contains the central block")
    }

    pub fn invert(&self, alpha: Angle) -> Result<ComplexField> {
        dgt_lcc_inverse(&self.full, alpha, self.input)
    }
}

struct Coefficients {
    input_a: f64,
    input_b: f64,
    input_c: f64,
    kernel: ComplexField,
    output_a: f64,
    output_b: f64,
    output_c: f64,
    scale: f64,
}

fn coefficients(alpha: Angle, input: InputGrid, du: f64, dv: f64) -> Result<Coefficients> {
    let (s, c) = alpha.radians().sin_cos();
    let (csc, cot) = (1.0 / s, c / s);
    let (dx, dy) = (input.dx, input.dy);
    Ok(Coefficients {
        input_a: -dv * dx * csc / 2.0,
        input_b: -du * dy * csc / 2.0,
        input_c: dx * dy * cot,
        kernel: chirp_grid(
            dv * dx * csc / 2.0,
            du * dy * csc / 2.0,
            0.0,
            2 * input.n1 - 1,
            2 * input.n2 - 1,
        )?,
        output_a: -dv * dx * csc / 2.0,
        output_b: -du * dy * csc / 2.0,
        output_c: du * dv * cot,
        scale: csc.abs() * dx * dy / (2.0 * PI),
    })
}

/// Gyrator transform by chirp multiplication, linear chirp convolution and a second chirp.
///
/// Intervals are unconstrained. The full output is kept so the transform can be
/// inverted; its central block equals direct summation.
pub fn dgt_lcc(g: &ComplexField, alpha: Angle, du: f64, dv: f64) -> Result<LccOutput> {
    check_kpi(alpha, "lcc")?;
    check_positive(du, dv)?;
    let input = InputGrid {
        n1: g.n1(),
        n2: g.n2(),
        dx: g.dx(),
        dy: g.dy(),
    };
    let k = coefficients(alpha, input, du, dv)?;
    let mut g1 = g.clone();
    apply_chirp(&mut g1, k.input_a, k.input_b, k.input_c);
    let mut full = linear_convolve2(&g1, &k.kernel)?;
    apply_chirp(&mut full, k.output_a, k.output_b, k.output_c);
    let mut full = full.scale(C64::new(k.scale, 0.0)).transpose();
    full.set_intervals(du, dv);
    Ok(LccOutput { full, input })
}

/// Step-wise inverse of [`dgt_lcc`]; needs the full output.
pub fn dgt_lcc_inverse(full: &ComplexField, alpha: Angle, input: InputGrid) -> Result<ComplexField> {
    check_kpi(alpha, "lcc")?;
    let (f1, f2) = full.shape();
    if f1 + 2 != 3 * input.n2 || f2 + 2 != 3 * input.n1 {
        return Err(Error::InsufficientData(format!(
            "inverse needs the full {}x{} output, got {f1}x{f2}",
            3 * input.n2 - 2,
            3 * input.n1 - 2
        )));
    }
    let (du, dv) = (full.dx(), full.dy());
    let k = coefficients(alpha, input, du, dv)?;
    let mut g1 = full.transpose();
    apply_chirp(&mut g1, -k.output_a, -k.output_b, -k.output_c);
    let g1 = g1.scale(C64::new(1.0 / k.scale, 0.0));
    let mut g = linear_deconvolve2(&g1, &k.kernel, input.n1, input.n2)?;
    apply_chirp(&mut g, -k.input_a, -k.input_b, -k.input_c);
    g.set_intervals(input.dx, input.dy);
    Ok(g)
}

fn check_positive(du: f64, dv: f64) -> Result<()> {
    if du.is_finite() && dv.is_finite() && du > 0.0 && dv > 0.0 {
        Ok(())
    } else {
        Err(Error::Range(format!("output intervals must be positive, got ({du}, {dv})")))
    }
}
