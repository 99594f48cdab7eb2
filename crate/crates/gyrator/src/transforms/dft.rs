use std::f64::consts::PI;

use super::check_kpi;
use crate::angle::Angle;
use crate::error::Result;
use crate::field::{ComplexField, C64};
use crate::spectral::{apply_chirp, centered_dft2, DftSign};

/// Output intervals forced on the DFT-based transform: `(du, dv)`.
pub fn dft_output_intervals(g: &ComplexField, alpha: Angle) -> (f64, f64) {
    let s = alpha.sin().abs();
    (
        2.0 * PI * s / (g.n2() as f64 * g.dy()),
        2.0 * PI * s / (g.n1() as f64 * g.dx()),
    )
}

/// Gyrator transform by chirp multiplication, one centered DFT and a second chirp.
///
/// Output shape is `(n2, n1)` with the intervals of [`dft_output_intervals`].
pub fn dgt_dft(g: &ComplexField, alpha: Angle) -> Result<ComplexField> {
    check_kpi(alpha, "dft")?;
    let (s, c) = alpha.radians().sin_cos();
    let (csc, cot) = (1.0 / s, c / s);
    let (du, dv) = dft_output_intervals(g, alpha);
    let mut g1 = g.clone();
    apply_chirp(&mut g1, 0.0, 0.0, g.dx() * g.dy() * cot);
    let f = centered_dft2(&g1, DftSign::opposite_of(s));
    let scale = csc.abs() * g.dx() * g.dy() / (2.0 * PI);
    let mut out = f.transpose().scale(C64::new(scale, 0.0));
    apply_chirp(&mut out, 0.0, 0.0, du * dv * cot);
    out.set_intervals(du, dv);
    Ok(out)
}
