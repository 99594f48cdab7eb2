use std::f64::consts::PI;

use super::check_odd_pi;
use crate::angle::Angle;
use crate::error::Result;
use crate::field::{ComplexField, C64};
use crate::spectral::{apply_chirp, centered_dft2, DftSign};

/// Gyrator transform by circular chirp convolution between two chirps.
///
/// Output grid equals the input grid, and `dgt_ccc(dgt_ccc(g, a), -a) = g`.
pub fn dgt_ccc(g: &ComplexField, alpha: Angle) -> Result<ComplexField> {
    check_odd_pi(alpha, "ccc")?;
    let (n1, n2) = g.shape();
    let (dx, dy) = (g.dx(), g.dy());
    let t = (alpha.radians() / 2.0).tan();
    let dxp = 2.0 * PI / (n1 as f64 * dx);
    let dyp = 2.0 * PI / (n2 as f64 * dy);

    let mut g1 = g.clone();
    apply_chirp(&mut g1, 0.0, 0.0, -dx * dy * t);
    let mut f = centered_dft2(&g1, DftSign::Minus);
    apply_chirp(&mut f, 0.0, 0.0, -dxp * dyp * alpha.sin());
    let mut out = centered_dft2(&f, DftSign::Plus);
    apply_chirp(&mut out, 0.0, 0.0, -dx * dy * t);
    let mut out = out.scale(C64::new(1.0 / (n1 * n2) as f64, 0.0));
    out.set_intervals(dx, dy);
    Ok(out)
}
