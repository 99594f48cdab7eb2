//! Deterministic synthetic images for experiments and demos.

use crate::error::Result;
use crate::field::ComplexField;

/// Grayscale test scene in `[0, 255]`: a gradient with a disk, an ellipse, a
/// bright rectangle, a diagonal grating and a smooth bump. Row index is `y`.
pub fn test_image(n: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        let y = (i as f64 + 0.5) / n as f64;
        for j in 0..n {
            let x = (j as f64 + 0.5) / n as f64;
            let mut v = 90.0 + 60.0 * y;
            if (x - 0.38).powi(2) + (y - 0.42).powi(2) < 0.22f64.powi(2) {
                v = 200.0 - 40.0 * (x - 0.38);
            }
            if ((x - 0.7) / 0.12).powi(2) + ((y - 0.65) / 0.2).powi(2) < 1.0 {
                v = 40.0;
            }
            if (0.15..0.35).contains(&x) && (0.7..0.9).contains(&y) {
                v = 230.0;
            }
            if (0.6..0.9).contains(&x) && (0.1..0.35).contains(&y) {
                v = 128.0 + 80.0 * (2.0 * std::f64::consts::PI * 14.0 * (x + y)).sin();
            }
            v += 50.0 * (-((x - 0.5).powi(2) + (y - 0.5).powi(2)) / 0.02).exp();
            out.push(v.clamp(0.0, 255.0));
        }
    }
    out
}

/// [`test_image`] as a field with equal intervals `d`.
pub fn test_field(n: usize, d: f64) -> Result<ComplexField> {
    ComplexField::from_real(n, n, d, d, &test_image(n))
}

/// Binary `0/255` logo of side `n`. `variant` 0 draws a ring with a bar,
/// any other value a block letter "G" with a dot.
pub fn logo(n: usize, variant: u32) -> Vec<f64> {
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        let y = (i as f64 + 0.5) / n as f64 - 0.5;
        for j in 0..n {
            let x = (j as f64 + 0.5) / n as f64 - 0.5;
            let r = (x * x + y * y).sqrt();
            let on = if variant == 0 {
                (0.28..0.36).contains(&r) || (x.abs() < 0.05 && y.abs() < 0.3)
            } else {
                let ring = (0.25..0.35).contains(&r) && !(x > 0.05 && y < 0.0 && y > -0.3);
                let bar = (0.0..0.3).contains(&x) && (-0.05..0.05).contains(&y);
                let dot = (x + 0.38).powi(2) + (y - 0.38).powi(2) < 0.006;
                ring || bar || dot
            };
            out.push(if on { 255.0 } else { 0.0 });
        }
    }
    out
}
