//! Closed-form and continuous references for the accuracy experiments.

use crate::angle::Angle;
use crate::field::{ComplexField, GridOrigin, C64};
use crate::hgf::{hermite_functions_upto, wigner_d_matrix};

/// Sampling grid used to evaluate continuous functions.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SampleGrid {
    pub n1: usize,
    pub n2: usize,
    pub d1: f64,
    pub d2: f64,
    pub origin: GridOrigin,
}

impl SampleGrid {
    pub fn square(n: usize, d: f64, origin: GridOrigin) -> Self {
        Self {
            n1: n,
            n2: n,
            d1: d,
            d2: d,
            origin,
        }
    }

    /// Grid of an existing field, with the given origin convention.
    pub fn of(field: &ComplexField, origin: GridOrigin) -> Self {
        Self {
            n1: field.n1(),
            n2: field.n2(),
            d1: field.dx(),
            d2: field.dy(),
            origin,
        }
    }

    pub fn sample(&self, f: impl Fn(f64, f64) -> C64) -> ComplexField {
        let mut data = Vec::with_capacity(self.n1 * self.n2);
        for m in 0..self.n1 {
            let x = self.origin.index(m, self.n1) * self.d1;
            for n in 0..self.n2 {
                let y = self.origin.index(n, self.n2) * self.d2;
                data.push(f(x, y));
            }
        }
        ComplexField::new(self.n1, self.n2, self.d1, self.d2, data)
            .expect("grid sampling of a finite function")
    }
}

/// `exp(-s (x^2 + y^2) / 2)` on the grid.
pub fn scaled_gaussian(s: f64, grid: &SampleGrid) -> ComplexField {
    grid.sample(|x, y| C64::new((-s * (x * x + y * y) / 2.0).exp(), 0.0))
}

/// Gyrator transform of the scaled Gaussian in closed form.
pub fn gaussian_gyrator_closed_form(s: f64, alpha: Angle, grid: &SampleGrid) -> ComplexField {
    let (sn, cs) = alpha.radians().sin_cos();
    let den = cs * cs + s * s * sn * sn;
    let chirp = (s * s - 1.0) * (2.0 * alpha.radians()).sin() / den / 2.0;
    let rate = s / den / 2.0;
    let amp = 1.0 / den.sqrt();
    grid.sample(|u, v| C64::from_polar(amp * (-rate * (u * u + v * v)).exp(), chirp * u * v))
}

/// Continuous rotated HGF `RHG_{k,l}(x, y)` sampled on the grid.
pub fn sampled_rhgf(k: usize, l: usize, grid: &SampleGrid) -> ComplexField {
    let big_l = k + l;
    let delta = wigner_d_matrix(big_l as u32, std::f64::consts::FRAC_PI_2);
    let table = |n: usize, d: f64| -> Vec<Vec<f64>> {
        (0..n)
            .map(|i| hermite_functions_upto(big_l, grid.origin.index(i, n) * d))
            .collect()
    };
    let tx = table(grid.n1, grid.d1);
    let ty = table(grid.n2, grid.d2);
    let mut data = Vec::with_capacity(grid.n1 * grid.n2);
    for hx in &tx {
        for hy in &ty {
            let v: f64 = (0..=big_l).map(|s| delta[(k, s)] * hx[s] * hy[big_l - s]).sum();
            data.push(C64::new(v, 0.0));
        }
    }
    ComplexField::new(grid.n1, grid.n2, grid.d1, grid.d2, data).expect("finite samples")
}

/// Continuous gyrator transform of [`sampled_rhgf`]: the eigenvalue times the input.
pub fn rhgf_gyrator_reference(k: usize, l: usize, alpha: Angle, grid: &SampleGrid) -> ComplexField {
    let phase = C64::from_polar(1.0, -alpha.radians() * (k as f64 - l as f64));
    sampled_rhgf(k, l, grid).scale(phase)
}
