//! Gyrator transform and separable fractional Fourier transform in the HGF basis.

use nalgebra::DMatrix;
use rayon::prelude::*;

use super::basis::HgfBasis;
use super::shells::{half_pi_tables, rhgf_coefficients, shell_range, WignerShellSet};
use crate::angle::Angle;
use crate::error::{Error, Result};
use crate::field::{ComplexField, C64};

fn check_square(g: &ComplexField, basis: &HgfBasis) -> Result<usize> {
    let n = basis.n();
    if g.shape() != (n, n) {
        return Err(Error::Shape(format!(
            "input {:?} does not match the {n}x{n} basis; zero-pad explicitly",
            g.shape()
        )));
    }
    Ok(n)
}

fn split(g: &ComplexField) -> (DMatrix<f64>, DMatrix<f64>) {
    let n = g.n1();
    let m = g.n2();
    (
        DMatrix::from_fn(n, m, |i, j| g.get(i, j).re),
        DMatrix::from_fn(n, m, |i, j| g.get(i, j).im),
    )
}

fn join(re: &DMatrix<f64>, im: &DMatrix<f64>, d: f64) -> ComplexField {
    let (n, m) = re.shape();
    let data = (0..n)
        .flat_map(|i| (0..m).map(move |j| C64::new(re[(i, j)], im[(i, j)])))
        .collect();
    ComplexField::from_parts(n, m, d, d, data)
}

/// `H^T g H` for a complex field.
fn analyze(g: &ComplexField, h: &DMatrix<f64>) -> (DMatrix<f64>, DMatrix<f64>) {
    let (re, im) = split(g);
    let ht = h.transpose();
    (&ht * re * h, &ht * im * h)
}

/// `H c H^T` back to a field on the basis grid.
fn synthesize(re: &DMatrix<f64>, im: &DMatrix<f64>, basis: &HgfBasis) -> ComplexField {
    let h = basis.matrix();
    let ht = h.transpose();
    join(&(h * re * &ht), &(h * im * &ht), basis.interval())
}

/// Reference transform by explicit expansion over all `n^2` discrete RHGFs.
///
/// Costs `O(n^4)`; intended as an oracle for [`dgt_dhgf_fast`].
pub fn dgt_dhgf_direct(g: &ComplexField, alpha: Angle, basis: &HgfBasis) -> Result<ComplexField> {
    let n = check_square(g, basis)?;
    let h = basis.matrix();
    // Row (k, l) of r holds rhgf(k, l) flattened row-major.
    let mut r = DMatrix::<f64>::zeros(n * n, n * n);
    for k in 0..n {
        for l in 0..n {
            let (first, coeffs) = rhgf_coefficients(n, k, l);
            let row = k * n + l;
            for (j, &c) in coeffs.iter().enumerate() {
                let s = first + j;
                let t = k + l - s;
                for m in 0..n {
                    for q in 0..n {
                        r[(row, m * n + q)] += c * h[(m, s)] * h[(q, t)];
                    }
                }
            }
        }
    }
    let gv = DMatrix::from_fn(n * n, 1, |i, _| g.data()[i]);
    let rc = r.map(|v| C64::new(v, 0.0));
    let mut coef = &rc * gv;
    for k in 0..n {
        for l in 0..n {
            coef[(k * n + l, 0)] *= C64::from_polar(1.0, -alpha.radians() * (k as f64 - l as f64));
        }
    }
    let out = rc.transpose() * coef;
    let d = basis.interval();
    Ok(ComplexField::from_parts(n, n, d, d, out.iter().copied().collect()))
}

/// Fast transform: `H^T g H`, per-shell mixing, then `H (.) H^T`.
pub fn dgt_dhgf_fast(
    g: &ComplexField,
    alpha: Angle,
    basis: &HgfBasis,
    shells: &WignerShellSet,
) -> Result<ComplexField> {
    let n = check_square(g, basis)?;
    if shells.n() != n || shells.alpha() != alpha {
        return Err(Error::Config(format!(
            "shell set for n={} at {} used with n={n} at {alpha}",
            shells.n(),
            shells.alpha()
        )));
    }
    Ok(mix_shells(g, basis, |l, v| (shells.matrix(l) * v).iter().copied().collect()))
}

/// `H^T g H`, `mix(l, shell vector)` on every shell, then `H (.) H^T`.
fn mix_shells(
    g: &ComplexField,
    basis: &HgfBasis,
    mix: impl Fn(usize, DMatrix<C64>) -> Vec<C64> + Sync,
) -> ComplexField {
    let n = basis.n();
    let (re, im) = analyze(g, basis.matrix());
    let mixed: Vec<(usize, Vec<C64>)> = (0..2 * n - 1)
        .into_par_iter()
        .map(|l| {
            let (first, size) = shell_range(n, l);
            let v = DMatrix::from_fn(size, 1, |i, _| {
                let k = first + i;
                C64::new(re[(k, l - k)], im[(k, l - k)])
            });
            (l, mix(l, v))
        })
        .collect();
    let mut out_re = DMatrix::<f64>::zeros(n, n);
    let mut out_im = DMatrix::<f64>::zeros(n, n);
    for (l, w) in mixed {
        let (first, _) = shell_range(n, l);
        for (i, z) in w.into_iter().enumerate() {
            let k = first + i;
            out_re[(k, l - k)] = z.re;
            out_im[(k, l - k)] = z.im;
        }
    }
    synthesize(&out_re, &out_im, basis)
}

/// Same result as [`dgt_dhgf_fast`] without forming the mixing matrices: each
/// shell vector goes through `d(pi/2)`, a diagonal phase and `d(pi/2)^T`.
pub fn dgt_dhgf_factored(g: &ComplexField, alpha: Angle, basis: &HgfBasis) -> Result<ComplexField> {
    let n = check_square(g, basis)?;
    let tables = half_pi_tables(n);
    let a = alpha.radians();
    Ok(mix_shells(g, basis, |_, v| {
        let size = v.nrows();
        let delta = &tables[size - 1];
        let (re, im) = (delta * v.map(|z| z.re), delta * v.map(|z| z.im));
        let j2 = (size - 1) as f64;
        let phased = DMatrix::from_fn(size, 1, |i, _| {
            C64::new(re[(i, 0)], im[(i, 0)]) * C64::from_polar(1.0, a * (j2 - 2.0 * i as f64))
        });
        let dt = delta.transpose();
        let (pr, pi) = (&dt * phased.map(|z| z.re), &dt * phased.map(|z| z.im));
        (0..size).map(|i| C64::new(pr[(i, 0)], pi[(i, 0)])).collect()
    }))
}

/// Factored transform with the shared basis for the input size.
pub fn dgt_dhgf_cached(g: &ComplexField, alpha: Angle) -> Result<ComplexField> {
    if g.n1() != g.n2() {
        return Err(Error::Shape(format!(
            "DHGF needs a square input, got {:?}; zero-pad explicitly",
            g.shape()
        )));
    }
    dgt_dhgf_factored(g, alpha, &*HgfBasis::cached(g.n1())?)
}

/// Separable 2D discrete fractional Fourier transform with orders `ax` along
/// the first axis and `ay` along the second.
pub fn dfrft2_separable(g: &ComplexField, ax: Angle, ay: Angle, basis: &HgfBasis) -> Result<ComplexField> {
    let n = check_square(g, basis)?;
    let (re, im) = analyze(g, basis.matrix());
    let mut out_re = DMatrix::<f64>::zeros(n, n);
    let mut out_im = DMatrix::<f64>::zeros(n, n);
    for k in 0..n {
        for l in 0..n {
            let z = C64::new(re[(k, l)], im[(k, l)])
                * C64::from_polar(1.0, -(k as f64 * ax.radians() + l as f64 * ay.radians()));
            out_re[(k, l)] = z.re;
            out_im[(k, l)] = z.im;
        }
    }
    Ok(synthesize(&out_re, &out_im, basis))
}
