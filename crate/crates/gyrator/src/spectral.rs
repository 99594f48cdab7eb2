//! Centered 2D DFT, chirp grids and FFT-based linear convolution.

use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use rustfft::{Fft, FftDirection, FftPlanner};

use crate::error::{Error, Result};
use crate::field::{centered, ComplexField, C64};

/// Sign of the exponent in the DFT kernel.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DftSign {
    /// `exp(-j...)`, the forward transform.
    Minus,
    /// `exp(+j...)`, the unnormalized inverse.
    Plus,
}

impl DftSign {
    /// `Minus` for positive `s`, `Plus` otherwise.
    pub fn opposite_of(s: f64) -> Self {
        if s > 0.0 {
            DftSign::Minus
        } else {
            DftSign::Plus
        }
    }

    fn direction(self) -> FftDirection {
        match self {
            DftSign::Minus => FftDirection::Forward,
            DftSign::Plus => FftDirection::Inverse,
        }
    }
}

fn plan(len: usize, dir: FftDirection) -> Arc<dyn Fft<f64>> {
    static PLANNER: OnceLock<Mutex<FftPlanner<f64>>> = OnceLock::new();
    let planner = PLANNER.get_or_init(|| Mutex::new(FftPlanner::new()));
    let mut guard = planner.lock().unwrap_or_else(|e| e.into_inner());
    guard.plan_fft(len, dir)
}

/// Unnormalized in-place 2D FFT of a row-major `n1 x n2` buffer.
pub(crate) fn fft2_inplace(data: &mut [C64], n1: usize, n2: usize, dir: FftDirection) {
    debug_assert_eq!(data.len(), n1 * n2);
    let rows = plan(n2, dir);
    data.par_chunks_mut(n2).for_each(|r| rows.process(r));
    if n1 > 1 {
        let cols = plan(n1, dir);
        let mut t = transpose_buf(data, n1, n2);
        t.par_chunks_mut(n1).for_each(|c| cols.process(c));
        data.copy_from_slice(&transpose_buf(&t, n2, n1));
    }
}

fn transpose_buf(data: &[C64], n1: usize, n2: usize) -> Vec<C64> {
    let mut out = vec![C64::new(0.0, 0.0); data.len()];
    for m in 0..n1 {
        for n in 0..n2 {
            out[n * n1 + m] = data[m * n2 + n];
        }
    }
    out
}

/// Cyclic shift that moves stored index `shift` (per axis) to position 0.
fn roll(data: &[C64], n1: usize, n2: usize, s1: usize, s2: usize) -> Vec<C64> {
    let mut out = Vec::with_capacity(data.len());
    for i in 0..n1 {
        let row = ((i + s1) % n1) * n2;
        for j in 0..n2 {
            out.push(data[row + (j + s2) % n2]);
        }
    }
    out
}

/// Centered 2D DFT with no normalization.
///
/// `out(p_c, q_c) = sum in(m_c, n_c) exp(sign j 2pi (p_c m_c / n1 + q_c n_c / n2))`.
/// Output intervals are the reciprocal grid `2pi/(n dx)`.
pub fn centered_dft2(g: &ComplexField, sign: DftSign) -> ComplexField {
    let (n1, n2) = g.shape();
    let mut buf = roll(g.data(), n1, n2, n1 / 2, n2 / 2);
    fft2_inplace(&mut buf, n1, n2, sign.direction());
    let out = roll(&buf, n1, n2, n1 - n1 / 2, n2 - n2 / 2);
    ComplexField::from_parts(
        n1,
        n2,
        2.0 * std::f64::consts::PI / (n1 as f64 * g.dx()),
        2.0 * std::f64::consts::PI / (n2 as f64 * g.dy()),
        out,
    )
}

/// Brute-force centered DFT, for testing the fast path.
pub fn centered_dft2_naive(g: &ComplexField, sign: DftSign) -> ComplexField {
    let (n1, n2) = g.shape();
    let s = if sign == DftSign::Minus { -1.0 } else { 1.0 };
    let tau = 2.0 * std::f64::consts::PI;
    let mut out = Vec::with_capacity(n1 * n2);
    for p in 0..n1 {
        for q in 0..n2 {
            let (pc, qc) = (centered(p, n1) as f64, centered(q, n2) as f64);
            let mut acc = C64::new(0.0, 0.0);
            for m in 0..n1 {
                for n in 0..n2 {
                    let (mc, nc) = (centered(m, n1) as f64, centered(n, n2) as f64);
                    let ph = s * tau * (pc * mc / n1 as f64 + qc * nc / n2 as f64);
                    acc += g.get(m, n) * C64::from_polar(1.0, ph);
                }
            }
            out.push(acc);
        }
    }
    ComplexField::from_parts(n1, n2, g.dx(), g.dy(), out)
}

/// Unit-modulus grid `exp(j(a m_c^2 + b n_c^2 + c m_c n_c))` with unit intervals.
pub fn chirp_grid(a: f64, b: f64, c: f64, n1: usize, n2: usize) -> Result<ComplexField> {
    check_coefficients(a, b, c)?;
    let mut g = ComplexField::from_parts(n1, n2, 1.0, 1.0, vec![C64::new(1.0, 0.0); n1 * n2]);
    apply_chirp(&mut g, a, b, c);
    Ok(g)
}

fn check_coefficients(a: f64, b: f64, c: f64) -> Result<()> {
    if a.is_finite() && b.is_finite() && c.is_finite() {
        Ok(())
    } else {
        Err(Error::SingularParameter(format!(
            "chirp coefficients ({a}, {b}, {c}) are not finite"
        )))
    }
}

/// Multiplies in place by `exp(j(a m_c^2 + b n_c^2 + c m_c n_c))`.
pub(crate) fn apply_chirp(g: &mut ComplexField, a: f64, b: f64, c: f64) {
    let (n1, n2) = g.shape();
    let data = g.data_mut();
    for m in 0..n1 {
        let mc = centered(m, n1) as f64;
        for n in 0..n2 {
            let nc = centered(n, n2) as f64;
            let ph = a * mc * mc + b * nc * nc + c * mc * nc;
            data[m * n2 + n] *= C64::from_polar(1.0, ph);
        }
    }
}

/// Full 2D linear convolution of `g` with a `(2n1-1) x (2n2-1)` kernel.
///
/// The result is `(3n1-2) x (3n2-2)`, keeps the centered index convention, and
/// inherits the intervals of `g`. Use [`ComplexField::central_block`] with the
/// input dimensions for the truncation-free region.
pub fn linear_convolve2(g: &ComplexField, kernel: &ComplexField) -> Result<ComplexField> {
    let (n1, n2) = g.shape();
    let (k1, k2) = kernel.shape();
    if k1 != 2 * n1 - 1 || k2 != 2 * n2 - 1 {
        return Err(Error::Shape(format!(
            "kernel {k1}x{k2} must be {}x{} for a {n1}x{n2} input",
            2 * n1 - 1,
            2 * n2 - 1
        )));
    }
    let full = convolve_full(g.data(), n1, n2, kernel.data(), k1, k2);
    Ok(ComplexField::from_parts(
        n1 + k1 - 1,
        n2 + k2 - 1,
        g.dx(),
        g.dy(),
        full,
    ))
}

struct Padded {
    p1: usize,
    p2: usize,
}

/// Smallest `n >= len` with no prime factor above 5.
fn smooth_size(len: usize) -> usize {
    (len.max(1)..)
        .find(|&n| {
            let mut m = n;
            for p in [2, 3, 5] {
                while m % p == 0 {
                    m /= p;
                }
            }
            m == 1
        })
        .expect("5-smooth numbers are unbounded")
}

impl Padded {
    fn new(o1: usize, o2: usize) -> Self {
        Self {
            p1: o1.next_power_of_two(),
            p2: o2.next_power_of_two(),
        }
    }

    fn smooth(o1: usize, o2: usize) -> Self {
        Self {
            p1: smooth_size(o1),
            p2: smooth_size(o2),
        }
    }

    fn embed(&self, src: &[C64], s1: usize, s2: usize) -> Vec<C64> {
        let mut buf = vec![C64::new(0.0, 0.0); self.p1 * self.p2];
        for i in 0..s1 {
            buf[i * self.p2..i * self.p2 + s2].copy_from_slice(&src[i * s2..(i + 1) * s2]);
        }
        buf
    }

    fn spectrum(&self, src: &[C64], s1: usize, s2: usize) -> Vec<C64> {
        let mut buf = self.embed(src, s1, s2);
        fft2_inplace(&mut buf, self.p1, self.p2, FftDirection::Forward);
        buf
    }

    fn extract(&self, mut buf: Vec<C64>, o1: usize, o2: usize) -> Vec<C64> {
        fft2_inplace(&mut buf, self.p1, self.p2, FftDirection::Inverse);
        let norm = 1.0 / (self.p1 * self.p2) as f64;
        let mut out = Vec::with_capacity(o1 * o2);
        for i in 0..o1 {
            out.extend(buf[i * self.p2..i * self.p2 + o2].iter().map(|z| z * norm));
        }
        out
    }
}

fn convolve_full(a: &[C64], a1: usize, a2: usize, b: &[C64], b1: usize, b2: usize) -> Vec<C64> {
    let (o1, o2) = (a1 + b1 - 1, a2 + b2 - 1);
    let pad = Padded::smooth(o1, o2);
    let mut fa = pad.spectrum(a, a1, a2);
    let fb = pad.spectrum(b, b1, b2);
    fa.iter_mut().zip(&fb).for_each(|(x, y)| *x *= y);
    pad.extract(fa, o1, o2)
}

/// Recovers `g` (`n1 x n2`) from its full linear convolution with `kernel`.
///
/// Fails with a conditioning error when the padded kernel spectrum has a
/// near-zero bin relative to its peak.
pub fn linear_deconvolve2(
    full: &ComplexField,
    kernel: &ComplexField,
    n1: usize,
    n2: usize,
) -> Result<ComplexField> {
    let (k1, k2) = kernel.shape();
    let (o1, o2) = full.shape();
    if k1 != 2 * n1 - 1 || k2 != 2 * n2 - 1 || o1 != 3 * n1 - 2 || o2 != 3 * n2 - 2 {
        return Err(Error::Shape(format!(
            "deconvolution of {o1}x{o2} by {k1}x{k2} into {n1}x{n2}"
        )));
    }
    let pad = Padded::new(o1, o2);
    let mut fy = pad.spectrum(full.data(), o1, o2);
    let fk = pad.spectrum(kernel.data(), k1, k2);
    let peak = fk.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let floor = fk.iter().map(|z| z.norm()).fold(f64::INFINITY, f64::min);
    if !(floor > 1e-12 * peak) {
        return Err(Error::Conditioning(format!(
            "kernel spectrum ratio {:e} below 1e-12",
            floor / peak
        )));
    }
    fy.iter_mut().zip(&fk).for_each(|(y, k)| *y /= k);
    let out = pad.extract(fy, n1, n2);
    Ok(ComplexField::from_parts(n1, n2, full.dx(), full.dy(), out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn delta(n1: usize, n2: usize) -> ComplexField {
        ComplexField::from_fn(n1, n2, 1.0, 1.0, |m, n| {
            C64::new(if m == 0 && n == 0 { 1.0 } else { 0.0 }, 0.0)
        })
        .unwrap()
    }

    #[test]
    fn ones_to_delta_and_back() {
        let ones = ComplexField::from_fn(5, 3, 1.0, 1.0, |_, _| C64::new(1.0, 0.0)).unwrap();
        let f = centered_dft2(&ones, DftSign::Minus);
        assert!((f.at_centered(0, 0).unwrap() - 15.0).norm() < 1e-12);
        assert!(f.energy() - 225.0 < 1e-9);
        let d = centered_dft2(&delta(4, 6), DftSign::Plus);
        assert!(d.data().iter().all(|z| (z - 1.0).norm() < 1e-14));
    }

    #[test]
    fn chirp_examples() {
        let g = chirp_grid(std::f64::consts::PI, 0.0, 0.0, 3, 1).unwrap();
        let re: Vec<f64> = g.data().iter().map(|z| z.re).collect();
        assert!((re[0] + 1.0).abs() < 1e-15 && (re[1] - 1.0).abs() < 1e-15 && (re[2] + 1.0).abs() < 1e-15);
        assert!(chirp_grid(f64::INFINITY, 0.0, 0.0, 2, 2).is_err());
    }

    #[test]
    fn delta_kernel_keeps_input() {
        let g = ComplexField::from_fn(3, 4, 1.0, 1.0, |m, n| C64::new(m as f64, n as f64 * 0.5)).unwrap();
        let full = linear_convolve2(&g, &delta(5, 7)).unwrap();
        assert_eq!(full.shape(), (7, 10));
        let c = full.central_block(3, 4).unwrap();
        for (a, b) in c.data().iter().zip(g.data()) {
            assert!((a - b).norm() < 1e-12);
        }
        let back = linear_deconvolve2(&full, &delta(5, 7), 3, 4).unwrap();
        for (a, b) in back.data().iter().zip(g.data()) {
            assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn scalar_convolution() {
        let g = ComplexField::new(1, 1, 1.0, 1.0, vec![C64::new(2.0, 1.0)]).unwrap();
        let k = ComplexField::new(1, 1, 1.0, 1.0, vec![C64::new(0.0, 3.0)]).unwrap();
        let y = linear_convolve2(&g, &k).unwrap();
        assert!((y.get(0, 0) - C64::new(-3.0, 6.0)).norm() < 1e-14);
    }

    #[test]
    fn wrong_kernel_shape() {
        assert!(linear_convolve2(&delta(3, 3), &delta(4, 5)).is_err());
    }
}
