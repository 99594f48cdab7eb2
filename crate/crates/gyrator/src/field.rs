//! The sampled complex field that every transform consumes and produces.

use crate::error::{Error, Result};
use num_complex::Complex64;

pub type C64 = Complex64;

/// Where sample zero of an axis sits relative to the physical origin.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GridOrigin {
    /// `m_c = m - floor(n/2)`, the storage convention of [`ComplexField`].
    Centered,
    /// `m_c = m - (n-1)/2`, used by the Hermite-Gaussian machinery.
    HalfSample,
}

impl GridOrigin {
    pub fn index(self, i: usize, n: usize) -> f64 {
        match self {
            GridOrigin::Centered => i as f64 - (n / 2) as f64,
            GridOrigin::HalfSample => i as f64 - (n as f64 - 1.0) / 2.0,
        }
    }
}

/// Centered index of stored position `i` on an axis of length `n`.
#[inline]
pub fn centered(i: usize, n: usize) -> isize {
    i as isize - (n / 2) as isize
}

/// Row-major grid of complex samples with physical sampling intervals.
///
/// Element `(m, n)` sits at `(m_c dx, n_c dy)` with `m_c = m - floor(n1/2)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexField {
    n1: usize,
    n2: usize,
    dx: f64,
    dy: f64,
    data: Vec<C64>,
}

impl ComplexField {
    pub fn new(n1: usize, n2: usize, dx: f64, dy: f64, data: Vec<C64>) -> Result<Self> {
        if n1 == 0 || n2 == 0 {
            return Err(Error::Shape(format!("empty grid {n1}x{n2}")));
        }
        if data.len() != n1 * n2 {
            return Err(Error::Shape(format!(
                "data length {} does not match {n1}x{n2}",
                data.len()
            )));
        }
        check_interval(dx)?;
        check_interval(dy)?;
        if let Some(i) = data.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::Numerical(format!("non-finite sample at index {i}")));
        }
        Ok(Self { n1, n2, dx, dy, data })
    }

    pub fn zeros(n1: usize, n2: usize, dx: f64, dy: f64) -> Result<Self> {
        Self::new(n1, n2, dx, dy, vec![C64::new(0.0, 0.0); n1 * n2])
    }

    /// Builds a field from a function of centered indices.
    pub fn from_fn(
        n1: usize,
        n2: usize,
        dx: f64,
        dy: f64,
        mut f: impl FnMut(isize, isize) -> C64,
    ) -> Result<Self> {
        let mut data = Vec::with_capacity(n1 * n2);
        for m in 0..n1 {
            for n in 0..n2 {
                data.push(f(centered(m, n1), centered(n, n2)));
            }
        }
        Self::new(n1, n2, dx, dy, data)
    }

    pub fn from_real(n1: usize, n2: usize, dx: f64, dy: f64, values: &[f64]) -> Result<Self> {
        Self::new(n1, n2, dx, dy, values.iter().map(|&v| C64::new(v, 0.0)).collect())
    }

    /// Internal constructor for results whose finiteness follows from the inputs.
    pub(crate) fn from_parts(n1: usize, n2: usize, dx: f64, dy: f64, data: Vec<C64>) -> Self {
        debug_assert_eq!(data.len(), n1 * n2);
        Self { n1, n2, dx, dy, data }
    }

    pub fn n1(&self) -> usize {
        self.n1
    }
    pub fn n2(&self) -> usize {
        self.n2
    }
    pub fn shape(&self) -> (usize, usize) {
        (self.n1, self.n2)
    }
    pub fn dx(&self) -> f64 {
        self.dx
    }
    pub fn dy(&self) -> f64 {
        self.dy
    }
    pub fn data(&self) -> &[C64] {
        &self.data
    }
    pub fn data_mut(&mut self) -> &mut [C64] {
        &mut self.data
    }
    pub fn into_data(self) -> Vec<C64> {
        self.data
    }

    #[inline]
    pub fn get(&self, m: usize, n: usize) -> C64 {
        self.data[m * self.n2 + n]
    }

    #[inline]
    pub fn set(&mut self, m: usize, n: usize, v: C64) {
        self.data[m * self.n2 + n] = v;
    }

    /// Sample at centered indices, `None` outside the grid.
    pub fn at_centered(&self, mc: isize, nc: isize) -> Option<C64> {
        let m = mc + (self.n1 / 2) as isize;
        let n = nc + (self.n2 / 2) as isize;
        if m < 0 || n < 0 || m as usize >= self.n1 || n as usize >= self.n2 {
            None
        } else {
            Some(self.get(m as usize, n as usize))
        }
    }

    pub fn with_intervals(mut self, dx: f64, dy: f64) -> Result<Self> {
        check_interval(dx)?;
        check_interval(dy)?;
        self.dx = dx;
        self.dy = dy;
        Ok(self)
    }

    pub(crate) fn set_intervals(&mut self, dx: f64, dy: f64) {
        self.dx = dx;
        self.dy = dy;
    }

    pub fn energy(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn scale(mut self, c: C64) -> Self {
        self.data.iter_mut().for_each(|z| *z *= c);
        self
    }

    pub fn map(&self, f: impl Fn(C64) -> C64) -> Self {
        Self::from_parts(
            self.n1,
            self.n2,
            self.dx,
            self.dy,
            self.data.iter().map(|&z| f(z)).collect(),
        )
    }

    pub fn real_part(&self) -> Vec<f64> {
        self.data.iter().map(|z| z.re).collect()
    }

    /// Swaps the two axes, together with their intervals.
    pub fn transpose(&self) -> Self {
        let (n1, n2) = (self.n1, self.n2);
        let mut out = vec![C64::new(0.0, 0.0); n1 * n2];
        for m in 0..n1 {
            for n in 0..n2 {
                out[n * n1 + m] = self.data[m * n2 + n];
            }
        }
        Self::from_parts(n2, n1, self.dy, self.dx, out)
    }

    /// Extracts the centered `b1 x b2` block.
    pub fn central_block(&self, b1: usize, b2: usize) -> Result<Self> {
        if b1 > self.n1 || b2 > self.n2 || b1 == 0 || b2 == 0 {
            return Err(Error::Shape(format!(
                "block {b1}x{b2} does not fit in {}x{}",
                self.n1, self.n2
            )));
        }
        let o1 = self.n1 / 2 - b1 / 2;
        let o2 = self.n2 / 2 - b2 / 2;
        let mut out = Vec::with_capacity(b1 * b2);
        for m in 0..b1 {
            let row = (o1 + m) * self.n2 + o2;
            out.extend_from_slice(&self.data[row..row + b2]);
        }
        Ok(Self::from_parts(b1, b2, self.dx, self.dy, out))
    }

    /// Embeds the field in a larger zero grid so that centered indices are preserved.
    pub fn zero_pad(&self, p1: usize, p2: usize) -> Result<Self> {
        if p1 < self.n1 || p2 < self.n2 {
            return Err(Error::Shape(format!(
                "cannot pad {}x{} to smaller {p1}x{p2}",
                self.n1, self.n2
            )));
        }
        let o1 = p1 / 2 - self.n1 / 2;
        let o2 = p2 / 2 - self.n2 / 2;
        let mut out = vec![C64::new(0.0, 0.0); p1 * p2];
        for m in 0..self.n1 {
            let dst = (o1 + m) * p2 + o2;
            out[dst..dst + self.n2].copy_from_slice(&self.data[m * self.n2..(m + 1) * self.n2]);
        }
        Ok(Self::from_parts(p1, p2, self.dx, self.dy, out))
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

fn check_interval(d: f64) -> Result<()> {
    if d.is_finite() && d > 0.0 {
        Ok(())
    } else {
        Err(Error::Shape(format!("sampling interval must be positive, got {d}")))
    }
}

/// Point reflection through the origin, `out(m_c, n_c) = in(-m_c, -n_c)`.
///
/// On an even axis the index `-n/2` has no mirror partner and maps to itself.
pub fn reflect(g: &ComplexField) -> ComplexField {
    let (n1, n2) = g.shape();
    let mirror = |i: usize, n: usize| {
        let src = 2 * (n / 2);
        if i == 0 && n % 2 == 0 {
            0
        } else {
            src - i
        }
    };
    let mut out = Vec::with_capacity(n1 * n2);
    for m in 0..n1 {
        let sm = mirror(m, n1);
        for n in 0..n2 {
            out.push(g.get(sm, mirror(n, n2)));
        }
    }
    ComplexField::from_parts(n1, n2, g.dx(), g.dy(), out)
}

/// Normalized root-mean-square error of `h` against the reference `g`.
///
/// Returns `f64::INFINITY` when `g` is identically zero and `h` is not.
pub fn nrmse(g: &ComplexField, h: &ComplexField) -> Result<f64> {
    if g.shape() != h.shape() {
        return Err(Error::Shape(format!(
            "nrmse of {:?} against {:?}",
            g.shape(),
            h.shape()
        )));
    }
    let err: f64 = g
        .data()
        .iter()
        .zip(h.data())
        .map(|(a, b)| (a - b).norm_sqr())
        .sum();
    let reference = g.energy();
    if reference == 0.0 {
        return Ok(if err == 0.0 { 0.0 } else { f64::INFINITY });
    }
    Ok((err / reference).sqrt())
}

/// Peak signal-to-noise ratio in dB of the real parts, for a given peak value.
pub fn psnr(reference: &[f64], test: &[f64], peak: f64) -> Result<f64> {
    if reference.len() != test.len() || reference.is_empty() {
        return Err(Error::Shape(format!(
            "psnr over {} and {} samples",
            reference.len(),
            test.len()
        )));
    }
    let mse = reference
        .iter()
        .zip(test)
        .map(|(a, b)| (a - b) * (a - b))
        .sum::<f64>()
        / reference.len() as f64;
    if mse == 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok(10.0 * (peak * peak / mse).log10())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(v: &[f64]) -> ComplexField {
        ComplexField::from_real(1, v.len(), 1.0, 1.0, v).unwrap()
    }

    #[test]
    fn nrmse_hand_values() {
        assert_eq!(nrmse(&line(&[1.0, 0.0]), &line(&[0.0, 0.0])).unwrap(), 1.0);
        let e = nrmse(&line(&[3.0, 4.0]), &line(&[3.0, 0.0])).unwrap();
        assert!((e - 0.8).abs() < 1e-15);
        assert_eq!(nrmse(&line(&[0.0]), &line(&[1.0])).unwrap(), f64::INFINITY);
        assert!(nrmse(&line(&[1.0]), &line(&[1.0, 2.0])).is_err());
    }

    #[test]
    fn reflect_moves_delta() {
        let g = ComplexField::from_fn(5, 5, 1.0, 1.0, |m, n| {
            if (m, n) == (1, 0) { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) }
        })
        .unwrap();
        let r = reflect(&g);
        assert_eq!(r.at_centered(-1, 0), Some(C64::new(1.0, 0.0)));
        assert_eq!(reflect(&r), g);
    }

    #[test]
    fn reflect_even_keeps_unpaired_index() {
        let g = ComplexField::from_real(4, 1, 1.0, 1.0, &[0.0, 1.0, 2.0, 3.0]).unwrap();
        assert_eq!(reflect(&g).real_part(), vec![0.0, 3.0, 2.0, 1.0]);
    }

    #[test]
    fn pad_and_crop_are_inverse() {
        let g = ComplexField::from_fn(3, 4, 0.5, 0.25, |m, n| C64::new(m as f64, n as f64)).unwrap();
        let p = g.zero_pad(7, 9).unwrap();
        assert_eq!(p.at_centered(1, -2), g.at_centered(1, -2));
        assert_eq!(p.central_block(3, 4).unwrap(), g);
    }

    #[test]
    fn rejects_bad_construction() {
        assert!(ComplexField::zeros(0, 3, 1.0, 1.0).is_err());
        assert!(ComplexField::zeros(2, 3, -1.0, 1.0).is_err());
        assert!(ComplexField::new(1, 1, 1.0, 1.0, vec![C64::new(f64::NAN, 0.0)]).is_err());
    }
}
