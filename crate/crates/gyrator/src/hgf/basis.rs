//! Discrete Hermite-Gaussian basis from a DFT-commuting matrix.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, Mutex, OnceLock};

use nalgebra::{DMatrix, DVector, SymmetricEigen};

use super::hermite::sampled_hgf;
use crate::error::{Error, Result};

/// Orthonormal `n x n` matrix whose column `k` is the order-`k` discrete HGF.
///
/// Samples sit at `(m - (n-1)/2) sqrt(2pi/n)`.
#[derive(Clone, Debug)]
pub struct HgfBasis {
    n: usize,
    h: DMatrix<f64>,
}

impl HgfBasis {
    /// Wraps an existing matrix, checking shape and orthonormality at `1e-10`.
    pub fn from_matrix(h: DMatrix<f64>) -> Result<Self> {
        let n = h.nrows();
        if n < 2 || h.ncols() != n {
            return Err(Error::Shape(format!("basis must be square, got {}x{}", h.nrows(), h.ncols())));
        }
        let b = Self { n, h };
        let err = b.orthonormality_error();
        if !(err < 1e-10) {
            return Err(Error::Numerical(format!("basis Gram error {err:e}")));
        }
        Ok(b)
    }

    /// Shared instance per size, computed once.
    pub fn cached(n: usize) -> Result<Arc<HgfBasis>> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<HgfBasis>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(b) = cache.lock().unwrap_or_else(|e| e.into_inner()).get(&n) {
            return Ok(b.clone());
        }
        let b = Arc::new(discrete_hgf_basis(n)?);
        cache
            .lock()
            .unwrap_or_else(|e| e.into_inner())
            .entry(n)
            .or_insert_with(|| b.clone());
        Ok(b)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.h
    }

    pub fn column(&self, k: usize) -> Vec<f64> {
        self.h.column(k).iter().copied().collect()
    }

    /// Sampling interval `sqrt(2pi/n)` implied by the basis.
    pub fn interval(&self) -> f64 {
        (2.0 * PI / self.n as f64).sqrt()
    }

    /// Half-sample center `(n-1)/2`.
    pub fn center(&self) -> f64 {
        (self.n as f64 - 1.0) / 2.0
    }

    /// Largest entry of `H^T H - I`.
    pub fn orthonormality_error(&self) -> f64 {
        let g = self.h.transpose() * &self.h;
        let mut e: f64 = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                let want = if i == j { 1.0 } else { 0.0 };
                e = e.max((g[(i, j)] - want).abs());
            }
        }
        e
    }
}

/// Number of sign changes, ignoring entries below `1e-9` of the peak.
pub fn sign_changes(v: &[f64]) -> usize {
    let peak = v.iter().fold(0.0f64, |a, x| a.max(x.abs()));
    let mut last = 0.0f64;
    let mut count = 0;
    for &x in v {
        if x.abs() <= 1e-9 * peak {
            continue;
        }
        if last != 0.0 && x.signum() != last {
            count += 1;
        }
        last = x.signum();
    }
    count
}

/// Symmetric matrix `diag(c^2) + F diag(c^2) F^H` with `c = m - (n-1)/2` and
/// `F` the half-sample centered unitary DFT. It commutes with `F`.
fn commuting_matrix(n: usize) -> DMatrix<f64> {
    let c: Vec<f64> = (0..n).map(|m| m as f64 - (n as f64 - 1.0) / 2.0).collect();
    let nf = n as f64;
    // Entry depends only on the offset a - b.
    let kernel: Vec<f64> = (0..2 * n - 1)
        .map(|i| {
            let d = i as f64 - (nf - 1.0);
            c.iter().map(|&ck| ck * ck * (2.0 * PI * d * ck / nf).cos()).sum::<f64>() / nf
        })
        .collect();
    DMatrix::from_fn(n, n, |a, b| {
        let off = kernel[a + n - 1 - b];
        if a == b {
            off + c[a] * c[a]
        } else {
            off
        }
    })
}

/// Orthonormal basis of the even (`sign = 1`) or odd (`sign = -1`) vectors.
fn parity_basis(n: usize, sign: f64) -> DMatrix<f64> {
    let half = n / 2;
    let extra = usize::from(sign > 0.0 && n % 2 == 1);
    let mut e = DMatrix::zeros(n, half + extra);
    let r = std::f64::consts::FRAC_1_SQRT_2;
    for i in 0..half {
        e[(i, i)] = r;
        e[(n - 1 - i, i)] = sign * r;
    }
    if extra == 1 {
        e[(half, half)] = 1.0;
    }
    e
}

/// Real part and `j` times the imaginary part of the centered unitary DFT,
/// restricted to `basis`.
fn restricted_dft(n: usize, basis: &DMatrix<f64>, use_sine: bool) -> DMatrix<f64> {
    let c: Vec<f64> = (0..n).map(|m| m as f64 - (n as f64 - 1.0) / 2.0).collect();
    let s = 1.0 / (n as f64).sqrt();
    let f = DMatrix::from_fn(n, n, |a, b| {
        let ph = 2.0 * PI * c[a] * c[b] / n as f64;
        if use_sine {
            s * ph.sin()
        } else {
            s * ph.cos()
        }
    });
    basis.transpose() * f * basis
}

/// Eigenvectors of `m` (symmetric) grouped by eigenvalue sign.
fn split_by_sign(m: &DMatrix<f64>) -> (DMatrix<f64>, DMatrix<f64>) {
    let eig = SymmetricEigen::new(m.clone());
    let pos: Vec<usize> = (0..m.nrows()).filter(|&i| eig.eigenvalues[i] > 0.0).collect();
    let neg: Vec<usize> = (0..m.nrows()).filter(|&i| eig.eigenvalues[i] <= 0.0).collect();
    (
        eig.eigenvectors.select_columns(pos.iter()),
        eig.eigenvectors.select_columns(neg.iter()),
    )
}

/// Discrete HGFs of size `n`: eigenvectors of a DFT-commuting matrix, resolved
/// inside each DFT eigenspace so that orders follow the eigenvalue `(-j)^k`.
pub fn discrete_hgf_basis(n: usize) -> Result<HgfBasis> {
    if n < 2 {
        return Err(Error::Range(format!("basis size must be at least 2, got {n}")));
    }
    let t = commuting_matrix(n);
    let even = parity_basis(n, 1.0);
    let odd = parity_basis(n, -1.0);
    // Even vectors: the cosine part has eigenvalue +1 for k = 0 mod 4, -1 for k = 2.
    // Odd vectors: j times the sine part gives +1 for k = 1 mod 4, -1 for k = 3.
    let (e0, e2) = split_by_sign(&restricted_dft(n, &even, false));
    let (o1, o3) = split_by_sign(&restricted_dft(n, &odd, true));
    let groups = [(0usize, &even * e0), (2, &even * e2), (1, &odd * o1), (3, &odd * o3)];

    let interval = (2.0 * PI / n as f64).sqrt();
    let mut h = DMatrix::<f64>::zeros(n, n);
    let mut filled = vec![false; n];
    for (residue, space) in groups.iter() {
        let expected = (0..n).filter(|k| k % 4 == *residue).count();
        if space.ncols() != expected {
            return Err(Error::Numerical(format!(
                "DFT eigenspace {residue} mod 4 has dimension {} instead of {expected}",
                space.ncols()
            )));
        }
        if expected == 0 {
            continue;
        }
        let projected = space.transpose() * &t * space;
        let eig = SymmetricEigen::new(projected);
        let mut order: Vec<usize> = (0..expected).collect();
        order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
        for (rank, &idx) in order.iter().enumerate() {
            let k = residue + 4 * rank;
            let mut v: DVector<f64> = space * eig.eigenvectors.column(idx);
            let reference = sampled_hgf(k, n, interval);
            let corr: f64 = v.iter().zip(&reference).map(|(a, b)| a * b).sum();
            if corr < 0.0 {
                v.neg_mut();
            }
            h.set_column(k, &v);
            filled[k] = true;
        }
    }
    if filled.iter().any(|f| !f) {
        return Err(Error::Numerical("basis orders incomplete".into()));
    }
    HgfBasis::from_matrix(h)
}
