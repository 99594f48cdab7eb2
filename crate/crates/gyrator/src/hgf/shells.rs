//! Shell structure of the 2D Hermite-Gaussian basis under the gyrator transform.
//!
//! Shell `L` holds the pairs `(k, L-k)`. For `L < N` it has `L+1` members; for
//! `L >= N` only `k = L-N+1 ..= N-1` exist and the shell reuses the mixing of
//! size `2N-1-L`. Shell vectors are ordered by ascending `k`.

use std::collections::HashMap;
use std::f64::consts::FRAC_PI_2;
use std::sync::{Arc, Mutex, OnceLock};

use nalgebra::DMatrix;
use rayon::prelude::*;

use super::basis::HgfBasis;
use super::wigner::wigner_d_matrix;
use crate::angle::Angle;
use crate::error::{Error, Result};
use crate::field::{ComplexField, C64};

/// First `k` and member count of shell `l` for basis size `n`.
pub fn shell_range(n: usize, l: usize) -> (usize, usize) {
    if l < n {
        (0, l + 1)
    } else {
        (l + 1 - n, 2 * n - 1 - l)
    }
}

/// `d^{J}(pi/2)` for `2J = 0 .. n-1`, cached per `n`.
pub fn half_pi_tables(n: usize) -> Arc<Vec<DMatrix<f64>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<DMatrix<f64>>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap_or_else(|e| e.into_inner()).get(&n) {
        return t.clone();
    }
    let tables: Vec<DMatrix<f64>> = (0..n)
        .into_par_iter()
        .map(|j2| wigner_d_matrix(j2 as u32, FRAC_PI_2))
        .collect();
    let tables = Arc::new(tables);
    cache
        .lock()
        .unwrap_or_else(|e| e.into_inner())
        .entry(n)
        .or_insert_with(|| tables.clone());
    tables
}

/// Per-shell unitary mixing matrices `D_L(a)` for basis size `n`.
#[derive(Clone, Debug)]
pub struct WignerShellSet {
    n: usize,
    alpha: Angle,
    mixers: Vec<DMatrix<C64>>,
}

impl WignerShellSet {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> Angle {
        self.alpha
    }

    /// Number of shells, `2n - 1`.
    pub fn shell_count(&self) -> usize {
        2 * self.n - 1
    }

    /// Mixing matrix of shell `l`; mirrored shells share the smaller matrices.
    pub fn matrix(&self, l: usize) -> &DMatrix<C64> {
        let (_, size) = shell_range(self.n, l);
        &self.mixers[size - 1]
    }

    /// Largest deviation of any `D_L^H D_L` from the identity.
    pub fn unitarity_error(&self) -> f64 {
        self.mixers
            .iter()
            .map(|d| {
                let g = d.adjoint() * d;
                let eye = DMatrix::<C64>::identity(d.nrows(), d.nrows());
                (g - eye).iter().fold(0.0f64, |a, z| a.max(z.norm()))
            })
            .fold(0.0, f64::max)
    }
}

/// Builds `D_L = d(pi/2)^T diag(exp(j 2a M)) d(pi/2)` for every distinct shell size.
///
/// Entry `(i, k)` equals `D^{J}_{J-i, J-k}(-pi/2, 2a, pi/2)` with `2J` the shell size minus one.
pub fn build_shell_matrices(n: usize, alpha: Angle) -> Result<WignerShellSet> {
    if n < 1 {
        return Err(Error::Range("shell set needs n >= 1".into()));
    }
    let tables = half_pi_tables(n);
    let a = alpha.radians();
    let mixers = tables
        .par_iter()
        .map(|delta| {
            let size = delta.nrows();
            let j2 = (size - 1) as f64;
            let dc = delta.map(|v| C64::new(v, 0.0));
            let phased = DMatrix::from_fn(size, size, |i, k| {
                let m = (j2 - 2.0 * i as f64) / 2.0;
                dc[(i, k)] * C64::from_polar(1.0, 2.0 * a * m)
            });
            dc.transpose() * phased
        })
        .collect();
    Ok(WignerShellSet { n, alpha, mixers })
}

/// Outer product `H[:, k] H[:, l]^T` as a field on the basis grid.
pub fn hgf2(k: usize, l: usize, basis: &HgfBasis) -> Result<ComplexField> {
    let n = basis.n();
    if k >= n || l >= n {
        return Err(Error::Range(format!("orders ({k}, {l}) must be below {n}")));
    }
    let h = basis.matrix();
    let d = basis.interval();
    ComplexField::new(
        n,
        n,
        d,
        d,
        (0..n)
            .flat_map(|m| (0..n).map(move |q| C64::new(h[(m, k)] * h[(q, l)], 0.0)))
            .collect(),
    )
}

/// Real coefficients of `rhgf(k, l)` on the pairs `(s, L-s)` of its shell.
pub(crate) fn rhgf_coefficients(n: usize, k: usize, l: usize) -> (usize, Vec<f64>) {
    let big_l = k + l;
    let (first, size) = shell_range(n, big_l);
    let tables = half_pi_tables(n);
    let delta = &tables[size - 1];
    let row = k - first;
    (first, (0..size).map(|j| delta[(row, j)]).collect())
}

/// Discrete rotated HGF of orders `(k, l)`, an eigenfunction of the discrete
/// gyrator transform with eigenvalue `exp(-j a (k - l))`.
pub fn rhgf(k: usize, l: usize, basis: &HgfBasis) -> Result<ComplexField> {
    let n = basis.n();
    if k >= n || l >= n {
        return Err(Error::Range(format!("orders ({k}, {l}) must be below {n}")));
    }
    let (first, coeffs) = rhgf_coefficients(n, k, l);
    let big_l = k + l;
    let h = basis.matrix();
    let mut data = vec![C64::new(0.0, 0.0); n * n];
    for (j, &c) in coeffs.iter().enumerate() {
        let s = first + j;
        let t = big_l - s;
        for m in 0..n {
            let hm = c * h[(m, s)];
            for q in 0..n {
                data[m * n + q].re += hm * h[(q, t)];
            }
        }
    }
    let d = basis.interval();
    ComplexField::new(n, n, d, d, data)
}
