//! Real-multiplication counts and timing of the transforms.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::MethodKind;
use crate::angle::Angle;
use crate::error::Result;
use crate::field::{ComplexField, C64};
use crate::hgf::{dgt_dhgf_factored, half_pi_tables, HgfBasis};
use crate::transforms::{dgt_ccc, dgt_dft, dgt_direct, dgt_lcc};

/// Number of real multiplications for an `n x n` input.
pub fn multiplication_count(method: MethodKind, n: usize) -> f64 {
    let nf = n as f64;
    let n2 = nf * nf;
    match method {
        MethodKind::Lcc => {
            let m = (3.0 * nf - 2.0).powi(2);
            8.0 * n2 + 4.0 * m + 6.0 * m * m.log2()
        }
        MethodKind::Dft => 8.0 * n2 + 2.0 * n2 * n2.log2(),
        MethodKind::Ccc => 12.0 * n2 + 4.0 * n2 * n2.log2(),
        MethodKind::Dhgf => {
            let n = n as u128;
            ((32 * n * n * n + 4 * n) / 3) as f64
        }
        MethodKind::Direct => 4.0 * n2 * n2,
    }
}

/// Counts (and optionally seconds) for one size.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexityRow {
    pub n: usize,
    pub method: MethodKind,
    pub count: f64,
    pub seconds: Option<f64>,
}

#[derive(Clone, Debug)]
pub struct ComplexityReport {
    pub rows: Vec<ComplexityRow>,
    /// Per size: whether counts follow DFT < CCC < LCC < DHGF < Direct.
    pub ordering: Vec<(usize, bool)>,
    pub caveat: &'static str,
}

/// The ordering of methods by count claimed for large sizes.
pub const COUNT_CHAIN: [MethodKind; 5] = [
    MethodKind::Dft,
    MethodKind::Ccc,
    MethodKind::Lcc,
    MethodKind::Dhgf,
    MethodKind::Direct,
];

pub fn count_chain_holds(n: usize) -> bool {
    COUNT_CHAIN
        .windows(2)
        .all(|w| multiplication_count(w[0], n) < multiplication_count(w[1], n))
}

/// Smallest `n >= 2` from which the count chain holds for every larger size up to `limit`.
pub fn count_chain_onset(limit: usize) -> Option<usize> {
    let mut onset = None;
    for n in 2..=limit {
        match (count_chain_holds(n), onset) {
            (true, None) => onset = Some(n),
            (false, Some(_)) => onset = None,
            _ => {}
        }
    }
    onset
}

/// Evaluates counts for every size and, if `timing` is set, times the fast
/// methods on a random input (best of `repeats`).
pub fn complexity_order_check(ns: &[usize], timing: Option<usize>) -> Result<ComplexityReport> {
    let mut rows = Vec::new();
    for &n in ns {
        for method in MethodKind::ALL {
            let seconds = match timing {
                Some(repeats) if method != MethodKind::Direct => Some(time_method(method, n, repeats.max(1))?),
                _ => None,
            };
            rows.push(ComplexityRow {
                n,
                method,
                count: multiplication_count(method, n),
                seconds,
            });
        }
    }
    Ok(ComplexityReport {
        rows,
        ordering: ns.iter().map(|&n| (n, count_chain_holds(n))).collect(),
        caveat: "DHGF needs fewer multiplications than LCC when N is small (below about 84)",
    })
}

fn random_field(n: usize, seed: u64) -> ComplexField {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = (2.0 * std::f64::consts::PI / n as f64).sqrt();
    ComplexField::from_fn(n, n, d, d, |_, _| C64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5))
        .expect("finite random field")
}

/// Best wall-clock seconds of one transform at 40°. DHGF runs the factored
/// shell mixing with the basis and half-pi tables prepared outside the clock.
pub fn time_method(method: MethodKind, n: usize, repeats: usize) -> Result<f64> {
    let g = random_field(n, n as u64);
    let alpha = Angle::from_degrees(40.0);
    let d = g.dx();
    let basis = if method == MethodKind::Dhgf {
        half_pi_tables(n);
        Some(HgfBasis::cached(n)?)
    } else {
        None
    };
    let mut best = f64::INFINITY;
    for _ in 0..repeats {
        let t = Instant::now();
        match method {
            MethodKind::Lcc => {
                dgt_lcc(&g, alpha, d, d)?;
            }
            MethodKind::Dft => {
                dgt_dft(&g, alpha)?;
            }
            MethodKind::Ccc => {
                dgt_ccc(&g, alpha)?;
            }
            MethodKind::Dhgf => {
                dgt_dhgf_factored(&g, alpha, basis.as_ref().expect("basis prepared above"))?;
            }
            MethodKind::Direct => {
                dgt_direct(&g, alpha, d, d)?;
            }
        }
        best = best.min(t.elapsed().as_secs_f64());
    }
    Ok(best)
}
