//! Wigner d- and D-functions with half-integer arguments stored doubled.
//!
//! `j2 = 2J`, `m1 = 2M1`, `m2 = 2M2`. Rows of [`wigner_d_matrix`] run over
//! `M1 = J, J-1, ..., -J` and columns over `M2` in the same order.

use std::sync::OnceLock;

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::field::C64;

const LN_FACT_MAX: usize = 4096;

fn ln_factorial(n: usize) -> f64 {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    let t = TABLE.get_or_init(|| {
        let mut t = vec![0.0; LN_FACT_MAX + 1];
        for i in 1..=LN_FACT_MAX {
            t[i] = t[i - 1] + (i as f64).ln();
        }
        t
    });
    t[n]
}

fn ln_binomial(n: usize, k: usize) -> f64 {
    ln_factorial(n) - ln_factorial(k) - ln_factorial(n - k)
}

/// Integer parts `(J+M1, J-M1, J+M2, J-M2)` after validating the arguments.
fn validate(j2: u32, m1: i32, m2: i32) -> Result<[usize; 4]> {
    let j = j2 as i64;
    let ok = |m: i32| (m as i64).abs() <= j && (j - m as i64) % 2 == 0;
    if !ok(m1) || !ok(m2) {
        return Err(Error::Range(format!(
            "invalid Wigner indices 2J={j2}, 2M1={m1}, 2M2={m2}"
        )));
    }
    if j2 as usize > LN_FACT_MAX / 2 {
        return Err(Error::Range(format!("2J={j2} exceeds supported range")));
    }
    let h = |x: i64| (x / 2) as usize;
    Ok([h(j + m1 as i64), h(j - m1 as i64), h(j + m2 as i64), h(j - m2 as i64)])
}

/// Jacobi polynomial `P_n^{(a,b)}(x)` by the standard three-term recurrence.
pub fn jacobi(n: usize, a: f64, b: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut p0 = 1.0;
    let mut p1 = (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0;
    for k in 2..=n {
        let k = k as f64;
        let c = 2.0 * k + a + b;
        let num = (c - 1.0) * (c * (c - 2.0) * x + a * a - b * b) * p1
            - 2.0 * (k + a - 1.0) * (k + b - 1.0) * c * p0;
        let p2 = num / (2.0 * k * (k + a + b) * (c - 2.0));
        p0 = p1;
        p1 = p2;
    }
    p1
}

/// Wigner small-d function `d^J_{M1,M2}(beta)` via a Jacobi polynomial.
///
/// The recurrence stays accurate for `J` in the hundreds, where the
/// alternating factorial sum loses all digits.
pub fn wigner_d(j2: u32, m1: i32, m2: i32, beta: f64) -> Result<f64> {
    let [jp1, jm1, jp2, jm2] = validate(j2, m1, m2)?;
    let d12 = (m1 - m2) / 2; // M1 - M2, integral
    let k = jp1.min(jm1).min(jp2).min(jm2);
    let (a, lambda) = if k == jp2 {
        (d12, d12)
    } else if k == jm2 || k == jp1 {
        (-d12, 0)
    } else {
        (d12, d12)
    };
    let a = a as usize;
    let b = j2 as usize - 2 * k - a;
    let ln_ratio = ln_binomial(j2 as usize - k, k + a) - ln_binomial(k + b, b);
    let sign = if lambda.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    let (s, c) = (beta / 2.0).sin_cos();
    Ok(sign
        * (0.5 * ln_ratio).exp()
        * s.powi(a as i32)
        * c.powi(b as i32)
        * jacobi(k, a as f64, b as f64, beta.cos()))
}

/// Wigner small-d function by the explicit factorial sum.
///
/// Kept as an independent cross-check of [`wigner_d`]; cancellation limits it
/// to moderate `J`.
pub fn wigner_d_sum(j2: u32, m1: i32, m2: i32, beta: f64) -> Result<f64> {
    let [jp1, jm1, jp2, jm2] = validate(j2, m1, m2)?;
    let d12 = (m1 - m2) / 2;
    let (s, c) = (beta / 2.0).sin_cos();
    let pref = 0.5 * (ln_factorial(jp1) + ln_factorial(jm1) + ln_factorial(jp2) + ln_factorial(jm2));
    let lo = 0.max(-d12) as usize;
    let hi = jp2.min(jm1);
    let mut total = 0.0;
    for sidx in lo..=hi {
        let s_i = sidx as i32;
        let d = (d12 + s_i) as usize;
        let ln = pref
            - ln_factorial(jp2 - sidx)
            - ln_factorial(sidx)
            - ln_factorial(d)
            - ln_factorial(jm1 - sidx);
        let sign = if (d12 + s_i).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        let cpow = j2 as i32 + (m2 - m1) / 2 - 2 * s_i;
        let spow = d12 + 2 * s_i;
        total += sign * ln.exp() * c.powi(cpow) * s.powi(spow);
    }
    Ok(total)
}

/// `D^J_{M1,M2}(chi, beta, gamma) = exp(-j M1 chi) d^J_{M1,M2}(beta) exp(-j M2 gamma)`.
pub fn wigner_big_d(j2: u32, m1: i32, m2: i32, chi: f64, beta: f64, gamma: f64) -> Result<C64> {
    let d = wigner_d(j2, m1, m2, beta)?;
    let phase = -(m1 as f64 / 2.0) * chi - (m2 as f64 / 2.0) * gamma;
    Ok(C64::from_polar(d, phase))
}

/// Full `(2J+1) x (2J+1)` d-matrix at `beta`.
pub fn wigner_d_matrix(j2: u32, beta: f64) -> DMatrix<f64> {
    let size = j2 as usize + 1;
    DMatrix::from_fn(size, size, |i, k| {
        let m1 = j2 as i32 - 2 * i as i32;
        let m2 = j2 as i32 - 2 * k as i32;
        wigner_d(j2, m1, m2, beta).expect("indices in range by construction")
    })
}
