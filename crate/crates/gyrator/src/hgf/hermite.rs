//! Continuous Hermite-Gaussian functions.

use std::f64::consts::PI;

/// Normalized Hermite-Gaussian function `HG_k(x)`.
///
/// Uses the orthonormal three-term recurrence on the polynomial part and keeps
/// a running log-scale so large orders do not overflow before the Gaussian
/// factor is applied.
pub fn hermite_function(k: usize, x: f64) -> f64 {
    let mut log_scale = 0.0;
    let mut prev = 0.0;
    let mut cur = PI.powf(-0.25);
    for j in 0..k {
        let next = (2.0 / (j + 1) as f64).sqrt() * x * cur - (j as f64 / (j + 1) as f64).sqrt() * prev;
        prev = cur;
        cur = next;
        let mag = cur.abs();
        if mag > 1e150 {
            cur /= 1e150;
            prev /= 1e150;
            log_scale += 150.0 * std::f64::consts::LN_10;
        }
    }
    let exponent = log_scale - x * x / 2.0;
    if cur == 0.0 {
        0.0
    } else {
        cur.signum() * (cur.abs().ln() + exponent).exp()
    }
}

/// `HG_0(x) ..= HG_kmax(x)` from one pass of the recurrence.
pub fn hermite_functions_upto(kmax: usize, x: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(kmax + 1);
    let mut log_scale = 0.0;
    let mut prev = 0.0;
    let mut cur = PI.powf(-0.25);
    let finish = |v: f64, log_scale: f64| {
        if v == 0.0 {
            0.0
        } else {
            v.signum() * (v.abs().ln() + log_scale - x * x / 2.0).exp()
        }
    };
    out.push(finish(cur, log_scale));
    for j in 0..kmax {
        let next = (2.0 / (j + 1) as f64).sqrt() * x * cur - (j as f64 / (j + 1) as f64).sqrt() * prev;
        prev = cur;
        cur = next;
        if cur.abs() > 1e150 {
            cur /= 1e150;
            prev /= 1e150;
            log_scale += 150.0 * std::f64::consts::LN_10;
        }
        out.push(finish(cur, log_scale));
    }
    out
}

/// Samples `HG_k((m - (n-1)/2) interval)` for `m = 0..n`.
pub fn sampled_hgf(k: usize, n: usize, interval: f64) -> Vec<f64> {
    let c = (n as f64 - 1.0) / 2.0;
    (0..n)
        .map(|m| hermite_function(k, (m as f64 - c) * interval))
        .collect()
}

/// [`sampled_hgf`] scaled to unit Euclidean norm.
pub fn normalized_sampled_hgf(k: usize, n: usize, interval: f64) -> Vec<f64> {
    let mut v = sampled_hgf(k, n, interval);
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm > 0.0 {
        v.iter_mut().for_each(|x| *x /= norm);
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ground_state_value() {
        assert!((hermite_function(0, 0.0) - PI.powf(-0.25)).abs() < 1e-15);
        assert!((hermite_function(0, 0.0) - 0.7511255444649425).abs() < 1e-15);
    }

    #[test]
    fn matches_explicit_low_orders() {
        for &x in &[-2.3, -0.4, 0.0, 0.9, 3.1] {
            let g = PI.powf(-0.25) * (-x * x / 2.0f64).exp();
            assert!((hermite_function(1, x) - 2f64.sqrt() * x * g).abs() < 1e-14);
            let h2 = (4.0 * x * x - 2.0) / (8.0f64).sqrt();
            assert!((hermite_function(2, x) - h2 * g).abs() < 1e-14);
        }
    }

    #[test]
    fn table_matches_single_evaluations() {
        let t = hermite_functions_upto(40, 1.7);
        for (k, v) in t.iter().enumerate() {
            assert!((v - hermite_function(k, 1.7)).abs() < 1e-15);
        }
    }

    #[test]
    fn high_order_far_tail_is_finite() {
        let v = hermite_function(400, 30.0);
        assert!(v.is_finite());
        assert_eq!(hermite_function(3, 60.0), 0.0);
    }

    #[test]
    fn quadrature_orthonormality() {
        let h = 0.01;
        let xs: Vec<f64> = (-1500..=1500).map(|i| i as f64 * h).collect();
        for (a, b) in [(0usize, 0usize), (5, 5), (3, 7), (20, 20)] {
            let s: f64 = xs.iter().map(|&x| hermite_function(a, x) * hermite_function(b, x)).sum::<f64>() * h;
            let want = if a == b { 1.0 } else { 0.0 };
            assert!((s - want).abs() < 1e-10, "({a},{b}) -> {s}");
        }
    }
}
