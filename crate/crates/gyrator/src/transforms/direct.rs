use std::f64::consts::PI;

use super::{check_kpi, OutputGrid};
use crate::angle::Angle;
use crate::error::Result;
use crate::field::{centered, reflect, ComplexField, C64};

/// Direct summation of the discrete gyrator kernel.
///
/// Output index `p` pairs with the input's second axis through `du dy`, and `q`
/// with the first axis through `dv dx`, so the natural output shape is `(n2, n1)`.
/// Exact multiples of pi give the identity or the reflection.
pub fn dgt_direct(g: &ComplexField, alpha: Angle, du: f64, dv: f64) -> Result<ComplexField> {
    let grid = OutputGrid::new(g.n2(), g.n1(), du, dv)?;
    dgt_direct_on(g, alpha, &grid)
}

/// [`dgt_direct`] evaluated on an explicit output grid.
pub fn dgt_direct_on(g: &ComplexField, alpha: Angle, grid: &OutputGrid) -> Result<ComplexField> {
    if alpha.is_zero() {
        return Ok(g.clone());
    }
    if alpha.is_pi() {
        return Ok(reflect(g));
    }
    check_kpi(alpha, "direct")?;
    let (n1, n2) = g.shape();
    let (dx, dy) = (g.dx(), g.dy());
    let (du, dv) = (grid.du, grid.dv);
    let (s, c) = alpha.radians().sin_cos();
    let (csc, cot) = (1.0 / s, c / s);
    let (o1, o2) = (grid.n1, grid.n2);

    // a[m, n] = exp(j m n dx dy cot) g[m, n]
    let mut a = g.data().to_vec();
    for m in 0..n1 {
        let mc = centered(m, n1) as f64;
        for n in 0..n2 {
            let nc = centered(n, n2) as f64;
            a[m * n2 + n] *= C64::from_polar(1.0, mc * nc * dx * dy * cot);
        }
    }
    // t[m, p] = sum_n a[m, n] exp(-j p n du dy csc)
    let kp: Vec<C64> = (0..o1)
        .flat_map(|p| {
            let pc = centered(p, o1) as f64;
            (0..n2).map(move |n| C64::from_polar(1.0, -pc * centered(n, n2) as f64 * du * dy * csc))
        })
        .collect();
    let mut t = vec![C64::new(0.0, 0.0); n1 * o1];
    for m in 0..n1 {
        let row = &a[m * n2..(m + 1) * n2];
        for p in 0..o1 {
            let k = &kp[p * n2..(p + 1) * n2];
            t[m * o1 + p] = row.iter().zip(k).map(|(x, y)| x * y).sum();
        }
    }
    // out[p, q] = chirp(p, q) sum_m exp(-j q m dv dx csc) t[m, p]
    let scale = csc.abs() * dx * dy / (2.0 * PI);
    let mut out = vec![C64::new(0.0, 0.0); o1 * o2];
    for q in 0..o2 {
        let qc = centered(q, o2) as f64;
        let kq: Vec<C64> = (0..n1)
            .map(|m| C64::from_polar(1.0, -qc * centered(m, n1) as f64 * dv * dx * csc))
            .collect();
        for p in 0..o1 {
            let pc = centered(p, o1) as f64;
            let sum: C64 = (0..n1).map(|m| kq[m] * t[m * o1 + p]).sum();
            out[p * o2 + q] = sum * C64::from_polar(scale, pc * qc * du * dv * cot);
        }
    }
    Ok(ComplexField::from_parts(o1, o2, du, dv, out))
}
