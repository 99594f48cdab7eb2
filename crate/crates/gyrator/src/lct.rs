//! 4x4 parameter matrices of the 2D linear canonical transform.

use crate::angle::Angle;
use crate::error::{Error, Result};

type Mat4 = [[f64; 4]; 4];
type Mat2 = [[f64; 2]; 2];

const CONSTRUCT_TOL: f64 = 1e-12;
const COMPOSE_TOL: f64 = 1e-9;

/// Symplectic `[A B; C D]` matrix with 2x2 blocks.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AbcdMatrix(Mat4);

impl AbcdMatrix {
    /// Validates the symplectic conditions at `1e-12`, scaled by the entry magnitude.
    pub fn new(m: Mat4) -> Result<Self> {
        validate(&m, CONSTRUCT_TOL)?;
        Ok(Self(m))
    }

    pub fn identity() -> Self {
        let mut m = [[0.0; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        Self(m)
    }

    pub fn entries(&self) -> &Mat4 {
        &self.0
    }

    pub fn a(&self) -> Mat2 {
        block(&self.0, 0, 0)
    }
    pub fn b(&self) -> Mat2 {
        block(&self.0, 0, 2)
    }
    pub fn c(&self) -> Mat2 {
        block(&self.0, 2, 0)
    }
    pub fn d(&self) -> Mat2 {
        block(&self.0, 2, 2)
    }

    /// Largest symplectic-condition residual.
    pub fn symplectic_residual(&self) -> f64 {
        residual(&self.0)
    }

    pub fn max_abs_diff(&self, other: &AbcdMatrix) -> f64 {
        let mut d: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                d = d.max((self.0[i][j] - other.0[i][j]).abs());
            }
        }
        d
    }
}

/// Matrix product `m1 * m2`, re-validated at `1e-9`.
pub fn compose(m1: &AbcdMatrix, m2: &AbcdMatrix) -> Result<AbcdMatrix> {
    let p = mul4(&m1.0, &m2.0);
    validate(&p, COMPOSE_TOL)?;
    Ok(AbcdMatrix(p))
}

/// `A = D = cos a I`, `B = sin a J`, `C = -sin a J` with `J` the exchange matrix.
pub fn gyrator_matrix(alpha: Angle) -> AbcdMatrix {
    let (s, c) = alpha.radians().sin_cos();
    AbcdMatrix([
        [c, 0.0, 0.0, s],
        [0.0, c, s, 0.0],
        [0.0, -s, c, 0.0],
        [-s, 0.0, 0.0, c],
    ])
}

fn lower(c: Mat2) -> AbcdMatrix {
    AbcdMatrix([
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [c[0][0], c[0][1], 1.0, 0.0],
        [c[1][0], c[1][1], 0.0, 1.0],
    ])
}

fn upper(b: Mat2) -> AbcdMatrix {
    AbcdMatrix([
        [1.0, 0.0, b[0][0], b[0][1]],
        [0.0, 1.0, b[1][0], b[1][1]],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ])
}

fn swap_axes() -> AbcdMatrix {
    AbcdMatrix([
        [0.0, 1.0, 0.0, 0.0],
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
        [0.0, 0.0, 1.0, 0.0],
    ])
}

fn fourier() -> AbcdMatrix {
    AbcdMatrix([
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
        [-1.0, 0.0, 0.0, 0.0],
        [0.0, -1.0, 0.0, 0.0],
    ])
}

/// Factors of the linear-chirp-convolution decomposition, left to right.
pub fn lcc_factors(alpha: Angle) -> Result<[AbcdMatrix; 4]> {
    let (s, c) = alpha.radians().sin_cos();
    let (csc, cot) = (1.0 / s, c / s);
    if !csc.is_finite() || s == 0.0 {
        return Err(Error::SingularParameter(format!("csc undefined at {alpha}")));
    }
    let chirp = lower([[-csc, cot], [cot, -csc]]);
    Ok([chirp, swap_axes(), upper([[s, 0.0], [0.0, s]]), chirp])
}

/// Factors of the DFT-based decomposition, left to right.
pub fn dft_factors(alpha: Angle) -> Result<[AbcdMatrix; 5]> {
    let (s, c) = alpha.radians().sin_cos();
    if s == 0.0 {
        return Err(Error::SingularParameter(format!("csc undefined at {alpha}")));
    }
    let cot = c / s;
    let chirp = lower([[0.0, cot], [cot, 0.0]]);
    let scale = AbcdMatrix([
        [s, 0.0, 0.0, 0.0],
        [0.0, s, 0.0, 0.0],
        [0.0, 0.0, 1.0 / s, 0.0],
        [0.0, 0.0, 0.0, 1.0 / s],
    ]);
    Ok([chirp, swap_axes(), scale, fourier(), chirp])
}

/// Factors of the circular-chirp-convolution decomposition, left to right.
pub fn ccc_factors(alpha: Angle) -> Result<[AbcdMatrix; 5]> {
    let t = (alpha.radians() / 2.0).tan();
    if !t.is_finite() || alpha.is_pi() {
        return Err(Error::SingularParameter(format!("tan(a/2) undefined at {alpha}")));
    }
    let s = alpha.sin();
    let chirp = lower([[0.0, -t], [-t, 0.0]]);
    let inverse_fourier = AbcdMatrix([
        [0.0, 0.0, -1.0, 0.0],
        [0.0, 0.0, 0.0, -1.0],
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
    ]);
    Ok([
        chirp,
        inverse_fourier,
        lower([[0.0, -s], [-s, 0.0]]),
        fourier(),
        chirp,
    ])
}

/// Product of a factor chain.
pub fn product(factors: &[AbcdMatrix]) -> Result<AbcdMatrix> {
    factors
        .iter()
        .try_fold(AbcdMatrix::identity(), |acc, f| compose(&acc, f))
}

fn block(m: &Mat4, r: usize, c: usize) -> Mat2 {
    [[m[r][c], m[r][c + 1]], [m[r + 1][c], m[r + 1][c + 1]]]
}

fn mul4(a: &Mat4, b: &Mat4) -> Mat4 {
    let mut out = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = (0..4).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

fn t_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = [[0.0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[0][i] * b[0][j] + a[1][i] * b[1][j];
        }
    }
    out
}

fn residual(m: &Mat4) -> f64 {
    let (a, b, c, d) = (block(m, 0, 0), block(m, 0, 2), block(m, 2, 0), block(m, 2, 2));
    let atc = t_mul(&a, &c);
    let cta = t_mul(&c, &a);
    let btd = t_mul(&b, &d);
    let dtb = t_mul(&d, &b);
    let atd = t_mul(&a, &d);
    let ctb = t_mul(&c, &b);
    let mut r: f64 = 0.0;
    for i in 0..2 {
        for j in 0..2 {
            let eye = if i == j { 1.0 } else { 0.0 };
            r = r
                .max((atc[i][j] - cta[i][j]).abs())
                .max((btd[i][j] - dtb[i][j]).abs())
                .max((atd[i][j] - ctb[i][j] - eye).abs());
        }
    }
    r
}

fn validate(m: &Mat4, tol: f64) -> Result<()> {
    if m.iter().flatten().any(|v| !v.is_finite()) {
        return Err(Error::Validation("non-finite ABCD entry".into()));
    }
    let scale = m.iter().flatten().fold(1.0f64, |s, v| s.max(v.abs()));
    let r = residual(m);
    if r > tol * scale * scale {
        return Err(Error::Validation(format!(
            "symplectic residual {r:e} exceeds tolerance"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quarter_turn_blocks() {
        let m = gyrator_matrix(Angle::from_degrees(90.0));
        assert!(m.a().iter().flatten().all(|v| v.abs() < 1e-15));
        assert!((m.b()[0][1] - 1.0).abs() < 1e-15 && (m.b()[1][0] - 1.0).abs() < 1e-15);
        assert!((m.c()[0][1] + 1.0).abs() < 1e-15 && (m.c()[1][0] + 1.0).abs() < 1e-15);
        assert_eq!(gyrator_matrix(Angle::ZERO), AbcdMatrix::identity());
    }

    #[test]
    fn decompositions_reproduce_gyrator() {
        let a = Angle::from_degrees(60.0);
        let m = gyrator_matrix(a);
        assert!(product(&lcc_factors(a).unwrap()).unwrap().max_abs_diff(&m) < 1e-12);
        assert!(product(&dft_factors(a).unwrap()).unwrap().max_abs_diff(&m) < 1e-12);
        assert!(product(&ccc_factors(a).unwrap()).unwrap().max_abs_diff(&m) < 1e-12);
    }

    #[test]
    fn rejects_non_symplectic() {
        let mut m = *AbcdMatrix::identity().entries();
        m[0][0] = 2.0;
        assert!(AbcdMatrix::new(m).is_err());
    }
}
