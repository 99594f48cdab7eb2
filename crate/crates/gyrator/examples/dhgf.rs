//! The Hermite-Gaussian transform: rotated modes are eigenfunctions, and the
//! fast shell algorithm reproduces the explicit expansion.

use gyrator::hgf::{build_shell_matrices, dgt_dhgf_direct, dgt_dhgf_fast, discrete_hgf_basis, rhgf};
use gyrator::{nrmse, Angle, ComplexField, Result, C64};

fn main() -> Result<()> {
    let n = 16;
    let basis = discrete_hgf_basis(n)?;
    let a = Angle::from_degrees(50.0);
    let mode = rhgf(2, 5, &basis)?;
    let shells = build_shell_matrices(n, a)?;
    let out = dgt_dhgf_fast(&mode, a, &basis, &shells)?;
    let expected = mode.clone().scale(C64::from_polar(1.0, 3.0 * a.radians()));
    println!("eigenvalue error for RHGF(2, 5): {:.1e}", nrmse(&expected, &out)?);

    let g = ComplexField::from_fn(n, n, basis.interval(), basis.interval(), |m, q| {
        C64::new(((m * 7 + q * 3) % 11) as f64, (m as f64 - q as f64).sin())
    })?;
    let fast = dgt_dhgf_fast(&g, a, &basis, &shells)?;
    println!("fast vs direct: {:.1e}", nrmse(&dgt_dhgf_direct(&g, a, &basis)?, &fast)?);
    Ok(())
}
