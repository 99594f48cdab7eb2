//! Accuracy of the four fast transforms against the closed-form Gaussian result.

use gyrator::oracle::{accuracy_sweep, InputKind, MethodKind};
use gyrator::transforms::BALANCED_THRESHOLD;
use gyrator::{Angle, Result};

fn main() -> Result<()> {
    let alphas: Vec<Angle> = (1..=7).map(|i| Angle::from_degrees(22.5 * i as f64)).collect();
    for m in MethodKind::FAST {
        let rows = accuracy_sweep(m, InputKind::ScaledGaussian { s: 0.4 }, 101, &alphas, BALANCED_THRESHOLD)?;
        let line: Vec<String> = rows.iter().map(|r| format!("{:.1e}", r.nrmse)).collect();
        println!("{m:>5}: {}", line.join(" "));
    }
    Ok(())
}
