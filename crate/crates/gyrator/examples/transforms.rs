//! Runs every discrete gyrator transform on a Gaussian, through the dispatcher
//! that reroutes angles near the singularities, and compares each with the
//! closed-form continuous result on its own output grid.

use gyrator::field::GridOrigin;
use gyrator::oracle::{gaussian_gyrator_closed_form, scaled_gaussian, SampleGrid};
use gyrator::transforms::BALANCED_THRESHOLD;
use gyrator::{dgt_auto_with, nrmse, Angle, DgtMethod, Result};

fn main() -> Result<()> {
    let n = 64;
    let d = (2.0 * std::f64::consts::PI / n as f64).sqrt();
    let g = scaled_gaussian(0.4, &SampleGrid::square(n, d, GridOrigin::Centered));
    let methods = [
        DgtMethod::Direct { du: d, dv: d },
        DgtMethod::lcc(d, d),
        DgtMethod::Dft,
        DgtMethod::Ccc,
    ];
    for deg in [10.0, 30.0, 60.0, 120.0, 170.0] {
        let a = Angle::from_degrees(deg);
        let mut line = format!("{deg:>5}°");
        for m in &methods {
            let out = dgt_auto_with(&g, a, m, BALANCED_THRESHOLD)?;
            let reference = gaussian_gyrator_closed_form(0.4, a, &SampleGrid::of(&out, GridOrigin::Centered));
            line.push_str(&format!("  {} {:.1e}", m.name(), nrmse(&reference, &out)?));
        }
        println!("{line}");
    }
    Ok(())
}
