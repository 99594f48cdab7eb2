//! Converts a Hermite-Gaussian mode through Laguerre-Gaussian-like stages and
//! reports how rotationally symmetric each intensity pattern is.

use gyrator::apps::{angular_rsd, mode_convert, mode_origin};
use gyrator::{Angle, DgtMethod, Result};

fn main() -> Result<()> {
    let method = DgtMethod::Dft;
    for deg in [0.0, 22.5, 45.0, 67.5, 90.0] {
        let g = mode_convert(2, 5, Angle::from_degrees(deg), 128, &method)?;
        println!("{deg:>5}°: angular RSD {:.4}", angular_rsd(&g, 16, mode_origin(&method))?);
    }
    Ok(())
}
