//! A signal band-limited in the gyrator domain is recovered from samples that
//! are too coarse for Fourier interpolation.

use gyrator::apps::{sampling_demo, SamplingDemoConfig};
use gyrator::Result;

fn main() -> Result<()> {
    let d = sampling_demo(&SamplingDemoConfig::default())?;
    println!("gyrator-domain reconstruction NRMSE {:.2e}", d.gyrator_nrmse);
    println!("Fourier reconstruction NRMSE {:.3}", d.fourier_nrmse);
    Ok(())
}
