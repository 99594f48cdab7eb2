//! Embeds two logos in the middle-energy coefficients, extracts them from a
//! noisy copy and runs the detector over 1000 candidate sets.

use gyrator::apps::{
    add_gaussian_noise, detection_sweep, watermark_embed, watermark_extract, WatermarkKey, WatermarkParams,
};
use gyrator::images::{logo, test_field};
use gyrator::{psnr, Result};

fn main() -> Result<()> {
    let host = test_field(256, 0.1567)?;
    let key = WatermarkKey::for_host(&host, WatermarkParams::default())?;
    let (w1, w2) = (logo(64, 0), logo(64, 1));
    let wm = watermark_embed(&host, &w1, &w2, &key)?;
    println!("watermarked PSNR {:.2} dB", psnr(&host.real_part(), &wm.real_part(), 255.0)?);

    let noisy = add_gaussian_noise(&wm, 10.0, 1)?;
    let (e1, e2) = watermark_extract(&noisy, &host, &key)?;
    println!("extracted PSNRs {:.1} dB and {:.1} dB", psnr(&w1, &e1, 255.0)?, psnr(&w2, &e2, 255.0)?);

    let sweep = detection_sweep(&noisy, &w1, &w2, &key, 1000, 199, 2)?;
    println!("detector maximum at {} (true set at 199): {}", sweep.argmax, sweep.detected());
    Ok(())
}
