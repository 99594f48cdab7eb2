//! Bit-plane chaotic encryption in the gyrator domain and its key sensitivity.

use gyrator::apps::{decrypt, encrypt, CryptoKey};
use gyrator::images::test_field;
use gyrator::{nrmse, psnr, Angle, Result};

fn main() -> Result<()> {
    let image = test_field(128, (2.0 * std::f64::consts::PI / 128.0).sqrt())?;
    let key = CryptoKey::generate(Angle::from_degrees(40.0), 16, 7)?;
    let enc = encrypt(&image, &key)?;
    let dec = decrypt(&enc.image, &enc.meta, &key)?;
    println!("correct key: PSNR {:.1} dB", psnr(&image.real_part(), &dec.real_part(), 255.0)?);

    let mut wrong = key.clone();
    wrong.x0[3] += 1e-12;
    println!("x0 off by 1e-12: NRMSE {:.3}", nrmse(&image, &decrypt(&enc.image, &enc.meta, &wrong)?)?);
    let mut wrong = key.clone();
    wrong.alpha = Angle::from_degrees(40.0001);
    println!("angle off by 0.0001°: NRMSE {:.3}", nrmse(&image, &decrypt(&enc.image, &enc.meta, &wrong)?)?);

    let partial = key.with_region(Some(28));
    let enc = encrypt(&image, &partial)?;
    println!("central 28x28 only: NRMSE of ciphertext {:.3}", nrmse(&image, &enc.image)?);
    Ok(())
}
