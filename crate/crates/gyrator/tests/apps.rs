mod common;

use gyrator::apps::{
    add_gaussian_noise, angular_rsd, decrypt, detection_sweep, detector_response, encrypt, gyrator_lowpass_reconstruct,
    hg_mode, mode_convert, mode_origin, sampling_demo, watermark_embed, watermark_extract, Backend, CryptoKey,
    SamplingDemoConfig, WatermarkKey, WatermarkParams,
};
use gyrator::field::GridOrigin;
use gyrator::images::{logo, test_field, test_image};
use gyrator::{nrmse, psnr, Angle, ComplexField, DgtMethod, Error, C64};

fn deg(d: f64) -> Angle {
    Angle::from_degrees(d)
}

fn host(n: usize) -> ComplexField {
    ComplexField::from_real(n, n, 0.1567, 0.1567, &test_image(n)).unwrap()
}

fn small_params() -> WatermarkParams {
    WatermarkParams {
        q: 200,
        l: 256,
        ..WatermarkParams::default()
    }
}

fn ramp(l: usize) -> (Vec<f64>, Vec<f64>) {
    ((0..l).map(|i| (i * 37 % 256) as f64).collect(), (0..l).map(|i| (i * 11 % 256) as f64).collect())
}

#[test]
fn mode_conversion_examples() {
    let n = 128;
    let m = DgtMethod::Dft;
    let hg = hg_mode(2, 5, n, mode_origin(&m)).unwrap();
    assert!(nrmse(&hg, &mode_convert(2, 5, Angle::ZERO, n, &m).unwrap()).unwrap() < 1e-12);
    for a in [45.0, 135.0] {
        let lg = mode_convert(2, 5, deg(a), n, &m).unwrap();
        assert!(angular_rsd(&lg, 16, mode_origin(&m)).unwrap() <= 0.05);
    }
    assert!(angular_rsd(&hg, 16, mode_origin(&m)).unwrap() > 0.2);
    let quarter = mode_convert(2, 5, deg(90.0), n, &m).unwrap();
    let mag = |g: &ComplexField| g.map(|z| C64::new(z.norm(), 0.0));
    let t = mag(&hg).transpose().with_intervals(quarter.dx(), quarter.dy()).unwrap();
    assert!(nrmse(&t, &mag(&quarter)).unwrap() < 1e-6);
}

#[test]
fn dhgf_modes_use_the_half_sample_origin() {
    let m = DgtMethod::Dhgf;
    assert_eq!(mode_origin(&m), GridOrigin::HalfSample);
    let lg = mode_convert(2, 5, deg(45.0), 64, &m).unwrap();
    assert!(angular_rsd(&lg, 16, GridOrigin::HalfSample).unwrap() <= 0.05);
}

#[test]
fn sampling_demo_separates_the_two_reconstructions() {
    let d = sampling_demo(&SamplingDemoConfig::default()).unwrap();
    assert!(d.gyrator_nrmse <= 0.05, "{}", d.gyrator_nrmse);
    assert!(d.fourier_nrmse >= 0.3, "{}", d.fourier_nrmse);
}

#[test]
fn lowpass_reconstruction_edge_cases() {
    let g = common::random_field(16, 16, 0.666, 1);
    let a = deg(15.0);
    let whole = (8.0f64).hypot(8.0);
    assert!(nrmse(&g, &gyrator_lowpass_reconstruct(&g, a, whole, 1).unwrap()).unwrap() < 1e-9);
    let zero = ComplexField::zeros(16, 16, 0.666, 0.666).unwrap();
    assert_eq!(gyrator_lowpass_reconstruct(&zero, a, 4.0, 2).unwrap().energy(), 0.0);
    assert!(matches!(gyrator_lowpass_reconstruct(&g, a, whole + 1.0, 1), Err(Error::Range(_))));
}

#[test]
fn watermark_zero_strength_and_roundtrip() {
    let h = host(64);
    let (w1, w2) = ramp(256);
    let silent = WatermarkParams { k1: 0.0, k2: 0.0, ..small_params() };
    let key = WatermarkKey::for_host(&h, silent).unwrap();
    assert!(nrmse(&h, &watermark_embed(&h, &w1, &w2, &key).unwrap()).unwrap() < 1e-10);
    assert!(matches!(watermark_extract(&h, &h, &key), Err(Error::DegenerateKey(_))));

    for backend in Backend::ALL {
        let key = WatermarkKey::for_host(&h, WatermarkParams { backend, ..small_params() }).unwrap();
        let wm = watermark_embed(&h, &w1, &w2, &key).unwrap();
        let (e1, e2) = watermark_extract(&wm, &h, &key).unwrap();
        let err = e1.iter().zip(&w1).chain(e2.iter().zip(&w2)).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        assert!(err <= 1e-8, "{backend}: {err}");
    }

    let unit = WatermarkParams { k1: 1.0, k2: 1.0, ..small_params() };
    let key = WatermarkKey::for_host(&h, unit).unwrap();
    let ones = vec![1.0; 256];
    let (e1, e2) = watermark_extract(&watermark_embed(&h, &ones, &ones, &key).unwrap(), &h, &key).unwrap();
    assert!(e1.iter().chain(&e2).all(|v| (v - 1.0).abs() < 1e-9));
}

#[test]
fn watermark_key_validation() {
    let h = host(16);
    let too_long = WatermarkParams { q: 200, l: 100, ..WatermarkParams::default() };
    assert!(matches!(WatermarkKey::for_host(&h, too_long), Err(Error::Range(_))));
    let p = WatermarkParams { q: 10, l: 20, ..WatermarkParams::default() };
    assert!(matches!(WatermarkKey::new(p, vec![0; 256]), Err(Error::Validation(_))));
    let key = WatermarkKey::for_host(&h, p).unwrap();
    assert!(matches!(watermark_embed(&h, &[1.0; 19], &[1.0; 20], &key), Err(Error::Range(_))));

    let flat = ComplexField::from_real(4, 4, 1.0, 1.0, &[1.0; 16]).unwrap();
    let tied = WatermarkParams { q: 0, l: 4, backend: Backend::Ccc, ..WatermarkParams::default() };
    let a = WatermarkKey::for_host(&flat, tied).unwrap();
    let b = WatermarkKey::for_host(&flat, tied).unwrap();
    assert_eq!(a.permutation(), b.permutation());
    let mut sorted = a.permutation().to_vec();
    sorted.sort_unstable();
    assert_eq!(sorted, (0..16).collect::<Vec<_>>());
}

#[test]
fn detector_linearity_and_zero_candidates() {
    let h = host(64);
    let key = WatermarkKey::for_host(&h, small_params()).unwrap();
    let (w1, w2) = ramp(256);
    let s = common::random_field(64, 64, 0.1567, 2);
    let t = common::random_field(64, 64, 0.1567, 3);
    let (a, b) = (C64::new(1.5, -0.5), C64::new(-0.25, 2.0));
    let mut mix = s.clone().scale(a);
    for (z, v) in mix.data_mut().iter_mut().zip(t.data()) {
        *z += v * b;
    }
    let lhs = detector_response(&mix, &w1, &w2, &key).unwrap();
    let rhs = a * detector_response(&s, &w1, &w2, &key).unwrap() + b * detector_response(&t, &w1, &w2, &key).unwrap();
    assert!((lhs - rhs).norm() < 1e-9 * rhs.norm());
    let zeros = vec![0.0; 256];
    assert_eq!(detector_response(&s, &zeros, &zeros, &key).unwrap(), C64::new(0.0, 0.0));
}

#[test]
fn watermark_with_paper_parameters() {
    let h = host(256);
    let (w1, w2) = (logo(64, 0), logo(64, 1));
    let ccc = WatermarkKey::for_host(&h, WatermarkParams::default()).unwrap();
    let wm = watermark_embed(&h, &w1, &w2, &ccc).unwrap();
    let q = psnr(&h.real_part(), &wm.real_part(), 255.0).unwrap();
    assert!((q - 37.2).abs() <= 3.0, "{q}");

    let noisy = add_gaussian_noise(&wm, 10.0, 7).unwrap();
    let (e1, e2) = watermark_extract(&noisy, &h, &ccc).unwrap();
    for p in [psnr(&w1, &e1, 255.0).unwrap(), psnr(&w2, &e2, 255.0).unwrap()] {
        assert!((p - 15.0).abs() <= 3.0, "{p}");
    }

    let sweep = detection_sweep(&noisy, &w1, &w2, &ccc, 1000, 199, 8).unwrap();
    assert!(sweep.detected());
    assert_eq!(sweep.normalized[199], 1.0);

    let frft = WatermarkKey::for_host(&h, WatermarkParams { backend: Backend::Dfrft2, ..WatermarkParams::default() }).unwrap();
    let wm2 = watermark_embed(&h, &w1, &w2, &frft).unwrap();
    let noisy2 = add_gaussian_noise(&wm2, 10.0, 7).unwrap();
    let sweep2 = detection_sweep(&noisy2, &w1, &w2, &frft, 1000, 199, 8).unwrap();
    assert!(sweep.wrong_variance < sweep2.wrong_variance, "{} vs {}", sweep.wrong_variance, sweep2.wrong_variance);
}

fn image(n: usize) -> ComplexField {
    test_field(n, common::natural(n)).unwrap()
}

#[test]
fn encryption_roundtrip_and_determinism() {
    let img = image(64);
    for backend in [Backend::Dhgf, Backend::Ccc] {
        let key = CryptoKey::generate(deg(40.0), 16, 1).unwrap().with_backend(backend);
        let enc = encrypt(&img, &key).unwrap();
        assert_eq!(enc.image, encrypt(&img, &key).unwrap().image);
        let dec = decrypt(&enc.image, &enc.meta, &key).unwrap();
        assert!(psnr(&img.real_part(), &dec.real_part(), 255.0).unwrap() >= 40.0);
    }
}

#[test]
fn encryption_key_sensitivity() {
    let img = image(64);
    let key = CryptoKey::generate(deg(40.0), 16, 2).unwrap();
    let enc = encrypt(&img, &key).unwrap();
    for plane in [0, 5, 15] {
        let mut k = key.clone();
        k.x0[plane] -= 1e-12;
        assert!(nrmse(&img, &decrypt(&enc.image, &enc.meta, &k).unwrap()).unwrap() > 0.5);
    }
    let mut k = key.clone();
    k.alpha = deg(40.0001);
    assert!(nrmse(&img, &decrypt(&enc.image, &enc.meta, &k).unwrap()).unwrap() > 0.5);
}

#[test]
fn partial_encryption() {
    let img = image(64);
    let key = CryptoKey::generate(deg(70.0), 16, 3).unwrap();
    let full = encrypt(&img, &key).unwrap();
    assert_eq!(encrypt(&img, &key.clone().with_region(Some(64))).unwrap().image, full.image);

    let part = key.with_region(Some(28));
    let enc = encrypt(&img, &part).unwrap();
    assert!(nrmse(&img, &enc.image).unwrap() > 0.1);
    let dec = decrypt(&enc.image, &enc.meta, &part).unwrap();
    assert!(psnr(&img.real_part(), &dec.real_part(), 255.0).unwrap() >= 40.0);
    assert!(matches!(encrypt(&img, &part.clone().with_region(Some(65))), Err(Error::Range(_))));
}

#[test]
fn crypto_key_validation() {
    for bad in [0.0, 0.5, 1.0] {
        let key = CryptoKey::new(deg(40.0), vec![0.3, bad]);
        assert!(matches!(key, Err(Error::WeakKey(_))), "{bad}");
    }
    assert!(matches!(CryptoKey::generate(deg(40.0), 0, 1), Err(Error::Range(_))));
    assert!(matches!(CryptoKey::generate(deg(40.0), 33, 1), Err(Error::Range(_))));
    let singular = CryptoKey::generate(deg(180.0), 8, 1).unwrap().with_backend(Backend::Ccc);
    assert!(matches!(encrypt(&image(16), &singular), Err(Error::SingularAngle { .. })));
}
