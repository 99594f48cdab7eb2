mod common;

use gyrator::spectral::linear_convolve2;
use gyrator::transforms::{
    dft_output_intervals, dgt_ccc, dgt_dft, dgt_direct, dgt_lcc, dgt_lcc_inverse, swapped_dft,
};
use gyrator::spectral::linear_deconvolve2;
use gyrator::{dgt_auto, nrmse, reflect, Angle, ComplexField, DgtMethod, Error, C64};

fn deg(d: f64) -> Angle {
    Angle::from_degrees(d)
}

#[test]
fn direct_exact_angle_conventions() {
    let g = common::random_field(5, 6, 0.4, 1);
    assert_eq!(dgt_direct(&g, deg(0.0), 0.4, 0.4).unwrap(), g);
    assert!(nrmse(&reflect(&g), &dgt_direct(&g, deg(180.0), 0.4, 0.4).unwrap()).unwrap() < 1e-15);
    assert!(matches!(dgt_direct(&g, deg(2.0), 0.4, 0.4), Err(Error::SingularAngle { .. })));
}

#[test]
fn direct_at_quarter_turn_is_a_swapped_dft() {
    let g = common::random_field(5, 5, 0.5, 2);
    let s = swapped_dft(&g);
    let d = dgt_direct(&g, deg(90.0), s.dx(), s.dy()).unwrap();
    assert!(nrmse(&s, &d).unwrap() < 1e-12);
}

#[test]
fn lcc_matches_direct_and_has_full_extent() {
    let g = common::random_field(6, 6, 0.5, 3);
    let out = dgt_lcc(&g, deg(60.0), 0.5, 0.5).unwrap();
    assert!(nrmse(&dgt_direct(&g, deg(60.0), 0.5, 0.5).unwrap(), &out.central()).unwrap() <= 1e-9);
    let g = common::random_field(7, 4, 0.5, 4);
    assert!(nrmse(&dgt_direct(&g, deg(130.0), 0.3, 0.7).unwrap(), &dgt_lcc(&g, deg(130.0), 0.3, 0.7).unwrap().central()).unwrap() <= 1e-9);
    let big = ComplexField::zeros(256, 256, 0.1, 0.1).unwrap();
    assert_eq!(dgt_lcc(&big, deg(60.0), 0.1, 0.1).unwrap().full().shape(), (766, 766));
}

#[test]
fn lcc_inverse_and_minus_alpha() {
    let g = common::random_field(8, 8, 0.6, 5);
    let a = deg(45.0);
    let out = dgt_lcc(&g, a, 0.6, 0.6).unwrap();
    assert!(nrmse(&g, &out.invert(a).unwrap()).unwrap() <= 1e-8);
    let back = dgt_lcc(&out.central(), -a, 0.6, 0.6).unwrap().central();
    assert!(nrmse(&g, &back).unwrap() > 0.01);
    let central = out.central();
    assert!(matches!(dgt_lcc_inverse(&central, a, out.input_grid()), Err(Error::InsufficientData(_))));
}

#[test]
fn deconvolution_of_delta_convolution() {
    let g = common::random_field(4, 5, 1.0, 6);
    let mut k = ComplexField::zeros(7, 9, 1.0, 1.0).unwrap();
    k.set(3, 4, C64::new(1.0, 0.0));
    let full = linear_convolve2(&g, &k).unwrap();
    assert!(nrmse(&g, &linear_deconvolve2(&full, &k, 4, 5).unwrap()).unwrap() < 1e-12);
}

#[test]
fn dft_intervals_match_direct_and_parseval() {
    let g = ComplexField::zeros(512, 512, 0.07, 0.07).unwrap();
    let (du, dv) = dft_output_intervals(&g, deg(150.0));
    assert!((dv - 0.087_66).abs() < 1e-5 && (du - dv).abs() < 1e-15);

    let g = common::random_field(8, 8, 0.5, 7);
    let a = deg(100.0);
    let out = dgt_dft(&g, a).unwrap();
    assert!(nrmse(&dgt_direct(&g, a, out.dx(), out.dy()).unwrap(), &out).unwrap() <= 1e-9);
    let e_in = g.energy() * g.dx() * g.dy();
    let e_out = out.energy() * out.dx() * out.dy();
    assert!((e_in - e_out).abs() < 1e-9 * e_in);
    assert!(nrmse(&g, &dgt_dft(&out, -a).unwrap()).unwrap() < 1e-9);
}

#[test]
fn ccc_identity_energy_reversibility() {
    let g = common::random_field(9, 8, 0.8, 8);
    assert!(nrmse(&g, &dgt_ccc(&g, deg(0.0)).unwrap()).unwrap() < 1e-10);
    let a = deg(73.0);
    let out = dgt_ccc(&g, a).unwrap();
    assert_eq!((out.dx(), out.dy()), (g.dx(), g.dy()));
    assert!((out.energy() - g.energy()).abs() < 1e-9 * g.energy());
    assert!(nrmse(&g, &dgt_ccc(&out, -a).unwrap()).unwrap() < 1e-9);
    assert!(matches!(dgt_ccc(&g, deg(178.0)), Err(Error::SingularAngle { .. })));
}

#[test]
fn auto_dispatch_examples() {
    let g = common::random_field(8, 8, 0.5, 9);
    assert_eq!(dgt_auto(&g, deg(180.0), &DgtMethod::Ccc).unwrap(), reflect(&g));

    let a = deg(15.0);
    let auto = dgt_auto(&g, a, &DgtMethod::lcc(0.5, 0.5)).unwrap();
    let direct = dgt_direct(&g, a, auto.dx(), auto.dy()).unwrap();
    assert!(nrmse(&direct, &auto).unwrap() <= 1e-6);

    let via = dgt_auto(&g, deg(178.0), &DgtMethod::Ccc).unwrap();
    assert!(nrmse(&dgt_ccc(&reflect(&g), deg(-2.0)).unwrap(), &via).unwrap() < 1e-12);

    for m in [DgtMethod::Direct { du: 0.5, dv: 0.5 }, DgtMethod::lcc(0.5, 0.5), DgtMethod::Dft, DgtMethod::Ccc] {
        assert!(nrmse(&g, &dgt_auto(&g, Angle::ZERO, &m).unwrap()).unwrap() < 1e-12);
        assert!(dgt_auto(&g, deg(1.0), &m).is_ok());
    }
}

#[test]
fn dft_dispatch_intervals_follow_the_quarter_turn() {
    let g = common::random_field(8, 8, 0.5, 10);
    let a = deg(3.0);
    let out = dgt_auto(&g, a, &DgtMethod::Dft).unwrap();
    let lcc = dgt_auto(&g, a, &DgtMethod::lcc(out.dx(), out.dy())).unwrap();
    assert!(nrmse(&lcc, &out).unwrap() < 1e-9);
    let expected = (a - deg(90.0)).sin().abs() * 0.5;
    assert!((out.dx() - expected).abs() < 1e-12, "{} vs {expected}", out.dx());
}
