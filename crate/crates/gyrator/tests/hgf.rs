mod common;

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2};

use gyrator::hgf::{
    build_shell_matrices, dfrft2_separable, dgt_dhgf_cached, dgt_dhgf_direct, dgt_dhgf_factored, dgt_dhgf_fast,
    discrete_hgf_basis, hgf2, normalized_sampled_hgf, rhgf, sign_changes, wigner_big_d, wigner_d, HgfBasis,
};
use gyrator::{nrmse, Angle, ComplexField, Error, C64};

fn deg(d: f64) -> Angle {
    Angle::from_degrees(d)
}

fn basis_error(basis: &HgfBasis, k: usize) -> f64 {
    let n = basis.n();
    let s = normalized_sampled_hgf(k, n, basis.interval());
    let d = basis.column(k);
    let err: f64 = s.iter().zip(&d).map(|(a, b)| (a - b).powi(2)).sum();
    (err / s.iter().map(|a| a * a).sum::<f64>()).sqrt()
}

#[test]
fn basis_is_orthonormal_and_ordered() {
    for n in [4, 16, 64] {
        let b = discrete_hgf_basis(n).unwrap();
        assert!(b.orthonormality_error() < 1e-10, "n = {n}");
        for k in 0..n {
            assert_eq!(sign_changes(&b.column(k)), k);
        }
    }
    assert!(discrete_hgf_basis(4).unwrap().orthonormality_error() < 1e-12);
    assert!(discrete_hgf_basis(1).is_err());
}

#[test]
fn basis_accuracy_degrades_with_order() {
    let b = HgfBasis::cached(256).unwrap();
    assert!(b.orthonormality_error() < 1e-10);
    assert!(basis_error(&b, 0) <= 1e-3);
    assert!(basis_error(&b, 250) > basis_error(&b, 10));
}

#[test]
fn hgf2_energy_parity_and_range() {
    let b = discrete_hgf_basis(9).unwrap();
    for (k, l) in [(0, 0), (3, 5), (8, 8)] {
        assert!((hgf2(k, l, &b).unwrap().energy() - 1.0).abs() < 1e-12);
    }
    let h = hgf2(1, 0, &b).unwrap();
    for m in 0..9 {
        for q in 0..9 {
            assert!((h.get(m, q) + h.get(8 - m, q)).norm() < 1e-12);
            assert!((h.get(m, q) - h.get(m, 8 - q)).norm() < 1e-12);
        }
    }
    assert!(matches!(hgf2(9, 0, &b), Err(Error::Range(_))));
}

#[test]
fn wigner_examples_and_orthogonality() {
    assert_eq!(wigner_d(0, 0, 0, 1.234).unwrap(), 1.0);
    assert!((wigner_d(1, 1, 1, FRAC_PI_2).unwrap() - FRAC_1_SQRT_2).abs() < 1e-15);
    assert!(wigner_d(2, 4, 0, 0.3).is_err());
    assert!(wigner_d(2, 1, 0, 0.3).is_err());
    for j2 in 0..=16u32 {
        let ms: Vec<i32> = (0..=j2 as i32).map(|i| j2 as i32 - 2 * i).collect();
        for &a in &ms {
            for &b in &ms {
                let s: f64 = ms
                    .iter()
                    .map(|&m| wigner_d(j2, m, a, 0.7).unwrap() * wigner_d(j2, m, b, 0.7).unwrap())
                    .sum();
                assert!((s - if a == b { 1.0 } else { 0.0 }).abs() < 1e-12);
            }
        }
    }
    for (m1, m2) in [(1, 1), (1, -1), (3, -1)] {
        let d = wigner_big_d(3, m1, m2, -FRAC_PI_2, 0.0, FRAC_PI_2).unwrap();
        assert!((d - C64::new(if m1 == m2 { 1.0 } else { 0.0 }, 0.0)).norm() < 1e-15);
        let d = wigner_big_d(3, m1, m2, 0.4, 1.1, -0.9).unwrap();
        assert!((d.norm() - wigner_d(3, m1, m2, 1.1).unwrap().abs()).abs() < 1e-15);
    }
}

#[test]
fn rhgf_examples() {
    let b = discrete_hgf_basis(8).unwrap();
    assert_eq!(rhgf(0, 0, &b).unwrap(), hgf2(0, 0, &b).unwrap());
    let expected = ComplexField::from_fn(8, 8, b.interval(), b.interval(), |_, _| C64::new(0.0, 0.0)).unwrap();
    let mut e = expected;
    let terms = [(0, 2, 0.5), (1, 1, -FRAC_1_SQRT_2), (2, 0, 0.5)];
    for (k, l, c) in terms {
        let h = hgf2(k, l, &b).unwrap();
        for (z, v) in e.data_mut().iter_mut().zip(h.data()) {
            *z += v * c;
        }
    }
    assert!(nrmse(&e, &rhgf(0, 2, &b).unwrap()).unwrap() < 1e-12);
    assert!(matches!(rhgf(8, 0, &b), Err(Error::Range(_))));
}

#[test]
fn dhgf_direct_properties() {
    let n = 16;
    let b = discrete_hgf_basis(n).unwrap();
    let g = common::random_field(n, n, b.interval(), 1);
    assert!(nrmse(&g, &dgt_dhgf_direct(&g, Angle::ZERO, &b).unwrap()).unwrap() < 1e-10);
    let two = dgt_dhgf_direct(&dgt_dhgf_direct(&g, deg(25.0), &b).unwrap(), deg(20.0), &b).unwrap();
    assert!(nrmse(&dgt_dhgf_direct(&g, deg(45.0), &b).unwrap(), &two).unwrap() < 1e-10);
    let out = dgt_dhgf_direct(&g, deg(33.0), &b).unwrap();
    assert!((out.energy() - g.energy()).abs() < 1e-10 * g.energy());
    assert!(matches!(
        dgt_dhgf_direct(&common::random_field(16, 8, 1.0, 2), deg(10.0), &b),
        Err(Error::Shape(_))
    ));
}

#[test]
fn fast_factored_and_direct_agree() {
    let n = 16;
    let b = discrete_hgf_basis(n).unwrap();
    let g = common::random_field(n, n, b.interval(), 3);
    let a = deg(40.0);
    let shells = build_shell_matrices(n, a).unwrap();
    assert!(shells.unitarity_error() < 1e-10);
    let fast = dgt_dhgf_fast(&g, a, &b, &shells).unwrap();
    assert!(nrmse(&dgt_dhgf_direct(&g, a, &b).unwrap(), &fast).unwrap() <= 1e-9);
    assert!(nrmse(&fast, &dgt_dhgf_factored(&g, a, &b).unwrap()).unwrap() <= 1e-12);
    assert!(nrmse(&fast, &dgt_dhgf_cached(&g, a).unwrap()).unwrap() <= 1e-12);

    let zero = build_shell_matrices(n, Angle::ZERO).unwrap();
    for l in 0..zero.shell_count() {
        let m = zero.matrix(l);
        assert!((m - nalgebra::DMatrix::<C64>::identity(m.nrows(), m.ncols())).amax_abs() < 1e-12);
    }
    let other = build_shell_matrices(n, deg(41.0)).unwrap();
    assert!(matches!(dgt_dhgf_fast(&g, a, &b, &other), Err(Error::Config(_))));
}

trait AmaxAbs {
    fn amax_abs(&self) -> f64;
}

impl AmaxAbs for nalgebra::DMatrix<C64> {
    fn amax_abs(&self) -> f64 {
        self.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

#[test]
fn dhgf_reversibility_and_unitarity() {
    let g = common::random_field(16, 16, common::natural(16), 4);
    let a = deg(123.0);
    let out = dgt_dhgf_cached(&g, a).unwrap();
    assert!((out.energy() - g.energy()).abs() < 1e-10 * g.energy());
    assert!(nrmse(&g, &dgt_dhgf_cached(&out, -a).unwrap()).unwrap() < 1e-9);
}

#[test]
fn separable_dfrft_baseline() {
    let n = 12;
    let b = discrete_hgf_basis(n).unwrap();
    let g = common::random_field(n, n, b.interval(), 5);
    assert!(nrmse(&g, &dfrft2_separable(&g, Angle::ZERO, Angle::ZERO, &b).unwrap()).unwrap() < 1e-10);
    let step = dfrft2_separable(&g, deg(10.0), deg(-30.0), &b).unwrap();
    let two = dfrft2_separable(&step, deg(25.0), deg(70.0), &b).unwrap();
    let one = dfrft2_separable(&g, deg(35.0), deg(40.0), &b).unwrap();
    assert!(nrmse(&one, &two).unwrap() < 1e-10);
    let (ax, ay) = (deg(17.0), deg(-52.0));
    let h = hgf2(3, 5, &b).unwrap();
    let expected = h.clone().scale(C64::from_polar(1.0, -(3.0 * ax.radians() + 5.0 * ay.radians())));
    assert!(nrmse(&expected, &dfrft2_separable(&h, ax, ay, &b).unwrap()).unwrap() < 1e-10);
}
