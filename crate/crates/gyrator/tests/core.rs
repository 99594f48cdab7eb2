mod common;

use std::f64::consts::{FRAC_PI_2, PI};

use gyrator::lct::{compose, gyrator_matrix, lcc_factors, product, AbcdMatrix};
use gyrator::{nrmse, reflect, Angle, ComplexField, Error, C64};

fn field(values: &[f64]) -> ComplexField {
    ComplexField::from_real(1, values.len(), 1.0, 1.0, values).unwrap()
}

#[test]
fn nrmse_examples() {
    let g = common::random_field(4, 5, 1.0, 1);
    assert_eq!(nrmse(&g, &g).unwrap(), 0.0);
    assert_eq!(nrmse(&field(&[1.0, 0.0]), &field(&[0.0, 0.0])).unwrap(), 1.0);
    assert!((nrmse(&field(&[3.0, 4.0]), &field(&[3.0, 0.0])).unwrap() - 0.8).abs() < 1e-15);
    assert!(nrmse(&field(&[0.0, 0.0]), &field(&[1.0, 0.0])).unwrap().is_infinite());
    assert!(matches!(nrmse(&field(&[1.0]), &field(&[1.0, 2.0])), Err(Error::Shape(_))));
}

#[test]
fn nrmse_is_scale_covariant() {
    let (g, h) = (common::random_field(6, 6, 1.0, 2), common::random_field(6, 6, 1.0, 3));
    let c = C64::new(-2.5, 0.7);
    let e = nrmse(&g, &h).unwrap();
    assert!((nrmse(&g.clone().scale(c), &h.clone().scale(c)).unwrap() - e).abs() < 1e-12);
}

#[test]
fn gyrator_matrix_examples() {
    assert!(gyrator_matrix(Angle::ZERO).max_abs_diff(&AbcdMatrix::identity()) < 1e-15);
    let q = gyrator_matrix(Angle::from_radians(FRAC_PI_2));
    assert!(q.a().iter().flatten().all(|v| v.abs() < 1e-15));
    assert!(q.d().iter().flatten().all(|v| v.abs() < 1e-15));
    assert!((q.b()[0][1] - 1.0).abs() < 1e-15 && (q.b()[1][0] - 1.0).abs() < 1e-15);
    assert!((q.c()[0][1] + 1.0).abs() < 1e-15 && (q.c()[1][0] + 1.0).abs() < 1e-15);
}

#[test]
fn gyrator_matrices_are_symplectic_and_additive() {
    use rand::Rng;
    let mut r = common::rng(4);
    for _ in 0..1000 {
        let a = Angle::from_radians(r.random_range(-10.0..10.0));
        assert!(gyrator_matrix(a).symplectic_residual() < 1e-12);
    }
    for _ in 0..50 {
        let (a, b) = (Angle::from_radians(r.random_range(-PI..PI)), Angle::from_radians(r.random_range(-PI..PI)));
        let m = compose(&gyrator_matrix(a), &gyrator_matrix(b)).unwrap();
        assert!(m.max_abs_diff(&gyrator_matrix(a + b)) < 1e-12);
        let id = compose(&gyrator_matrix(a), &AbcdMatrix::identity()).unwrap();
        assert!(id.max_abs_diff(&gyrator_matrix(a)) < 1e-15);
    }
}

#[test]
fn compose_is_associative() {
    let m: Vec<AbcdMatrix> = [0.3, 1.1, -2.0].iter().map(|&r| gyrator_matrix(Angle::from_radians(r))).collect();
    let left = compose(&compose(&m[0], &m[1]).unwrap(), &m[2]).unwrap();
    let right = compose(&m[0], &compose(&m[1], &m[2]).unwrap()).unwrap();
    assert!(left.max_abs_diff(&right) < 1e-12);
}

#[test]
fn lcc_decomposition_reproduces_the_gyrator_matrix() {
    let a = Angle::from_degrees(60.0);
    let p = product(&lcc_factors(a).unwrap()).unwrap();
    assert!(p.max_abs_diff(&gyrator_matrix(a)) < 1e-12);
}

#[test]
fn reflect_examples() {
    let sym = ComplexField::from_fn(5, 5, 1.0, 1.0, |m, n| {
        let (a, b) = (m as f64, n as f64);
        C64::new(a * a + b * b + a * b, 0.0)
    })
    .unwrap();
    assert_eq!(reflect(&sym), sym);

    let mut delta = ComplexField::zeros(5, 5, 1.0, 1.0).unwrap();
    delta.set(3, 2, C64::new(1.0, 0.0));
    let r = reflect(&delta);
    assert_eq!(r.at_centered(-1, 0), Some(C64::new(1.0, 0.0)));
    assert_eq!(r.energy(), 1.0);

    let g = common::random_field(7, 5, 1.0, 5);
    assert_eq!(reflect(&reflect(&g)), g);
}
