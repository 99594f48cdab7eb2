#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gyrator::{ComplexField, C64};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_field(n1: usize, n2: usize, d: f64, seed: u64) -> ComplexField {
    let mut r = rng(seed);
    ComplexField::from_fn(n1, n2, d, d, |_, _| C64::new(r.random::<f64>() - 0.5, r.random::<f64>() - 0.5)).unwrap()
}

pub fn natural(n: usize) -> f64 {
    (2.0 * std::f64::consts::PI / n as f64).sqrt()
}

pub fn scratch(tag: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("gyrator-test-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
