mod common;

use std::path::{Path, PathBuf};
use std::process::Command;

use gyrator::io::{read_csv, read_gyrc, read_pgm, sidecar_path, write_gyrc, write_pgm, PgmImage};
use gyrator::{nrmse, Error};

fn run(args: &[&str]) -> (gyrator::Result<()>, String) {
    let mut out = Vec::new();
    let argv = std::iter::once("gyrator").chain(args.iter().copied());
    let r = gyrator::cli::run(argv, &mut out);
    (r, String::from_utf8(out).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (r, out) = run(args);
    r.unwrap_or_else(|e| panic!("{args:?}: {e}"));
    out
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gyrator"))
}

fn gray(n: usize, f: impl Fn(usize, usize) -> u16) -> PgmImage {
    PgmImage {
        width: n,
        height: n,
        maxval: 255,
        pixels: (0..n * n).map(|i| f(i / n, i % n)).collect(),
    }
}

fn column(path: &Path, name: &str) -> Vec<String> {
    let (header, rows) = read_csv(path).unwrap();
    let i = header.iter().position(|h| h == name).unwrap();
    rows.into_iter().map(|r| r[i].clone()).collect()
}

#[test]
fn exit_codes_from_the_binary() {
    let dir = common::scratch("cli-exit");
    let img = dir.join("img.pgm");
    write_pgm(&img, &gray(8, |i, j| (i * 8 + j) as u16)).unwrap();
    let out = dir.join("o.gyrc");

    let st = bin().arg("--help").status().unwrap();
    assert_eq!(st.code(), Some(0));
    let st = bin().args(["transform", "--alpha", "30"]).status().unwrap();
    assert_eq!(st.code(), Some(2));

    let o = bin()
        .args(["transform", "--alpha", "30", "--method", "dft", "--du", "0.5"])
        .args(["--in", s(&img), "--out", s(&out)])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("dft"));

    let st = bin()
        .env("GYRATOR_THREADS", "0")
        .args(["transform", "--alpha", "30", "--in", s(&img), "--out", s(&out)])
        .status()
        .unwrap();
    assert_eq!(st.code(), Some(2));

    let st = bin()
        .args(["transform", "--alpha", "30", "--in", s(&dir.join("missing.pgm")), "--out", s(&out)])
        .status()
        .unwrap();
    assert_eq!(st.code(), Some(3));

    let key = dir.join("k.key");
    ok(&["keygen", "crypto", "--alpha", "180", "--backend", "ccc", "--bits", "8", "--out", s(&key)]);
    let st = bin()
        .args(["crypt", "encrypt", "--key", s(&key), "--in", s(&img), "--out", s(&out)])
        .status()
        .unwrap();
    assert_eq!(st.code(), Some(4));

    let st = bin()
        .env("GYRATOR_THREADS", "2")
        .args(["transform", "--alpha", "30", "--in", s(&img), "--out", s(&out)])
        .status()
        .unwrap();
    assert_eq!(st.code(), Some(0));
}

#[test]
fn transform_identity_and_sidecar() {
    let dir = common::scratch("cli-transform");
    let g = common::random_field(16, 16, common::natural(16), 21);
    let input = dir.join("g.gyrc");
    write_gyrc(&input, &g).unwrap();
    let out = dir.join("o.gyrc");
    ok(&["transform", "--alpha", "0", "--method", "ccc", "--in", s(&input), "--out", s(&out)]);
    assert!(nrmse(&g, &read_gyrc(&out).unwrap()).unwrap() < 1e-10);
    assert!(sidecar_path(&out).exists());

    let mag = dir.join("o.pgm");
    ok(&["transform", "--alpha", "30", "--method", "lcc", "--du", "0.5", "--dv", "0.5", "--in", s(&input), "--out", s(&mag)]);
    let img = read_pgm(&mag).unwrap();
    assert_eq!((img.width, img.height), (16, 16));

    let padded = dir.join("p.gyrc");
    ok(&["transform", "--alpha", "30", "--method", "dft", "--pad", "32", "--in", s(&input), "--out", s(&padded)]);
    assert_eq!(read_gyrc(&padded).unwrap().shape(), (16, 16));

    let (r, _) = run(&["transform", "--alpha", "30", "--method", "ccc", "--du", "1", "--in", s(&input), "--out", s(&out)]);
    match r {
        Err(Error::Usage(m)) => assert!(m.contains("the requirements are"), "{m}"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn bench_counts() {
    let dir = common::scratch("cli-bench");
    let csv = dir.join("b.csv");
    let out = ok(&["bench", "--sizes", "256", "--repeats", "0", "--out", s(&csv)]);
    assert!(out.contains("holds: true"));
    let methods = column(&csv, "method");
    let counts = column(&csv, "count");
    let dft = methods.iter().position(|m| m == "dft").unwrap();
    assert_eq!(counts[dft], "2621440");
}

#[test]
fn verify_gaussian_at_a_quarter_turn() {
    let dir = common::scratch("cli-verify");
    let csv = dir.join("v.csv");
    ok(&["verify", "gaussian", "--alphas", "90", "--methods", "lcc,dft", "--out", s(&csv)]);
    let errs: Vec<f64> = column(&csv, "nrmse").iter().map(|v| v.parse().unwrap()).collect();
    assert_eq!(errs.len(), 2);
    assert!(errs.iter().all(|&e| e <= 1e-6), "{errs:?}");
}

#[test]
fn modes_writes_panels() {
    let dir = common::scratch("cli-modes");
    ok(&["modes", "--n", "32", "--alpha-list", "0,45,90", "--out-dir", s(&dir)]);
    assert_eq!(column(&dir.join("modes.csv"), "file").len(), 3);
    assert!(dir.join("mode_01_45.pgm").exists());
}

#[test]
fn watermark_roundtrip() {
    let dir = common::scratch("cli-watermark");
    let (host, w1, w2) = (dir.join("host.pgm"), dir.join("w1.pgm"), dir.join("w2.pgm"));
    write_pgm(&host, &gray(32, |i, j| ((i * 7 + j * 3) % 200 + 20) as u16)).unwrap();
    write_pgm(&w1, &gray(8, |i, j| if (i + j) % 2 == 0 { 255 } else { 0 })).unwrap();
    write_pgm(&w2, &gray(8, |i, _| (i * 30) as u16)).unwrap();
    let key = dir.join("wm.key");
    ok(&["keygen", "watermark", "--q", "100", "--l", "64", "--out", s(&key)]);

    let marked = dir.join("marked.gyrc");
    let report = ok(&[
        "watermark", "embed", "--key", s(&key), "--host", s(&host), "--w1", s(&w1), "--w2", s(&w2), "--out", s(&marked),
    ]);
    assert!(report.contains("PSNR"));
    let (e1, e2) = (dir.join("e1.pgm"), dir.join("e2.pgm"));
    ok(&[
        "watermark", "extract", "--key", s(&key), "--host", s(&host), "--in", s(&marked), "--out-w1", s(&e1),
        "--out-w2", s(&e2),
    ]);
    assert_eq!(std::fs::read(&e1).unwrap(), std::fs::read(&w1).unwrap());
    assert_eq!(std::fs::read(&e2).unwrap(), std::fs::read(&w2).unwrap());

    let csv = dir.join("d.csv");
    ok(&[
        "watermark", "detect", "--key", s(&key), "--host", s(&host), "--in", s(&marked), "--w1", s(&w1), "--w2",
        s(&w2), "--candidates", "50", "--correct", "10", "--out", s(&csv),
    ]);
    assert_eq!(column(&csv, "candidate").len(), 50);
}

#[test]
fn crypt_roundtrip() {
    let dir = common::scratch("cli-crypt");
    let img = dir.join("img.pgm");
    write_pgm(&img, &gray(32, |i, j| ((i * 13 + j * 5) % 256) as u16)).unwrap();
    let key = dir.join("c.key");
    ok(&["keygen", "crypto", "--alpha", "40", "--seed", "3", "--out", s(&key)]);
    let enc: PathBuf = dir.join("enc.gyrc");
    ok(&["crypt", "encrypt", "--key", s(&key), "--in", s(&img), "--out", s(&enc)]);
    assert!(dir.join("enc.gyrc.quant").exists());
    let dec = dir.join("dec.pgm");
    ok(&["crypt", "decrypt", "--key", s(&key), "--in", s(&enc), "--out", s(&dec)]);
    assert_eq!(std::fs::read(&dec).unwrap(), std::fs::read(&img).unwrap());
}

#[test]
fn sample_demo_summary() {
    let dir = common::scratch("cli-sample");
    ok(&["sample-demo", "--out-dir", s(&dir)]);
    let errs: Vec<f64> = column(&dir.join("summary.csv"), "nrmse").iter().map(|v| v.parse().unwrap()).collect();
    assert!(errs[0] <= 0.05 && errs[1] >= 0.3, "{errs:?}");
}
