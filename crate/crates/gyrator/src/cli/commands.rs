//! Implementations of the subcommands.

use std::f64::consts::PI;
use std::io::Write;
use std::path::{Path, PathBuf};

use super::*;
use crate::angle::Angle;
use crate::apps::{
    add_gaussian_noise, angular_rsd, decrypt, detection_sweep, encrypt, mode_convert, mode_origin, sampling_demo,
    watermark_embed, watermark_extract, Backend, CryptoKey, SamplingDemoConfig, WatermarkKey, WatermarkParams,
};
use crate::field::{psnr, ComplexField};
use crate::io::{
    crypto_key_to_string, parse_crypto_key, parse_quant_meta, parse_watermark_params, quant_meta_to_string,
    read_gyrc, read_pgm, watermark_params_to_string, write_csv, write_gyrc, write_interval_sidecar, write_pgm, Emit,
    PgmImage,
};
use crate::oracle::{
    accuracy_sweep, additivity_input, ccc_additivity_nrmse, count_chain_holds, multiplication_count, time_method,
    InputKind, MethodKind,
};
use crate::transforms::{dgt_auto_with, DgtMethod};

pub(super) fn dispatch(command: Command, out: &mut dyn Write) -> Result<()> {
    match command {
        Command::Transform(a) => transform(a, out),
        Command::Verify(v) => verify(v, out),
        Command::Bench(a) => bench(a, out),
        Command::Modes(a) => modes(a, out),
        Command::Watermark(w) => watermark(w, out),
        Command::Crypt(c) => crypt(c, out),
        Command::SampleDemo(a) => sample_demo(a, out),
        Command::Keygen(k) => keygen(k, out),
    }
}

fn natural_interval(n: usize) -> f64 {
    (2.0 * PI / n as f64).sqrt()
}

/// Reads a GYRC or PGM file, chosen by its magic bytes. `interval` overrides
/// the stored intervals; PGM defaults to `sqrt(2 pi / n)` per axis.
fn load_field(path: &Path, interval: Option<f64>) -> Result<ComplexField> {
    let head = {
        let bytes = std::fs::read(path)?;
        bytes.get(..4).map(<[u8]>::to_vec).unwrap_or_default()
    };
    if head.starts_with(b"GYRC") {
        let g = read_gyrc(path)?;
        match interval {
            Some(d) => g.with_intervals(d, d),
            None => Ok(g),
        }
    } else if head.starts_with(b"P5") {
        let img = read_pgm(path)?;
        let g = img.to_field(1.0)?;
        let (dx, dy) = match interval {
            Some(d) => (d, d),
            None => (natural_interval(img.height), natural_interval(img.width)),
        };
        g.with_intervals(dx, dy)
    } else {
        Err(Error::format(0, format!("{} is neither GYRC nor binary PGM", path.display())))
    }
}

fn emit_of(emit: Option<EmitArg>, path: &Path) -> EmitArg {
    emit.unwrap_or_else(|| {
        if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("gyrc")) {
            EmitArg::Gyrc
        } else {
            EmitArg::Mag
        }
    })
}

/// Writes the field in the requested representation plus its interval sidecar.
fn save_field(path: &Path, g: &ComplexField, emit: EmitArg, note: &str) -> Result<()> {
    let pgm = |e| PgmImage::from_field(g, e, 255);
    match emit {
        EmitArg::Gyrc => write_gyrc(path, g)?,
        EmitArg::Mag => write_pgm(path, &pgm(Emit::Magnitude)?)?,
        EmitArg::Phase => write_pgm(path, &pgm(Emit::Phase)?)?,
        EmitArg::Real => write_pgm(path, &pgm(Emit::Real)?)?,
    }
    write_interval_sidecar(path, g, note)
}

fn threshold(deg: f64) -> Result<f64> {
    if !(0.0..90.0).contains(&deg) {
        return Err(Error::Usage(format!("threshold {deg}° must lie in [0, 90)")));
    }
    Ok(deg.to_radians().sin())
}

fn transform(a: TransformArgs, out: &mut dyn Write) -> Result<()> {
    let alpha = Angle::from_degrees(a.alpha);
    let given = a.du.is_some() || a.dv.is_some();
    let constraint = match a.method {
        MethodArg::Dft => Some(("dft", "du = 2 pi |sin a| / (n2 dy) and dv = 2 pi |sin a| / (n1 dx)")),
        MethodArg::Ccc => Some(("ccc", "du = dx and dv = dy")),
        MethodArg::Dhgf => Some(("dhgf", "du = dv = dx = dy = sqrt(2 pi / n)")),
        _ => None,
    };
    if let (true, Some((name, c))) = (given, constraint) {
        return Err(Error::Usage(format!(
            "--du/--dv cannot be set for {name}: the output intervals are fixed by alpha and the input grid; \
             the requirements are {c}. Use --method direct or lcc for free output intervals"
        )));
    }
    let g = load_field(&a.input, a.interval)?;
    let (n1, n2) = g.shape();
    let du = a.du.or(a.dv).unwrap_or(g.dx());
    let dv = a.dv.or(a.du).unwrap_or(g.dy());
    let (method, swaps) = match a.method {
        MethodArg::Direct => (DgtMethod::Direct { du, dv }, true),
        MethodArg::Lcc => (DgtMethod::lcc(du, dv), true),
        MethodArg::Auto if given => (DgtMethod::lcc(du, dv), true),
        MethodArg::Dft => (DgtMethod::Dft, true),
        MethodArg::Ccc | MethodArg::Auto => (DgtMethod::Ccc, false),
        MethodArg::Dhgf => (DgtMethod::Dhgf, false),
    };
    let tau = threshold(a.threshold_deg)?;
    let result = match a.pad {
        Some(p) => {
            if p < n1.max(n2) {
                return Err(Error::Usage(format!("--pad {p} smaller than the {n1}x{n2} input")));
            }
            let padded = g.zero_pad(p, p)?;
            let full = dgt_auto_with(&padded, alpha, &method, tau)?;
            let (o1, o2) = if swaps { (n2, n1) } else { (n1, n2) };
            full.central_block(o1, o2)?
        }
        None => dgt_auto_with(&g, alpha, &method, tau)?,
    };
    let emit = emit_of(a.emit, &a.out);
    save_field(&a.out, &result, emit, &format!("{} at {} degrees", method.name(), a.alpha))?;
    writeln!(
        out,
        "{} at {}°: {}x{} -> {}x{}, du = {}, dv = {}",
        method.name(),
        a.alpha,
        n1,
        n2,
        result.n1(),
        result.n2(),
        result.dx(),
        result.dy()
    )?;
    Ok(())
}

fn sweep(input: InputKind, n: usize, s: &SweepArgs, out: &mut dyn Write) -> Result<()> {
    let methods = parse_methods(&s.methods)?;
    let alphas: Vec<Angle> = parse_degrees_list(&s.alphas)?
        .into_iter()
        .map(Angle::from_degrees)
        .collect();
    let tau = threshold(s.threshold_deg)?;
    let mut rows = Vec::new();
    for m in methods {
        let res = accuracy_sweep(m, input, n, &alphas, tau)?;
        let worst = res.iter().map(|r| r.nrmse).fold(0.0, f64::max);
        writeln!(out, "{m}: worst NRMSE {worst:.3e} over {} angles", res.len())?;
        rows.extend(
            res.into_iter()
                .map(|r| vec![m.to_string(), format!("{}", r.alpha_deg), format!("{:e}", r.nrmse)]),
        );
    }
    write_csv(&s.out, &["method", "alpha_deg", "nrmse"], rows)
}

fn verify(v: VerifyCommand, out: &mut dyn Write) -> Result<()> {
    match v {
        VerifyCommand::Gaussian(a) => sweep(InputKind::ScaledGaussian { s: a.s }, a.n, &a.sweep, out),
        VerifyCommand::Rhgf(a) => sweep(InputKind::SampledRhgf { k: a.k, l: a.l }, a.n, &a.sweep, out),
        VerifyCommand::Additivity(a) => {
            let angles = parse_degrees_list(&a.alphas)?;
            let [a1, a2] = angles[..] else {
                return Err(Error::Usage(format!("--alphas needs exactly two angles, got '{}'", a.alphas)));
            };
            let sizes = parse_sizes(&a.sizes)?;
            let base = match &a.image {
                Some(p) => read_pgm(p)?.to_field(a.interval)?,
                None => {
                    let n = *sizes.iter().min().expect("parse_sizes returns at least one size");
                    crate::images::test_field(n, a.interval)?
                }
            };
            let mut rows = Vec::new();
            let mut errors = Vec::new();
            for &n in &sizes {
                let g = additivity_input(&base, n)?;
                let e = ccc_additivity_nrmse(&g, Angle::from_degrees(a1), Angle::from_degrees(a2))?;
                writeln!(out, "N = {n}: NRMSE {e:.4}")?;
                errors.push(e);
                rows.push(vec![n.to_string(), a1.to_string(), a2.to_string(), format!("{e:e}")]);
            }
            let decreasing = errors.windows(2).all(|w| w[1] < w[0]);
            writeln!(out, "strictly decreasing: {decreasing}")?;
            write_csv(&a.out, &["n", "alpha1_deg", "alpha2_deg", "nrmse"], rows)
        }
    }
}

fn bench(a: BenchArgs, out: &mut dyn Write) -> Result<()> {
    let sizes = parse_sizes(&a.sizes)?;
    let methods = parse_methods(&a.methods)?;
    let mut rows = Vec::new();
    for &n in &sizes {
        for &m in &methods {
            let count = multiplication_count(m, n);
            let seconds = if a.repeats > 0 && m != MethodKind::Direct {
                Some(time_method(m, n, a.repeats)?)
            } else {
                None
            };
            writeln!(
                out,
                "N = {n} {m}: {count:.0} multiplications{}",
                seconds.map_or(String::new(), |s| format!(", {s:.4} s"))
            )?;
            rows.push(vec![
                n.to_string(),
                m.to_string(),
                format!("{count:.0}"),
                seconds.map_or(String::new(), |s| format!("{s:e}")),
            ]);
        }
        writeln!(out, "N = {n}: dft < ccc < lcc < dhgf < direct holds: {}", count_chain_holds(n))?;
    }
    writeln!(out, "note: DHGF needs fewer multiplications than LCC below about N = 84")?;
    write_csv(&a.out, &["n", "method", "count", "seconds"], rows)
}

fn dgt_method(m: MethodArg, d: f64) -> DgtMethod {
    match m {
        MethodArg::Direct => DgtMethod::Direct { du: d, dv: d },
        MethodArg::Lcc => DgtMethod::lcc(d, d),
        MethodArg::Dft => DgtMethod::Dft,
        MethodArg::Ccc | MethodArg::Auto => DgtMethod::Ccc,
        MethodArg::Dhgf => DgtMethod::Dhgf,
    }
}

fn modes(a: ModesArgs, out: &mut dyn Write) -> Result<()> {
    std::fs::create_dir_all(&a.out_dir)?;
    let method = dgt_method(a.method, natural_interval(a.n));
    let mut rows = Vec::new();
    for (i, deg) in parse_degrees_list(&a.alpha_list)?.into_iter().enumerate() {
        let g = mode_convert(a.k, a.l, Angle::from_degrees(deg), a.n, &method)?;
        let rsd = angular_rsd(&g, 16, mode_origin(&method))?;
        let path = a.out_dir.join(format!("mode_{i:02}_{deg}.pgm"));
        save_field(&path, &g, EmitArg::Mag, &format!("HG({}, {}) at {deg} degrees", a.k, a.l))?;
        writeln!(out, "{deg}°: angular RSD {rsd:.4} -> {}", path.display())?;
        rows.push(vec![deg.to_string(), format!("{rsd:e}"), path.display().to_string()]);
    }
    write_csv(a.out_dir.join("modes.csv"), &["alpha_deg", "angular_rsd", "file"], rows)
}

fn backend(b: BackendArg) -> Backend {
    match b {
        BackendArg::Ccc => Backend::Ccc,
        BackendArg::Dhgf => Backend::Dhgf,
        BackendArg::Dft => Backend::Dft,
        BackendArg::Dfrft2 => Backend::Dfrft2,
    }
}

fn load_host(h: &HostArgs) -> Result<(WatermarkParams, ComplexField)> {
    let params = parse_watermark_params(&std::fs::read_to_string(&h.key)?)?;
    let host = load_field(&h.host, h.interval)?;
    Ok((params, host))
}

fn watermark_pgm(path: &Path, l: usize) -> Result<Vec<f64>> {
    let v = read_pgm(path)?.values();
    if v.len() != l {
        return Err(Error::Range(format!(
            "{} has {} pixels, the key expects {l}",
            path.display(),
            v.len()
        )));
    }
    Ok(v)
}

fn save_watermark(path: &Path, w: &[f64]) -> Result<()> {
    let side = (w.len() as f64).sqrt().round() as usize;
    let (h, wd) = if side * side == w.len() { (side, side) } else { (1, w.len()) };
    let g = ComplexField::from_real(h, wd, 1.0, 1.0, w)?;
    write_pgm(path, &PgmImage::from_field(&g, Emit::Real, 255)?)
}

fn watermark(w: WatermarkCommand, out: &mut dyn Write) -> Result<()> {
    match w {
        WatermarkCommand::Embed {
            host,
            w1,
            w2,
            out: path,
            preview,
        } => {
            let (params, h) = load_host(&host)?;
            let key = WatermarkKey::for_host(&h, params)?;
            let (a, b) = (watermark_pgm(&w1, params.l)?, watermark_pgm(&w2, params.l)?);
            let wm = watermark_embed(&h, &a, &b, &key)?;
            write_gyrc(&path, &wm)?;
            write_interval_sidecar(&path, &wm, "watermarked image")?;
            if let Some(p) = preview {
                save_field(&p, &wm, EmitArg::Real, "real part of the watermarked image")?;
            }
            let q = psnr(&h.real_part(), &wm.real_part(), 255.0)?;
            writeln!(out, "watermarked PSNR {q:.2} dB -> {}", path.display())?;
        }
        WatermarkCommand::Extract {
            host,
            input,
            out_w1,
            out_w2,
        } => {
            let (params, h) = load_host(&host)?;
            let key = WatermarkKey::for_host(&h, params)?;
            let wm = load_field(&input, Some(h.dx()))?;
            let (a, b) = watermark_extract(&wm, &h, &key)?;
            save_watermark(&out_w1, &a)?;
            save_watermark(&out_w2, &b)?;
            writeln!(out, "extracted {} samples per watermark", a.len())?;
        }
        WatermarkCommand::Detect {
            host,
            input,
            w1,
            w2,
            candidates,
            correct,
            seed,
            out: csv,
        } => {
            let (params, h) = load_host(&host)?;
            let key = WatermarkKey::for_host(&h, params)?;
            let suspect = load_field(&input, Some(h.dx()))?;
            let (a, b) = (watermark_pgm(&w1, params.l)?, watermark_pgm(&w2, params.l)?);
            let s = detection_sweep(&suspect, &a, &b, &key, candidates, correct, seed)?;
            writeln!(
                out,
                "maximum at candidate {} (true set at {}): detected = {}; wrong sets mean {:.4}, variance {:.3e}",
                s.argmax,
                s.correct_index,
                s.detected(),
                s.wrong_mean,
                s.wrong_variance
            )?;
            if let Some(p) = csv {
                let rows = s
                    .normalized
                    .iter()
                    .enumerate()
                    .map(|(i, v)| vec![i.to_string(), format!("{v:e}"), (i == correct).to_string()]);
                write_csv(p, &["candidate", "normalized_response", "correct"], rows)?;
            }
        }
        WatermarkCommand::Noise {
            input,
            out: path,
            sigma,
            seed,
        } => {
            let g = add_gaussian_noise(&load_field(&input, None)?, sigma, seed)?;
            write_gyrc(&path, &g)?;
            write_interval_sidecar(&path, &g, &format!("white noise sigma {sigma}"))?;
            writeln!(out, "added noise with sigma {sigma} -> {}", path.display())?;
        }
    }
    Ok(())
}

fn quant_path(p: &Path) -> PathBuf {
    let mut s = p.as_os_str().to_owned();
    s.push(".quant");
    s.into()
}

fn crypto_key(path: &Path, region: Option<usize>) -> Result<CryptoKey> {
    let key = parse_crypto_key(&std::fs::read_to_string(path)?)?;
    Ok(match region {
        Some(r) => key.with_region(Some(r)),
        None => key,
    })
}

fn crypt(c: CryptCommand, out: &mut dyn Write) -> Result<()> {
    match c {
        CryptCommand::Encrypt {
            key,
            input,
            out: path,
            region,
            preview,
        } => {
            let key = crypto_key(&key, region)?;
            let img = load_field(&input, None)?;
            let enc = encrypt(&img, &key)?;
            write_gyrc(&path, &enc.image)?;
            write_interval_sidecar(&path, &enc.image, "encrypted image")?;
            std::fs::write(quant_path(&path), quant_meta_to_string(&enc.meta))?;
            if let Some(p) = preview {
                save_field(&p, &enc.image, EmitArg::Mag, "magnitude of the encrypted image")?;
            }
            writeln!(out, "encrypted with {} at {}° -> {}", key.backend, key.alpha.degrees(), path.display())?;
        }
        CryptCommand::Decrypt {
            key,
            input,
            meta,
            out: path,
            region,
        } => {
            let key = crypto_key(&key, region)?;
            let enc = read_gyrc(&input)?;
            let meta_path = meta.unwrap_or_else(|| quant_path(&input));
            let meta = parse_quant_meta(&std::fs::read_to_string(&meta_path)?)?;
            let dec = decrypt(&enc, &meta, &key)?;
            let emit = emit_of(None, &path);
            let emit = if emit == EmitArg::Mag { EmitArg::Real } else { emit };
            save_field(&path, &dec, emit, "decrypted image")?;
            writeln!(out, "decrypted -> {}", path.display())?;
        }
    }
    Ok(())
}

fn sample_demo(a: SampleDemoArgs, out: &mut dyn Write) -> Result<()> {
    std::fs::create_dir_all(&a.out_dir)?;
    let cfg = SamplingDemoConfig {
        n: a.n,
        dx: a.dx,
        alpha: Angle::from_degrees(a.alpha),
        disk_radius: a.radius,
        upsample: a.upsample,
    };
    let d = sampling_demo(&cfg)?;
    for (name, g) in [
        ("spectrum", &d.spectrum),
        ("samples", &d.samples),
        ("truth", &d.truth),
        ("gyrator", &d.gyrator),
        ("fourier", &d.fourier),
    ] {
        save_field(&a.out_dir.join(format!("{name}.pgm")), g, EmitArg::Mag, name)?;
    }
    writeln!(
        out,
        "gyrator-domain reconstruction NRMSE {:.3e}, Fourier reconstruction NRMSE {:.3}",
        d.gyrator_nrmse, d.fourier_nrmse
    )?;
    write_csv(
        a.out_dir.join("summary.csv"),
        &["reconstruction", "nrmse"],
        [
            vec!["gyrator".to_string(), format!("{:e}", d.gyrator_nrmse)],
            vec!["fourier".to_string(), format!("{:e}", d.fourier_nrmse)],
        ],
    )
}

fn keygen(k: KeygenCommand, out: &mut dyn Write) -> Result<()> {
    let (path, text) = match k {
        KeygenCommand::Crypto {
            alpha,
            bits,
            seed,
            region,
            backend: b,
            out: path,
        } => {
            let key = CryptoKey::generate(Angle::from_degrees(alpha), bits, seed)?
                .with_region(region)
                .with_backend(backend(b));
            key.validate()?;
            (path, crypto_key_to_string(&key))
        }
        KeygenCommand::Watermark {
            alpha,
            q,
            l,
            k1,
            k2,
            backend: b,
            out: path,
        } => {
            let p = WatermarkParams {
                alpha: Angle::from_degrees(alpha),
                q,
                l,
                k1,
                k2,
                backend: backend(b),
            };
            (path, watermark_params_to_string(&p))
        }
    };
    std::fs::write(&path, text)?;
    writeln!(out, "key written to {}", path.display())?;
    Ok(())
}
