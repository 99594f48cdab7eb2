//! Command-line interface. The `gyrator` binary is a thin wrapper around [`run`].

mod commands;
mod lists;

pub use lists::{parse_degrees_list, parse_methods, parse_sizes};

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};

/// Environment variable capping the worker thread count.
pub const THREADS_ENV: &str = "GYRATOR_THREADS";

#[derive(Debug, Parser)]
#[command(name = "gyrator", version, about = "Discrete gyrator transforms and their applications")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Transform a PGM or GYRC file.
    Transform(TransformArgs),
    /// Accuracy and additivity experiments written as CSV.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Multiplication counts and timings.
    Bench(BenchArgs),
    /// Hermite-Gaussian mode conversion panels.
    Modes(ModesArgs),
    /// Embed, extract or detect watermarks.
    #[command(subcommand)]
    Watermark(WatermarkCommand),
    /// Encrypt or decrypt an image.
    #[command(subcommand)]
    Crypt(CryptCommand),
    /// Compare gyrator-domain and Fourier reconstruction of an undersampled signal.
    SampleDemo(SampleDemoArgs),
    /// Write a key file.
    #[command(subcommand)]
    Keygen(KeygenCommand),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Direct,
    Lcc,
    Dft,
    Ccc,
    Dhgf,
    /// LCC when output intervals are given, CCC otherwise.
    Auto,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EmitArg {
    Mag,
    Phase,
    Real,
    Gyrc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BackendArg {
    Ccc,
    Dhgf,
    Dft,
    Dfrft2,
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    /// Angle in degrees.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: f64,
    #[arg(long, value_enum, default_value = "auto")]
    pub method: MethodArg,
    /// Input file, PGM or GYRC.
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
    /// Output interval along the first output axis (direct and lcc only).
    #[arg(long)]
    pub du: Option<f64>,
    /// Output interval along the second output axis (direct and lcc only).
    #[arg(long)]
    pub dv: Option<f64>,
    /// Zero-pad the input to `n x n` before transforming; the central block is kept.
    #[arg(long)]
    pub pad: Option<usize>,
    /// Output representation; defaults to gyrc for `.gyrc` outputs and mag otherwise.
    #[arg(long, value_enum)]
    pub emit: Option<EmitArg>,
    /// Sampling interval of a PGM input [default: sqrt(2 pi / N)].
    #[arg(long)]
    pub interval: Option<f64>,
    /// Singularity threshold in degrees for the dispatcher.
    #[arg(long, default_value_t = 5.0)]
    pub threshold_deg: f64,
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// NRMSE against the closed-form transform of a scaled Gaussian.
    Gaussian(GaussianArgs),
    /// NRMSE against the continuous transform of a rotated Hermite-Gaussian function.
    Rhgf(RhgfArgs),
    /// Additivity error of the circular-convolution transform versus input size.
    Additivity(AdditivityArgs),
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Angles in degrees: `start:stop:step` or a comma list.
    #[arg(long, default_value = "5:175:5")]
    pub alphas: String,
    /// `all` or a comma list of direct, lcc, dft, ccc, dhgf.
    #[arg(long, default_value = "all")]
    pub methods: String,
    /// Singularity threshold in degrees; 45 routes each angle to the better-conditioned path.
    #[arg(long, default_value_t = 45.0)]
    pub threshold_deg: f64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct GaussianArgs {
    #[arg(long, default_value_t = 0.4)]
    pub s: f64,
    #[arg(long, default_value_t = 101)]
    pub n: usize,
    #[command(flatten)]
    pub sweep: SweepArgs,
}

#[derive(Debug, Args)]
pub struct RhgfArgs {
    #[arg(long, default_value_t = 25)]
    pub k: usize,
    #[arg(long, default_value_t = 40)]
    pub l: usize,
    #[arg(long, default_value_t = 128)]
    pub n: usize,
    #[command(flatten)]
    pub sweep: SweepArgs,
}

#[derive(Debug, Args)]
pub struct AdditivityArgs {
    /// The two angles in degrees.
    #[arg(long, default_value = "25,20")]
    pub alphas: String,
    /// Input sizes, multiples of the base image size by powers of two.
    #[arg(long, default_value = "128,256,512")]
    pub sizes: String,
    /// Base image, PGM; a synthetic scene of the smallest size is used otherwise.
    #[arg(long)]
    pub image: Option<PathBuf>,
    /// Sampling interval of the base image.
    #[arg(long, default_value_t = 0.1567)]
    pub interval: f64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_value = "64,128,256")]
    pub sizes: String,
    #[arg(long, default_value = "all")]
    pub methods: String,
    /// Timing repetitions per fast method; 0 skips timing.
    #[arg(long, default_value_t = 3)]
    pub repeats: usize,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct ModesArgs {
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    #[arg(long, default_value_t = 5)]
    pub l: usize,
    /// Angles in degrees: `start:stop:step` or a comma list.
    #[arg(long, default_value = "0:22.5:180")]
    pub alpha_list: String,
    #[arg(long, default_value_t = 128)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "dft")]
    pub method: MethodArg,
    #[arg(long)]
    pub out_dir: PathBuf,
}

#[derive(Debug, Args)]
pub struct HostArgs {
    /// Watermark key file.
    #[arg(long)]
    pub key: PathBuf,
    /// Host image, PGM.
    #[arg(long)]
    pub host: PathBuf,
    /// Sampling interval of the host [default: sqrt(2 pi / N)].
    #[arg(long)]
    pub interval: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum WatermarkCommand {
    /// Embed two watermark images; writes a GYRC field.
    Embed {
        #[command(flatten)]
        host: HostArgs,
        #[arg(long)]
        w1: PathBuf,
        #[arg(long)]
        w2: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Also write the real part as an 8-bit PGM.
        #[arg(long)]
        preview: Option<PathBuf>,
    },
    /// Recover both watermarks as PGM images of side `sqrt(L)`.
    Extract {
        #[command(flatten)]
        host: HostArgs,
        /// Watermarked field, GYRC or PGM.
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out_w1: PathBuf,
        #[arg(long)]
        out_w2: PathBuf,
    },
    /// Detector response of the true watermarks among random candidates.
    Detect {
        #[command(flatten)]
        host: HostArgs,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        w1: PathBuf,
        #[arg(long)]
        w2: PathBuf,
        #[arg(long, default_value_t = 1000)]
        candidates: usize,
        /// Position of the true watermarks among the candidates.
        #[arg(long, default_value_t = 199)]
        correct: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Normalized responses as CSV.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Add white Gaussian noise to a field.
    Noise {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 10.0)]
        sigma: f64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum CryptCommand {
    /// Encrypt a PGM image; writes a GYRC field and `<out>.quant`.
    Encrypt {
        #[arg(long)]
        key: PathBuf,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Encrypt only the central `R x R` coefficients.
        #[arg(long)]
        region: Option<usize>,
        #[arg(long)]
        preview: Option<PathBuf>,
    },
    /// Decrypt a GYRC field into a PGM image.
    Decrypt {
        #[arg(long)]
        key: PathBuf,
        #[arg(long = "in")]
        input: PathBuf,
        /// Quantization ranges [default: `<in>.quant`].
        #[arg(long)]
        meta: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        region: Option<usize>,
    },
}

#[derive(Debug, Args)]
pub struct SampleDemoArgs {
    #[arg(long, default_value_t = 15.0)]
    pub alpha: f64,
    #[arg(long, default_value_t = 100)]
    pub n: usize,
    #[arg(long, default_value_t = 0.666)]
    pub dx: f64,
    /// Radius in samples of the gyrator-domain disk.
    #[arg(long, default_value_t = 30.0)]
    pub radius: f64,
    #[arg(long, default_value_t = 2)]
    pub upsample: usize,
    #[arg(long)]
    pub out_dir: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum KeygenCommand {
    Crypto {
        #[arg(long, default_value_t = 40.0, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, default_value_t = 16)]
        bits: u32,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        region: Option<usize>,
        #[arg(long, value_enum, default_value = "dhgf")]
        backend: BackendArg,
        #[arg(long)]
        out: PathBuf,
    },
    Watermark {
        #[arg(long, default_value_t = 40.0, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, default_value_t = 8000)]
        q: usize,
        #[arg(long, default_value_t = 4096)]
        l: usize,
        #[arg(long, default_value_t = 0.15)]
        k1: f64,
        #[arg(long, default_value_t = 0.15)]
        k2: f64,
        #[arg(long, value_enum, default_value = "ccc")]
        backend: BackendArg,
        #[arg(long)]
        out: PathBuf,
    },
}

/// Caps the global thread pool from [`THREADS_ENV`] if set.
pub fn configure_threads() -> Result<()> {
    let Ok(v) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Error::Config(format!("{THREADS_ENV}={v} is not a positive integer")))?;
    // A pool that already exists (as in tests) keeps its size.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

/// Parses `args` (including the program name) and runs the command, writing
/// reports to `out`. Help and version requests print and succeed.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> Result<()>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            write!(out, "{e}")?;
            return Ok(());
        }
        Err(e) => return Err(Error::Usage(e.to_string())),
    };
    configure_threads()?;
    commands::dispatch(cli.command, out)
}
