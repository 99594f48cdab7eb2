//! Applications: mode conversion, sampling, watermarking and encryption.

mod crypto;
mod modes;
mod sampling;
mod watermark;

pub use crypto::{decrypt, encrypt, CryptoKey, Encrypted, QuantMeta};
pub use modes::{angular_rsd, hg_mode, mode_convert, mode_origin};
pub use sampling::{
    demo_signal, fourier_lowpass_reconstruct, gyrator_lowpass_reconstruct, sampling_demo, SamplingDemo,
    SamplingDemoConfig,
};
pub use watermark::{
    add_gaussian_noise, detection_sweep, detector_response, watermark_embed, watermark_extract, DetectionSweep, WatermarkKey,
    WatermarkParams,
};

use std::fmt;
use std::str::FromStr;

use crate::angle::Angle;
use crate::error::{Error, Result};
use crate::field::ComplexField;
use crate::hgf::{dfrft2_separable, dgt_dhgf_cached, HgfBasis};
use crate::transforms::{dgt_ccc, dgt_dft};

/// Transform used by watermarking and encryption. Every backend is inverted
/// exactly by running it at `-a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Backend {
    #[default]
    Ccc,
    Dhgf,
    Dft,
    /// Two 1D fractional Fourier transforms of the same order, one per axis.
    Dfrft2,
}

impl Backend {
    pub const ALL: [Backend; 4] = [Backend::Ccc, Backend::Dhgf, Backend::Dft, Backend::Dfrft2];

    pub fn name(self) -> &'static str {
        match self {
            Backend::Ccc => "ccc",
            Backend::Dhgf => "dhgf",
            Backend::Dft => "dft",
            Backend::Dfrft2 => "dfrft2",
        }
    }

    pub fn forward(self, g: &ComplexField, alpha: Angle) -> Result<ComplexField> {
        match self {
            Backend::Ccc => dgt_ccc(g, alpha),
            Backend::Dhgf => dgt_dhgf_cached(g, alpha),
            Backend::Dft => dgt_dft(g, alpha),
            Backend::Dfrft2 => {
                if g.n1() != g.n2() {
                    return Err(Error::Shape(format!("dfrft2 needs a square input, got {:?}", g.shape())));
                }
                let basis = HgfBasis::cached(g.n1())?;
                dfrft2_separable(g, alpha, alpha, &basis)
            }
        }
    }

    pub fn inverse(self, g: &ComplexField, alpha: Angle) -> Result<ComplexField> {
        self.forward(g, -alpha)
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Backend {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Backend::ALL
            .into_iter()
            .find(|b| b.name() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::Usage(format!("unknown backend '{s}' (ccc, dhgf, dft, dfrft2)")))
    }
}
