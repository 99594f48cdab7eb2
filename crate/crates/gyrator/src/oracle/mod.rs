//! Closed-form references, accuracy experiments and complexity accounting.

mod accuracy;
mod additivity;
mod complexity;
mod reference;

pub use accuracy::{accuracy_at, accuracy_sweep, AccuracyRow, InputKind};
pub use additivity::{additivity_input, ccc_additivity_nrmse, fourier_upsample, AdditivityRow};
pub use complexity::{
    complexity_order_check, count_chain_holds, count_chain_onset, multiplication_count, time_method,
    ComplexityReport, ComplexityRow, COUNT_CHAIN,
};
pub use reference::{
    gaussian_gyrator_closed_form, rhgf_gyrator_reference, sampled_rhgf, scaled_gaussian, SampleGrid,
};

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Transform family without per-call options.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MethodKind {
    Direct,
    Lcc,
    Dft,
    Ccc,
    Dhgf,
}

impl MethodKind {
    pub const ALL: [MethodKind; 5] = [
        MethodKind::Direct,
        MethodKind::Lcc,
        MethodKind::Dft,
        MethodKind::Ccc,
        MethodKind::Dhgf,
    ];

    /// The four fast transforms.
    pub const FAST: [MethodKind; 4] = [MethodKind::Lcc, MethodKind::Dft, MethodKind::Ccc, MethodKind::Dhgf];

    pub fn name(self) -> &'static str {
        match self {
            MethodKind::Direct => "direct",
            MethodKind::Lcc => "lcc",
            MethodKind::Dft => "dft",
            MethodKind::Ccc => "ccc",
            MethodKind::Dhgf => "dhgf",
        }
    }
}

impl fmt::Display for MethodKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MethodKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        MethodKind::ALL
            .into_iter()
            .find(|m| m.name() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::Usage(format!("unknown method '{s}'")))
    }
}
