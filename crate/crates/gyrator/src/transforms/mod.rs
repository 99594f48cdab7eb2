//! Discrete gyrator transforms and the near-singularity dispatcher.

mod ccc;
mod dft;
mod direct;
mod lcc;

pub use ccc::dgt_ccc;
pub use dft::{dft_output_intervals, dgt_dft};
pub use direct::{dgt_direct, dgt_direct_on};
pub use lcc::{dgt_lcc, dgt_lcc_inverse, InputGrid, LccOutput};

use std::f64::consts::{FRAC_PI_2, PI};

use crate::angle::{Angle, DEFAULT_THRESHOLD};
use crate::error::{Error, Result};
use crate::field::{reflect, ComplexField, C64};
use crate::spectral::{centered_dft2, DftSign};

/// Threshold that sends an angle to whichever decomposition is better conditioned:
/// LCC and DFT are rerouted when `|sin a| < |cos a|`, CCC when `|a| > 90°`.
pub const BALANCED_THRESHOLD: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// Explicit output grid for direct summation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OutputGrid {
    pub n1: usize,
    pub n2: usize,
    pub du: f64,
    pub dv: f64,
}

impl OutputGrid {
    pub fn new(n1: usize, n2: usize, du: f64, dv: f64) -> Result<Self> {
        if n1 == 0 || n2 == 0 || !(du > 0.0 && dv > 0.0 && du.is_finite() && dv.is_finite()) {
            return Err(Error::Range(format!(
                "output grid {n1}x{n2} with intervals ({du}, {dv})"
            )));
        }
        Ok(Self { n1, n2, du, dv })
    }
}

/// Which part of the linear-convolution output to return.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum LccExtent {
    #[default]
    Central,
    Full,
}

/// A discrete gyrator transform together with its options.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum DgtMethod {
    Direct { du: f64, dv: f64 },
    Lcc { du: f64, dv: f64, extent: LccExtent },
    Dft,
    Ccc,
    Dhgf,
}

impl DgtMethod {
    pub fn name(&self) -> &'static str {
        match self {
            DgtMethod::Direct { .. } => "direct",
            DgtMethod::Lcc { .. } => "lcc",
            DgtMethod::Dft => "dft",
            DgtMethod::Ccc => "ccc",
            DgtMethod::Dhgf => "dhgf",
        }
    }

    /// LCC returning the central block, on the given output intervals.
    pub fn lcc(du: f64, dv: f64) -> Self {
        DgtMethod::Lcc {
            du,
            dv,
            extent: LccExtent::Central,
        }
    }
}

pub(crate) fn check_kpi(alpha: Angle, method: &'static str) -> Result<()> {
    if alpha.near_kpi(DEFAULT_THRESHOLD) {
        Err(Error::SingularAngle {
            method,
            degrees: alpha.degrees(),
        })
    } else {
        Ok(())
    }
}

pub(crate) fn check_odd_pi(alpha: Angle, method: &'static str) -> Result<()> {
    if alpha.near_odd_pi(DEFAULT_THRESHOLD) {
        Err(Error::SingularAngle {
            method,
            degrees: alpha.degrees(),
        })
    } else {
        Ok(())
    }
}

/// Transposed centered DFT scaled by `dx dy / 2pi`: the gyrator transform at 90°
/// evaluated on the reciprocal grid.
pub fn swapped_dft(g: &ComplexField) -> ComplexField {
    let (n1, n2) = g.shape();
    let scale = g.dx() * g.dy() / (2.0 * PI);
    let mut f = centered_dft2(g, DftSign::Minus)
        .transpose()
        .scale(C64::new(scale, 0.0));
    f.set_intervals(
        2.0 * PI / (n2 as f64 * g.dy()),
        2.0 * PI / (n1 as f64 * g.dx()),
    );
    f
}

/// Runs `method` at any angle, using the default 5° singularity threshold.
pub fn dgt_auto(g: &ComplexField, alpha: Angle, method: &DgtMethod) -> Result<ComplexField> {
    dgt_auto_with(g, alpha, method, DEFAULT_THRESHOLD)
}

/// Runs `method` at any angle.
///
/// Exact multiples of pi use the identity and reflection conventions. Within
/// `tau` of a singularity, LCC, DFT and direct summation go through
/// [`swapped_dft`] followed by the transform at `a - 90°`; CCC is evaluated at
/// `a - 180°` on the reflected input. DHGF has no singular angles.
pub fn dgt_auto_with(
    g: &ComplexField,
    alpha: Angle,
    method: &DgtMethod,
    tau: f64,
) -> Result<ComplexField> {
    match *method {
        DgtMethod::Dhgf => crate::hgf::dgt_dhgf_cached(g, alpha),
        DgtMethod::Ccc => {
            if alpha.is_pi() {
                Ok(reflect(g))
            } else if alpha.near_odd_pi(tau) {
                dgt_ccc(&reflect(g), alpha - Angle::from_radians(PI))
            } else {
                dgt_ccc(g, alpha)
            }
        }
        DgtMethod::Direct { .. } | DgtMethod::Lcc { .. } | DgtMethod::Dft => {
            if alpha.is_zero() {
                Ok(g.clone())
            } else if alpha.is_pi() {
                Ok(reflect(g))
            } else if alpha.near_kpi(tau) {
                let beta = alpha - Angle::from_radians(FRAC_PI_2);
                run_regular(&swapped_dft(g), beta, method)
            } else {
                run_regular(g, alpha, method)
            }
        }
    }
}

fn run_regular(g: &ComplexField, alpha: Angle, method: &DgtMethod) -> Result<ComplexField> {
    match *method {
        DgtMethod::Direct { du, dv } => dgt_direct(g, alpha, du, dv),
        DgtMethod::Lcc { du, dv, extent } => {
            let out = dgt_lcc(g, alpha, du, dv)?;
            Ok(match extent {
                LccExtent::Central => out.central(),
                LccExtent::Full => out.into_full(),
            })
        }
        DgtMethod::Dft => dgt_dft(g, alpha),
        DgtMethod::Ccc => dgt_ccc(g, alpha),
        DgtMethod::Dhgf => crate::hgf::dgt_dhgf_cached(g, alpha),
    }
}
