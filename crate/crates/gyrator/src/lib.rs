//! Discrete gyrator transforms.
//!
//! Four discretizations of the gyrator transform are provided: linear chirp
//! convolution ([`transforms::dgt_lcc`]), a single DFT ([`transforms::dgt_dft`]),
//! circular chirp convolution ([`transforms::dgt_ccc`]) and an expansion in
//! discrete Hermite-Gaussian functions ([`hgf::dgt_dhgf_fast`]). Direct
//! summation ([`transforms::dgt_direct`]) serves as the reference.

pub mod angle;
pub mod apps;
pub mod cli;
pub mod error;
pub mod field;
pub mod hgf;
pub mod images;
pub mod io;
pub mod lct;
pub mod oracle;
pub mod spectral;
pub mod transforms;

pub use angle::Angle;
pub use error::{Error, Result};
pub use field::{nrmse, psnr, reflect, ComplexField, C64};
pub use transforms::{dgt_auto, dgt_auto_with, DgtMethod};
