//! Discrete Hermite-Gaussian functions, Wigner functions and the HGF-based gyrator transform.

mod basis;
mod dhgf;
mod hermite;
mod shells;
mod wigner;

pub use basis::{discrete_hgf_basis, sign_changes, HgfBasis};
pub use dhgf::{dfrft2_separable, dgt_dhgf_cached, dgt_dhgf_direct, dgt_dhgf_factored, dgt_dhgf_fast};
pub use hermite::{hermite_function, hermite_functions_upto, normalized_sampled_hgf, sampled_hgf};
pub use shells::{build_shell_matrices, half_pi_tables, hgf2, rhgf, shell_range, WignerShellSet};
pub use wigner::{jacobi, wigner_big_d, wigner_d, wigner_d_matrix, wigner_d_sum};
