//! Independent oracles: Monte-Carlo integration over `Ω`, `Y` and `E`,
//! truncated orthonormal-series kernels, and comparison reports.

mod coeffs;
mod mc;
mod report;
mod reproducing;
mod series;

pub use coeffs::{coeff_e_exact, coeff_mc, coeff_y_exact, ln_coeff_e, ln_coeff_y, CoeffIndex, Family};
pub use mc::{alpha_density, mc_norm_moment, mc_volume, McEstimate, MIN_ACCEPTANCE, SHARD_SIZE};
pub use report::VerifyReport;
pub use reproducing::reproducing_check;
pub use series::{series_kernel_e, series_kernel_y, SeriesValue};
