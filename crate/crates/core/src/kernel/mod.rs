//! Symbolic kernel expressions: series summation, the closed-form cores `F`
//! and `Λ`, inflation by differentiation, evaluation and emission.

mod assemble;
mod build;
mod emit;
mod expr;
mod uni;

pub use assemble::{eval_e, eval_y, resolve_volume, EKernel, YKernel};
pub use build::{e_kernel_b_coefficients, e_kernel_core, h_jm, y_kernel_core};
pub use emit::{emit, parse_kernel_json, Emit, Format};
pub use expr::{is_canonical, mixed_partial, KernelExpr, KernelTerm, Prefactor};
pub use uni::{sum_poly_series, UniExpr};
