//! Exact closed-form Bergman kernels for Cartan-Hartogs domains `Y(q, Ω; k)` and
//! Cartan-egg domains `E(p, q, Ω; k)` built on the six families of irreducible
//! bounded symmetric domains `Ω`.
//!
//! The crate is organised in four layers:
//!
//! - [`domain`]: the catalog of domains (invariants, generic norms, membership,
//!   sampling), including complexified octonions and the Albert algebra.
//! - [`algebra`]: exact rational polynomial algebra, the `χ` polynomial and the
//!   Selberg Γ-product.
//! - [`kernel`]: the symbolic kernel expressions, their differentiation and
//!   numerical evaluation.
//! - [`verify`]: Monte-Carlo and truncated-series oracles that check the closed
//!   forms independently.

pub mod algebra;
pub mod domain;
pub mod error;
pub mod kernel;
pub mod verify;

pub use algebra::{chi_poly, pochhammer, PochhammerForm, RatPoly, Rational};
pub use domain::{DomainKind, DomainSpec, Element, JordanInvariants, OctonionC};
pub use error::{Error, Result};
pub use kernel::{KernelExpr, KernelTerm, UniExpr};
pub use verify::{McEstimate, VerifyReport};
