//! Exact rational polynomial algebra: Pochhammer products, the `χ` polynomial,
//! the basis changes used by the series summations, and Selberg's Γ-product.

mod basis;
mod pochhammer;
mod poly;
mod rational;
mod selberg;

pub use basis::{rising_basis, to_binom_basis, to_shifted_pochhammer_basis};
pub use pochhammer::{
    chi_poly, pochhammer, pochhammer_value, table_chi_form, PochFactor, PochhammerForm,
};
pub use poly::RatPoly;
pub use rational::{
    binomial, factorial, format_rational, parse_rational, rat, rat_from_f64, rat_to_f64,
    Rational,
};
pub use selberg::{selberg_f, selberg_ratio};
