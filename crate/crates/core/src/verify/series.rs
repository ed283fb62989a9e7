//! Truncated orthonormal-series kernels at `Z = 0`, built from the exact
//! coefficient formulas and nothing else.

use serde::Serialize;

use super::coeffs::{ln_coeff_e, ln_coeff_y};
use crate::algebra::{chi_poly, rat_to_f64, Rational};
use crate::domain::DomainSpec;
use crate::error::{Error, Result};

/// A truncated series value (times `vol Ω`) with an estimate of the omitted tail.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SeriesValue {
    pub value: f64,
    /// Ratio-test estimate of the omitted tail; infinite if the ratio test fails.
    pub tail_bound: f64,
    /// Highest index kept in each variable.
    pub truncation: u32,
}

/// Tail estimate `T / (1 − ρ)` from the first omitted term and its successor ratio.
fn geometric_tail(first: f64, next: f64) -> f64 {
    if first == 0.0 {
        return 0.0;
    }
    let rho = next / first;
    if rho < 1.0 {
        first / (1.0 - rho)
    } else {
        f64::INFINITY
    }
}

fn check_truncation(j: u32) -> Result<()> {
    if j < 50 {
        return Err(Error::InvalidParams(format!("truncation must be at least 50, got {j}")));
    }
    Ok(())
}

/// `vol Ω · K_Y((W, 0), (W, 0)) ≈ Σ_{j≤J} vol Ω |a_j|² t^j`, `t = |W|²`.
pub fn series_kernel_y(spec: &DomainSpec, k: &Rational, t: f64, truncation: u32) -> Result<SeriesValue> {
    check_truncation(truncation)?;
    let kf = rat_to_f64(k);
    if !(t >= 0.0 && t.powf(kf) < 1.0) {
        return Err(Error::OutsideDomain(format!("series needs 0 <= |W|^2k < 1, got |W|^2 = {t}")));
    }
    let chi = chi_poly(&spec.invariants());
    let l0 = chi.ln_abs_f64(0.0);
    let term = |j: u32| {
        let c = ln_coeff_y(&chi, l0, kf, j).exp();
        if j == 0 { c } else { c * t.powi(j as i32) }
    };
    let value = (0..=truncation).map(term).sum();
    Ok(SeriesValue {
        value,
        tail_bound: geometric_tail(term(truncation + 1), term(truncation + 2)),
        truncation,
    })
}

/// `vol Ω · K_E((W₁, W₂, 0), ·) ≈ Σ_{j₁,j₂≤J} vol Ω |a_{j₁j₂}|² t₁^{j₁} t₂^{j₂}`,
/// `t_i = |W_i|²`.
pub fn series_kernel_e(spec: &DomainSpec, k: &Rational, t1: f64, t2: f64, truncation: u32) -> Result<SeriesValue> {
    check_truncation(truncation)?;
    let kf = rat_to_f64(k);
    if !(t1 >= 0.0 && t2 >= 0.0 && t1 + t2.powf(kf) < 1.0) {
        return Err(Error::OutsideDomain(format!(
            "series needs |W1|^2 + |W2|^2k < 1, got t1 = {t1}, t2 = {t2}"
        )));
    }
    let chi = chi_poly(&spec.invariants());
    let l0 = chi.ln_abs_f64(0.0);
    let pow = |x: f64, j: u32| if j == 0 { 1.0 } else { x.powi(j as i32) };
    let term = |a: u32, b: u32| ln_coeff_e(&chi, l0, kf, a, b).exp() * pow(t1, a) * pow(t2, b);
    let j = truncation;
    let mut value = 0.0;
    for a in 0..=j {
        for b in 0..=j {
            value += term(a, b);
        }
    }
    let row_tail: f64 = (0..=j).map(|b| geometric_tail(term(j + 1, b), term(j + 2, b))).sum();
    let col_tail: f64 = (0..=j).map(|a| geometric_tail(term(a, j + 1), term(a, j + 2))).sum();
    let corner = geometric_tail(term(j + 1, j + 1), term(j + 2, j + 2));
    Ok(SeriesValue {
        value,
        tail_bound: row_tail + col_tail + corner,
        truncation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::verify::{coeff_e_exact, coeff_y_exact};

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn disc_ball_values() {
        let d = DomainSpec::disc();
        let y = series_kernel_y(&d, &rat(1, 1), 0.25, 200).unwrap();
        assert!(rel(y.value, 2.0 * 0.75f64.powi(-3)) < 1e-8);
        assert!(y.tail_bound < 1e-50);
        let e = series_kernel_e(&d, &rat(1, 1), 0.04, 0.09, 200).unwrap();
        assert!(rel(e.value, 6.0 * 0.87f64.powi(-4)) < 1e-8);
    }

    #[test]
    fn origin_values_are_leading_coefficients() {
        let spec: DomainSpec = "IV:3".parse().unwrap();
        let k = rat(3, 2);
        let y = series_kernel_y(&spec, &k, 0.0, 60).unwrap().value;
        assert!(rel(y, rat_to_f64(&coeff_y_exact(&spec, &k, 0).unwrap())) < 1e-13);
        let e = series_kernel_e(&spec, &k, 0.0, 0.0, 60).unwrap().value;
        assert!(rel(e, rat_to_f64(&coeff_e_exact(&spec, &k, 0, 0).unwrap())) < 1e-13);
    }

    #[test]
    fn monotone_in_truncation() {
        let d = DomainSpec::disc();
        let a = series_kernel_y(&d, &rat(2, 1), 0.5, 50).unwrap().value;
        let b = series_kernel_y(&d, &rat(2, 1), 0.5, 80).unwrap().value;
        assert!(b > a);
        assert!(series_kernel_y(&d, &rat(1, 1), 0.5, 10).is_err());
        assert!(series_kernel_e(&d, &rat(1, 1), 0.6, 0.5, 60).is_err());
    }
}
