//! Construction of the closed-form cores `F` (for `Y`) and `Λ` (for `E`).

use num_traits::{One, Signed, Zero};

use super::expr::{KernelExpr, KernelTerm, Prefactor};
use super::uni::{sum_poly_series, UniExpr};
use crate::algebra::{
    binomial, chi_poly, pochhammer, pochhammer_value, to_shifted_pochhammer_basis, RatPoly,
    Rational,
};
use crate::domain::DomainSpec;
use crate::error::{Error, Result};

fn check_k(k: &Rational) -> Result<()> {
    if k.is_positive() {
        Ok(())
    } else {
        Err(Error::InvalidParams(format!("k must be positive, got {k}")))
    }
}

/// `F(X) = Σ_j ((j+1)/k) χ((j+1)/k) X^j` in closed form.
///
/// The kernel of `Y(1, Ω; k)` is `(k/(χ(0) vol Ω)) F(‖W‖²/N^{1/k}) N^{−1/k−g}`.
pub fn y_kernel_core(spec: &DomainSpec, k: &Rational) -> Result<UniExpr> {
    check_k(k)?;
    let inv_k = Rational::one() / k;
    let chi = chi_poly(&spec.invariants()).expand();
    let shifted = chi.compose_linear(&inv_k, &inv_k);
    let linear = RatPoly::from_coeffs(vec![inv_k.clone(), inv_k]);
    Ok(sum_poly_series(&(&linear * &shifted)).with_k(k.clone()))
}

/// `H_{jm}(λ) = Σ_p ((p+1)/k + 2 + m)_{j−m} λ^p` in closed form.
pub fn h_jm(j: u32, m: u32, k: &Rational) -> Result<KernelExpr> {
    check_k(k)?;
    if m > j {
        return Err(Error::InvalidParams(format!("H_jm needs m <= j, got j={j}, m={m}")));
    }
    let inv_k = Rational::one() / k;
    let shift = &inv_k + Rational::from_integer((2 + m).into());
    let poly = pochhammer(&shift, j - m).compose_linear(&inv_k, &Rational::zero());
    KernelExpr::from_uni(&sum_poly_series(&poly).with_k(k.clone()))
}

/// Constants `b_j` with `h(h−1)χ(h) = Σ_{j≥1} b_j (h+1)_j`.
pub fn e_kernel_b_coefficients(spec: &DomainSpec) -> Result<Vec<Rational>> {
    let chi = chi_poly(&spec.invariants()).expand();
    let quadratic = RatPoly::from_i64(&[0, -1, 1]);
    to_shifted_pochhammer_basis(&(&quadratic * &chi))
}

/// `Λ(t₁, t₂)` in canonical `(u, λ)` terms, without the `1/(χ(0) vol Ω)`
/// prefactor (recorded symbolically):
///
/// `Λ = k Σ_j b_j Σ_{m≤j} (−j)_m (2)_m / m! · Σ_{i≤m} C(m,i) (−1)^i u^{i−j−1/k} H_{jm}(λ)`,
///
/// which is `k u^{−1/k} Σ_j b_j u^{−j} Σ_m (−j)_m (2)_m t₁^m/m! H_{jm}(λ)` with
/// `t₁^m = (1−u)^m` expanded.
pub fn e_kernel_core(spec: &DomainSpec, k: &Rational) -> Result<KernelExpr> {
    check_k(k)?;
    let b = e_kernel_b_coefficients(spec)?;
    let mut out = KernelExpr::zero(k.clone())?.with_prefactor(Prefactor::InvChi0Vol);
    let minus_one = -Rational::one();
    for (idx, bj) in b.iter().enumerate() {
        let j = idx as u32 + 1;
        if bj.is_zero() {
            continue;
        }
        let minus_j = Rational::from_integer((-(j as i64)).into());
        for m in 0..=j {
            // (2)_m / m! = m + 1
            let outer = k * bj * pochhammer_value(&minus_j, m) * Rational::from_integer((m + 1).into());
            let h = h_jm(j, m, k)?;
            for i in 0..=m {
                let sign = if i % 2 == 0 { Rational::one() } else { minus_one.clone() };
                let c = &outer * binomial(m, i) * sign;
                let e0 = Rational::from_integer((i as i64 - j as i64).into());
                for t in h.terms() {
                    out.add_term(KernelTerm {
                        c: &c * t.c,
                        e0: e0.clone(),
                        e1: minus_one.clone(),
                        p: t.p,
                        d: t.d,
                    });
                }
            }
        }
    }
    Ok(out)
}
