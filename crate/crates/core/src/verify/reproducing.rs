//! Reproducing-property check of the series kernel at points `(W₀, 0)`.

use num_complex::Complex64;

use super::coeffs::{ln_coeff_e, ln_coeff_y, ratio_estimate, record, sample_hartogs, Family};
use super::mc::{run_sharded, Budget};
use super::report::VerifyReport;
use crate::algebra::{chi_poly, rat_to_f64, Rational};
use crate::domain::DomainSpec;
use crate::error::{Error, Result};

/// Terms kept per variable of the polarized series. Terms with an index other
/// than the monomial's integrate to zero, so truncation only affects variance.
const POLARIZED_TERMS: u32 = 16;

/// Monte-Carlo estimate of `∫ K((W₀, 0), ζ) f(ζ) dμ(ζ)` for the monomial
/// `f = W^m` (family Y, one exponent) or `W₁^{m₁} W₂^{m₂}` (family E), using the
/// polarized series `K((W₀,0),(W',Z')) = Σ |a_j|² (W₀ W̄')^j`, compared with
/// `f(W₀)`. The real part is compared; `vol Ω` cancels by ratio.
#[allow(clippy::too_many_arguments)]
pub fn reproducing_check(
    spec: &DomainSpec,
    k: &Rational,
    family: Family,
    exponents: &[u32],
    w0: &[Complex64],
    samples: u64,
    seed: u64,
    tol: f64,
) -> Result<VerifyReport> {
    let arity = match family {
        Family::Y => 1,
        Family::E => 2,
    };
    for (what, len) in [("exponents", exponents.len()), ("center", w0.len())] {
        if len != arity {
            return Err(Error::InvalidParams(format!(
                "{what} must have {arity} entries for this family, got {len}"
            )));
        }
    }
    let kf = rat_to_f64(k);
    let chi = chi_poly(&spec.invariants());
    let l0 = chi.ln_abs_f64(0.0);
    let jmax = POLARIZED_TERMS;
    // coeffs[a][b] = vol Ω |a_{ab}|² (b unused for Y).
    let coeffs: Vec<Vec<f64>> = (0..=jmax)
        .map(|a| match family {
            Family::Y => vec![ln_coeff_y(&chi, l0, kf, a).exp()],
            Family::E => (0..=jmax).map(|b| ln_coeff_e(&chi, l0, kf, a, b).exp()).collect(),
        })
        .collect();
    let monomial = |w: &[Complex64]| -> Complex64 {
        w.iter()
            .zip(exponents)
            .map(|(x, &m)| x.powu(m))
            .product()
    };
    let tally = run_sharded(seed, Budget::Proposals(samples), 5, |rng, sums| {
        let (s, inside) = sample_hartogs(spec, family, kf, rng);
        let mut f = 0.0;
        if inside {
            let w = &s.w[..arity];
            let x: Vec<Complex64> = (0..arity).map(|i| w0[i] * w[i].conj()).collect();
            let mut kernel = Complex64::default();
            let mut xa = Complex64::new(1.0, 0.0);
            for row in &coeffs {
                let mut xb = xa;
                for &c in row {
                    kernel += xb * c;
                    if arity == 2 {
                        xb *= x[1];
                    }
                }
                xa *= x[0];
            }
            f = (kernel * monomial(w)).re;
        }
        record(sums, f, if s.n.is_some() { 1.0 } else { 0.0 });
        inside
    })?;
    let scale = (4.0 / std::f64::consts::PI).powi(arity as i32);
    let reference = monomial(w0).re;
    let label = format!(
        "reproducing {} k={k} exponents={exponents:?} center={:?}",
        match family {
            Family::Y => "Y",
            Family::E => "E",
        },
        w0.iter().map(|c| (c.re, c.im)).collect::<Vec<_>>()
    );
    Ok(VerifyReport::stochastic(label, spec, ratio_estimate(&tally, scale, seed), reference, tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn constants_and_linear_monomials_reproduce() {
        let d = DomainSpec::disc();
        let r = reproducing_check(&d, &rat(1, 1), Family::Y, &[0], &[c(0.0)], 200_000, 3, 0.02).unwrap();
        assert!(r.pass, "{r:?}");
        let r = reproducing_check(&d, &rat(1, 1), Family::Y, &[1], &[c(0.0)], 200_000, 3, 0.02).unwrap();
        assert!(r.reference == 0.0 && r.pass, "{r:?}");
        let r = reproducing_check(&d, &rat(1, 1), Family::Y, &[1], &[c(0.4)], 200_000, 4, 0.02).unwrap();
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn arity_is_checked() {
        let d = DomainSpec::disc();
        assert!(reproducing_check(&d, &rat(1, 1), Family::E, &[0], &[c(0.0)], 1000, 1, 0.1).is_err());
    }
}
