use statrs::function::gamma::ln_gamma;

use crate::domain::JordanInvariants;
use crate::error::{Error, Result};

fn check_argument(s: f64) -> Result<()> {
    if s.is_nan() || s <= -1.0 {
        return Err(Error::DomainError(format!("Selberg product needs s > -1, got {s}")));
    }
    Ok(())
}

/// Selberg's evaluation of the radial integral
/// `F(s) = 1/(2^r r!) ∫_{[0,1]^r} ∏(1-t_j)^s t_j^b ∏|t_j - t_k|^a dt`,
/// computed as a sum of log-Γ terms.
pub fn selberg_f(inv: &JordanInvariants, s: f64) -> Result<f64> {
    check_argument(s)?;
    let half_a = f64::from(inv.a) / 2.0;
    let b = f64::from(inv.b);
    let r = inv.r;
    let mut ln = -(f64::from(r) * std::f64::consts::LN_2) - ln_gamma(f64::from(r) + 1.0);
    for j in 1..=r {
        let j = f64::from(j);
        ln += ln_gamma(b + 1.0 + (j - 1.0) * half_a) + ln_gamma(s + 1.0 + (j - 1.0) * half_a)
            + ln_gamma(j * half_a + 1.0)
            - ln_gamma(s + b + 2.0 + (f64::from(r) + j - 2.0) * half_a)
            - ln_gamma(half_a + 1.0);
    }
    Ok(ln.exp())
}

/// `F(s)/F(0)` from the reduced Γ-product, which equals `χ(0)/χ(s)`.
pub fn selberg_ratio(inv: &JordanInvariants, s: f64) -> Result<f64> {
    check_argument(s)?;
    let half_a = f64::from(inv.a) / 2.0;
    let b = f64::from(inv.b);
    let r = f64::from(inv.r);
    let mut ln = 0.0;
    for j in 1..=inv.r {
        let j = f64::from(j);
        ln += ln_gamma(s + 1.0 + (j - 1.0) * half_a) + ln_gamma(b + 2.0 + (r + j - 2.0) * half_a)
            - ln_gamma(1.0 + (j - 1.0) * half_a)
            - ln_gamma(s + b + 2.0 + (r + j - 2.0) * half_a);
    }
    Ok(ln.exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{chi_poly, rat_to_f64, Rational};
    use crate::domain::{DomainKind, DomainSpec};

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn disc_values() {
        let inv = DomainSpec::disc().invariants();
        assert!(rel(selberg_f(&inv, 0.0).unwrap(), 0.5) < 1e-14);
        assert!(rel(selberg_ratio(&inv, 1.0).unwrap(), 0.5) < 1e-14);
    }

    #[test]
    fn rank_one_is_a_beta_integral() {
        // F(s) = B(b+1, s+1)/2 for r = 1; for b = 2, s = 1 this is 1/24.
        let inv = "I:1,3".parse::<DomainSpec>().unwrap().invariants();
        assert!(rel(selberg_f(&inv, 1.0).unwrap(), 1.0 / 24.0) < 1e-13);
    }

    #[test]
    fn ratio_law_matches_chi() {
        let points = [(1, 2), (1, 1), (2, 1), (7, 3)];
        for spec in DomainSpec::catalog() {
            let inv = spec.invariants();
            if spec.is_exceptional() || inv.n > 8 {
                continue;
            }
            let chi = chi_poly(&inv);
            let chi0 = chi.eval(&Rational::from_integer(0.into()));
            for (num, den) in points {
                let s = Rational::new(num.into(), den.into());
                let want = rat_to_f64(&(chi0.clone() / chi.eval(&s)));
                let sf = rat_to_f64(&s);
                let direct = selberg_f(&inv, sf).unwrap() / selberg_f(&inv, 0.0).unwrap();
                assert!(rel(direct, want) < 1e-10, "{spec} s={s}");
                assert!(rel(selberg_ratio(&inv, sf).unwrap(), want) < 1e-10, "{spec} s={s}");
            }
        }
        let i22 = DomainSpec::new(DomainKind::I { m: 2, n: 2 }).unwrap().invariants();
        assert!(rel(selberg_ratio(&i22, 2.0).unwrap(), 1.0 / 20.0) < 1e-12);
    }

    #[test]
    fn rejects_s_at_or_below_minus_one() {
        let inv = DomainSpec::disc().invariants();
        assert!(matches!(selberg_f(&inv, -1.0), Err(Error::DomainError(_))));
        assert!(matches!(selberg_ratio(&inv, f64::NAN), Err(Error::DomainError(_))));
    }
}
