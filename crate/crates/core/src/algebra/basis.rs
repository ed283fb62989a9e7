use num_traits::Zero;

use super::poly::RatPoly;
use super::rational::{factorial, Rational};
use crate::error::{Error, Result};

/// Coefficients `β_d` with `p(x) = Σ_{d=0}^{deg} β_d (x + shift)_d`.
///
/// The rising-factorial basis is triangular with respect to the monomials:
/// `p = β_0 + (x+shift)[β_1 + (x+shift+1)[β_2 + ⋯]]`, so the coefficients come
/// out of repeated exact division by the next linear factor.
pub fn rising_basis(p: &RatPoly, shift: &Rational) -> Vec<Rational> {
    let Some(deg) = p.degree() else {
        return Vec::new();
    };
    let mut out = Vec::with_capacity(deg + 1);
    let mut rest = p.clone();
    let mut next = shift.clone();
    for _ in 0..=deg {
        let (quotient, remainder) = rest.div_linear(&next);
        out.push(remainder);
        rest = quotient;
        next += Rational::from_integer(1.into());
    }
    debug_assert!(rest.is_zero());
    out
}

/// Coefficients `c_d` with `p(j) = Σ_d c_d · C(j+d, d)`, so that
/// `Σ_{j≥0} p(j) X^j = Σ_d c_d (1-X)^{-(d+1)}`.
pub fn to_binom_basis(p: &RatPoly) -> Vec<Rational> {
    // C(j+d, d) = (j+1)_d / d!
    rising_basis(p, &Rational::from_integer(1.into()))
        .into_iter()
        .enumerate()
        .map(|(d, beta)| beta * factorial(d as u32))
        .collect()
}

/// Coefficients `b_1..b_deg` with `p(h) = Σ_{j≥1} b_j (h+1)_j`.
///
/// The basis spans exactly the polynomials vanishing at `h = -1`.
pub fn to_shifted_pochhammer_basis(p: &RatPoly) -> Result<Vec<Rational>> {
    let mut coeffs = rising_basis(p, &Rational::from_integer(1.into()));
    if coeffs.is_empty() {
        return Ok(coeffs);
    }
    let at_minus_one = coeffs.remove(0);
    if !at_minus_one.is_zero() {
        return Err(Error::BasisError(format!(
            "p(-1) = {at_minus_one}, expected 0"
        )));
    }
    Ok(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{binomial, pochhammer, rat};

    fn binom_eval(c: &[Rational], j: u32) -> Rational {
        c.iter()
            .enumerate()
            .map(|(d, cd)| cd * binomial(j + d as u32, d as u32))
            .sum()
    }

    #[test]
    fn binom_examples() {
        assert_eq!(to_binom_basis(&RatPoly::one()), vec![rat(1, 1)]);
        assert_eq!(
            to_binom_basis(&RatPoly::from_i64(&[2, 3, 1])),
            vec![rat(0, 1), rat(0, 1), rat(2, 1)]
        );
        assert_eq!(
            to_binom_basis(&RatPoly::from_i64(&[0, 1])),
            vec![rat(-1, 1), rat(1, 1)]
        );
        assert!(to_binom_basis(&RatPoly::zero()).is_empty());
    }

    #[test]
    fn binom_reconstructs_at_integer_points() {
        let p = RatPoly::from_coeffs(vec![rat(1, 3), rat(-2, 1), rat(0, 1), rat(5, 7), rat(1, 2)]);
        let c = to_binom_basis(&p);
        for j in 0..=5u32 {
            assert_eq!(binom_eval(&c, j), p.eval(&rat(j.into(), 1)));
        }
    }

    #[test]
    fn shifted_pochhammer_examples() {
        assert_eq!(
            to_shifted_pochhammer_basis(&RatPoly::from_i64(&[1, 1])).unwrap(),
            vec![rat(1, 1)]
        );
        // h(h-1)(h+1) = h^3 - h
        assert_eq!(
            to_shifted_pochhammer_basis(&RatPoly::from_i64(&[0, -1, 0, 1])).unwrap(),
            vec![rat(6, 1), rat(-6, 1), rat(1, 1)]
        );
        assert_eq!(
            to_shifted_pochhammer_basis(&pochhammer(&rat(1, 1), 2)).unwrap(),
            vec![rat(0, 1), rat(1, 1)]
        );
    }

    #[test]
    fn shifted_pochhammer_rejects_nonvanishing() {
        let err = to_shifted_pochhammer_basis(&RatPoly::from_i64(&[1, 0, 1])).unwrap_err();
        assert!(matches!(err, Error::BasisError(_)));
    }
}
