//! Univariate closed forms `Σ c · X^p (1−X)^{−d}`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::{factorial, rat_from_f64, rat_to_f64, to_binom_basis, RatPoly, Rational};
use crate::error::{Error, Result};

/// A finite sum `Σ c · X^p (1−X)^{−d}` with exact rational coefficients.
///
/// `k` is carried along only for serialization (it is the `k` of the kernel
/// the expression belongs to, 1 for free-standing sums).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniExpr {
    k: Rational,
    terms: BTreeMap<(u32, u32), Rational>,
}

impl UniExpr {
    pub fn zero(k: Rational) -> Self {
        Self {
            k,
            terms: BTreeMap::new(),
        }
    }

    /// `c · X^p (1−X)^{−d}`.
    pub fn monomial(k: Rational, c: Rational, p: u32, d: u32) -> Self {
        let mut e = Self::zero(k);
        e.add_term(c, p, d);
        e
    }

    pub fn k(&self) -> &Rational {
        &self.k
    }

    pub fn with_k(mut self, k: Rational) -> Self {
        self.k = k;
        self
    }

    /// Terms `(c, p, d)` in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Rational, u32, u32)> {
        self.terms.iter().map(|(&(p, d), c)| (c, p, d))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, c: Rational, p: u32, d: u32) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((p, d)).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(p, d));
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.k.clone());
        for (coef, p, d) in self.terms() {
            out.add_term(coef * c, p, d);
        }
        out
    }

    /// `d/dX`.
    pub fn derivative(&self) -> Self {
        let mut out = Self::zero(self.k.clone());
        for (c, p, d) in self.terms() {
            if p > 0 {
                out.add_term(c * Rational::from_integer(p.into()), p - 1, d);
            }
            if d > 0 {
                out.add_term(c * Rational::from_integer(d.into()), p, d + 1);
            }
        }
        out
    }

    /// Principle of inflation: `(1/m!) · d^{m−1}/dX^{m−1}`.
    pub fn inflate(&self, m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParams("inflation order must be positive".into()));
        }
        let mut out = self.clone();
        for _ in 1..m {
            out = out.derivative();
        }
        Ok(out.scale(&(Rational::one() / factorial(m))))
    }

    /// Exact evaluation at a rational point `X ≠ 1`.
    pub fn eval_exact(&self, x: &Rational) -> Rational {
        let inv = Rational::one() / (Rational::one() - x);
        self.terms()
            .map(|(c, p, d)| c * num_traits::pow(x.clone(), p as usize) * num_traits::pow(inv.clone(), d as usize))
            .fold(Rational::zero(), |acc, t| acc + t)
    }

    /// Evaluation at a float point, carried out exactly on the dyadic value of
    /// `x` so that cancellation between large coefficients is harmless.
    pub fn eval(&self, x: f64) -> f64 {
        match rat_from_f64(x) {
            Some(xr) if x != 1.0 => rat_to_f64(&self.eval_exact(&xr)),
            _ => f64::NAN,
        }
    }

    /// Plain floating-point evaluation.
    pub fn eval_fast(&self, x: f64) -> f64 {
        let inv = 1.0 / (1.0 - x);
        self.terms()
            .map(|(c, p, d)| rat_to_f64(c) * x.powi(p as i32) * inv.powi(d as i32))
            .sum()
    }
}

/// `Σ_{j≥0} P(j) X^j` in closed form: `Σ_d c_d (1−X)^{−(d+1)}` with `c_d` the
/// coefficients of `P` in the binomial basis `C(j+d, d)`.
pub fn sum_poly_series(poly: &RatPoly) -> UniExpr {
    let mut out = UniExpr::zero(Rational::one());
    for (d, c) in to_binom_basis(poly).into_iter().enumerate() {
        out.add_term(c, 0, d as u32 + 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn series(poly: &RatPoly, x: f64, terms: usize) -> f64 {
        (0..terms)
            .map(|j| poly.eval_f64(j as f64) * x.powi(j as i32))
            .sum()
    }

    #[test]
    fn geometric_series() {
        let e = sum_poly_series(&RatPoly::one());
        assert_eq!(e, UniExpr::monomial(rat(1, 1), rat(1, 1), 0, 1));
    }

    #[test]
    fn quadratic_and_linear_sums() {
        let p = RatPoly::from_i64(&[2, 3, 1]); // (j+1)(j+2)
        let e = sum_poly_series(&p);
        assert_eq!(e, UniExpr::monomial(rat(1, 1), rat(2, 1), 0, 3));
        assert!((e.eval(0.3) - series(&p, 0.3, 200)).abs() < 1e-12 * e.eval(0.3));

        let j = RatPoly::from_i64(&[0, 1]);
        let e = sum_poly_series(&j);
        let mut want = UniExpr::monomial(rat(1, 1), rat(1, 1), 0, 2);
        want.add_term(rat(-1, 1), 0, 1);
        assert_eq!(e, want);
        assert!((e.eval(0.3) - series(&j, 0.3, 200)).abs() < 1e-12);
    }

    #[test]
    fn inflation_of_disc_kernel_gives_ball_kernels() {
        // (1−r)^{−2} ↦ (1−r)^{−(m+1)}
        let l = UniExpr::monomial(rat(1, 1), rat(1, 1), 0, 2);
        for m in 1..=5 {
            assert_eq!(
                l.inflate(m).unwrap(),
                UniExpr::monomial(rat(1, 1), rat(1, 1), 0, m + 1)
            );
        }
        assert!(l.inflate(0).is_err());
    }

    #[test]
    fn inflate_two_of_ball_core() {
        let f = UniExpr::monomial(rat(1, 1), rat(2, 1), 0, 3);
        assert_eq!(f.inflate(2).unwrap(), UniExpr::monomial(rat(1, 1), rat(3, 1), 0, 4));
        assert_eq!(f.inflate(1).unwrap(), f);
    }

    #[test]
    fn derivative_handles_numerator_powers() {
        let mut e = UniExpr::monomial(rat(1, 1), rat(3, 2), 2, 1);
        e.add_term(rat(-1, 3), 0, 4);
        let x = 0.37;
        let h = 1e-6;
        let fd = (e.eval(x + h) - e.eval(x - h)) / (2.0 * h);
        let got = e.derivative().eval(x);
        assert!((fd - got).abs() < 1e-7 * got.abs());
        assert!((e.eval(x) - e.eval_fast(x)).abs() < 1e-12 * e.eval(x).abs());
    }
}
