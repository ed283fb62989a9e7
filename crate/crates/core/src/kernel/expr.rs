//! Two-variable kernel expressions in the canonical variables `(u, λ)`.

use std::collections::BTreeMap;

use num_traits::{One, Signed, ToPrimitive, Zero};

use super::uni::UniExpr;
use crate::algebra::{factorial, rat_from_f64, rat_to_f64, Rational};
use crate::error::{Error, Result};

/// One term `c · u^{e₀ + e₁/k} · λ^p · (1−λ)^{−d}` with `u = 1 − t₁` and
/// `λ = t₂ u^{−1/k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelTerm {
    pub c: Rational,
    pub e0: Rational,
    pub e1: Rational,
    pub p: u32,
    pub d: u32,
}

/// Symbolic factor multiplying the term sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Prefactor {
    #[default]
    One,
    /// `1/(χ(0) · vol Ω)`, supplied numerically at evaluation time.
    InvChi0Vol,
}

type Key = (Rational, Rational, u32, u32);

/// A canonical sum of [`KernelTerm`]s for a fixed rational `k > 0`.
///
/// Terms with equal `(e₀, e₁, p, d)` are merged and zero terms dropped; the
/// family is closed under `∂/∂t₁` and `∂/∂t₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelExpr {
    k: Rational,
    terms: BTreeMap<Key, Rational>,
    prefactor: Prefactor,
}

impl KernelExpr {
    pub fn zero(k: Rational) -> Result<Self> {
        if !k.is_positive() {
            return Err(Error::InvalidParams(format!("k must be positive, got {k}")));
        }
        Ok(Self {
            k,
            terms: BTreeMap::new(),
            prefactor: Prefactor::One,
        })
    }

    pub fn from_terms(k: Rational, terms: impl IntoIterator<Item = KernelTerm>) -> Result<Self> {
        let mut out = Self::zero(k)?;
        for t in terms {
            out.add_term(t);
        }
        Ok(out)
    }

    /// The univariate expression `Σ c λ^p (1−λ)^{−d}` with no `u` dependence.
    pub fn from_uni(uni: &UniExpr) -> Result<Self> {
        let mut out = Self::zero(uni.k().clone())?;
        for (c, p, d) in uni.terms() {
            out.push(c.clone(), Rational::zero(), Rational::zero(), p, d);
        }
        Ok(out)
    }

    pub fn k(&self) -> &Rational {
        &self.k
    }

    pub fn prefactor(&self) -> Prefactor {
        self.prefactor
    }

    pub fn with_prefactor(mut self, prefactor: Prefactor) -> Self {
        self.prefactor = prefactor;
        self
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order (ascending `e₀`, `e₁`, `p`, `d`).
    pub fn terms(&self) -> impl Iterator<Item = KernelTerm> + '_ {
        self.terms.iter().map(|((e0, e1, p, d), c)| KernelTerm {
            c: c.clone(),
            e0: e0.clone(),
            e1: e1.clone(),
            p: *p,
            d: *d,
        })
    }

    pub fn add_term(&mut self, t: KernelTerm) {
        self.push(t.c, t.e0, t.e1, t.p, t.d);
    }

    fn push(&mut self, c: Rational, e0: Rational, e1: Rational, p: u32, d: u32) {
        if c.is_zero() {
            return;
        }
        let key = (e0, e1, p, d);
        match self.terms.get_mut(&key) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for t in other.terms() {
            self.add_term(t);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self {
            k: self.k.clone(),
            terms: BTreeMap::new(),
            prefactor: self.prefactor,
        };
        for t in self.terms() {
            out.push(t.c * c, t.e0, t.e1, t.p, t.d);
        }
        out
    }

    /// Multiplies every term by `u^{a₀ + a₁/k}`.
    pub fn shift_u(&self, a0: &Rational, a1: &Rational) -> Self {
        let mut out = self.empty_like();
        for t in self.terms() {
            out.push(t.c, t.e0 + a0, t.e1 + a1, t.p, t.d);
        }
        out
    }

    fn empty_like(&self) -> Self {
        Self {
            k: self.k.clone(),
            terms: BTreeMap::new(),
            prefactor: self.prefactor,
        }
    }

    /// `∂/∂t₁`, using `∂u/∂t₁ = −1` and `∂λ/∂t₁ = (λ/k) u^{−1}`.
    pub fn partial_t1(&self) -> Self {
        let mut out = self.empty_like();
        let inv_k = Rational::one() / &self.k;
        let one = Rational::one();
        for t in self.terms() {
            let e = &t.e0 + &t.e1 * &inv_k;
            let e0 = &t.e0 - &one;
            // u^{E−1} [−E g + (λ/k) g'] with λ g' = p λ^p (1−λ)^{−d} + d λ^{p+1} (1−λ)^{−d−1}.
            let c_same = &t.c * (-&e + Rational::from_integer(t.p.into()) * &inv_k);
            out.push(c_same, e0.clone(), t.e1.clone(), t.p, t.d);
            if t.d > 0 {
                let c_up = &t.c * Rational::from_integer(t.d.into()) * &inv_k;
                out.push(c_up, e0, t.e1, t.p + 1, t.d + 1);
            }
        }
        out
    }

    /// `∂/∂t₂`, using `∂λ/∂t₂ = u^{−1/k}`.
    pub fn partial_t2(&self) -> Self {
        let mut out = self.empty_like();
        let one = Rational::one();
        for t in self.terms() {
            let e1 = &t.e1 - &one;
            if t.p > 0 {
                let c = &t.c * Rational::from_integer(t.p.into());
                out.push(c, t.e0.clone(), e1.clone(), t.p - 1, t.d);
            }
            if t.d > 0 {
                let c = &t.c * Rational::from_integer(t.d.into());
                out.push(c, t.e0, e1, t.p, t.d + 1);
            }
        }
        out
    }

    /// Univariate inflation in `λ` (the expression must not depend on `u`):
    /// `(1/m!) d^{m−1}/dλ^{m−1}`.
    pub fn inflate(&self, m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParams("inflation order must be positive".into()));
        }
        if self.terms().any(|t| !t.e0.is_zero() || !t.e1.is_zero()) {
            return Err(Error::InvalidParams(
                "univariate inflation needs an expression free of u".into(),
            ));
        }
        let mut uni = UniExpr::zero(self.k.clone());
        for t in self.terms() {
            uni.add_term(t.c, t.p, t.d);
        }
        Ok(Self::from_uni(&uni.inflate(m)?)?.with_prefactor(self.prefactor))
    }

    /// Evaluates the term sum (without the prefactor) at `(t₁, t₂)`.
    pub fn eval_t(&self, t1: f64, t2: f64) -> Result<f64> {
        let u = 1.0 - t1;
        let lambda = t2 * u.powf(-1.0 / rat_to_f64(&self.k));
        self.eval(u, lambda)
    }

    /// Evaluates the term sum at `(u, λ)` with `u ∈ (0, 1]`, `λ ∈ [0, 1)`.
    ///
    /// Terms are grouped by the fractional part of `e₀ + e₁/k`; each group is
    /// summed exactly on the dyadic values of `u` and `λ`, so the large
    /// alternating coefficients of high-dimensional kernels do not cancel in
    /// floating point. Only the final `u^{frac}` factors are applied in `f64`.
    pub fn eval(&self, u: f64, lambda: f64) -> Result<f64> {
        if !(u > 0.0 && u <= 1.0) || !(0.0..1.0).contains(&lambda) {
            return Err(Error::OutsideDomain(format!(
                "kernel expression needs u in (0,1] and lambda in [0,1), got u={u}, lambda={lambda}"
            )));
        }
        let ur = rat_from_f64(u).expect("finite");
        let lr = rat_from_f64(lambda).expect("finite");
        let inv_u = Rational::one() / &ur;
        let inv_l = Rational::one() / (Rational::one() - &lr);
        let mut pow_cache: BTreeMap<(u8, i64), Rational> = BTreeMap::new();
        let mut power = |which: u8, n: i64| -> Rational {
            pow_cache
                .entry((which, n))
                .or_insert_with(|| {
                    let base = match (which, n < 0) {
                        (0, false) => &ur,
                        (0, true) => &inv_u,
                        (1, _) => &lr,
                        _ => &inv_l,
                    };
                    num_traits::pow(base.clone(), n.unsigned_abs() as usize)
                })
                .clone()
        };
        let inv_k = Rational::one() / &self.k;
        let mut groups: BTreeMap<Rational, Rational> = BTreeMap::new();
        for ((e0, e1, p, d), c) in &self.terms {
            let e = e0 + e1 * &inv_k;
            let whole = e.floor();
            let frac = &e - &whole;
            let n = whole.to_integer().to_i64().expect("exponent fits in i64");
            let value = c * power(0, n) * power(1, *p as i64) * power(2, *d as i64);
            *groups.entry(frac).or_insert_with(Rational::zero) += value;
        }
        Ok(groups
            .iter()
            .map(|(frac, sum)| rat_to_f64(sum) * u.powf(rat_to_f64(frac)))
            .sum())
    }

    /// Plain floating-point evaluation at `(u, λ)`.
    pub fn eval_fast(&self, u: f64, lambda: f64) -> f64 {
        let kf = rat_to_f64(&self.k);
        self.terms
            .iter()
            .map(|((e0, e1, p, d), c)| {
                let e = rat_to_f64(e0) + rat_to_f64(e1) / kf;
                rat_to_f64(c) * u.powf(e) * lambda.powi(*p as i32) * (1.0 - lambda).powi(-(*d as i32))
            })
            .sum()
    }
}

/// `(1/(p! q!)) ∂^{p−1}_{t₁} ∂^{q−1}_{t₂}` of an expression, the inflation step
/// for the two Hartogs variables.
pub fn mixed_partial(expr: &KernelExpr, p: u32, q: u32) -> Result<KernelExpr> {
    if p == 0 || q == 0 {
        return Err(Error::InvalidParams(format!(
            "mixed partial orders must be positive, got p={p}, q={q}"
        )));
    }
    let mut out = expr.clone();
    for _ in 1..q {
        out = out.partial_t2();
    }
    for _ in 1..p {
        out = out.partial_t1();
    }
    Ok(out.scale(&(Rational::one() / (factorial(p) * factorial(q)))))
}

/// True when every term has the canonical shape: non-negative `p` and `d` are
/// enforced by the types, so this checks that no zero coefficients survived and
/// that `k` is positive.
pub fn is_canonical(expr: &KernelExpr) -> bool {
    expr.k.is_positive() && expr.terms.values().all(|c| !c.is_zero())
}
