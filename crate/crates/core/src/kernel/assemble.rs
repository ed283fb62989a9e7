//! Assembled kernels of `Y(q, Ω; k)` and `E(p, q, Ω; k)` and their evaluation.

use num_complex::Complex64;

use super::build::{e_kernel_core, y_kernel_core};
use super::expr::{mixed_partial, KernelExpr};
use super::uni::UniExpr;
use crate::algebra::{chi_poly, rat_to_f64, Rational};
use crate::domain::{generic_norm_diag, membership, DomainSpec, Element};
use crate::error::{Error, Result};

/// Resolves the volume of `Ω` w.r.t. `α^n`: an explicit value wins, rank-one
/// domains default to 1, anything else is unknown.
pub fn resolve_volume(spec: &DomainSpec, vol: Option<f64>) -> Result<f64> {
    match vol.or_else(|| spec.known_volume()) {
        Some(v) if v > 0.0 && v.is_finite() => Ok(v),
        Some(v) => Err(Error::InvalidParams(format!("volume must be positive, got {v}"))),
        None => Err(Error::VolumeUnknown(spec.to_string())),
    }
}

fn norm_sq(w: &[Complex64]) -> f64 {
    w.iter().map(|c| c.norm_sqr()).sum()
}

/// `N(Z, Z)` for a point of `Ω`, or `OutsideDomain`.
fn interior_norm(spec: &DomainSpec, z: &Element) -> Result<f64> {
    if !membership(spec, z)? {
        return Err(Error::OutsideDomain(format!("Z is not in {spec}")));
    }
    generic_norm_diag(spec, z)
}

/// The kernel of `Y(q, Ω; k)`:
/// `(1/q!) (k/(χ(0) vol Ω)) F^{(q−1)}(X) N^{−q/k−g}`, `X = ‖W‖²/N^{1/k}`.
#[derive(Clone, Debug)]
pub struct YKernel {
    spec: DomainSpec,
    k: Rational,
    q: u32,
    /// `(1/q!) F^{(q−1)}`.
    core: UniExpr,
    chi0: f64,
}

impl YKernel {
    pub fn new(spec: &DomainSpec, k: &Rational, q: u32) -> Result<Self> {
        let core = y_kernel_core(spec, k)?.inflate(q)?;
        let chi0 = rat_to_f64(&chi_poly(&spec.invariants()).eval(&Rational::from_integer(0.into())));
        Ok(Self {
            spec: *spec,
            k: k.clone(),
            q,
            core,
            chi0,
        })
    }

    pub fn core(&self) -> &UniExpr {
        &self.core
    }

    /// `vol Ω · K_Y` as a function of `‖W‖²` and `N = N(Z, Z)`.
    pub fn eval_scaled(&self, w_norm_sq: f64, n: f64) -> Result<f64> {
        let kf = rat_to_f64(&self.k);
        let g = f64::from(self.spec.invariants().g);
        let x = w_norm_sq / n.powf(1.0 / kf);
        if !(n > 0.0) || !(x < 1.0) {
            return Err(Error::OutsideDomain(format!(
                "(W, Z) is not in Y: |W|^2 / N^(1/k) = {x}"
            )));
        }
        Ok(kf / self.chi0 * self.core.eval(x) * n.powf(-f64::from(self.q) / kf - g))
    }

    pub fn eval(&self, w: &[Complex64], z: &Element, vol: Option<f64>) -> Result<f64> {
        if w.len() != self.q as usize {
            return Err(Error::WrongArity {
                expected: self.q as usize,
                got: w.len(),
            });
        }
        let vol = resolve_volume(&self.spec, vol)?;
        let n = interior_norm(&self.spec, z)?;
        Ok(self.eval_scaled(norm_sq(w), n)? / vol)
    }
}

/// The kernel of `E(p, q, Ω; k)`:
/// `(1/(p! q!)) Λ^{(p−1, q−1)}(t₁, t₂) N^{−p−q/k−g}`, `t₁ = ‖W₁‖²/N`,
/// `t₂ = ‖W₂‖²/N^{1/k}`.
#[derive(Clone, Debug)]
pub struct EKernel {
    spec: DomainSpec,
    k: Rational,
    p: u32,
    q: u32,
    core: KernelExpr,
    chi0: f64,
}

impl EKernel {
    pub fn new(spec: &DomainSpec, k: &Rational, p: u32, q: u32) -> Result<Self> {
        Self::from_lambda(spec, &e_kernel_core(spec, k)?, p, q)
    }

    /// Reuses an already built `Λ` for other inflation orders.
    pub fn from_lambda(spec: &DomainSpec, lambda: &KernelExpr, p: u32, q: u32) -> Result<Self> {
        let core = mixed_partial(lambda, p, q)?;
        let chi0 = rat_to_f64(&chi_poly(&spec.invariants()).eval(&Rational::from_integer(0.into())));
        Ok(Self {
            spec: *spec,
            k: lambda.k().clone(),
            p,
            q,
            core,
            chi0,
        })
    }

    pub fn core(&self) -> &KernelExpr {
        &self.core
    }

    /// `vol Ω · K_E` as a function of `‖W₁‖²`, `‖W₂‖²` and `N = N(Z, Z)`.
    pub fn eval_scaled(&self, w1_norm_sq: f64, w2_norm_sq: f64, n: f64) -> Result<f64> {
        let kf = rat_to_f64(&self.k);
        let g = f64::from(self.spec.invariants().g);
        if !(n > 0.0) {
            return Err(Error::OutsideDomain(format!("N(Z,Z) = {n} is not positive")));
        }
        let t1 = w1_norm_sq / n;
        let t2 = w2_norm_sq / n.powf(1.0 / kf);
        if !(t1 < 1.0) || !(t1 + t2.powf(kf) < 1.0) {
            return Err(Error::OutsideDomain(format!(
                "(W1, W2, Z) is not in E: t1 = {t1}, t2 = {t2}"
            )));
        }
        let exponent = -f64::from(self.p) - f64::from(self.q) / kf - g;
        Ok(self.core.eval_t(t1, t2)? / self.chi0 * n.powf(exponent))
    }

    pub fn eval(&self, w1: &[Complex64], w2: &[Complex64], z: &Element, vol: Option<f64>) -> Result<f64> {
        if w1.len() != self.p as usize {
            return Err(Error::WrongArity {
                expected: self.p as usize,
                got: w1.len(),
            });
        }
        if w2.len() != self.q as usize {
            return Err(Error::WrongArity {
                expected: self.q as usize,
                got: w2.len(),
            });
        }
        let vol = resolve_volume(&self.spec, vol)?;
        let n = interior_norm(&self.spec, z)?;
        Ok(self.eval_scaled(norm_sq(w1), norm_sq(w2), n)? / vol)
    }
}

/// `K_Y((W, Z), (W, Z))` for `Y(q, Ω; k)` with `q = W.len()`.
pub fn eval_y(spec: &DomainSpec, k: &Rational, w: &[Complex64], z: &Element, vol: Option<f64>) -> Result<f64> {
    YKernel::new(spec, k, w.len() as u32)?.eval(w, z, vol)
}

/// `K_E((W₁, W₂, Z), (W₁, W₂, Z))` for `E(p, q, Ω; k)` with `p = W₁.len()`,
/// `q = W₂.len()`.
pub fn eval_e(
    spec: &DomainSpec,
    k: &Rational,
    w1: &[Complex64],
    w2: &[Complex64],
    z: &Element,
    vol: Option<f64>,
) -> Result<f64> {
    EKernel::new(spec, k, w1.len() as u32, w2.len() as u32)?.eval(w1, w2, z, vol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    fn disc_point(z: f64) -> Element {
        Element::from_coords(&DomainSpec::disc(), &[c(z)]).unwrap()
    }

    #[test]
    fn y_disc_examples() {
        let d = DomainSpec::disc();
        let k = rat(1, 1);
        assert!(rel(eval_y(&d, &k, &[c(0.0)], &disc_point(0.0), Some(1.0)).unwrap(), 2.0) < 1e-14);
        let v = eval_y(&d, &k, &[c(0.3), c(0.0)], &disc_point(0.4), Some(1.0)).unwrap();
        assert!(rel(v, 3.0 * 0.75f64.powi(-4)) < 1e-12);
    }

    #[test]
    fn e_disc_examples() {
        let d = DomainSpec::disc();
        let k = rat(1, 1);
        let z0 = disc_point(0.0);
        assert!(rel(eval_e(&d, &k, &[c(0.0)], &[c(0.0)], &z0, None).unwrap(), 6.0) < 1e-12);
        let v = eval_e(&d, &k, &[c(0.2)], &[c(0.3)], &disc_point(0.1), Some(1.0)).unwrap();
        assert!(rel(v, 6.0 * (1.0f64 - 0.04 - 0.09 - 0.01).powi(-4)) < 1e-12);
    }

    #[test]
    fn errors() {
        let d = DomainSpec::disc();
        let k = rat(1, 1);
        assert!(matches!(
            eval_y(&d, &k, &[c(0.9)], &disc_point(0.5), Some(1.0)),
            Err(Error::OutsideDomain(_))
        ));
        assert!(matches!(
            eval_y(&d, &k, &[c(0.0)], &disc_point(1.0), Some(1.0)),
            Err(Error::OutsideDomain(_))
        ));
        let i22: DomainSpec = "I:2,2".parse().unwrap();
        assert!(matches!(
            eval_y(&i22, &k, &[c(0.0)], &Element::zero(&i22), None),
            Err(Error::VolumeUnknown(_))
        ));
    }

    #[test]
    fn center_value_positive() {
        for s in ["I:2,2", "IV:3", "III:2", "V", "VI"] {
            let spec: DomainSpec = s.parse().unwrap();
            let z = Element::zero(&spec);
            let v = eval_y(&spec, &rat(3, 2), &[c(0.0), c(0.0)], &z, Some(1.0)).unwrap();
            assert!(v > 0.0 && v.is_finite(), "{s}");
        }
    }
}
