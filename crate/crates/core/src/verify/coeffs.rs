//! Squared norms of the monomial coefficients of the kernels and their
//! Monte-Carlo counterparts.

use num_complex::Complex64;
use num_traits::{One, Signed};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use statrs::function::gamma::ln_gamma;

use super::mc::{run_sharded, Budget, McEstimate, Tally};
use super::report::VerifyReport;
use crate::algebra::{chi_poly, factorial, pochhammer_value, rat_to_f64, PochhammerForm, Rational};
use crate::domain::{generic_norm_diag, membership, sample_box, DomainSpec};
use crate::error::{Error, Result};

/// Which Hartogs-type domain over `Ω`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `Y(1, Ω; k) = {|W|^{2k} < N(Z, Z)}`.
    Y,
    /// `E(1, 1, Ω; k) = {|W₁|² + |W₂|^{2k} < N(Z, Z)}`.
    E,
}

/// A monomial `W^j` (family Y) or `W₁^{j₁} W₂^{j₂}` (family E).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoeffIndex {
    Y(u32),
    E(u32, u32),
}

impl CoeffIndex {
    pub fn family(&self) -> Family {
        match self {
            Self::Y(_) => Family::Y,
            Self::E(..) => Family::E,
        }
    }
}

fn check_k(k: &Rational) -> Result<()> {
    if k.is_positive() {
        Ok(())
    } else {
        Err(Error::InvalidParams(format!("k must be positive, got {k}")))
    }
}

fn chi0(chi: &PochhammerForm) -> Rational {
    chi.eval(&Rational::from_integer(0.into()))
}

/// `vol Ω · |a_j|² = (j+1) χ((j+1)/k) / χ(0)` for `Y(1, Ω; k)`.
pub fn coeff_y_exact(spec: &DomainSpec, k: &Rational, j: u32) -> Result<Rational> {
    check_k(k)?;
    let chi = chi_poly(&spec.invariants());
    let j1 = Rational::from_integer((j + 1).into());
    let s = &j1 / k;
    Ok(j1 * chi.eval(&s) / chi0(&chi))
}

/// `vol Ω · |a_{j₁j₂}|² = (k/χ(0)) Γ(h+1) χ(h) / (Γ(j₁+1) Γ(s))` for
/// `E(1, 1, Ω; k)`, `s = (j₂+1)/k`, `h = j₁ + 1 + s`.
///
/// Since `h + 1 = s + j₁ + 2`, the Γ-ratio is the rising factorial
/// `(s)_{j₁+2}` and the whole value is an exact rational.
pub fn coeff_e_exact(spec: &DomainSpec, k: &Rational, j1: u32, j2: u32) -> Result<Rational> {
    check_k(k)?;
    let chi = chi_poly(&spec.invariants());
    let s = Rational::from_integer((j2 + 1).into()) / k;
    let h = &s + Rational::from_integer((j1 + 1).into());
    Ok(k * pochhammer_value(&s, j1 + 2) * chi.eval(&h) / (factorial(j1) * chi0(&chi)))
}

/// `ln(vol Ω · |a_j|²)` for family Y in floating point.
pub fn ln_coeff_y(chi: &PochhammerForm, ln_chi0: f64, k: f64, j: u32) -> f64 {
    let j1 = f64::from(j) + 1.0;
    j1.ln() + chi.ln_abs_f64(j1 / k) - ln_chi0
}

/// `ln(vol Ω · |a_{j₁j₂}|²)` for family E via log-Γ.
pub fn ln_coeff_e(chi: &PochhammerForm, ln_chi0: f64, k: f64, j1: u32, j2: u32) -> f64 {
    let s = (f64::from(j2) + 1.0) / k;
    let h = f64::from(j1) + 1.0 + s;
    k.ln() + ln_gamma(h + 1.0) + chi.ln_abs_f64(h) - ln_gamma(f64::from(j1) + 1.0) - ln_gamma(s) - ln_chi0
}

/// Delta-method ratio estimate `scale · Σf / Σg` from sums
/// `[Σf, Σf², Σg, Σg², Σfg]`.
pub(crate) fn ratio_estimate(t: &Tally, scale: f64, seed: u64) -> McEstimate {
    let n = t.proposals as f64;
    let (mf, mg) = (t.sums[0] / n, t.sums[2] / n);
    let vf = t.sums[1] / n - mf * mf;
    let vg = t.sums[3] / n - mg * mg;
    let cov = t.sums[4] / n - mf * mg;
    let r = mf / mg;
    let var = ((vf - 2.0 * r * cov + r * r * vg) / (mg * mg) / n).max(0.0);
    McEstimate {
        value: scale * r,
        std_error: scale * var.sqrt(),
        samples: t.proposals,
        acceptance_ratio: t.acceptance(),
        seed,
    }
}

pub(crate) fn record(sums: &mut [f64], f: f64, g: f64) {
    sums[0] += f;
    sums[1] += f * f;
    sums[2] += g;
    sums[3] += g * g;
    sums[4] += f * g;
}

pub(crate) fn sample_w(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
}

/// A point `(W…, Z)` drawn from the box, with `N(Z, Z)` when `Z ∈ Ω`.
pub(crate) struct HartogsSample {
    pub w: [Complex64; 2],
    pub n: Option<f64>,
}

pub(crate) fn sample_hartogs(spec: &DomainSpec, family: Family, k: f64, rng: &mut ChaCha8Rng) -> (HartogsSample, bool) {
    let z = sample_box(spec, rng);
    let w = [sample_w(rng), if family == Family::E { sample_w(rng) } else { Complex64::default() }];
    let n = membership(spec, &z)
        .unwrap_or(false)
        .then(|| generic_norm_diag(spec, &z).unwrap_or(0.0));
    let inside = match (family, n) {
        (_, None) => false,
        (Family::Y, Some(n)) => w[0].norm_sqr().powf(k) < n,
        (Family::E, Some(n)) => w[0].norm_sqr() + w[1].norm_sqr().powf(k) < n,
    };
    (HartogsSample { w, n }, inside)
}

/// `∫ |monomial|² dμ / vol Ω` over `Y` or `E` by box rejection in `(W, Z)`,
/// compared with the exact `1 / (vol Ω |a|²)`. `samples` counts proposals.
pub fn coeff_mc(spec: &DomainSpec, k: &Rational, index: CoeffIndex, samples: u64, seed: u64, tol: f64) -> Result<VerifyReport> {
    let exact = match index {
        CoeffIndex::Y(j) => coeff_y_exact(spec, k, j)?,
        CoeffIndex::E(j1, j2) => coeff_e_exact(spec, k, j1, j2)?,
    };
    let reference = rat_to_f64(&(Rational::one() / exact));
    let kf = rat_to_f64(k);
    let family = index.family();
    let (e1, e2) = match index {
        CoeffIndex::Y(j) => (j as i32, 0),
        CoeffIndex::E(a, b) => (a as i32, b as i32),
    };
    let tally = run_sharded(seed, Budget::Proposals(samples), 5, |rng, sums| {
        let (s, inside) = sample_hartogs(spec, family, kf, rng);
        let f = if inside {
            s.w[0].norm_sqr().powi(e1) * s.w[1].norm_sqr().powi(e2)
        } else {
            0.0
        };
        record(sums, f, if s.n.is_some() { 1.0 } else { 0.0 });
        inside
    })?;
    // Each W coordinate contributes Lebesgue/π over a box of area 4.
    let w_dims = if family == Family::E { 2 } else { 1 };
    let scale = (4.0 / std::f64::consts::PI).powi(w_dims);
    let label = match index {
        CoeffIndex::Y(j) => format!("Y coefficient integral j={j} k={k}"),
        CoeffIndex::E(a, b) => format!("E coefficient integral j=({a},{b}) k={k}"),
    };
    Ok(VerifyReport::stochastic(label, spec, ratio_estimate(&tally, scale, seed), reference, tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn exact_examples() {
        let d = DomainSpec::disc();
        assert_eq!(coeff_y_exact(&d, &rat(1, 1), 0).unwrap(), rat(2, 1));
        assert_eq!(coeff_y_exact(&d, &rat(1, 1), 1).unwrap(), rat(6, 1));
        assert_eq!(coeff_e_exact(&d, &rat(1, 1), 0, 0).unwrap(), rat(6, 1));
        assert_eq!(coeff_e_exact(&d, &rat(2, 1), 1, 1).unwrap(), rat(48, 1));
        assert!(coeff_y_exact(&d, &rat(0, 1), 0).is_err());
    }

    #[test]
    fn log_gamma_route_matches_exact() {
        for s in ["I:1,1", "IV:3", "I:2,2", "VI"] {
            let spec: DomainSpec = s.parse().unwrap();
            let chi = chi_poly(&spec.invariants());
            let l0 = chi.ln_abs_f64(0.0);
            for k in [rat(1, 1), rat(3, 2), rat(1, 3)] {
                let kf = rat_to_f64(&k);
                for (a, b) in [(0, 0), (3, 1), (7, 12)] {
                    let exact = rat_to_f64(&coeff_e_exact(&spec, &k, a, b).unwrap());
                    let approx = ln_coeff_e(&chi, l0, kf, a, b).exp();
                    assert!(((approx - exact) / exact).abs() < 1e-11, "{s} k={k} ({a},{b})");
                }
                let exact = rat_to_f64(&coeff_y_exact(&spec, &k, 5).unwrap());
                let approx = ln_coeff_y(&chi, l0, kf, 5).exp();
                assert!(((approx - exact) / exact).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn coeff_e_growth_depends_on_h_and_j1() {
        // k = 1: the value is a function of (h, j₁) alone.
        let spec: DomainSpec = "I:2,2".parse().unwrap();
        let k = rat(1, 1);
        let a = coeff_e_exact(&spec, &k, 2, 3).unwrap();
        let chi = chi_poly(&spec.invariants());
        let h = rat(7, 1);
        let want = pochhammer_value(&rat(4, 1), 4) * chi.eval(&h) / (factorial(2) * chi0(&chi));
        assert_eq!(a, want);
    }

    #[test]
    fn disc_y_volume_integral() {
        let r = coeff_mc(&DomainSpec::disc(), &rat(1, 1), CoeffIndex::Y(0), 300_000, 5, 0.02).unwrap();
        assert!((r.reference - 0.5).abs() < 1e-15);
        assert!(r.pass, "{r:?}");
    }
}
