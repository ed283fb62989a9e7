//! Frames, box sampling and linear isometries fixing the origin.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use super::albert::Albert;
use super::element::Element;
use super::octonion::OctonionC;
use super::{DomainKind, DomainSpec};
use crate::error::{Error, Result};

/// `Σ λ_j c_j` for a fixed frame `c_1..c_r` of the domain.
///
/// Types I and III use the diagonal matrix units, type II the 2×2 alternating
/// blocks, type VI the diagonal idempotents. Type IV uses
/// `c± = (e₁ ± i e₂)/2`, and type V the same combination inside the `a₃`
/// octonion.
pub fn frame_element(spec: &DomainSpec, lambdas: &[f64]) -> Result<Element> {
    let r = spec.rank();
    if lambdas.len() != r {
        return Err(Error::WrongArity {
            expected: r,
            got: lambdas.len(),
        });
    }
    let re = |v: f64| Complex64::new(v, 0.0);
    let pair = |l: &[f64]| {
        (
            re((l[0] + l[1]) / 2.0),
            Complex64::new(0.0, (l[0] - l[1]) / 2.0),
        )
    };
    match *spec.kind() {
        DomainKind::I { m, n } => {
            let mut x = DMatrix::zeros(m as usize, n as usize);
            for (j, &l) in lambdas.iter().enumerate() {
                x[(j, j)] = re(l);
            }
            Element::from_matrix(spec, x)
        }
        DomainKind::II { n } => {
            let mut x = DMatrix::zeros(n as usize, n as usize);
            for (j, &l) in lambdas.iter().enumerate() {
                x[(2 * j, 2 * j + 1)] = re(l);
                x[(2 * j + 1, 2 * j)] = re(-l);
            }
            Element::from_matrix(spec, x)
        }
        DomainKind::III { n } => {
            let mut x = DMatrix::zeros(n as usize, n as usize);
            for (j, &l) in lambdas.iter().enumerate() {
                x[(j, j)] = re(l);
            }
            Element::from_matrix(spec, x)
        }
        DomainKind::IV { n } => {
            let mut v = vec![Complex64::default(); n as usize];
            (v[0], v[1]) = pair(lambdas);
            Ok(Element::Vector(v))
        }
        DomainKind::V => {
            let (x0, x1) = pair(lambdas);
            let mut a3 = OctonionC::zero();
            a3.0[0] = x0;
            a3.0[1] = x1;
            Ok(Element::Exceptional16 {
                a2: OctonionC::zero(),
                a3,
            })
        }
        DomainKind::VI => Ok(Element::Albert(Albert::diagonal([
            lambdas[0], lambdas[1], lambdas[2],
        ]))),
    }
}

/// Uniform sample of the bounding box: every free complex coordinate uniform
/// in `[−1, 1]²`, dependent entries filled by symmetry.
pub fn sample_box<R: Rng + ?Sized>(spec: &DomainSpec, rng: &mut R) -> Element {
    let z: Vec<Complex64> = (0..spec.dim())
        .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
        .collect();
    Element::from_coords(spec, &z).expect("coordinate count matches spec")
}

/// A linear automorphism of the domain fixing the origin.
#[derive(Clone, Debug, PartialEq)]
pub enum Isometry {
    Identity,
    /// `x ↦ U x V` with unitary `U`, `V` (type I).
    Sandwich { u: DMatrix<Complex64>, v: DMatrix<Complex64> },
    /// `x ↦ U x Uᵀ` with unitary `U` (types II, III).
    Congruence { u: DMatrix<Complex64> },
    /// `x ↦ e^{iθ} O x` with real orthogonal `O` (type IV).
    Orthogonal { phase: Complex64, o: DMatrix<f64> },
    /// Independent phases on `a₂` and `a₃` (type V).
    Phases16 { p2: Complex64, p3: Complex64 },
    /// `X ↦ D X D` with `D = diag(e^{iφ₁}, e^{iφ₂}, e^{iφ₃})` (type VI).
    AlbertPhases { phi: [f64; 3] },
}

impl Isometry {
    pub fn apply(&self, x: &Element) -> Element {
        match (self, x) {
            (Self::Identity, _) => x.clone(),
            (Self::Sandwich { u, v }, Element::Rect(m)) => Element::Rect(u * m * v),
            (Self::Congruence { u }, Element::Alternating(m)) => {
                Element::Alternating(u * m * u.transpose())
            }
            (Self::Congruence { u }, Element::Symmetric(m)) => {
                Element::Symmetric(u * m * u.transpose())
            }
            (Self::Orthogonal { phase, o }, Element::Vector(v)) => Element::Vector(
                (0..v.len())
                    .map(|i| (0..v.len()).map(|j| v[j] * o[(i, j)]).sum::<Complex64>() * phase)
                    .collect(),
            ),
            (Self::Phases16 { p2, p3 }, Element::Exceptional16 { a2, a3 }) => Element::Exceptional16 {
                a2: a2.scale(*p2),
                a3: a3.scale(*p3),
            },
            (Self::AlbertPhases { phi }, Element::Albert(a)) => {
                let e = |t: f64| Complex64::from_polar(1.0, t);
                Element::Albert(Albert {
                    diag: std::array::from_fn(|i| a.diag[i] * e(2.0 * phi[i])),
                    a: a.a.scale(e(phi[1] + phi[2])),
                    b: a.b.scale(e(phi[2] + phi[0])),
                    c: a.c.scale(e(phi[0] + phi[1])),
                })
            }
            _ => panic!("isometry applied to an element of a different domain type"),
        }
    }
}

fn random_unitary<R: Rng + ?Sized>(n: usize, rng: &mut R) -> DMatrix<Complex64> {
    let g = DMatrix::from_fn(n, n, |_, _| {
        Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    });
    let qr = g.qr();
    let (q, r) = (qr.q(), qr.r());
    let mut u = q;
    for j in 0..n {
        let d = r[(j, j)];
        let ph = if d.norm() > 0.0 { d / d.norm() } else { Complex64::new(1.0, 0.0) };
        for i in 0..n {
            u[(i, j)] *= ph;
        }
    }
    u
}

fn random_orthogonal<R: Rng + ?Sized>(n: usize, rng: &mut R) -> DMatrix<f64> {
    let g = DMatrix::from_fn(n, n, |_, _| rng.sample::<f64, _>(StandardNormal));
    let qr = g.qr();
    let (q, r) = (qr.q(), qr.r());
    let mut o = q;
    for j in 0..n {
        if r[(j, j)] < 0.0 {
            for i in 0..n {
                o[(i, j)] = -o[(i, j)];
            }
        }
    }
    o
}

/// Draws a random linear isometry of the kind available for the domain type.
pub fn linear_isometry<R: Rng + ?Sized>(spec: &DomainSpec, rng: &mut R) -> Isometry {
    let angle = |rng: &mut R| rng.random_range(0.0..std::f64::consts::TAU);
    match *spec.kind() {
        DomainKind::I { m, n } => Isometry::Sandwich {
            u: random_unitary(m as usize, rng),
            v: random_unitary(n as usize, rng),
        },
        DomainKind::II { n } | DomainKind::III { n } => Isometry::Congruence {
            u: random_unitary(n as usize, rng),
        },
        DomainKind::IV { n } => Isometry::Orthogonal {
            phase: Complex64::from_polar(1.0, angle(rng)),
            o: random_orthogonal(n as usize, rng),
        },
        DomainKind::V => Isometry::Phases16 {
            p2: Complex64::from_polar(1.0, angle(rng)),
            p3: Complex64::from_polar(1.0, angle(rng)),
        },
        DomainKind::VI => Isometry::AlbertPhases {
            phi: [angle(rng), angle(rng), angle(rng)],
        },
    }
}
