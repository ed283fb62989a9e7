//! Concrete representations of points of `V`, one per domain type.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::albert::Albert;
use super::octonion::OctonionC;
use super::{DomainKind, DomainSpec};
use crate::error::{Error, Result};

const SYMMETRY_TOL: f64 = 1e-12;

/// A point of the ambient space of some [`DomainSpec`].
///
/// Coordinates (see [`Element::coords`]) are laid out as: type I row-major
/// `m × n`; type II the strict upper triangle `i < j` row-major; type III the
/// upper triangle including the diagonal; type IV the vector itself; type V
/// `a₂` then `a₃` (8 + 8); type VI `α₁, α₂, α₃, a, b, c`.
#[derive(Clone, Debug, PartialEq)]
pub enum Element {
    Rect(DMatrix<Complex64>),
    Alternating(DMatrix<Complex64>),
    Symmetric(DMatrix<Complex64>),
    Vector(Vec<Complex64>),
    /// The 1×2 octonionic row `(a₂, a₃)` of the 16-dimensional domain.
    Exceptional16 { a2: OctonionC, a3: OctonionC },
    Albert(Albert),
}

impl Element {
    pub fn zero(spec: &DomainSpec) -> Self {
        Self::from_coords(spec, &vec![Complex64::default(); spec.dim()])
            .expect("zero coordinates have the right length")
    }

    /// Wraps a matrix for a matrix-type spec, checking shape and symmetry.
    pub fn from_matrix(spec: &DomainSpec, x: DMatrix<Complex64>) -> Result<Self> {
        let (rows, cols) = x.shape();
        let want = |r: u32, c: u32| -> Result<()> {
            if (rows, cols) == (r as usize, c as usize) {
                Ok(())
            } else {
                Err(Error::Shape(format!(
                    "{spec} expects a {r}x{c} matrix, got {rows}x{cols}"
                )))
            }
        };
        match *spec.kind() {
            DomainKind::I { m, n } => {
                want(m, n)?;
                Ok(Self::Rect(x))
            }
            DomainKind::II { n } => {
                want(n, n)?;
                if (&x + x.transpose()).camax() > SYMMETRY_TOL {
                    return Err(Error::Shape("type II element must be alternating".into()));
                }
                Ok(Self::Alternating(x))
            }
            DomainKind::III { n } => {
                want(n, n)?;
                if (&x - x.transpose()).camax() > SYMMETRY_TOL {
                    return Err(Error::Shape("type III element must be symmetric".into()));
                }
                Ok(Self::Symmetric(x))
            }
            _ => Err(Error::Shape(format!("{spec} elements are not matrices"))),
        }
    }

    /// Builds an element from its free coordinates, filling dependent entries
    /// by symmetry.
    pub fn from_coords(spec: &DomainSpec, z: &[Complex64]) -> Result<Self> {
        if z.len() != spec.dim() {
            return Err(Error::WrongArity {
                expected: spec.dim(),
                got: z.len(),
            });
        }
        Ok(match *spec.kind() {
            DomainKind::I { m, n } => {
                Self::Rect(DMatrix::from_row_slice(m as usize, n as usize, z))
            }
            DomainKind::II { n } => {
                let n = n as usize;
                let mut x = DMatrix::zeros(n, n);
                let mut it = z.iter();
                for i in 0..n {
                    for j in i + 1..n {
                        let v = *it.next().expect("length checked");
                        x[(i, j)] = v;
                        x[(j, i)] = -v;
                    }
                }
                Self::Alternating(x)
            }
            DomainKind::III { n } => {
                let n = n as usize;
                let mut x = DMatrix::zeros(n, n);
                let mut it = z.iter();
                for i in 0..n {
                    for j in i..n {
                        let v = *it.next().expect("length checked");
                        x[(i, j)] = v;
                        x[(j, i)] = v;
                    }
                }
                Self::Symmetric(x)
            }
            DomainKind::IV { .. } => Self::Vector(z.to_vec()),
            DomainKind::V => Self::Exceptional16 {
                a2: OctonionC(std::array::from_fn(|i| z[i])),
                a3: OctonionC(std::array::from_fn(|i| z[8 + i])),
            },
            DomainKind::VI => Self::Albert(Albert::from_coords(z)?),
        })
    }

    pub fn coords(&self) -> Vec<Complex64> {
        match self {
            Self::Rect(x) => x.transpose().iter().copied().collect(),
            Self::Alternating(x) => {
                let n = x.nrows();
                (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .map(|ij| x[ij])
                    .collect()
            }
            Self::Symmetric(x) => {
                let n = x.nrows();
                (0..n)
                    .flat_map(|i| (i..n).map(move |j| (i, j)))
                    .map(|ij| x[ij])
                    .collect()
            }
            Self::Vector(v) => v.clone(),
            Self::Exceptional16 { a2, a3 } => a2.coords().iter().chain(a3.coords()).copied().collect(),
            Self::Albert(x) => x.coords(),
        }
    }

    /// Checks that this element belongs to the ambient space of `spec`.
    pub fn check(&self, spec: &DomainSpec) -> Result<()> {
        let ok = match (self, *spec.kind()) {
            (Self::Rect(x), DomainKind::I { m, n }) => x.shape() == (m as usize, n as usize),
            (Self::Alternating(x), DomainKind::II { n }) | (Self::Symmetric(x), DomainKind::III { n }) => {
                x.shape() == (n as usize, n as usize)
            }
            (Self::Vector(v), DomainKind::IV { n }) => v.len() == n as usize,
            (Self::Exceptional16 { .. }, DomainKind::V) | (Self::Albert(_), DomainKind::VI) => true,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Shape(format!("element does not belong to {spec}")))
        }
    }

    /// The matrix of a type I, II or III element.
    pub fn matrix(&self) -> Option<&DMatrix<Complex64>> {
        match self {
            Self::Rect(x) | Self::Alternating(x) | Self::Symmetric(x) => Some(x),
            _ => None,
        }
    }

    /// The embedding of a type V element `(a₂, a₃)` into the Albert algebra:
    /// `b = a₂`, `c = a₃`, everything else zero.
    pub fn exceptional16_as_albert(a2: &OctonionC, a3: &OctonionC) -> Albert {
        Albert {
            b: *a2,
            c: *a3,
            ..Default::default()
        }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        match self {
            Self::Rect(x) => Self::Rect(x * s),
            Self::Alternating(x) => Self::Alternating(x * s),
            Self::Symmetric(x) => Self::Symmetric(x * s),
            Self::Vector(v) => Self::Vector(v.iter().map(|c| c * s).collect()),
            Self::Exceptional16 { a2, a3 } => Self::Exceptional16 {
                a2: a2.scale(s),
                a3: a3.scale(s),
            },
            Self::Albert(x) => Self::Albert(x.scale(s)),
        }
    }
}
