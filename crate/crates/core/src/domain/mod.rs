//! The six families of irreducible bounded symmetric domains.
//!
//! Each domain is the unit ball of the spectral norm in its Jordan triple
//! system `V`. Elements of `V` are represented concretely per type (see
//! [`Element`]); generic norms, membership and sampling live in submodules.

mod albert;
mod element;
mod linalg;
mod norm;
mod octonion;
mod sample;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use albert::Albert;
pub use element::Element;
pub use linalg::{char_coeffs_fl, char_coeffs_hermitian, monic_sqrt};
pub use norm::{
    generic_norm_diag,
    generic_min_poly, generic_min_poly_coeffs, generic_norm, membership,
    membership_by_definiteness, membership_by_derivatives,
};
pub use octonion::OctonionC;
pub use sample::{frame_element, linear_isometry, sample_box, Isometry};

use crate::error::{Error, Result};

/// Type and size parameters of an irreducible bounded symmetric domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DomainKind {
    /// `m × n` complex matrices, `1 ≤ m ≤ n`.
    I { m: u32, n: u32 },
    /// `n × n` alternating matrices, `n ≥ 2`.
    II { n: u32 },
    /// `n × n` symmetric matrices, `n ≥ 1`.
    III { n: u32 },
    /// The Lie ball in `ℂ^n`, `n ≥ 3`.
    IV { n: u32 },
    /// The 16-dimensional exceptional domain.
    V,
    /// The 27-dimensional exceptional domain.
    VI,
}

/// A validated domain description. Construct with [`DomainSpec::new`] or parse
/// from the `I:m,n | II:n | III:n | IV:n | V | VI` grammar.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DomainSpec {
    kind: DomainKind,
}

/// Numerical invariants of the Jordan triple system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct JordanInvariants {
    /// Rank.
    pub r: u32,
    /// Common dimension of the off-diagonal Peirce spaces `V_ij`, `0 < i < j`.
    pub a: u32,
    /// Common dimension of the Peirce spaces `V_0i`.
    pub b: u32,
    /// Genus, `2 + a(r-1) + b`.
    pub g: u32,
    /// Complex dimension of `V`.
    pub n: u32,
}

impl JordanInvariants {
    fn from_rab(r: u32, a: u32, b: u32) -> Self {
        Self {
            r,
            a,
            b,
            g: 2 + a * (r - 1) + b,
            n: r * (1 + b) + r * (r - 1) * a / 2,
        }
    }

    pub fn is_tube_type(&self) -> bool {
        self.b == 0
    }
}

impl DomainSpec {
    pub fn new(kind: DomainKind) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidParams(msg));
        match kind {
            DomainKind::I { m, n } if m < 1 || m > n => {
                return bad(format!("type I needs 1 <= m <= n, got m={m}, n={n}"))
            }
            DomainKind::II { n } if n < 2 => return bad(format!("type II needs n >= 2, got {n}")),
            DomainKind::III { n } if n < 1 => return bad(format!("type III needs n >= 1, got {n}")),
            DomainKind::IV { n } if n < 3 => {
                return bad(format!("type IV needs n >= 3 (n = 2 is reducible), got {n}"))
            }
            _ => {}
        }
        Ok(Self { kind })
    }

    pub fn disc() -> Self {
        Self {
            kind: DomainKind::I { m: 1, n: 1 },
        }
    }

    pub fn kind(&self) -> &DomainKind {
        &self.kind
    }

    pub fn invariants(&self) -> JordanInvariants {
        let inv = match self.kind {
            DomainKind::I { m, n } => JordanInvariants::from_rab(m, 2, n - m),
            DomainKind::II { n } => JordanInvariants::from_rab(n / 2, 4, 2 * (n % 2)),
            DomainKind::III { n } => JordanInvariants::from_rab(n, 1, 0),
            DomainKind::IV { n } => JordanInvariants::from_rab(2, n - 2, 0),
            DomainKind::V => JordanInvariants::from_rab(2, 6, 4),
            DomainKind::VI => JordanInvariants::from_rab(3, 8, 0),
        };
        debug_assert_eq!(inv.n as usize, self.dim());
        inv
    }

    pub fn rank(&self) -> usize {
        self.invariants().r as usize
    }

    /// Number of free complex coordinates of an element (the complex dimension).
    pub fn dim(&self) -> usize {
        match self.kind {
            DomainKind::I { m, n } => (m * n) as usize,
            DomainKind::II { n } => (n * (n - 1) / 2) as usize,
            DomainKind::III { n } => (n * (n + 1) / 2) as usize,
            DomainKind::IV { n } => n as usize,
            DomainKind::V => 16,
            DomainKind::VI => 27,
        }
    }

    /// Weights `G_i` with `m₁(x, x) = Σ G_i |x_i|²` in the coordinates of
    /// [`Element::coords`]; they fix the density of `α^n` against Lebesgue measure.
    pub fn m1_weights(&self) -> Vec<f64> {
        match self.kind {
            DomainKind::I { .. } | DomainKind::II { .. } => vec![1.0; self.dim()],
            DomainKind::III { n } => {
                let mut w = Vec::with_capacity(self.dim());
                for i in 0..n {
                    for j in i..n {
                        w.push(if i == j { 1.0 } else { 2.0 });
                    }
                }
                w
            }
            DomainKind::IV { .. } | DomainKind::V => vec![2.0; self.dim()],
            DomainKind::VI => {
                let mut w = vec![1.0; 3];
                w.extend(std::iter::repeat_n(2.0, 24));
                w
            }
        }
    }

    /// Volume w.r.t. `α^n` when it is known without estimation: rank-one domains
    /// are the unit ball of `m₁` itself and have volume 1.
    pub fn known_volume(&self) -> Option<f64> {
        (self.rank() == 1).then_some(1.0)
    }

    pub fn is_exceptional(&self) -> bool {
        matches!(self.kind, DomainKind::V | DomainKind::VI)
    }

    /// Human-readable name of the generic minimal polynomial formula.
    pub fn norm_formula(&self) -> &'static str {
        match self.kind {
            DomainKind::I { .. } => "m(T,x,y) = Det(T I_m - x y*)",
            DomainKind::II { n } if n % 2 == 0 => "m(T,x,y)^2 = Det(T I_n + x conj(y))",
            DomainKind::II { .. } => "T m(T,x,y)^2 = Det(T I_n + x conj(y))",
            DomainKind::III { .. } => "m(T,x,y) = Det(T I_n - x conj(y))",
            DomainKind::IV { .. } => "m(T,x,y) = T^2 - q(x,conj y) T + q(x) q(conj y)",
            DomainKind::V => "m(T,x,y) = T^2 - (x|y) T + (x#|y#)",
            DomainKind::VI => "m(T,x,y) = T^3 - (x|y) T^2 + (x#|y#) T - det x det conj(y)",
        }
    }

    pub fn membership_rule(&self) -> &'static str {
        match self.kind {
            DomainKind::I { .. } => "I_m - x x* positive definite",
            DomainKind::II { .. } => "I_n + x conj(x) positive definite",
            DomainKind::III { .. } => "I_n - x conj(x) positive definite",
            DomainKind::IV { .. } => "1 - q(x,conj x) + |q(x)|^2 > 0 and 2 - q(x,conj x) > 0",
            DomainKind::V => "1 - (x|x) + (x#|x#) > 0 and 2 - (x|x) > 0",
            DomainKind::VI => {
                "1 - (x|x) + (x#|x#) - |det x|^2 > 0, 3 - 2(x|x) + (x#|x#) > 0, 3 - (x|x) > 0"
            }
        }
    }

    /// The sweep used by the structural invariant checks: I up to 4×4, II up to
    /// 6, III up to 4, IV up to 8, and both exceptional domains.
    pub fn catalog() -> Vec<DomainSpec> {
        let mut out = Vec::new();
        for n in 1..=4 {
            for m in 1..=n {
                out.push(DomainKind::I { m, n });
            }
        }
        out.extend((2..=6).map(|n| DomainKind::II { n }));
        out.extend((1..=4).map(|n| DomainKind::III { n }));
        out.extend((3..=8).map(|n| DomainKind::IV { n }));
        out.push(DomainKind::V);
        out.push(DomainKind::VI);
        out.into_iter()
            .map(|kind| DomainSpec::new(kind).expect("catalog entries are valid"))
            .collect()
    }
}

impl fmt::Display for DomainSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            DomainKind::I { m, n } => write!(f, "I:{m},{n}"),
            DomainKind::II { n } => write!(f, "II:{n}"),
            DomainKind::III { n } => write!(f, "III:{n}"),
            DomainKind::IV { n } => write!(f, "IV:{n}"),
            DomainKind::V => f.write_str("V"),
            DomainKind::VI => f.write_str("VI"),
        }
    }
}

impl FromStr for DomainSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            what: "domain spec",
            input: s.to_string(),
        };
        let int = |t: &str| t.trim().parse::<u32>().map_err(|_| bad());
        let (ty, params) = match s.trim().split_once(':') {
            Some((ty, params)) => (ty.trim(), Some(params)),
            None => (s.trim(), None),
        };
        let kind = match (ty, params) {
            ("I", Some(p)) => {
                let (m, n) = p.split_once(',').ok_or_else(bad)?;
                DomainKind::I { m: int(m)?, n: int(n)? }
            }
            ("II", Some(p)) => DomainKind::II { n: int(p)? },
            ("III", Some(p)) => DomainKind::III { n: int(p)? },
            ("IV", Some(p)) => DomainKind::IV { n: int(p)? },
            ("V", None) => DomainKind::V,
            ("VI", None) => DomainKind::VI,
            _ => return Err(bad()),
        };
        DomainSpec::new(kind)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> DomainSpec {
        s.parse().unwrap()
    }

    #[test]
    fn invariant_examples() {
        let i23 = spec("I:2,3").invariants();
        assert_eq!((i23.r, i23.a, i23.b, i23.g, i23.n), (2, 2, 1, 5, 6));
        let iv5 = spec("IV:5").invariants();
        assert_eq!((iv5.r, iv5.a, iv5.b, iv5.g, iv5.n), (2, 3, 0, 5, 5));
        let vi = spec("VI").invariants();
        assert_eq!((vi.r, vi.a, vi.b, vi.g, vi.n), (3, 8, 0, 18, 27));
        let v = spec("V").invariants();
        assert_eq!((v.r, v.a, v.b, v.g, v.n), (2, 6, 4, 12, 16));
        assert!(!v.is_tube_type());
        let iii3 = spec("III:3").invariants();
        assert_eq!((iii3.r, iii3.a, iii3.b, iii3.g, iii3.n), (3, 1, 0, 4, 6));
    }

    #[test]
    fn classical_genus_formulas() {
        for s in DomainSpec::catalog() {
            let inv = s.invariants();
            let expected = match *s.kind() {
                DomainKind::I { m, n } => m + n,
                DomainKind::II { n } => 2 * (n - 1),
                DomainKind::III { n } => n + 1,
                DomainKind::IV { n } => n,
                DomainKind::V => 12,
                DomainKind::VI => 18,
            };
            assert_eq!(inv.g, expected, "{s}");
            assert_eq!(inv.n as usize, s.dim(), "{s}");
            assert_eq!(s.m1_weights().len(), s.dim());
        }
    }

    #[test]
    fn rejects_invalid_parameters() {
        for bad in ["IV:2", "IV:1", "I:3,2", "I:0,2", "II:1", "III:0"] {
            assert!(
                matches!(bad.parse::<DomainSpec>(), Err(Error::InvalidParams(_))),
                "{bad}"
            );
        }
        for bad in ["VII", "I:2", "II", "V:3", "IV:x", ""] {
            assert!(matches!(bad.parse::<DomainSpec>(), Err(Error::Parse { .. })), "{bad}");
        }
    }

    #[test]
    fn display_round_trips() {
        for s in DomainSpec::catalog() {
            assert_eq!(s.to_string().parse::<DomainSpec>().unwrap(), s);
        }
    }

    #[test]
    fn rank_one_volume_is_known() {
        assert_eq!(spec("I:1,3").known_volume(), Some(1.0));
        assert_eq!(spec("II:3").known_volume(), Some(1.0));
        assert_eq!(spec("I:2,2").known_volume(), None);
    }
}
