//! The complexified Albert algebra `H₃(O_ℂ)`.

use num_complex::Complex64;

use super::octonion::OctonionC;
use crate::error::{Error, Result};

/// A Hermitian 3×3 octonionic matrix
///
/// ```text
///   ( α₁  c   b̃ )
///   ( c̃   α₂  a  )
///   ( b   ã   α₃ )
/// ```
///
/// stored as its diagonal `α` and the three off-diagonal octonions `a` (slot
/// 2,3), `b` (slot 3,1), `c` (slot 1,2).
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Albert {
    pub diag: [Complex64; 3],
    pub a: OctonionC,
    pub b: OctonionC,
    pub c: OctonionC,
}

impl Albert {
    pub fn new(diag: [Complex64; 3], a: OctonionC, b: OctonionC, c: OctonionC) -> Self {
        Self { diag, a, b, c }
    }

    pub fn diagonal(l: [f64; 3]) -> Self {
        Self {
            diag: l.map(|v| Complex64::new(v, 0.0)),
            ..Default::default()
        }
    }

    fn off(&self) -> [&OctonionC; 3] {
        [&self.a, &self.b, &self.c]
    }

    /// Builds an element from a full 3×3 octonionic matrix, checking that the
    /// diagonal is scalar and `X_ji = X̃_ij`.
    pub fn from_matrix(m: &[[OctonionC; 3]; 3]) -> Result<Self> {
        let tol = 1e-12;
        for i in 0..3 {
            if m[i][i].0[1..].iter().any(|v| v.norm() > tol) {
                return Err(Error::Shape(format!(
                    "Albert diagonal entry ({i},{i}) is not a scalar"
                )));
            }
            for j in 0..3 {
                let d = m[j][i] - m[i][j].cayley_conj();
                if d.norm_sqr().sqrt() > tol {
                    return Err(Error::Shape(format!(
                        "Albert matrix is not Hermitian under Cayley conjugation at ({i},{j})"
                    )));
                }
            }
        }
        Ok(Self {
            diag: [m[0][0].0[0], m[1][1].0[0], m[2][2].0[0]],
            a: m[1][2],
            b: m[2][0],
            c: m[0][1],
        })
    }

    pub fn to_matrix(&self) -> [[OctonionC; 3]; 3] {
        let d = self.diag.map(OctonionC::scalar);
        [
            [d[0], self.c, self.b.cayley_conj()],
            [self.c.cayley_conj(), d[1], self.a],
            [self.b, self.a.cayley_conj(), d[2]],
        ]
    }

    /// Freudenthal determinant `α₁α₂α₃ − Σ αᵢ n(offᵢ) + t((ab)c)`.
    pub fn det(&self) -> Complex64 {
        let [a1, a2, a3] = self.diag;
        a1 * a2 * a3 - a1 * self.a.norm() - a2 * self.b.norm() - a3 * self.c.norm()
            + ((self.a * self.b) * self.c).trace()
    }

    /// The quadratic adjoint `x♯`, satisfying `x♯♯ = det(x)·x`.
    pub fn sharp(&self) -> Self {
        let [a1, a2, a3] = self.diag;
        Self {
            diag: [
                a2 * a3 - self.a.norm(),
                a3 * a1 - self.b.norm(),
                a1 * a2 - self.c.norm(),
            ],
            a: (self.b * self.c).cayley_conj() - self.a.scale(a1),
            b: (self.c * self.a).cayley_conj() - self.b.scale(a2),
            c: (self.a * self.b).cayley_conj() - self.c.scale(a3),
        }
    }

    /// Bilinear trace form `T(x, y) = Σ αᵢβᵢ + Σ n(offᵢ(x), offᵢ(y))`.
    pub fn trace_form(&self, other: &Self) -> Complex64 {
        let diag: Complex64 = (0..3).map(|i| self.diag[i] * other.diag[i]).sum();
        let off: Complex64 = self
            .off()
            .iter()
            .zip(other.off().iter())
            .map(|(x, y)| x.dot(y) * 2.0)
            .sum();
        diag + off
    }

    /// Hermitian pairing `(x|y) = T(x, ȳ)` with `ȳ` the coefficient-wise conjugate.
    pub fn hermitian(&self, other: &Self) -> Complex64 {
        self.trace_form(&other.complex_conj())
    }

    pub fn complex_conj(&self) -> Self {
        Self {
            diag: self.diag.map(|v| v.conj()),
            a: self.a.complex_conj(),
            b: self.b.complex_conj(),
            c: self.c.complex_conj(),
        }
    }

    pub fn scale(&self, z: Complex64) -> Self {
        Self {
            diag: self.diag.map(|v| v * z),
            a: self.a.scale(z),
            b: self.b.scale(z),
            c: self.c.scale(z),
        }
    }

    /// The 27 coordinates `α₁, α₂, α₃, a₀..a₇, b₀..b₇, c₀..c₇`.
    pub fn coords(&self) -> Vec<Complex64> {
        let mut out = self.diag.to_vec();
        for o in self.off() {
            out.extend_from_slice(o.coords());
        }
        out
    }

    pub fn from_coords(z: &[Complex64]) -> Result<Self> {
        if z.len() != 27 {
            return Err(Error::WrongArity {
                expected: 27,
                got: z.len(),
            });
        }
        let oct = |s: usize| OctonionC(std::array::from_fn(|i| z[s + i]));
        Ok(Self {
            diag: [z[0], z[1], z[2]],
            a: oct(3),
            b: oct(11),
            c: oct(19),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random(rng: &mut ChaCha8Rng) -> Albert {
        let z: Vec<Complex64> = (0..27)
            .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect();
        Albert::from_coords(&z).unwrap()
    }

    fn dist(x: &Albert, y: &Albert) -> f64 {
        x.coords()
            .iter()
            .zip(y.coords())
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    #[test]
    fn sharp_of_sharp_is_det_times_x() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let x = random(&mut rng);
            let lhs = x.sharp().sharp();
            let rhs = x.scale(x.det());
            let scale = 1.0 + dist(&rhs, &Albert::default());
            assert!(dist(&lhs, &rhs) <= 1e-11 * scale, "{}", dist(&lhs, &rhs));
        }
    }

    #[test]
    fn trace_of_x_with_sharp_is_three_det() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..200 {
            let x = random(&mut rng);
            let lhs = x.trace_form(&x.sharp());
            let rhs = x.det() * 3.0;
            assert!((lhs - rhs).norm() <= 1e-11 * (1.0 + rhs.norm()));
        }
    }

    #[test]
    fn diagonal_invariants() {
        let x = Albert::diagonal([0.9, 0.5, 0.1]);
        assert!((x.det() - Complex64::new(0.045, 0.0)).norm() < 1e-15);
        let s = x.sharp();
        assert!((s.diag[0].re - 0.05).abs() < 1e-15);
        assert!((x.hermitian(&x).re - 1.07).abs() < 1e-15);
    }

    #[test]
    fn matrix_round_trip_and_hermitian_check() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let x = random(&mut rng);
        assert_eq!(Albert::from_matrix(&x.to_matrix()).unwrap(), x);
        let mut m = x.to_matrix();
        m[0][1] = m[0][1] + OctonionC::unit(3);
        assert!(matches!(Albert::from_matrix(&m), Err(Error::Shape(_))));
    }
}
