//! Octonions over ℂ via the Cayley–Dickson doubling of complex quaternions.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

type Quat = [Complex64; 4];

fn qmul(a: &Quat, b: &Quat) -> Quat {
    [
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
        a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
        a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
        a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
    ]
}

fn qconj(a: &Quat) -> Quat {
    [a[0], -a[1], -a[2], -a[3]]
}

fn qadd(a: &Quat, b: &Quat) -> Quat {
    std::array::from_fn(|i| a[i] + b[i])
}

fn qsub(a: &Quat, b: &Quat) -> Quat {
    std::array::from_fn(|i| a[i] - b[i])
}

/// A complexified octonion `Σ x_k e_k`, `e_0 = 1`.
///
/// Coordinates 0..4 form the quaternion part `(1, i, j, k)`, coordinates 4..8
/// the part multiplied by the doubling unit `ℓ`. The product is
/// `(a, b)(c, d) = (ac − d̄b, da + bc̄)`.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct OctonionC(pub [Complex64; 8]);

impl OctonionC {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::unit(0)
    }

    pub fn unit(k: usize) -> Self {
        let mut x = [Complex64::default(); 8];
        x[k] = Complex64::new(1.0, 0.0);
        Self(x)
    }

    pub fn scalar(z: Complex64) -> Self {
        let mut x = [Complex64::default(); 8];
        x[0] = z;
        Self(x)
    }

    pub fn coords(&self) -> &[Complex64; 8] {
        &self.0
    }

    fn halves(&self) -> (Quat, Quat) {
        let x = &self.0;
        ([x[0], x[1], x[2], x[3]], [x[4], x[5], x[6], x[7]])
    }

    fn from_halves(a: Quat, b: Quat) -> Self {
        Self([a[0], a[1], a[2], a[3], b[0], b[1], b[2], b[3]])
    }

    /// Cayley conjugation `x̃`: negates the imaginary units, keeps coefficients.
    pub fn cayley_conj(&self) -> Self {
        let mut x = self.0;
        for v in &mut x[1..] {
            *v = -*v;
        }
        Self(x)
    }

    /// Complex conjugation of all eight coefficients.
    pub fn complex_conj(&self) -> Self {
        Self(self.0.map(|v| v.conj()))
    }

    /// Quadratic norm form `n(x) = x x̃ = Σ x_k²` (complex bilinear).
    pub fn norm(&self) -> Complex64 {
        self.0.iter().map(|v| v * v).sum()
    }

    /// Bilinear pairing `Σ x_k y_k`; the polar form of `n` is twice this.
    pub fn dot(&self, other: &Self) -> Complex64 {
        self.0.iter().zip(other.0.iter()).map(|(a, b)| a * b).sum()
    }

    /// Hermitian pairing `Σ x_k conj(y_k)`.
    pub fn hermitian(&self, other: &Self) -> Complex64 {
        self.0.iter().zip(other.0.iter()).map(|(a, b)| a * b.conj()).sum()
    }

    /// Trace `t(x) = x + x̃ = 2 x_0`.
    pub fn trace(&self) -> Complex64 {
        self.0[0] * 2.0
    }

    pub fn scale(&self, z: Complex64) -> Self {
        Self(self.0.map(|v| v * z))
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|v| v.norm_sqr()).sum()
    }
}

impl Add for OctonionC {
    type Output = OctonionC;
    fn add(self, rhs: OctonionC) -> OctonionC {
        OctonionC(std::array::from_fn(|i| self.0[i] + rhs.0[i]))
    }
}

impl Sub for OctonionC {
    type Output = OctonionC;
    fn sub(self, rhs: OctonionC) -> OctonionC {
        OctonionC(std::array::from_fn(|i| self.0[i] - rhs.0[i]))
    }
}

impl Neg for OctonionC {
    type Output = OctonionC;
    fn neg(self) -> OctonionC {
        OctonionC(self.0.map(|v| -v))
    }
}

impl Mul for OctonionC {
    type Output = OctonionC;
    fn mul(self, rhs: OctonionC) -> OctonionC {
        let (a, b) = self.halves();
        let (c, d) = rhs.halves();
        let first = qsub(&qmul(&a, &c), &qmul(&qconj(&d), &b));
        let second = qadd(&qmul(&d, &a), &qmul(&b, &qconj(&c)));
        OctonionC::from_halves(first, second)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random(rng: &mut ChaCha8Rng) -> OctonionC {
        OctonionC(std::array::from_fn(|_| {
            Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
        }))
    }

    fn close(a: &OctonionC, b: &OctonionC) -> bool {
        let scale = 1.0 + a.norm_sqr().sqrt().max(b.norm_sqr().sqrt());
        (*a - *b).norm_sqr().sqrt() <= 1e-12 * scale
    }

    #[test]
    fn unit_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let x = random(&mut rng);
        assert_eq!(OctonionC::one() * x, x);
        assert_eq!(x * OctonionC::one(), x);
    }

    #[test]
    fn imaginary_units_square_to_minus_one() {
        for k in 1..8 {
            let e = OctonionC::unit(k);
            assert_eq!(e * e, -OctonionC::one(), "e_{k}");
        }
    }

    #[test]
    fn not_associative() {
        let (e1, e2, e4) = (OctonionC::unit(1), OctonionC::unit(2), OctonionC::unit(4));
        assert!(!close(&((e1 * e2) * e4), &(e1 * (e2 * e4))));
    }

    #[test]
    fn algebraic_laws_on_random_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..1000 {
            let x = random(&mut rng);
            let y = random(&mut rng);
            assert!(close(&(x * (x * y)), &((x * x) * y)), "left alternative");
            assert!(close(&((y * x) * x), &(y * (x * x))), "right alternative");
            assert!(close(&(x * y).cayley_conj(), &(y.cayley_conj() * x.cayley_conj())));
            let lhs = (x * y).norm();
            let rhs = x.norm() * y.norm();
            assert!((lhs - rhs).norm() <= 1e-12 * (1.0 + rhs.norm()));
            assert!(close(&(x * x.cayley_conj()), &OctonionC::scalar(x.norm())));
        }
    }
}
