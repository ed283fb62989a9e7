//! Generic minimal polynomial, generic norm and domain membership.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::albert::Albert;
use super::element::Element;
use super::linalg::{char_coeffs_fl, char_coeffs_hermitian, elementary_symmetric, monic_sqrt};
use super::{DomainKind, DomainSpec};
use crate::error::{Error, Result};

fn q_bilinear(x: &[Complex64], y: &[Complex64]) -> Complex64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

fn as_albert(x: &Element) -> Albert {
    match x {
        Element::Exceptional16 { a2, a3 } => Element::exceptional16_as_albert(a2, a3),
        Element::Albert(a) => *a,
        _ => unreachable!("checked by caller"),
    }
}

/// Converts `e_1..e_n` of `Det(T I + x ȳ)` for an alternating `n × n` matrix into
/// the coefficients of its square root `m(T, x, y)`.
fn alternating_from_char(e: &[Complex64], n: usize) -> Result<Vec<Complex64>> {
    // Descending coefficients P_k = (−1)^k e_k of Det(T I − x y*).
    let mut desc: Vec<Complex64> = e
        .iter()
        .enumerate()
        .map(|(i, v)| if (i + 1) % 2 == 0 { *v } else { -*v })
        .collect();
    if n % 2 == 1 {
        let last = desc.pop().expect("n >= 3 when odd");
        let scale = 1.0 + desc.iter().map(|c| c.norm()).fold(0.0, f64::max);
        if last.norm() > 1e-8 * scale {
            return Err(Error::NumericalDegeneracy(format!(
                "odd alternating determinant has nonzero constant term {last}"
            )));
        }
    }
    let m = monic_sqrt(&desc)?;
    Ok(m.iter()
        .enumerate()
        .map(|(i, v)| if (i + 1) % 2 == 0 { *v } else { -*v })
        .collect())
}

/// Coefficients `m_1(x,y), …, m_r(x,y)` of
/// `m(T, x, y) = T^r − m_1 T^{r−1} + … + (−1)^r m_r`.
pub fn generic_min_poly(spec: &DomainSpec, x: &Element, y: &Element) -> Result<Vec<Complex64>> {
    x.check(spec)?;
    y.check(spec)?;
    Ok(match *spec.kind() {
        DomainKind::I { .. } | DomainKind::III { .. } => {
            let (xm, ym) = (x.matrix().expect("checked"), y.matrix().expect("checked"));
            char_coeffs_fl(&(xm * ym.adjoint()))
        }
        DomainKind::II { n } => {
            let (xm, ym) = (x.matrix().expect("checked"), y.matrix().expect("checked"));
            let e = char_coeffs_fl(&(xm * ym.adjoint()));
            alternating_from_char(&e, n as usize)?
        }
        DomainKind::IV { .. } => {
            let (Element::Vector(xv), Element::Vector(yv)) = (x, y) else {
                unreachable!("checked")
            };
            let ybar: Vec<Complex64> = yv.iter().map(|c| c.conj()).collect();
            vec![
                q_bilinear(xv, &ybar) * 2.0,
                q_bilinear(xv, xv) * q_bilinear(&ybar, &ybar),
            ]
        }
        DomainKind::V => {
            let (xa, ya) = (as_albert(x), as_albert(y));
            vec![xa.hermitian(&ya), xa.sharp().hermitian(&ya.sharp())]
        }
        DomainKind::VI => {
            let (xa, ya) = (as_albert(x), as_albert(y));
            vec![
                xa.hermitian(&ya),
                xa.sharp().hermitian(&ya.sharp()),
                xa.det() * ya.det().conj(),
            ]
        }
    })
}

/// Real coefficients `m_1(x,x), …, m_r(x,x)`: the elementary symmetric
/// functions of the squared singular values of `x`.
pub fn generic_min_poly_coeffs(spec: &DomainSpec, x: &Element) -> Result<Vec<f64>> {
    x.check(spec)?;
    Ok(match *spec.kind() {
        DomainKind::I { .. } | DomainKind::III { .. } => {
            let xm = x.matrix().expect("checked");
            char_coeffs_hermitian(&(xm * xm.adjoint()))
        }
        DomainKind::II { .. } => {
            let xm = x.matrix().expect("checked");
            let mut ev: Vec<f64> = (xm * xm.adjoint())
                .symmetric_eigen()
                .eigenvalues
                .iter()
                .copied()
                .collect();
            ev.sort_by(|a, b| b.total_cmp(a));
            let r = spec.rank();
            let paired: Vec<f64> = (0..r).map(|i| 0.5 * (ev[2 * i] + ev[2 * i + 1])).collect();
            elementary_symmetric(&paired)
        }
        _ => generic_min_poly(spec, x, x)?.iter().map(|c| c.re).collect(),
    })
}

/// `N(x, y) = m(1, x, y)`.
pub fn generic_norm(spec: &DomainSpec, x: &Element, y: &Element) -> Result<Complex64> {
    let m = generic_min_poly(spec, x, y)?;
    Ok(alternating_sum(&m, Complex64::new(1.0, 0.0)))
}

/// `N(x, x)` via the Hermitian route.
pub fn generic_norm_diag(spec: &DomainSpec, x: &Element) -> Result<f64> {
    let m = generic_min_poly_coeffs(spec, x)?;
    Ok(alternating_sum(&m, 1.0))
}

fn alternating_sum<T>(m: &[T], one: T) -> T
where
    T: Copy + std::ops::Add<Output = T> + std::ops::Sub<Output = T>,
{
    m.iter()
        .enumerate()
        .fold(one, |acc, (i, v)| if i % 2 == 0 { acc - *v } else { acc + *v })
}

/// Membership via `∂_T^j m(T, x, x)|_{T=1} > 0` for `0 ≤ j < r`.
pub fn membership_by_derivatives(spec: &DomainSpec, x: &Element) -> Result<bool> {
    let m = generic_min_poly_coeffs(spec, x)?;
    let r = m.len();
    // Ascending coefficients of m(T, x, x).
    let mut c = vec![0.0; r + 1];
    c[r] = 1.0;
    for (j, v) in m.iter().enumerate() {
        let sign = if (j + 1) % 2 == 0 { 1.0 } else { -1.0 };
        c[r - j - 1] = sign * v;
    }
    for _ in 0..r {
        if c.iter().sum::<f64>() <= 0.0 {
            return Ok(false);
        }
        c = c.iter().enumerate().skip(1).map(|(i, v)| i as f64 * v).collect();
    }
    Ok(true)
}

/// Strict positive definiteness of a Hermitian matrix: every pivot of the
/// symmetric Gaussian elimination must be positive. (nalgebra's complex
/// Cholesky takes complex square roots and so accepts negative pivots.)
fn positive_definite(mut h: DMatrix<Complex64>) -> bool {
    let n = h.nrows();
    for k in 0..n {
        let pivot = h[(k, k)].re;
        if !(pivot > 0.0) {
            return false;
        }
        for i in k + 1..n {
            let f = h[(i, k)] / pivot;
            for j in k + 1..n {
                let hkj = h[(k, j)];
                h[(i, j)] -= f * hkj;
            }
        }
    }
    true
}

/// Membership via the per-type definiteness conditions.
pub fn membership_by_definiteness(spec: &DomainSpec, x: &Element) -> Result<bool> {
    x.check(spec)?;
    Ok(match *spec.kind() {
        DomainKind::I { .. } | DomainKind::II { .. } | DomainKind::III { .. } => {
            let xm = x.matrix().expect("checked");
            let id = DMatrix::<Complex64>::identity(xm.nrows(), xm.nrows());
            positive_definite(id - xm * xm.adjoint())
        }
        DomainKind::IV { .. } => {
            let Element::Vector(v) = x else { unreachable!("checked") };
            let hq: f64 = v.iter().map(|c| c.norm_sqr()).sum::<f64>() * 2.0;
            let q = q_bilinear(v, v).norm_sqr();
            1.0 - hq + q > 0.0 && 2.0 - hq > 0.0
        }
        DomainKind::V => {
            let a = as_albert(x);
            let s = a.sharp();
            let xx = a.hermitian(&a).re;
            let ss = s.hermitian(&s).re;
            1.0 - xx + ss > 0.0 && 2.0 - xx > 0.0
        }
        DomainKind::VI => {
            let a = as_albert(x);
            let s = a.sharp();
            let xx = a.hermitian(&a).re;
            let ss = s.hermitian(&s).re;
            let dd = a.det().norm_sqr();
            1.0 - xx + ss - dd > 0.0 && 3.0 - 2.0 * xx + ss > 0.0 && 3.0 - xx > 0.0
        }
    })
}

/// Strict membership in the open domain.
pub fn membership(spec: &DomainSpec, x: &Element) -> Result<bool> {
    membership_by_definiteness(spec, x)
}
