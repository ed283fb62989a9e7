//! Characteristic polynomials and the monic polynomial square root.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Elementary symmetric functions `e_1..e_n` of the eigenvalues of `a`, so that
/// `Det(T I − a) = Σ_j (−1)^j e_j T^{n−j}`, by Faddeev–LeVerrier.
pub fn char_coeffs_fl(a: &DMatrix<Complex64>) -> Vec<Complex64> {
    let n = a.nrows();
    assert_eq!(n, a.ncols(), "square matrix required");
    let id = DMatrix::<Complex64>::identity(n, n);
    // c[i] is the coefficient of T^i in Det(T I − a).
    let mut c = vec![Complex64::default(); n + 1];
    c[n] = Complex64::new(1.0, 0.0);
    let mut m = DMatrix::<Complex64>::zeros(n, n);
    for k in 1..=n {
        m = a * &m + &id * c[n + 1 - k];
        c[n - k] = -(a * &m).trace() / k as f64;
    }
    (1..=n)
        .map(|j| if j % 2 == 0 { c[n - j] } else { -c[n - j] })
        .collect()
}

/// Elementary symmetric functions of the eigenvalues of a Hermitian matrix.
pub fn char_coeffs_hermitian(a: &DMatrix<Complex64>) -> Vec<f64> {
    let eig = a.clone().symmetric_eigen();
    elementary_symmetric(eig.eigenvalues.as_slice())
}

/// `e_1..e_n` of the given values.
pub fn elementary_symmetric(vals: &[f64]) -> Vec<f64> {
    let mut e = vec![0.0; vals.len() + 1];
    e[0] = 1.0;
    for (i, &v) in vals.iter().enumerate() {
        for j in (1..=i + 1).rev() {
            e[j] += v * e[j - 1];
        }
    }
    e.split_off(1)
}

fn square_residual(m: &[Complex64], target: &[Complex64]) -> Vec<Complex64> {
    let p = m.len();
    let coef = |i: usize| if i == 0 { Complex64::new(1.0, 0.0) } else { m[i - 1] };
    (1..=2 * p)
        .map(|k| {
            let lo = k.saturating_sub(p);
            let hi = k.min(p);
            let s: Complex64 = (lo..=hi).map(|i| coef(i) * coef(k - i)).sum();
            s - target[k - 1]
        })
        .collect()
}

fn vec_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

/// Square root of a monic polynomial of even degree `2p`.
///
/// `target` holds the descending coefficients `P_1..P_{2p}` of
/// `T^{2p} + P_1 T^{2p−1} + … + P_{2p}`; the result holds `M_1..M_p` with
/// `(T^p + M_1 T^{p−1} + … + M_p)² = P`. The top half is solved directly, then
/// Newton steps on all `2p` equations refine it. Fails with
/// `NumericalDegeneracy` if the input is not (numerically) a square.
pub fn monic_sqrt(target: &[Complex64]) -> Result<Vec<Complex64>> {
    if !target.len().is_multiple_of(2) {
        return Err(Error::NumericalDegeneracy(format!(
            "square root needs even degree, got {}",
            target.len()
        )));
    }
    let p = target.len() / 2;
    if p == 0 {
        return Ok(Vec::new());
    }
    let mut m = vec![Complex64::default(); p];
    for k in 1..=p {
        let cross: Complex64 = (1..k).map(|i| m[i - 1] * m[k - i - 1]).sum();
        m[k - 1] = (target[k - 1] - cross) / 2.0;
    }
    let scale = 1.0 + vec_norm(target);
    for _ in 0..50 {
        let r = square_residual(&m, target);
        if vec_norm(&r) <= 1e-15 * scale {
            break;
        }
        // Jacobian of residual k (1..=2p) with respect to M_i (1..=p) is 2 M_{k−i}.
        let jac = DMatrix::from_fn(2 * p, p, |row, col| {
            let (k, i) = (row + 1, col + 1);
            match k.checked_sub(i) {
                Some(0) => Complex64::new(2.0, 0.0),
                Some(d) if d <= p => m[d - 1] * 2.0,
                _ => Complex64::default(),
            }
        });
        let rhs = nalgebra::DVector::from_vec(r);
        let normal = jac.adjoint() * &jac;
        let delta = match normal.lu().solve(&(jac.adjoint() * rhs)) {
            Some(d) => d,
            None => break,
        };
        let step = vec_norm(delta.as_slice());
        for (mi, di) in m.iter_mut().zip(delta.iter()) {
            *mi -= di;
        }
        if step <= 1e-16 * (1.0 + vec_norm(&m)) {
            break;
        }
    }
    let res = vec_norm(&square_residual(&m, target));
    if !res.is_finite() || res > 1e-8 * scale {
        return Err(Error::NumericalDegeneracy(format!(
            "characteristic polynomial is not a square (residual {res:.3e})"
        )));
    }
    Ok(m)
}
