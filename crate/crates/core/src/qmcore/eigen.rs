//! Hermitian eigendecomposition for the small dimensions used here.
//!
//! 2×2 matrices use the closed-form characteristic polynomial; anything
//! larger goes through cyclic complex Jacobi sweeps.

use num_complex::Complex;

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Hermiticity tolerance accepted on input.
pub const HERMITIAN_TOL: f64 = 1e-10;
/// Off-diagonal Frobenius norm at which Jacobi sweeps stop.
pub const JACOBI_TOL: f64 = 1e-14;
const MAX_SWEEPS: usize = 64;

/// Eigenvalues in ascending order with matching orthonormal eigenvector columns.
#[derive(Debug, Clone)]
pub struct HermitianEigen<T> {
    pub values: Vec<T>,
    pub vectors: ComplexMatrix<T>,
}

impl<T: Scalar> HermitianEigen<T> {
    /// `V Λ V†`.
    pub fn reconstruct(&self) -> ComplexMatrix<T> {
        let lambda = ComplexMatrix::diag(&self.values);
        let v = &self.vectors;
        &(v * &lambda) * &v.adjoint()
    }
}

pub fn eig_hermitian<T: Scalar>(m: &ComplexMatrix<T>) -> Result<HermitianEigen<T>> {
    let deviation = m.hermitian_deviation();
    if deviation > T::tol(HERMITIAN_TOL) {
        return Err(Error::NotHermitian {
            deviation: deviation.as_f64(),
        });
    }
    match m.dim() {
        0 => Err(Error::ArgumentError("empty matrix".into())),
        1 => Ok(HermitianEigen {
            values: vec![m[(0, 0)].re],
            vectors: ComplexMatrix::identity(1),
        }),
        2 => Ok(eig_2x2(m)),
        _ => Ok(eig_jacobi(m)),
    }
}

/// Eigenvalues only, ascending.
pub fn eigvalsh<T: Scalar>(m: &ComplexMatrix<T>) -> Result<Vec<T>> {
    eig_hermitian(m).map(|e| e.values)
}

fn eig_2x2<T: Scalar>(m: &ComplexMatrix<T>) -> HermitianEigen<T> {
    let a = m[(0, 0)].re;
    let d = m[(1, 1)].re;
    // average the two off-diagonal entries so tiny anti-Hermitian noise cancels
    let b = (m[(0, 1)] + m[(1, 0)].conj()).scale(T::half());
    let mean = (a + d) * T::half();
    let half_gap = ((a - d) * T::half()).hypot(b.norm());
    let lo = mean - half_gap;
    let hi = mean + half_gap;

    let zero = Complex::new(T::zero(), T::zero());
    let one = Complex::new(T::one(), T::zero());
    let mut vectors = ComplexMatrix::zeros(2);
    if b.norm() <= T::epsilon() * (a.abs() + d.abs() + T::one()) {
        // already diagonal: order the standard basis by the diagonal entries
        let (first, second) = if a <= d {
            ((one, zero), (zero, one))
        } else {
            ((zero, one), (one, zero))
        };
        vectors[(0, 0)] = first.0;
        vectors[(1, 0)] = first.1;
        vectors[(0, 1)] = second.0;
        vectors[(1, 1)] = second.1;
        return HermitianEigen {
            values: vec![a.min(d), a.max(d)],
            vectors,
        };
    }
    for (col, lambda) in [lo, hi].into_iter().enumerate() {
        // two candidate kernel vectors of (M − λ); keep the better conditioned one
        let u = (b, Complex::new(lambda - a, T::zero()));
        let w = (Complex::new(lambda - d, T::zero()), b.conj());
        let nu = (u.0.norm_sqr() + u.1.norm_sqr()).sqrt();
        let nw = (w.0.norm_sqr() + w.1.norm_sqr()).sqrt();
        let (v, n) = if nu >= nw { (u, nu) } else { (w, nw) };
        vectors[(0, col)] = v.0.unscale(n);
        vectors[(1, col)] = v.1.unscale(n);
    }
    HermitianEigen {
        values: vec![lo, hi],
        vectors,
    }
}

fn off_diagonal_norm<T: Scalar>(a: &ComplexMatrix<T>) -> T {
    let n = a.dim();
    let mut acc = T::zero();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += a[(i, j)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

fn eig_jacobi<T: Scalar>(m: &ComplexMatrix<T>) -> HermitianEigen<T> {
    let n = m.dim();
    let mut a = m.clone();
    // symmetrize and make the diagonal exactly real
    for i in 0..n {
        a[(i, i)] = Complex::new(a[(i, i)].re, T::zero());
        for j in (i + 1)..n {
            let b = (a[(i, j)] + a[(j, i)].conj()).scale(T::half());
            a[(i, j)] = b;
            a[(j, i)] = b.conj();
        }
    }
    let mut v = ComplexMatrix::<T>::identity(n);
    let threshold = T::tol(JACOBI_TOL) * T::one().max(a.frobenius_norm());

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) <= threshold {
            break;
        }
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                let mag = apq.norm();
                if mag == T::zero() {
                    continue;
                }
                // phase e^{iφ} of a_pq; D = diag(1, e^{-iφ}) makes the pair block real
                let phase = apq.unscale(mag);
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let theta = (aqq - app) / (mag + mag);
                let t = theta.sign_nonneg() / (theta.abs() + (theta * theta + T::one()).sqrt());
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;
                // U = D·R restricted to the (p, q) plane
                let u_pp = Complex::new(c, T::zero());
                let u_pq = Complex::new(s, T::zero());
                let u_qp = phase.conj().scale(-s);
                let u_qq = phase.conj().scale(c);

                // A ← A·U (columns)
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = akp * u_pp + akq * u_qp;
                    a[(k, q)] = akp * u_pq + akq * u_qq;
                }
                // A ← U†·A (rows)
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = u_pp.conj() * apk + u_qp.conj() * aqk;
                    a[(q, k)] = u_pq.conj() * apk + u_qq.conj() * aqk;
                }
                a[(p, q)] = Complex::new(T::zero(), T::zero());
                a[(q, p)] = Complex::new(T::zero(), T::zero());
                a[(p, p)] = Complex::new(a[(p, p)].re, T::zero());
                a[(q, q)] = Complex::new(a[(q, q)].re, T::zero());

                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = vkp * u_pp + vkq * u_qp;
                    v[(k, q)] = vkp * u_pq + vkq * u_qq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[(i, i)]
            .re
            .partial_cmp(&a[(j, j)].re)
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let mut vectors = ComplexMatrix::zeros(n);
    for (col, &src) in order.iter().enumerate() {
        for row in 0..n {
            vectors[(row, col)] = v[(row, src)];
        }
    }
    HermitianEigen { values, vectors }
}
