use super::eigen::eigvalsh;
use super::matrix::ComplexMatrix;
use super::state::{DensityMatrix, PSD_TOL};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// `Σ λ log₂ λ` over a spectrum, with `0·log 0 = 0` and dust below zero clamped.
pub fn spectrum_x_log2_x<T: Scalar>(values: &[T]) -> Result<T> {
    let mut acc = T::zero();
    for &lambda in values {
        if lambda < -T::tol(PSD_TOL) {
            return Err(Error::NotPositiveSemidefinite {
                eigenvalue: lambda.as_f64(),
            });
        }
        if lambda > T::zero() {
            acc += lambda * lambda.log2();
        }
    }
    Ok(acc)
}

/// `Tr[σ log₂ σ]` for a positive semidefinite (not necessarily normalized) matrix.
pub fn trace_x_log2_x<T: Scalar>(sigma: &ComplexMatrix<T>) -> Result<T> {
    spectrum_x_log2_x(&eigvalsh(sigma)?)
}

/// Von Neumann entropy in bits.
pub fn von_neumann_entropy<T: Scalar>(rho: &DensityMatrix<T>) -> Result<T> {
    Ok(-trace_x_log2_x(rho.matrix())?)
}
