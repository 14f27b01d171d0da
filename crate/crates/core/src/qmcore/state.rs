use std::str::FromStr;

use num_complex::Complex;

use super::eigen::eigvalsh;
use super::matrix::ComplexMatrix;
use super::vector::UnitVector3;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Tolerance for exact-algebra invariants (Hermiticity, trace, idempotence).
pub const EXACT_TOL: f64 = 1e-12;
/// Eigenvalues in `[-PSD_TOL, 0)` are treated as rounding dust.
pub const PSD_TOL: f64 = 1e-10;

/// Hermitian, positive semidefinite, unit-trace matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix<T> {
    mat: ComplexMatrix<T>,
}

impl<T: Scalar> DensityMatrix<T> {
    pub fn new(mat: ComplexMatrix<T>) -> Result<Self> {
        let deviation = mat.hermitian_deviation();
        if deviation > T::tol(EXACT_TOL) {
            return Err(Error::NotHermitian {
                deviation: deviation.as_f64(),
            });
        }
        let trace = mat.trace().re;
        if (trace - T::one()).abs() > T::tol(EXACT_TOL) {
            return Err(Error::NotUnitTrace { trace: trace.as_f64() });
        }
        let lowest = eigvalsh(&mat)?[0];
        if lowest < -T::tol(PSD_TOL) {
            return Err(Error::NotPositiveSemidefinite {
                eigenvalue: lowest.as_f64(),
            });
        }
        Ok(Self { mat })
    }

    /// Normalizes a positive semidefinite matrix by its trace.
    pub fn from_unnormalized(mat: ComplexMatrix<T>) -> Result<Self> {
        let trace = mat.trace().re;
        if trace <= T::zero() {
            return Err(Error::NotUnitTrace { trace: trace.as_f64() });
        }
        Self::new(mat.scale(T::one() / trace))
    }

    /// Pure qubit state `(1 + s·σ)/2`.
    pub fn pure_qubit(s: UnitVector3<T>) -> Self {
        Self {
            mat: bloch_matrix(&s.to_array()),
        }
    }

    /// Mixed qubit state `(1 + r·σ)/2` with `|r| ≤ 1`.
    pub fn qubit_from_bloch_ball(r: [T; 3]) -> Result<Self> {
        let len = (r[0] * r[0] + r[1] * r[1] + r[2] * r[2]).sqrt();
        if len > T::one() + T::tol(EXACT_TOL) {
            return Err(Error::ArgumentError(format!(
                "Bloch vector length {} exceeds 1",
                len.as_f64()
            )));
        }
        Ok(Self { mat: bloch_matrix(&r) })
    }

    /// `I/d`.
    pub fn maximally_mixed(dim: usize) -> Self {
        Self {
            mat: ComplexMatrix::identity(dim).scale(T::one() / T::lit(dim as f64)),
        }
    }

    /// `|Φ⁺⟩ = (|00⟩ + |11⟩)/√2`.
    pub fn bell_phi_plus() -> Self {
        let mut mat = ComplexMatrix::zeros(4);
        let h = Complex::new(T::half(), T::zero());
        for &i in &[0usize, 3] {
            for &j in &[0usize, 3] {
                mat[(i, j)] = h;
            }
        }
        Self { mat }
    }

    pub fn product(x: &Self, y: &Self) -> Self {
        Self {
            mat: x.mat.kron(&y.mat),
        }
    }

    #[inline]
    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.mat
    }

    pub fn into_matrix(self) -> ComplexMatrix<T> {
        self.mat
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.mat.dim()
    }

    /// Bloch vector `r` with `ρ = (1 + r·σ)/2`; qubits only.
    pub fn bloch_vector(&self) -> Result<[T; 3]> {
        if self.dim() != 2 {
            return Err(Error::DimensionError {
                expected: 2,
                found: self.dim(),
            });
        }
        let two = T::lit(2.0);
        Ok([
            self.mat[(0, 1)].re * two,
            -self.mat[(0, 1)].im * two,
            self.mat[(0, 0)].re - self.mat[(1, 1)].re,
        ])
    }
}

fn bloch_matrix<T: Scalar>(r: &[T; 3]) -> ComplexMatrix<T> {
    let h = T::half();
    let mut m = ComplexMatrix::zeros(2);
    m[(0, 0)] = Complex::new(h * (T::one() + r[2]), T::zero());
    m[(1, 1)] = Complex::new(h * (T::one() - r[2]), T::zero());
    m[(0, 1)] = Complex::new(h * r[0], -h * r[1]);
    m[(1, 0)] = Complex::new(h * r[0], h * r[1]);
    m
}

/// Orthogonal projector, with its Bloch direction when it is a rank-1 qubit projector.
#[derive(Debug, Clone, PartialEq)]
pub struct Projector<T> {
    mat: ComplexMatrix<T>,
    bloch: Option<UnitVector3<T>>,
}

impl<T: Scalar> Projector<T> {
    /// Validates idempotence and Hermiticity of an arbitrary matrix.
    pub fn from_matrix(mat: ComplexMatrix<T>) -> Result<Self> {
        let deviation = mat.hermitian_deviation();
        if deviation > T::tol(EXACT_TOL) {
            return Err(Error::NotHermitian {
                deviation: deviation.as_f64(),
            });
        }
        let sq = mat.matmul(&mat)?;
        let idem = sq.max_abs_diff(&mat);
        if idem > T::tol(EXACT_TOL) {
            return Err(Error::NotProjector {
                deviation: idem.as_f64(),
            });
        }
        let bloch = if mat.dim() == 2 && (mat.trace().re - T::one()).abs() <= T::tol(EXACT_TOL) {
            let two = T::lit(2.0);
            UnitVector3::normalize(
                mat[(0, 1)].re * two,
                -mat[(0, 1)].im * two,
                mat[(0, 0)].re - mat[(1, 1)].re,
            )
            .ok()
        } else {
            None
        };
        Ok(Self { mat, bloch })
    }

    #[inline]
    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.mat
    }

    #[inline]
    pub fn bloch(&self) -> Option<UnitVector3<T>> {
        self.bloch
    }

    /// `1 − P`.
    pub fn complement(&self) -> Self {
        let mat = &ComplexMatrix::identity(self.mat.dim()) - &self.mat;
        Self {
            mat,
            bloch: self.bloch.map(|b| -b),
        }
    }
}

/// `P_m = (1 + m·σ)/2`.
pub fn projector_from_bloch<T: Scalar>(m: UnitVector3<T>) -> Result<Projector<T>> {
    // re-check: callers may have built `m` through an unchecked cast
    let m = UnitVector3::new(m.x(), m.y(), m.z())?;
    Ok(Projector {
        mat: bloch_matrix(&m.to_array()),
        bloch: Some(m),
    })
}

/// `Tr[ρX]`, real part; `X` is expected Hermitian.
pub fn expectation<T: Scalar>(rho: &DensityMatrix<T>, x: &ComplexMatrix<T>) -> Result<T> {
    if rho.dim() != x.dim() {
        return Err(Error::DimensionError {
            expected: rho.dim(),
            found: x.dim(),
        });
    }
    Ok(rho.matrix().trace_product(x)?.re)
}

/// Subsystem of a two-qubit register. `X` is the left Kronecker factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    X,
    Y,
}

impl FromStr for Subsystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "X" | "x" => Ok(Self::X),
            "Y" | "y" => Ok(Self::Y),
            other => Err(Error::ArgumentError(format!("unknown subsystem tag {other:?}"))),
        }
    }
}

/// Partial trace of any 4×4 operator, keeping one qubit.
pub fn partial_trace_matrix<T: Scalar>(m: &ComplexMatrix<T>, keep: Subsystem) -> Result<ComplexMatrix<T>> {
    if m.dim() != 4 {
        return Err(Error::DimensionError {
            expected: 4,
            found: m.dim(),
        });
    }
    let mut out = ComplexMatrix::zeros(2);
    // index (x, y) ↦ 2x + y
    for a in 0..2 {
        for b in 0..2 {
            let mut acc = Complex::new(T::zero(), T::zero());
            for k in 0..2 {
                acc = acc
                    + match keep {
                        Subsystem::X => m[(2 * a + k, 2 * b + k)],
                        Subsystem::Y => m[(2 * k + a, 2 * k + b)],
                    };
            }
            out[(a, b)] = acc;
        }
    }
    Ok(out)
}

/// Reduced density matrix of the kept qubit.
pub fn partial_trace<T: Scalar>(rho: &DensityMatrix<T>, keep: Subsystem) -> Result<DensityMatrix<T>> {
    let mat = partial_trace_matrix(rho.matrix(), keep)?;
    // positivity and trace are inherited from rho
    Ok(DensityMatrix { mat })
}
