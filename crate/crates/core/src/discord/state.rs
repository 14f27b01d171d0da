use crate::error::{Error, Result};
use crate::qmcore::{
    partial_trace, projector_from_bloch, ComplexMatrix, DensityMatrix, Projector, Subsystem, UnitVector3, EXACT_TOL,
};
use crate::scalar::Scalar;

/// One product term `w · ρ_X ⊗ ρ_Y` of a separable decomposition.
#[derive(Debug, Clone, PartialEq)]
pub struct SeparableTerm<T> {
    pub weight: T,
    pub rho_x: DensityMatrix<T>,
    pub rho_y: DensityMatrix<T>,
}

/// Two-qubit state `ρ_XY`, optionally with a known separable decomposition.
#[derive(Debug, Clone, PartialEq)]
pub struct BipartiteState<T> {
    rho: DensityMatrix<T>,
    separable: Option<Vec<SeparableTerm<T>>>,
}

impl<T: Scalar> BipartiteState<T> {
    pub fn new(rho: DensityMatrix<T>) -> Result<Self> {
        if rho.dim() != 4 {
            return Err(Error::DimensionError {
                expected: 4,
                found: rho.dim(),
            });
        }
        Ok(Self { rho, separable: None })
    }

    /// `Σ_k w_k ρ_X^(k) ⊗ ρ_Y^(k)`; weights in `(0, 1]` summing to 1.
    pub fn separable(terms: Vec<SeparableTerm<T>>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::ArgumentError("separable decomposition has no terms".into()));
        }
        let mut total = T::zero();
        let mut mat = ComplexMatrix::zeros(4);
        for term in &terms {
            if !(term.weight > T::zero() && term.weight <= T::one()) {
                return Err(Error::ArgumentError(format!(
                    "separable weight {} outside (0, 1]",
                    term.weight.as_f64()
                )));
            }
            if term.rho_x.dim() != 2 || term.rho_y.dim() != 2 {
                return Err(Error::DimensionError {
                    expected: 2,
                    found: term.rho_x.dim().max(term.rho_y.dim()),
                });
            }
            total += term.weight;
            mat = &mat + &term.rho_x.matrix().kron(term.rho_y.matrix()).scale(term.weight);
        }
        if (total - T::one()).abs() > T::tol(EXACT_TOL) {
            return Err(Error::ArgumentError(format!(
                "separable weights sum to {}",
                total.as_f64()
            )));
        }
        Ok(Self {
            rho: DensityMatrix::new(mat)?,
            separable: Some(terms),
        })
    }

    pub fn product(rho_x: DensityMatrix<T>, rho_y: DensityMatrix<T>) -> Result<Self> {
        Self::separable(vec![SeparableTerm {
            weight: T::one(),
            rho_x,
            rho_y,
        }])
    }

    pub fn rho(&self) -> &DensityMatrix<T> {
        &self.rho
    }

    pub fn separable_terms(&self) -> Option<&[SeparableTerm<T>]> {
        self.separable.as_deref()
    }

    pub fn reduced(&self, keep: Subsystem) -> DensityMatrix<T> {
        partial_trace(&self.rho, keep).expect("bipartite state is 4x4")
    }
}

/// Outcome label of a two-outcome projective measurement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Plus,
    Minus,
}

impl Outcome {
    pub const BOTH: [Outcome; 2] = [Outcome::Plus, Outcome::Minus];
}

/// Projective qubit measurement `Π± = (1 ± a·σ)/2`; `a` and `−a` describe the same basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementBasis<T> {
    a: UnitVector3<T>,
}

impl<T: Scalar> MeasurementBasis<T> {
    pub fn new(a: UnitVector3<T>) -> Self {
        Self { a }
    }

    pub fn z() -> Self {
        Self::new(UnitVector3::unit_z())
    }

    pub fn x() -> Self {
        Self::new(UnitVector3::unit_x())
    }

    pub fn direction(&self) -> UnitVector3<T> {
        self.a
    }

    pub fn projector(&self, outcome: Outcome) -> Projector<T> {
        let dir = match outcome {
            Outcome::Plus => self.a,
            Outcome::Minus => -self.a,
        };
        projector_from_bloch(dir).expect("basis direction is a unit vector")
    }

    /// `Π_j ⊗ 1`.
    pub fn lifted_projector(&self, outcome: Outcome) -> ComplexMatrix<T> {
        self.projector(outcome).matrix().kron(&ComplexMatrix::identity(2))
    }

    /// Same measurement up to relabelling of outcomes.
    pub fn same_basis(&self, other: &Self, tol: T) -> bool {
        self.a.cross_norm(&other.a) <= tol
    }
}
