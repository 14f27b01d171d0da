use super::entropy::unnormalized_conditional;
use super::state::{BipartiteState, MeasurementBasis, Outcome};
use crate::error::{Error, Result};
use crate::qmcore::{partial_trace_matrix, ComplexMatrix, Projector, Subsystem};
use crate::scalar::Scalar;

/// Residual below which a state counts as block diagonal in a basis.
pub const BLOCK_FORM_TOL: f64 = 1e-10;

/// `Σ_j (Π_j ⊗ 1) ρ (Π_j ⊗ 1)`.
pub fn dephase_x<T: Scalar>(state: &BipartiteState<T>, basis: &MeasurementBasis<T>) -> ComplexMatrix<T> {
    let rho = state.rho().matrix();
    Outcome::BOTH
        .iter()
        .map(|&o| rho.sandwich(&basis.lifted_projector(o)).expect("4x4 operands"))
        .fold(ComplexMatrix::zeros(4), |acc, m| &acc + &m)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VanishingCheck<T> {
    pub is_block_form: bool,
    /// `‖ρ − Σ_j (Π_j⊗1)ρ(Π_j⊗1)‖_max`.
    pub residual: T,
}

pub fn vanishing_condition_check<T: Scalar>(
    state: &BipartiteState<T>,
    basis: &MeasurementBasis<T>,
) -> VanishingCheck<T> {
    let residual = state.rho().matrix().max_abs_diff(&dephase_x(state, basis));
    VanishingCheck {
        is_block_form: residual < T::tol(BLOCK_FORM_TOL),
        residual,
    }
}

/// `Tr_X[(A_X ⊗ 1)ρ]` against `Σ_j Tr_X[(A_X Π_j ⊗ 1) ρ (Π_j ⊗ 1)]`.
#[derive(Debug, Clone, PartialEq)]
pub struct DephasingWitness<T> {
    pub lhs: ComplexMatrix<T>,
    pub rhs: ComplexMatrix<T>,
    pub gap: T,
    /// When a separable decomposition is known: largest deviation between the
    /// term-by-term evaluation and the dense one (both sides).
    pub separable_discrepancy: Option<T>,
}

pub fn dephasing_witness<T: Scalar>(
    state: &BipartiteState<T>,
    a_x: &Projector<T>,
    basis: &MeasurementBasis<T>,
) -> Result<DephasingWitness<T>> {
    if a_x.matrix().dim() != 2 {
        return Err(Error::DimensionError {
            expected: 2,
            found: a_x.matrix().dim(),
        });
    }
    let id = ComplexMatrix::identity(2);
    let a_lifted = a_x.matrix().kron(&id);
    let rho = state.rho().matrix();

    let lhs = partial_trace_matrix(&a_lifted.matmul(rho)?, Subsystem::Y)?;
    let mut rhs = ComplexMatrix::zeros(2);
    for outcome in Outcome::BOTH {
        let pi = basis.lifted_projector(outcome);
        let term = a_lifted.matmul(&rho.sandwich(&pi)?)?;
        rhs = &rhs + &partial_trace_matrix(&term, Subsystem::Y)?;
    }
    let gap = lhs.max_abs_diff(&rhs);

    let separable_discrepancy = state.separable_terms().map(|terms| {
        let mut lhs_sep = ComplexMatrix::zeros(2);
        let mut rhs_sep = ComplexMatrix::zeros(2);
        for term in terms {
            let a = a_x.matrix();
            let rx = term.rho_x.matrix();
            let ry = term.rho_y.matrix();
            let direct = a.trace_product(rx).expect("2x2 operands").re;
            let dephased: T = Outcome::BOTH
                .iter()
                .map(|&o| {
                    let p = basis.projector(o);
                    a.trace_product(&rx.sandwich(p.matrix()).expect("2x2 operands"))
                        .expect("2x2 operands")
                        .re
                })
                .sum();
            lhs_sep = &lhs_sep + &ry.scale(term.weight * direct);
            rhs_sep = &rhs_sep + &ry.scale(term.weight * dephased);
        }
        lhs_sep.max_abs_diff(&lhs).max(rhs_sep.max_abs_diff(&rhs))
    });

    Ok(DephasingWitness {
        lhs,
        rhs,
        gap,
        separable_discrepancy,
    })
}

/// Unnormalized conditional states for both outcomes, `[σ₊, σ₋]`.
pub fn conditional_blocks<T: Scalar>(state: &BipartiteState<T>, basis: &MeasurementBasis<T>) -> [ComplexMatrix<T>; 2] {
    [
        unnormalized_conditional(state, basis, Outcome::Plus),
        unnormalized_conditional(state, basis, Outcome::Minus),
    ]
}
