//! What the classical conditional-probability rule would force: commuting
//! operators, or a maximally mixed state.

use super::minimize::{discord_with, DiscordOptions};
use super::state::{BipartiteState, MeasurementBasis, Outcome, SeparableTerm};
use crate::error::{Error, Result};
use crate::qmcore::{expectation, ComplexMatrix, DensityMatrix, Projector, UnitVector3, EXACT_TOL};
use crate::scalar::Scalar;

/// `|a × b|` below which two measurement directions count as the same basis.
pub const COLLINEAR_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CommutatorRigidity<T> {
    /// `Tr[ρBAB] = Tr[ρABA]` on every state of a spanning set.
    pub symmetric_for_all_rho: bool,
    pub commutator_norm: T,
    pub max_gap: T,
    /// `symmetric_for_all_rho ⟺ ‖[A, B]‖_max < 1e-12`.
    pub biconditional_holds: bool,
}

/// `I/2` and `(I + σ_i)/2`: a basis of the real span of 2×2 Hermitian matrices.
pub fn spanning_qubit_states<T: Scalar>() -> [DensityMatrix<T>; 4] {
    [
        DensityMatrix::maximally_mixed(2),
        DensityMatrix::pure_qubit(UnitVector3::unit_x()),
        DensityMatrix::pure_qubit(UnitVector3::unit_y()),
        DensityMatrix::pure_qubit(UnitVector3::unit_z()),
    ]
}

pub fn commutator_rigidity_test<T: Scalar>(a: &Projector<T>, b: &Projector<T>) -> Result<CommutatorRigidity<T>> {
    for p in [a, b] {
        if p.matrix().dim() != 2 {
            return Err(Error::DimensionError {
                expected: 2,
                found: p.matrix().dim(),
            });
        }
    }
    let (am, bm) = (a.matrix(), b.matrix());
    let bab = am.sandwich(bm)?;
    let aba = bm.sandwich(am)?;
    let mut max_gap = T::zero();
    for rho in spanning_qubit_states::<T>() {
        let gap = (expectation(&rho, &bab)? - expectation(&rho, &aba)?).abs();
        max_gap = max_gap.max(gap);
    }
    let tol = T::tol(EXACT_TOL);
    let commutator_norm = am.commutator(bm)?.max_abs();
    let symmetric_for_all_rho = max_gap < tol;
    Ok(CommutatorRigidity {
        symmetric_for_all_rho,
        commutator_norm,
        max_gap,
        biconditional_holds: symmetric_for_all_rho == (commutator_norm < tol),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct StateRigidity<T> {
    /// `ρ = Σ_l 𝒫_l ρ 𝒫_l` for every supplied basis.
    pub is_fixed_point_all: bool,
    pub max_residual: T,
    pub residuals: Vec<T>,
    /// `Some(‖ρ − I/2‖_max < tol)` when every basis leaves ρ fixed, `None` otherwise.
    pub implies_maximally_mixed: Option<bool>,
}

/// `Σ_l 𝒫_l ρ 𝒫_l` for a qubit.
pub fn dephase_qubit<T: Scalar>(rho: &DensityMatrix<T>, basis: &MeasurementBasis<T>) -> ComplexMatrix<T> {
    Outcome::BOTH
        .iter()
        .map(|&o| {
            rho.matrix()
                .sandwich(basis.projector(o).matrix())
                .expect("2x2 operands")
        })
        .fold(ComplexMatrix::zeros(2), |acc, m| &acc + &m)
}

/// Requires at least two pairwise non-collinear bases: a qubit state that is
/// diagonal in two different bases is already proportional to the identity.
pub fn state_rigidity_test<T: Scalar>(
    rho_x: &DensityMatrix<T>,
    bases: &[MeasurementBasis<T>],
    tol: T,
) -> Result<StateRigidity<T>> {
    if rho_x.dim() != 2 {
        return Err(Error::DimensionError {
            expected: 2,
            found: rho_x.dim(),
        });
    }
    if bases.len() < 2 {
        return Err(Error::ArgumentError(format!(
            "state rigidity needs at least 2 non-collinear bases, got {}",
            bases.len()
        )));
    }
    for (i, a) in bases.iter().enumerate() {
        for b in &bases[i + 1..] {
            if a.same_basis(b, T::lit(COLLINEAR_TOL)) {
                return Err(Error::ArgumentError(
                    "state rigidity bases must be pairwise non-collinear".into(),
                ));
            }
        }
    }
    let residuals: Vec<T> = bases
        .iter()
        .map(|b| rho_x.matrix().max_abs_diff(&dephase_qubit(rho_x, b)))
        .collect();
    let max_residual = residuals.iter().copied().fold(T::zero(), T::max);
    let is_fixed_point_all = max_residual < tol;
    let implies_maximally_mixed = is_fixed_point_all.then(|| {
        rho_x
            .matrix()
            .max_abs_diff(DensityMatrix::<T>::maximally_mixed(2).matrix())
            < tol
    });
    Ok(StateRigidity {
        is_fixed_point_all,
        max_residual,
        residuals,
        implies_maximally_mixed,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassicalRuleConsequence<T> {
    /// `Σ_k w_k (I/2) ⊗ ρ_Y^(k)`.
    pub dephased: BipartiteState<T>,
    pub discord_after: T,
}

/// Replaces every `ρ_X^(k)` of a separable state by `I/2`, the only qubit
/// state left fixed by dephasing in every basis, and recomputes the discord.
pub fn separable_classical_rule_consequence<T: Scalar>(
    sep: &BipartiteState<T>,
    options: &DiscordOptions,
) -> Result<ClassicalRuleConsequence<T>> {
    let terms = sep
        .separable_terms()
        .ok_or_else(|| Error::ArgumentError("state carries no separable decomposition".into()))?;
    let mixed = DensityMatrix::maximally_mixed(2);
    let dephased = BipartiteState::separable(
        terms
            .iter()
            .map(|t| SeparableTerm {
                weight: t.weight,
                rho_x: mixed.clone(),
                rho_y: t.rho_y.clone(),
            })
            .collect(),
    )?;
    let discord_after = discord_with(&dephased, options)?.discord;
    Ok(ClassicalRuleConsequence {
        dephased,
        discord_after,
    })
}
