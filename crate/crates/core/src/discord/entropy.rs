use num_complex::Complex;

use super::state::{BipartiteState, MeasurementBasis, Outcome};
use crate::error::Result;
use crate::qmcore::{
    partial_trace_matrix, spectrum_x_log2_x, trace_x_log2_x, von_neumann_entropy, ComplexMatrix, DensityMatrix,
    Subsystem, UnitVector3,
};
use crate::scalar::Scalar;

/// Outcome probabilities below this are treated as impossible outcomes.
pub const NULL_OUTCOME_TOL: f64 = 1e-12;

/// Result of conditioning `Y` on one outcome of a measurement on `X`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConditionalState<T> {
    pub probability: T,
    /// `None` when the outcome has (numerically) zero probability.
    pub rho_y: Option<DensityMatrix<T>>,
}

/// `σ_j = Tr_X[(Π_j ⊗ 1) ρ (Π_j ⊗ 1)]`, the unnormalized conditional state.
pub fn unnormalized_conditional<T: Scalar>(
    state: &BipartiteState<T>,
    basis: &MeasurementBasis<T>,
    outcome: Outcome,
) -> ComplexMatrix<T> {
    let lifted = basis.lifted_projector(outcome);
    let projected = state.rho().matrix().sandwich(&lifted).expect("4x4 operands");
    partial_trace_matrix(&projected, Subsystem::Y).expect("4x4 operand")
}

pub fn conditional_state<T: Scalar>(
    state: &BipartiteState<T>,
    basis: &MeasurementBasis<T>,
    outcome: Outcome,
) -> Result<ConditionalState<T>> {
    let lifted = basis.lifted_projector(outcome);
    let probability = state.rho().matrix().trace_product(&lifted)?.re;
    if probability < T::tol(NULL_OUTCOME_TOL) {
        return Ok(ConditionalState {
            probability: T::zero(),
            rho_y: None,
        });
    }
    let sigma = unnormalized_conditional(state, basis, outcome);
    Ok(ConditionalState {
        probability,
        rho_y: Some(DensityMatrix::new(sigma.scale(T::one() / probability))?),
    })
}

/// `Σ_j p_j S(ρ_{Y|Π_j})` in bits.
pub fn conditional_entropy_sum<T: Scalar>(state: &BipartiteState<T>, basis: &MeasurementBasis<T>) -> Result<T> {
    let mut acc = T::zero();
    for outcome in Outcome::BOTH {
        let c = conditional_state(state, basis, outcome)?;
        if let Some(rho_y) = c.rho_y {
            acc += c.probability * von_neumann_entropy(&rho_y)?;
        }
    }
    Ok(acc)
}

/// The same quantity written without normalizing the conditional states:
/// `Σ_j p_j log₂ p_j − Σ_j Tr[σ_j log₂ σ_j]`.
pub fn conditional_entropy_unnormalized<T: Scalar>(
    state: &BipartiteState<T>,
    basis: &MeasurementBasis<T>,
) -> Result<T> {
    let mut acc = T::zero();
    for outcome in Outcome::BOTH {
        let sigma = unnormalized_conditional(state, basis, outcome);
        let p = sigma.trace().re;
        if p > T::zero() {
            acc += p * p.log2();
        }
        acc -= trace_x_log2_x(&sigma)?;
    }
    Ok(acc)
}

/// Both sides of the identity between the two forms above.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyIdentity<T> {
    pub lhs: T,
    pub rhs: T,
}

impl<T: Scalar> EntropyIdentity<T> {
    pub fn gap(&self) -> T {
        (self.lhs - self.rhs).abs()
    }
}

pub fn entropy_identity<T: Scalar>(
    state: &BipartiteState<T>,
    basis: &MeasurementBasis<T>,
) -> Result<EntropyIdentity<T>> {
    Ok(EntropyIdentity {
        lhs: conditional_entropy_sum(state, basis)?,
        rhs: conditional_entropy_unnormalized(state, basis)?,
    })
}

/// Objective used by the minimizer: same value as [`conditional_entropy_sum`],
/// computed straight from the matrix entries of `ρ` without allocation.
pub(crate) fn measured_conditional_entropy<T: Scalar>(rho: &ComplexMatrix<T>, a: &UnitVector3<T>) -> T {
    let h = T::half();
    let mut total = T::zero();
    for sign in [T::one(), -T::one()] {
        let (ax, ay, az) = (a.x() * sign, a.y() * sign, a.z() * sign);
        // Π = (1 + a·σ)/2
        let pi = [
            [
                Complex::new(h * (T::one() + az), T::zero()),
                Complex::new(h * ax, -h * ay),
            ],
            [
                Complex::new(h * ax, h * ay),
                Complex::new(h * (T::one() - az), T::zero()),
            ],
        ];
        // σ_{y y'} = Σ_{x, x'} Π_{x x'} ρ_{(x', y), (x, y')}
        let mut sigma = [[Complex::new(T::zero(), T::zero()); 2]; 2];
        for (y, row) in sigma.iter_mut().enumerate() {
            for (yp, entry) in row.iter_mut().enumerate() {
                let mut acc = Complex::new(T::zero(), T::zero());
                for (x, pi_row) in pi.iter().enumerate() {
                    for (xp, &pi_entry) in pi_row.iter().enumerate() {
                        acc = acc + pi_entry * rho[(2 * xp + y, 2 * x + yp)];
                    }
                }
                *entry = acc;
            }
        }
        let a00 = sigma[0][0].re;
        let a11 = sigma[1][1].re;
        let b = (sigma[0][1] + sigma[1][0].conj()).scale(h);
        let p = a00 + a11;
        if p < T::tol(NULL_OUTCOME_TOL) {
            continue;
        }
        let half_gap = ((a00 - a11) * h).hypot(b.norm());
        let mean = p * h;
        let spectrum = [mean - half_gap, mean + half_gap];
        // p·S(σ/p) = p log₂ p − Σ λ log₂ λ
        total += p * p.log2() - spectrum_x_log2_x(&spectrum).unwrap_or_else(|_| T::nan());
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmcore::projector_from_bloch;
    use crate::sampling::{random_density_matrix, random_unit_vector, seeded_rng};

    fn v(x: f64, y: f64, z: f64) -> UnitVector3<f64> {
        UnitVector3::normalize(x, y, z).unwrap()
    }

    #[test]
    fn measuring_along_preparation_direction() {
        let a = v(0.2, -0.4, 0.7);
        let rho_y = DensityMatrix::qubit_from_bloch_ball([0.1, 0.5, -0.3]).unwrap();
        let state = BipartiteState::product(DensityMatrix::pure_qubit(a), rho_y.clone()).unwrap();
        let basis = MeasurementBasis::new(a);
        let c = conditional_state(&state, &basis, Outcome::Plus).unwrap();
        assert!((c.probability - 1.0).abs() < 1e-14);
        assert!(c.rho_y.unwrap().matrix().max_abs_diff(rho_y.matrix()) < 1e-14);
        let minus = conditional_state(&state, &basis, Outcome::Minus).unwrap();
        assert_eq!(minus.probability, 0.0);
        assert!(minus.rho_y.is_none());
    }

    #[test]
    fn bell_state_in_z_basis() {
        let state = BipartiteState::new(DensityMatrix::<f64>::bell_phi_plus()).unwrap();
        let c = conditional_state(&state, &MeasurementBasis::z(), Outcome::Plus).unwrap();
        assert!((c.probability - 0.5).abs() < 1e-15);
        let zero = projector_from_bloch(UnitVector3::unit_z()).unwrap();
        assert!(c.rho_y.unwrap().matrix().max_abs_diff(zero.matrix()) < 1e-15);
    }

    #[test]
    fn maximally_mixed_conditionals() {
        let state = BipartiteState::new(DensityMatrix::<f64>::maximally_mixed(4)).unwrap();
        let basis = MeasurementBasis::new(v(1.0, 2.0, 3.0));
        for o in Outcome::BOTH {
            let c = conditional_state(&state, &basis, o).unwrap();
            assert!((c.probability - 0.5).abs() < 1e-15);
            let half = ComplexMatrix::identity(2).scale(0.5);
            assert!(c.rho_y.unwrap().matrix().max_abs_diff(&half) < 1e-15);
        }
        assert!((conditional_entropy_sum(&state, &basis).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn product_state_conditional_entropy() {
        let rho_y = DensityMatrix::qubit_from_bloch_ball([0.3, 0.0, 0.4]).unwrap();
        let s_y = von_neumann_entropy(&rho_y).unwrap();
        let state = BipartiteState::product(DensityMatrix::pure_qubit(v(1.0, 1.0, 0.0)), rho_y).unwrap();
        for dir in [v(0.0, 0.0, 1.0), v(1.0, -2.0, 0.5), v(1.0, 1.0, 0.0)] {
            let j = conditional_entropy_sum(&state, &MeasurementBasis::new(dir)).unwrap();
            assert!((j - s_y).abs() < 1e-12);
        }
    }

    #[test]
    fn bell_state_conditional_entropy_vanishes() {
        let state = BipartiteState::new(DensityMatrix::<f64>::bell_phi_plus()).unwrap();
        for dir in crate::optimize::fibonacci_sphere::<f64>(200) {
            let j = conditional_entropy_sum(&state, &MeasurementBasis::new(dir)).unwrap();
            assert!(j.abs() < 1e-9, "{dir:?}: {j}");
        }
    }

    #[test]
    fn fast_objective_matches_matrix_route() {
        let mut rng = seeded_rng(5);
        for _ in 0..200 {
            let state = BipartiteState::new(random_density_matrix::<f64, _>(&mut rng, 4)).unwrap();
            let a: UnitVector3<f64> = random_unit_vector(&mut rng);
            let slow = conditional_entropy_sum(&state, &MeasurementBasis::new(a)).unwrap();
            let fast = measured_conditional_entropy(state.rho().matrix(), &a);
            assert!((slow - fast).abs() < 1e-12);
        }
    }

    #[test]
    fn probabilities_are_complete() {
        let mut rng = seeded_rng(9);
        for _ in 0..200 {
            let state = BipartiteState::new(random_density_matrix::<f64, _>(&mut rng, 4)).unwrap();
            let basis = MeasurementBasis::new(random_unit_vector(&mut rng));
            let p: f64 = Outcome::BOTH
                .iter()
                .map(|&o| conditional_state(&state, &basis, o).unwrap().probability)
                .sum();
            assert!((p - 1.0).abs() < 1e-12);
        }
    }
}
