use rayon::prelude::*;

use super::entropy::measured_conditional_entropy;
use super::state::{BipartiteState, MeasurementBasis};
use crate::error::Result;
use crate::optimize::{fibonacci_hemisphere, nelder_mead, NelderMeadOptions};
use crate::qmcore::{von_neumann_entropy, Subsystem, UnitVector3};
use crate::scalar::Scalar;

/// Search settings for [`discord_with`].
#[derive(Debug, Clone, Copy)]
pub struct DiscordOptions {
    /// Fibonacci-lattice directions on the hemisphere.
    pub grid_points: usize,
    /// Number of best grid points used as simplex starts.
    pub refine_starts: usize,
    pub simplex_diameter_tol: f64,
    pub max_iterations: usize,
}

impl Default for DiscordOptions {
    fn default() -> Self {
        Self {
            grid_points: 1000,
            refine_starts: 3,
            simplex_diameter_tol: 1e-8,
            max_iterations: 200,
        }
    }
}

/// Minimized discord and the entropies it is assembled from (all in bits).
#[derive(Debug, Clone, PartialEq)]
pub struct DiscordResult<T> {
    pub discord: T,
    pub argmin: MeasurementBasis<T>,
    pub s_x: T,
    pub s_y: T,
    pub s_xy: T,
    /// `min Σ_j p_j S(ρ_{Y|Π_j})`.
    pub cond_entropy_min: T,
}

impl<T: Scalar> DiscordResult<T> {
    /// `−tol ≤ D ≤ S(ρ_X) + tol`.
    pub fn within_bounds(&self, tol: T) -> bool {
        self.discord >= -tol && self.discord <= self.s_x + tol
    }
}

/// Measured conditional entropy at each of `count` hemisphere lattice directions,
/// in lattice order.
pub fn conditional_entropy_landscape<T: Scalar>(state: &BipartiteState<T>, count: usize) -> Vec<(UnitVector3<T>, T)> {
    let rho = state.rho().matrix();
    fibonacci_hemisphere::<T>(count)
        .into_par_iter()
        .map(|a| (a, measured_conditional_entropy(rho, &a)))
        .collect()
}

pub fn discord<T: Scalar>(state: &BipartiteState<T>) -> Result<DiscordResult<T>> {
    discord_with(state, &DiscordOptions::default())
}

pub fn discord_with<T: Scalar>(state: &BipartiteState<T>, options: &DiscordOptions) -> Result<DiscordResult<T>> {
    let s_xy = von_neumann_entropy(state.rho())?;
    let s_x = von_neumann_entropy(&state.reduced(Subsystem::X))?;
    let s_y = von_neumann_entropy(&state.reduced(Subsystem::Y))?;

    let (argmin, cond_entropy_min) = minimize_conditional_entropy(state, options);
    Ok(DiscordResult {
        discord: cond_entropy_min - (s_xy - s_x),
        argmin,
        s_x,
        s_y,
        s_xy,
        cond_entropy_min,
    })
}

fn minimize_conditional_entropy<T: Scalar>(
    state: &BipartiteState<T>,
    options: &DiscordOptions,
) -> (MeasurementBasis<T>, T) {
    let rho = state.rho().matrix();
    let objective = |x: &[T]| measured_conditional_entropy(rho, &UnitVector3::from_spherical(x[0], x[1]));

    let landscape = conditional_entropy_landscape(state, options.grid_points.max(1));
    let mut order: Vec<usize> = (0..landscape.len()).collect();
    // ties resolved by lattice index so the result does not depend on scheduling
    order.sort_by(|&i, &j| {
        landscape[i]
            .1
            .partial_cmp(&landscape[j].1)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(i.cmp(&j))
    });

    let mut best = (landscape[order[0]].0, landscape[order[0]].1);
    // initial simplex edge of roughly one lattice spacing
    let step = T::lit((2.0 * std::f64::consts::PI / options.grid_points.max(1) as f64).sqrt());
    let nm = NelderMeadOptions {
        diameter_tol: T::lit(options.simplex_diameter_tol),
        max_iterations: options.max_iterations,
    };
    for &idx in order.iter().take(options.refine_starts) {
        let (theta, phi) = landscape[idx].0.to_spherical();
        let simplex = vec![vec![theta, phi], vec![theta + step, phi], vec![theta, phi + step]];
        let result = nelder_mead(objective, simplex, &nm);
        if result.value < best.1 {
            best = (UnitVector3::from_spherical(result.x[0], result.x[1]), result.value);
        }
    }
    (MeasurementBasis::new(best.0), best.1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discord::state::SeparableTerm;
    use crate::optimize::fibonacci_sphere;
    use crate::qmcore::{projector_from_bloch, DensityMatrix};

    #[test]
    fn bell_state_discord_is_one() {
        let state = BipartiteState::new(DensityMatrix::<f64>::bell_phi_plus()).unwrap();
        let r = discord(&state).unwrap();
        assert!((r.discord - 1.0).abs() < 1e-6);
        assert!(r.s_xy.abs() < 1e-12);
        assert!((r.s_x - 1.0).abs() < 1e-12);
    }

    #[test]
    fn classical_quantum_state_has_no_discord() {
        let z = UnitVector3::<f64>::unit_z();
        let terms = vec![
            SeparableTerm {
                weight: 0.5,
                rho_x: DensityMatrix::pure_qubit(z),
                rho_y: DensityMatrix::qubit_from_bloch_ball([0.6, 0.0, 0.3]).unwrap(),
            },
            SeparableTerm {
                weight: 0.5,
                rho_x: DensityMatrix::pure_qubit(-z),
                rho_y: DensityMatrix::qubit_from_bloch_ball([-0.2, 0.5, 0.0]).unwrap(),
            },
        ];
        let state = BipartiteState::separable(terms).unwrap();
        let r = discord(&state).unwrap();
        assert!(r.discord.abs() < 1e-6, "{}", r.discord);
        assert!(r.argmin.same_basis(&MeasurementBasis::z(), 1e-3));
    }

    #[test]
    fn minimum_beats_dense_grid() {
        // non-commuting mixture: |0⟩⟨0| ⊗ |0⟩⟨0| and |+⟩⟨+| ⊗ |1⟩⟨1|
        let px = projector_from_bloch(UnitVector3::<f64>::unit_x()).unwrap();
        let terms = vec![
            SeparableTerm {
                weight: 0.5,
                rho_x: DensityMatrix::pure_qubit(UnitVector3::unit_z()),
                rho_y: DensityMatrix::pure_qubit(UnitVector3::unit_z()),
            },
            SeparableTerm {
                weight: 0.5,
                rho_x: DensityMatrix::new(px.matrix().clone()).unwrap(),
                rho_y: DensityMatrix::pure_qubit(-UnitVector3::unit_z()),
            },
        ];
        let state = BipartiteState::separable(terms).unwrap();
        let r = discord(&state).unwrap();
        assert!(r.discord > 1e-3);
        let rho = state.rho().matrix();
        let grid_min = fibonacci_sphere::<f64>(10_000)
            .iter()
            .map(|a| measured_conditional_entropy(rho, a))
            .fold(f64::INFINITY, f64::min);
        assert!(grid_min >= r.cond_entropy_min - 1e-6);
        assert!(r.within_bounds(1e-7));
    }
}
