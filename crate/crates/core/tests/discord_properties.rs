use hvdiscord::discord::{
    commutator_rigidity_test, conditional_entropy_sum, conditional_state, discord, discord_with, entropy_identity,
    state_rigidity_test, vanishing_condition_check, BipartiteState, MeasurementBasis, SeparableTerm,
};
use hvdiscord::optimize::fibonacci_sphere;
use hvdiscord::qmcore::{projector_from_bloch, DensityMatrix, UnitVector3};
use hvdiscord::sampling::{random_density_matrix, random_qubit_state, random_unit_vector, seeded_rng, SeededRng};
use hvdiscord::{DiscordOptions, Outcome};
use rand::Rng;

fn unit(rng: &mut SeededRng) -> UnitVector3<f64> {
    random_unit_vector(rng)
}

fn random_state(rng: &mut SeededRng) -> BipartiteState<f64> {
    BipartiteState::new(random_density_matrix(rng, 4)).unwrap()
}

fn classical_quantum(rng: &mut SeededRng, a: UnitVector3<f64>) -> BipartiteState<f64> {
    let p: f64 = rng.random_range(0.05..0.95);
    BipartiteState::separable(vec![
        SeparableTerm {
            weight: p,
            rho_x: DensityMatrix::pure_qubit(a),
            rho_y: random_qubit_state(rng),
        },
        SeparableTerm {
            weight: 1.0 - p,
            rho_x: DensityMatrix::pure_qubit(-a),
            rho_y: random_qubit_state(rng),
        },
    ])
    .unwrap()
}

#[test]
fn outcome_probabilities_sum_to_one() {
    let mut rng = seeded_rng(300);
    for _ in 0..500 {
        let state = random_state(&mut rng);
        let basis = MeasurementBasis::new(unit(&mut rng));
        let total: f64 = Outcome::BOTH
            .iter()
            .map(|&o| conditional_state(&state, &basis, o).unwrap().probability)
            .sum();
        assert!((total - 1.0).abs() < 1e-12);
    }
}

#[test]
fn entropy_identity_holds() {
    let mut rng = seeded_rng(301);
    for _ in 0..1000 {
        let state = random_state(&mut rng);
        let basis = MeasurementBasis::new(unit(&mut rng));
        assert!(entropy_identity(&state, &basis).unwrap().gap() < 1e-9);
    }
}

#[test]
fn discord_lies_between_zero_and_marginal_entropy() {
    let mut rng = seeded_rng(302);
    for _ in 0..300 {
        let r = discord(&random_state(&mut rng)).unwrap();
        assert!(r.within_bounds(1e-7), "{r:?}");
    }
}

#[test]
fn minimizer_beats_a_dense_grid() {
    let mut rng = seeded_rng(303);
    let grid = fibonacci_sphere::<f64>(10_000);
    for _ in 0..5 {
        let state = random_state(&mut rng);
        let r = discord(&state).unwrap();
        let grid_min = grid
            .iter()
            .map(|&a| conditional_entropy_sum(&state, &MeasurementBasis::new(a)).unwrap())
            .fold(f64::INFINITY, f64::min);
        assert!(r.cond_entropy_min <= grid_min + 1e-9);
        assert!(grid_min - r.cond_entropy_min < 1e-3);
    }
}

#[test]
fn discord_vanishes_exactly_when_a_block_form_exists() {
    let mut rng = seeded_rng(304);
    for _ in 0..50 {
        let a = unit(&mut rng);
        let state = classical_quantum(&mut rng, a);
        let check = vanishing_condition_check(&state, &MeasurementBasis::new(a));
        assert!(check.is_block_form);
        assert!(discord(&state).unwrap().discord < 1e-7);
    }
    let bases: Vec<MeasurementBasis<f64>> = fibonacci_sphere(2000).into_iter().map(MeasurementBasis::new).collect();
    for _ in 0..20 {
        let state = random_state(&mut rng);
        let r = discord(&state).unwrap();
        assert!(r.discord > 1e-6);
        assert!(bases
            .iter()
            .all(|b| !vanishing_condition_check(&state, b).is_block_form));
    }
}

#[test]
fn product_states_and_bell_state() {
    let mut rng = seeded_rng(305);
    for _ in 0..20 {
        let state: BipartiteState<f64> =
            BipartiteState::product(random_qubit_state(&mut rng), random_qubit_state(&mut rng)).unwrap();
        assert!(discord(&state).unwrap().discord.abs() < 1e-7);
    }
    let bell = BipartiteState::new(DensityMatrix::<f64>::bell_phi_plus()).unwrap();
    assert!((discord(&bell).unwrap().discord - 1.0).abs() < 1e-6);
    let mixed = BipartiteState::new(DensityMatrix::<f64>::maximally_mixed(4)).unwrap();
    assert_eq!(discord(&mixed).unwrap().discord, 0.0);
}

#[test]
fn coarse_options_still_respect_bounds() {
    let mut rng = seeded_rng(306);
    let options = DiscordOptions {
        grid_points: 50,
        refine_starts: 1,
        ..DiscordOptions::default()
    };
    for _ in 0..50 {
        assert!(discord_with(&random_state(&mut rng), &options)
            .unwrap()
            .within_bounds(1e-7));
    }
}

#[test]
fn symmetric_sandwich_iff_commuting() {
    let mut rng = seeded_rng(307);
    for _ in 0..1000 {
        let a = projector_from_bloch(unit(&mut rng)).unwrap();
        let b = projector_from_bloch(unit(&mut rng)).unwrap();
        let r = commutator_rigidity_test(&a, &b).unwrap();
        assert!(r.biconditional_holds);
        assert!(!r.symmetric_for_all_rho);
    }
    let p = projector_from_bloch(unit(&mut rng)).unwrap();
    let r = commutator_rigidity_test(&p, &p.complement()).unwrap();
    assert!(r.symmetric_for_all_rho && r.biconditional_holds);
}

#[test]
fn only_maximally_mixed_state_is_fixed_by_all_dephasings() {
    let mut rng = seeded_rng(308);
    let bases: Vec<MeasurementBasis<f64>> = (0..50).map(|_| MeasurementBasis::new(unit(&mut rng))).collect();
    let mixed = state_rigidity_test(&DensityMatrix::maximally_mixed(2), &bases, 1e-12).unwrap();
    assert!(mixed.is_fixed_point_all);
    for _ in 0..200 {
        let rho = random_qubit_state(&mut rng);
        assert!(!state_rigidity_test(&rho, &bases, 1e-12).unwrap().is_fixed_point_all);
    }
    let collinear = [MeasurementBasis::z(), MeasurementBasis::new(-UnitVector3::unit_z())];
    assert!(state_rigidity_test(&DensityMatrix::maximally_mixed(2), &collinear, 1e-12).is_err());
}
