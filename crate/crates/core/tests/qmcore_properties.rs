use hvdiscord::qmcore::{
    eig_hermitian, eigvalsh, expectation, partial_trace, projector_from_bloch, von_neumann_entropy, ComplexMatrix,
    DensityMatrix, Subsystem,
};
use hvdiscord::sampling::{random_density_matrix, random_qubit_state, random_unit_vector, random_unitary, seeded_rng};
use proptest::prelude::*;

#[test]
fn projector_expectation_matches_overlap_formula() {
    let mut rng = seeded_rng(100);
    for _ in 0..10_000 {
        let s = random_unit_vector::<f64, _>(&mut rng);
        let m = random_unit_vector::<f64, _>(&mut rng);
        let rho = DensityMatrix::pure_qubit(s);
        let p = projector_from_bloch(m).unwrap();
        let value = expectation(&rho, p.matrix()).unwrap();
        assert!((value - 0.5 * (1.0 + s.dot(&m))).abs() < 1e-12);
    }
}

#[test]
fn partial_trace_recovers_product_factors() {
    let mut rng = seeded_rng(101);
    for _ in 0..500 {
        let x = random_qubit_state::<f64, _>(&mut rng);
        let y = random_qubit_state::<f64, _>(&mut rng);
        let xy = DensityMatrix::product(&x, &y);
        let back_x = partial_trace(&xy, Subsystem::X).unwrap();
        let back_y = partial_trace(&xy, Subsystem::Y).unwrap();
        assert!(back_x.matrix().max_abs_diff(x.matrix()) < 1e-12);
        assert!(back_y.matrix().max_abs_diff(y.matrix()) < 1e-12);
    }
}

#[test]
fn partial_trace_preserves_trace() {
    let mut rng = seeded_rng(102);
    for _ in 0..500 {
        let rho = random_density_matrix::<f64, _>(&mut rng, 4);
        for keep in [Subsystem::X, Subsystem::Y] {
            let r = partial_trace(&rho, keep).unwrap();
            assert!((r.matrix().trace().re - 1.0).abs() < 1e-12);
            assert!(r.matrix().trace().im.abs() < 1e-12);
        }
    }
}

#[test]
fn entropy_is_unitarily_invariant() {
    let mut rng = seeded_rng(103);
    for dim in [2, 4] {
        for _ in 0..300 {
            let rho = random_density_matrix::<f64, _>(&mut rng, dim);
            let u = random_unitary::<f64, _>(&mut rng, dim);
            let rotated = DensityMatrix::new(rho.matrix().conjugate_by(&u).unwrap()).unwrap();
            let a = von_neumann_entropy(&rho).unwrap();
            let b = von_neumann_entropy(&rotated).unwrap();
            assert!((a - b).abs() < 1e-10, "{a} vs {b}");
        }
    }
}

#[test]
fn eigenvalues_sum_to_trace_and_reconstruct() {
    let mut rng = seeded_rng(104);
    for dim in [2, 3, 4, 6] {
        for _ in 0..100 {
            let rho = random_density_matrix::<f64, _>(&mut rng, dim);
            let h = rho.matrix().scale(3.0);
            let eig = eig_hermitian(&h).unwrap();
            let sum: f64 = eig.values.iter().sum();
            assert!((sum - h.trace().re).abs() < 1e-11);
            assert!(eig.reconstruct().max_abs_diff(&h) < 1e-11);
            assert!(eig.values.windows(2).all(|w| w[0] <= w[1]));
        }
    }
}

#[test]
fn pure_states_have_zero_entropy_and_mixed_have_full() {
    let mut rng = seeded_rng(105);
    let s = random_unit_vector::<f64, _>(&mut rng);
    assert!(von_neumann_entropy(&DensityMatrix::pure_qubit(s)).unwrap().abs() < 1e-12);
    assert!((von_neumann_entropy(&DensityMatrix::<f64>::maximally_mixed(4)).unwrap() - 2.0).abs() < 1e-12);
    assert_eq!(eigvalsh(&ComplexMatrix::<f64>::identity(3)).unwrap(), vec![1.0; 3]);
}

proptest! {
    #[test]
    fn bloch_round_trip(theta in 0.0f64..std::f64::consts::PI, phi in -3.1f64..3.1) {
        let s = hvdiscord::qmcore::UnitVector3::from_spherical(theta, phi);
        let r = DensityMatrix::pure_qubit(s).bloch_vector().unwrap();
        prop_assert!((r[0] - s.x()).abs() < 1e-12);
        prop_assert!((r[1] - s.y()).abs() < 1e-12);
        prop_assert!((r[2] - s.z()).abs() < 1e-12);
    }
}
