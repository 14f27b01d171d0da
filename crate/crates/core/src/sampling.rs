//! Seeded random states, directions and unitaries.

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::qmcore::{eig_hermitian, ComplexMatrix, DensityMatrix, UnitVector3};
use crate::scalar::Scalar;

pub type SeededRng = ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    rng.sample(StandardNormal)
}

/// Uniform direction on the sphere.
pub fn random_unit_vector<T: Scalar, R: Rng + ?Sized>(rng: &mut R) -> UnitVector3<T> {
    loop {
        let (x, y, z) = (gaussian(rng), gaussian(rng), gaussian(rng));
        if let Ok(v) = UnitVector3::normalize(T::lit(x), T::lit(y), T::lit(z)) {
            return v;
        }
    }
}

/// Uniform point in the Bloch ball.
pub fn random_bloch_ball<T: Scalar, R: Rng + ?Sized>(rng: &mut R) -> [T; 3] {
    let dir = random_unit_vector::<T, R>(rng);
    let r = T::lit(rng.random::<f64>().cbrt());
    [dir.x() * r, dir.y() * r, dir.z() * r]
}

pub fn random_qubit_state<T: Scalar, R: Rng + ?Sized>(rng: &mut R) -> DensityMatrix<T> {
    DensityMatrix::qubit_from_bloch_ball(random_bloch_ball(rng)).expect("Bloch ball sample is a state")
}

fn ginibre<T: Scalar, R: Rng + ?Sized>(rng: &mut R, dim: usize) -> ComplexMatrix<T> {
    let data = (0..dim * dim)
        .map(|_| Complex::new(T::lit(gaussian(rng)), T::lit(gaussian(rng))))
        .collect();
    ComplexMatrix::from_row_major(data).expect("square by construction")
}

/// `G G† / Tr(G G†)` with `G` a complex Gaussian matrix.
pub fn random_density_matrix<T: Scalar, R: Rng + ?Sized>(rng: &mut R, dim: usize) -> DensityMatrix<T> {
    let g = ginibre::<T, R>(rng, dim);
    let w = &g * &g.adjoint();
    DensityMatrix::from_unnormalized(w).expect("Wishart matrix is a state")
}

/// Unitary taken as the eigenvector matrix of a random Hermitian matrix.
pub fn random_unitary<T: Scalar, R: Rng + ?Sized>(rng: &mut R, dim: usize) -> ComplexMatrix<T> {
    let g = ginibre::<T, R>(rng, dim);
    let h = (&g + &g.adjoint()).scale(T::half());
    eig_hermitian(&h).expect("Hermitian by construction").vectors
}
