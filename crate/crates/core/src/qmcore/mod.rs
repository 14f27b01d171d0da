//! Small-dimension complex linear algebra for qubits and qubit pairs.

mod eigen;
mod entropy;
mod matrix;
mod state;
mod vector;

pub use eigen::{eig_hermitian, eigvalsh, HermitianEigen, HERMITIAN_TOL, JACOBI_TOL};
pub use entropy::{spectrum_x_log2_x, trace_x_log2_x, von_neumann_entropy};
pub use matrix::ComplexMatrix;
pub use state::{
    expectation, partial_trace, partial_trace_matrix, projector_from_bloch, DensityMatrix, Projector, Subsystem,
    EXACT_TOL, PSD_TOL,
};
pub use vector::{UnitVector3, UNIT_NORM_TOL};
