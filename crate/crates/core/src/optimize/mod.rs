//! Search primitives for minimizing over measurement directions.

mod lattice;
mod nelder_mead;

pub use lattice::{fibonacci_hemisphere, fibonacci_sphere};
pub use nelder_mead::{nelder_mead, NelderMeadOptions, NelderMeadResult};
