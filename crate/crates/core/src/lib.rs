//! Bell's two-dimensional hidden-variables model, the dispersion-free
//! representations of conditional measurement it admits, and quantum discord
//! for two-qubit states.
//!
//! All numerics are generic over [`Scalar`] (`f32` or `f64`). The aliases at
//! the crate root fix the scalar to `f64`; reach into the modules for the
//! generic forms.

pub mod bell_model;
pub mod discord;
pub mod error;
pub mod optimize;
pub mod qmcore;
pub mod sampling;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub use discord::{DiscordOptions, Outcome};
pub use qmcore::Subsystem;

pub type UnitVector3 = qmcore::UnitVector3<f64>;
pub type ComplexMatrix = qmcore::ComplexMatrix<f64>;
pub type DensityMatrix = qmcore::DensityMatrix<f64>;
pub type Projector = qmcore::Projector<f64>;

pub type HiddenVariable = bell_model::HiddenVariable<f64>;
pub type IntervalSet = bell_model::IntervalSet<f64>;
pub type StepFunction = bell_model::StepFunction<f64>;
pub type DispersionFreeReport = bell_model::DispersionFreeReport<f64>;
pub type LinearityReport = bell_model::LinearityReport<f64>;
pub type UnifiedRepresentation = bell_model::UnifiedRepresentation<f64>;

pub type BipartiteState = discord::BipartiteState<f64>;
pub type SeparableTerm = discord::SeparableTerm<f64>;
pub type MeasurementBasis = discord::MeasurementBasis<f64>;
pub type DiscordResult = discord::DiscordResult<f64>;
