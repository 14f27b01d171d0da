//! Bell's dispersion-free value assignment for qubit projectors.

mod conditional;
mod construction;
mod interval;
mod linearity;
mod step;

pub use conditional::{
    check_unified, classical_rule_comparison, conditional_rep_12, conditional_rep_9, conflict_report,
    repeated_measurement, unified_rep, ClassicalRuleComparison, DispersionFreeReport, ProductRepresentation,
    ReducedRepresentation, RepeatedMeasurement, UnifiedCheck, UnifiedRepresentation, VALUE_TOL,
};
pub use construction::{bell_support, bell_value, HiddenVariable};
pub use interval::IntervalSet;
pub use linearity::{linearity_violation, LinearityReport, RhsPiece, NON_COLLINEAR_TOL};
pub use step::{common_segments, Segment, StepFunction};
