//! Quantum discord of two-qubit states with projective measurements on `X`,
//! the block-form criterion for its vanishing, and the rigidity consequences
//! of a classical conditional-probability rule.

mod conditions;
mod entropy;
mod minimize;
mod rigidity;
mod state;

pub use conditions::{
    conditional_blocks, dephase_x, dephasing_witness, vanishing_condition_check, DephasingWitness, VanishingCheck,
    BLOCK_FORM_TOL,
};
pub use entropy::{
    conditional_entropy_sum, conditional_entropy_unnormalized, conditional_state, entropy_identity,
    unnormalized_conditional, ConditionalState, EntropyIdentity, NULL_OUTCOME_TOL,
};
pub use minimize::{conditional_entropy_landscape, discord, discord_with, DiscordOptions, DiscordResult};
pub use rigidity::{
    commutator_rigidity_test, dephase_qubit, separable_classical_rule_consequence, spanning_qubit_states,
    state_rigidity_test, ClassicalRuleConsequence, CommutatorRigidity, StateRigidity, COLLINEAR_TOL,
};
pub use state::{BipartiteState, MeasurementBasis, Outcome, SeparableTerm};
