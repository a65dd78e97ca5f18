//! Station counting, threshold comparison, diffusion and the Grover iteration.

mod checks;
mod comparator;
mod counter;
mod diffuser;
mod geometry;
mod iteration;

pub use checks::{check_comparator, check_counter, check_diffuser, SuiteResult};
pub use comparator::build_comparator;
pub use counter::build_hamming_counter;
pub use diffuser::build_diffuser;
pub use geometry::{iteration_bound, success_probability, GroverGeometry};
pub use iteration::{
    ancilla_residual, build_grover_iteration, build_marking_oracle, grover_iteration,
    station_pattern, GroverOperator, CLEAN_TOLERANCE,
};
