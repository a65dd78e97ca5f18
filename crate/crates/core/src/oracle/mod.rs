//! Validity marking in two interchangeable forms.
//!
//! The explicit form follows the ancilla construction: initialise the
//! station register, flag isolated stations on per-trip ancillas, label each
//! trip's validity qubit, restore the ancillas, and combine trips into `v_T`.
//! The functional form is a diagonal ±1 operator on the bare station register
//! that evaluates the validity expression per basis state. Both are checked
//! against each other by [`verify_oracle_equivalence`].

mod functional;
mod layout;
mod validity;
mod verify;

pub use functional::{functional_phase_oracle, FunctionalOracle};
pub use layout::{
    ceil_log2, grover_qubit_count, validity_qubit_count, CounterMode, RegisterLayout, ValidityForm,
};
pub use validity::{
    build_initialization, build_isolation_detector, build_labeler, build_network_validity,
    build_restoration, build_search_preparation, build_trip_validity,
};
pub use verify::{
    compare_oracles, verify_oracle_equivalence, EquivalenceReport, PatternSigns,
    MAX_FULL_CIRCUIT_QUBITS,
};
