//! Dense statevector simulation.
//!
//! Basis index bit `b` is qubit `b` (qubit 0 is the least significant bit).
//! Global phase is kept as-is; comparisons that ignore it say so.

mod circuit;
mod gate;
mod state;

pub use circuit::{circuit_unitary, Circuit, Register, Unitary, MAX_UNITARY_QUBITS};
pub use gate::{inverse_qft_block, qft_block, qft_decomposed, Control, Gate};
pub use state::{sample_outcome, Statevector, MAX_QUBITS};

pub use num_complex::Complex64;
