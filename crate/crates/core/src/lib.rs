//! Exact charging-station placement for electric vehicles on road networks,
//! solved with Grover adaptive search on a dense statevector simulator.
//!
//! The crate is organised bottom-up:
//!
//! - [`net`]: the classical problem. Network ingestion, routes, accessible
//!   sets, the validity predicate, its Boolean-expression form and a
//!   brute-force optimizer used as ground truth.
//! - [`sim`]: a small dense statevector simulator (X, H, phase, multi-controlled
//!   NOT with negative controls, controlled phase, QFT blocks, measurement).
//! - [`oracle`]: the validity-marking machinery, both as an explicit ancilla
//!   circuit and as a functional diagonal phase oracle.
//! - [`grover`]: Hamming-weight counter (phase estimation), threshold
//!   comparator, diffuser, Grover iteration and the closed-form amplitude law.
//! - [`gas`]: exponential search, adaptive search and the full placement
//!   procedure with budget accounting and repetitions.
//! - [`cli`]: command implementations and run reports behind the `cslp` binary.

pub mod cli;
pub mod error;
pub mod gas;
pub mod grover;
pub mod net;
pub mod oracle;
pub mod sim;

pub use error::{Error, Result};
pub use net::{Network, StationCombination, Stop, TripPath};
