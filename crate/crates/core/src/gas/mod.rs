//! Randomised threshold search over station patterns.
//!
//! [`exponential_search`] looks for any pattern the current oracle marks
//! without knowing how many there are. [`adaptive_search`] wraps it in a
//! shrinking threshold on the station count, and [`solve_cslp`] /
//! [`repeat_solve`] run the whole procedure on a network, optionally several
//! times from independent seeds.

mod backend;
mod config;
mod outcome;
mod search;

pub use backend::{CircuitBackend, FunctionalBackend, SearchBackend};
pub use config::{child_seed, BudgetRule, GasConfig, OracleMode, TauPolicy};
pub use outcome::{Attempt, GasOutcome, RepeatedOutcome};
pub use search::{
    adaptive_search, exponential_search, make_backend, repeat_solve, solve_cslp, Budget,
};
