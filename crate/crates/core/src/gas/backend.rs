use std::collections::HashMap;

use rand::RngCore;

use crate::error::{Error, Result};
use crate::grover::{grover_iteration, GroverOperator};
use crate::net::Network;
use crate::oracle::{CounterMode, FunctionalOracle, RegisterLayout, ValidityForm, MAX_FULL_CIRCUIT_QUBITS};
use crate::sim::{sample_outcome, Statevector, MAX_QUBITS};

/// A Grover search over `n` station qubits whose marked set is "valid and
/// fewer than `tau` stations".
pub trait SearchBackend {
    fn num_vars(&self) -> usize;

    fn is_valid(&self, pattern: u64) -> bool;

    /// Prepares the search state, applies `iterations` Grover steps at
    /// threshold `tau` and measures the station register.
    fn sample(&mut self, tau: u32, iterations: u64, rng: &mut dyn RngCore) -> Result<u64>;
}

/// Diagonal oracle on the bare station register, built from the validity
/// table of a network.
#[derive(Clone, Debug)]
pub struct FunctionalBackend {
    valid: Vec<bool>,
    trajectories: HashMap<u32, Trajectory>,
}

impl FunctionalBackend {
    pub fn new(net: &Network) -> Result<Self> {
        let n = net.num_nodes();
        if n > MAX_QUBITS {
            return Err(Error::TooLarge {
                what: "station register",
                size: n,
                limit: MAX_QUBITS,
            });
        }
        let valid = (0..1u64 << n).map(|x| net.is_valid_bits(x)).collect();
        Ok(Self::from_table(valid))
    }

    /// Any predicate over `2^n` patterns.
    pub fn from_table(valid: Vec<bool>) -> Self {
        assert!(valid.len().is_power_of_two(), "table must cover 2^n patterns");
        Self {
            valid,
            trajectories: HashMap::new(),
        }
    }
}

impl SearchBackend for FunctionalBackend {
    fn num_vars(&self) -> usize {
        self.valid.len().trailing_zeros() as usize
    }

    fn is_valid(&self, pattern: u64) -> bool {
        self.valid[pattern as usize]
    }

    fn sample(&mut self, tau: u32, iterations: u64, rng: &mut dyn RngCore) -> Result<u64> {
        if !self.trajectories.contains_key(&tau) {
            let op = GroverOperator::functional(FunctionalOracle::from_validity(&self.valid, tau));
            self.trajectories.insert(tau, Trajectory::new(op)?);
        }
        let t = self.trajectories.get_mut(&tau).expect("inserted above");
        sample_outcome(t.distribution(iterations, false)?, rng)
    }
}

/// Gate-level oracle on the full register layout. Single-trip networks use
/// the single-path form, anything else the network form.
#[derive(Clone, Debug)]
pub struct CircuitBackend {
    net: Network,
    layout: RegisterLayout,
    trajectories: HashMap<u32, Trajectory>,
    check_clean: bool,
}

impl CircuitBackend {
    pub fn new(net: &Network) -> Result<Self> {
        let form = ValidityForm::for_trips(net.trips().len());
        let layout = RegisterLayout::search(net.num_nodes(), net.trips().len(), form, CounterMode::Full)?;
        if layout.num_qubits > MAX_FULL_CIRCUIT_QUBITS {
            return Err(Error::TooLarge {
                what: "gate-level search register",
                size: layout.num_qubits,
                limit: MAX_FULL_CIRCUIT_QUBITS,
            });
        }
        Ok(Self {
            net: net.clone(),
            layout,
            trajectories: HashMap::new(),
            check_clean: false,
        })
    }

    /// Verify after every iteration that the work qubits came back clean.
    pub fn with_clean_check(mut self, on: bool) -> Self {
        self.check_clean = on;
        self
    }

    pub fn layout(&self) -> &RegisterLayout {
        &self.layout
    }
}

impl SearchBackend for CircuitBackend {
    fn num_vars(&self) -> usize {
        self.layout.n
    }

    fn is_valid(&self, pattern: u64) -> bool {
        self.net.is_valid_bits(pattern)
    }

    fn sample(&mut self, tau: u32, iterations: u64, rng: &mut dyn RngCore) -> Result<u64> {
        if !self.trajectories.contains_key(&tau) {
            let op = GroverOperator::circuit(self.net.trips(), self.layout.clone(), tau)?;
            self.trajectories.insert(tau, Trajectory::new(op)?);
        }
        let t = self.trajectories.get_mut(&tau).expect("inserted above");
        sample_outcome(t.distribution(iterations, self.check_clean)?, rng)
    }
}

/// Station-register distributions after 0, 1, 2, ... iterations at one
/// threshold, extended on demand.
#[derive(Clone, Debug)]
struct Trajectory {
    op: GroverOperator,
    state: Statevector,
    distributions: Vec<Vec<f64>>,
}

impl Trajectory {
    fn new(op: GroverOperator) -> Result<Self> {
        let state = op.initial_state()?;
        let first = state.marginal(&op.station_qubits())?;
        Ok(Self {
            op,
            state,
            distributions: vec![first],
        })
    }

    fn distribution(&mut self, iterations: u64, check_clean: bool) -> Result<&[f64]> {
        let stations = self.op.station_qubits();
        while self.distributions.len() as u64 <= iterations {
            grover_iteration(&mut self.state, &self.op, check_clean)?;
            self.distributions.push(self.state.marginal(&stations)?);
        }
        Ok(&self.distributions[iterations as usize])
    }
}
