use super::{build_comparator, build_diffuser, build_hamming_counter};
use crate::error::{Error, Result};
use crate::net::TripPath;
use crate::oracle::{build_network_validity, build_search_preparation, FunctionalOracle, RegisterLayout};
use crate::sim::{Circuit, Gate, Statevector};

/// Largest tolerated weight outside the clean ancilla subspace.
pub const CLEAN_TOLERANCE: f64 = 1e-10;

fn counting_mode(layout: &RegisterLayout) -> Result<crate::oracle::CounterMode> {
    layout
        .counter
        .ok_or_else(|| Error::Config("layout has no counting register".into()))
}

/// Phase flip on station patterns that are valid with fewer than `tau`
/// stations, kicked back through the `|->` phase qubit.
///
/// Validity, counting and comparison are computed, a Toffoli from the
/// validity flag and the comparator result hits the phase qubit, and the three
/// stages are run backwards so every work qubit returns to `|0>`.
pub fn build_marking_oracle(trips: &[TripPath], layout: &RegisterLayout, tau: u32) -> Result<Circuit> {
    let mode = counting_mode(layout)?;
    let n = layout.num_qubits;
    let phase = layout.phase.expect("search layouts carry a phase qubit");
    let result = layout.comparator_result.expect("search layouts carry a comparator");

    let mut compute = build_network_validity(trips, layout)?;
    let counting: Vec<usize> = layout.counting.clone().collect();
    compute.append(&build_hamming_counter(n, &layout.station_qubits(), &counting, mode)?)?;
    compute.append(&build_comparator(
        n,
        &layout.comparator_value(),
        result,
        &layout.comparator_carries(),
        tau,
    )?)?;

    let mut c = compute.clone();
    c.push(Gate::ccx(layout.validity_flag(), result, phase))?;
    c.append(&compute.inverse())?;
    Ok(c)
}

/// Marking oracle followed by the diffuser on `S_1..S_n`.
pub fn build_grover_iteration(trips: &[TripPath], layout: &RegisterLayout, tau: u32) -> Result<Circuit> {
    let mut c = build_marking_oracle(trips, layout, tau)?;
    c.append(&build_diffuser(layout.num_qubits, &layout.station_qubits()))?;
    Ok(c)
}

/// One Grover step in either oracle form.
#[derive(Clone, Debug)]
pub enum GroverOperator {
    /// Diagonal sign flip on a bare `n`-qubit station register.
    Functional {
        oracle: FunctionalOracle,
        diffuser: Circuit,
    },
    /// Gate-level iteration on the full register layout.
    Circuit {
        layout: RegisterLayout,
        iteration: Circuit,
    },
}

impl GroverOperator {
    pub fn functional(oracle: FunctionalOracle) -> Self {
        let n = oracle.num_qubits();
        let stations: Vec<usize> = (0..n).collect();
        let diffuser = build_diffuser(n, &stations);
        Self::Functional { oracle, diffuser }
    }

    pub fn circuit(trips: &[TripPath], layout: RegisterLayout, tau: u32) -> Result<Self> {
        let iteration = build_grover_iteration(trips, &layout, tau)?;
        Ok(Self::Circuit { layout, iteration })
    }

    pub fn num_qubits(&self) -> usize {
        match self {
            Self::Functional { oracle, .. } => oracle.num_qubits(),
            Self::Circuit { layout, .. } => layout.num_qubits,
        }
    }

    pub fn num_stations(&self) -> usize {
        match self {
            Self::Functional { oracle, .. } => oracle.num_qubits(),
            Self::Circuit { layout, .. } => layout.n,
        }
    }

    pub fn station_qubits(&self) -> Vec<usize> {
        match self {
            Self::Functional { oracle, .. } => (0..oracle.num_qubits()).collect(),
            Self::Circuit { layout, .. } => layout.station_qubits(),
        }
    }

    /// Uniform superposition over station patterns, with the fixed qubits
    /// and phase qubit prepared when running at gate level.
    pub fn initial_state(&self) -> Result<Statevector> {
        match self {
            Self::Functional { oracle, .. } => Statevector::uniform(oracle.num_qubits()),
            Self::Circuit { layout, .. } => {
                let mut s = Statevector::new(layout.num_qubits)?;
                s.apply_circuit(&build_search_preparation(layout)?)?;
                Ok(s)
            }
        }
    }

    /// Marginal distribution of the station pattern.
    pub fn station_distribution(&self, state: &Statevector) -> Vec<f64> {
        let stations = self.station_qubits();
        let mut dist = vec![0.0; 1 << stations.len()];
        for (i, a) in state.amplitudes().iter().enumerate() {
            let p = a.norm_sqr();
            if p > 0.0 {
                dist[station_pattern(i as u64, &stations) as usize] += p;
            }
        }
        dist
    }
}

/// The station pattern (bit `i` = `S_{i+1}`) carried by a basis index.
pub fn station_pattern(index: u64, stations: &[usize]) -> u64 {
    stations
        .iter()
        .enumerate()
        .fold(0, |acc, (i, &q)| acc | ((index >> q) & 1) << i)
}

/// Weight of `state` outside the subspace where the work qubits read `|0>`,
/// `S_O = S_D = 1` and the phase qubit is `|->`.
pub fn ancilla_residual(state: &Statevector, layout: &RegisterLayout) -> f64 {
    let work = layout
        .work_qubits()
        .iter()
        .fold(0u64, |m, &q| m | 1 << q);
    let fixed = 1u64 << layout.origin | 1 << layout.destination;
    let amps = state.amplitudes();
    let mut residual = 0.0;
    for (i, a) in amps.iter().enumerate() {
        let i = i as u64;
        if i & work != 0 || i & fixed != fixed {
            residual += a.norm_sqr();
        }
    }
    if let Some(p) = layout.phase {
        let bit = 1u64 << p;
        for (i, a) in amps.iter().enumerate() {
            let i = i as u64;
            if i & bit != 0 || i & work != 0 || i & fixed != fixed {
                continue;
            }
            let b = amps[(i | bit) as usize];
            residual += (a + b).norm_sqr() / 2.0;
        }
    }
    residual
}

/// Applies one iteration. With `check_clean`, a gate-level run fails when
/// the work register has not been returned to its reference state.
pub fn grover_iteration(state: &mut Statevector, op: &GroverOperator, check_clean: bool) -> Result<()> {
    match op {
        GroverOperator::Functional { oracle, diffuser } => {
            oracle.apply(state)?;
            state.apply_circuit(diffuser)?;
        }
        GroverOperator::Circuit { layout, iteration } => {
            state.apply_circuit(iteration)?;
            if check_clean {
                let r = ancilla_residual(state, layout);
                if r > CLEAN_TOLERANCE {
                    return Err(Error::DirtyAncilla(r));
                }
            }
        }
    }
    Ok(())
}
