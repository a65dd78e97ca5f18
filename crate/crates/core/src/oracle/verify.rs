use serde::{Deserialize, Serialize};

use super::{CounterMode, RegisterLayout, ValidityForm};
use crate::error::{Error, Result};
use crate::grover::{ancilla_residual, build_marking_oracle, station_pattern};
use crate::net::{build_validity_expression, BoolExpr, Network, StationCombination, TripPath};
use crate::oracle::{build_search_preparation, functional_phase_oracle};
use crate::sim::Statevector;

/// Largest register the gate-level oracle is simulated on.
pub const MAX_FULL_CIRCUIT_QUBITS: usize = 24;

const SIGN_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternSigns {
    pub pattern: StationCombination,
    /// `+1`, `-1`, or `0` when the circuit did not act as a pure sign.
    pub circuit_sign: i8,
    pub functional_sign: i8,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EquivalenceReport {
    pub tau: u32,
    pub form: ValidityForm,
    pub counter: CounterMode,
    pub num_qubits: usize,
    pub rows: Vec<PatternSigns>,
    pub mismatches: usize,
    /// Weight left outside the clean work subspace after one oracle call.
    pub ancilla_residual: f64,
}

impl EquivalenceReport {
    pub fn passed(&self) -> bool {
        self.mismatches == 0 && self.ancilla_residual < crate::grover::CLEAN_TOLERANCE
    }

    pub fn circuit_marked(&self) -> usize {
        self.rows.iter().filter(|r| r.circuit_sign == -1).count()
    }

    pub fn functional_marked(&self) -> usize {
        self.rows.iter().filter(|r| r.functional_sign == -1).count()
    }
}

/// Checks the gate-level marking oracle of `net` against the functional
/// oracle built from its validity expression, pattern by pattern.
pub fn verify_oracle_equivalence(
    net: &Network,
    tau: u32,
    form: ValidityForm,
    counter: CounterMode,
) -> Result<EquivalenceReport> {
    let expr = build_validity_expression(net);
    compare_oracles(net.trips(), net.num_nodes(), &expr, tau, form, counter)
}

/// As [`verify_oracle_equivalence`], with the circuit built from `trips` and
/// the reference sign taken from `expr`. Lets a tampered trip be checked
/// against an untouched expression.
pub fn compare_oracles(
    trips: &[TripPath],
    n: usize,
    expr: &BoolExpr,
    tau: u32,
    form: ValidityForm,
    counter: CounterMode,
) -> Result<EquivalenceReport> {
    let layout = RegisterLayout::search(n, trips.len(), form, counter)?;
    if layout.num_qubits > MAX_FULL_CIRCUIT_QUBITS {
        return Err(Error::TooLarge {
            what: "gate-level oracle",
            size: layout.num_qubits,
            limit: MAX_FULL_CIRCUIT_QUBITS,
        });
    }
    let oracle = build_marking_oracle(trips, &layout, tau)?;
    let functional = functional_phase_oracle(expr, n, tau);

    let mut before = Statevector::new(layout.num_qubits)?;
    before.apply_circuit(&build_search_preparation(&layout)?)?;
    let mut after = before.clone();
    after.apply_circuit(&oracle)?;

    let stations = layout.station_qubits();
    let phase_bit = 1u64 << layout.phase.expect("search layout");
    let mut rows = Vec::with_capacity(1 << n);
    let mut reference: Vec<Option<u64>> = vec![None; 1 << n];
    for i in 0..before.dim() as u64 {
        if i & phase_bit == 0 && before.probability(i) > 0.0 {
            reference[station_pattern(i, &stations) as usize] = Some(i);
        }
    }
    for (pattern, index) in reference.into_iter().enumerate() {
        let index = index.expect("preparation covers every station pattern");
        let ratio = after.amplitude(index) / before.amplitude(index);
        let circuit_sign = if (ratio - 1.0).norm() < SIGN_TOLERANCE {
            1
        } else if (ratio + 1.0).norm() < SIGN_TOLERANCE {
            -1
        } else {
            0
        };
        rows.push(PatternSigns {
            pattern: StationCombination::from_bits(pattern as u64, n),
            circuit_sign,
            functional_sign: functional.sign(pattern as u64),
        });
    }
    let mismatches = rows.iter().filter(|r| r.circuit_sign != r.functional_sign).count();
    Ok(EquivalenceReport {
        tau,
        form,
        counter,
        num_qubits: layout.num_qubits,
        rows,
        mismatches,
        ancilla_residual: ancilla_residual(&after, &layout),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::net::instances;

    #[test]
    fn corridor_agrees_for_every_threshold() {
        let net = instances::corridor();
        for form in [ValidityForm::SinglePath, ValidityForm::Network] {
            for tau in 0..=5 {
                let r = verify_oracle_equivalence(&net, tau, form, CounterMode::Full).unwrap();
                assert!(r.passed(), "tau={tau} form={form:?} {r:?}");
            }
        }
        let r = verify_oracle_equivalence(&net, 3, ValidityForm::Network, CounterMode::Compact).unwrap();
        assert!(r.passed());
        assert_eq!(r.circuit_marked(), 2);
    }

    #[test]
    fn large_instances_are_refused() {
        let net = instances::illinois();
        assert!(matches!(
            verify_oracle_equivalence(&net, 3, ValidityForm::Network, CounterMode::Full),
            Err(Error::TooLarge { .. })
        ));
    }
}
