use serde::{Deserialize, Serialize};

use super::{build_comparator, build_diffuser, build_hamming_counter};
use crate::error::{Error, Result};
use crate::oracle::{ceil_log2, CounterMode};
use crate::sim::{circuit_unitary, Complex64, Statevector, Unitary, MAX_UNITARY_QUBITS};

const EXACT: f64 = 1e-10;
const MAX_COUNTER_STATIONS: usize = 8;

/// Outcome of an exhaustive self-check.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    pub max_deviation: f64,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

fn tally(name: String, deviations: impl Iterator<Item = f64>) -> SuiteResult {
    let (mut cases, mut failures, mut max_deviation) = (0, 0, 0.0f64);
    for d in deviations {
        cases += 1;
        failures += usize::from(d >= EXACT);
        max_deviation = max_deviation.max(d);
    }
    SuiteResult {
        name,
        cases,
        failures,
        max_deviation,
    }
}

/// Every basis pattern of `n` stations must count to its Hamming weight.
pub fn check_counter(n: usize, mode: CounterMode) -> Result<SuiteResult> {
    if n > MAX_COUNTER_STATIONS {
        return Err(Error::TooLarge {
            what: "counter check",
            size: n,
            limit: MAX_COUNTER_STATIONS,
        });
    }
    let width = match mode {
        CounterMode::Full => n,
        CounterMode::Compact => ceil_log2(n + 1),
    };
    let stations: Vec<usize> = (0..n).collect();
    let counting: Vec<usize> = (n..n + width).collect();
    let c = build_hamming_counter(n + width, &stations, &counting, mode)?;
    let mut deviations = Vec::with_capacity(1 << n);
    for x in 0..1u64 << n {
        let mut s = Statevector::basis(n + width, x)?;
        s.apply_circuit(&c)?;
        let expected = x | (x.count_ones() as u64) << n;
        deviations.push((s.amplitude(expected) - 1.0).norm());
    }
    Ok(tally(format!("counter/{mode:?}/n={n}").to_lowercase(), deviations.into_iter()))
}

/// Every `t`-bit value against every threshold in `0..=2^t`.
pub fn check_comparator(t: usize) -> Result<SuiteResult> {
    let value: Vec<usize> = (0..t).collect();
    let result = t;
    let carries: Vec<usize> = (t + 1..2 * t).collect();
    let width = 2 * t;
    let mut deviations = Vec::new();
    for tau in 0..=1u32 << t {
        let c = build_comparator(width, &value, result, &carries, tau)?;
        for v in 0..1u64 << t {
            let mut s = Statevector::basis(width, v)?;
            s.apply_circuit(&c)?;
            let expected = v | u64::from(v < tau as u64) << result;
            deviations.push((s.amplitude(expected) - 1.0).norm());
        }
    }
    Ok(tally(format!("comparator/t={t}"), deviations.into_iter()))
}

/// Diffuser matrix against `2|+><+| - I`, up to a global phase.
pub fn check_diffuser(n: usize) -> Result<SuiteResult> {
    if n > MAX_UNITARY_QUBITS {
        return Err(Error::TooLarge {
            what: "diffuser check",
            size: n,
            limit: MAX_UNITARY_QUBITS,
        });
    }
    let qubits: Vec<usize> = (0..n).collect();
    let u = circuit_unitary(&build_diffuser(n, &qubits))?;
    let dim = 1usize << n;
    let target = Unitary::from_fn(dim, |r, c| {
        let delta = if r == c { 1.0 } else { 0.0 };
        Complex64::new(2.0 / dim as f64 - delta, 0.0)
    });
    let d = u.max_deviation_up_to_phase(&target);
    Ok(tally(format!("diffuser/n={n}"), std::iter::once(d)))
}
