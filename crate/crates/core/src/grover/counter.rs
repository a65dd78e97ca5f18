use crate::error::{Error, Result};
use crate::oracle::{ceil_log2, CounterMode};
use crate::sim::{inverse_qft_block, qft_block, Circuit, Gate};

/// Phase estimation of `R^{(x) n}` that writes the Hamming weight of the
/// station register into `counting` (least significant qubit first).
///
/// Counting qubit `k` of a `w`-qubit register picks up `exp(2 pi i 2^k / 2^w)`
/// per set station, a controlled `R_{w-k}`. The accumulated phase `H / 2^w`
/// is an exact `w`-bit fraction because `H <= n < 2^w`, so the inverse QFT
/// reads `H` with certainty. Full mode prepares the counting register with a
/// QFT block (identical to Hadamards on `|0>`), compact mode with Hadamards.
pub fn build_hamming_counter(
    num_qubits: usize,
    stations: &[usize],
    counting: &[usize],
    mode: CounterMode,
) -> Result<Circuit> {
    let needed = ceil_log2(stations.len() + 1);
    if counting.len() < needed {
        return Err(Error::RegisterTooNarrow {
            width: counting.len(),
            needed,
        });
    }
    let w = counting.len();
    let mut c = Circuit::new(num_qubits);
    match mode {
        CounterMode::Full => c.push(qft_block(counting))?,
        CounterMode::Compact => c.extend(counting.iter().map(|&q| Gate::H(q)))?,
    }
    for &s in stations {
        for k in (0..w).rev() {
            c.push(Gate::cphase(s, counting[k], (w - k) as u32))?;
        }
    }
    c.push(inverse_qft_block(counting))?;
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::Statevector;

    fn reads_weight(n: usize, width: usize, mode: CounterMode) {
        let stations: Vec<usize> = (0..n).collect();
        let counting: Vec<usize> = (n..n + width).collect();
        let c = build_hamming_counter(n + width, &stations, &counting, mode).unwrap();
        for x in 0..1u64 << n {
            let mut s = Statevector::basis(n + width, x).unwrap();
            s.apply_circuit(&c).unwrap();
            let expected = x | (x.count_ones() as u64) << n;
            assert!((s.probability(expected) - 1.0).abs() < 1e-10, "x={x:b} mode={mode:?}");
        }
    }

    #[test]
    fn exact_weights() {
        for n in 1..=4 {
            reads_weight(n, n, CounterMode::Full);
            reads_weight(n, ceil_log2(n + 1), CounterMode::Compact);
        }
    }

    #[test]
    fn narrow_register_is_rejected() {
        assert!(matches!(
            build_hamming_counter(5, &[0, 1, 2], &[3, 4][..1], CounterMode::Compact),
            Err(Error::RegisterTooNarrow { width: 1, needed: 2 })
        ));
    }
}
