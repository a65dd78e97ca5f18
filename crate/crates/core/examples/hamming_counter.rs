//! Phase-estimation station counter: every basis pattern reads its weight.

use cslp::grover::build_hamming_counter;
use cslp::oracle::{ceil_log2, CounterMode};
use cslp::sim::Statevector;

fn main() -> cslp::Result<()> {
    let n = 5;
    for mode in [CounterMode::Full, CounterMode::Compact] {
        let width = match mode {
            CounterMode::Full => n,
            CounterMode::Compact => ceil_log2(n + 1),
        };
        let stations: Vec<usize> = (0..n).collect();
        let counting: Vec<usize> = (n..n + width).collect();
        let circuit = build_hamming_counter(n + width, &stations, &counting, mode)?;
        println!("{mode:?}: {} counting qubits, {} gates", width, circuit.len());
        for x in [0u64, 0b1, 0b10110, 0b11111] {
            let mut s = Statevector::basis(n + width, x)?;
            s.apply_circuit(&circuit)?;
            let (count, _) = s.measure_seeded(&counting, 0)?;
            println!("  {x:05b} -> {count}");
        }
    }
    Ok(())
}
