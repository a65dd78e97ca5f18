//! Gate-level marking oracle against the functional sign flip on the corridor.

use cslp::net::instances;
use cslp::oracle::{verify_oracle_equivalence, CounterMode, ValidityForm};

fn main() -> cslp::Result<()> {
    let net = instances::corridor();
    for tau in 0..=5 {
        let r = verify_oracle_equivalence(&net, tau, ValidityForm::SinglePath, CounterMode::Full)?;
        let marked: Vec<String> = r
            .rows
            .iter()
            .filter(|row| row.circuit_sign == -1)
            .map(|row| row.pattern.to_string())
            .collect();
        println!(
            "tau={tau} qubits={} mismatches={} residual={:.1e} marked={marked:?}",
            r.num_qubits, r.mismatches, r.ancilla_residual
        );
    }
    Ok(())
}
