//! Simulated success probability of plain Grover search against
//! `sin^2((2k+1) theta / 2)`.

use cslp::grover::{grover_iteration, iteration_bound, GroverGeometry, GroverOperator};
use cslp::oracle::FunctionalOracle;

fn main() -> cslp::Result<()> {
    for (n, marked) in [(3usize, 1u64), (4, 2), (5, 1)] {
        let big_n = 1u64 << n;
        let oracle = FunctionalOracle::from_predicate(n, |x| x < marked);
        let op = GroverOperator::functional(oracle);
        let geometry = GroverGeometry::new(big_n, marked)?;
        println!("N={big_n} M={marked} bound={}", iteration_bound(big_n, marked)?);
        let mut state = op.initial_state()?;
        for k in 0..=6 {
            let p = state.probability_where(|x| x < marked);
            println!("  k={k}  simulated {p:.12}  predicted {:.12}", geometry.success_probability(k));
            grover_iteration(&mut state, &op, false)?;
        }
    }
    Ok(())
}
