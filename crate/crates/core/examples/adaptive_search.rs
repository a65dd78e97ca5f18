//! Seven seeded runs on Illinois with initial thresholds 6, 7, 6, 2, 6, 4, 6.

use cslp::gas::{repeat_solve, solve_cslp, GasConfig, TauPolicy};
use cslp::net::instances;

fn main() -> cslp::Result<()> {
    let net = instances::illinois();
    let mut runs = Vec::new();
    for (i, tau) in [6, 7, 6, 2, 6, 4, 6].into_iter().enumerate() {
        let config = GasConfig::default().with_tau(TauPolicy::Fixed(tau)).with_seed(100 + i as u64);
        runs.push(solve_cslp(&net, &config)?);
    }
    let table = cslp::gas::RepeatedOutcome::from_runs(100, runs);
    print!("{}", table.summary_table());

    let first = &table.runs[0];
    println!("\nthresholds of run 1: {:?}", first.thresholds);
    for a in first.attempts.iter().filter(|a| a.accepted) {
        println!("  accepted {} after j={} (m={:.2})", a.measured, a.j, a.m);
    }

    let random = repeat_solve(&net, &GasConfig::default().with_seed(7))?;
    println!("\nrandom thresholds, seed 7:");
    print!("{}", random.summary_table());
    Ok(())
}
