//! Exact optimum for the central Illinois network by enumeration.

use std::time::Instant;

use cslp::net::{brute_force_optimum, instances};

fn main() -> cslp::Result<()> {
    let net = instances::illinois();
    println!("{} cities, {} trips, range {} mi", net.num_nodes(), net.trips().len(), net.range());
    for trip in net.trips() {
        let names: Vec<&str> = trip.nodes.iter().map(|&i| net.name(i)).collect();
        println!("  {} ({} mi)", names.join(" - "), trip.total_miles());
    }

    let start = Instant::now();
    let best = brute_force_optimum(&net)?;
    println!("\nenumerated 128 combinations in {:?}", start.elapsed());
    println!("minimum stations: {:?}", best.minimum);
    for combo in &best.optimal {
        let names: Vec<&str> = combo.nodes().iter().map(|&i| net.name(i - 1)).collect();
        println!("  {combo}  {}", names.join(", "));
    }
    println!("valid by station count: {:?}", best.valid_by_weight);
    Ok(())
}
