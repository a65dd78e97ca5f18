//! The four-node corridor: accessible sets, the validity formula and the
//! valid placements found by enumeration.

use cslp::net::{brute_force_optimum, build_validity_expression, instances, StationCombination};

fn main() -> cslp::Result<()> {
    let net = instances::corridor();
    let trip = &net.trips()[0];
    println!("route {:?}, {} miles, range {}", trip.nodes, trip.total_miles(), net.range());
    print!("{}", trip.table());

    let expr = build_validity_expression(&net);
    println!("\nvalidity: {expr}");

    println!("\nvalid placements:");
    for bits in 0..16 {
        let combo = StationCombination::from_bits(bits, 4);
        if net.is_valid(&combo)? {
            println!("  {combo}  {:?}", combo.nodes());
        }
    }
    let best = brute_force_optimum(&net)?;
    println!("\noptimum {:?}: {:?}", best.minimum, best.optimal.iter().map(|c| c.nodes()).collect::<Vec<_>>());
    Ok(())
}
