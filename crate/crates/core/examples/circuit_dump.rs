//! Text dump of the corridor's Grover iteration at threshold 3.

use cslp::grover::build_grover_iteration;
use cslp::net::instances;
use cslp::oracle::{CounterMode, RegisterLayout, ValidityForm};

fn main() -> cslp::Result<()> {
    let net = instances::corridor();
    let layout = RegisterLayout::search(4, 1, ValidityForm::SinglePath, CounterMode::Full)?;
    let circuit = build_grover_iteration(net.trips(), &layout, 3)?;
    print!("{}", circuit.dump());
    Ok(())
}
