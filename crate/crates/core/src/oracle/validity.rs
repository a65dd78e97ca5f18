use super::{RegisterLayout, ValidityForm};
use crate::error::{Error, Result};
use crate::net::TripPath;
use crate::sim::{Circuit, Gate};

fn blank(layout: &RegisterLayout) -> Circuit {
    Circuit::with_registers(layout.num_qubits, layout.registers())
        .expect("layout registers are disjoint")
}

/// `S_O` and `S_D` to `|1>`, every `S_i` to `|+>`.
pub fn build_initialization(layout: &RegisterLayout) -> Circuit {
    let mut c = blank(layout);
    c.push(Gate::X(layout.origin)).unwrap();
    for q in layout.stations.clone() {
        c.push(Gate::H(q)).unwrap();
    }
    c.push(Gate::X(layout.destination)).unwrap();
    c
}

/// Initialization plus the phase qubit prepared in `|->`.
pub fn build_search_preparation(layout: &RegisterLayout) -> Result<Circuit> {
    let phase = layout
        .phase
        .ok_or_else(|| Error::Config("layout has no phase qubit".into()))?;
    let mut c = build_initialization(layout);
    c.push(Gate::X(phase))?;
    c.push(Gate::H(phase))?;
    Ok(c)
}

fn check_trip(trip: &TripPath, layout: &RegisterLayout, q: usize) -> Result<()> {
    if q >= layout.trips {
        return Err(Error::Config(format!(
            "trip index {q} outside a layout with {} trips",
            layout.trips
        )));
    }
    let needed = trip.nodes.len() + 1;
    let width = layout.trip_ancillas[q].len();
    if needed > width {
        return Err(Error::RegisterTooNarrow { width, needed });
    }
    if let Some(&bad) = trip.nodes.iter().find(|&&v| v >= layout.n) {
        return Err(Error::QubitOutOfRange {
            qubit: bad,
            num_qubits: layout.n,
        });
    }
    Ok(())
}

/// Flags isolated stations of trip `q`.
///
/// For each checked stop `i` in path order (`O` first) the fragment flips
/// ancilla `i` when `S_i = 1` and every accessible `S_j` is `0`. The negative
/// controls are written as X conjugations around a positive-control MCX.
pub fn build_isolation_detector(trip: &TripPath, layout: &RegisterLayout, q: usize) -> Result<Circuit> {
    check_trip(trip, layout, q)?;
    let mut c = blank(layout);
    let ancillas = layout.trip_ancillas[q].clone();
    for (set, anc) in trip.checked().zip(ancillas) {
        let neighbours: Vec<usize> = set.to.iter().map(|&s| layout.station_qubit(s)).collect();
        for &j in &neighbours {
            c.push(Gate::X(j))?;
        }
        let mut controls = vec![layout.station_qubit(set.from)];
        controls.extend(&neighbours);
        c.push(Gate::mcx(&controls, anc))?;
        for &j in &neighbours {
            c.push(Gate::X(j))?;
        }
    }
    Ok(c)
}

/// Flips `v_q` when every used ancilla of trip `q` is `|0>`.
pub fn build_labeler(trip: &TripPath, layout: &RegisterLayout, q: usize) -> Result<Circuit> {
    check_trip(trip, layout, q)?;
    let mut c = blank(layout);
    let used: Vec<usize> = layout.trip_ancillas[q]
        .clone()
        .take(trip.nodes.len() + 1)
        .collect();
    for &a in &used {
        c.push(Gate::X(a))?;
    }
    c.push(Gate::mcx(&used, layout.trip_validity[q]))?;
    for &a in &used {
        c.push(Gate::X(a))?;
    }
    Ok(c)
}

/// Gates of `fragment` in reverse order, each inverted.
pub fn build_restoration(fragment: &Circuit) -> Circuit {
    fragment.inverse()
}

/// Detect, label, restore: leaves `v_q` holding trip validity and the
/// trip's ancillas back at `|0>`.
pub fn build_trip_validity(trip: &TripPath, layout: &RegisterLayout, q: usize) -> Result<Circuit> {
    let detect = build_isolation_detector(trip, layout, q)?;
    let mut c = detect.clone();
    c.append(&build_labeler(trip, layout, q)?)?;
    c.append(&build_restoration(&detect))?;
    Ok(c)
}

/// Validity over all trips.
///
/// Single-path form: the trip block alone, `v_1` keeps the result.
/// Network form: every trip block, an MCX from all `v_q` onto `v_T`, then the
/// trip blocks undone so only `v_T` changes.
pub fn build_network_validity(trips: &[TripPath], layout: &RegisterLayout) -> Result<Circuit> {
    if trips.len() != layout.trips {
        return Err(Error::Config(format!(
            "layout sized for {} trips, got {}",
            layout.trips,
            trips.len()
        )));
    }
    let mut forward = blank(layout);
    for (q, trip) in trips.iter().enumerate() {
        forward.append(&build_trip_validity(trip, layout, q)?)?;
    }
    match layout.form {
        ValidityForm::SinglePath => Ok(forward),
        ValidityForm::Network => {
            let mut c = forward.clone();
            c.push(Gate::mcx(&layout.trip_validity, layout.validity_flag()))?;
            c.append(&forward.inverse())?;
            Ok(c)
        }
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::net::{instances, StationCombination};
    use crate::sim::Statevector;

    fn flags(net: &crate::net::Network, trips: &[TripPath], form: ValidityForm) -> Vec<bool> {
        let layout = RegisterLayout::validity(net.num_nodes(), trips.len(), form).unwrap();
        let c = build_network_validity(trips, &layout).unwrap();
        let fixed = 1u64 << layout.origin | 1 << layout.destination;
        (0..1u64 << layout.n)
            .map(|x| {
                let index = fixed | x << layout.stations.start;
                let mut s = Statevector::basis(layout.num_qubits, index).unwrap();
                s.apply_circuit(&c).unwrap();
                let out = index | 1 << layout.validity_flag();
                let p = s.probability(out);
                assert!(p < 1e-12 || (p - 1.0).abs() < 1e-12);
                p > 0.5
            })
            .collect()
    }

    #[test]
    fn corridor_flag_matches_predicate() {
        let net = instances::corridor();
        let expected: Vec<bool> = (0..16)
            .map(|x| net.is_valid(&StationCombination::from_bits(x, 4)).unwrap())
            .collect();
        for form in [ValidityForm::SinglePath, ValidityForm::Network] {
            assert_eq!(flags(&net, net.trips(), form), expected, "{form:?}");
        }
        let doubled = vec![net.trips()[0].clone(), net.trips()[0].clone()];
        assert_eq!(flags(&net, &doubled, ValidityForm::Network), expected);
    }

    #[test]
    fn trip_count_must_match_layout() {
        let net = instances::corridor();
        let layout = RegisterLayout::validity(4, 2, ValidityForm::Network).unwrap();
        assert!(build_network_validity(net.trips(), &layout).is_err());
    }
}
