use cslp::grover::{ancilla_residual, build_marking_oracle};
use cslp::net::{build_validity_expression, instances, Network, Stop};
use cslp::oracle::{
    build_search_preparation, compare_oracles, functional_phase_oracle, grover_qubit_count,
    validity_qubit_count, verify_oracle_equivalence, CounterMode, RegisterLayout, ValidityForm,
};
use cslp::sim::Statevector;

fn weight_below(x: u64, tau: u32) -> bool {
    x.count_ones() < tau
}

#[test]
fn functional_oracle_examples() {
    let corridor = instances::corridor();
    let expr = build_validity_expression(&corridor);
    let o = functional_phase_oracle(&expr, 4, 3);
    let marked: Vec<u64> = (0..16).filter(|&x| o.is_marked(x)).collect();
    assert_eq!(marked, vec![0b0110, 0b1010]);
    assert_eq!(functional_phase_oracle(&expr, 4, 0).marked_count(), 0);

    let illinois = instances::illinois();
    let expr = build_validity_expression(&illinois);
    let expected = (0..128).filter(|&x| illinois.is_valid_bits(x) && weight_below(x, 4)).count();
    assert_eq!(functional_phase_oracle(&expr, 7, 4).marked_count(), expected);
    assert_eq!(expected, 3);
}

#[test]
fn circuit_and_functional_agree_in_compact_mode() {
    let net = instances::corridor();
    for tau in 0..=5 {
        let r = verify_oracle_equivalence(&net, tau, ValidityForm::SinglePath, CounterMode::Compact).unwrap();
        assert!(r.passed(), "tau={tau}");
    }
}

#[test]
fn out_of_range_corridor_marks_nothing() {
    let corridor = instances::corridor();
    let net = Network::new(corridor.names().to_vec(), corridor.edges().to_vec(), 30.0, vec![(0, 3, None)]).unwrap();
    for tau in 0..=5 {
        let r = verify_oracle_equivalence(&net, tau, ValidityForm::Network, CounterMode::Full).unwrap();
        assert!(r.passed());
        assert_eq!(r.circuit_marked(), 0);
    }
}

#[test]
fn corrupted_accessible_set_is_caught() {
    let net = instances::corridor();
    let mut trip = net.trips()[0].clone();
    let a2 = trip.sets.iter_mut().find(|s| s.from == Stop::Node(1)).unwrap();
    a2.to.retain(|&s| s != Stop::Node(3));
    let expr = build_validity_expression(&net);
    let r = compare_oracles(&[trip], 4, &expr, 3, ValidityForm::SinglePath, CounterMode::Full).unwrap();
    assert!(r.mismatches > 0);
    assert!(!r.passed());
    let bad: Vec<String> = r
        .rows
        .iter()
        .filter(|row| row.circuit_sign != row.functional_sign)
        .map(|row| row.pattern.to_string())
        .collect();
    assert_eq!(bad, vec!["0101"]);
}

#[test]
fn oracle_is_diagonal_and_clean_on_a_random_station_state() {
    let net = instances::corridor();
    let layout = RegisterLayout::search(4, 1, ValidityForm::SinglePath, CounterMode::Full).unwrap();
    let oracle = build_marking_oracle(net.trips(), &layout, 4).unwrap();
    let mut s = Statevector::new(layout.num_qubits).unwrap();
    s.apply_circuit(&build_search_preparation(&layout).unwrap()).unwrap();
    // skew the station amplitudes so diagonality is not trivially satisfied
    s.apply(&cslp::sim::Gate::phase(layout.stations.start, 3)).unwrap();
    s.apply(&cslp::sim::Gate::cx(layout.stations.start, layout.stations.start + 2)).unwrap();
    let before: Vec<f64> = (0..s.dim() as u64).map(|i| s.probability(i)).collect();
    s.apply_circuit(&oracle).unwrap();
    for (i, p) in before.iter().enumerate() {
        assert!((s.probability(i as u64) - p).abs() < 1e-12);
    }
    assert!(ancilla_residual(&s, &layout) < 1e-10);
}

#[test]
fn qubit_formulas() {
    for n in 1..=10usize {
        let t = (usize::BITS - n.leading_zeros()) as usize;
        for q in 1..=5usize {
            assert_eq!(validity_qubit_count(n, q), (q + 1) * (n + 2) + 1);
            let formula = q * n + 2 * q + n + (2 * t).max(n + 1) + 4;
            assert_eq!(grover_qubit_count(n, q), formula);
            let full = RegisterLayout::search(n, q, ValidityForm::Network, CounterMode::Full).unwrap();
            assert_eq!(full.num_qubits, formula, "n={n} q={q}");
            let validity = RegisterLayout::validity(n, q, ValidityForm::Network).unwrap();
            assert_eq!(validity.num_qubits, (q + 1) * (n + 2) + 1);
            let regs = full.registers();
            let covered: usize = regs.iter().map(|r| r.width).sum();
            assert_eq!(covered, full.num_qubits);
        }
    }
    assert_eq!(grover_qubit_count(7, 15), 154);
    assert_eq!(validity_qubit_count(4, 1), 13);
    assert_eq!(validity_qubit_count(1, 1), 7);
    assert_eq!(RegisterLayout::validity(4, 1, ValidityForm::SinglePath).unwrap().num_qubits, 12);
}
