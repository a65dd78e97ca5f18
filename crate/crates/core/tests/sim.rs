use std::f64::consts::{FRAC_1_SQRT_2, PI};

use cslp::oracle::{build_initialization, RegisterLayout, ValidityForm};
use cslp::sim::{
    circuit_unitary, inverse_qft_block, qft_block, qft_decomposed, Circuit, Complex64, Control,
    Gate, Statevector, Unitary,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn single(n: usize, g: Gate) -> Unitary {
    let mut circuit = Circuit::new(n);
    circuit.push(g).unwrap();
    circuit_unitary(&circuit).unwrap()
}

fn random_state(n: usize, rng: &mut impl Rng) -> Statevector {
    let amps = (0..1 << n)
        .map(|_| c(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5))
        .collect();
    Statevector::from_amplitudes(amps).unwrap()
}

/// Dense matrix of a permutation-with-phase gate given its action on basis states.
fn from_action(n: usize, f: impl Fn(usize) -> (usize, Complex64)) -> Unitary {
    Unitary::from_fn(1 << n, |r, col| {
        let (to, phase) = f(col);
        if to == r {
            phase
        } else {
            c(0.0, 0.0)
        }
    })
}

#[test]
fn one_qubit_matrices() {
    let x = single(1, Gate::X(0));
    assert!(x.max_deviation(&Unitary::from_fn(2, |r, col| c((r != col) as u8 as f64, 0.0))) < 1e-15);
    let h = single(1, Gate::H(0));
    let expected = Unitary::from_fn(2, |r, col| {
        c(if r == 1 && col == 1 { -FRAC_1_SQRT_2 } else { FRAC_1_SQRT_2 }, 0.0)
    });
    assert!(h.max_deviation(&expected) < 1e-15);
    assert!(single(1, qft_block(&[0])).max_deviation(&h) < 1e-12);
}

#[test]
fn phase_gates() {
    for k in 1..5u32 {
        let angle = 2.0 * PI / f64::from(1u32 << k);
        let p = single(1, Gate::phase(0, k));
        let expected = from_action(1, |b| (b, if b == 1 { Complex64::from_polar(1.0, angle) } else { c(1.0, 0.0) }));
        assert!(p.max_deviation(&expected) < 1e-12);
        let cp = single(3, Gate::cphase(2, 0, k));
        let expected = from_action(3, |b| {
            let on = b & 0b101 == 0b101;
            (b, if on { Complex64::from_polar(1.0, angle) } else { c(1.0, 0.0) })
        });
        assert!(cp.max_deviation(&expected) < 1e-12, "k={k}");
    }
    let mut s = Statevector::basis(1, 1).unwrap();
    s.apply(&Gate::phase(0, 1)).unwrap();
    assert!((s.amplitude(1) - c(-1.0, 0.0)).norm() < 1e-12);
}

#[test]
fn controlled_gates() {
    let mut s = Statevector::basis(2, 0b10).unwrap();
    s.apply(&Gate::cx(1, 0)).unwrap();
    assert!((s.probability(0b11) - 1.0).abs() < 1e-15);

    let g = Gate::Mcx {
        controls: vec![Control::on(0), Control::off(2)],
        target: 1,
    };
    let expected = from_action(3, |b| {
        let fire = b & 1 == 1 && b & 4 == 0;
        (if fire { b ^ 2 } else { b }, c(1.0, 0.0))
    });
    assert!(single(3, g).max_deviation(&expected) < 1e-15);
    let swap = from_action(3, |b| ((b & 0b010) | (b >> 2 & 1) | (b & 1) << 2, c(1.0, 0.0)));
    assert!(single(3, Gate::Swap(0, 2)).max_deviation(&swap) < 1e-15);
}

#[test]
fn qft_matrix() {
    for m in 1..=4usize {
        let dim = 1 << m;
        let qubits: Vec<usize> = (0..m).collect();
        let expected = Unitary::from_fn(dim, |r, col| {
            Complex64::from_polar((dim as f64).sqrt().recip(), 2.0 * PI * (r * col) as f64 / dim as f64)
        });
        assert!(single(m, qft_block(&qubits)).max_deviation(&expected) < 1e-12, "m={m}");
        let mut spelled = Circuit::new(m);
        spelled.extend(qft_decomposed(&qubits)).unwrap();
        assert!(circuit_unitary(&spelled).unwrap().max_deviation(&expected) < 1e-12, "m={m}");
    }
}

#[test]
fn qft_round_trip_and_zero_state() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let q = [0, 1, 2, 3];
    let original = random_state(4, &mut rng);
    let mut s = original.clone();
    s.apply(&qft_block(&q)).unwrap();
    s.apply(&inverse_qft_block(&q)).unwrap();
    assert!(s.max_deviation(&original) < 1e-10);

    let mut z = Statevector::new(4).unwrap();
    z.apply(&qft_block(&q)).unwrap();
    assert!(z.max_deviation(&Statevector::uniform(4).unwrap()) < 1e-12);
}

#[test]
fn involutions_and_empty_circuit() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let original = random_state(3, &mut rng);
    let mut s = original.clone();
    s.apply_circuit(&Circuit::new(3)).unwrap();
    assert_eq!(s, original);
    s.apply(&Gate::X(1)).unwrap();
    s.apply(&Gate::X(1)).unwrap();
    assert!(s.max_deviation(&original) < 1e-12);
}

#[test]
fn corridor_initialization() {
    let layout = RegisterLayout::validity(4, 1, ValidityForm::SinglePath).unwrap();
    assert_eq!(layout.num_qubits, 12);
    let mut s = Statevector::new(12).unwrap();
    s.apply_circuit(&build_initialization(&layout)).unwrap();
    for i in 0..1u64 << 12 {
        let expected = if i & 1 == 1 && i >> 5 & 1 == 1 && i >> 6 == 0 { 0.25 } else { 0.0 };
        assert!((s.amplitude(i) - c(expected, 0.0)).norm() < 1e-12, "{i:012b}");
    }
}

#[test]
fn measurement_statistics() {
    let plus = Statevector::uniform(1).unwrap();
    let ones = (0..10_000u64)
        .filter(|&seed| plus.measure_seeded(&[0], seed).unwrap().0 == 1)
        .count();
    assert!((ones as f64 / 1e4 - 0.5).abs() < 0.02);

    let skewed = Statevector::from_amplitudes(vec![c(0.5, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.75f64.sqrt(), 0.0)])
        .unwrap();
    let ones = (0..10_000u64)
        .filter(|&seed| skewed.measure_seeded(&[0], seed).unwrap().0 == 1)
        .count();
    assert!((ones as f64 / 1e4 - 0.75).abs() < 0.02);

    let basis = Statevector::basis(4, 0b0110).unwrap();
    for seed in 0..20 {
        let (outcome, post) = basis.measure_seeded(&[0, 1, 2, 3], seed).unwrap();
        assert_eq!(outcome, 0b0110);
        assert_eq!(post, basis);
    }
}

#[test]
fn measurement_collapses_the_rest_consistently() {
    let mut s = Statevector::new(2).unwrap();
    s.apply(&Gate::H(0)).unwrap();
    s.apply(&Gate::cx(0, 1)).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let outcome = s.measure(&[0], &mut rng).unwrap();
    let partner = s.measure(&[1], &mut rng).unwrap();
    assert_eq!(outcome, partner);
    assert!((s.norm_sqr() - 1.0).abs() < 1e-12);
}
