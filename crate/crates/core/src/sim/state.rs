use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Circuit, Gate};
use crate::error::{Error, Result};

/// Largest register the simulator will allocate (2^26 amplitudes, 1 GiB).
pub const MAX_QUBITS: usize = 26;

/// Amplitudes over `2^k` computational basis states.
#[derive(Clone, Debug, PartialEq)]
pub struct Statevector {
    num_qubits: usize,
    amps: Vec<Complex64>,
}

fn extract_bits(index: u64, qubits: &[usize]) -> u64 {
    qubits
        .iter()
        .enumerate()
        .fold(0, |acc, (k, &q)| acc | ((index >> q) & 1) << k)
}

/// Draws an outcome from unnormalised probabilities with one uniform variate.
pub fn sample_outcome<R: Rng + ?Sized>(probabilities: &[f64], rng: &mut R) -> Result<u64> {
    let total: f64 = probabilities.iter().sum();
    if total == 0.0 || !total.is_finite() {
        return Err(Error::ZeroNorm);
    }
    let u: f64 = rng.random::<f64>() * total;
    let mut acc = 0.0;
    let mut last_nonzero = 0;
    for (o, &p) in probabilities.iter().enumerate() {
        if p > 0.0 {
            last_nonzero = o;
            acc += p;
            if u < acc {
                return Ok(o as u64);
            }
        }
    }
    // rounding can leave u just above the accumulated total
    Ok(last_nonzero as u64)
}

impl Statevector {
    /// `|0...0>` on `num_qubits` qubits.
    pub fn new(num_qubits: usize) -> Result<Self> {
        Self::basis(num_qubits, 0)
    }

    pub fn basis(num_qubits: usize, index: u64) -> Result<Self> {
        if num_qubits > MAX_QUBITS {
            return Err(Error::TooLarge {
                what: "statevector",
                size: num_qubits,
                limit: MAX_QUBITS,
            });
        }
        let dim = 1usize << num_qubits;
        if index as usize >= dim {
            return Err(Error::QubitOutOfRange {
                qubit: 64 - index.leading_zeros() as usize - 1,
                num_qubits,
            });
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); dim];
        amps[index as usize] = Complex64::new(1.0, 0.0);
        Ok(Self { num_qubits, amps })
    }

    /// Normalises the given amplitudes. The length must be a power of two.
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self> {
        let dim = amps.len();
        if !dim.is_power_of_two() {
            return Err(Error::Config(format!("{dim} amplitudes is not a power of two")));
        }
        let num_qubits = dim.trailing_zeros() as usize;
        if num_qubits > MAX_QUBITS {
            return Err(Error::TooLarge {
                what: "statevector",
                size: num_qubits,
                limit: MAX_QUBITS,
            });
        }
        let mut s = Self { num_qubits, amps };
        let norm = s.norm_sqr().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::ZeroNorm);
        }
        s.amps.iter_mut().for_each(|a| *a /= norm);
        Ok(s)
    }

    /// Uniform superposition over all basis states.
    pub fn uniform(num_qubits: usize) -> Result<Self> {
        let mut s = Self::new(num_qubits)?;
        let a = Complex64::new((s.amps.len() as f64).sqrt().recip(), 0.0);
        s.amps.iter_mut().for_each(|x| *x = a);
        Ok(s)
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amps
    }

    pub fn amplitude(&self, index: u64) -> Complex64 {
        self.amps[index as usize]
    }

    pub fn probability(&self, index: u64) -> f64 {
        self.amps[index as usize].norm_sqr()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Summed probability of the basis states for which `pred` holds.
    pub fn probability_where(&self, mut pred: impl FnMut(u64) -> bool) -> f64 {
        self.amps
            .iter()
            .enumerate()
            .filter(|&(i, _)| pred(i as u64))
            .map(|(_, a)| a.norm_sqr())
            .sum()
    }

    /// Largest entrywise distance to `other`.
    pub fn max_deviation(&self, other: &Statevector) -> f64 {
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn apply(&mut self, gate: &Gate) -> Result<()> {
        gate.validate(self.num_qubits)?;
        match gate {
            Gate::X(q) => self.apply_mcx(0, 0, *q),
            Gate::H(q) => self.apply_h(*q),
            Gate::Phase { qubit, k, adjoint } => {
                let w = root_of_unity(*k, *adjoint);
                let bit = 1usize << qubit;
                for (i, a) in self.amps.iter_mut().enumerate() {
                    if i & bit != 0 {
                        *a *= w;
                    }
                }
            }
            Gate::Mcx { controls, target } => {
                let (mut mask, mut value) = (0usize, 0usize);
                for c in controls {
                    mask |= 1 << c.qubit;
                    if c.positive {
                        value |= 1 << c.qubit;
                    }
                }
                self.apply_mcx(mask, value, *target);
            }
            Gate::ControlledPhase {
                control,
                target,
                k,
                adjoint,
            } => {
                let w = root_of_unity(*k, *adjoint);
                let mask = (1usize << control) | (1usize << target);
                for (i, a) in self.amps.iter_mut().enumerate() {
                    if i & mask == mask {
                        *a *= w;
                    }
                }
            }
            Gate::Swap(a, b) => {
                let (ba, bb) = (1usize << a, 1usize << b);
                for i in 0..self.amps.len() {
                    if i & ba != 0 && i & bb == 0 {
                        self.amps.swap(i, i ^ ba ^ bb);
                    }
                }
            }
            Gate::Qft { qubits, inverse } => self.apply_qft(qubits, *inverse),
        }
        Ok(())
    }

    pub fn apply_circuit(&mut self, circuit: &Circuit) -> Result<()> {
        if circuit.num_qubits() != self.num_qubits {
            return Err(Error::QubitCountMismatch {
                state: self.num_qubits,
                circuit: circuit.num_qubits(),
            });
        }
        for gate in circuit.gates() {
            self.apply(gate)?;
        }
        Ok(())
    }

    /// Flips the sign of every basis state for which `marked` holds.
    pub fn apply_phase_flip(&mut self, mut marked: impl FnMut(u64) -> bool) {
        for (i, a) in self.amps.iter_mut().enumerate() {
            if marked(i as u64) {
                *a = -*a;
            }
        }
    }

    /// Measures `qubits` and collapses the state. Bit `k` of the returned
    /// outcome is the value of `qubits[k]`.
    pub fn measure<R: Rng + ?Sized>(&mut self, qubits: &[usize], rng: &mut R) -> Result<u64> {
        let marginal = self.marginal(qubits)?;
        let outcome = sample_outcome(&marginal, rng)?;
        let extract = |i: usize| extract_bits(i as u64, qubits);

        let scale = marginal[outcome as usize].sqrt().recip();
        for (i, a) in self.amps.iter_mut().enumerate() {
            if extract(i) == outcome {
                *a *= scale;
            } else {
                *a = Complex64::new(0.0, 0.0);
            }
        }
        Ok(outcome)
    }

    /// Outcome probabilities of measuring `qubits` (first listed = bit 0).
    pub fn marginal(&self, qubits: &[usize]) -> Result<Vec<f64>> {
        if qubits.is_empty() {
            return Err(Error::Config("measurement needs at least one qubit".into()));
        }
        if let Some(&q) = qubits.iter().find(|&&q| q >= self.num_qubits) {
            return Err(Error::QubitOutOfRange {
                qubit: q,
                num_qubits: self.num_qubits,
            });
        }
        let mut marginal = vec![0.0f64; 1 << qubits.len()];
        for (i, a) in self.amps.iter().enumerate() {
            marginal[extract_bits(i as u64, qubits) as usize] += a.norm_sqr();
        }
        Ok(marginal)
    }

    /// Seeded measurement on a copy: returns the outcome and the collapsed state.
    pub fn measure_seeded(&self, qubits: &[usize], seed: u64) -> Result<(u64, Statevector)> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut post = self.clone();
        let outcome = post.measure(qubits, &mut rng)?;
        Ok((outcome, post))
    }

    fn apply_h(&mut self, q: usize) {
        let bit = 1usize << q;
        let s = FRAC_1_SQRT_2;
        let len = self.amps.len();
        let mut base = 0;
        while base < len {
            for i in base..base + bit {
                let a = self.amps[i];
                let b = self.amps[i + bit];
                self.amps[i] = (a + b) * s;
                self.amps[i + bit] = (a - b) * s;
            }
            base += bit << 1;
        }
    }

    fn apply_mcx(&mut self, mask: usize, value: usize, target: usize) {
        let bit = 1usize << target;
        let len = self.amps.len();
        let mut base = 0;
        while base < len {
            for i in base..base + bit {
                if i & mask == value {
                    self.amps.swap(i, i + bit);
                }
            }
            base += bit << 1;
        }
    }

    fn apply_qft(&mut self, qubits: &[usize], inverse: bool) {
        let m = qubits.len();
        let dim = 1usize << m;
        let spread: Vec<usize> = (0..dim)
            .map(|y| {
                qubits
                    .iter()
                    .enumerate()
                    .fold(0usize, |acc, (k, &q)| acc | ((y >> k) & 1) << q)
            })
            .collect();
        let sign = if inverse { -1.0 } else { 1.0 };
        let twiddle: Vec<Complex64> = (0..dim)
            .map(|p| Complex64::from_polar(1.0, sign * 2.0 * PI * p as f64 / dim as f64))
            .collect();
        let norm = (dim as f64).sqrt().recip();
        let qmask = spread[dim - 1];

        let mut input = vec![Complex64::new(0.0, 0.0); dim];
        for rest in 0..self.amps.len() {
            if rest & qmask != 0 {
                continue;
            }
            for (x, v) in input.iter_mut().enumerate() {
                *v = self.amps[rest | spread[x]];
            }
            for y in 0..dim {
                let mut acc = Complex64::new(0.0, 0.0);
                for (x, v) in input.iter().enumerate() {
                    acc += v * twiddle[(x * y) & (dim - 1)];
                }
                self.amps[rest | spread[y]] = acc * norm;
            }
        }
    }
}

fn root_of_unity(k: u32, adjoint: bool) -> Complex64 {
    let angle = 2.0 * PI / 2f64.powi(k as i32);
    Complex64::from_polar(1.0, if adjoint { -angle } else { angle })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn hadamard_on_zero() {
        let mut s = Statevector::new(1).unwrap();
        s.apply(&Gate::H(0)).unwrap();
        assert!((s.amplitude(0) - c(FRAC_1_SQRT_2, 0.0)).norm() < 1e-15);
        assert!((s.amplitude(1) - c(FRAC_1_SQRT_2, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn x_swaps_amplitudes() {
        let mut s = Statevector::from_amplitudes(vec![c(0.6, 0.0), c(0.0, 0.8)]).unwrap();
        s.apply(&Gate::X(0)).unwrap();
        assert_eq!(s.amplitudes(), &[c(0.0, 0.8), c(0.6, 0.0)]);
    }

    #[test]
    fn phase_order_one_is_minus_one() {
        let mut one = Statevector::basis(1, 1).unwrap();
        one.apply(&Gate::phase(0, 1)).unwrap();
        assert!((one.amplitude(1) - c(-1.0, 0.0)).norm() < 1e-15);
        let mut zero = Statevector::new(1).unwrap();
        zero.apply(&Gate::phase(0, 1)).unwrap();
        assert_eq!(zero.amplitude(0), c(1.0, 0.0));
    }

    #[test]
    fn cnot_control_high_bit() {
        // |10> is index 2: qubit 1 set
        let mut s = Statevector::basis(2, 0b10).unwrap();
        s.apply(&Gate::cx(1, 0)).unwrap();
        assert_eq!(s.probability(0b11), 1.0);
    }

    #[test]
    fn negative_control() {
        let mut s = Statevector::basis(2, 0b00).unwrap();
        s.apply(&Gate::Mcx {
            controls: vec![super::super::Control::off(0)],
            target: 1,
        })
        .unwrap();
        assert_eq!(s.probability(0b10), 1.0);
    }

    #[test]
    fn basis_measurement_is_deterministic() {
        let s = Statevector::basis(4, 0b0110).unwrap();
        for seed in 0..20 {
            let (o, post) = s.measure_seeded(&[0, 1, 2, 3], seed).unwrap();
            assert_eq!(o, 0b0110);
            assert_eq!(post, s);
        }
    }

    #[test]
    fn zero_norm_rejected() {
        assert!(matches!(
            Statevector::from_amplitudes(vec![c(0.0, 0.0); 2]),
            Err(Error::ZeroNorm)
        ));
    }

    #[test]
    fn out_of_range_gate() {
        let mut s = Statevector::new(2).unwrap();
        assert!(matches!(
            s.apply(&Gate::X(2)),
            Err(Error::QubitOutOfRange { qubit: 2, .. })
        ));
    }
}
