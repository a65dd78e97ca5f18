use std::fmt::Write as _;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{Gate, Statevector};
use crate::error::{Error, Result};

pub const MAX_UNITARY_QUBITS: usize = 10;

/// A named, contiguous block of qubits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Register {
    pub name: String,
    pub offset: usize,
    pub width: usize,
}

impl Register {
    pub fn new(name: impl Into<String>, offset: usize, width: usize) -> Self {
        Self {
            name: name.into(),
            offset,
            width,
        }
    }

    pub fn qubits(&self) -> std::ops::Range<usize> {
        self.offset..self.offset + self.width
    }
}

/// Ordered gate list over a fixed number of qubits.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Circuit {
    num_qubits: usize,
    gates: Vec<Gate>,
    registers: Vec<Register>,
}

impl Circuit {
    pub fn new(num_qubits: usize) -> Self {
        Self {
            num_qubits,
            gates: Vec::new(),
            registers: Vec::new(),
        }
    }

    /// Registers must be disjoint and inside the circuit.
    pub fn with_registers(num_qubits: usize, registers: Vec<Register>) -> Result<Self> {
        let mut used = vec![false; num_qubits];
        for r in &registers {
            for q in r.qubits() {
                if q >= num_qubits {
                    return Err(Error::QubitOutOfRange { qubit: q, num_qubits });
                }
                if std::mem::replace(&mut used[q], true) {
                    return Err(Error::OverlappingQubits(q));
                }
            }
        }
        Ok(Self {
            num_qubits,
            gates: Vec::new(),
            registers,
        })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn registers(&self) -> &[Register] {
        &self.registers
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn push(&mut self, gate: Gate) -> Result<()> {
        gate.validate(self.num_qubits)?;
        self.gates.push(gate);
        Ok(())
    }

    pub fn extend(&mut self, gates: impl IntoIterator<Item = Gate>) -> Result<()> {
        for g in gates {
            self.push(g)?;
        }
        Ok(())
    }

    /// Appends the gates of `other`, which must have the same width.
    pub fn append(&mut self, other: &Circuit) -> Result<()> {
        if other.num_qubits != self.num_qubits {
            return Err(Error::QubitCountMismatch {
                state: self.num_qubits,
                circuit: other.num_qubits,
            });
        }
        self.gates.extend(other.gates.iter().cloned());
        Ok(())
    }

    /// Adjoint: gates reversed and individually inverted.
    pub fn inverse(&self) -> Circuit {
        Circuit {
            num_qubits: self.num_qubits,
            gates: self.gates.iter().rev().map(Gate::inverse).collect(),
            registers: self.registers.clone(),
        }
    }

    /// Line-oriented text form: `#` header lines for the width and registers,
    /// then one gate per line.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        writeln!(out, "# qubits {}", self.num_qubits).unwrap();
        for r in &self.registers {
            if r.width > 0 {
                writeln!(out, "# reg {} q{}..q{}", r.name, r.offset, r.offset + r.width - 1).unwrap();
            }
        }
        for g in &self.gates {
            writeln!(out, "{g}").unwrap();
        }
        out
    }
}

/// Dense `2^k x 2^k` matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Unitary {
    dim: usize,
    data: Vec<Complex64>,
}

impl Unitary {
    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                data.push(f(r, c));
            }
        }
        Self { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.dim + col]
    }

    /// `max |(U^dagger U - I)_{rc}|`.
    pub fn unitarity_error(&self) -> f64 {
        let mut worst = 0.0f64;
        for r in 0..self.dim {
            for c in 0..self.dim {
                let mut acc = Complex64::new(0.0, 0.0);
                for k in 0..self.dim {
                    acc += self.get(k, r).conj() * self.get(k, c);
                }
                if r == c {
                    acc -= 1.0;
                }
                worst = worst.max(acc.norm());
            }
        }
        worst
    }

    pub fn max_deviation(&self, other: &Unitary) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Deviation after removing one global phase, fixed on the largest entry
    /// of `other`.
    pub fn max_deviation_up_to_phase(&self, other: &Unitary) -> f64 {
        assert_eq!(self.dim, other.dim);
        let (k, _) = other
            .data
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.norm().total_cmp(&b.1.norm()))
            .expect("non-empty matrix");
        if self.data[k].norm() == 0.0 {
            return f64::INFINITY;
        }
        let phase = other.data[k] / self.data[k];
        let phase = phase / phase.norm();
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a * phase - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Matrix of a circuit, column `c` being the image of basis state `c`.
pub fn circuit_unitary(circuit: &Circuit) -> Result<Unitary> {
    let k = circuit.num_qubits();
    if k > MAX_UNITARY_QUBITS {
        return Err(Error::TooLarge {
            what: "circuit for unitary extraction",
            size: k,
            limit: MAX_UNITARY_QUBITS,
        });
    }
    let dim = 1usize << k;
    let mut columns = Vec::with_capacity(dim);
    for c in 0..dim {
        let mut s = Statevector::basis(k, c as u64)?;
        s.apply_circuit(circuit)?;
        columns.push(s);
    }
    Ok(Unitary::from_fn(dim, |r, c| columns[c].amplitude(r as u64)))
}
