use std::fmt;

use crate::error::{Error, Result};

/// Control qubit of a multi-controlled gate. A negative control fires on `|0>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Control {
    pub qubit: usize,
    pub positive: bool,
}

impl Control {
    pub fn on(qubit: usize) -> Self {
        Self { qubit, positive: true }
    }

    pub fn off(qubit: usize) -> Self {
        Self { qubit, positive: false }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Gate {
    X(usize),
    H(usize),
    /// `R_k = diag(1, exp(2 pi i / 2^k))`, or its adjoint.
    Phase { qubit: usize, k: u32, adjoint: bool },
    /// Multi-controlled NOT. With no controls this is a plain X.
    Mcx { controls: Vec<Control>, target: usize },
    /// `R_k` on `target` controlled by `control` (symmetric in the two qubits).
    ControlledPhase {
        control: usize,
        target: usize,
        k: u32,
        adjoint: bool,
    },
    Swap(usize, usize),
    /// Fourier transform over `qubits`, `qubits[0]` being the least
    /// significant bit of the register value.
    Qft { qubits: Vec<usize>, inverse: bool },
}

impl Gate {
    pub fn cx(control: usize, target: usize) -> Self {
        Gate::Mcx {
            controls: vec![Control::on(control)],
            target,
        }
    }

    pub fn ccx(c0: usize, c1: usize, target: usize) -> Self {
        Gate::Mcx {
            controls: vec![Control::on(c0), Control::on(c1)],
            target,
        }
    }

    pub fn mcx(controls: &[usize], target: usize) -> Self {
        Gate::Mcx {
            controls: controls.iter().map(|&q| Control::on(q)).collect(),
            target,
        }
    }

    pub fn phase(qubit: usize, k: u32) -> Self {
        Gate::Phase { qubit, k, adjoint: false }
    }

    pub fn cphase(control: usize, target: usize, k: u32) -> Self {
        Gate::ControlledPhase {
            control,
            target,
            k,
            adjoint: false,
        }
    }

    pub fn qubits(&self) -> Vec<usize> {
        match self {
            Gate::X(q) | Gate::H(q) | Gate::Phase { qubit: q, .. } => vec![*q],
            Gate::Mcx { controls, target } => {
                let mut v: Vec<usize> = controls.iter().map(|c| c.qubit).collect();
                v.push(*target);
                v
            }
            Gate::ControlledPhase { control, target, .. } => vec![*control, *target],
            Gate::Swap(a, b) => vec![*a, *b],
            Gate::Qft { qubits, .. } => qubits.clone(),
        }
    }

    /// Checks that every qubit index is in range and used once.
    pub fn validate(&self, num_qubits: usize) -> Result<()> {
        let qs = self.qubits();
        let mut seen = 0u128;
        for &q in &qs {
            if q >= num_qubits {
                return Err(Error::QubitOutOfRange { qubit: q, num_qubits });
            }
            if q < 128 {
                if seen >> q & 1 == 1 {
                    return Err(Error::OverlappingQubits(q));
                }
                seen |= 1 << q;
            } else if qs.iter().filter(|&&p| p == q).count() > 1 {
                return Err(Error::OverlappingQubits(q));
            }
        }
        if let Gate::Phase { k: 0, .. } | Gate::ControlledPhase { k: 0, .. } = self {
            return Err(Error::Config("phase order k must be at least 1".into()));
        }
        Ok(())
    }

    pub fn inverse(&self) -> Gate {
        match self.clone() {
            Gate::Phase { qubit, k, adjoint } => Gate::Phase {
                qubit,
                k,
                adjoint: !adjoint,
            },
            Gate::ControlledPhase {
                control,
                target,
                k,
                adjoint,
            } => Gate::ControlledPhase {
                control,
                target,
                k,
                adjoint: !adjoint,
            },
            Gate::Qft { qubits, inverse } => Gate::Qft {
                qubits,
                inverse: !inverse,
            },
            g => g,
        }
    }
}

fn write_qubit_list(f: &mut fmt::Formatter<'_>, qubits: &[usize]) -> fmt::Result {
    let contiguous = qubits.len() > 1 && qubits.windows(2).all(|w| w[1] == w[0] + 1);
    if contiguous {
        write!(f, "q{}..q{}", qubits[0], qubits[qubits.len() - 1])
    } else {
        let items: Vec<String> = qubits.iter().map(|q| format!("q{q}")).collect();
        f.write_str(&items.join(","))
    }
}

/// One line of the circuit dump format, e.g. `MCX c:0,1,!2 t:5`.
impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gate::X(q) => write!(f, "X q{q}"),
            Gate::H(q) => write!(f, "H q{q}"),
            Gate::Phase { qubit, k, adjoint } => {
                write!(f, "{} n={k} q{qubit}", if *adjoint { "PHASEDG" } else { "PHASE" })
            }
            Gate::Mcx { controls, target } => {
                let cs: Vec<String> = controls
                    .iter()
                    .map(|c| format!("{}{}", if c.positive { "" } else { "!" }, c.qubit))
                    .collect();
                write!(f, "MCX c:{} t:{target}", cs.join(","))
            }
            Gate::ControlledPhase {
                control,
                target,
                k,
                adjoint,
            } => write!(
                f,
                "{} n={k} c:{control} t:{target}",
                if *adjoint { "CPHASEDG" } else { "CPHASE" }
            ),
            Gate::Swap(a, b) => write!(f, "SWAP q{a} q{b}"),
            Gate::Qft { qubits, inverse } => {
                f.write_str(if *inverse { "IQFT " } else { "QFT " })?;
                write_qubit_list(f, qubits)
            }
        }
    }
}

pub fn qft_block(qubits: &[usize]) -> Gate {
    Gate::Qft {
        qubits: qubits.to_vec(),
        inverse: false,
    }
}

pub fn inverse_qft_block(qubits: &[usize]) -> Gate {
    Gate::Qft {
        qubits: qubits.to_vec(),
        inverse: true,
    }
}

/// The QFT spelled out as Hadamards, controlled phases and swaps.
pub fn qft_decomposed(qubits: &[usize]) -> Vec<Gate> {
    let m = qubits.len();
    let mut gates = Vec::new();
    for j in (0..m).rev() {
        gates.push(Gate::H(qubits[j]));
        for l in (0..j).rev() {
            gates.push(Gate::cphase(qubits[l], qubits[j], (j - l + 1) as u32));
        }
    }
    for j in 0..m / 2 {
        gates.push(Gate::Swap(qubits[j], qubits[m - 1 - j]));
    }
    gates
}
