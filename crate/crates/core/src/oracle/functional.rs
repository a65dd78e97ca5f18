use crate::error::{Error, Result};
use crate::net::BoolExpr;
use crate::sim::Statevector;

/// Diagonal ±1 operator on an `n`-qubit station register.
#[derive(Clone, Debug, PartialEq)]
pub struct FunctionalOracle {
    n: usize,
    marked: Vec<bool>,
}

impl FunctionalOracle {
    pub fn from_predicate(n: usize, mut pred: impl FnMut(u64) -> bool) -> Self {
        let marked = (0..1u64 << n).map(&mut pred).collect();
        Self { n, marked }
    }

    /// Marks `x` when `valid[x]` holds and `weight(x) < tau`.
    pub fn from_validity(valid: &[bool], tau: u32) -> Self {
        let n = valid.len().trailing_zeros() as usize;
        assert_eq!(valid.len(), 1 << n, "validity table must cover 2^n patterns");
        let marked = valid
            .iter()
            .enumerate()
            .map(|(x, &v)| v && (x as u64).count_ones() < tau)
            .collect();
        Self { n, marked }
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn is_marked(&self, x: u64) -> bool {
        self.marked[x as usize]
    }

    pub fn marked_count(&self) -> usize {
        self.marked.iter().filter(|&&m| m).count()
    }

    /// `-1` on marked basis states, `+1` elsewhere.
    pub fn sign(&self, x: u64) -> i8 {
        if self.is_marked(x) {
            -1
        } else {
            1
        }
    }

    pub fn apply(&self, state: &mut Statevector) -> Result<()> {
        if state.num_qubits() != self.n {
            return Err(Error::QubitCountMismatch {
                state: state.num_qubits(),
                circuit: self.n,
            });
        }
        state.apply_phase_flip(|x| self.marked[x as usize]);
        Ok(())
    }
}

/// Sign flip on every `x` with `expr(x)` true and Hamming weight below `tau`.
pub fn functional_phase_oracle(expr: &BoolExpr, n: usize, tau: u32) -> FunctionalOracle {
    FunctionalOracle::from_predicate(n, |x| x.count_ones() < tau && expr.eval_bits(x))
}
