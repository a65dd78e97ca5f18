use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// How the first threshold of a run is chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TauPolicy {
    Fixed(u32),
    /// Uniform over `1..=n+1`.
    Uniform,
}

/// Total run-time allowance for one run over `n` stations.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BudgetRule {
    /// `22.5 sqrt(2^n) + 1.4 n`.
    #[default]
    Linear,
    /// `22.5 sqrt(2^n) + 1.4 n^2`.
    Quadratic,
}

impl BudgetRule {
    pub fn limit(self, n: usize) -> f64 {
        let root = (2f64).powi(n as i32).sqrt();
        let n = n as f64;
        match self {
            Self::Linear => 22.5 * root + 1.4 * n,
            Self::Quadratic => 22.5 * root + 1.4 * n * n,
        }
    }
}

/// Which oracle the Grover iterations are simulated with.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleMode {
    /// Sign flip on the bare station register.
    #[default]
    Functional,
    /// Full gate-level register with ancillas, counter and comparator.
    Circuit,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GasConfig {
    /// Growth factor for the iteration bound `m`.
    pub lambda: f64,
    pub initial_tau: TauPolicy,
    pub budget: BudgetRule,
    pub repetitions: usize,
    pub mode: OracleMode,
    pub seed: u64,
}

impl Default for GasConfig {
    fn default() -> Self {
        Self {
            lambda: 8.0 / 7.0,
            initial_tau: TauPolicy::Uniform,
            budget: BudgetRule::Linear,
            repetitions: 7,
            mode: OracleMode::Functional,
            seed: 0,
        }
    }
}

impl GasConfig {
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_tau(mut self, tau: TauPolicy) -> Self {
        self.initial_tau = tau;
        self
    }

    pub fn with_mode(mut self, mode: OracleMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn with_repetitions(mut self, repetitions: usize) -> Self {
        self.repetitions = repetitions;
        self
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        if !(self.lambda > 1.0 && self.lambda.is_finite()) {
            return Err(Error::Config(format!("lambda must exceed 1, got {}", self.lambda)));
        }
        if self.repetitions == 0 {
            return Err(Error::Config("at least one repetition is required".into()));
        }
        if let TauPolicy::Fixed(tau) = self.initial_tau {
            if tau as usize > n + 1 {
                return Err(Error::InvalidThreshold {
                    tau,
                    max: n as u64 + 1,
                });
            }
        }
        Ok(())
    }
}

/// Seed of repetition `index`; repetition 0 reuses the master seed.
pub fn child_seed(master: u64, index: usize) -> u64 {
    master.wrapping_add((index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budgets() {
        assert!((BudgetRule::Linear.limit(4) - 95.6).abs() < 1e-9);
        assert!((BudgetRule::Quadratic.limit(4) - (90.0 + 22.4)).abs() < 1e-9);
    }

    #[test]
    fn validation() {
        let c = GasConfig::default();
        assert!(c.validate(4).is_ok());
        assert!(c.clone().with_tau(TauPolicy::Fixed(6)).validate(4).is_err());
        assert!(GasConfig { lambda: 1.0, ..c.clone() }.validate(4).is_err());
        assert!(c.with_repetitions(0).validate(4).is_err());
    }

    #[test]
    fn first_child_is_the_master() {
        assert_eq!(child_seed(42, 0), 42);
        assert_ne!(child_seed(42, 1), child_seed(42, 2));
    }
}
