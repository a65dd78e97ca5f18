use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{
    child_seed, Attempt, CircuitBackend, FunctionalBackend, GasConfig, GasOutcome, OracleMode,
    RepeatedOutcome, SearchBackend, TauPolicy,
};
use crate::error::Result;
use crate::net::{Network, StationCombination};

/// Run-time allowance shared by every attempt of one run. Each attempt with
/// `j` iterations costs `n + j`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Budget {
    pub limit: f64,
    pub used: u64,
}

impl Budget {
    pub fn new(limit: f64) -> Self {
        Self { limit, used: 0 }
    }

    /// Charges `cost` if it fits, otherwise leaves the budget untouched.
    pub fn try_spend(&mut self, cost: u64) -> bool {
        if (self.used + cost) as f64 > self.limit {
            return false;
        }
        self.used += cost;
        true
    }
}

/// Searches for a pattern that is valid with fewer than `tau` stations when
/// the number of such patterns is unknown.
///
/// Starting from `m = 1`, draws `j` uniformly from `0..ceil(m)`, runs `j`
/// iterations and measures. A marked outcome is returned; otherwise `m`
/// grows by `lambda` up to `cap`. Returns `None` once the next attempt no
/// longer fits in `budget`. Every attempt is appended to `trace`.
#[allow(clippy::too_many_arguments)]
pub fn exponential_search(
    backend: &mut dyn SearchBackend,
    tau: u32,
    lambda: f64,
    cap: f64,
    budget: &mut Budget,
    rng: &mut dyn RngCore,
    trace: &mut Vec<Attempt>,
) -> Result<Option<StationCombination>> {
    let n = backend.num_vars();
    let mut m = 1.0f64;
    loop {
        let j = rng.random_range(0..m.ceil().max(1.0) as u64);
        if !budget.try_spend(n as u64 + j) {
            return Ok(None);
        }
        let x = backend.sample(tau, j, rng)?;
        let measured = StationCombination::from_bits(x, n);
        let valid = backend.is_valid(x);
        let weight = measured.weight();
        let accepted = valid && weight < tau;
        trace.push(Attempt {
            m,
            j,
            measured,
            valid,
            weight,
            accepted,
        });
        if accepted {
            return Ok(Some(measured));
        }
        m = (lambda * m).min(cap);
    }
}

/// Threshold-lowering search over one backend, seeded from `config.seed`.
///
/// Each success of [`exponential_search`] becomes the new best and its
/// station count the new strict threshold; the iteration bound restarts at 1.
/// The loop ends when the budget cannot cover another attempt.
pub fn adaptive_search(backend: &mut dyn SearchBackend, config: &GasConfig) -> Result<GasOutcome> {
    let n = backend.num_vars();
    config.validate(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let initial_tau = match config.initial_tau {
        TauPolicy::Fixed(t) => t,
        TauPolicy::Uniform => rng.random_range(1..=n as u32 + 1),
    };
    let cap = (2f64).powi(n as i32).sqrt();
    let mut budget = Budget::new(config.budget.limit(n));
    let mut tau = initial_tau;
    let mut best = None;
    let mut attempts = Vec::new();
    let mut thresholds = vec![tau];
    while let Some(found) =
        exponential_search(backend, tau, config.lambda, cap, &mut budget, &mut rng, &mut attempts)?
    {
        tau = found.weight();
        best = Some(found);
        thresholds.push(tau);
    }
    Ok(GasOutcome {
        seed: config.seed,
        initial_tau,
        best,
        final_tau: tau,
        run_time: budget.used,
        budget: budget.limit,
        attempts,
        thresholds,
    })
}

pub fn make_backend(net: &Network, mode: OracleMode) -> Result<Box<dyn SearchBackend + Send>> {
    Ok(match mode {
        OracleMode::Functional => Box::new(FunctionalBackend::new(net)?),
        OracleMode::Circuit => Box::new(CircuitBackend::new(net)?),
    })
}

/// One run on `net` with the configured oracle mode and seed.
pub fn solve_cslp(net: &Network, config: &GasConfig) -> Result<GasOutcome> {
    config.validate(net.num_nodes())?;
    let mut backend = make_backend(net, config.mode)?;
    adaptive_search(backend.as_mut(), config)
}

/// `config.repetitions` independent runs, in parallel, from seeds derived
/// from `config.seed`; keeps the fewest-station result.
pub fn repeat_solve(net: &Network, config: &GasConfig) -> Result<RepeatedOutcome> {
    config.validate(net.num_nodes())?;
    let runs = (0..config.repetitions)
        .into_par_iter()
        .map(|i| solve_cslp(net, &config.clone().with_seed(child_seed(config.seed, i))))
        .collect::<Result<Vec<_>>>()?;
    Ok(RepeatedOutcome::from_runs(config.seed, runs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budget_refuses_overdraft() {
        let mut b = Budget::new(10.5);
        assert!(b.try_spend(6));
        assert!(!b.try_spend(5));
        assert!(b.try_spend(4));
        assert_eq!(b.used, 10);
    }

    #[test]
    fn everything_marked_returns_at_once() {
        let mut backend = FunctionalBackend::from_table(vec![true; 8]);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut budget = Budget::new(100.0);
        let mut trace = Vec::new();
        let found = exponential_search(&mut backend, 4, 8.0 / 7.0, 8f64.sqrt(), &mut budget, &mut rng, &mut trace)
            .unwrap();
        assert!(found.is_some());
        assert_eq!(trace.len(), 1);
        assert_eq!(trace[0].j, 0);
        assert_eq!(budget.used, 3);
    }

    #[test]
    fn nothing_marked_exhausts_the_budget() {
        let mut backend = FunctionalBackend::from_table(vec![false; 16]);
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let mut budget = Budget::new(95.6);
        let mut trace = Vec::new();
        let found =
            exponential_search(&mut backend, 5, 8.0 / 7.0, 4.0, &mut budget, &mut rng, &mut trace).unwrap();
        assert!(found.is_none());
        assert!(trace.iter().all(|a| !a.accepted && a.m <= 4.0));
        assert!(trace.windows(2).all(|w| w[1].m >= w[0].m));
        assert!(budget.used as f64 <= budget.limit);
    }
}
