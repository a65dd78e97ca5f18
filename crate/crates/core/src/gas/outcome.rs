use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::net::StationCombination;

/// One prepare, iterate, measure round.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Attempt {
    /// Iteration bound in force when `j` was drawn.
    pub m: f64,
    pub j: u64,
    pub measured: StationCombination,
    pub valid: bool,
    pub weight: u32,
    /// Valid and strictly below the threshold at the time.
    pub accepted: bool,
}

/// Result of one run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GasOutcome {
    pub seed: u64,
    pub initial_tau: u32,
    pub best: Option<StationCombination>,
    pub final_tau: u32,
    pub run_time: u64,
    pub budget: f64,
    pub attempts: Vec<Attempt>,
    /// Initial threshold followed by every accepted weight.
    pub thresholds: Vec<u32>,
}

impl GasOutcome {
    pub fn best_weight(&self) -> Option<u32> {
        self.best.as_ref().map(StationCombination::weight)
    }
}

/// Best of several independent runs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RepeatedOutcome {
    pub master_seed: u64,
    pub best: Option<StationCombination>,
    /// Index of the first run that produced `best`.
    pub best_run: Option<usize>,
    pub runs: Vec<GasOutcome>,
}

impl RepeatedOutcome {
    pub fn from_runs(master_seed: u64, runs: Vec<GasOutcome>) -> Self {
        let best_run = runs
            .iter()
            .enumerate()
            .filter_map(|(i, r)| r.best_weight().map(|w| (w, i)))
            .min()
            .map(|(_, i)| i);
        Self {
            master_seed,
            best: best_run.and_then(|i| runs[i].best),
            best_run,
            runs,
        }
    }

    pub fn best_weight(&self) -> Option<u32> {
        self.best.as_ref().map(StationCombination::weight)
    }

    /// One column per run: initial threshold, best pattern, station count.
    pub fn summary_table(&self) -> String {
        let mut rows: Vec<(&str, Vec<String>)> = vec![
            ("Experiment", (1..=self.runs.len()).map(|i| i.to_string()).collect()),
            ("Initial tau", self.runs.iter().map(|r| r.initial_tau.to_string()).collect()),
            (
                "Best result",
                self.runs
                    .iter()
                    .map(|r| r.best.map_or("None".to_string(), |b| b.to_string()))
                    .collect(),
            ),
            (
                "Stations",
                self.runs
                    .iter()
                    .map(|r| r.best_weight().map_or("-".to_string(), |w| w.to_string()))
                    .collect(),
            ),
            ("Run time", self.runs.iter().map(|r| r.run_time.to_string()).collect()),
        ];
        let label = rows.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
        let width = rows
            .iter()
            .flat_map(|(_, cells)| cells.iter().map(String::len))
            .max()
            .unwrap_or(0);
        let mut out = String::new();
        for (name, cells) in rows.drain(..) {
            write!(out, "{name:<label$}").unwrap();
            for cell in cells {
                write!(out, "  {cell:>width$}").unwrap();
            }
            out.push('\n');
        }
        out
    }
}
