use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::gas::{GasConfig, OracleMode, RepeatedOutcome};
use crate::grover::SuiteResult;
use crate::net::{BruteForce, Network, StationCombination};
use crate::oracle::{grover_qubit_count, validity_qubit_count, EquivalenceReport};
use crate::sim::Register;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceSummary {
    pub nodes: Vec<String>,
    pub n: usize,
    pub trips: usize,
    pub range_miles: f64,
    /// `(|Q|+1)(n+2)+1`.
    pub validity_qubits: usize,
    /// `|Q|(n+2) + n + max(2 ceil(log2(n+1)), n+1) + 4`.
    pub grover_qubits: usize,
}

impl InstanceSummary {
    pub fn of(net: &Network) -> Self {
        let (n, q) = (net.num_nodes(), net.trips().len());
        Self {
            nodes: net.names().to_vec(),
            n,
            trips: q,
            range_miles: net.range(),
            validity_qubits: validity_qubit_count(n, q),
            grover_qubits: grover_qubit_count(n, q),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ThresholdCheck {
    /// Valid patterns below the threshold, by enumeration.
    pub brute_marked: usize,
    pub equivalence: EquivalenceReport,
}

impl ThresholdCheck {
    pub fn passed(&self) -> bool {
        self.equivalence.passed()
            && self.equivalence.circuit_marked() == self.brute_marked
            && self.equivalence.functional_marked() == self.brute_marked
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub thresholds: Vec<ThresholdCheck>,
    pub suites: Vec<SuiteResult>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LayoutReport {
    /// Validity-only register in network form.
    pub validity: Option<Vec<Register>>,
    /// Full Grover-iteration register in network form.
    pub search: Option<Vec<Register>>,
    /// Single-trip register without `v_T`, when there is exactly one trip.
    pub single_path_validity_qubits: Option<usize>,
    pub single_path_search_qubits: Option<usize>,
}

/// Cross-check of a search result against enumeration.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verification {
    pub brute_optimum: Option<u32>,
    pub best_is_valid: Option<bool>,
    pub best_is_optimal: bool,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.best_is_valid != Some(false)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Outcome {
    Search(RepeatedOutcome),
    Brute(BruteForce),
    Check(CheckReport),
    Layout(LayoutReport),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub instance: InstanceSummary,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<OracleMode>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub config: Option<GasConfig>,
    pub outcome: Outcome,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<Verification>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_clock_ms: Option<f64>,
}

fn nodes_of(combo: &StationCombination, names: &[String]) -> String {
    let parts: Vec<String> = combo
        .nodes()
        .iter()
        .map(|&i| format!("{} ({})", i, names[i - 1]))
        .collect();
    if parts.is_empty() {
        "none".into()
    } else {
        parts.join(", ")
    }
}

fn registers(out: &mut String, title: &str, regs: &[Register]) {
    let total: usize = regs.iter().map(|r| r.width).sum();
    writeln!(out, "{title} ({total} qubits)").unwrap();
    for r in regs {
        let last = r.offset + r.width - 1;
        writeln!(out, "  {:<8} q{}..q{}  width {}", r.name, r.offset, last, r.width).unwrap();
    }
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises") + "\n"
    }

    pub fn to_text(&self) -> String {
        let i = &self.instance;
        let mut out = String::new();
        writeln!(
            out,
            "instance: nodes {}, trips {}, range {} mi",
            i.n, i.trips, i.range_miles
        )
        .unwrap();
        writeln!(
            out,
            "qubits: validity {}, grover iteration {}",
            i.validity_qubits, i.grover_qubits
        )
        .unwrap();
        if let Some(c) = &self.config {
            writeln!(
                out,
                "search: mode {:?}, lambda {}, budget {:?}, repetitions {}, seed {}",
                c.mode, c.lambda, c.budget, c.repetitions, c.seed
            )
            .unwrap();
        }
        match &self.outcome {
            Outcome::Search(r) => {
                out.push_str(&r.summary_table());
                match (&r.best, r.best_run) {
                    (Some(b), Some(run)) => writeln!(
                        out,
                        "best: {b} ({} stations, run {}): {}",
                        b.weight(),
                        run + 1,
                        nodes_of(b, &i.nodes)
                    )
                    .unwrap(),
                    _ => writeln!(out, "best: None").unwrap(),
                }
            }
            Outcome::Brute(b) => {
                match b.minimum {
                    Some(m) => writeln!(out, "optimum: {m} stations").unwrap(),
                    None => writeln!(out, "optimum: None (no valid combination)").unwrap(),
                }
                for c in &b.optimal {
                    writeln!(out, "  {c}: {}", nodes_of(c, &i.nodes)).unwrap();
                }
                writeln!(out, "valid combinations: {}", b.total_valid()).unwrap();
                for (w, count) in b.valid_by_weight.iter().enumerate() {
                    writeln!(out, "  {w} stations: {count}").unwrap();
                }
            }
            Outcome::Check(c) => {
                for t in &c.thresholds {
                    let e = &t.equivalence;
                    writeln!(
                        out,
                        "tau {} {:?}: {} qubits, marked circuit {} functional {} enumeration {}, mismatches {}, residual {:.1e} {}",
                        e.tau,
                        e.form,
                        e.num_qubits,
                        e.circuit_marked(),
                        e.functional_marked(),
                        t.brute_marked,
                        e.mismatches,
                        e.ancilla_residual,
                        if t.passed() { "ok" } else { "FAIL" }
                    )
                    .unwrap();
                    for row in e.rows.iter().filter(|r| r.circuit_sign != r.functional_sign) {
                        writeln!(
                            out,
                            "  mismatch {}: circuit {} functional {}",
                            row.pattern, row.circuit_sign, row.functional_sign
                        )
                        .unwrap();
                    }
                }
                for s in &c.suites {
                    writeln!(
                        out,
                        "{}: {} cases, {} failures, max deviation {:.1e} {}",
                        s.name,
                        s.cases,
                        s.failures,
                        s.max_deviation,
                        if s.passed() { "ok" } else { "FAIL" }
                    )
                    .unwrap();
                }
                writeln!(out, "{}", if c.passed { "all checks passed" } else { "checks FAILED" }).unwrap();
            }
            Outcome::Layout(l) => {
                if let Some(v) = &l.validity {
                    registers(&mut out, "validity register", v);
                }
                if let Some(s) = &l.search {
                    registers(&mut out, "grover iteration register", s);
                }
                if let Some(q) = l.single_path_validity_qubits {
                    writeln!(out, "single path validity register: {q} qubits").unwrap();
                }
                if let Some(q) = l.single_path_search_qubits {
                    writeln!(out, "single path grover iteration register: {q} qubits").unwrap();
                }
            }
        }
        if let Some(v) = &self.verification {
            writeln!(
                out,
                "verification: optimum {}, best valid {}, best optimal {}",
                v.brute_optimum.map_or("None".into(), |m| m.to_string()),
                v.best_is_valid.map_or("-".into(), |b| b.to_string()),
                v.best_is_optimal
            )
            .unwrap();
        }
        if let Some(ms) = self.wall_clock_ms {
            writeln!(out, "wall clock: {ms:.1} ms").unwrap();
        }
        out
    }
}
