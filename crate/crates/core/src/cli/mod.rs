//! The `cslp` command line.
//!
//! Exit codes: 0 solved, 1 usage or I/O error, 2 infeasible, 3 a check failed.

mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use report::{
    CheckReport, InstanceSummary, LayoutReport, Outcome, RunReport, ThresholdCheck, Verification,
};

use crate::error::{Error, Result};
use crate::gas::{repeat_solve, BudgetRule, GasConfig, OracleMode, TauPolicy};
use crate::grover::{build_grover_iteration, check_comparator, check_counter, check_diffuser};
use crate::net::{brute_force_optimum, instances, Network};
use crate::oracle::{
    ceil_log2, verify_oracle_equivalence, CounterMode, RegisterLayout, ValidityForm,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INFEASIBLE: i32 = 2;
pub const EXIT_CHECK_FAILED: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "cslp", version, about = "Charging station placement by Grover adaptive search")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Search for a minimum station set.
    Solve(SolveArgs),
    /// Enumerate every combination for the exact optimum.
    Brute(CommonArgs),
    /// Compare the gate-level oracle with the functional one and run the
    /// counter, comparator and diffuser self-checks.
    #[command(name = "check-oracle", alias = "check")]
    CheckOracle(CommonArgs),
    /// Print the register allocation and qubit totals.
    Layout(CommonArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Functional,
    Circuit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BudgetArg {
    Alg2,
    Alg3,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Network document, or one of the bundled instances: corridor, illinois, no-trips.
    #[arg(long)]
    pub network: String,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Write the gate-level Grover iteration to this file.
    #[arg(long)]
    pub dump_circuit: Option<PathBuf>,
    /// Include wall-clock time in the report.
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, env = "CSLP_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 7)]
    pub repeats: usize,
    #[arg(long, value_enum, default_value = "functional")]
    pub mode: ModeArg,
    /// A threshold in 0..=n+1, or `random` for uniform over 1..=n+1.
    #[arg(long, default_value = "random", value_parser = parse_tau)]
    pub initial_tau: TauPolicy,
    #[arg(long)]
    pub lambda: Option<f64>,
    #[arg(long, value_enum, default_value = "alg3")]
    pub budget: BudgetArg,
    /// Cross-check the result against enumeration.
    #[arg(long)]
    pub verify: bool,
}

fn parse_tau(s: &str) -> std::result::Result<TauPolicy, String> {
    if s == "random" {
        return Ok(TauPolicy::Uniform);
    }
    s.parse()
        .map(TauPolicy::Fixed)
        .map_err(|_| format!("expected a non-negative integer or `random`, got `{s}`"))
}

pub fn load_network(source: &str) -> Result<Network> {
    let path = Path::new(source);
    if path.exists() {
        return Network::from_path(path);
    }
    instances::by_name(source).ok_or_else(|| {
        Error::Io(std::io::Error::new(
            std::io::ErrorKind::NotFound,
            format!("`{source}` is neither a file nor a bundled instance"),
        ))
    })
}

fn dump_circuit(net: &Network, tau: u32, path: &Path) -> Result<()> {
    let form = ValidityForm::for_trips(net.trips().len());
    let layout = RegisterLayout::search(net.num_nodes(), net.trips().len(), form, CounterMode::Full)?;
    let circuit = build_grover_iteration(net.trips(), &layout, tau)?;
    std::fs::write(path, circuit.dump())?;
    Ok(())
}

fn default_dump_tau(net: &Network) -> u32 {
    net.num_nodes() as u32 + 1
}

fn solve(args: &SolveArgs, net: &Network) -> Result<(RunReport, i32)> {
    let defaults = GasConfig::default();
    let config = GasConfig {
        lambda: args.lambda.unwrap_or(defaults.lambda),
        initial_tau: args.initial_tau,
        budget: match args.budget {
            BudgetArg::Alg2 => BudgetRule::Quadratic,
            BudgetArg::Alg3 => BudgetRule::Linear,
        },
        repetitions: args.repeats,
        mode: match args.mode {
            ModeArg::Functional => OracleMode::Functional,
            ModeArg::Circuit => OracleMode::Circuit,
        },
        seed: args.seed,
    };
    if let Some(path) = &args.common.dump_circuit {
        let tau = match config.initial_tau {
            TauPolicy::Fixed(t) => t,
            TauPolicy::Uniform => default_dump_tau(net),
        };
        dump_circuit(net, tau, path)?;
    }
    let outcome = repeat_solve(net, &config).map_err(|e| match e {
        Error::TooLarge { what, size, limit } if config.mode == OracleMode::Circuit => Error::Config(format!(
            "{what} needs {size} qubits, above the simulator limit of {limit}; use --mode functional"
        )),
        e => e,
    })?;
    let verification = if args.verify {
        let brute = brute_force_optimum(net)?;
        Some(Verification {
            brute_optimum: brute.minimum,
            best_is_valid: outcome.best.map(|b| net.is_valid_bits(b.bits())),
            best_is_optimal: outcome.best_weight().is_some() && outcome.best_weight() == brute.minimum,
        })
    } else {
        None
    };
    let code = match (&verification, outcome.best) {
        (Some(v), _) if !v.passed() => EXIT_CHECK_FAILED,
        (_, Some(_)) => EXIT_OK,
        (_, None) => EXIT_INFEASIBLE,
    };
    let report = RunReport {
        command: "solve".into(),
        instance: InstanceSummary::of(net),
        mode: Some(config.mode),
        config: Some(config),
        outcome: Outcome::Search(outcome),
        verification,
        wall_clock_ms: None,
    };
    Ok((report, code))
}

fn brute(net: &Network) -> Result<(RunReport, i32)> {
    let b = brute_force_optimum(net)?;
    let code = if b.minimum.is_some() { EXIT_OK } else { EXIT_INFEASIBLE };
    Ok((bare_report("brute", net, Outcome::Brute(b)), code))
}

fn bare_report(command: &str, net: &Network, outcome: Outcome) -> RunReport {
    RunReport {
        command: command.into(),
        instance: InstanceSummary::of(net),
        mode: None,
        config: None,
        outcome,
        verification: None,
        wall_clock_ms: None,
    }
}

/// Oracle equivalence over every threshold `0..=n+1`, in both forms when
/// the network has a single trip, plus the building-block self-checks.
pub fn check_oracle(net: &Network) -> Result<CheckReport> {
    let n = net.num_nodes();
    let brute = brute_force_optimum(net)?;
    let marked_below = |tau: u32| -> usize {
        brute
            .valid_by_weight
            .iter()
            .take(tau as usize)
            .sum::<u64>() as usize
    };
    let mut forms = vec![ValidityForm::Network];
    if net.trips().len() == 1 {
        forms.insert(0, ValidityForm::SinglePath);
    }
    let mut thresholds = Vec::new();
    for form in forms {
        for tau in 0..=n as u32 + 1 {
            thresholds.push(ThresholdCheck {
                brute_marked: marked_below(tau),
                equivalence: verify_oracle_equivalence(net, tau, form, CounterMode::Full)?,
            });
        }
    }
    let suites = vec![
        check_counter(n, CounterMode::Full)?,
        check_counter(n, CounterMode::Compact)?,
        check_comparator(ceil_log2(n + 1))?,
        check_diffuser(n)?,
    ];
    let passed = thresholds.iter().all(ThresholdCheck::passed) && suites.iter().all(|s| s.passed());
    Ok(CheckReport {
        thresholds,
        suites,
        passed,
    })
}

fn layout(net: &Network) -> RunReport {
    let (n, q) = (net.num_nodes(), net.trips().len());
    let regs = |l: Result<RegisterLayout>| l.ok().map(|l| l.registers());
    let single = |counter: Option<CounterMode>| {
        (q == 1).then(|| {
            match counter {
                None => RegisterLayout::validity(n, 1, ValidityForm::SinglePath),
                Some(c) => RegisterLayout::search(n, 1, ValidityForm::SinglePath, c),
            }
            .map(|l| l.num_qubits)
            .ok()
        })
        .flatten()
    };
    let report = LayoutReport {
        validity: regs(RegisterLayout::validity(n, q, ValidityForm::Network)),
        search: regs(RegisterLayout::search(n, q, ValidityForm::Network, CounterMode::Full)),
        single_path_validity_qubits: single(None),
        single_path_search_qubits: single(Some(CounterMode::Full)),
    };
    bare_report("layout", net, Outcome::Layout(report))
}

fn execute(cli: &Cli) -> Result<(RunReport, i32, Format)> {
    let start = Instant::now();
    let common = match &cli.command {
        Command::Solve(a) => &a.common,
        Command::Brute(c) | Command::CheckOracle(c) | Command::Layout(c) => c,
    };
    let net = load_network(&common.network)?;
    let (mut report, code) = match &cli.command {
        Command::Solve(a) => solve(a, &net)?,
        Command::Brute(_) => brute(&net)?,
        Command::CheckOracle(c) => {
            if let Some(path) = &c.dump_circuit {
                dump_circuit(&net, default_dump_tau(&net), path)?;
            }
            let check = check_oracle(&net)?;
            let code = if check.passed { EXIT_OK } else { EXIT_CHECK_FAILED };
            (bare_report("check-oracle", &net, Outcome::Check(check)), code)
        }
        Command::Layout(c) => {
            if let Some(path) = &c.dump_circuit {
                dump_circuit(&net, default_dump_tau(&net), path)?;
            }
            (layout(&net), EXIT_OK)
        }
    };
    if common.timing {
        report.wall_clock_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    Ok((report, code, common.format))
}

/// Parses `args`, runs the command and writes the report to `out`.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli) {
        Ok((report, code, format)) => {
            let text = match format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
            };
            if out.write_all(text.as_bytes()).is_err() {
                return EXIT_USAGE;
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tau_argument() {
        assert_eq!(parse_tau("random"), Ok(TauPolicy::Uniform));
        assert_eq!(parse_tau("4"), Ok(TauPolicy::Fixed(4)));
        assert!(parse_tau("-1").is_err());
    }

    #[test]
    fn help_exits_cleanly() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(run(["cslp", "--help"], &mut out, &mut err), EXIT_OK);
        assert!(String::from_utf8(out).unwrap().contains("check-oracle"));
    }

    #[test]
    fn unknown_flag_is_a_usage_error() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(run(["cslp", "brute", "--nope"], &mut out, &mut err), EXIT_USAGE);
        assert!(!err.is_empty());
    }
}
