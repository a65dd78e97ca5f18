use std::process::Command;

use cslp::cli::{run, Outcome, RunReport, EXIT_INFEASIBLE, EXIT_OK, EXIT_USAGE};

fn call(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("cslp").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn report(args: &[&str]) -> (i32, RunReport) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let (code, out, err) = call(&full);
    assert!(err.is_empty(), "{err}");
    (code, serde_json::from_str(&out).unwrap())
}

#[test]
fn solve_illinois_finds_three_stations() {
    let (code, r) = report(&["solve", "--network", "illinois", "--seed", "11", "--repeats", "7", "--mode", "functional"]);
    assert_eq!(code, EXIT_OK);
    let Outcome::Search(s) = &r.outcome else { panic!("search outcome expected") };
    assert_eq!(s.best_weight(), Some(3));
    assert_eq!(s.runs.len(), 7);
    assert_eq!(r.instance.grover_qubits, 154);
}

#[test]
fn infeasible_threshold_exits_two() {
    let (code, r) = report(&["solve", "--network", "corridor", "--initial-tau", "2"]);
    assert_eq!(code, EXIT_INFEASIBLE);
    let Outcome::Search(s) = &r.outcome else { panic!() };
    assert_eq!(s.best, None);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(call(&["solve", "--network", "/no/such/file.json"]).0, EXIT_USAGE);
    assert_eq!(call(&["solve"]).0, EXIT_USAGE);
    assert_eq!(call(&["solve", "--network", "corridor", "--mode", "quantum"]).0, EXIT_USAGE);
    assert_eq!(call(&["solve", "--network", "corridor", "--initial-tau", "9"]).0, EXIT_USAGE);
    let (code, _, err) = call(&["solve", "--network", "illinois", "--mode", "circuit"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("--mode functional"));
}

#[test]
fn brute_reports() {
    let (code, r) = report(&["brute", "--network", "corridor"]);
    assert_eq!(code, EXIT_OK);
    let Outcome::Brute(b) = &r.outcome else { panic!() };
    assert_eq!(b.minimum, Some(2));
    let (_, r) = report(&["brute", "--network", "illinois"]);
    let Outcome::Brute(b) = &r.outcome else { panic!() };
    let names: Vec<String> = b.optimal.iter().map(|c| c.to_string()).collect();
    assert!(names.contains(&"0110100".to_string()) && names.contains(&"1010100".to_string()));
    let (_, r) = report(&["brute", "--network", "no-trips"]);
    let Outcome::Brute(b) = &r.outcome else { panic!() };
    assert_eq!(b.minimum, Some(0));
}

#[test]
fn layout_totals() {
    let (code, r) = report(&["layout", "--network", "illinois"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(r.instance.grover_qubits, 154);
    let (_, r) = report(&["layout", "--network", "corridor"]);
    assert_eq!(r.instance.validity_qubits, 13);
    let Outcome::Layout(l) = &r.outcome else { panic!() };
    assert_eq!(l.single_path_validity_qubits, Some(12));
    let (_, text, _) = call(&["layout", "--network", "corridor"]);
    assert!(text.contains("validity 13, grover iteration 20"));
}

#[test]
fn check_oracle_passes_on_the_corridor() {
    let (code, r) = report(&["check", "--network", "corridor"]);
    assert_eq!(code, EXIT_OK);
    let Outcome::Check(c) = &r.outcome else { panic!() };
    assert!(c.passed);
    assert_eq!(c.thresholds.len(), 12);
    let marked: Vec<usize> = c.thresholds[..6].iter().map(|t| t.equivalence.circuit_marked()).collect();
    assert_eq!(marked, vec![0, 0, 0, 2, 5, 6]);
    assert!(c.thresholds.iter().all(|t| t.equivalence.rows.len() == 16));
}

#[test]
fn check_oracle_refuses_large_instances() {
    assert_eq!(call(&["check-oracle", "--network", "illinois"]).0, EXIT_USAGE);
}

#[test]
fn reports_round_trip_and_repeat_byte_for_byte() {
    let args = ["solve", "--network", "illinois", "--seed", "5", "--format", "json", "--verify"];
    let (_, first, _) = call(&args);
    let (_, second, _) = call(&args);
    assert_eq!(first, second);
    let parsed: RunReport = serde_json::from_str(&first).unwrap();
    assert_eq!(parsed.to_json(), first);
    assert!(parsed.verification.unwrap().best_is_valid.unwrap_or(true));
    assert!(!first.contains("wall_clock"));
}

#[test]
fn text_and_json_carry_the_same_numbers() {
    let (_, text, _) = call(&["solve", "--network", "corridor", "--seed", "8"]);
    let (_, r) = report(&["solve", "--network", "corridor", "--seed", "8"]);
    let Outcome::Search(s) = &r.outcome else { panic!() };
    for run in &s.runs {
        assert!(text.contains(&run.run_time.to_string()));
        if let Some(b) = run.best {
            assert!(text.contains(&b.to_string()));
        }
    }
}

#[test]
fn timing_is_opt_in() {
    let (_, r) = report(&["brute", "--network", "corridor", "--timing"]);
    assert!(r.wall_clock_ms.is_some());
}

#[test]
fn circuit_dump_is_written() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("iteration.txt");
    let p = path.to_str().unwrap();
    let (code, _, _) = call(&["layout", "--network", "corridor", "--dump-circuit", p]);
    assert_eq!(code, EXIT_OK);
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("# qubits 19\n"));
    assert!(text.contains("# reg phase q18..q18"));
    assert!(text.lines().any(|l| l.starts_with("IQFT ")));
}

#[test]
fn network_file_is_loaded() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("line.json");
    std::fs::write(
        &path,
        r#"{"range_miles": 100, "nodes": ["a", "b", "c"],
            "edges": [["a", "b", 60], ["b", "c", 60]],
            "trips": [{"origin": "a", "dest": "c"}]}"#,
    )
    .unwrap();
    let (code, r) = report(&["brute", "--network", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let Outcome::Brute(b) = &r.outcome else { panic!() };
    assert_eq!(b.minimum, Some(3));
}

#[test]
fn binary_exit_codes_and_seed_from_environment() {
    let bin = env!("CARGO_BIN_EXE_cslp");
    let status = Command::new(bin).args(["brute", "--network", "corridor"]).output().unwrap();
    assert_eq!(status.status.code(), Some(EXIT_OK));
    let status = Command::new(bin)
        .args(["solve", "--network", "corridor", "--initial-tau", "2"])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(EXIT_INFEASIBLE));

    let from_env = Command::new(bin)
        .args(["solve", "--network", "corridor", "--format", "json"])
        .env("CSLP_SEED", "31")
        .output()
        .unwrap();
    let from_flag = Command::new(bin)
        .args(["solve", "--network", "corridor", "--format", "json", "--seed", "31"])
        .env("CSLP_SEED", "99")
        .output()
        .unwrap();
    assert_eq!(from_env.stdout, from_flag.stdout);
}
