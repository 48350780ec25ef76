//! End-to-end tests of the binary: command wiring, exit codes, output
//! formats, determinism, and artifact round-trips.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn davio(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_davio"))
        .args(args)
        .env_remove("DAVIO_SYNTH_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn synth_reports_levels_and_blocks() {
    let out = davio(&["synth", "-f", "a b ^ b c ^ a !c", "--vars", "a,b,c"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    // this function has no 3-level lattice; the minimum is 4 levels
    assert_eq!(json["n_levels"], 4);
    assert_eq!(json["swat_blocks"], 10);
    assert_eq!(json["lattice"]["level_vars"].as_array().unwrap().len(), 4);
    assert_eq!(json["output_line"], 0);
}

#[test]
fn synth_qasm_uses_the_wire_format() {
    let out = davio(&["synth", "-f", "a b", "--vars", "a,b", "--format", "qasm"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for line in text.lines() {
        assert!(
            line.starts_with("x q[")
                || line.starts_with("swap q[")
                || line.starts_with("ccx q["),
            "unexpected line {line}"
        );
    }
    assert!(text.contains("swap q["));
    assert!(text.contains("ccx q["));
}

#[test]
fn synth_flattened_with_style() {
    let out = davio(&[
        "synth", "-f", "a b", "--vars", "a,b", "--format", "qasm", "--style", "linear-nn",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("cx q["));
    assert!(!text.contains("ccx q["), "blocks must be decomposed");
}

#[test]
fn verify_trivial_function_passes() {
    let out = davio(&["verify", "-f", "0", "--vars", "a"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("PASS"));
}

#[test]
fn sweep_reproduces_the_table() {
    let out = davio(&["sweep", "--n", "1..7"]);
    assert!(out.status.success());
    let expected = "n,square,heavy_hex,triangular\n\
                    1,0,0,0\n2,4,4,0\n3,8,10,0\n4,16,18,0\n5,24,28,0\n6,36,40,0\n7,48,54,0\n";
    assert_eq!(stdout(&out), expected);
}

#[test]
fn sweep_is_deterministic_and_thread_count_invariant() {
    let a = davio(&["sweep", "--n", "1..8"]);
    let b = davio(&["sweep", "--n", "1..8"]);
    assert_eq!(a.stdout, b.stdout);
    let parallel = Command::new(env!("CARGO_BIN_EXE_davio"))
        .args(["sweep", "--n", "1..8"])
        .env("DAVIO_SYNTH_THREADS", "4")
        .output()
        .unwrap();
    assert_eq!(a.stdout, parallel.stdout);
}

#[test]
fn usage_errors_exit_two() {
    let out = davio(&["map", "-f", "a", "--vars", "a"]); // missing --layout
    assert_eq!(out.status.code(), Some(2));
    let out = davio(&["verify", "-f", "a ^", "--vars", "a"]); // syntax error
    assert_eq!(out.status.code(), Some(2));
    let out = davio(&["verify", "-f", "q", "--vars", "a"]); // unknown variable
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn level_budget_exit_three() {
    let out = davio(&[
        "verify", "-f", "a b ^ b c ^ a !c", "--vars", "a,b,c", "--strategy", "fixed-order",
        "--max-levels", "3",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn map_emits_report_and_routed_circuit() {
    let out = davio(&[
        "map", "-f", "a b ^ b c ^ a c", "--vars", "a,b,c", "--layout", "square",
        "--emit-routed",
    ]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["report"]["layout"], "square");
    assert_eq!(json["report"]["total_swaps"], 8);
    assert_eq!(json["report"]["bound_only"], false);
    assert!(json["routed_circuit"]["gates"].is_array());
    let per: Vec<usize> =
        serde_json::from_value(json["report"]["per_swat_swaps"].clone()).unwrap();
    assert_eq!(per.iter().sum::<usize>(), 8);
}

#[test]
fn export_round_trips_artifacts() {
    let dir = std::env::temp_dir().join(format!("davio-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let synth_json = dir.join("synth.json");

    let out = davio(&["synth", "-f", "a b ^ c", "--vars", "a,b,c"]);
    std::fs::write(&synth_json, stdout(&out)).unwrap();

    // qasm export equals direct qasm output
    let direct = davio(&["synth", "-f", "a b ^ c", "--vars", "a,b,c", "--format", "qasm"]);
    let exported = davio(&["export", "--input", synth_json.to_str().unwrap(), "--format", "qasm"]);
    assert_eq!(direct.stdout, exported.stdout);

    // dot export renders the lattice
    let dot = davio(&["export", "--input", synth_json.to_str().unwrap(), "--format", "dot"]);
    assert!(stdout(&dot).starts_with("digraph lattice"));

    // json export is the identity on the artifact
    let json_again =
        davio(&["export", "--input", synth_json.to_str().unwrap(), "--format", "json"]);
    let a: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let b: serde_json::Value = serde_json::from_str(&stdout(&json_again)).unwrap();
    assert_eq!(a, b);

    // layout graphs from map export to dot
    let map_json = dir.join("map.json");
    let out = davio(&["map", "-f", "a b", "--vars", "a,b", "--layout", "triangular"]);
    std::fs::write(&map_json, stdout(&out)).unwrap();
    let dot = davio(&["export", "--input", map_json.to_str().unwrap(), "--format", "dot"]);
    assert!(stdout(&dot).starts_with("graph triangular"));

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn export_reads_stdin() {
    let out = davio(&["synth", "-f", "a", "--vars", "a"]);
    let mut child = Command::new(env!("CARGO_BIN_EXE_davio"))
        .args(["export", "--input", "-", "--format", "qasm"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.as_mut().unwrap().write_all(&out.stdout).unwrap();
    let result = child.wait_with_output().unwrap();
    assert!(result.status.success());
    assert!(String::from_utf8(result.stdout).unwrap().contains("ccx q["));
}

#[test]
fn config_file_runs_a_command() {
    let dir = std::env::temp_dir().join(format!("davio-cli-cfg-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("run.json");
    std::fs::write(
        &cfg,
        serde_json::json!({
            "command": "verify",
            "function_text": "a ^ b",
            "vars": ["a", "b"],
            "seed": 0
        })
        .to_string(),
    )
    .unwrap();
    let out = davio(&["--config", cfg.to_str().unwrap()]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).starts_with("PASS"));
    std::fs::remove_dir_all(&dir).ok();
}
