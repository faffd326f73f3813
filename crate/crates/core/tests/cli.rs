//! End-to-end checks of the `hodgerep` binary.

use std::io::Write;
use std::process::{Command, Output};

use hodgerep::cli::{OutputRecord, SCHEMA_VERSION};

fn hodgerep(args: &[&str]) -> Output {
    hodgerep_env(args, &[])
}

fn hodgerep_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hodgerep"));
    for (k, _) in std::env::vars().filter(|(k, _)| k.starts_with("HODGEREP_")) {
        cmd.env_remove(k);
    }
    cmd.args(args).envs(env.iter().copied());
    cmd.output().expect("binary runs")
}

fn record(out: &Output) -> OutputRecord {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    OutputRecord::from_json(std::str::from_utf8(&out.stdout).unwrap()).expect("valid JSON record")
}

#[test]
fn rep_info_json_round_trips() {
    let out = hodgerep(&[
        "--json", "rep-info", "-a", "C3", "-e", "0,0,1", "-w", "0,1,0",
    ]);
    let rec = record(&out);
    assert_eq!(rec.schema_version, SCHEMA_VERSION);
    assert_eq!(rec.command, "rep-info");
    let h = &rec.results[0]["descriptor"]["hodge_numbers"];
    assert_eq!(h, &serde_json::json!([3, 8, 3]));
    let again = OutputRecord::from_json(&rec.to_json()).unwrap();
    assert_eq!(again, rec);
}

#[test]
fn text_output_is_readable() {
    let out = hodgerep(&[
        "rep-info",
        "-a",
        "E6",
        "-e",
        "0,0,0,0,0,1",
        "-w",
        "1,0,0,0,0,0",
        "-c",
        "1/3",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("2/3:10 -1/3:16 -4/3:1"), "{text}");
    assert!(text.contains("(11,32,11)"), "{text}");
}

#[test]
fn exit_codes_follow_error_kind() {
    assert_eq!(
        hodgerep(&["rep-info", "-a", "X9", "-e", "1", "-w", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        hodgerep(&["rep-info", "-a", "A2", "-e", "1,0,1", "-w", "1,0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(hodgerep(&["no-such-command"]).status.code(), Some(2));
    // Half-integrality fails: μ(E) + c = 7/6.
    assert_eq!(
        hodgerep(&["rep-info", "-a", "A2", "-e", "1,0", "-w", "1,0", "-c", "1/2"])
            .status
            .code(),
        Some(3)
    );
    let capped = hodgerep(&[
        "rep-info",
        "-a",
        "E8",
        "-e",
        "0,0,0,0,0,0,0,1",
        "-w",
        "0,0,0,0,0,0,0,4",
        "--weight-cap",
        "100",
    ]);
    assert_eq!(capped.status.code(), Some(4));
}

#[test]
fn errors_go_to_stderr() {
    let out = hodgerep(&["rep-info", "-a", "X9", "-e", "1", "-w", "1"]);
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("X9"));
}

#[test]
fn classify_reports_families() {
    let out = hodgerep(&[
        "--json",
        "classify",
        "--weight",
        "2",
        "--pattern",
        "1,*,1",
        "--horizontal",
        "--max-rank",
        "3",
        "--max-dim",
        "12",
    ]);
    let rec = record(&out);
    assert!(!rec.results.is_empty());
    assert!(rec.notes.iter().any(|n| n.starts_with("family ")));
    for r in &rec.results {
        assert_eq!(r["descriptor"]["horizontal"], serde_json::json!(true));
    }
}

#[test]
fn caps_resolve_flag_then_env_then_config() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "# defaults\nmax-rank = 2\nmax_factors = 1").unwrap();
    let path = file.path().to_str().unwrap();
    let base = [
        "--json",
        "--config",
        path,
        "classify",
        "--weight",
        "2",
        "--pattern",
        "1,*,1",
        "--max-dim",
        "12",
    ];
    let inputs = |out: &Output| record(out).inputs["constraints"].clone();

    let from_config = inputs(&hodgerep(&base));
    assert_eq!(from_config["max_rank"], 2);
    assert_eq!(from_config["max_factors"], 1);

    let from_env = inputs(&hodgerep_env(&base, &[("HODGEREP_MAX_RANK", "3")]));
    assert_eq!(from_env["max_rank"], 3);

    let mut with_flag = base.to_vec();
    with_flag.extend(["--max-rank", "4"]);
    let from_flag = inputs(&hodgerep_env(&with_flag, &[("HODGEREP_MAX_RANK", "3")]));
    assert_eq!(from_flag["max_rank"], 4);
    assert_eq!(from_flag["max_factors"], 1);
}

#[test]
fn bad_config_is_a_usage_error() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "colour = blue").unwrap();
    let out = hodgerep(&[
        "--config",
        file.path().to_str().unwrap(),
        "tables",
        "contact",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tables_and_adjoint() {
    let rec = record(&hodgerep(&[
        "--json",
        "tables",
        "contact",
        "--max-rank",
        "8",
    ]));
    assert_eq!(rec.results.len(), 30);
    let rec = record(&hodgerep(&["--json", "adjoint", "-a", "G2", "-e", "0,1"]));
    assert_eq!(rec.results[0]["contact"], serde_json::json!(true));
}

#[test]
fn json_output_validates_against_schema() {
    let schema_path = concat!(env!("CARGO_MANIFEST_DIR"), "/schema/output.schema.json");
    let schema: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(schema_path).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).expect("schema compiles");
    let runs: [&[&str]; 6] = [
        &[
            "--json",
            "rep-info",
            "-a",
            "A1+B2",
            "-e",
            "(1)+(1,0)",
            "-w",
            "(1)+(1,0)",
            "-c",
            "1/2",
        ],
        &[
            "--json",
            "classify",
            "--weight",
            "3",
            "--pattern",
            "1,*,*,1",
            "--cy",
            "--max-rank",
            "3",
            "--max-dim",
            "20",
        ],
        &["--json", "adjoint", "-a", "F4", "-e", "1,0,0,0"],
        &["--json", "tables", "appendix", "--max-rank", "4"],
        &["--json", "tables", "hermitian", "--max-rank", "4"],
        &["--json", "tables", "contact", "--max-rank", "4"],
    ];
    for args in runs {
        let out = hodgerep(args);
        assert!(
            out.status.success(),
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        let errors: Vec<String> = validator
            .iter_errors(&value)
            .map(|e| e.to_string())
            .collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}");
    }
}
