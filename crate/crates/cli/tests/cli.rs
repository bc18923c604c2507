use std::fs;
use std::process::{Command, Output};

fn bernpoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bernpoly"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn bernoulli_values() {
    assert_eq!(stdout(&bernpoly(&["bernoulli", "4"])), "-1/30\n");
    assert_eq!(stdout(&bernpoly(&["bernoulli", "0"])), "1\n");
    assert_eq!(
        stdout(&bernpoly(&["bernoulli", "2", "--poly"])),
        "x^2 - x + 1/6\n"
    );
    assert_eq!(stdout(&bernpoly(&["bernoulli", "2", "--at", "1"])), "1/6\n");
    assert_eq!(stdout(&bernpoly(&["bernoulli", "3", "--at", "1/2"])), "0\n");
}

#[test]
fn bernoulli_usage_errors() {
    assert_eq!(bernpoly(&["bernoulli", "-1"]).status.code(), Some(2));
    assert_eq!(
        bernpoly(&["bernoulli", "2", "--at", "1/0"]).status.code(),
        Some(2)
    );
    assert_eq!(bernpoly(&["bernoulli"]).status.code(), Some(2));
}

#[test]
fn volkenborn_table() {
    let o = bernpoly(&[
        "volkenborn",
        "--degree",
        "1",
        "--x0",
        "0",
        "--prime",
        "2",
        "--precision",
        "4",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(
        stdout(&o).trim_end().ends_with("agrees with B_1 = -1/2"),
        "{}",
        stdout(&o)
    );

    let o = bernpoly(&["volkenborn", "--degree", "0"]);
    assert!(stdout(&o).contains("agrees with B_0 = 1"));

    let o = bernpoly(&[
        "volkenborn",
        "--degree",
        "2",
        "--x0",
        "1",
        "--prime",
        "5",
        "--precision",
        "4",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("agrees with B_2(1) = 1/6"));

    assert_eq!(
        bernpoly(&["volkenborn", "--prime", "4"]).status.code(),
        Some(2)
    );
    assert_eq!(
        bernpoly(&["volkenborn", "--precision", "0"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_kaneko_csv() {
    let o = bernpoly(&[
        "verify", "--family", "kaneko", "--max-n", "12", "--format", "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("family,params,verdict,lhs,rhs,mismatch"));
    let rows: Vec<_> = lines.collect();
    assert_eq!(rows.len(), 12);
    assert!(rows
        .iter()
        .all(|r| r.starts_with("kaneko,n=") && r.ends_with(",pass,0,0,")));
}

#[test]
fn verify_small_grid_all_families() {
    let o = bernpoly(&[
        "verify", "--family", "all", "--max-m", "3", "--max-n", "3", "--max-q", "1",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let md = stdout(&o);
    assert!(md.contains("| `sun_trivariate` |"));
    assert!(!md.contains("## Failures"));
}

#[test]
fn verify_usage_errors() {
    assert_eq!(
        bernpoly(&["verify", "--family", "nosuch"]).status.code(),
        Some(2)
    );
    assert_eq!(bernpoly(&["verify", "--max-m", "0"]).status.code(), Some(2));
    assert_eq!(bernpoly(&["verify", "--prime", "9"]).status.code(), Some(2));
    assert_eq!(
        bernpoly(&["verify", "--format", "xml"]).status.code(),
        Some(2)
    );
    assert_eq!(
        bernpoly(&["proof-steps", "--family", "kaneko"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        bernpoly(&["verify", "--corrupt", "step_binom"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn proof_steps_only_runs_steps() {
    let o = bernpoly(&[
        "proof-steps",
        "--max-m",
        "3",
        "--max-n",
        "3",
        "--max-q",
        "1",
        "--format",
        "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().skip(1).all(|l| l.starts_with("step_")));
}

#[test]
fn printed_readings_fail_with_mismatch() {
    let o = bernpoly(&[
        "verify",
        "--family",
        "thm1_4",
        "--max-m",
        "2",
        "--printed-shifted-rhs",
        "--format",
        "markdown",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("- `thm1_4` m=2,nu=0,l=0: coefficient of x: lhs 6, rhs 2"));

    let o = bernpoly(&[
        "verify",
        "--family",
        "ak_const_4",
        "--max-m",
        "3",
        "--strict-parity",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn corrupted_family_reports_first_mismatch() {
    let o = bernpoly(&[
        "verify",
        "--family",
        "kaneko",
        "--max-n",
        "2",
        "--corrupt",
        "kaneko",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["summary"]["failed"], 2);
    assert_eq!(doc["records"][0]["mismatch"], "value: lhs 0, rhs 1");
}

#[test]
fn report_written_to_file_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for path in [&a, &b] {
        let o = bernpoly(&[
            "verify",
            "--family",
            "momiyama_ext,witt_oracle",
            "--max-m",
            "3",
            "--max-n",
            "3",
            "--max-q",
            "2",
            "--format",
            "json",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
        assert!(o.stdout.is_empty());
    }
    let text = fs::read_to_string(&a).unwrap();
    assert_eq!(text, fs::read_to_string(&b).unwrap());
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(
        doc["config"]["families"],
        serde_json::json!(["momiyama_ext", "witt_oracle"])
    );
    assert_eq!(doc["config"]["primes"], serde_json::json!([2, 3, 5, 7]));
    assert_eq!(doc["records"][0]["params"], "q=0,m=0,n=1");
}

#[test]
fn families_lists_every_tag() {
    let text = stdout(&bernpoly(&["families"]));
    assert!(text.lines().any(|l| l.starts_with("thm1_1 ")));
    assert!(text.lines().any(|l| l.starts_with("functional_equation ")));
}
