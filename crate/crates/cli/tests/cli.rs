use std::process::{Command, Output};

fn tanabe(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tanabe"))
        .args(args)
        .env_remove("TANABE_GUARD_OVERRIDE")
        .output()
        .expect("spawn tanabe")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn classify_lambda() {
    let o = tanabe(&["classify", "--r", "2", "--p", "2", "--n", "2", "{1,1',2'};{2}"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "Lambda");
}

#[test]
fn centralizer_dim_reports_match() {
    let o = tanabe(&["centralizer-dim", "--r", "2", "--p", "2", "--n", "2", "--two-l", "4"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "8 (matches |Π_2(2,2,2)| = 8)");
}

#[test]
fn parse_error_exits_2() {
    let o = tanabe(&["classify", "--r", "2", "--p", "2", "--n", "2", "{1,1'"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("parse"));
}

#[test]
fn bad_params_exit_2() {
    let o = tanabe(&["classify", "--r", "4", "--p", "3", "--n", "2", "{1,1'}"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn guard_exits_3() {
    let o = tanabe(&["bratteli", "--r", "2", "--p", "2", "--n", "4", "--two-l", "6"]);
    assert_eq!(o.status.code(), Some(3));
    let o = tanabe(&["basis", "--r", "1", "--p", "1", "--n", "9", "--two-l", "10"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn bratteli_dot_has_figure_nodes() {
    let o = tanabe(&["bratteli", "--r", "2", "--p", "2", "--n", "4", "--two-l", "4", "--dot"]);
    assert!(o.status.success());
    let dot = stdout(&o);
    assert!(dot.starts_with("graph bratteli {"));
    for label in ["(((4),∅);0)", "((3)^4,∅)", "(((2),(2));0)", "(((2),(2));1)", "(((3,1),∅);0)"] {
        assert!(dot.contains(&format!("\"{label}\"")), "missing {label}");
    }
}

#[test]
fn bratteli_json_parses() {
    let o = tanabe(&["bratteli", "--r", "2", "--p", "2", "--n", "4", "--two-l", "4", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v.is_object() || v.is_array());
}

#[test]
fn dims_checksums() {
    let o = tanabe(&["dims", "--r", "2", "--p", "2", "--n", "4", "--two-l", "4"]);
    let out = stdout(&o);
    assert!(out.contains("sum dim*paths = 16"));
    assert!(out.contains("sum paths^2 = 5"));
}

#[test]
fn multiply_diagram_basis() {
    let o = tanabe(&["multiply", "--n", "3", "--basis", "diagram", "{1};{2};{1'};{2'}", "{1};{2};{1'};{2'}"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "9 * {1};{2};{1'};{2'}");
}

#[test]
fn verify_only_zkr_passes() {
    let o = tanabe(&["verify", "--only", "zkr"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
    let recs = v["records"].as_array().unwrap();
    assert!(!recs.is_empty());
    assert!(recs.iter().all(|r| r["tag"] == "zkr"));
}

#[test]
fn injected_fault_pinpoints_oracle() {
    let o = tanabe(&["verify", "--only", "mult-oracle", "--inject-fault"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let failed: Vec<_> = v["records"].as_array().unwrap().iter().filter(|r| r["pass"] == false).collect();
    assert_eq!(failed.len(), 1);
    assert_eq!(failed[0]["tag"], "mult-oracle");
}

#[test]
fn deterministic_output() {
    let args = ["jm-spectrum", "--r", "2", "--p", "2", "--n", "4", "--two-l", "4"];
    assert_eq!(tanabe(&args).stdout, tanabe(&args).stdout);
}
