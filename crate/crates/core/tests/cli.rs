//! End-to-end tests of the command-line interface: verdicts, JSON schema,
//! ideal files and exit codes.

use std::io::Write;
use std::process::{Command, Output};

fn sympow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sympow"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn check_fermat3_both_methods() {
    let out = sympow(&["check", "fermat:3", "--field", "GF(7)", "--method", "both"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("NOT contained"));
    assert!(text.contains("methods agree: true"));
}

#[test]
fn check_star3_contained_and_json_schema() {
    let out = sympow(&["check", "star3", "--field", "Q", "--method", "both", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(report["target"], "star3");
    assert_eq!(report["field"], "Q");
    assert_eq!(report["m"], 3);
    assert_eq!(report["r"], 2);
    let results = report["results"].as_array().unwrap();
    assert_eq!(results.len(), 2);
    for r in results {
        assert_eq!(r["contained"], true);
        assert!(r["method"].is_string());
    }
    assert_eq!(report["agreement"], true);
    assert!(report["timings_ms"].is_object());
    // stable across runs
    let again = sympow(&["check", "star3", "--field", "Q", "--method", "both", "--json"]);
    let report2: serde_json::Value = serde_json::from_str(&stdout(&again)).unwrap();
    assert_eq!(report["results"], report2["results"]);
}

#[test]
fn check_klein_criterion_only() {
    let out = sympow(&["check", "klein", "--field", "GF(11)", "--method", "criterion"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("NOT contained"));
}

#[test]
fn characteristic_3_exit_codes() {
    // the criterion alone refuses characteristic 3
    let out = sympow(&["check", "star3", "--field", "GF(3)", "--method", "criterion"]);
    assert_eq!(out.status.code(), Some(3));
    // `both` degrades to the oracle with a note and succeeds
    let out = sympow(&["check", "star3", "--field", "GF(3)", "--method", "both"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("refused"));
    assert!(text.contains("CONTAINED"));
}

#[test]
fn ideal_file_target() {
    let dir = std::env::temp_dir().join(format!("sympow-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("dual_hesse.ideal");
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, "# dual Hesse configuration").unwrap();
    writeln!(f, "field: GF(7)").unwrap();
    writeln!(f, "x*y^3 - x*z^3").unwrap();
    writeln!(f, "y*z^3 - x^3*y").unwrap();
    writeln!(f, "x^3*z - y^3*z").unwrap();
    drop(f);
    let out = sympow(&["check", path.to_str().unwrap(), "--method", "both"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("NOT contained"));
    assert!(text.contains("methods agree: true"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn resolve_and_syzygy_and_points() {
    let out = sympow(&["resolve", "fermat:3", "--field", "GF(7)", "--power", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("[10, 12, 3]"));
    assert!(text.contains("true"));

    let out = sympow(&["syzygy", "klein", "--field", "GF(11)", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["syzygy"]["d0"], 3);
    assert_eq!(report["syzygy"]["d1"], 5);

    let out = sympow(&["points", "klein", "--field", "GF(11)", "--json"]);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["points"]["count"], 49);
    assert_eq!(report["points"]["incidence"]["4"], 21);
    assert_eq!(report["points"]["incidence"]["3"], 28);
    assert_eq!(report["points"]["multiplicity"], 49);
}

#[test]
fn witness_reports_both_fermat_products() {
    let out = sympow(&["witness", "fermat:3", "--field", "GF(7)", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let products = report["witness_info"]["products"].as_array().unwrap();
    assert_eq!(products.len(), 2);
    assert_eq!(products[0]["in_symbolic"], true);
    assert_eq!(products[0]["in_ordinary"], true);
    assert_eq!(products[1]["in_symbolic"], true);
    assert_eq!(products[1]["in_ordinary"], false);
}

#[test]
fn errors_exit_nonzero() {
    let out = sympow(&["check", "wiman"]);
    assert_eq!(out.status.code(), Some(1));
    let out = sympow(&["check", "star3", "--field", "GF(6)"]);
    assert_eq!(out.status.code(), Some(1));
    let out = sympow(&["check", "fermat:3", "--field", "GF(5)"]);
    assert_eq!(out.status.code(), Some(1));
    let out = sympow(&["check", "star3", "--method", "guess"]);
    assert_eq!(out.status.code(), Some(1));
}
