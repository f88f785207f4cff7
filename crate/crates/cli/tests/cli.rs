//! Command-line behaviors: exit codes, formats, round trips.

use std::process::Command;

use octonion_algebra::algebra::{AlgebraKind, CayleyTable};
use octonion_algebra::tensor::{dual_tensor, structure_tensor_from_table};
use octonion_cli::export::TensorExport;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_octonion"))
}

#[test]
fn usage_errors_exit_with_code_2() {
    let out = bin()
        .args(["verify", "--algebra", "quaternion"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin()
        .args(["verify", "--suite", "nonsense"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["verify", "--trials", "0"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["export", "q"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin()
        .args(["export", "b", "--algebra", "both"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["frobnicate"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn identities_suite_passes_with_exit_zero() {
    let out = bin()
        .args(["verify", "--algebra", "octonion", "--suite", "identities"])
        .output()
        .unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("computed scalar -42"));
    assert!(text.contains("computed scalar 168"));
    assert!(text.contains("[erratum: false as printed]"));
}

#[test]
fn json_sidecar_is_written_and_parses() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = bin()
        .args([
            "verify",
            "--algebra",
            "split",
            "--suite",
            "tables",
            "--json",
        ])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(parsed["suites"][0]["name"], "tables");
    assert_eq!(parsed["suites"][0]["algebra"], "split-octonion");
}

#[test]
fn export_is_case_sensitive_about_b_and_big_b() {
    let small = bin()
        .args(["export", "b", "--algebra", "octonion"])
        .output()
        .unwrap();
    let big = bin()
        .args(["export", "B", "--algebra", "octonion"])
        .output()
        .unwrap();
    assert_eq!(small.status.code(), Some(0));
    assert_eq!(big.status.code(), Some(0));
    let small: TensorExport = serde_json::from_slice(&small.stdout).unwrap();
    let big: TensorExport = serde_json::from_slice(&big.stdout).unwrap();
    assert_eq!(small.tensor, "b");
    assert_eq!(big.tensor, "B");
    assert!(small.components.iter().all(|c| c.indices.len() == 3));
    assert!(big.components.iter().all(|c| c.indices.len() == 4));
}

#[test]
fn exported_tensors_reproduce_the_in_memory_tensors() {
    let out = bin()
        .args(["export", "b", "--algebra", "split"])
        .output()
        .unwrap();
    let export: TensorExport = serde_json::from_slice(&out.stdout).unwrap();
    let b = structure_tensor_from_table(AlgebraKind::SplitOctonion).unwrap();
    // every exported record matches, and the record set is complete
    let mut count = 0;
    for c in &export.components {
        assert_eq!(b.at(c.indices[0], c.indices[1], c.indices[2]), c.value);
        count += 1;
    }
    assert_eq!(count, b.nonzero().len());
    // the split b list contains the printed exception
    assert!(export
        .components
        .iter()
        .any(|c| c.indices == vec![6, 7, 2] && c.value == -1));

    let out = bin()
        .args(["export", "B", "--algebra", "split"])
        .output()
        .unwrap();
    let export: TensorExport = serde_json::from_slice(&out.stdout).unwrap();
    let big = dual_tensor(AlgebraKind::SplitOctonion, &b).unwrap();
    for c in &export.components {
        assert_eq!(
            big.at(c.indices[0], c.indices[1], c.indices[2], c.indices[3]),
            c.value
        );
    }
    assert_eq!(export.components.len(), big.nonzero().len());
}

#[test]
fn gamma_csv_has_eight_diagonal_rows() {
    let out = bin()
        .args(["export", "gamma", "--algebra", "split", "--format", "csv"])
        .output()
        .unwrap();
    let text = String::from_utf8_lossy(&out.stdout);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "i1,i2,value");
    assert_eq!(lines.len(), 9);
    assert_eq!(lines[1], "0,0,1");
    assert_eq!(lines[3], "2,2,-1");
}

#[test]
fn table_ascii_matches_the_printed_rows() {
    let out = bin()
        .args(["table", "--algebra", "octonion"])
        .output()
        .unwrap();
    let text = String::from_utf8_lossy(&out.stdout);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 8);
    assert_eq!(rows[1], "1 -0 4 7 -2 6 -5 -3");
    let out = bin()
        .args(["table", "--algebra", "split"])
        .output()
        .unwrap();
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(text.lines().nth(1).unwrap(), "1 0 4 -7 2 -6 -5 -3");
}

#[test]
fn table_json_round_trips_through_the_loader() {
    for (arg, kind) in [
        ("octonion", AlgebraKind::Octonion),
        ("split", AlgebraKind::SplitOctonion),
    ] {
        let out = bin()
            .args(["table", "--algebra", arg, "--format", "json"])
            .output()
            .unwrap();
        let parsed: CayleyTable =
            serde_json::from_slice(&out.stdout).expect("table loader parses the rendering");
        assert_eq!(parsed, CayleyTable::new(kind));
    }
}

#[test]
fn unwritable_output_path_exits_with_code_2() {
    let out = bin()
        .args([
            "export",
            "b",
            "--algebra",
            "octonion",
            "--out",
            "/nonexistent-dir/x.json",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
