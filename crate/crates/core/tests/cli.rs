use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn finring(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_finring"))
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .args(args)
        .output()
        .expect("run finring")
}

fn code(args: &[&str]) -> i32 {
    finring(args).status.code().expect("exit code")
}

fn json(args: &[&str]) -> Value {
    let out = finring(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["validate", "--ring", "fixtures/zmod12.json"]), 0);
    assert_eq!(
        code(&[
            "validate",
            "--ring",
            "fixtures/invalid/non_distributive.json"
        ]),
        1
    );
    assert_eq!(
        code(&[
            "validate",
            "--ring",
            "fixtures/invalid/non_power_assoc.json"
        ]),
        1
    );
    assert_eq!(
        code(&[
            "partition",
            "--ring",
            "fixtures/invalid/non_power_assoc.json"
        ]),
        2
    );
    assert_eq!(
        code(&["validate", "--ring", "fixtures/invalid/malformed.json"]),
        2
    );
    assert_eq!(
        code(&["validate", "--ring", "fixtures/does_not_exist.json"]),
        2
    );
    assert_eq!(code(&["partition"]), 2);
    assert_eq!(
        code(&["cliques", "--ring", "fixtures/power_assoc_algebra.json"]),
        3
    );
    assert_eq!(
        code(&["partition", "--ring", "fixtures/power_assoc_algebra.json"]),
        0
    );
}

#[test]
fn partition_report() {
    let v = json(&["partition", "--ring", "fixtures/zmod12.json"]);
    assert_eq!(v["ring"]["order"], 12);
    assert_eq!(v["blocks"]["4"], serde_json::json!([2, 4, 8, 10]));
    assert_eq!(v["idempotents"], serde_json::json!([0, 1, 4, 9]));
}

#[test]
fn lifting_commands() {
    let v = json(&[
        "lift",
        "--hom",
        "fixtures/homs/z12_to_z4.json",
        "--element",
        "1",
    ]);
    let text = v.to_string();
    assert!(text.contains("\"lift_is_idempotent\":true"), "{text}");

    let v = json(&[
        "regular-lift",
        "--ring",
        "fixtures/z4xz4.json",
        "--ideal-generators",
        "1",
        "--element",
        "14",
        "--witness",
        "12",
    ]);
    let text = v.to_string();
    assert!(text.contains("\"z\":12"), "{text}");

    let bad = finring(&[
        "regular-lift",
        "--ring",
        "fixtures/zmod8.json",
        "--ideal-generators",
        "0",
        "--element",
        "2",
        "--witness",
        "1",
    ]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn out_flag_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.dot");
    let path_str = path.to_str().unwrap();
    assert_eq!(
        code(&[
            "graph",
            "--ring",
            "fixtures/zmod8.json",
            "--format",
            "dot",
            "--out",
            path_str
        ]),
        0
    );
    let stdout = finring(&["graph", "--ring", "fixtures/zmod8.json", "--format", "dot"]).stdout;
    assert_eq!(std::fs::read(&path).unwrap(), stdout);
}

#[test]
fn golden_graphs() {
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let z6 = finring(&[
        "graph",
        "--ring",
        "fixtures/zmod6.json",
        "--format",
        "dot",
        "--with-blocks",
    ]);
    assert_eq!(
        z6.stdout,
        std::fs::read(golden.join("zmod6_blocks.dot")).unwrap()
    );
    let z8 = finring(&["graph", "--ring", "fixtures/zmod8.json", "--format", "dot"]);
    assert_eq!(z8.stdout, std::fs::read(golden.join("zmod8.dot")).unwrap());

    // The golden edges are exactly the pairs with a*b = 0 mod n.
    for (file, n) in [("zmod6_blocks.dot", 6), ("zmod8.dot", 8)] {
        let text = std::fs::read_to_string(golden.join(file)).unwrap();
        let edges: Vec<(usize, usize)> = text
            .lines()
            .filter_map(|l| l.trim().trim_end_matches(';').split_once(" -> "))
            .map(|(a, b)| (a.parse().unwrap(), b.parse().unwrap()))
            .collect();
        let expected: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|(a, b)| a * b % n == 0)
            .collect();
        assert_eq!(edges, expected, "{file}");
    }
}

#[test]
fn tables_input_from_temp_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z3.json");
    let add: Vec<Vec<usize>> = (0..3)
        .map(|a| (0..3).map(|b| (a + b) % 3).collect())
        .collect();
    let mul: Vec<Vec<usize>> = (0..3)
        .map(|a| (0..3).map(|b| a * b % 3).collect())
        .collect();
    let spec =
        serde_json::json!({ "kind": "tables", "order": 3, "add": add, "mul": mul, "one": 1 });
    std::fs::write(&path, spec.to_string()).unwrap();
    let v = json(&["idempotents", "--ring", path.to_str().unwrap()]);
    assert!(v.to_string().contains("[0,1]"), "{v}");
    assert_eq!(code(&["verify-all", "--ring", path.to_str().unwrap()]), 0);
}

#[test]
fn verify_all_is_deterministic() {
    let args = [
        "verify-all",
        "--ring",
        "fixtures/zmod12.json",
        "--hom",
        "fixtures/homs/z12_to_z4.json",
        "--hom",
        "fixtures/homs/z12_to_quotient.json",
    ];
    let a = finring(&args);
    let b = finring(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["passed"], true);
}
