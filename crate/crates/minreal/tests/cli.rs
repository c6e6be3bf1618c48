use std::process::Command;

fn minreal(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_minreal"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf8"),
    )
}

#[test]
fn operator_display() {
    assert_eq!(
        minreal(&["show", "operator", "--n", "1", "--lambda", "3", "--X", "H1"]),
        (0, "(-3) + (-2)*z1*d[z1]\n".into())
    );
    let (code, out) = minreal(&["show", "operator", "--n", "1", "--X", "H1"]);
    assert_eq!(code, 0);
    assert_eq!(out, "(-1) + (-2)*p1*d[p1]\n");
}

#[test]
fn gram_and_weights() {
    assert_eq!(
        minreal(&["show", "gram", "--n", "1", "--lambda", "3", "--pmax", "2"]).1,
        "{[0]: 1, [1]: 1/3, [2]: 1/6}\n"
    );
    let (_, json) = minreal(&[
        "show", "gram", "--n", "1", "--lambda", "3", "--pmax", "2", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["[1]"], "1/3");
    assert_eq!(
        minreal(&["show", "weights", "--n", "1", "--m", "3"])
            .1
            .lines()
            .next(),
        Some("3,1,-1,-3")
    );
}

#[test]
fn verify_exit_codes() {
    assert_eq!(minreal(&["verify", "--n", "0"]).0, 2);
    assert_eq!(minreal(&["verify", "--n", "4"]).0, 2);
    assert_eq!(minreal(&["verify", "--n", "1", "--deg", "3..9"]).0, 2);
    assert_eq!(
        minreal(&["verify", "--n", "1", "--suite", "heisenberg"]).0,
        2
    );
    let (code, out) = minreal(&[
        "verify", "--n", "1", "--suite", "h1", "--deg", "3..6", "--format", "tsv",
    ]);
    assert_eq!(code, 0, "{out}");
    let dims: Vec<&str> = out.lines().filter(|l| l.contains("dim H1")).collect();
    assert_eq!(dims.len(), 4);
    assert!(dims
        .iter()
        .all(|l| l.contains("\tpass\t") && l.ends_with("H1=1")));
}

#[test]
fn verify_all_rank_one() {
    let (code, out) = minreal(&["verify", "--n", "1", "--suite", "all"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.ends_with("all suites passed\n"));
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 9);
}

#[test]
fn reports_are_byte_stable() {
    let args = [
        "verify",
        "--n",
        "1",
        "--suite",
        "star-algebra",
        "--seed",
        "7",
        "--format",
        "json",
    ];
    assert_eq!(minreal(&args), minreal(&args));
}

#[test]
fn h1_scan_json_schema() {
    let (code, out) = minreal(&["h1-scan", "--n", "1", "--deg", "3..4"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let row = &v[0];
    for key in [
        "n",
        "d",
        "dim_Z1",
        "dim_B1",
        "dim_H1",
        "stabilized",
        "phi1_is_coboundary",
        "generator_check",
    ] {
        assert!(row.get(key).is_some(), "missing {key}");
    }
    assert_eq!(row["dim_H1"], 1);
    assert_eq!(row["phi1_is_coboundary"], false);
}

#[test]
fn su2_table_rows() {
    let (code, out) = minreal(&["su2-table", "--m", "5"]);
    assert_eq!(code, 0);
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(rows[0].split('\t').take(2).collect::<Vec<_>>(), ["0", "1"]);
    assert!(rows[1].starts_with("1\t2\t1,-1\t"));
    assert!(rows[5].starts_with("5\t6\t5,3,1,-1,-3,-5\t"));
}

#[test]
fn invariant_scan_outcomes() {
    let (code, out) = minreal(&[
        "invariant-scan",
        "--n",
        "2",
        "--a",
        "-7",
        "--deg",
        "6",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["m_a"], "2");
    assert_eq!(v["subspace"]["dimension"], 6);
    let (_, out) = minreal(&["invariant-scan", "--n", "1", "--a", "i", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["absence_certified"], true);
}
