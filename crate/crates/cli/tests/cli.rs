use std::path::PathBuf;
use std::process::{Command, Output};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn wbound(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wbound"))
        .args(args)
        .current_dir(root())
        .env_remove("WBOUND_ENUM_LIMIT")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Compares against `tests/golden/<name>`; `UPDATE_GOLDEN=1` rewrites it.
fn golden(name: &str, args: &[&str], code: i32) {
    let o = wbound(args);
    assert_eq!(
        o.status.code(),
        Some(code),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &o.stdout).unwrap();
    }
    let want = std::fs::read_to_string(&path).unwrap();
    assert!(stdout(&o) == want, "{name} differs from golden output");
}

#[test]
fn table_one_golden() {
    golden("table1.txt", &["tables", "--which", "1"], 0);
}

#[test]
fn table_two_golden() {
    golden("table2.txt", &["tables", "--which", "2"], 0);
}

#[test]
fn table_two_markdown_golden() {
    golden(
        "table2.md",
        &["tables", "--which", "2", "--format", "md"],
        0,
    );
    let md = std::fs::read_to_string(
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/table2.md"),
    )
    .unwrap();
    assert_eq!(md.lines().filter(|l| l.starts_with("| [")).count(), 24);
    assert!(md.contains("### Discrepancies"));
}

// The printed counts of three rows disagree with their listed sets.
#[test]
fn table_three_golden_reports_count_discrepancies() {
    golden("table3.txt", &["tables", "--which", "3"], 1);
}

#[test]
fn table_one_flags_exactly_one_row() {
    let out = stdout(&wbound(&["tables", "--which", "1"]));
    let flagged: Vec<&str> = out
        .lines()
        .skip_while(|l| *l != "flagged:")
        .skip(1)
        .take_while(|l| l.starts_with("  "))
        .map(str::trim)
        .collect();
    assert_eq!(flagged, ["[90,5,46]_2"]);
}

#[test]
fn tables_json_has_sorted_keys() {
    let o = wbound(&["tables", "--which", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["flagged", "passes", "rows", "table"]);
    assert_eq!(v["rows"].as_array().unwrap().len(), 35);
}

#[test]
fn exclude_all_for_eleven_three_six() {
    let o = wbound(&[
        "exclude", "--n", "11", "--k", "3", "--d", "6", "--q", "2", "--method", "all",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l == "griesmer   11 10 9 7"), "{out}");
    assert!(out.lines().any(|l| l == "chen-xie   11 10"), "{out}");
    assert!(out.lines().any(|l| l == "singleton  11 10 9"), "{out}");
}

#[test]
fn exclude_single_method_and_raw() {
    let out = stdout(&wbound(&[
        "exclude", "--n", "78", "--k", "5", "--d", "40", "--q", "2", "--method", "chen-xie",
        "--raw", "--format", "csv",
    ]));
    assert_eq!(out, "n,k,d,q,chen_xie\n78,5,40,2,\"79 78 77 76 75\"\n");
    let out = stdout(&wbound(&[
        "exclude", "--n", "78", "--k", "5", "--d", "40", "--q", "2", "--method", "chen-xie",
        "--format", "csv",
    ]));
    assert_eq!(out, "n,k,d,q,chen_xie\n78,5,40,2,\"78 77 76 75\"\n");
}

#[test]
fn exclude_csv_first_table_row() {
    let out = stdout(&wbound(&[
        "exclude", "--n", "15", "--k", "5", "--d", "7", "--q", "2", "--format", "csv",
    ]));
    assert_eq!(
        out.lines().next(),
        Some("n,k,d,q,chen_xie,singleton,griesmer,union")
    );
    assert!(out
        .lines()
        .nth(1)
        .unwrap()
        .starts_with("15,5,7,2,\"13 12\",\"13 12 11\","));
}

#[test]
fn empty_set_renders_as_dash() {
    // k = 1: no singleton or griesmer exclusions.
    let out = stdout(&wbound(&[
        "exclude", "--n", "5", "--k", "1", "--d", "5", "--q", "2",
    ]));
    assert!(out.lines().any(|l| l == "griesmer   -"), "{out}");
}

#[test]
fn spectrum_of_example_fixture() {
    let o = wbound(&["spectrum", "fixtures/example_11_3_6.gen"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "A_0=1 A_6=6 A_8=1\n");
    let o = wbound(&[
        "spectrum",
        "fixtures/example_11_3_6.gen",
        "--engine",
        "generic",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["spectrum"], serde_json::json!({"0": 1, "6": 6, "8": 1}));
    assert_eq!(v["params"]["d"], 6);
}

#[test]
fn spectrum_engine_errors_are_usage_errors() {
    let o = wbound(&[
        "spectrum",
        "fixtures/hamming_13_10_3_ternary.gen",
        "--engine",
        "binary-gray",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = wbound(&[
        "spectrum",
        "fixtures/example_11_3_6.gen",
        "--engine",
        "nope",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--engine"));
}

#[test]
fn enumeration_limit_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_wbound"))
        .args(["spectrum", "fixtures/rm_1_4.gen"])
        .current_dir(root())
        .env("WBOUND_ENUM_LIMIT", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = wbound(&["spectrum", "fixtures/rm_1_4.gen", "--limit", "32"]);
    assert_eq!(stdout(&o), "A_0=1 A_8=30 A_16=1\n");
}

#[test]
fn residual_by_weight_and_index() {
    let o = wbound(&["residual", "fixtures/example_11_3_6.gen", "--weight", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("residual  [5,2,3]_2"), "{out}");
    assert!(out.contains("message   0 0 1"), "{out}");
    let o = wbound(&[
        "residual",
        "fixtures/example_11_3_6.gen",
        "--weight",
        "8",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(
        v["residual"],
        serde_json::json!({"n": 3, "k": 2, "d": 2, "q": 2})
    );
    let o = wbound(&[
        "residual",
        "fixtures/example_11_3_6.gen",
        "--weight",
        "6",
        "--index",
        "6",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn audit_fixtures_are_sound() {
    for f in [
        "example_11_3_6",
        "rm_1_4",
        "hamming_13_10_3_ternary",
        "ratio_code_4",
        "cyclic_15_10_4",
    ] {
        let o = wbound(&["audit", &format!("fixtures/{f}.gen")]);
        assert_eq!(o.status.code(), Some(0), "{f}");
        assert!(stdout(&o).ends_with("status: sound\n"));
    }
}

#[test]
fn bounds_exit_status() {
    let o = wbound(&[
        "bounds", "--n", "15", "--k", "5", "--d", "7", "--q", "2", "--w", "7",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("residual-griesmer: 15 >= 15 holds (tight)"));
    // No binary [3,2,3] code: distance ratio fails.
    let o = wbound(&["bounds", "--n", "3", "--k", "2", "--d", "3", "--q", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("VIOLATED"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["tables", "--which", "4"],
        vec!["exclude", "--n", "11", "--k", "3", "--d", "6"],
        vec![
            "exclude", "--n", "11", "--k", "3", "--d", "6", "--q", "2", "--method", "bogus",
        ],
        vec!["exclude", "--n", "2", "--k", "3", "--d", "6", "--q", "2"],
        vec!["spectrum", "fixtures/missing.gen"],
        vec!["selftest", "--trials", "0"],
        vec!["frobnicate"],
    ] {
        assert_eq!(wbound(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn selftest_is_deterministic() {
    let a = wbound(&["selftest", "--trials", "25", "--seed", "7"]);
    let b = wbound(&["selftest", "--trials", "25", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).ends_with("status: PASS\n"));
}
