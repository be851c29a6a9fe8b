use std::process::{Command, Output};

fn greg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_greg"))
        .args(args)
        .env_remove("GREG_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = greg(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn polys_text_descending() {
    assert_eq!(stdout(&["polys", "G", "3", "text"]), "1\nx+2\n3x^2+10x+9\n");
    assert_eq!(stdout(&["polys", "P", "2"]), "1\n-x-2\n");
}

#[test]
fn polys_bfile_flattens_ascending() {
    assert_eq!(
        stdout(&["polys", "H-shift", "4", "bfile"]),
        "1 1\n2 1\n3 2\n4 1\n5 6\n6 7\n7 3\n"
    );
}

#[test]
fn polys_empty_table() {
    assert_eq!(stdout(&["polys", "G", "0", "text"]), "");
}

#[test]
fn polys_json_round_trips() {
    let text = stdout(&["polys", "F", "4", "--format", "json"]);
    let rows: Vec<Vec<String>> = serde_json::from_str(&text).unwrap();
    assert_eq!(rows[3], ["256", "565", "420", "105"]);
}

#[test]
fn q_triangle_rows() {
    let text = stdout(&["polys", "Q", "3", "text"]);
    assert_eq!(text.lines().nth(2), Some("x^2+3x+2 ; 3x+4 ; 3"));
    let csv = stdout(&["polys", "Q", "2", "csv"]);
    assert_eq!(
        csv,
        "n,k,power,coefficient\n1,0,0,1\n2,0,0,1\n2,0,1,1\n2,1,0,1\n"
    );
}

#[test]
fn unknown_family_is_a_usage_error() {
    let out = greg(&["polys", "Z", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown family"));
}

#[test]
fn tree_censuses() {
    assert_eq!(
        stdout(&["trees", "unrooted", "3", "census-unl", "text"]),
        "x+3\n"
    );
    assert_eq!(
        stdout(&["trees", "rooted", "2", "census-imp", "text"]),
        "x+1\n"
    );
    assert_eq!(
        stdout(&["trees", "bi-rooted", "1", "census-unl"]),
        "x^3+3x^2+3x+1\n"
    );
}

#[test]
fn tree_listing_json() {
    let text = stdout(&["trees", "rooted", "2", "list", "json"]);
    let trees: Vec<serde_json::Value> = serde_json::from_str(&text).unwrap();
    assert_eq!(trees.len(), 3);
}

#[test]
fn tree_listing_text_parses_back() {
    let text = stdout(&["trees", "unrooted", "3", "list"]);
    let blocks: Vec<&str> = text.split("\n\n").collect();
    assert_eq!(blocks.len(), 4);
    for b in blocks {
        greg_core::trees::GregTree::from_text(b).unwrap();
    }
}

#[test]
fn over_cap_is_rejected() {
    let out = greg(&["trees", "unrooted", "7", "list"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeds the cap"));
}

#[test]
fn series_coefficients() {
    assert_eq!(stdout(&["series", "T0", "--order", "2"]), "0 0\n1 1\n2 2\n");
    assert_eq!(
        stdout(&["series", "W", "--order", "3", "--deriv", "1"]),
        "0 1\n1 -2\n2 9/2\n3 -32/3\n"
    );
}

#[test]
fn check_examples() {
    let text = stdout(&["check", "egf", "--x", "1", "--n-max", "5"]);
    assert!(text.starts_with("PASS egf_theorem"), "{text}");
    let text = stdout(&["check", "halfplane", "--samples", "1000", "--seed", "42"]);
    assert!(text.contains("1000/1000"), "{text}");
    let text = stdout(&["check", "egf", "--x=-1/2", "--x", "1/3"]);
    assert!(text.starts_with("PASS"), "{text}");
}

#[test]
fn check_unknown_name() {
    let out = greg(&["check", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_minimal_profile_from_env() {
    let out = Command::new(env!("CARGO_BIN_EXE_greg"))
        .args(["check", "all", "--format", "json"])
        .env("GREG_BUDGET", "minimal")
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["summary"]["failed"], 0);
    assert_eq!(v["budget"]["unrooted_n_max"], 1);
}

#[test]
fn output_is_byte_identical_across_runs_and_workers() {
    let args = |jobs: &'static str| {
        vec![
            "--jobs",
            jobs,
            "--format",
            "json",
            "check",
            "imp",
            "propgen",
            "beta",
            "halfplane",
            "--samples",
            "200",
        ]
    };
    let a = greg(&args("1")).stdout;
    let b = greg(&args("4")).stdout;
    let c = greg(&args("4")).stdout;
    assert!(!a.is_empty());
    assert_eq!(a, b);
    assert_eq!(b, c);
    let t1 = greg(&["--jobs", "1", "trees", "rooted", "4", "list", "json"]).stdout;
    let t4 = greg(&["--jobs", "4", "trees", "rooted", "4", "list", "json"]).stdout;
    assert_eq!(t1, t4);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("greg-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g.txt");
    let out = greg(&["--out", path.to_str().unwrap(), "polys", "G", "2"]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "1\nx+2\n");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn wfun_values() {
    let text = stdout(&["wfun", "1", "--deriv", "2"]);
    assert!(text.starts_with("W = 0.567143290409783"), "{text}");
    assert_eq!(text.lines().count(), 5);
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["wfun", "0", "--im", "1", "--format", "json"])).unwrap();
    assert!(v["w"][1].as_f64().unwrap() > 0.0);
    assert_eq!(
        greg(&["wfun", "0", "--im", "1", "--deriv", "1"])
            .status
            .code(),
        Some(2)
    );
}
