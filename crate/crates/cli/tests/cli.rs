use std::process::{Command, Output};

use cjones::statesum::{colored_jones_unframed, ModelChoice};
use cjones::{BraidWord, LaurentQ};

fn cjones(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cjones")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn poly(o: &Output) -> LaurentQ {
    stdout(o).trim().parse().unwrap()
}

#[test]
fn negative_crossing_anchor() {
    let o = cjones(&["--braid", "-1", "--n", "2", "--model", "both"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "t^2");
}

#[test]
fn borromean_is_palindromic() {
    let o = cjones(&["--weaving", "3", "--n", "1", "--unframed"]);
    assert!(o.status.success());
    let p = poly(&o);
    assert!(p.is_palindromic());
    assert_eq!(p, colored_jones_unframed(&cjones::braid::weaving(3), 1, ModelChoice::RMatrix).unwrap());
}

#[test]
fn state_count_matches_slices() {
    // at n = 1 the base-color slices hold (n+1)(n+2)(n+3)/6 = 4 and n+1 = 2
    let o = cjones(&["--braid", "-1 -1 -1 -1 -1 -1", "--states", "count", "--n", "1", "--model", "gl"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "gl states: 6");
}

#[test]
fn state_dump_is_sorted() {
    let o = cjones(&["--preset", "hopf", "--states", "dump", "--n", "2", "--model", "gl"]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].contains("bases=[0]") && lines[2].contains("bases=[2]"));
}

#[test]
fn json_round_trip() {
    let o = cjones(&["--preset", "figure-eight", "--n", "2", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["braid"], "-1 2 -1 2");
    assert_eq!(v["strands"], 3);
    assert_eq!(v["writhe"], 0);
    assert_eq!(v["components"], 1);
    let terms: Vec<(i64, String)> = serde_json::from_value(v["unframed"]["terms"].clone()).unwrap();
    let from_json = LaurentQ::from_terms(terms.into_iter().map(|(k, c)| (k, c.parse::<i64>().unwrap())));
    let text = cjones(&["--preset", "figure-eight", "--n", "2", "--unframed"]);
    assert_eq!(from_json, poly(&text));
    let b = BraidWord::parse("-1 2 -1 2").unwrap();
    assert_eq!(from_json, colored_jones_unframed(&b, 2, ModelChoice::ArcGraph).unwrap());
}

#[test]
fn models_print_the_same() {
    for m in ["rmatrix", "gl", "both"] {
        let o = cjones(&["--preset", "link-5", "--n", "2", "--model", m]);
        assert!(o.status.success());
        assert_eq!(poly(&o), poly(&cjones(&["--preset", "link-5", "--n", "2"])));
    }
}

#[test]
fn sequential_and_threads() {
    let a = cjones(&["--preset", "w3-4", "--n", "2", "--sequential"]);
    let b = cjones(&["--preset", "w3-4", "--n", "2", "--threads", "3"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn explicit_strands_add_free_strands() {
    let o = cjones(&["--braid", "strands=3 1", "--n", "1"]);
    let p = cjones(&["--braid", "1", "--strands", "3", "--n", "1"]);
    assert_eq!(stdout(&o), stdout(&p));
    // t^(-3/4) times [2] = t^(1/2) + t^(-1/2) for the free strand
    assert_eq!(stdout(&o).trim(), "t^(-5/4) + t^(-1/4)");
}

#[test]
fn dump_diagram_writes_graph() {
    let dir = std::env::temp_dir().join(format!("cjones-graph-{}", std::process::id()));
    let path = dir.with_extension("dot");
    let o = cjones(&["--preset", "mixed-8", "--dump-diagram", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("number\tsigma\ttau"));
    let g = std::fs::read_to_string(&path).unwrap();
    assert!(g.starts_with("digraph"));
    let _ = std::fs::remove_file(path);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(cjones(&["--n", "1"]).status.code(), Some(2));
    assert_eq!(cjones(&["--braid", "1 x"]).status.code(), Some(2));
    assert_eq!(cjones(&["--braid", "1", "--n", "0"]).status.code(), Some(2));
    assert_eq!(cjones(&["--preset", "nope"]).status.code(), Some(2));
    assert_eq!(cjones(&["--verify", "nope"]).status.code(), Some(2));
    assert_eq!(cjones(&["--braid", "1", "--model", "other"]).status.code(), Some(2));
}

#[test]
fn verify_identity_passes() {
    let o = cjones(&["--verify", "identity"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().skip(1).all(|l| l.starts_with("PASS")));
}

#[test]
fn presets_are_listed() {
    let o = cjones(&["--list-presets"]);
    assert!(stdout(&o).lines().any(|l| l.starts_with("figure-eight\tstrands=3")));
}
