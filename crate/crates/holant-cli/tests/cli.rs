use std::path::PathBuf;
use std::process::{Command, Output};

fn holant(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_holant")).args(args).output().expect("binary runs")
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name).display().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

/// A scratch file unique to this process and test.
fn scratch(tag: &str, body: &str) -> String {
    let p = std::env::temp_dir().join(format!("holant-cli-{}-{tag}", std::process::id()));
    std::fs::write(&p, body).unwrap();
    p.display().to_string()
}

#[test]
fn eval_double_edge() {
    let o = holant(&["eval", &data("double_edge.grid")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "2");
}

#[test]
fn gate_of_the_merge_grid_is_a_signature_file() {
    let o = holant(&["gate", &data("f6_merge.grid")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("signature gate arity 4\nentries lex\n"), "{out}");
    assert_eq!(out.lines().nth(2).unwrap(), "0 0 0 2 0 2 0 0");
}

#[test]
fn property_exit_codes() {
    assert_eq!(holant(&["check", "second-orth", "f8"]).status.code(), Some(0));
    assert_eq!(holant(&["check", "affine", &data("f6.sig")]).status.code(), Some(0));
    let o = holant(&["check", "affine", "h8"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("false"));
    assert_eq!(holant(&["check", "class", "eq2", "T"]).status.code(), Some(0));
}

#[test]
fn errors_exit_with_two() {
    let o = holant(&["check", "parity", "nosuch"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("nosuch"));
    assert_eq!(holant(&["check", "wobbly", "f6"]).status.code(), Some(2));
    assert_eq!(holant(&["merge", "f6", "1", "1", "eq2"]).status.code(), Some(2));
}

#[test]
fn malformed_files_report_file_and_line() {
    let sig = scratch("bad.sig", "signature x arity 2\nentries lex\n1 0\n0 zz\n");
    let o = holant(&["check", "parity", &sig]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains(&format!("{sig}:4:")), "{}", stderr(&o));

    let grid = scratch("bad.grid", "vertex a eq2\n# comment\nedge a.1 a.7\n");
    let o = holant(&["eval", &grid]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains(&format!("{grid}:3:")), "{}", stderr(&o));
}

#[test]
fn merge_and_transform_emit_parseable_signatures() {
    let o = holant(&["merge", "f6", "1", "2", "eq2"]);
    assert_eq!(o.status.code(), Some(0));
    let merged = scratch("merged.sig", &stdout(&o));
    let f = holant(&["factor", &merged]);
    assert_eq!(f.status.code(), Some(0));
    assert_eq!(stdout(&f).lines().filter(|l| l.starts_with('(')).count(), 2, "{}", stdout(&f));

    let o = holant(&["transform", "Z", "eq2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("signature "));
}

#[test]
fn classify_exit_codes() {
    let o = holant(&["classify", "eq2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("TRACTABLE"));
    let o = holant(&["classify", "g8", "f6hat"]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("NOT_CERTIFIED"));
}

#[test]
fn combinatorics_commands() {
    let o = holant(&["ktrip", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("K5: 10 tripartite 2-partitions"), "{}", stdout(&o));
    assert_eq!(holant(&["ktrip", "6"]).status.code(), Some(1));
    let o = holant(&["graph", "alpha", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("alpha(G6) = 4"));
}

#[test]
fn verify_paper_filters_claims() {
    assert_eq!(holant(&["verify-paper", "--claim", "tripartite"]).status.code(), Some(0));
    let o = holant(&["verify-paper", "--claim", "merge-f6"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL merge-f6"));
    assert_eq!(holant(&["verify-paper", "--claim", "zzz"]).status.code(), Some(2));
}
