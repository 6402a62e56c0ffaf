use std::io::Write;
use std::process::{Command, Output, Stdio};

fn locolor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_locolor")).args(args).env_remove("LOCOLOR_MAX_N").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn chi_of_t0_is_four() {
    let o = locolor(&["chi", "@catalog:T0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("4"));
}

#[test]
fn missing_hom_is_an_answer_not_a_failure() {
    let o = locolor(&["hom", "@catalog:H0", "@catalog:T0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "none");
    let o = locolor(&["hom", "@catalog:T0", "@catalog:H2plus"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).split_whitespace().count(), 10);
    let o = locolor(&["hom", "@catalog:H1plusplus", "@catalog:H2plus", "--injective"]);
    assert_eq!(stdout(&o).trim(), "none");
    let o = locolor(&["hom", "@catalog:H0", "@catalog:H1", "--injective"]);
    assert_eq!(stdout(&o).split_whitespace().count(), 7);
}

#[test]
fn diagram_report_has_the_full_matrix() {
    let o = locolor(&["verify", "--filter", "diagram.*", "--report", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let results = report["results"].as_array().unwrap();
    assert!(results.iter().all(|r| r["verdict"] == "Pass"));
    for r in results {
        for key in ["id", "citation", "verdict", "evidence", "millis"] {
            assert!(r.get(key).is_some(), "{key}");
        }
    }
    let matrix = results.iter().find(|r| r["id"] == "diagram.matrix").unwrap()["evidence"]["matrix"].as_array().unwrap().clone();
    assert_eq!(matrix.len(), 49);
    assert_eq!(matrix.iter().filter(|c| c["hom"] == true).count(), matrix.iter().filter(|c| c["expected"] == true).count());
}

#[test]
fn unknown_filter_and_bad_usage_exit_two() {
    let o = locolor(&["verify", "--filter", "nonexistent.*"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("no claim matches"));
    assert_eq!(locolor(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(locolor(&["chi"]).status.code(), Some(2));
    assert_eq!(locolor(&["chi", "@catalog:nope"]).status.code(), Some(2));
    assert_eq!(locolor(&["pair", "0", "0", "2", "@catalog:H0"]).status.code(), Some(2));
    assert_eq!(locolor(&["--help"]).status.code(), Some(0));
}

#[test]
fn text_report() {
    let o = locolor(&["verify", "--filter", "catalog.*", "--seed", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().filter(|l| l.starts_with("PASS")).count() >= 6);
    assert!(text.contains("0 fail"));
}

#[test]
fn files_and_stdin() {
    let dir = tempfile::tempdir().unwrap();
    let pete = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/petersen.txt");
    let o = locolor(&["chi", pete]);
    assert_eq!(stdout(&o).lines().next(), Some("3"));
    let o = locolor(&["clique", pete]);
    assert_eq!(stdout(&o).lines().next(), Some("2"));

    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "3\n0 1\n1 5\n").unwrap();
    let o = locolor(&["chi", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("byte 8"), "{}", stderr(&o));

    let g6 = dir.path().join("k4.g6");
    std::fs::write(&g6, "C~\n").unwrap();
    assert_eq!(stdout(&locolor(&["chi", g6.to_str().unwrap()])).lines().next(), Some("4"));

    let mut child = Command::new(env!("CARGO_BIN_EXE_locolor"))
        .args(["local", "1", "2", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"GhCKN{\n").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("no\nviolating clique: 7"));
}

#[test]
fn vertex_limit_from_environment() {
    let c100 = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/c100.g6");
    let o = locolor(&["chi", c100]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("vertex limit"));
    let o = Command::new(env!("CARGO_BIN_EXE_locolor")).args(["chi", c100]).env("LOCOLOR_MAX_N", "128").output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("2"));
    let o = Command::new(env!("CARGO_BIN_EXE_locolor")).args(["chi", c100]).env("LOCOLOR_MAX_N", "1000").output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn local_and_pair_queries() {
    assert_eq!(stdout(&locolor(&["local", "1", "2", "@catalog:C7bar"])).trim(), "yes");
    assert_eq!(stdout(&locolor(&["local", "1", "2", "W7"])).lines().next(), Some("no"));
    assert_eq!(stdout(&locolor(&["local", "2", "1", "W7"])).trim(), "yes");
    assert!(stdout(&locolor(&["pair", "0", "3", "2", "@catalog:H0"])).starts_with("dense"));
    assert!(stdout(&locolor(&["pair", "1", "6", "2", "@catalog:H0"])).starts_with("sparse"));
    assert_eq!(stdout(&locolor(&["pair", "0", "1", "2", "@catalog:H0"])).trim(), "adjacent");
}

#[test]
fn catalog_and_export() {
    let list = stdout(&locolor(&["catalog", "list"]));
    assert_eq!(list.lines().count(), 8);
    assert!(list.contains("FzEKW"));
    let show = stdout(&locolor(&["catalog", "show", "T0"]));
    assert!(show.contains("vertices: 10"));
    assert!(show.contains("graph6: IhCKKA~~O"));
    assert_eq!(stdout(&locolor(&["export", "H0", "--format", "graph6"])), "FzEKW\n");
    let adj = stdout(&locolor(&["export", "@catalog:H0", "--format", "adjacency"]));
    assert_eq!(adj.lines().count(), 12);
    let dot = stdout(&locolor(&["export", "C7bar", "--format", "dot"]));
    assert!(dot.starts_with("graph C7bar {"));
    assert_eq!(dot.matches(" -- ").count(), 14);
    assert_eq!(locolor(&["export", "H0", "--format", "png"]).status.code(), Some(2));
}

#[test]
fn enumeration_limits() {
    let o = locolor(&["enumerate", "smallest", "--max-n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("n=6 graphs=32768"));
    assert!(out.lines().filter(|l| l.starts_with("n=")).all(|l| l.ends_with("witnesses=0")));
    assert_eq!(locolor(&["enumerate", "smallest", "--max-n", "8"]).status.code(), Some(2));
}
