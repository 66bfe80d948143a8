// SPDX-License-Identifier: Apache-2.0

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn pxk(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pxk"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(stdout(o).trim()).unwrap()
}

const S4: &str = "CF\n";

#[test]
fn compute_on_the_four_vertex_star() {
    let o = pxk(&["compute", "--k", "3", "--format", "json"], S4);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let cert = json(&o);
    assert_eq!(cert["value"], 3);
    assert_eq!(cert["schema_version"], 1);
    assert_eq!(cert["lower_evidence"]["bound"]["provenance"], "bridge-b");
}

#[test]
fn verify_round_trip_and_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.json");
    // S_5 plus an edge: its value is only reached through an exhausted palette.
    let g = stdout(&pxk(&["construct", "--family", "star-plus", "--n", "5"], ""));
    let o = pxk(&["compute", "--format", "json"], &g);
    std::fs::write(&path, stdout(&o)).unwrap();
    let p = path.to_str().unwrap();
    let ok = pxk(&["verify", "--certificate", p], "");
    assert_eq!(ok.status.code(), Some(0), "{}", stderr(&ok));
    assert!(stdout(&ok).starts_with("valid"));

    let mut cert = json(&o);
    // Edges 2 and 3 are bridges at the hub.
    cert["coloring"][3] = cert["coloring"][2].clone();
    std::fs::write(&path, cert.to_string()).unwrap();
    let bad = pxk(&["verify", "--certificate", p], "");
    assert_eq!(bad.status.code(), Some(1));
    assert!(stderr(&bad).contains("S = 0,3,4"), "{}", stderr(&bad));

    let mut cert = json(&o);
    cert["lower_evidence"]["exhausted"][0]["colorings_examined"] = 1.into();
    std::fs::write(&path, cert.to_string()).unwrap();
    let skipped = pxk(&["verify", "--certificate", p, "--skip-exhaustion"], "");
    assert_eq!(skipped.status.code(), Some(0));
    let full = pxk(&["verify", "--certificate", p], "");
    assert_eq!(full.status.code(), Some(1));
    assert!(stderr(&full).contains("exhaustion"));
}

#[test]
fn independence_tree_pipeline() {
    let o = pxk(&["construct", "--family", "independence-tree", "--a", "2", "--b", "5"], "");
    assert_eq!(o.status.code(), Some(0));
    let g = stdout(&o);
    let px = json(&pxk(&["compute", "--k", "3", "--format", "json"], &g));
    let rx = json(&pxk(&["rainbow", "--k", "3", "--format", "json"], &g));
    assert_eq!((px["value"].as_u64(), rx["value"].as_u64()), (Some(2), Some(5)));
    assert_eq!(rx["index"], "rainbow");
}

#[test]
fn k_ranges_expand_per_graph() {
    let o = pxk(&["compute", "--k", "3..n"], "CF\nBw\n");
    let lines: Vec<_> = stdout(&o).lines().map(str::to_owned).collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with("CF k=3 px=3"));
    assert!(lines[1].starts_with("CF k=4 px=3"));
    assert!(lines[2].starts_with("Bw k=3 px=2"));
}

#[test]
fn exit_codes() {
    // size cap
    let star9 = stdout(&pxk(&["construct", "--family", "star", "--n", "9"], ""));
    let o = pxk(&["compute"], &star9);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).is_empty());
    assert!(stderr(&o).contains("n <= 8"));
    let o = pxk(&["compute", "--force-heuristic-bounds"], &star9);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("bracket [8, 8] (bounds only)"));
    // usage
    assert_eq!(pxk(&["compute", "--k", "1"], S4).status.code(), Some(2));
    assert_eq!(pxk(&["construct", "--family", "broom"], "").status.code(), Some(2));
    assert_eq!(pxk(&["compute", "--k", "5"], S4).status.code(), Some(2));
    // invalid input goes to stderr only
    let o = pxk(&["compute"], "C\n");
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).is_empty());
    assert!(stderr(&o).contains("line 1"));
    let o = pxk(&["compute"], "C`\n");
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("disconnected"));
}

#[test]
fn output_is_deterministic_across_worker_counts() {
    let text =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../core/tests/fixtures/connected5.g6")).unwrap();
    let a = pxk(&["compute", "--k", "3..n", "--format", "json", "--workers", "1"], &text);
    let b = pxk(&["compute", "--k", "3..n", "--format", "json", "--workers", "4"], &text);
    let c = pxk(&["compute", "--k", "3..n", "--format", "json"], &text);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    let s1 = pxk(&["survey", "--k", "3..n", "--workers", "3"], &text);
    let s2 = pxk(&["survey", "--k", "3..n", "--workers", "1"], &text);
    assert_eq!(s1.stdout, s2.stdout);
}

#[test]
fn color_strategies() {
    let g = stdout(&pxk(&["construct", "--family", "star-plus-plus", "--n", "6", "--variant", "sharing"], ""));
    let o = pxk(&["color", "--strategy", "snpp", "--k", "3..n"], &g);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("used=3"));
    assert!(stdout(&o).contains("k=6:valid"));

    let o = pxk(
        &["color", "--strategy", "unicyclic", "--format", "json"],
        &stdout(&pxk(&["construct", "--family", "star-plus", "--n", "5"], "")),
    );
    let v = json(&o);
    assert_eq!(v["claimed_value"], 3);
    assert_eq!(v["case"], "adjacent-pair");

    let o = pxk(&["color", "--strategy", "traceable"], S4);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("Hamilton"));
    let o = pxk(&["color", "--strategy", "tree", "--k", "2..n"], S4);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn classify_and_bounds() {
    let o = pxk(&["classify", "--format", "json"], &stdout(&pxk(&["construct", "--family", "star", "--n", "7"], "")));
    let v = json(&o);
    assert_eq!(v["classification"]["verdict"], "star");
    assert_eq!(v["classification"]["px"]["exact"], 6);
    let o = pxk(&["bounds", "--format", "json"], &stdout(&pxk(&["construct", "--family", "complete", "--n", "5"], "")));
    let v = json(&o);
    assert_eq!(v["bounds"]["best_upper"], 2);
    assert_eq!(v["bounds"]["best_lower"], 2);
}

#[test]
fn survey_resume_appends() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.jsonl");
    let o = out.to_str().unwrap();
    let text =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../core/tests/fixtures/connected4.g6")).unwrap();
    let first: String = text.lines().take(3).map(|l| format!("{l}\n")).collect();
    assert_eq!(pxk(&["survey", "--format", "json", "--output", o], &first).status.code(), Some(0));
    let partial = std::fs::read_to_string(&out).unwrap();
    assert_eq!(partial.lines().count(), 3);
    let r = pxk(&["survey", "--format", "json", "--output", o, "--resume"], &text);
    assert_eq!(r.status.code(), Some(0), "{}", stderr(&r));
    let full = std::fs::read_to_string(&out).unwrap();
    let lines: Vec<&str> = full.lines().collect();
    assert_eq!(lines.len(), 7);
    assert!(full.starts_with(partial.lines().next().unwrap()));
    let summary: serde_json::Value = serde_json::from_str(lines[6]).unwrap();
    assert_eq!(summary["summary"]["graphs"], 6);
    assert_eq!(summary["summary"]["failed_graphs"], 0);
    assert_eq!(summary["summary"]["px_histogram"]["k=3 px=3"], 1);
    // same bytes as a fresh run
    let fresh = pxk(&["survey", "--format", "json"], &text);
    assert_eq!(stdout(&fresh), full);
    assert_eq!(pxk(&["survey", "--resume"], &text).status.code(), Some(2));
}
