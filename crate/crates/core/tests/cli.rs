use std::path::PathBuf;
use std::process::{Command, Output};

use matroid_split::catalog::{self, CatalogValue, NAMES};
use matroid_split::{BinaryMatroid, Multigraph};

fn msplit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_msplit")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("msplit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn export_round_trips_every_entry() {
    for name in NAMES {
        let out = msplit(&["export", name]);
        assert_eq!(out.status.code(), Some(0), "{name}");
        let text = stdout(&out);
        match catalog::get(name).unwrap().value {
            CatalogValue::Matroid(m) => assert_eq!(BinaryMatroid::parse_text(&text).unwrap(), m, "{name}"),
            CatalogValue::Graph(g) => assert_eq!(Multigraph::parse_text(&text).unwrap(), g, "{name}"),
        }
    }
}

#[test]
fn exported_files_load_like_names() {
    let path = scratch("g1.txt", &stdout(&msplit(&["export", "G1"])));
    let by_file = msplit(&["--json", "classify", path.to_str().unwrap()]);
    let by_name = msplit(&["--json", "classify", "G1"]);
    assert_eq!(by_file.status.code(), Some(0));
    assert_eq!(stdout(&by_file), stdout(&by_name));
}

#[test]
fn has_minor_json_witness() {
    let out = msplit(&["--json", "has-minor", "R10", "G1"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let delete = v["delete"].as_array().unwrap();
    let contract = v["contract"].as_array().unwrap();
    assert_eq!(delete.len() + contract.len(), 2);
    assert_eq!(v["bijection"].as_object().unwrap().len(), 8);

    let none = msplit(&["--json", "has-minor", "K33", "F7"]);
    assert_eq!(none.status.code(), Some(1));
    assert_eq!(stdout(&none).trim(), "null");
}

#[test]
fn split_r10_has_six_rows() {
    let out = msplit(&["split", "R10", "1", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("6 10"));
    let m = BinaryMatroid::parse_text(&text).unwrap();
    assert_eq!(m.rank(), 6);
}

#[test]
fn exit_codes_follow_verdicts() {
    assert_eq!(msplit(&["decide", "--case", "regular-graphic", "R10"]).status.code(), Some(1));
    assert_eq!(msplit(&["decide", "--case", "graphic-graphic", "K4"]).status.code(), Some(0));
    assert_eq!(msplit(&["decide", "--case", "graphic-graphic", "K4", "--oracle"]).status.code(), Some(0));
    assert_eq!(msplit(&["has-minor", "K5", "K4"]).status.code(), Some(0));
}

#[test]
fn input_errors_exit_with_two() {
    for args in [
        &["export", "nope"][..],
        &["classify", "/nonexistent/matrix.txt"],
        &["split", "R10", "1", "1"],
        &["split", "R10", "1", "99"],
        &["decide", "--case", "graphic-graphic", "F7"],
        &["split-graph", "R10", "1", "2"],
    ] {
        let out = msplit(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"), "{args:?}");
    }
    let garbage = scratch("bad.txt", "2 2\n1x\n01\n");
    assert_eq!(msplit(&["classify", garbage.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(msplit(&["decide", "--case", "bogus", "K4"]).status.code(), Some(2));
}

#[test]
fn split_graph_detaches_pair() {
    let out = msplit(&["split-graph", "K4", "01", "02"]);
    assert_eq!(out.status.code(), Some(0));
    let g = Multigraph::parse_text(&stdout(&out)).unwrap();
    assert_eq!(g.vertex_count(), 5);
    assert_eq!(g.degree(4), 2);
}

#[test]
fn json_output_is_deterministic() {
    for args in [&["--json", "classify", "R10"][..], &["--json", "decide", "--case", "regular-cographic", "K5"], &["--json", "has-minor", "MA1", "R10"]] {
        assert_eq!(stdout(&msplit(args)), stdout(&msplit(args)), "{args:?}");
    }
}

#[test]
fn verify_paper_reports_each_selected_criterion() {
    let out = msplit(&["--json", "verify-paper", "--only", "1,2,3"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let ids: Vec<u64> = v.as_array().unwrap().iter().map(|r| r["id"].as_u64().unwrap()).collect();
    assert_eq!(ids, [1, 2, 3]);
    assert!(v.as_array().unwrap().iter().all(|r| r["passed"] == true));
}
