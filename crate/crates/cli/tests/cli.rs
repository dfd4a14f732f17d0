//! End-to-end tests of the nbgeom binary: exit codes, round-trips through
//! the file formats, and the SVG output.

use std::process::{Command, Output};

use nbgeom_cli::formats::{graph_from_map_json, read_config_json, read_graph_text, read_map_json};
use nbgeom_core::configs::{is_isomorphic, neighborhood_geometry};
use nbgeom_core::graphs::{cycle, generalized_petersen, graph_isomorphic};
use nbgeom_core::maps::{build_yp_map, underlying_graph};

fn nbgeom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nbgeom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = nbgeom(args);
    assert!(
        out.status.success(),
        "nbgeom {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(args: &[&str]) -> i32 {
    nbgeom(args).status.code().unwrap()
}

#[test]
fn exit_code_contract() {
    assert_eq!(exit_code(&["build", "nonesuch"]), 2);
    assert_eq!(exit_code(&["verify", "--suite", "nonesuch"]), 2);
    assert_eq!(exit_code(&["quotient", "klein-map", "ab"]), 2);
    assert_eq!(exit_code(&["quotient", "yp-map:3", "ba"]), 2);
    assert_eq!(exit_code(&["render", "--p", "4", "--q", "4"]), 2);
    assert_eq!(exit_code(&["render", "--p", "7", "--q", "3", "--depth", "9"]), 4);
    assert_eq!(exit_code(&["no-such-subcommand"]), 2);
    assert_eq!(exit_code(&["analyze", "/nonexistent/file.json"]), 3);
    let dir = std::env::temp_dir().join("nbgeom-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "not json").unwrap();
    assert_eq!(exit_code(&["analyze", bad.to_str().unwrap()]), 3);
}

#[test]
fn catalog_lists_the_named_objects() {
    let listing = stdout_of(&["catalog"]);
    for name in [
        "klein-map",
        "bring-map",
        "bolza-map",
        "yp-map:p",
        "petersen",
        "desargues-graph",
        "hoffman-singleton",
        "rook-3x3",
        "paley-13-cover",
    ] {
        assert!(listing.contains(name), "catalog is missing {name}");
    }
}

#[test]
fn graph_build_round_trip() {
    let text = stdout_of(&["build", "petersen"]);
    let g = read_graph_text(&text).unwrap();
    assert!(graph_isomorphic(&g, &generalized_petersen(5, 2).unwrap()).is_some());
}

#[test]
fn map_build_round_trip() {
    let text = stdout_of(&["build", "yp-map:3"]);
    let mj = read_map_json(&text).unwrap();
    assert_eq!(
        (mj.vertices, mj.edges, mj.faces, mj.genus),
        (18, 36, 12, 4)
    );
    let rebuilt = graph_from_map_json(&mj).unwrap();
    let reference = underlying_graph(&build_yp_map(3).unwrap());
    assert!(graph_isomorphic(&rebuilt, &reference).is_some());
}

#[test]
fn geometry_build_round_trip() {
    let text = stdout_of(&["build", "yp-map:3", "--format", "geometry"]);
    let c = read_config_json(&text).unwrap();
    let reference =
        neighborhood_geometry(&underlying_graph(&build_yp_map(3).unwrap())).unwrap();
    assert!(is_isomorphic(&c, &reference).is_some());
}

#[test]
fn quotient_emits_the_cycle_graph() {
    for element in ["ab", "ab-inverse"] {
        let text = stdout_of(&["quotient", "yp-map:3", element]);
        let g = read_graph_text(&text).unwrap();
        assert!(graph_isomorphic(&g, &cycle(6).unwrap()).is_some());
    }
}

#[test]
fn analyze_reports_the_pentagon_summary() {
    let dir = std::env::temp_dir().join("nbgeom-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("pentagon.json");
    std::fs::write(
        &path,
        r#"{"points": 5, "blocks": [[1,4],[0,2],[1,3],[2,4],[0,3]]}"#,
    )
    .unwrap();
    let out = stdout_of(&["analyze", path.to_str().unwrap()]);
    let summary: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(summary["v"], 5);
    assert_eq!(summary["r"], 2);
    assert_eq!(summary["linear"], true);
    assert_eq!(summary["pentagonal"]["holds"], true);
}

#[test]
fn render_emits_well_formed_svg() {
    let svg = stdout_of(&["render", "--p", "7", "--q", "3", "--depth", "2", "--seed", "11"]);
    let doc = roxmltree::Document::parse(&svg).unwrap();
    let root = doc.root_element();
    assert_eq!(root.tag_name().name(), "svg");
    let paths = doc.descendants().filter(|n| n.has_tag_name("path")).count();
    let circles = doc
        .descendants()
        .filter(|n| n.has_tag_name("circle"))
        .count();
    assert_eq!(paths, 42);
    assert_eq!(circles, 8 + 1);
}

#[test]
fn verify_suite_reports_a_table_and_json() {
    let out = stdout_of(&["verify", "--suite", "bolza"]);
    assert!(out.contains("5/5 claims pass"));
    let json_start = out.find("{\n").unwrap();
    let report: serde_json::Value = serde_json::from_str(&out[json_start..]).unwrap();
    assert_eq!(report["pass"], true);
    assert_eq!(report["claims"].as_array().unwrap().len(), 5);
    assert_eq!(report["claims"][0]["id"], "3.01-bolza-counts");
}
