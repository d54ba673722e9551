use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn expcube(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_expcube")).args(args).current_dir(dir).output().unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("expcube-cli-{name}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

const ROOT: &str = r#"{"instance":"v","elements":[[["",""]]]}"#;
const SQUARE: &str =
    r#"{"instance":"v","base":[[["","0"]],[["","10"]],[["","11"]]],"active":[[["","0"]],[["","10"]]]}"#;

#[test]
fn bfs_writes_a_two_node_dot_graph() {
    let dir = scratch("bfs");
    std::fs::write(dir.join("root.json"), ROOT).unwrap();
    let out = expcube(&["bfs", "root.json", "--radius", "1", "--dot", "out.dot", "--json", "out.json"], &dir);
    assert_eq!(out.status.code(), Some(0));
    let dot = std::fs::read_to_string(dir.join("out.dot")).unwrap();
    assert_eq!(dot.matches("[label=").count(), 2);
    assert_eq!(dot.matches(" -- ").count(), 1);
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(dir.join("out.json")).unwrap()).unwrap();
    assert_eq!(json["heights"], serde_json::json!([1, 2]));

    let capped = expcube(&["bfs", "root.json", "--radius", "4", "--cap", "3"], &dir);
    assert_eq!(capped.status.code(), Some(3));
}

#[test]
fn intersect_square_with_itself() {
    let dir = scratch("intersect");
    std::fs::write(dir.join("sq.json"), SQUARE).unwrap();
    let out = expcube(&["intersect", "sq.json", "sq.json", "--verify-brute"], &dir);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let square: serde_json::Value = serde_json::from_str(SQUARE).unwrap();
    assert_eq!(json["intersection"], square);
    assert_eq!(json["vertices"].as_array().unwrap().len(), 4);
    assert_eq!(json["brute_force_agrees"], true);
}

#[test]
fn verify_all_passes() {
    let out = expcube(&["verify", "all", "--seed", "7", "--samples", "200"], Path::new("."));
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_requires_a_seed() {
    let out = expcube(&["verify", "all"], Path::new("."));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_input_exits_with_two() {
    let dir = scratch("bad");
    std::fs::write(dir.join("overlap.json"), r#"{"instance":"v","elements":[[["","0"]],[["","01"]]]}"#).unwrap();
    std::fs::write(dir.join("partial.json"), r#"{"instance":"v","elements":[[["","0"]]]}"#).unwrap();
    std::fs::write(dir.join("garbage.json"), "{").unwrap();
    for file in ["overlap.json", "partial.json", "garbage.json", "missing.json"] {
        assert_eq!(expcube(&["neighbors", file], &dir).status.code(), Some(2), "{file}");
    }
}

#[test]
fn canon_link_stabilizer_join_act() {
    let dir = scratch("misc");
    std::fs::write(dir.join("raw.json"), r#"{"domain":"1","map":"10->01, 11->00"}"#).unwrap();
    let out = expcube(&["canon", "--instance", "v", "raw.json"], &dir);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), r#"[["0","01"],["1","00"]]"#);

    let halves = r#"{"instance":"v","elements":[[["","0"]],[["","1"]]]}"#;
    std::fs::write(dir.join("halves.json"), halves).unwrap();
    let out = expcube(&["link", "halves.json", "--check-flag", "--max-clique", "4"], &dir);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["nodes"].as_array().unwrap().len(), 4);
    assert_eq!(json["edges"].as_array().unwrap().len(), 1);
    assert_eq!(json["flag"]["passed"], true);

    let out = expcube(&["stabilizer", "halves.json"], &dir);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["order"], 2);

    std::fs::write(dir.join("root.json"), ROOT).unwrap();
    let out = expcube(&["join", "root.json", "halves.json"], &dir);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["join"], serde_json::from_str::<serde_json::Value>(halves).unwrap());
    assert_eq!(json["from_first"].as_array().unwrap().len(), 1);

    std::fs::write(dir.join("swap.json"), r#"{"instance":"v","element":[["0","1"],["1","0"]]}"#).unwrap();
    let out = expcube(&["act", "swap.json", "halves.json"], &dir);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json, serde_json::from_str::<serde_json::Value>(halves).unwrap());

    let h = r#"{"instance":"houghton","n":2,"elements":[{"branch":1,"tail":1},{"branch":2,"tail":1}]}"#;
    std::fs::write(dir.join("h.json"), h).unwrap();
    let out = expcube(&["neighbors", "h.json"], &dir);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["degree"], 2);
    let out = expcube(&["act", "swap.json", "h.json"], &dir);
    assert_eq!(out.status.code(), Some(2));
}
