use std::process::{Command, Output};

fn taumute(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_taumute")).args(args).env_remove("TAUMUTE_CAP").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn alg_info_presets() {
    let o = taumute(&["alg", "info", "a3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("dim 6\n"));
    assert!(stdout(&taumute(&["alg", "info", "a3-mod-ba"])).contains("dim 5\n"));
    assert_eq!(taumute(&["alg", "info", "nope"]).status.code(), Some(2));
}

#[test]
fn alg_info_file_errors() {
    let dir = std::env::temp_dir().join(format!("taumute-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let mixed = dir.join("mixed.json");
    std::fs::write(
        &mixed,
        r#"{"vertices": 3,
 "arrows": [{"name": "a", "from": 1, "to": 2}, {"name": "b", "from": 2, "to": 3}, {"name": "c", "from": 1, "to": 3}],
 "relations": [[{"coef": "1", "path": ["a", "b"]}, {"coef": "-1", "path": ["c"]}]]}"#,
    )
    .unwrap();
    let o = taumute(&["alg", "info", mixed.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("non-homogeneous relation"), "{}", stderr(&o));

    let broken = dir.join("broken.json");
    std::fs::write(&broken, "{\"vertices\": 2,\n \"arrows\": [\n").unwrap();
    let o = taumute(&["alg", "info", broken.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("parse error at line"), "{}", stderr(&o));

    let good = dir.join("good.json");
    std::fs::write(&good, r#"{"vertices": 2, "arrows": [{"name": "a", "from": 1, "to": 2}], "relations": []}"#)
        .unwrap();
    let o = taumute(&["alg", "info", good.to_str().unwrap()]);
    assert!(stdout(&o).contains("dim 3\n"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn enumerate_counts() {
    for (alg, nodes) in [("a3-mod-ba", 12), ("preproj:A2", 6), ("cyclic:3,3", 20)] {
        let o = taumute(&["enumerate", alg]);
        assert_eq!(o.status.code(), Some(0));
        let last = stdout(&o).lines().last().unwrap().to_string();
        assert!(last.starts_with(&format!("{nodes} nodes, ")), "{alg}: {last}");
    }
    let o = taumute(&["enumerate", "a3-mod-ba", "--cap", "4"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_taumute"))
        .args(["enumerate", "a3-mod-ba"])
        .env("TAUMUTE_CAP", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn exports_are_stable() {
    let a = taumute(&["enumerate", "a3-mod-ba", "--format", "dot"]);
    let b = taumute(&["enumerate", "a3-mod-ba", "--format", "dot"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("digraph poset {"));
    let j = taumute(&["enumerate", "preproj:A2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&j.stdout).unwrap();
    assert_eq!(v["nodes"].as_array().unwrap().len(), 6);
    assert_eq!(v["nodes"][0]["g_matrix"], serde_json::json!([[1, 0], [0, 1]]));
}

#[test]
fn worked_mutations() {
    let o = taumute(&["mutate", "a3-mod-ba", "--pair", "top", "--slot", "P2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("-> (P1+P3+S1, ∅)"));
    assert!(stdout(&o).contains("r = 1"));
    let o = taumute(&["mutate", "a3-mod-ba", "--pair", "top", "--slot", "P1"]);
    assert!(stdout(&o).contains("-> (P2+P3, {1})"));
    assert!(stdout(&o).contains("case A"));
    let o = taumute(&["mutate", "a3-mod-ba", "--pair", "P1+S1;3", "--slot", "3"]);
    assert!(stdout(&o).contains("case B via dagger: (S2'+P3', {1})"), "{}", stdout(&o));
    let o = taumute(&["mutate", "a3-mod-ba", "--pair", "P1+S2", "--slot", "P1"]);
    assert_eq!(o.status.code(), Some(2), "{}", stderr(&o));
}

#[test]
fn check_suites() {
    let o = taumute(&["check", "a3-mod-ba", "--suite", "all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = taumute(&["check", "preproj:A3", "--suite", "mizuno"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("24 nodes"));
    let o = taumute(&["check", "a3", "--suite", "tilting"]);
    assert!(stdout(&o).contains("5 tilting modules"));
    let o = taumute(&["check", "cyclic:3,3", "--suite", "adachi"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(taumute(&["check", "a3", "--suite", "adachi"]).status.code(), Some(2));
    assert_eq!(taumute(&["check", "kronecker", "--cap", "20"]).status.code(), Some(3));
}

#[test]
fn clusters() {
    assert!(stdout(&taumute(&["cluster", "a3"])).starts_with("14 clusters, 9 variables\n"));
    assert!(stdout(&taumute(&["cluster", "a2"])).starts_with("5 clusters, 5 variables\n"));
    let o = taumute(&["cluster", "kronecker", "--cap", "50"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).starts_with("truncated at cap 50"));
}
