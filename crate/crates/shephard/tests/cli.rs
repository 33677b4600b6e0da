use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn shephard(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shephard"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name]
        .iter()
        .collect();
    p.display().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON on stdout")
}

#[test]
fn classify_triple_text_and_json() {
    let o = shephard(&["classify", "3", "6", "3"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("regime: Euclidean"));
    let o = shephard(&["--json", "classify", "2", "4", "3"]);
    let j = json(&o);
    assert_eq!(j["schemaVersion"], 1);
    assert_eq!(j["finite"]["applies"], "yes");
}

#[test]
fn word_queries() {
    let o = shephard(&[
        "word",
        "3",
        "6",
        "3",
        "--trivial",
        "s t s t s t t^-1 s^-1 t^-1 s^-1 t^-1 s^-1",
    ]);
    assert_eq!(stdout(&o).trim(), "true");
    let o = shephard(&[
        "word",
        "3",
        "6",
        "3",
        "--equal",
        "s t s t s t",
        "t s t s t s",
    ]);
    assert_eq!(stdout(&o).trim(), "true");
    let o = shephard(&["word", "3", "6", "3", "--order", "s t"]);
    assert_eq!(stdout(&o).trim(), "infinite");
    let o = shephard(&["word", "3", "6", "3", "--order", "t s t^-1"]);
    assert_eq!(stdout(&o).trim(), "3");
    let o = shephard(&["--json", "word", "4", "4", "4", "--normalform", "s t s t"]);
    let j = json(&o);
    assert_eq!(j["result"]["zExponent"], 1);
}

#[test]
fn sampled_oracle_sweep_is_seeded() {
    let a = shephard(&[
        "--json", "--seed", "3", "word", "4", "6", "4", "--sample", "30",
    ]);
    let b = shephard(&[
        "--json", "--seed", "3", "word", "4", "6", "4", "--sample", "30",
    ]);
    assert_eq!(a.stdout, b.stdout);
    let j = json(&a);
    assert_eq!(j["agree"], 30);
}

#[test]
fn girth_certificate_message() {
    let o = shephard(&["girth", "3", "6", "3"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("no trivial word below 12; bound 2q = 12 certified"));
}

#[test]
fn exit_codes() {
    // malformed input
    assert_eq!(
        shephard(&["classify", "1", "2", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        shephard(&["classify", "3", "5", "4"]).status.code(),
        Some(2)
    );
    assert_eq!(
        shephard(&["report", "/nonexistent/graph"]).status.code(),
        Some(2)
    );
    // finite group has no girth question
    assert_eq!(shephard(&["girth", "3", "3", "3"]).status.code(), Some(4));
    // budget exhausted
    let o = shephard(&[
        "--budget",
        "50",
        "--radius",
        "20",
        "complex",
        "theta-hat",
        "3",
        "6",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn report_json_is_byte_stable() {
    let g = fixture("pentagon.graph");
    let a = shephard(&["--json", "report", &g]);
    let b = shephard(&["--json", "report", &g]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let j = json(&a);
    assert_eq!(j["relativelyHyperbolic"]["applies"], "yes");
    assert_eq!(j["peripheralList"].as_array().map(Vec::len), Some(5));
}

#[test]
fn json_graph_input() {
    let o = shephard(&["--json", "classify", "--graph", &fixture("square.json")]);
    let j = json(&o);
    assert_eq!(j["profile"]["isIrreducible"], false);
    assert_eq!(j["profile"]["isHyperbolicType"]["decision"], "no");
}

#[test]
fn complex_commands() {
    let o = shephard(&["--radius", "8", "complex", "theta-hat", "3", "6", "3"]);
    let text = stdout(&o);
    assert!(text.contains("bipartite: true"));
    assert!(text.contains("girth 12"));
    let o = shephard(&["--json", "complex", "domain", &fixture("pentagon.graph")]);
    assert_eq!(json(&o)["poset"].as_array().map(Vec::len), Some(11));
    let o = shephard(&[
        "--json",
        "--radius",
        "6",
        "complex",
        "certificate",
        &fixture("pentagon.graph"),
    ]);
    assert_eq!(json(&o)["verdict"], "certified-at-radius");
}

#[test]
fn exports_write_files() {
    let dir = std::env::temp_dir().join(format!("shephard-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let svg = dir.join("tiling.svg");
    let tj = dir.join("tiling.json");
    let o = shephard(&[
        "--radius",
        "5",
        "export",
        "tiling",
        "3",
        "6",
        "3",
        "--svg",
        svg.to_str().unwrap(),
        "--out-json",
        tj.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(std::fs::read_to_string(&svg).unwrap().starts_with("<svg"));
    let j: Value = serde_json::from_str(&std::fs::read_to_string(&tj).unwrap()).unwrap();
    assert!(j.is_object());
    let dot = dir.join("ball.dot");
    shephard(&[
        "--radius",
        "4",
        "export",
        "ball",
        "3",
        "3",
        "3",
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert!(std::fs::read_to_string(&dot).unwrap().contains("graph"));
    let o = shephard(&["export", "graph", &fixture("pentagon.graph")]);
    assert_eq!(stdout(&o).matches(" -- ").count(), 5);
    std::fs::remove_dir_all(&dir).ok();
}
