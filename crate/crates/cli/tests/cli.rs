use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn gfactor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gfactor"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const P3: &str = "3 2\n0 1\n1 2\n";
const C4: &str = "4 4\n0 1\n1 2\n2 3\n0 3\n";
const K4: &str = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";

#[test]
fn toughness_of_path() {
    let dir = TempDir::new().unwrap();
    let p3 = file(&dir, "p3.txt", P3);
    let out = gfactor(&["toughness", "--graph", s(&p3)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out).trim(),
        r#"{"toughness":{"num":1,"den":2},"cut":[1]}"#
    );
}

#[test]
fn toughness_modes() {
    let dir = TempDir::new().unwrap();
    let k4 = file(&dir, "k4.txt", K4);
    let value = gfactor(&["toughness", "--graph", s(&k4)]);
    assert_eq!(stdout(&value).trim(), r#"{"toughness":"infinite","cut":null}"#);
    let star = file(&dir, "star.txt", "4 3\n0 1\n0 2\n0 3\n");
    let almost = gfactor(&["toughness", "--graph", s(&star), "--mode", "almost"]);
    assert_eq!(stdout(&almost).trim(), r#"{"holds":false,"cut":[0]}"#);
    let one = gfactor(&["toughness", "--graph", s(&k4), "--mode", "one-tough"]);
    assert_eq!(stdout(&one).trim(), r#"{"holds":true,"cut":null}"#);
}

#[test]
fn reduce_rejects_four_cycle() {
    let dir = TempDir::new().unwrap();
    let c4 = file(&dir, "c4.txt", C4);
    let out = gfactor(&[
        "reduce",
        "--graph",
        s(&c4),
        "--out",
        s(&dir.path().join("r.json")),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not cubic"), "{}", stderr(&out));
}

#[test]
fn reduce_then_check_all_factors() {
    let dir = TempDir::new().unwrap();
    let k4 = file(&dir, "k4.txt", K4);
    let out_path = dir.path().join("k4l.json");
    let out = gfactor(&["reduce", "--graph", s(&k4), "--out", s(&out_path)]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let inst: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(inst["graph"]["n"], 12);
    assert_eq!(inst["f"].as_array().unwrap().len(), 12);
    let map: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("k4l.map.json")).unwrap()).unwrap();
    assert_eq!(map["x_of"], serde_json::json!([4, 5, 6, 7]));
    assert_eq!(map["y_of"], serde_json::json!([8, 9, 10, 11]));

    for method in ["criterion", "enum", "both"] {
        let out = gfactor(&[
            "check-all-factors",
            "--instance",
            s(&out_path),
            "--method",
            method,
        ]);
        assert_eq!(out.status.code(), Some(0), "{method}: {}", stderr(&out));
        assert_eq!(
            stdout(&out).trim(),
            r#"{"holds":true,"vacuous":false,"witness":null}"#
        );
    }
}

#[test]
fn check_all_factors_exit_codes() {
    let dir = TempDir::new().unwrap();
    let p3 = r#"{"graph":{"n":3,"edges":[[0,1],[1,2]]},"#;
    let vacuous = file(&dir, "v.json", &format!(r#"{p3}"g":[1,1,1],"f":[1,1,1]}}"#));
    let out = gfactor(&["check-all-factors", "--instance", s(&vacuous)]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(
        stdout(&out).trim(),
        r#"{"holds":true,"vacuous":true,"witness":null}"#
    );

    let failing = file(&dir, "f.json", &format!(r#"{p3}"g":[1,1,1],"f":[2,2,2]}}"#));
    let out = gfactor(&["check-all-factors", "--instance", s(&failing)]);
    assert_eq!(out.status.code(), Some(1));
    let verdict: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(verdict["holds"], false);
    assert!(verdict["witness"]["niessen"].is_object());

    let bad = file(&dir, "b.json", &format!(r#"{p3}"g":[2,1,1],"f":[1,1,1]}}"#));
    assert_eq!(
        gfactor(&["check-all-factors", "--instance", s(&bad)])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn check_factor_found_and_absent() {
    let dir = TempDir::new().unwrap();
    let k4 = file(&dir, "k4.txt", K4);
    let found = gfactor(&["check-factor", "--graph", s(&k4), "--f", "[1,1,1,1]"]);
    assert_eq!(found.status.code(), Some(0));
    let text = stdout(&found);
    assert!(text.starts_with("4 2\n"), "{text}");

    let p3 = file(&dir, "p3.txt", P3);
    let absent = gfactor(&["check-factor", "--graph", s(&p3), "--f", "[1,1,1]"]);
    assert_eq!(absent.status.code(), Some(1));
    assert_eq!(stdout(&absent).trim(), "absent");

    let f_file = file(&dir, "f.json", "[1,2,1]");
    let gf = gfactor(&[
        "check-factor",
        "--graph",
        s(&p3),
        "--g",
        "[0,0,0]",
        "--f",
        s(&f_file),
    ]);
    assert_eq!(gf.status.code(), Some(0));

    let short = gfactor(&["check-factor", "--graph", s(&p3), "--f", "[1,1]"]);
    assert_eq!(short.status.code(), Some(2));
    let malformed = file(&dir, "bad.txt", "3 2\n0 1\n");
    assert_eq!(
        gfactor(&["check-factor", "--graph", s(&malformed), "--f", "[0,0,0]"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_pendant_small() {
    let out = gfactor(&[
        "verify-lemmas",
        "--lemma",
        "2.2",
        "--n-max",
        "4",
        "--samples",
        "300",
        "--jobs",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("seed: 0x5eed0f6f"), "{text}");
    assert!(text.contains("38 graphs, 0 counterexamples"), "{text}");
}

#[test]
fn verify_json_and_aliases() {
    let out = gfactor(&[
        "verify-lemmas",
        "--lemma",
        "parity",
        "--n-max",
        "4",
        "--json",
        "--seed",
        "0x10",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["seed"], 16);
    assert_eq!(v["reports"][0]["lemma"], "1.5");
    assert_eq!(v["reports"][0]["report"]["sizes"][3]["graphs"], 38);

    let lift = gfactor(&["verify-lemmas", "--lemma", "lift", "--n-max", "6"]);
    assert_eq!(lift.status.code(), Some(0));
    assert!(stdout(&lift).contains("n=6: 70 graphs, 0 counterexamples"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(gfactor(&["toughness"]).status.code(), Some(2));
    assert_eq!(
        gfactor(&["verify-lemmas", "--lemma", "9.9"]).status.code(),
        Some(2)
    );
    assert_eq!(
        gfactor(&["verify-lemmas", "--lemma", "2.2", "--n-max", "9"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        gfactor(&["toughness", "--graph", "/nonexistent/graph.txt"])
            .status
            .code(),
        Some(2)
    );
}
