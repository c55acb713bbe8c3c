use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hypersyz"))
}

fn run(args: &[&str]) -> (i32, String) {
    let Output { status, stdout, .. } = bin().args(args).output().unwrap();
    (status.code().unwrap(), String::from_utf8(stdout).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, out) = run(args);
    (code, serde_json::from_str(&out).unwrap())
}

fn corpus() -> Vec<PathBuf> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus");
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    files
}

const G3: &str = "p=11,f=[1,0,0,0,0,0,0,1]";
const L3: &str = "[inf,3]+[split(x,1),1]+[split(x+6,2),1]";

#[test]
fn corpus_replays_byte_identically() {
    let files = corpus();
    assert!(files.len() >= 20);
    for f in files {
        let (code, out) = run(&["--replay", f.to_str().unwrap()]);
        assert_eq!(code, 0, "{}: {out}", f.display());
        assert!(out.ends_with("identical\n"));
    }
}

#[test]
fn corpus_exit_statuses_match_recorded_errors() {
    for f in corpus() {
        let doc: Value = serde_json::from_str(&std::fs::read_to_string(&f).unwrap()).unwrap();
        let want = doc["error"]["exit_status"].as_i64().unwrap_or(0) as i32;
        let mut args = vec![doc["job"]["command"].as_str().unwrap().to_string()];
        for (k, v) in doc["job"]["args"].as_object().unwrap() {
            match v.as_str().unwrap() {
                "false" => {}
                "true" => args.push(format!("--{k}")),
                v => args.push(format!("--{k}={v}")),
            }
        }
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        assert_eq!(run(&args).0, want, "{}", f.display());
    }
}

#[test]
fn tampered_result_is_reported() {
    let src = Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus/noether-g3.json");
    let text = std::fs::read_to_string(src)
        .unwrap()
        .replace("\"rank\": 5", "\"rank\": 6");
    let tmp = std::env::temp_dir().join(format!("hypersyz-tampered-{}.json", std::process::id()));
    std::fs::write(&tmp, text).unwrap();
    let (code, out) = run(&["--replay", tmp.to_str().unwrap()]);
    std::fs::remove_file(&tmp).unwrap();
    assert_eq!(code, 1);
    assert!(out.contains("differs at line"));
}

#[test]
fn genus_three_verdict() {
    let (code, doc) = json(&["verdict", "--curve", G3, "--divisor", L3]);
    assert_eq!(code, 0);
    let r = &doc["result"];
    assert_eq!(r["status"], "NotSemistable");
    assert_eq!(r["justification"]["slope_e"], "5/2");
    assert_eq!(r["justification"]["slope_quotient"], "2");
    assert!(!doc["anchors"].as_array().unwrap().is_empty());
}

#[test]
fn noether_in_genus_two() {
    let (code, doc) = json(&["noether", "--curve", "p=11,f=x^5+1"]);
    assert_eq!(code, 0);
    let r = &doc["result"]["report"];
    assert_eq!(
        (r["rank"].as_u64(), r["dim_target"].as_u64()),
        (Some(3), Some(3))
    );
    assert_eq!(r["surjective"], true);
}

#[test]
fn sparse_and_list_polynomials_agree() {
    let a = json(&["h0h1", "--curve", "p=11,f=x^7+1", "--divisor", L3]).1;
    let b = json(&["h0h1", "--curve", G3, "--divisor", L3]).1;
    assert_eq!(a["result"], b["result"]);
}

#[test]
fn exit_statuses() {
    let c2 = "p=11,f=x^5+1";
    assert_eq!(run(&["h0h1", "--curve", c2, "--divisor", "[inf,3"]).0, 2);
    assert_eq!(
        run(&["h0h1", "--curve", "p=11;f=x^5+1", "--divisor", "0"]).0,
        2
    );
    assert_eq!(run(&["h0h1", "--curve", c2]).0, 2);
    assert_eq!(run(&["prop31", "--curve", c2, "--seed", "abc"]).0, 2);
    assert_eq!(run(&["noether", "--curve", "p=11,f=x^5+x^4"]).0, 3);
    assert_eq!(run(&["noether", "--curve", "p=15,f=x^5+1"]).0, 3);
    assert_eq!(
        run(&["invariants", "--curve", c2, "--divisor", "[split(x,1),1]"]).0,
        3
    );
    assert_eq!(run(&["prop31", "--curve", c2]).0, 3);
    assert_eq!(
        run(&["verdict-abstract", "--g", "3", "--c", "2", "--deg", "6"]).0,
        3
    );
    let (code, doc) = json(&["base-locus", "--curve", c2, "--divisor", "[inf,-1]"]);
    assert_eq!(code, 3);
    assert_eq!(doc["error"]["kind"], "empty_linear_system");
}

#[test]
fn reruns_are_identical() {
    let args = ["prop31", "--curve", "p=13,f=x^7+1", "--seed", "9"];
    assert_eq!(run(&args), run(&args));
}

#[test]
fn pretty_renders_a_table() {
    let (code, out) = run(&["noether", "--curve", "p=11,f=x^7+1", "--pretty"]);
    assert_eq!(code, 0);
    assert!(out
        .lines()
        .any(|l| l.starts_with("result.report.rank") && l.ends_with(" 5")));
    assert!(serde_json::from_str::<Value>(&out).is_err());
}

#[test]
fn negative_arguments_survive_replay() {
    let tmp = std::env::temp_dir().join(format!("hypersyz-neg-{}.json", std::process::id()));
    let (code, _) = run(&[
        "verdict-abstract",
        "--g",
        "3",
        "--c=-1",
        "--deg",
        "6",
        "--output",
        tmp.to_str().unwrap(),
    ]);
    assert_eq!(code, 3);
    assert_eq!(run(&["--replay", tmp.to_str().unwrap()]).0, 0);
    std::fs::remove_file(&tmp).unwrap();
}
