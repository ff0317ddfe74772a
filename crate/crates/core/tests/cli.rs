use std::process::Command;

use serde_json::Value;

fn equivart(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_equivart"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, stdout) = equivart(args);
    assert_eq!(code, 0, "{stdout}");
    serde_json::from_str(&stdout).unwrap()
}

const TRIANGLE: &str = r#"{"atoms":[
  {"turns":"0/1","weight":"1/2"},
  {"turns":"1/3","weight":"1/4"},
  {"turns":"2/3","weight":"1/4"}]}"#;

#[test]
fn ring_and_fixed_examples() {
    assert_eq!(json(&["ring", "--r", "11/30"])["ring"], "Z[u]/(3u^2)");
    assert_eq!(json(&["ring", "--r", "1/2"])["ring"], "Z[u]");
    assert_eq!(json(&["fixed", "--n", "15", "--d", "5"])["first_fixed_scale"]["turns"], "2/5");
}

#[test]
fn measure_commands() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("mu.json");
    std::fs::write(&path, TRIANGLE).unwrap();
    let p = path.to_str().unwrap();

    let phi = json(&["phi", "--measure", p, "--r", "2/5"]);
    assert_eq!(phi["schema"], "equivart/1");
    assert_eq!(phi["join_point"]["components"][0]["index"], 1);

    let avg = json(&["average", "--measure", p, "--r", "2/5"]);
    assert_eq!(avg["average"]["k"], 1);
    assert_eq!(avg["average"]["weights"][0], "1/2");

    let same = json(&["quotient-eq", "--measure", p, "--other", p, "--r", "2/5"]);
    assert_eq!(same["equal"], true);

    let lifted = json(&["gn", "--measure", p, "--n", "3"]);
    assert_eq!(lifted["lifted"]["atoms"].as_array().unwrap().len(), 9);

    let square = json(&["square", "--measure", p, "--r", "2/5", "--cover", "5"]);
    assert_eq!(square["square"]["equal"], true);

    let (code, stdout) = equivart(&["average", "--measure", p, "--r", "1/2"]);
    assert_eq!(code, 3);
    let err: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(err["error"]["kind"], "domain");

    let (code, _) = equivart(&["phi", "--measure", "/nonexistent.json", "--r", "1/3"]);
    assert_eq!(code, 2);
}

#[test]
fn oracle_outputs_and_budget() {
    let dir = tempfile::tempdir().unwrap();
    let text = dir.path().join("filtration.txt");
    let doc = json(&["oracle", "--n", "9", "--maxdim", "2", "--r", "1/6", "--filtration", text.to_str().unwrap()]);
    assert_eq!(doc["betti"], serde_json::json!([1, 1]));
    let lines = std::fs::read_to_string(&text).unwrap();
    assert_eq!(lines.lines().count(), doc["simplices"].as_u64().unwrap() as usize);

    let (code, csv) = equivart(&["oracle", "--n", "6", "--maxdim", "2", "--csv", "--field", "q"]);
    assert_eq!(code, 0);
    assert!(csv.starts_with("dim,birth_turns,death_turns\n"));

    let out = Command::new(env!("CARGO_BIN_EXE_equivart"))
        .args(["oracle", "--n", "20", "--maxdim", "5"])
        .env("EQUIVART_SIMPLEX_BUDGET", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));

    let report = json(&["compare", "--n", "9", "--r", "1/6", "--maxdim", "3", "--field", "f2"]);
    assert_eq!(report["report"]["matches"], true);
}

#[test]
fn barcode_json_and_determinism() {
    let doc = json(&["barcode", "--degree", "4"]);
    let pieces: Vec<&str> = doc["intervals"]
        .as_array()
        .unwrap()
        .iter()
        .map(|i| i["piece"].as_str().unwrap())
        .collect();
    assert_eq!(pieces, ["0", "Z/3", "Z"]);
    assert_eq!(equivart(&["barcode", "--degree", "6", "--rmax", "2.6"]), equivart(&["barcode", "--degree", "6", "--rmax", "2.6"]));
}
