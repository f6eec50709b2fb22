use std::process::{Command, Output};

use serde_json::Value;

fn tori(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tori"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = tori(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn text_output() {
    assert_eq!(stdout(&["h1", "--group", "4T2"]), "H1(G, J) = Z/2 x Z/2\n");
    assert_eq!(stdout(&["flabby", "--group", "3T2"]), "H1(G, [J]^fl) = 0\n");
    assert_eq!(stdout(&["flabby", "--group", "4T2"]), "H1(G, [J]^fl) = Z/2\n");
    assert_eq!(stdout(&["h3z", "--group", "V4"]), "H3(G, Z) = Z/2\n");
}

#[test]
fn obstruction_json() {
    let v = json(&["obstruction", "--group", "8T21", "--json"]);
    assert_eq!(v["ker"]["invariants"], serde_json::json!([2]));
    assert_eq!(v["dnr"]["invariants"], serde_json::json!([]));
    assert_eq!(v["group"]["order"], 32);
}

#[test]
fn json_is_byte_deterministic() {
    let args = ["report", "--group", "6T4", "-d", "(1,4)(2,5)", "--json"];
    let a = stdout(&args);
    assert_eq!(a, stdout(&args));
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["h1_J"], serde_json::json!([3]));
    assert_eq!(v["tamagawa_numerator"], 3);
    assert_eq!(v["flabby_class_h1"], serde_json::json!([2]));
    assert_eq!(v["table1"]["status"], "obstructed");
    assert_eq!(v["table1"]["invariants"], serde_json::json!([2]));
    assert_eq!(v["obstruction"]["dr"].as_array().unwrap().len(), 1);
}

#[test]
fn inline_group_and_subgroup() {
    // J for D4 acting on its four vertices, then on the cosets of a reflection.
    assert_eq!(stdout(&["h1", "-g", "4:(1,2,3,4);(1,3)"]), "H1(G, J) = Z/2\n");
    let v = json(&["h1", "-g", "4:(1,2,3,4);(1,3)", "-s", "(1,2)(3,4)", "--json"]);
    assert_eq!(v["h1_J"], serde_json::json!([2]));
}

#[test]
fn cover_file_drives_the_obstruction() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/data/covers/4T2.json");
    let v = json(&["obstruction", "--cover-file", path, "--json"]);
    assert_eq!(v["ker"]["invariants"], serde_json::json!([2]));
    assert_eq!(v["dnr"]["invariants"], serde_json::json!([]));
    assert_eq!(v["obstruction_group"]["order"], 8);
}

#[test]
fn survey_counts() {
    let v = json(&["survey", "--group", "6T12", "--json"]);
    assert_eq!(v["subgroups"], 59);
    assert_eq!(v["true"]["count"], 11);
    assert_eq!(v["minimal_true"], serde_json::json!({ "C2 x C2": 5 }));
}

#[test]
fn table1() {
    assert_eq!(stdout(&["table1", "--group", "7T3"]), "7T3: holds for every realizing extension\n");
    let rows = json(&["table1", "--json"]);
    assert_eq!(rows.as_array().unwrap().len(), 32);
}

#[test]
fn exit_codes() {
    assert_eq!(tori(&["h1", "--group", "8T999"]).status.code(), Some(4));
    assert_eq!(tori(&["h1", "--group", "4:(1,5)"]).status.code(), Some(2));
    assert_eq!(tori(&["table1", "--group", "8X3"]).status.code(), Some(2));
    assert_eq!(tori(&["survey", "--group", "10T32"]).status.code(), Some(3));
    assert_eq!(tori(&["h1"]).status.code(), Some(2));
    let err = String::from_utf8(tori(&["h1", "--group", "8T311"]).stderr).unwrap();
    assert!(err.contains("8T31"));
}

#[test]
fn budget_scaling_unlocks_larger_groups() {
    let v = json(&["obstruction", "--group", "10T32", "--budget", "2", "--json"]);
    assert!(v["ker"]["invariants"].is_array());
}
