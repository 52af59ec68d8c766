use std::process::Command;

use serde_json::Value;

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

/// Runs the binary and returns its exit code and parsed standard output.
fn run(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_macneille"))
        .args(args)
        .output()
        .expect("binary runs");
    let code = out.status.code().expect("exit code");
    let stdout = String::from_utf8(out.stdout).unwrap();
    let value = if stdout.trim().is_empty() {
        Value::Null
    } else {
        serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("bad JSON {stdout:?}: {e}"))
    };
    (code, value)
}

fn strings(v: &Value) -> Vec<&str> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|s| s.as_str().unwrap())
        .collect()
}

#[test]
fn closure_of_both_letters_is_everything() {
    let (code, v) = run(&[
        "closure",
        "--alphabet",
        &fixture("antichain2.json"),
        "--words",
        "+",
        "-",
    ]);
    assert_eq!(code, 0);
    assert_eq!(strings(&v["result"]), [""]);
}

#[test]
fn closure_oracle_reports_agreement() {
    let a = fixture("antichain2.json");
    let (code, v) = run(&[
        "closure",
        "--alphabet",
        &a,
        "--words",
        "-+-",
        "+--",
        "--oracle",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["agreement"], true);
    assert_eq!(v["applicable"], true);
}

#[test]
fn stable_closure_with_cancellation() {
    let a = fixture("antichain2.json");
    let (code, v) = run(&[
        "stable-closure",
        "--alphabet",
        &a,
        "--words",
        "+++",
        "---",
        "--rules",
        "cancellation",
    ]);
    assert_eq!(code, 0);
    assert_eq!(strings(&v["result"]), [""]);
    assert_eq!(v["method"], "rules-saturation");
    let added: Vec<&str> = v["trace"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["added"].as_str().unwrap())
        .collect();
    for w in ["-+-+", "+-+", "++", "--", "+", "-", ""] {
        assert!(added.contains(&w), "{w} missing from {added:?}");
    }
}

#[test]
fn rule_lists_accept_commas_and_kebab_case() {
    let a = fixture("diamond.json");
    let (code, v) = run(&[
        "is-stable",
        "--alphabet",
        &a,
        "--words",
        "1",
        "ab",
        "--rules",
        "cancellation,reduction",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["stable"], true);
    let (code, v) = run(&[
        "is-stable",
        "--alphabet",
        &a,
        "--words",
        "1",
        "ab",
        "--rules",
        "permuto-reduction",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["stable"], false);
}

#[test]
fn cones_and_hyphenated_words() {
    let a = fixture("antichain2.json");
    let (code, v) = run(&[
        "cone",
        "--alphabet",
        &a,
        "--words",
        "-+-+-",
        "+-+-+",
        "+--+-",
        "--kind",
        "lower",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["cone"]["kind"], "lower");
    assert_eq!(strings(&v["cone"]["gens"]), ["--+", "+-+-"]);
    let (_, v) = run(&["cone", "--alphabet", &a, "--words", "--+", "+-+-"]);
    assert_eq!(strings(&v["cone"]["gens"]), ["+-+-+", "+--+-", "-+-+-"]);
    let (_, v) = run(&["leq", "--alphabet", &a, "--words", "--", "-+-"]);
    assert_eq!(v["leq"], true);
}

#[test]
fn check_closed_exit_codes() {
    let a = fixture("antichain2.json");
    let (code, v) = run(&["check-closed", "--alphabet", &a, "--words", "+", "-"]);
    assert_eq!(code, 3);
    assert_eq!(v["closed"], false);
    assert_eq!(v["witness"], "");
    let (code, v) = run(&[
        "check-closed",
        "--alphabet",
        &a,
        "--words",
        "-+-+-",
        "+-+-+",
        "+--+-",
        "--oracle",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["closed"], true);
    assert_eq!(v["agreement"], true);
}

#[test]
fn outside_the_rule_classes_the_oracle_decides() {
    let (code, v) = run(&[
        "check-closed",
        "--alphabet",
        &fixture("sharp.json"),
        "--words",
        "+",
        "-",
    ]);
    assert_eq!(code, 3);
    assert_eq!(v["applicable"], false);
    assert_eq!(v["method"], "galois-oracle");
    assert!(v["note"].is_string());
}

#[test]
fn lower_closedness() {
    let (code, v) = run(&[
        "check-lower-closed",
        "--alphabet",
        &fixture("wedge_below.json"),
        "--words",
        "l",
        "m",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["closed"], false);
    assert_eq!(v["witness"], "nn");
    let (_, v) = run(&[
        "closure",
        "--alphabet",
        &fixture("wedge_below.json"),
        "--words",
        "l",
        "m",
        "--kind",
        "lower",
    ]);
    assert!(strings(&v["result"]).contains(&"nn"));
}

#[test]
fn classify_reports_flags() {
    let (code, v) = run(&["classify", "--alphabet", &fixture("diamond.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["class"]["is_lattice"], true);
    assert_eq!(v["class"]["bounded_below_has_meet_and_upper_bound"], true);
    let (_, v) = run(&["classify", "--alphabet", &fixture("sharp.json")]);
    assert_eq!(v["class"]["bounded_below_has_meet_and_upper_bound"], false);
}

#[test]
fn conjecture_search_reports() {
    let (code, v) = run(&[
        "conjecture-search",
        "--alphabet",
        &fixture("antichain2.json"),
        "--max-gens",
        "2",
        "--max-len",
        "2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["mismatches"], 0);
    assert!(v["counterexample"].is_null());
    assert!(v["verdict"]
        .as_str()
        .unwrap()
        .starts_with("no counterexample within bounds"));
    let (code, v) = run(&["conjecture-search", "--alphabet", &fixture("bowtie.json")]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "HypothesisViolated");
}

#[test]
fn graph_commands() {
    let (code, v) = run(&["graph-embeddable", "--graph", &fixture("cycle3.json")]);
    assert_eq!(code, 3);
    assert_eq!(v["embeddable"], false);
    let ab = v["failing"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["from"] == "a" && e["to"] == "b")
        .unwrap();
    assert_eq!(ab["witness"], "-");
    assert_eq!(strings(&ab["distance"]), ["+", "--"]);

    let (code, v) = run(&["graph-distances", "--graph", &fixture("arc.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["embeddable"], true);
    let get = |from: &str, to: &str| {
        v["entries"]
            .as_array()
            .unwrap()
            .iter()
            .find(|e| e["from"] == from && e["to"] == to)
            .unwrap()
            .clone()
    };
    assert_eq!(strings(&get("a", "b")["distance"]), ["+"]);
    assert_eq!(strings(&get("b", "a")["distance"]), ["-"]);
    assert_eq!(strings(&get("a", "a")["distance"]), [""]);
    let (code, _) = run(&["graph-embeddable", "--graph", &fixture("arc.json")]);
    assert_eq!(code, 0);
}

#[test]
fn domain_errors_are_json() {
    let (code, v) = run(&["classify", "--alphabet", &fixture("cycle2.json")]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "CycleError");
    let (code, v) = run(&["graph-distances", "--graph", &fixture("double_arc.json")]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "DoubleArcError");
    let (code, v) = run(&[
        "closure",
        "--alphabet",
        &fixture("antichain2.json"),
        "--words",
        "+x",
    ]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "UnknownLetter");
    let (code, v) = run(&["classify", "--alphabet", &fixture("missing.json")]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "InvalidDocument");
}

#[test]
fn usage_errors_exit_two() {
    let a = fixture("antichain2.json");
    assert_eq!(run(&["leq", "--alphabet", &a, "--words", "+"]).0, 2);
    assert_eq!(
        run(&[
            "is-stable",
            "--alphabet",
            &a,
            "--words",
            "+",
            "--rules",
            "bogus"
        ])
        .0,
        2
    );
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["closure"]).0, 2);
}

#[test]
fn output_is_deterministic() {
    let args = [
        "stable-closure",
        "--alphabet",
        &fixture("diamond.json"),
        "--words",
        "ab",
        "ba",
        "1",
    ];
    let first = run(&args);
    for _ in 0..3 {
        assert_eq!(run(&args), first);
    }
}

#[test]
fn pretty_output_parses_to_the_same_value() {
    let a = fixture("antichain2.json");
    let (_, compact) = run(&["closure", "--alphabet", &a, "--words", "+-"]);
    let (_, pretty) = run(&["closure", "--alphabet", &a, "--words", "+-", "--pretty"]);
    assert_eq!(compact, pretty);
}
