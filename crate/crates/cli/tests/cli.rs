use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bicyclic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = vec!["--output", "json"];
    all.extend_from_slice(args);
    let o = run(&all);
    let v = serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(&o)));
    (v, o.status.code().unwrap())
}

#[test]
fn solve_report_schema() {
    let (v, code) = json(&[
        "solve", "--group", "Z", "--target", "[5|2]", "--known", "[3|4]", "--side", "right",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        v,
        serde_json::json!({"kind": "Unique", "element": {"left": "6", "right": "2"}})
    );
    let (v, _) = json(&[
        "solve", "--target", "[3|5]", "--known", "[3|4]", "--side", "right",
    ]);
    assert_eq!(v["kind"], "UpSet");
    assert_eq!(v["element"]["left"], "4");
    let (v, _) = json(&[
        "solve", "--target", "[2|5]", "--known", "[3|4]", "--side", "right",
    ]);
    assert_eq!(v, serde_json::json!({"kind": "NoSolution"}));
    let (v, _) = json(&[
        "solve",
        "--target",
        "[1|2]",
        "--known",
        "[1|7]",
        "--known-right",
        "[-4|2]",
        "--side",
        "sandwich",
    ]);
    assert_eq!(
        v["element"],
        serde_json::json!({"left": "7", "right": "-4"})
    );
}

#[test]
fn arithmetic_commands() {
    assert_eq!(stdout(&run(&["mul", "[0|1]", "[1|0]"])), "[0|0]\n");
    assert_eq!(
        stdout(&run(&[
            "mul",
            "--group",
            "ZxZ",
            "[(0,1)|(1,0)]",
            "[(1,0)|(0,1)]"
        ])),
        "[(0,1)|(0,1)]\n"
    );
    assert_eq!(
        stdout(&run(&["inv", "--group", "Q", "[1/2|-3/4]"])),
        "[-3/4|1/2]\n"
    );
    assert_eq!(
        stdout(&run(&[
            "pmap", "apply", "--group", "Z", "--g", "2", "--h", "5", "--x", "3"
        ])),
        "6\n"
    );
    let (v, _) = json(&["leq", "[3|5]", "[2|4]"]);
    assert_eq!(v["leq"], true);
    let (v, _) = json(&["ideal", "--s", "[3|-1]", "--anchor", "2", "--side", "right"]);
    assert_eq!(v["member"], true);
    let (v, _) = json(&["upset", "--window", "2", "--base", "[0|1]"]);
    let elems: Vec<String> = v["elements"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| {
            format!(
                "{}|{}",
                e["left"].as_str().unwrap(),
                e["right"].as_str().unwrap()
            )
        })
        .collect();
    assert_eq!(elems, ["-2|-1", "-1|0", "0|1"]);
}

#[test]
fn witness_and_escape() {
    let (v, code) = json(&[
        "witness", "--group", "Z", "--seed", "[0|0]", "--target", "[-3|7]",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        v["right_translator"],
        serde_json::json!({"left": "6", "right": "-1"})
    );
    assert_eq!(
        v["intermediate"],
        serde_json::json!({"left": "0", "right": "7"})
    );
    assert_eq!(
        v["left_translator"],
        serde_json::json!({"left": "-1", "right": "-4"})
    );

    let (v, code) = json(&["escape", "--group", "Z", "--a", "0", "--window", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["certificates"].as_array().unwrap().len(), 20);
    let (v, code) = json(&["escape", "--group", "Q"]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "not-applicable");
}

#[test]
fn check_runs_and_reports() {
    let o = run(&["check", "--group", "Z", "--window", "3", "--suites", "all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("0 failed"));

    let (v, code) = json(&["check", "--group", "Q", "--suites", "escapes"]);
    assert_eq!(code, 0);
    let region = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "escape.region")
        .unwrap();
    assert_eq!(region["status"], "not-applicable");

    let (v, code) = json(&["pmap", "check-compose", "--group", "H3", "--window", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["totals"]["failed"], 0);
}

#[test]
fn check_is_deterministic() {
    let strip = |mut v: Value| {
        v["wall_ms"] = Value::Null;
        for c in v["checks"].as_array_mut().unwrap() {
            c["wall_ms"] = Value::Null;
        }
        v
    };
    let args = [
        "check",
        "--group",
        "Q",
        "--window",
        "2",
        "--sample-seed",
        "9",
        "--suites",
        "semigroup,order",
    ];
    assert_eq!(strip(json(&args).0), strip(json(&args).0));
}

#[test]
fn exit_codes() {
    let o = run(&["mul", "[3|x]", "[0|0]"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("offset 3"), "{err}");

    assert_eq!(
        run(&["check", "--suites", "axioms,nope"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["check", "--window", "0"]).status.code(), Some(2));
    assert_eq!(
        run(&["--group", "R", "inv", "[0|0]"]).status.code(),
        Some(2)
    );
    // A well-formed element outside B+ is a domain error.
    assert_eq!(
        run(&["--plus", "mul", "[-1|0]", "[0|0]"]).status.code(),
        Some(1)
    );
    assert_eq!(
        run(&["pmap", "apply", "--g", "2", "--h", "5", "--x", "1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["upset", "--group", "Q", "--base", "[0|1]"])
            .status
            .code(),
        Some(1)
    );
}
