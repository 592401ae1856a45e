use std::process::{Command, Output};

fn bruhat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bruhat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = bruhat(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    serde_json::from_str(&stdout(args)).expect("valid JSON")
}

#[test]
fn words_are_sorted_one_per_line() {
    assert_eq!(stdout(&["words", "3241"]), "1213\n1231\n2123\n");
    let v = json(&["words", "3241", "--json"]);
    assert_eq!(v, serde_json::json!(["1213", "1231", "2123"]));
}

#[test]
fn eval_and_leq() {
    assert_eq!(stdout(&["eval", "1213", "--n", "4"]), "3241\n");
    assert_eq!(stdout(&["leq", "1324", "2341"]), "true\n");
    assert_eq!(stdout(&["leq", "2341", "1324"]), "false\n");
    // Mixed sizes are embedded into the larger group.
    assert_eq!(stdout(&["leq", "21", "1432"]), "false\n");
    assert_eq!(stdout(&["leq", "--n", "5", "21", "3214"]), "true\n");
}

#[test]
fn interval_formats() {
    let text = stdout(&["interval", "2143", "4231"]);
    assert!(text.starts_with("[2143, 4231] length 3, 10 elements, rank profile 1 4 4 1\n"));
    let v = json(&["interval", "2143", "4231", "--json"]);
    assert_eq!(v["elements"].as_array().unwrap().len(), 10);
    assert_eq!(v["covers"].as_array().unwrap().len(), 16);
    let dot = stdout(&["ideal", "321", "--dot"]);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("->").count(), 8);
}

#[test]
fn iso_specs() {
    assert_eq!(stdout(&["iso", "2143:4231", "3412"]), "false\n");
    assert_eq!(stdout(&["iso", "13425:45123", "3412"]), "true\n");
    assert_eq!(stdout(&["iso", "1324:2341", "2314"]), "true\n");
}

#[test]
fn forces_examples() {
    assert_eq!(
        stdout(&["forces", "2314", "--max-n", "4"]),
        "counterexample [1324, 2341] in S_4\nintervals examined: 63\n"
    );
    let v = json(&["forces", "321", "--max-n", "5", "--json"]);
    assert_eq!(v["outcome"], "no-counterexample-up-to-bound");
    assert!(v["certificate"].is_object());
    assert!(v["stats"].get("seconds").is_none());
    assert_eq!(v["stats"]["caps"]["max_n"], 8);
    let timed = json(&["forces", "321", "--max-n", "4", "--json", "--timing"]);
    assert!(timed["stats"]["seconds"].is_number());
}

#[test]
fn output_is_stable_across_job_counts() {
    let one = stdout(&["forces", "3412", "--max-n", "5", "--json", "--jobs", "1"]);
    let two = stdout(&["forces", "3412", "--max-n", "5", "--json", "--jobs", "2"]);
    assert_eq!(one, two);
    let one = stdout(&["atlas", "--n", "4", "--max-len", "4", "--jobs", "1"]);
    let two = stdout(&["atlas", "--n", "4", "--max-len", "4", "--jobs", "3"]);
    assert_eq!(one, two);
}

#[test]
fn structure_commands() {
    let d = json(&["decompose", "2314"]);
    assert_eq!(d["m"], 1);
    assert_eq!(d["a1"], "1");
    assert_eq!(d["a2"], "2");
    assert_eq!(json(&["decompose", "3412"]), serde_json::Value::Null);

    let w = json(&["witness", "2314"]);
    assert_eq!(w["w_minus"], "1324");
    assert_eq!(w["w_plus"], "2341");
    assert_eq!(w["word"], "123");

    let s = json(&["swapstring", "21354", "25314"]);
    assert_eq!(s["positions"], serde_json::json!([2, 3, 4]));
    assert_eq!(s["values"], serde_json::json!([1, 3, 5]));
    assert_eq!((s["k"].as_u64(), s["t"].as_i64()), (Some(3), Some(-1)));
    let f = json(&["factorize", "21354", "25314"]);
    assert_eq!(
        f,
        serde_json::json!({"a": "14", "b": "232", "c": "", "t": -1})
    );
    assert_eq!(
        bruhat(&["factorize", "1324", "3421"]).status.code(),
        Some(2)
    );
    assert_eq!(
        json(&["swapstring", "2143", "4231"]),
        serde_json::Value::Null
    );
}

#[test]
fn atlas_json_shape() {
    let v = json(&["atlas", "--n", "4", "--max-len", "3"]);
    assert_eq!(v["n"], 4);
    let rows: Vec<(u64, u64)> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            (
                r["intervals"].as_u64().unwrap(),
                r["ideals"].as_u64().unwrap(),
            )
        })
        .collect();
    assert_eq!(rows, vec![(1, 1), (1, 1), (1, 1), (3, 2)]);
    assert_eq!(v["stats"]["caps"]["max_length"], 15);
}

#[test]
fn exit_codes() {
    assert_eq!(bruhat(&["words", "12x"]).status.code(), Some(2));
    assert_eq!(bruhat(&["nonsense"]).status.code(), Some(2));
    assert_eq!(bruhat(&["eval", "121"]).status.code(), Some(2));
    assert_eq!(bruhat(&["interval", "321", "123"]).status.code(), Some(2));
    assert_eq!(bruhat(&["words", "987654321"]).status.code(), Some(1));
    assert_eq!(
        bruhat(&["words", "4321", "--cap-words", "3"]).status.code(),
        Some(1)
    );
    assert_eq!(
        bruhat(&["forces", "21", "--max-n", "9"]).status.code(),
        Some(1)
    );
    // A counterexample is a result, not a failure.
    assert_eq!(
        bruhat(&["forces", "2314", "--max-n", "4"]).status.code(),
        Some(0)
    );
}

#[test]
fn json_outputs_feed_back_into_the_cli() {
    let iv = json(&["interval", "13425", "45123", "--json"]);
    let (low, high) = (iv["low"].as_str().unwrap(), iv["high"].as_str().unwrap());
    let again = stdout(&["interval", low, high, "--json"]);
    assert_eq!(
        serde_json::from_str::<serde_json::Value>(&again).unwrap(),
        iv
    );
    for e in iv["elements"].as_array().unwrap() {
        let e = e.as_str().unwrap();
        assert_eq!(stdout(&["leq", low, e]), "true\n");
        assert_eq!(stdout(&["leq", e, high]), "true\n");
    }

    for word in json(&["words", "45123", "--json"]).as_array().unwrap() {
        assert_eq!(
            stdout(&["eval", word.as_str().unwrap(), "--n", "5"]),
            "45123\n"
        );
    }

    let v = json(&["forces", "3412", "--max-n", "5", "--json"]);
    let c = &v["counterexample"];
    let spec = format!("{}:{}", c["x"].as_str().unwrap(), c["y"].as_str().unwrap());
    assert_eq!(stdout(&["iso", &spec, "3412"]), "true\n");

    let w = json(&["witness", "3124"]);
    let spec = format!(
        "{}:{}",
        w["w_minus"].as_str().unwrap(),
        w["w_plus"].as_str().unwrap()
    );
    assert_eq!(stdout(&["iso", &spec, "3124"]), "true\n");
    let n = w["w_plus"].as_str().unwrap().len().to_string();
    assert_eq!(
        stdout(&["eval", w["word"].as_str().unwrap(), "--n", &n]).trim(),
        w["w_plus"].as_str().unwrap()
    );
}
