use std::process::{Command, Output};

fn sytq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sytq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = sytq(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn fakedeg_of_a_shape() {
    assert_eq!(
        stdout(&["fakedeg", "--shape", "4,2"]),
        "{\"offset\":2,\"coeffs\":[\"1\",\"1\",\"2\",\"1\",\"2\",\"1\",\"1\"]}\n"
    );
    assert_eq!(stdout(&["fakedeg", "--shape", "4,2,1", "--format", "text"]).trim(), "q^4 + 2q^5 + 3q^6 + 4q^7 + 5q^8 + 5q^9 + 5q^10 + 4q^11 + 3q^12 + 2q^13 + q^14");
}

#[test]
fn fakedeg_of_blocks() {
    let b = stdout(&["fakedeg", "--blocks", "|3,3", "--m", "2", "--d", "1", "--format", "text"]);
    assert_eq!(b.trim(), "q^12 + q^16 + q^18 + q^20 + q^24");
    let d = stdout(&["fakedeg", "--blocks", "|3,3", "--m", "2", "--d", "2", "--format", "text"]);
    assert_eq!(d.trim(), "q^6 + q^10 + q^12 + q^14 + q^18");
}

#[test]
fn deformed_example() {
    let out = stdout(&["deformed", "--alpha", "2,1,1,1", "--d", "2"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["offset"], 6);
    let nonzero: Vec<String> = v["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap().to_string())
        .filter(|c| c != "0")
        .collect();
    assert_eq!(nonzero, ["1", "1", "3", "3", "6", "5", "8", "6", "8", "5", "6", "3", "3", "1", "1"]);
}

#[test]
fn support_outputs() {
    assert_eq!(stdout(&["support", "--shape", "2,2"]), "{\"degrees\":[2,4]}\n");
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["support", "--blocks", "2|3,1", "--m", "2", "--d", "2", "--verify"])).unwrap();
    assert_eq!(v["equal"], true);
    let v: serde_json::Value = serde_json::from_str(&stdout(&["support", "--shape", "4,3/1", "--stat", "des", "--verify"])).unwrap();
    assert_eq!(v["equal"], true);
}

#[test]
fn enumerate_with_stats() {
    let out = stdout(&["enumerate", "--shape", "3,2", "--stats", "maj,des"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 5);
    assert!(lines.contains(&"1,2,3/4,5 maj=3 des=1"));
}

#[test]
fn poset_dot_and_file_output() {
    let dot = stdout(&["poset", "--shape", "3,2,1", "--order", "weak", "--format", "dot"]);
    assert_eq!(dot.lines().filter(|l| l.contains("[label=")).count(), 16);
    assert!(dot.starts_with("digraph"));
    let path = std::env::temp_dir().join(format!("sytq-poset-{}.json", std::process::id()));
    stdout(&["poset", "--shape", "3,2,1", "--order", "strong", "--format", "json", "--output", path.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(v["nodes"].as_object().unwrap().len(), 16);
    assert_eq!(v["order"], "strong");
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let a = stdout(&["poset", "--shape", "4,2,1", "--format", "json"]);
    let b = stdout(&["--threads", "1", "poset", "--shape", "4,2,1", "--format", "json"]);
    let c = stdout(&["poset", "--shape", "4,2,1", "--format", "json", "--threads", "3"]);
    assert_eq!(a, b);
    assert_eq!(a, c);
}

#[test]
fn argument_errors_exit_two() {
    for args in [
        &["fakedeg", "--blocks", "2|3,1", "--m", "2", "--d", "3"][..],
        &["fakedeg", "--shape", "2,4"],
        &["fakedeg", "--shape", "4,2", "--blocks", "1|1"],
        &["deformed", "--alpha", "1,1,1", "--d", "2"],
        &["verify", "--suite", "nonsense"],
        &["poset", "--shape", "3,x"],
    ] {
        let out = sytq(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"), "{args:?}");
    }
}

#[test]
fn verify_suite_passes() {
    let out = stdout(&["verify", "--suite", "examples"]);
    assert!(out.starts_with("PASS"));
    let out = stdout(&["verify", "--suite", "stanley", "--max-n", "7", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[0]["failures"].as_array().unwrap().len(), 0);
}
