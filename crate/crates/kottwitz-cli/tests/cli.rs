use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    run_with_env(args, &[])
}

fn run_with_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_kottwitz"));
    cmd.args(args);
    cmd.env_remove("KOTTWITZ_DENOM_BOUND");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn enumerate_prints_the_full_table() {
    let out = run(&["enumerate", "--group", "gl:4", "--mu", "1,1,0,0"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.starts_with("B(GL4, mu=1,1,0,0)\n"), "got: {text}");
    assert!(text.contains("1/2,1/2,1/2,1/2"));
    assert!(text.ends_with("classes: 5\n"));
    let data_rows = text
        .lines()
        .filter(|l| l.contains('[') && l.contains(']'))
        .count();
    assert_eq!(data_rows, 5);

    let out = run(&["enumerate", "--group", "gl:2", "--mu", "1,1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).ends_with("classes: 1\n"));
}

#[test]
fn enumerate_output_is_byte_stable() {
    let args = ["enumerate", "--group", "gl:5", "--mu", "1,1,1,0,0"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout);

    let args = ["avg-coroot", "--type", "E7"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn enumerate_rejects_bad_input() {
    let out = run(&["enumerate", "--group", "gl:4", "--mu", "1,1,x,0"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("parse error"));

    let out = run(&["enumerate", "--group", "gl:4", "--mu", "1,1,0"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("dimension mismatch"));

    let out = run(&["enumerate", "--group", "gl:4", "--mu", "0,0,1,1"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("not dominant"));

    let out = run(&["enumerate", "--group", "zz:4", "--mu", "1,0,0,0"]);
    assert_eq!(code(&out), 2);

    let out = run(&["enumerate", "--no-such-flag"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn enumerate_json_parses_and_counts() {
    let out = run(&["enumerate", "--group", "gl:4", "--mu", "1,1,0,0", "--json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    let classes = v["classes"].as_array().expect("classes array");
    assert_eq!(classes.len(), 5);
    assert_eq!(v["group"], "GL4");
    let basic: Vec<&serde_json::Value> = classes
        .iter()
        .filter(|c| c["basic"].as_bool() == Some(true))
        .collect();
    assert_eq!(basic.len(), 1);
    assert_eq!(basic[0]["newton"][0], "1/2");
    assert_eq!(basic[0]["kappa"][0], 2);
}

#[test]
fn wa_eq_a_reports_both_verdicts() {
    let out = run(&["wa-eq-a", "--group", "gl:2", "--mu", "1,0"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("verdict: EQUAL"));

    let out = run(&["wa-eq-a", "--group", "gl:5", "--mu", "1,1,0,0,0"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("verdict: NOT EQUAL"));
    assert!(text.contains("1/2,1/2,1/3,1/3,1/3"));

    let out = run(&["wa-eq-a", "--group", "gl:4", "--mu", "2,1,0,0"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("minuscule"));
}

#[test]
fn avg_coroot_f4_table_and_sequence() {
    let out = run(&["avg-coroot", "--type", "F4"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("beta 3: {0}=1 {1}=2 {2}=3/2"));
    assert!(text.contains("I-sequence: {1} -> {0,1,2} -> {0,1,2,3}"));

    let out = run(&["avg-coroot", "--type", "3D4", "--json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["type"], "3D4");
    assert_eq!(v["i_sequence"][0], serde_json::json!([0, 2, 3]));
}

#[test]
fn strata_json_is_an_array_of_reports() {
    let out = run(&["strata", "--group", "gl:4", "--mu", "1,1,0,0", "--json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    let rows = v.as_array().expect("top-level array");
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["status"], "Admissible");
    assert_eq!(rows[0]["bundle"], "0/1×4");
    assert_eq!(rows[1]["status"], "EmptyByDecomposability");
    assert_eq!(rows[1]["newton"][0], "1/2");
    for row in rows {
        for key in ["newton", "kappa", "bundle", "status"] {
            assert!(row.get(key).is_some(), "missing {key}");
        }
    }
}

#[test]
fn witness_certifies_and_rejects() {
    let out = run(&[
        "witness",
        "--group",
        "gl:5",
        "--mu",
        "1,1,0,0,0",
        "--nu",
        "1/2,1/2,1/3,1/3,1/3",
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("alpha orbit {1}"));
    assert!(text.contains("certificate holds: yes"));

    let out = run(&[
        "witness",
        "--group",
        "gl:4",
        "--mu",
        "1,1,0,0",
        "--nu",
        "3/4,3/4,1/4,1/4",
    ]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("not the Newton point"));
}

#[test]
fn split_scan_is_clean_and_stable() {
    let out = run(&["split-scan", "--bound", "10"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("0 counterexamples, "));
    assert!(text.trim_end().ends_with(" configurations"));
    let again = run(&["split-scan", "--bound", "10"]);
    assert_eq!(out.stdout, again.stdout);

    let out = run(&["split-scan", "--bound", "6", "--verify", "--json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["counterexamples"].as_array().map(Vec::len), Some(0));
    assert_eq!(v["witness_failures"].as_array().map(Vec::len), Some(0));
    assert!(v["configurations"].as_u64().unwrap() > 0);
}

#[test]
fn env_var_overrides_the_enumeration_bound() {
    let args = ["enumerate", "--group", "a:3:galois=2", "--mu", "1,1,1"];
    let out = run(&args);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));

    let out = run_with_env(&args, &[("KOTTWITZ_DENOM_BOUND", "1")]);
    assert_eq!(code(&out), 3);
    assert!(stderr(&out).contains("cap exceeded"));

    let out = run_with_env(&args, &[("KOTTWITZ_DENOM_BOUND", "frogs")]);
    assert_eq!(code(&out), 2);
}

#[test]
fn config_file_overrides_flags() {
    let path = std::env::temp_dir().join(format!("kottwitz-cli-{}.toml", std::process::id()));
    std::fs::write(&path, "mu = \"1,0\"\n").expect("write config");
    let out = run(&[
        "enumerate",
        "--group",
        "gl:2",
        "--mu",
        "1,1",
        "--config",
        path.to_str().expect("utf8 path"),
    ]);
    std::fs::remove_file(&path).ok();
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.starts_with("B(GL2, mu=1,0)\n"), "got: {text}");
    assert!(text.ends_with("classes: 2\n"));

    let out = run(&["enumerate", "--group", "gl:2", "--mu", "1,1", "--config", "/no/such/file.toml"]);
    assert_eq!(code(&out), 2);
}
