use std::process::Command;

use minram_cli::cache::payload;
use minram_cli::parse::parse_group_spec;
use minram_cli::{run, EXIT_INPUT, EXIT_NOT_FOUND, EXIT_OK, EXIT_VERIFICATION};
use serde_json::Value;

fn call(args: &[&str]) -> (i32, Value) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["minram"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    let text = String::from_utf8(out).unwrap();
    let v = serde_json::from_str(&text).unwrap_or(Value::Null);
    (code, v)
}

fn strs(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect()
}

#[test]
fn schinzel_quadratic_example() {
    let (code, v) = call(&["--no-cache", "schinzel", "--n", "2", "--a", "1,-1", "--t-max", "10"]);
    assert_eq!(code, EXIT_OK);
    let r = &v["result"];
    assert_eq!(r["t"], "4");
    assert_eq!(strs(&r["f"]["coeffs"]), ["28", "-15", "1"]);
    assert_eq!(r["h"], "113");
    assert_eq!(r["galois"]["status"], "certified-sn");
    assert_eq!(strs(&r["ramification"]["ramified"]), ["113"]);
    assert_eq!(v["v"], 1);
}

#[test]
fn nq_search_lists_a4_in_s5() {
    let (code, v) = call(&["--no-cache", "nq-search", "--group", "C2", "--n-max", "5"]);
    assert_eq!(code, EXIT_OK);
    let hits = v["result"]["hits"].as_array().unwrap();
    assert!(hits.iter().any(|h| h["n"] == 5 && h["gamma"] == "S5" && h["h_order"] == "12"));
    assert!(hits.iter().all(|h| h["oracle_checked"] == true));
}

#[test]
fn bms_without_room_is_not_found() {
    let (code, v) = call(&["--no-cache", "bms", "--n", "2", "--p-max", "1"]);
    assert_eq!(code, EXIT_NOT_FOUND);
    assert_eq!(v["status"], "not-found");
}

#[test]
fn input_errors_exit_1() {
    assert_eq!(call(&["--no-cache", "galois", "x^2 +"]).0, EXIT_INPUT);
    assert_eq!(call(&["--no-cache", "nq-search", "--group", "(1 2"]).0, EXIT_INPUT);
    assert_eq!(call(&["--no-cache", "nq-search", "--group", "K9"]).0, EXIT_INPUT);
    assert_eq!(call(&["--no-cache", "ffield", "--n", "10"]).0, EXIT_INPUT);
    assert_eq!(call(&["--no-cache", "ffield", "--q", "3"]).0, EXIT_INPUT);
    assert_eq!(call(&["--no-cache", "bms"]).0, EXIT_INPUT);
    assert_eq!(call(&["--no-cache", "ramify", "x^2 - 1"]).0, EXIT_INPUT);
    assert_eq!(call(&["--no-cache", "schinzel", "--n", "2", "--base", "F2(T)"]).0, EXIT_INPUT);
}

#[test]
fn group_spec_examples() {
    assert_eq!(parse_group_spec("S3").unwrap().order(), 6);
    let g = parse_group_spec("(1 2 3)(4 5), (1 2)").unwrap();
    match g {
        minram::permgroup::GroupSpec::Perm { group, .. } => {
            assert_eq!(group.degree(), 5);
            assert_eq!(group.gens().len(), 2);
        }
        _ => panic!("expected generators"),
    }
    assert_eq!(parse_group_spec("(1 2").unwrap_err().offset(), Some(4));
}

#[test]
fn table_file_groups() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c3.txt");
    std::fs::write(&path, "# C3\n0 1 2\n1 2 0\n2 0 1\n").unwrap();
    let (code, v) = call(&["--no-cache", "nq-search", "--group", path.to_str().unwrap(), "--n-max", "3"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["input"]["group"]["table"][1], serde_json::json!([1, 2, 0]));
    std::fs::write(&path, "0 1\n1 x\n").unwrap();
    assert_eq!(call(&["--no-cache", "nq-search", "--group", path.to_str().unwrap()]).0, EXIT_INPUT);
}

#[test]
fn cache_records_verify_and_tampering_is_caught() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.jsonl");
    let c = cache.to_str().unwrap();
    for args in [
        vec!["--cache", c, "schinzel", "--n", "2", "--a", "1,-1", "--t-max", "10"],
        vec!["--cache", c, "bms", "--n", "3"],
        vec!["--cache", c, "ffield", "--samples", "20", "--seed", "5"],
        vec!["--cache", c, "galois", "x^5 - x - 1"],
        vec!["--cache", c, "ramify", "x^3 - 2"],
        vec!["--cache", c, "frucht", "--group", "V4", "--emit-graph"],
        vec!["--cache", c, "nq-search", "--group", "S3", "--n-max", "4"],
        vec!["--cache", c, "realize", "--group", "C3"],
    ] {
        assert_eq!(call(&args).0, EXIT_OK, "{args:?}");
    }
    let text = std::fs::read_to_string(&cache).unwrap();
    let lines: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 8);
    assert!(lines.iter().all(|r| r["timestamp"].as_str().unwrap().ends_with('Z')));
    let (code, v) = call(&["verify", c]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["result"]["verified"], 8);

    let mut bad = lines[1].clone();
    bad["result"]["r"] = "97".into();
    let tampered = dir.path().join("bad.json");
    std::fs::write(&tampered, serde_json::to_string(&bad).unwrap()).unwrap();
    let (code, v) = call(&["verify", tampered.to_str().unwrap()]);
    assert_eq!(code, EXIT_VERIFICATION);
    assert_eq!(v["result"]["failed"].as_array().unwrap().len(), 1);
}

#[test]
fn config_presets_and_argv_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.conf");
    std::fs::write(&cfg, "# budgets\nn_max = 3\nt-max = 10\nseed = 4\n").unwrap();
    let cfg = cfg.to_str().unwrap();
    let (_, v) = call(&["--no-cache", "--config", cfg, "nq-search", "--group", "C2"]);
    assert_eq!(v["input"]["n_max"], 3);
    let (_, v) = call(&["--no-cache", "--config", cfg, "nq-search", "--group", "C2", "--n-max", "4"]);
    assert_eq!(v["input"]["n_max"], 4);
    let (_, v) = call(&["--no-cache", "--config", cfg, "ffield", "--samples", "3"]);
    assert_eq!(v["input"]["seed"], 4);
    std::fs::write(dir.path().join("bad.conf"), "colour = blue\n").unwrap();
    let bad = dir.path().join("bad.conf");
    assert_eq!(call(&["--no-cache", "--config", bad.to_str().unwrap(), "bms", "--n", "2"]).0, EXIT_INPUT);
}

#[test]
fn payloads_do_not_depend_on_threads() {
    let args = |t: &'static str| ["--no-cache", "--threads", t, "bms", "--n", "4"];
    let (_, a) = call(&args("1"));
    let (_, b) = call(&args("4"));
    assert_eq!(payload(&a), payload(&b));
    assert_eq!(serde_json::to_string(&payload(&a)).unwrap(), serde_json::to_string(&payload(&b)).unwrap());
}

#[test]
fn binary_uses_env_cache_and_concurrent_appends_stay_valid() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("env.jsonl");
    let children: Vec<_> = (0..6)
        .map(|i| {
            let poly = format!("x^3 - {}", i + 2);
            Command::new(env!("CARGO_BIN_EXE_minram"))
                .env("MINRAM_CACHE", &cache)
                .args(["galois", &poly])
                .stdout(std::process::Stdio::null())
                .spawn()
                .unwrap()
        })
        .collect();
    for mut c in children {
        assert!(c.wait().unwrap().success());
    }
    let text = std::fs::read_to_string(&cache).unwrap();
    assert_eq!(text.lines().count(), 6);
    for l in text.lines() {
        let v: Value = serde_json::from_str(l).unwrap();
        assert_eq!(v["kind"], "galois");
    }
    let out = Command::new(env!("CARGO_BIN_EXE_minram")).env("MINRAM_CACHE", &cache).arg("verify").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn budget_exhaustion_exits_2() {
    let (code, v) = call(&["--no-cache", "--budget-ms", "1", "nq-search", "--group", "C3", "--n-max", "7"]);
    assert_eq!(code, EXIT_NOT_FOUND);
    assert_eq!(v["status"], "not-found");
}
