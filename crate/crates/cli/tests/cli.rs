use std::path::PathBuf;
use std::process::{Command, Output};

fn qgroup(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qgroup")).args(args).output().expect("binary runs")
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).to_string_lossy().into_owned()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("stdout is a JSON report")
}

#[test]
fn linkage_a1_window() {
    let o = qgroup(&["linkage", "--type", "A1", "--ell", "4", "--window", "0..7"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["command"], "linkage");
    assert!(v["checks"][0]["details"].as_str().unwrap().contains("5 blocks"));
    assert_eq!(v["artifacts"]["block_table"]["entries"].as_array().unwrap().len(), 8);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] != "fail"));
}

#[test]
fn linkage_rank_two_prediction_only() {
    let o = qgroup(&["linkage", "--type", "A2", "--ell", "6", "--window", "box"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["artifacts"]["block_table"]["entries"].as_array().unwrap().len(), 144);
    assert_eq!(v["checks"][1]["status"], "skip");
}

#[test]
fn empty_window_and_bad_config() {
    let o = qgroup(&["linkage", "--window", "5..4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(json(&o)["artifacts"]["block_table"]["entries"].as_array().unwrap().is_empty());
    assert_eq!(qgroup(&["linkage", "--ell", "5"]).status.code(), Some(2));
    assert_eq!(qgroup(&["linkage", "--window", "0..x"]).status.code(), Some(2));
    assert_eq!(qgroup(&["linkage", "--bogus"]).status.code(), Some(2));
}

#[test]
fn config_file_is_read() {
    let dir = std::env::temp_dir().join(format!("qgroup-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("run.cfg");
    std::fs::write(&cfg, "type = B2\nell = 4\nwindow = 0..3\nsuite = predict\n").unwrap();
    let o = qgroup(&["linkage", "--config", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["params"]["type"], "B2");
    assert_eq!(v["checks"].as_array().unwrap().len(), 1);
    let out = dir.join("report.json");
    let o = qgroup(&["linkage", "--config", cfg.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert!(o.stdout.is_empty());
    assert!(std::fs::read_to_string(&out).unwrap().contains("\"schema_version\": 1"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn frobenius_check_exit_codes() {
    for ell in ["4", "6"] {
        let o = qgroup(&["frobenius-check", "--ell", ell]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stdout));
    }
    let o = qgroup(&["frobenius-check", "--corrupt"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    let rel = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == "relations").unwrap().clone();
    assert_eq!(rel["status"], "fail");
    assert!(!rel["counterexample"][0]["relations"].as_array().unwrap().is_empty());
    assert_eq!(qgroup(&["frobenius-check", "--type", "A2", "--ell", "6"]).status.code(), Some(2));
}

#[test]
fn triple_fixtures() {
    for f in ["z4.grp", "s3.grp"] {
        let o = qgroup(&["triple-verify", &fixture(f)]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stdout));
    }
    let o = qgroup(&["triple-verify", &fixture("s3_nonnormal.grp")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not normal"));
    assert_eq!(qgroup(&["triple-verify", "/nonexistent/group.grp"]).status.code(), Some(2));
}

#[test]
fn reports_are_byte_stable() {
    for args in [
        vec!["linkage", "--window", "0..12", "--seed", "11"],
        vec!["frobenius-check", "--seed", "3"],
        vec!["triple-verify", "--seed", "5", "FIXTURE"],
    ] {
        let args: Vec<String> = args.iter().map(|a| if *a == "FIXTURE" { fixture("s3.grp") } else { a.to_string() }).collect();
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let a = qgroup(&args);
        let b = qgroup(&args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
    }
    let t = qgroup(&["linkage", "--timing"]);
    assert!(json(&t).get("timing").is_some());
}
