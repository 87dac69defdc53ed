use qproj::cotangent::{Calculus, CalculusConfig};
use qproj::session::{SessionError, SessionFile};
use std::path::PathBuf;
use std::process::Command;

fn tmp(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

fn qproj(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qproj")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

#[test]
fn session_round_trip() {
    let calc = Calculus::construct(CalculusConfig::new(2)).unwrap();
    let path = tmp("round-trip-n2.json");
    let s = SessionFile::from_calculus(&calc, 3);
    s.save(&path).unwrap();
    let loaded = SessionFile::load(&path).unwrap();
    assert_eq!(loaded, s);
    let again = loaded.calculus().unwrap();
    assert_eq!(again.table.to_json(&again.basis), calc.table.to_json(&calc.basis));
    assert_eq!(again.gsys.dump(), calc.gsys.dump());
    assert_eq!(again.hsys.dump(), calc.hsys.dump());
}

#[test]
fn session_version_is_checked() {
    let calc = Calculus::construct(CalculusConfig::new(2)).unwrap();
    let mut s = SessionFile::from_calculus(&calc, 3);
    s.version += 1;
    let path = tmp("future-version.json");
    s.save(&path).unwrap();
    assert!(matches!(SessionFile::load(&path), Err(SessionError::Version { .. })));
}

#[test]
fn exit_codes() {
    assert_eq!(qproj(&["verify", "hopf", "--n", "1"]).0, 2);
    assert_eq!(qproj(&["verify", "nonsense", "--n", "2"]).0, 2);
    assert_eq!(qproj(&["compute", "vk", "--n", "2"]).0, 2);
    assert_eq!(qproj(&["verify", "hopf", "--session", tmp("missing.json").to_str().unwrap()]).0, 2);
    assert_eq!(qproj(&["verify", "hopf", "--n", "2"]).0, 0);
    assert_eq!(qproj(&["verify", "acs", "--n", "2", "--decomposition", "swapped"]).0, 1);
}

#[test]
fn construct_then_reuse_session() {
    let path = tmp("cli-n2.json");
    let p = path.to_str().unwrap();
    assert_eq!(qproj(&["construct", "--n", "2", "--session", p]).0, 0);
    assert_eq!(qproj(&["verify", "fodc", "--session", p, "--n", "3"]).0, 2);
    let (code, out) = qproj(&["compute", "table", "--session", p, "--format", "json"]);
    assert_eq!(code, 0);
    let (_, fresh) = qproj(&["compute", "table", "--n", "2", "--format", "json"]);
    assert_eq!(out, fresh);
}

#[test]
fn reports_are_reproducible() {
    let args = ["verify", "all", "--n", "2", "--format", "json"];
    let (code, first) = qproj(&args);
    assert_eq!(code, 0);
    let (_, second) = qproj(&args);
    assert_eq!(first, second);
    let v: serde_json::Value = serde_json::from_str(&first).unwrap();
    let entries = v["entries"].as_array().unwrap();
    assert!(entries.iter().all(|e| e["status"] != "FAIL"));
}

#[test]
fn computed_dimensions() {
    let (_, out) = qproj(&["compute", "i2", "--n", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["dim"], 3);
    let (_, out) = qproj(&["compute", "vk", "--n", "2", "--k", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["dim"], 1);
    let (_, out) = qproj(&["compute", "topform", "--n", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["total_det_power"], 0);
}
