use std::path::Path;
use std::process::Command;

use cext::file::CategoryFile;

fn cext(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_cext")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn emit(dir: &Path, gram: &str, name: &str) -> std::path::PathBuf {
    let p = dir.join(name);
    let (code, _, err) = cext(&["lattice", "--gram", gram, "--emit", p.to_str().unwrap()]);
    assert_eq!(code, 0, "{}", err);
    p
}

#[test]
fn round_trip_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    for (i, g) in ["2", "4", "2 -1; -1 2", "2 1; 1 4", "2 -1 0; -1 2 -1; 0 -1 2"].iter().enumerate() {
        let a = emit(dir.path(), g, &format!("a{}.json", i));
        let b = dir.path().join(format!("b{}.json", i));
        let (code, out, _) = cext(&["verify", a.to_str().unwrap(), "--emit", b.to_str().unwrap()]);
        assert_eq!(code, 0, "{}", out);
        assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    }
}

#[test]
fn conjugated_r_exits_one_with_named_tuple() {
    let dir = tempfile::tempdir().unwrap();
    let p = emit(dir.path(), "2", "semion.json");
    let mut f = CategoryFile::parse(&std::fs::read_to_string(&p).unwrap()).unwrap();
    let e = f.r.iter_mut().find(|e| e.tuple == ["1", "1", "0"]).unwrap();
    e.value = vec!["0".into(), "-1".into()];
    let q = dir.path().join("bad.json");
    std::fs::write(&q, f.render()).unwrap();
    let (code, out, _) = cext(&["--format", "json", "verify", q.to_str().unwrap()]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["status"], "fail");
    let failing: Vec<&serde_json::Value> = v["reports"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|r| r["failures"].as_array().unwrap().iter())
        .collect();
    assert!(failing.iter().any(|f| f["detail"].as_str().unwrap().contains("(1, 1")));
}

#[test]
fn schema_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let p = emit(dir.path(), "2", "semion.json");
    let good = std::fs::read_to_string(&p).unwrap();
    let cases = [
        good.replacen("\"unit\": \"0\"", "\"unit\": \"x\"", 1),
        good.replacen("\"schema_version\": 1", "\"schema_version\": 9", 1),
        good.replacen("\"cyclotomic_order\": 4", "\"cyclotomic_order\": 4, \"extra\": 1", 1),
        String::from("{ not json"),
    ];
    for (i, c) in cases.iter().enumerate() {
        assert_ne!(c, &good);
        let q = dir.path().join(format!("bad{}.json", i));
        std::fs::write(&q, c).unwrap();
        let (code, _, err) = cext(&["verify", q.to_str().unwrap()]);
        assert_eq!(code, 2, "case {}", i);
        assert!(err.starts_with("error:"));
    }
    let mut f = CategoryFile::parse(&good).unwrap();
    f.twist[1].value = vec!["0".into(), "1".into(), "0".into(), "1".into()];
    let q = dir.path().join("long.json");
    std::fs::write(&q, f.render()).unwrap();
    assert_eq!(cext(&["verify", q.to_str().unwrap()]).0, 2);
    assert_eq!(cext(&["verify", "/nonexistent/file.json"]).0, 2);
}

#[test]
fn lattice_reports() {
    let (code, out, _) = cext(&["lattice", "--gram", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("order 2, invariant factors [2]"));
    assert!(out.contains("1: q = 1/2"));
    let (code, out, _) = cext(&["--format", "json", "lattice", "--gram", "2 -1; -1 2"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["sections"]["group"]["order"], 3);
    assert_eq!(v["sections"]["gauss_sum"]["approx"][1], serde_json::json!(1.732051));
    assert_eq!(cext(&["lattice", "--gram", "1"]).0, 2);
    assert_eq!(cext(&["lattice", "--gram", "2 1; 1 2 3"]).0, 2);
    assert_eq!(cext(&["lattice", "--gram", "2 2; 2 2"]).0, 2);
}

#[test]
fn gram_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("a2.txt");
    std::fs::write(&p, "2 -1\n-1 2\n").unwrap();
    let (code, out, _) = cext(&["lattice", "--gram", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("order 3"));
}

#[test]
fn minimal_model_table() {
    let (code, out, _) = cext(&["minimal-model", "--m", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("central_charge:\n  1/2"));
    assert!(out.contains("h_{1,2} = 1/16"));
    assert_eq!(cext(&["minimal-model", "--m", "1"]).0, 2);
    assert_eq!(cext(&["minimal-model"]).0, 2);
}

#[test]
fn catext_and_dhr_pass_and_are_deterministic() {
    let args = ["--format", "json", "catext", "--gram", "4", "--max-len", "6", "--trials", "200", "--seed", "7"];
    let (code, a, _) = cext(&args);
    assert_eq!(code, 0);
    assert_eq!(a, cext(&args).1);
    let (code, out, _) = cext(&["dhr", "--gram", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("[PASS] dhr:"));
    assert_eq!(cext(&["catext", "--gram", "4", "--trials", "0"]).0, 2);
    assert_eq!(cext(&["dhr", "--gram", "3"]).0, 2);
    assert_eq!(cext(&["bogus"]).0, 2);
}
