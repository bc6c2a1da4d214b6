use std::process::Command;

fn cubelab() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_cubelab"));
    // an empty cache keeps the bundled fixtures in charge
    c.env("CUBELAB_OEIS_CACHE", std::env::temp_dir().join("cubelab-cli-test-empty-cache"));
    c
}

fn stdout(args: &[&str]) -> String {
    let out = cubelab().args(args).output().unwrap();
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn verify_reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    for path in [&a, &b] {
        let st = cubelab()
            .args(["verify", "--claims", "theorem2,theorem7,caf", "--n", "2..4", "--report"])
            .arg(path)
            .status()
            .unwrap();
        assert!(st.success());
    }
    let (a, b) = (std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(v["entries"].as_array().unwrap().len(), 9);
    assert_eq!(v["summary"]["fail"], 0);
}

#[test]
fn discrepancy_does_not_fail_the_run() {
    let out = cubelab().args(["verify", "--claims", "theorem3", "--n", "3..5"]).output().unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["entries"][0]["status"], "discrepancy-noted");
    assert_eq!(v["entries"][1]["status"], "pass");
}

#[test]
fn unknown_claim_is_an_error() {
    let out = cubelab().args(["verify", "--claims", "theorem8"]).output().unwrap();
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("theorem8"));
}

#[test]
fn seq_prints_index_value_lines() {
    let text = stdout(&["seq", "--id", "a072221", "--count", "5"]);
    assert_eq!(text, "0 1\n1 4\n2 25\n3 148\n4 865\n");
}

#[test]
fn plotdata_caf_has_64_rows() {
    let text = stdout(&["plotdata", "--what", "caf", "--n", "3", "--p", "1..8"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "r,p,numerator,denominator,value,logistic");
    assert_eq!(lines.len(), 65);
    assert!(lines[1].starts_with("1,1,1,8,0.125,"));
}

#[test]
fn plotdata_spectrum_powtri() {
    let text = stdout(&["plotdata", "--what", "spectrum", "--family", "powtri", "--n", "3"]);
    assert_eq!(text.lines().count(), 28);
}

#[test]
fn poisson_one_based_patterns() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["--one-based", "poisson", "--n", "3"])).unwrap();
    assert_eq!(v["best_energy_num"], "2");
    assert_eq!(v["best_energy_den"], "3");
    let pats: Vec<Vec<u64>> = serde_json::from_value(v["patterns"].clone()).unwrap();
    assert!(pats.contains(&vec![2, 3, 5, 8]) && pats.contains(&vec![1, 4, 6, 7]));
}

#[test]
fn build_then_spectrum_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("l.json");
    let st = cubelab()
        .args(["build", "--family", "tricube", "--n", "3", "--format", "json", "--out"])
        .arg(&path)
        .status()
        .unwrap();
    assert!(st.success());
    let text = stdout(&["spectrum", "--input", path.to_str().unwrap()]);
    let mults: Vec<&str> = text.lines().skip(1).map(|l| l.split(',').nth(1).unwrap()).collect();
    assert_eq!(mults, ["1", "3", "3", "3", "3", "3", "3", "1"]);
}

#[test]
fn euler_odd_degree_exits_nonzero() {
    assert!(!cubelab().args(["euler", "--n", "5"]).status().unwrap().success());
    let walk = stdout(&["euler", "--n", "3"]);
    assert_eq!(walk.split_whitespace().count(), 25);
}
