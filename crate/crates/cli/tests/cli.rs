use std::io::Write;
use std::process::{Command, Output, Stdio};

fn embtree(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_embtree"))
        .args(args)
        .env_remove("EMBTREE_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let o = embtree(args);
    assert!(
        o.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    String::from_utf8(o.stdout).unwrap()
}

#[test]
fn catalan_json() {
    assert_eq!(
        stdout(&["trees", "--order", "5"]),
        "{\"order\":5,\"coeffs\":[\"1\",\"1\",\"2\",\"5\",\"14\"]}\n"
    );
}

#[test]
fn csv_output() {
    let out = stdout(&[
        "--format",
        "csv",
        "trees",
        "--weights",
        "1,0,1,0,0",
        "--order",
        "4",
    ]);
    assert_eq!(
        out,
        "n,numerator,denominator\n0,1,1\n1,3,1\n2,12,1\n3,57,1\n"
    );
}

#[test]
fn bounded_binary_trees() {
    let out = stdout(&["trees", "--j", "0", "--order", "8"]);
    assert!(
        out.contains("[\"1\",\"1\",\"1\",\"2\",\"4\",\"10\",\"26\",\"73\"]"),
        "{out}"
    );
    assert!(stdout(&["trees", "--j", "-1", "--order", "3"]).contains("[\"1\",\"0\",\"0\"]"));
    assert!(!embtree(&["trees", "--j", "-2"]).status.success());
}

#[test]
fn dary_and_paths() {
    assert!(
        stdout(&["dary", "--kind", "odd", "--d", "1", "--order", "5"])
            .contains("[\"1\",\"1\",\"3\",\"12\",\"55\"]")
    );
    let closed = stdout(&[
        "paths",
        "--steps=-1:1,0:1,1:1",
        "--excursions",
        "--order",
        "7",
    ]);
    assert!(closed.contains("[\"1\",\"1\",\"2\",\"4\",\"9\",\"21\",\"51\"]"));
    let oracle = stdout(&[
        "paths",
        "--steps=-1:1,0:1,1:1",
        "--excursions",
        "--oracle",
        "--order",
        "7",
    ]);
    assert_eq!(closed, oracle);
    let marked = stdout(&["paths", "--mark-endpoint", "--level", "1", "--order", "4"]);
    let v: serde_json::Value = serde_json::from_str(&marked).unwrap();
    assert_eq!(v["final_levels"]["4"]["coeffs"][3], "1");
    let dp = stdout(&[
        "paths",
        "--mark-endpoint",
        "--level",
        "1",
        "--order",
        "4",
        "--oracle",
    ]);
    assert_eq!(marked, dp);
}

#[test]
fn walkers_closed_form_and_oracle_agree() {
    for extra in [
        vec!["--boundary", "updown", "--i", "2", "--j", "1"],
        vec![
            "--mode",
            "randomturn",
            "--steps",
            "motzkin",
            "--boundary",
            "osculating",
            "--i",
            "0",
            "--j",
            "0",
        ],
        vec!["--u", "1/2", "--w", "3", "--i", "1", "--j", "2"],
        vec!["--quarter-plane", "s2", "--i", "1", "--j", "0"],
    ] {
        let mut a = vec!["walkers", "--order", "10"];
        a.extend(&extra);
        let closed = stdout(&a);
        a.push("--oracle");
        assert_eq!(closed, stdout(&a), "{extra:?}");
    }
    let o = embtree(&[
        "walkers",
        "--boundary",
        "osculating",
        "--i",
        "0",
        "--j",
        "0",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--oracle"));
    assert!(
        !embtree(&["walkers", "--mode", "lockstep", "--steps", "motzkin"])
            .status
            .success()
    );
}

#[test]
fn oeis_matching_is_offline() {
    let catalan = stdout(&["trees", "--order", "14"]);
    let mut child = Command::new(env!("CARGO_BIN_EXE_embtree"))
        .args(["oeis", "--match", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(catalan.as_bytes())
        .unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(String::from_utf8(o.stdout).unwrap(), "A000108\n");
    let o = embtree(&["oeis", "--fetch", "A000108"]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("network access is disabled"));
    assert_eq!(stdout(&["oeis", "--list"]).lines().count(), 7);
}

#[test]
fn verify_reports_and_exit_status() {
    let out = stdout(&[
        "verify", "--suite", "kernel", "--order", "20", "--jobs", "2",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 2);
    assert!(checks.iter().all(|c| c["status"] == "pass"));
    assert_eq!(
        checks[0]["reproducer"],
        "embtree verify --only kernel.fuss-catalan --order 20"
    );
    let conj = stdout(&["verify", "--only", "conjecture.alpha", "--order", "20"]);
    assert!(conj.contains("\"conjecture-consistent\""));
    assert_eq!(
        embtree(&["verify", "--only", "no.such.check"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn config_file_with_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("campaign.txt");
    std::fs::write(
        &cfg,
        "# kernel only\nsuites = kernel\njobs = 2\norder = 15\n",
    )
    .unwrap();
    let out = stdout(&[
        "--format",
        "csv",
        "verify",
        "--config",
        cfg.to_str().unwrap(),
        "--only",
        "kernel.small-factor",
    ]);
    assert_eq!(out.lines().count(), 2, "{out}");
    assert!(out.contains("order 15"));
    let out = stdout(&[
        "--format",
        "csv",
        "verify",
        "--config",
        cfg.to_str().unwrap(),
        "--order",
        "12",
    ]);
    assert!(out.contains("n<12"), "{out}");
    std::fs::write(&cfg, "suites = kernel\njobs = many\n").unwrap();
    let o = embtree(&["verify", "--config", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn cache_is_transparent() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let plain = stdout(&[
        "trees",
        "--weights",
        "0,0,0,1,1",
        "--j",
        "2",
        "--order",
        "12",
    ]);
    let first = stdout(&[
        "--cache-dir",
        d,
        "trees",
        "--weights",
        "0,0,0,1,1",
        "--j",
        "2",
        "--order",
        "12",
    ]);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    let second = stdout(&[
        "--cache-dir",
        d,
        "trees",
        "--weights",
        "0,0,0,1,1",
        "--j",
        "2",
        "--order",
        "12",
    ]);
    assert_eq!(plain, first);
    assert_eq!(first, second);
}
