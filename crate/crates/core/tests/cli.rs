//! End-to-end runs of the `lasting-sep` binary.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_lasting-sep"));
    cmd.env_remove("LASTING_SEP_CACHE");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_in(dir: &Path, args: &[&str]) -> Output {
    bin()
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn construct_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (n, k, size) in [(8, 4, 2), (9, 3, 2), (12, 4, 6), (15, 3, 24)] {
        let file = dir.path().join(format!("f{n}_{k}.txt"));
        let file_arg = file.to_str().unwrap();
        let o = run(&[
            "construct",
            "--n",
            &n.to_string(),
            "--k",
            &k.to_string(),
            "--out",
            file_arg,
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        assert_eq!(json(&o)["size"], size);
        let text = std::fs::read_to_string(&file).unwrap();
        assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), size);
        let v = run(&["verify", "--paths", file_arg]);
        assert_eq!(v.status.code(), Some(0), "{}", stderr(&v));
        assert_eq!(json(&v)["valid"], true);
    }
}

#[test]
fn construct_text_reports_size() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("f.txt");
    let o = run(&[
        "--format",
        "text",
        "construct",
        "--n",
        "8",
        "--k",
        "4",
        "--out",
        file.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "size=2"));
    assert_eq!(
        run(&["construct", "--n", "8", "--k", "3"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let dup = dir.path().join("dup.txt");
    std::fs::write(&dup, "1,2,3,4\n2,3,4,1\n4,3,2,1\n").unwrap();
    let o = run(&[
        "verify",
        "--paths",
        dup.to_str().unwrap(),
        "--condition",
        "private-subpath",
        "--k",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));

    // same perfect matching {12, 34, 56}
    let shared = dir.path().join("shared.txt");
    std::fs::write(
        &shared,
        "# n=6 k=2 condition=private-subpath\n1,2,3,4,5,6\n1,2,4,3,5,6\n",
    )
    .unwrap();
    let o = run(&["verify", "--paths", shared.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["violations"].as_array().unwrap().len(), 1);
    assert_eq!(v["violations"][0]["first"], 1);
    assert_eq!(v["violations"][0]["second"], 2);

    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "1,2,3\n1,2,2\n").unwrap();
    let o = run(&[
        "verify",
        "--paths",
        bad.to_str().unwrap(),
        "--condition",
        "private-subpath",
        "--k",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"));

    let o = run(&[
        "verify",
        "--paths",
        dir.path().join("missing.txt").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn search_is_cached_and_repeatable() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "search",
        "--n",
        "4",
        "--k",
        "2",
        "--condition",
        "private-subpath",
    ];
    let first = run_in(dir.path(), &args);
    assert_eq!(first.status.code(), Some(0), "{}", stderr(&first));
    let v = json(&first);
    assert_eq!(v["optimum"], 3);
    assert_eq!(v["exhaustive"], true);
    assert_eq!(v["within_bounds"], true);
    assert!(!stderr(&first).contains("cache hit"));
    let second = run_in(dir.path(), &args);
    assert_eq!(second.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    assert!(stderr(&second).contains("cache hit"));
    let cache = std::fs::read_to_string(dir.path().join("lasting-sep-cache.jsonl")).unwrap();
    assert_eq!(cache.lines().count(), 1);
}

#[test]
fn search_cache_flag_and_env() {
    let dir = tempfile::tempdir().unwrap();
    let via_env = dir.path().join("env.jsonl");
    let o = bin()
        .env("LASTING_SEP_CACHE", &via_env)
        .args(["search", "--n", "4", "--k", "3"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(via_env.exists());
    let via_flag = dir.path().join("flag.jsonl");
    let o = bin()
        .env("LASTING_SEP_CACHE", &via_env)
        .args([
            "search",
            "--n",
            "4",
            "--k",
            "3",
            "--cache",
            via_flag.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(via_flag.exists());
}

#[test]
fn search_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(
        run_in(dir.path(), &["search", "--n", "9", "--k", "3"])
            .status
            .code(),
        Some(4)
    );
    assert_eq!(
        run_in(dir.path(), &["search", "--n", "4"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run_in(
            dir.path(),
            &["search", "--n", "4", "--k", "2", "--condition", "nope"]
        )
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn workers_do_not_change_output() {
    let dir = tempfile::tempdir().unwrap();
    let a = run_in(
        dir.path(),
        &[
            "--workers",
            "1",
            "search",
            "--n",
            "5",
            "--k",
            "2",
            "--cache",
            "a.jsonl",
        ],
    );
    let b = run_in(
        dir.path(),
        &[
            "--workers",
            "3",
            "search",
            "--n",
            "5",
            "--k",
            "2",
            "--cache",
            "b.jsonl",
        ],
    );
    assert_eq!(a.status.code(), Some(0));
    let (va, vb) = (json(&a), json(&b));
    assert_eq!(va["witness"], vb["witness"]);
    assert_eq!(va["optimum"], vb["optimum"]);
}

#[test]
fn bounds_and_count_output_has_no_floats() {
    for args in [
        vec!["bounds", "--n", "6", "--k", "2"],
        vec!["bounds", "--n", "25", "--k", "5"],
        vec!["count", "--n", "7"],
        vec!["gv", "--n", "10", "--d", "3"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(0));
        fn no_floats(v: &serde_json::Value) -> bool {
            match v {
                serde_json::Value::Number(n) => !n.is_f64(),
                serde_json::Value::Array(a) => a.iter().all(no_floats),
                serde_json::Value::Object(m) => m.values().all(no_floats),
                _ => true,
            }
        }
        assert!(no_floats(&json(&o)), "{args:?}");
    }
}

#[test]
fn gv_writes_code_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("code.txt");
    let o = run(&[
        "gv",
        "--n",
        "12",
        "--d",
        "7",
        "--min-weight",
        "3",
        "--out",
        file.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["triangle_separated"], true);
    let text = std::fs::read_to_string(file).unwrap();
    assert!(text.starts_with("# n=12 d=7\n"));
}

#[test]
fn check_proofs_default_range_passes() {
    let o = run(&["check-proofs"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v = json(&o);
    assert_eq!(v["all_passed"], true);
    assert_eq!(
        run(&["check-proofs", "--chain-max-n", "3"]).status.code(),
        Some(2)
    );
}

#[test]
fn usage_errors() {
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["bounds", "--n", "8"]).status.code(), Some(2));
    assert_eq!(
        run(&["--format", "yaml", "count", "--n", "4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}
