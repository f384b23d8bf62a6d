use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use tempfile::TempDir;

const GOLDEN: &str = r#"{"machines":2,"jobs":[1,1,3]}"#;

fn ssst() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ssst"))
}

fn run(args: &[&str]) -> Output {
    ssst().args(args).output().expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = ssst()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

struct Files {
    _dir: TempDir,
    golden: String,
    cert: String,
    malformed: String,
}

fn files() -> Files {
    let dir = TempDir::new().unwrap();
    let golden = write(dir.path(), "golden.json", GOLDEN);
    let cert = write(
        dir.path(),
        "cert.json",
        r#"{"assignment":[1,1,2],"makespan":3}"#,
    );
    let malformed = write(
        dir.path(),
        "bad.json",
        r#"{"assignment":[1,1,2],"makespan":"#,
    );
    Files {
        golden: golden.to_string_lossy().into_owned(),
        cert: cert.to_string_lossy().into_owned(),
        malformed: malformed.to_string_lossy().into_owned(),
        _dir: dir,
    }
}

#[test]
fn gen_is_valid_and_deterministic() {
    let args = ["gen", "--seed", "1", "--m", "2", "--n", "3", "--pmax", "9"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["machines"], 2);
    let jobs = v["jobs"].as_array().unwrap();
    assert_eq!(jobs.len(), 3);
    assert!(jobs.iter().all(|p| (1..=9).contains(&p.as_u64().unwrap())));
    let other = run(&["gen", "--seed", "2", "--m", "2", "--n", "30", "--pmax", "9"]);
    assert_ne!(other.stdout, a.stdout);
}

#[test]
fn gen_rejects_bad_flags() {
    assert_eq!(
        run(&["gen", "--seed", "1", "--m", "1", "--n", "3", "--pmax", "9"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["gen", "--seed", "1", "--m", "2", "--n", "0", "--pmax", "9"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["gen", "--m", "2"]).status.code(), Some(2));
}

#[test]
fn count_tables() {
    let out = stdout(&run(&["count", "--m", "2", "--n", "3"]));
    for line in [
        "nodes=15",
        "schedules=8",
        "partial=6",
        "essential_formula=6",
        "essential_exact=6",
    ] {
        assert!(out.lines().any(|l| l == line), "{line} missing in {out}");
    }
    assert!(!out.contains("note:"));

    let out = stdout(&run(&["count", "--m", "3", "--n", "3"]));
    assert!(out.contains("essential_formula=24\n"));
    assert!(out.contains("essential_exact=6\n"));
    assert!(out.contains("note:"));

    let out = stdout(&run(&["count", "--m", "2", "--n", "1"]));
    assert!(out.contains("schedules=2\n"));
    assert!(out.contains("partial=0\n"));
    assert!(out.contains("essential_exact=0\n"));

    assert_eq!(
        run(&["count", "--m", "1", "--n", "3"]).status.code(),
        Some(2)
    );
}

#[test]
fn solve_methods_agree() {
    let f = files();
    for method in ["brute", "bnb"] {
        let o = run(&["solve", &f.golden, "--method", method]);
        assert_eq!(o.status.code(), Some(0));
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v["optimum"], 3);
        assert!(v["assignment"].is_array());
        assert!(v["leaves_explored"].is_u64());
        assert!(v["nodes_pruned"].is_u64());
    }
    let brute = stdout(&run(&[
        "solve",
        &f.golden,
        "--method",
        "brute",
        "--threads",
        "1",
    ]));
    assert_eq!(
        brute,
        "{\"optimum\":3,\"assignment\":[1,1,2],\"leaves_explored\":8,\"nodes_pruned\":0}\n"
    );
    let parallel = stdout(&run(&[
        "solve",
        &f.golden,
        "--method",
        "brute",
        "--threads",
        "4",
    ]));
    assert_eq!(parallel, brute);
}

#[test]
fn solve_over_budget_exits_3() {
    let dir = TempDir::new().unwrap();
    let jobs = vec!["1"; 30].join(",");
    let huge = write(
        dir.path(),
        "huge.json",
        &format!(r#"{{"machines":2,"jobs":[{jobs}]}}"#),
    );
    let o = run(&["solve", huge.to_str().unwrap(), "--method", "brute"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("budget"));
    // branch and bound has no budget
    let o = run(&["solve", huge.to_str().unwrap(), "--method", "bnb"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"optimum\":15"));
}

#[test]
fn verify_exit_codes() {
    let f = files();
    let o = run(&["verify", &f.golden, &f.cert, "--threshold", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "accept\n");

    let o = run(&["verify", &f.golden, &f.cert, "--threshold", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("reject_above_threshold"));

    let o = run(&["verify", &f.golden, &f.malformed, "--threshold", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 1"));

    let dir = TempDir::new().unwrap();
    let wrong = write(
        dir.path(),
        "w.json",
        r#"{"assignment":[1,3,1],"makespan":3}"#,
    );
    let o = run(&[
        "verify",
        &f.golden,
        wrong.to_str().unwrap(),
        "--threshold",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("reject_invalid_schedule invalid_machine_index"));
}

#[test]
fn parse_errors_are_precise() {
    let dir = TempDir::new().unwrap();
    let zero = write(dir.path(), "z.json", r#"{"machines":2,"jobs":[1,0,3]}"#);
    let o = run(&["solve", zero.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("jobs[1]"), "{}", stderr(&o));

    let extra = write(
        dir.path(),
        "e.json",
        "{\"machines\":2,\n\"jobs\":[1],\n\"speed\":3}",
    );
    let o = run(&["solve", extra.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let msg = stderr(&o);
    assert!(
        msg.contains("unknown field") && msg.contains("line 3"),
        "{msg}"
    );

    let o = run(&["solve", "/nonexistent/file.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn decide_yes_and_no() {
    let f = files();
    let dir = TempDir::new().unwrap();
    let witness = dir.path().join("witness.json");
    let o = run(&[
        "decide",
        &f.golden,
        "--threshold",
        "3",
        "--witness",
        witness.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "yes\n{\"assignment\":[1,1,2],\"makespan\":3}\n");
    let check = run(&[
        "verify",
        &f.golden,
        witness.to_str().unwrap(),
        "--threshold",
        "3",
    ]);
    assert_eq!(check.status.code(), Some(0));

    let o = run(&["decide", &f.golden, "--threshold", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "no\n");

    let o = run(&["decide", &f.golden, "--threshold", "-1"]);
    assert_eq!(o.status.code(), Some(2));
}

fn pipeline(weights: &[u64]) -> bool {
    let body = format!(
        r#"{{"weights":[{}]}}"#,
        weights
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(",")
    );
    let reduced = run_stdin(&["reduce-partition", "-"], &body);
    assert_eq!(reduced.status.code(), Some(0));
    let threshold = stderr(&reduced)
        .trim()
        .strip_prefix("threshold ")
        .unwrap()
        .to_string();
    let decided = run_stdin(
        &["decide", "-", "--threshold", &threshold],
        &stdout(&reduced),
    );
    match decided.status.code() {
        Some(0) => true,
        Some(1) => false,
        other => panic!("unexpected exit {other:?}"),
    }
}

#[test]
fn reduce_partition_output() {
    let o = run_stdin(&["reduce-partition", "-"], r#"{"weights":[2,3,5,4]}"#);
    assert_eq!(stdout(&o), "{\"machines\":2,\"jobs\":[2,3,5,4]}\n");
    assert_eq!(stderr(&o), "threshold 7\n");
    let o = run_stdin(&["reduce-partition", "-"], r#"{"weights":[1,1,3]}"#);
    assert_eq!(stderr(&o), "threshold 5/2\n");
    let o = run_stdin(&["reduce-partition", "-"], r#"{"weights":[1,0,3]}"#);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn reduce_then_decide_matches_library() {
    use ssst::reductions::{decide_partition, PartitionInstance};
    let cases: &[&[u64]] = &[
        &[2, 3, 5, 4],
        &[1, 1, 3],
        &[5, 5],
        &[1, 1, 4],
        &[7, 3, 2, 2, 6],
        &[9],
    ];
    for w in cases {
        let expected = decide_partition(&PartitionInstance::new(w.to_vec()).unwrap()).unwrap();
        assert_eq!(pipeline(w), expected, "{w:?}");
    }
}

#[test]
fn reduce_mumpsp_and_eval() {
    let f = files();
    let o = run(&["reduce-mumpsp", &f.golden]);
    assert_eq!(stdout(&o), "{\"machines\":2,\"users\":[[1,1,3]]}\n");

    let dir = TempDir::new().unwrap();
    let inst = write(dir.path(), "mu.json", r#"{"machines":2,"users":[[1],[3]]}"#);
    let sched = write(dir.path(), "s.json", r#"{"queues":[[[2,1],[1,1]],[]]}"#);
    let o = run(&[
        "eval-mumpsp",
        inst.to_str().unwrap(),
        sched.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "[4,3]\n");

    let bad = write(dir.path(), "b.json", r#"{"queues":[[[2,1]],[]]}"#);
    let o = run(&["eval-mumpsp", inst.to_str().unwrap(), bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not scheduled"));
}

#[test]
fn dot_rendering() {
    let f = files();
    let o = run(&["dot", &f.golden, "--max-level", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph ssst {"));
    assert_eq!(dot.matches("[label=\"N").count(), 15);

    let dir = TempDir::new().unwrap();
    let jobs = vec!["1"; 20].join(",");
    let wide = write(
        dir.path(),
        "w.json",
        &format!(r#"{{"machines":2,"jobs":[{jobs}]}}"#),
    );
    let o = run(&["dot", wide.to_str().unwrap(), "--max-level", "20"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn leaves_listing() {
    let f = files();
    let out = stdout(&run(&["leaves", &f.golden]));
    let lines: Vec<_> = out.lines().collect();
    assert_eq!(lines.len(), 8);
    assert_eq!(lines[0], "[1,1,1] loads=[5,0] makespan=5");
    assert_eq!(lines[1], "[1,1,2] loads=[2,3] makespan=3");
    assert_eq!(lines[7], "[2,2,2] loads=[0,5] makespan=5");
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let f = files();
    for args in [
        vec!["solve", f.golden.as_str(), "--method", "bnb"],
        vec!["solve", f.golden.as_str(), "--method", "brute"],
        vec!["count", "--m", "3", "--n", "7"],
        vec!["dot", f.golden.as_str(), "--max-level", "2"],
    ] {
        assert_eq!(run(&args).stdout, run(&args).stdout);
    }
}
