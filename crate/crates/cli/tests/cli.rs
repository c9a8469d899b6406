use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_nf-forge"));
    c.env_remove("NF_FORGE_JOBS");
    c
}

fn corpus(name: &str) -> String {
    format!("{}/../../corpus/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn stratify_bundled_corpora() {
    let o = run(&["stratify", &corpus("definitions.nf")]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.starts_with("name\texpected\tgot\teigen_index\tdetail\n"));
    assert!(!out.contains("MISMATCH"));
    let o = run(&["stratify", &corpus("negatives.nf"), "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["mismatched"], 0);
    assert!(v["records"].as_array().unwrap().iter().all(|r| r["got"] == "Unstratified"));
}

#[test]
fn stratify_stdin_with_expectation() {
    let o = run_stdin(&["stratify", "--expect", "FAIL", "-"], "x in x\n");
    assert_eq!(code(&o), 0);
    let o = run_stdin(&["stratify", "--expect", "PASS", "-"], "x in x\n");
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("MISMATCH"));
    let o = run_stdin(
        &["stratify", "--expect", "PASS", "--mode", "strat-wrt:x", "-"],
        "x in FIN -> ssc(x) in FIN\n",
    );
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("WeaklyStratified"));
}

#[test]
fn stratify_exit_codes() {
    // empty corpus: nothing to mismatch
    assert_eq!(code(&run_stdin(&["stratify", "-"], "# nothing\n")), 0);
    // malformed record
    assert_eq!(code(&run_stdin(&["stratify", "-"], "a\tPASS\tstrat\n")), 2);
    // a record that does not parse is a mismatch
    assert_eq!(code(&run_stdin(&["stratify", "-"], "a\tPASS\tstrat\tx in\n")), 1);
    assert_eq!(code(&run(&["stratify", "/nonexistent/corpus.nf"])), 2);
    assert_eq!(code(&run_stdin(&["stratify", "--mode", "weird", "-"], "")), 2);
}

#[test]
fn eval_examples() {
    let o = run(&["eval", "exp2(two)", "--n", "3"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "C(level=3, size=4) = four\n");
    let o = run(&["eval", "succ(succ(succ(succ(zero))))", "--n", "3"]);
    assert_eq!(stdout(&o), "C(level=2, OVERFLOW)\n");
    let o = run(&["eval", "T(zero)", "--n", "3"]);
    assert_eq!(stdout(&o), "C(level=3, size=0) = zero\n");
    let o = run(&["eval", "{Lambda, {Lambda}}", "--n", "1", "--level", "1"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn eval_exit_codes() {
    assert_eq!(code(&run(&["eval", "plus(one,", "--n", "3"])), 2);
    assert_eq!(code(&run(&["eval", "usc(x)", "--n", "3"])), 2);
    // 2^m lives at level 3, above the top set level when L = 1
    let o = run(&["eval", "exp2(two)", "--n", "3", "--L", "1"]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("exceeds the enumerated universe"));
    assert_eq!(code(&run(&["eval", "zero", "--n", "5"])), 3);
}

#[test]
fn universe_stats_sizes() {
    let o = run(&["universe-stats", "--n", "3", "--L", "2"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("U0\t3\nU1\t8\nU2\t256\n"), "{out}");
    assert!(out.contains("F(2)\t0 1 2 3\n"));
    assert!(out.contains("SF(2)\t0 1 2 3 OVERFLOW\n"));
    assert!(out.contains("G(2)\t"));
    let out = stdout(&run(&["universe-stats", "--n", "0", "--L", "2"]));
    assert!(out.contains("U0\t0\nU1\t1\nU2\t2\n"), "{out}");
    let out = stdout(&run(&["universe-stats", "--n", "4", "--L", "2"]));
    assert!(out.contains("U0\t4\nU1\t16\nU2\t65536\n"), "{out}");
    assert_eq!(code(&run(&["universe-stats", "--n", "4", "--L", "3"])), 3);
}

#[test]
fn check_selection_and_formats() {
    let o = run(&["check", "--n", "3", "--select", "lemma:exp*", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let checks = v["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["id"].as_str().unwrap().starts_with("lemma:exp")));
    assert_eq!(v["summary"]["fail"], 0);
    let o = run(&["check", "--n", "2", "--select", "theorem:*", "--format", "tsv"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("id\tstatus\tinstances\tvacuity\tmillis\tdetail\n"));
}

#[test]
fn check_small_universe_and_errors() {
    let o = run(&["check", "--n", "1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("fail=0"));
    assert_eq!(code(&run(&["check", "--select", "lemma:nope"])), 2);
    assert_eq!(code(&run(&["check", "--n", "4"])), 2);
    assert_eq!(code(&run(&["check", "--mutate", "nonsense"])), 2);
    let o = run(&["check", "--n", "3", "--select", "lemma:addition2", "--mutate", "add_no_disjoint"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("fail=1"));
}

#[test]
fn large_universe_caps_base_levels() {
    let o = run(&["check", "--n", "4", "--large", "--select", "lemma:Tsum,lemma:exp_two", "--format", "json"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["universe"]["n"], 4);
    for c in v["checks"].as_array().unwrap() {
        for l in c["levels"].as_array().unwrap() {
            assert!(l.as_u64().unwrap() <= 2, "{c}");
        }
    }
}

#[test]
fn jobs_env_does_not_change_output() {
    let a = run(&["check", "--n", "2", "--format", "json"]);
    let b = bin()
        .env("NF_FORGE_JOBS", "3")
        .args(["check", "--n", "2", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}
