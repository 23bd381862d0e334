use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_springer-points")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn enumerate_standard_text() {
    let out = run(&["enumerate", "--shape", "2,2,1", "--kind", "standard"]);
    assert!(out.status.success());
    let lines: Vec<String> = stdout(&out).lines().map(String::from).collect();
    assert_eq!(lines.len(), 5);
    assert!(lines.contains(&"1,2/3,4/5".to_string()));
}

#[test]
fn enumerate_json() {
    let out = run(&["enumerate", "--shape", "2,1", "--format", "json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(value.as_array().unwrap().len(), 3);
    assert_eq!(value[0]["shape"], serde_json::json!([2, 1]));
}

#[test]
fn schubert_point_with_monomial() {
    let out = run(&["schubert-point", "--shape", "2,2,1", "--tableau", "1,2/3,4/5", "--monomial"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("word: s3 s4 s3 s2"));
    assert!(text.contains("monomial: x_5^2x_4x_3"));
}

#[test]
fn poincare_both_sides() {
    let out = run(&["poincare", "--shape", "2,2,1", "--format", "json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(value["springer"], serde_json::json!([1, 4, 9, 11, 5]));
    assert_eq!(value["schubert"], value["springer"]);
    let out = run(&["poincare", "--shape", "3,1,1,1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn delete_with_trace() {
    let args = ["delete", "--shape", "2,2,2,2,1,1,1", "--tableau", "1,2/3,5/4,10/6,8/7/11/9", "--string", "10", "--pos", "4", "--trace"];
    let out = run(&args);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("result: (s10)(s9)(s4s5s6s7s8)(s7)(s3s4s5s6)(s3s4s5)(s3s4)(s2s3)(s2)(e)"));
    assert!(text.contains("schubert point of: 1,2/3,11/5,10/6,8/7/9/4"));
    assert!(text.contains("{10}"));
}

#[test]
fn delete_counterexample_exits_one() {
    let out = run(&["delete", "--shape", "3,1,1,1", "--tableau", "1,3,5/2/4/6", "--string", "5", "--pos", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("schubert point of: none"));
    let traced = run(&["delete", "--shape", "3,1,1,1", "--tableau", "1,3,5/2/4/6", "--string", "5", "--pos", "2", "--trace"]);
    assert_eq!(traced.status.code(), Some(2));
}

#[test]
fn verify_claims() {
    let out = run(&["verify", "--shape", "2,2,1", "--claim", "theorem1", "--format", "json"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with(r#"{"shape":[2,2,1],"claim":"theorem1","verdict":"holds""#));
    let out = run(&["verify", "--shape", "3,1,1,1", "--claim", "closure"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("witness [4,1,3,2,6,5] = s5 s2 s3 s2 s1"));
    let out = run(&["verify", "--shape", "3,1,1,1", "--claim", "theorem1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_dominance() {
    let out = run(&["verify", "dominance", "--shape", "3,2", "--versus", "2,2,1"]);
    assert!(out.status.success());
    let out = run(&["verify", "dominance", "--shape", "2,2,1", "--versus", "3,2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn scan_invalid_only() {
    let out = run(&["scan", "--family", "invalid-only", "--max-n", "6", "--jobs", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let lines: Vec<serde_json::Value> =
        stdout(&out).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[1]["claim"], "closure");
    assert_eq!(lines[1]["verdict"], "fails");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["enumerate", "--shape", "1,2"]).status.code(), Some(2));
    assert_eq!(run(&["schubert-point", "--shape", "2,1", "--tableau", "1,2/2"]).status.code(), Some(2));
    assert_eq!(run(&["scan", "--family", "wide", "--max-n", "3"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--claim", "closure"]).status.code(), Some(2));
}
