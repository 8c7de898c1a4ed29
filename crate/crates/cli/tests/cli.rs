use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tornheim")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

/// Output with the timing fields removed.
fn without_timing(o: &Output) -> Vec<Value> {
    json_lines(o)
        .into_iter()
        .map(|mut v| {
            v.as_object_mut().unwrap().remove("elapsed_ms");
            v
        })
        .collect()
}

#[test]
fn eval_in_the_convergent_region() {
    let o = run(&["eval", "tornheim", "2+0i", "2+0i", "2+0i"]);
    assert_eq!(o.status.code(), Some(0));
    let recs = json_lines(&o);
    assert_eq!(recs.len(), 1);
    let r = &recs[0];
    assert_eq!(r["status"], "ok");
    // ζ(2,2;2) = ζ(6)/3
    let want = std::f64::consts::PI.powi(6) / 945.0 / 3.0;
    assert!((r["value"]["re"].as_f64().unwrap() - want).abs() < 1e-12);
    assert!(r["abs_err"].as_f64().unwrap() < 1e-10);
    assert!(r.get("exact").is_none());
    assert!(r["elapsed_ms"].as_f64().is_some());
}

#[test]
fn refusals_are_records() {
    let o = run(&["eval", "zeta", "1"]);
    assert_eq!(o.status.code(), Some(1));
    let r = &json_lines(&o)[0];
    assert_eq!(r["status"], "refused");
    assert!(r["error_kind"].as_str().is_some());
    assert!(r["value"].is_null());
}

#[test]
fn negative_literals_are_arguments() {
    let o = run(&["eval", "zeta", "-1.5-2i"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_lines(&o)[0]["inputs"][0], "-1.5-2i");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["eval", "zeta", "1", "2"][..],
        &["eval", "zeta", "1+2j"],
        &["eval", "no-such-target"],
        &["verify", "no-such-suite"],
        &["table", "nothing"],
        &["frobnicate"],
        &["--output", "xml", "eval", "zeta", "2"],
        &["--tol", "-1", "eval", "zeta", "2"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn corollary_table() {
    let o = run(&["table", "corollary", "--max", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let recs = json_lines(&o);
    assert_eq!(recs.len(), 27 * 4);
    assert!(recs.iter().all(|r| r["exact"].is_string() && r["status"] == "ok"));
    let hit = recs.iter().find(|r| r["inputs"] == serde_json::json!(["0", "0", "0", "u_then"])).unwrap();
    assert_eq!(hit["exact"], "5/12");
}

#[test]
fn convolution_and_witten_tables() {
    let o = run(&["table", "convolution", "--max", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(json_lines(&o).iter().all(|r| r["exact"] == "0"));
    let o = run(&["table", "witten", "--max", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_lines(&o).len(), 4);
}

#[test]
fn verify_theorem_suite() {
    let o = run(&["verify", "theorem", "--seed", "7", "--points", "25"]);
    assert_eq!(o.status.code(), Some(0));
    let recs = json_lines(&o);
    assert_eq!(recs.len(), 26);
    assert_eq!(recs.last().unwrap()["summary"], "25/25");
    let o = run(&["--output", "text", "verify", "theorem", "--seed", "7", "--points", "25"]);
    assert_eq!(stdout(&o).lines().last(), Some("25/25"));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "convolution", "--seed", "11", "--points", "6"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(without_timing(&a), without_timing(&b));
    let a = run(&["eval", "A", "2.5+0.5i", "1.3", "2.2-0.1i"]);
    let b = run(&["eval", "A", "2.5+0.5i", "1.3", "2.2-0.1i"]);
    assert_eq!(without_timing(&a), without_timing(&b));
    // a different seed draws different points
    let c = run(&["verify", "theorem", "--seed", "12", "--points", "2"]);
    let d = run(&["verify", "theorem", "--seed", "13", "--points", "2"]);
    assert_ne!(without_timing(&c)[0]["inputs"], without_timing(&d)[0]["inputs"]);
}

#[test]
fn csv_and_text_formats() {
    let o = run(&["--output", "csv", "eval", "zeta-nonpos", "3"]);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("target,inputs,re,im"));
    assert!(lines[1].starts_with("zeta-nonpos,3,") && lines[1].contains(",1/120,ok,"), "{}", lines[1]);
    let o = run(&["--output", "text", "eval", "zeta-nonpos", "1"]);
    assert_eq!(stdout(&o).trim(), "zeta-nonpos(1) = -1/12 [ok]");
}
