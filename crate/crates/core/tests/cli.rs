//! The command-line front end, driven in-process.

use skeintail::cli::{run_from, Outcome, EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_RESOURCE};

fn run(args: &[&str]) -> Outcome {
    run_from(std::iter::once("skeintail").chain(args.iter().copied()))
}

#[test]
fn cjp_rows() {
    let out = run(&["cjp", "--knot", "10_154m", "--N", "2"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert!(out.stdout.starts_with("10_154m N=2: 1 - 2q + 2q^2 - 3q^3 + 2q^4"), "{}", out.stdout);
    let out = run(&["cjp", "--knot", "unknot", "--N", "7"]);
    assert_eq!(out.stdout, "unknot N=7: 1\n");
    let out = run(&["cjp", "--pd", "X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]", "--N", "2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["coefficients"], serde_json::json!([1, -1, 0, -1]));
    assert_eq!(v["N"], 2);
    assert_eq!(v["writhe"], -3);
}

#[test]
fn tails_and_heads() {
    let out = run(&["tail", "--knot", "10_154m", "--order", "3"]);
    assert_eq!(out.stdout, "10_154m tail (order 3): 1 - 2q - q^2\n");
    let out = run(&["tail", "--knot", "rtrefoil", "--order", "4"]);
    assert_eq!(out.stdout, "rtrefoil tail (order 4): 1 + 0q + 0q^2 + 0q^3\n");
    let h = run(&["head", "--knot", "10_154m", "--order", "2", "--json"]);
    let t = run(&["tail", "--knot", "10_154", "--order", "2", "--json"]);
    assert_eq!(h.stdout, t.stdout);
    let v: serde_json::Value = serde_json::from_str(&run(&["tail", "--knot", "ltrefoil", "--order", "3", "--json"]).stdout).unwrap();
    assert_eq!(v["coefficients"], serde_json::json!([1, -1, -1]));
    assert_eq!(v["colors_used"], serde_json::json!([3, 4]));
    assert_eq!(v["stable"], true);
}

#[test]
fn state_reports() {
    let out = run(&["fibered", "--knot", "rtrefoil"]);
    assert!(out.stdout.starts_with("tree: yes, β_A = 0\n"));
    let out = run(&["fibered", "--knot", "10_154m"]);
    assert!(out.stdout.starts_with("tree: no, β_A = 2\n"));
    let out = run(&["adequacy", "--pd", "X[1,2,2,1]"]);
    assert_eq!(out.stdout, "A-adequate: no\nB-adequate: yes\n");
    let out = run(&["fibered", "--knot", "kink_neg"]);
    assert_eq!(out.code, EXIT_PRECONDITION);
}

#[test]
fn verify_suites() {
    let out = run(&["verify", "junkterms", "--amax", "3", "--bmax", "3"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout.matches("PASS").count(), 9);
    let out = run(&["verify", "move", "--knot", "10_154m", "--order", "3"]);
    assert_eq!(out.code, EXIT_OK, "{}{}", out.stdout, out.stderr);
    assert!(out.stdout.ends_with("PASS\n"));
    let out = run(&["verify", "mainlemma", "--knot", "ltrefoil", "--n", "2"]);
    assert_eq!(out.code, EXIT_OK);
    let out = run(&["verify", "theta", "--knot", "ltrefoil", "--order", "5"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    let out = run(&["verify", "theta", "--knot", "ltrefoil", "--order", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["pass"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["cjp", "--knot", "nope", "--N", "2"]).code, EXIT_PARSE);
    assert_eq!(run(&["cjp", "--pd", "X[1,2,3]", "--N", "2"]).code, EXIT_PARSE);
    assert_eq!(run(&["cjp", "--N", "2"]).code, EXIT_PARSE);
    assert_eq!(run(&["frobnicate"]).code, EXIT_PARSE);
    assert_eq!(run(&["tail", "--knot", "kink_neg", "--order", "2"]).code, EXIT_PRECONDITION);
    assert_eq!(run(&["cjp", "--knot", "10_154m", "--N", "7"]).code, EXIT_RESOURCE);
    assert_eq!(run(&["cjp", "--knot", "ltrefoil", "--N", "4", "--budget", "3"]).code, EXIT_RESOURCE);
    assert_eq!(run(&["--help"]).code, EXIT_OK);
}

#[test]
fn custom_corpus_file() {
    let dir = std::env::temp_dir().join(format!("skeintail-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("corpus.txt");
    std::fs::write(&path, "tref: X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]\n").unwrap();
    let p = path.to_str().unwrap();
    let out = run(&["tail", "--corpus", p, "--knot", "tref", "--order", "2"]);
    assert_eq!(out.stdout, "tref tail (order 2): 1 - q\n");
    assert_eq!(run(&["tail", "--corpus", p, "--knot", "rtrefoil", "--order", "2"]).code, EXIT_PARSE);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn deterministic_and_consistent() {
    let args = ["cjp", "--knot", "6_2", "--N", "3"];
    assert_eq!(run(&args), run(&args));
    let text = run(&args).stdout;
    let json: serde_json::Value = serde_json::from_str(&run(&["cjp", "--knot", "6_2", "--N", "3", "--json"]).stdout).unwrap();
    let coeffs: Vec<i64> = json["coefficients"].as_array().unwrap().iter().map(|c| c.as_i64().unwrap()).collect();
    let rendered = skeintail::cjp::render_series(&coeffs, false);
    assert_eq!(text, format!("6_2 N=3: {rendered}\n"));
}
