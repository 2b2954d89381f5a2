use assert_cmd::Command;
use serde_json::Value;

fn glp(args: &[&str]) -> (i32, String, String) {
    let out = Command::cargo_bin("glp").unwrap().args(args).output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn stdout(args: &[&str]) -> String {
    let (code, out, err) = glp(args);
    assert_eq!(code, 0, "{args:?} failed: {err}");
    out.trim_end().to_string()
}

#[test]
fn documented_examples() {
    assert_eq!(stdout(&["worm", "o", "1.0.1"]), "w + w");
    assert_eq!(stdout(&["worm", "omega-seq", "w"]), "0: phi(1,0); w: 1; w+1: 0");
    assert_eq!(stdout(&["ord", "cmp", "w^(w)", "phi(1,0)"]), "less");
}

#[test]
fn ordinal_commands() {
    assert_eq!(stdout(&["ord", "add", "w+1", "w^(2)"]), "w^(2)");
    assert_eq!(stdout(&["ord", "sub", "w", "w+3"]), "3");
    assert_eq!(stdout(&["ord", "ell", "w^(w)+w^(3)"]), "3");
    assert_eq!(stdout(&["ord", "cnf", "w^(w)+w^(w)+3"]), "[w, w, 0, 0, 0]");
    assert_eq!(stdout(&["ord", "whnf", "phi(1,0)"]), "e[w](1)");
    assert_eq!(stdout(&["ord", "veblen", "0", "phi(1,0)"]), "phi(1,0)");
    assert_eq!(stdout(&["ord", "cnp", "w^(2)", "w^(w)+w^(2)+1"]), "0");
    assert_eq!(stdout(&["ord", "sim", "w^(w)+1", "w^(w)+w", "w^(w)+w^(2)"]), "true");
    assert_eq!(stdout(&["ord", "factor", "w^(w)"]), "alpha: 2; zeta: 1");
    assert_eq!(stdout(&["ord", "e-enum", "1", "1"]), "phi(1,0)");
    assert_eq!(stdout(&["hyperexp", "w", "1"]), "phi(1,0)");
    assert_eq!(stdout(&["hyperlog", "2", "w^(w)"]), "1");
}

#[test]
fn worm_commands() {
    assert_eq!(stdout(&["worm", "normalize", "2.0.1"]), "2");
    assert_eq!(stdout(&["worm", "head", "1", "1.0.2"]), "1");
    assert_eq!(stdout(&["worm", "rem", "1", "1.0.2"]), "0.2");
    assert_eq!(stdout(&["worm", "rem", "0", "1.0.2"]), "T");
    assert_eq!(stdout(&["worm", "up", "w", "1"]), "w+1");
    assert_eq!(stdout(&["worm", "down", "1", "1.2"]), "0.1");
    assert_eq!(stdout(&["worm", "compare", "1", "0.1.1", "1.0.1.1.1"]), "left_below");
    assert_eq!(stdout(&["worm", "compare", "1", "1.0.1.1.1", "1.1.0.1.1"]), "incomparable");
    assert_eq!(stdout(&["worm", "omega", "w", "w"]), "1");
    assert_eq!(stdout(&["worm", "bnf", "1.0.1.1"]), "true");
    assert_eq!(stdout(&["worm", "o-at", "w", "w.w"]), "2");
    assert_eq!(stdout(&["worm", "of-ordinal", "w^(2)+w"]), "1.0.1.1");
    assert_eq!(stdout(&["worm", "coords-equal", "w", "1", "5"]), "true");
    assert_eq!(stdout(&["worm", "extremes", "1.0.2"]), "min: 0; first: 1");
    assert_eq!(stdout(&["worm", "omega-seq", "T"]), "0: 0");
}

#[test]
fn turing_commands() {
    let text = stdout(&["turing", "conservativity", "1.0.1", "1"]);
    assert!(text.starts_with("T + 1.0.1 ≡₁ T¹_1 + 0.1"), "{text}");
    let text = stdout(&["turing", "schedule", "1.0.1"]);
    assert!(text.contains("level 0: extent w + w"), "{text}");
    assert!(text.contains("level 1: extent 1; remainder 0.1"), "{text}");
    let (code, _, err) = glp(&["turing", "schedule", "w"]);
    assert_eq!(code, 2);
    assert!(err.contains("not a natural number"), "{err}");
}

#[test]
fn errors_exit_with_two() {
    let (code, _, err) = glp(&["worm", "o", "1..0"]);
    assert_eq!(code, 2);
    assert!(err.contains("position 2"), "{err}");
    let (code, _, err) = glp(&["ord", "sub", "w", "3"]);
    assert_eq!(code, 2);
    assert!(err.contains("underflow"), "{err}");
    let (code, _, _) = glp(&["worm", "down", "1", "0"]);
    assert_eq!(code, 2);
    let (code, _, _) = glp(&["worm", "coords-equal", "1.0", "0", "1"]);
    assert_eq!(code, 2);
    let (code, _, _) = glp(&["frobnicate"]);
    assert_eq!(code, 2);
    let (code, _, _) = glp(&["ord", "cmp", "1", "2", "--bogus"]);
    assert_eq!(code, 2);
}

#[test]
fn json_output_reparses() {
    let out = stdout(&["--json", "worm", "o", "w"]);
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["command"], "worm o");
    assert_eq!(doc["inputs"]["worm"], "w");
    assert_eq!(doc["result"]["sum"], "phi(1,0)");
    assert_eq!(doc["result"]["whnf"], "e[w](1)");
    for key in ["sum", "whnf"] {
        let text = doc["result"][key].as_str().unwrap();
        assert_eq!(stdout(&["ord", "cmp", text, "phi(1,0)"]), "equal");
    }

    let out = stdout(&["--json", "worm", "omega-seq", "2"]);
    let doc: Value = serde_json::from_str(&out).unwrap();
    let steps = doc["result"].as_array().unwrap();
    assert_eq!(steps.len(), 4);
    assert_eq!(steps[0]["value"]["sum"], "w^(w)");
    assert_eq!(steps[3]["start"]["sum"], "3");

    let out = stdout(&["--json", "turing", "schedule", "1.0.1"]);
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["result"]["entries"][1]["remainder"], "0.1");
    assert_eq!(doc["result"]["entries"][0]["extent"]["sum"], "w + w");
}

#[test]
fn enumerate_lists_the_universe() {
    let out = stdout(&["enumerate", "--alphabet", "0,1", "--max-length", "3"]);
    assert_eq!(out.lines().count(), 15);
    assert!(out.lines().any(|l| l == "0.1\tw + 1"));
    let (code, _, err) = glp(&["enumerate", "--alphabet", "0,1,2", "--max-length", "20"]);
    assert_eq!(code, 2);
    assert!(err.contains("too large"), "{err}");
}

#[test]
fn selftest_passes() {
    let (code, out, _) = glp(&["selftest", "--seed", "7"]);
    assert_eq!(code, 0, "{out}");
    assert!(!out.contains("[FAIL]"));
}
