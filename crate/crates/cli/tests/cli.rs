//! End-to-end tests of the command-line interface: grammar, exit codes,
//! file formats and output determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_plumbing"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let mut path = std::env::temp_dir();
    path.push(format!("plumbing-test-{}-{}", std::process::id(), name));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn twig_subcommands() {
    let out = run(&["twig", "adjoint", "[2,4]"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).trim(), "[2,2,3]");

    let out = run(&["twig", "det", "[2,2,3]"]);
    assert_eq!(stdout_of(&out).trim(), "7");

    let out = run(&["twig", "inductance", "[4,2]"]);
    assert_eq!(stdout_of(&out).trim(), "2/7");

    let out = run(&["twig", "ma", "[2,4]"]);
    assert_eq!(stdout_of(&out).trim(), "4");

    let out = run(&["twig", "decompose", "[2,2,1,5,1,2,2]"]);
    assert_eq!(stdout_of(&out).trim(), "Case3a(r'=4)");

    // non-admissible input to inductance is an input error
    let out = run(&["twig", "inductance", "[2,1,2]"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("admissible"));

    // a twig with no boundary decomposition is a negative verdict
    let out = run(&["twig", "decompose", "[2,3,2]"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn unknown_flags_are_errors() {
    let out = run(&["twig", "det", "[2]", "--verbose"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("--verbose"));

    let out = run(&[
        "dp",
        "contains-a2",
        "--degree",
        "3",
        "--type",
        "E6",
        "--wat",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("--wat"));
}

#[test]
fn dp_verdicts_and_exit_codes() {
    let out = run(&["dp", "contains-a2", "--degree", "3", "--type", "E6"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out).trim(), "Contains");

    let out = run(&["dp", "contains-a2", "--degree", "1", "--type", "E7"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_of(&out).trim(), "NotContains");

    let out = run(&["dp", "contains-a2", "--degree", "4", "--type", "A2,A1,A1"]);
    assert_eq!(out.status.code(), Some(0));

    let out = run(&["dp", "contains-a2", "--degree", "8", "--type", "A1"]);
    assert_eq!(stdout_of(&out).trim(), "NeedsSmoothRationalPoint");
    let out = run(&[
        "dp",
        "contains-a2",
        "--degree",
        "8",
        "--type",
        "A1",
        "--rational-point",
    ]);
    assert_eq!(stdout_of(&out).trim(), "Contains");

    // impossible high-degree pairs are input errors
    let out = run(&["dp", "contains-a2", "--degree", "6", "--type", "E6"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["dp", "table"]);
    let text = stdout_of(&out);
    assert!(text.starts_with("degree\ttype\tcontains_a2"));
    assert!(text.contains("1\tE8\tyes"));
    assert_eq!(text.lines().count(), 16);
}

#[test]
fn graph_files_text_and_json() {
    let text_path = write_temp(
        "chain.graph",
        "# a three-vertex chain\nvertex a -2\nvertex b -1\nvertex c -2\nedge a b\nedge b c\n",
    );
    let out = run(&["graph", "check", text_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr_of(&out));
    assert!(stdout_of(&out).contains("forest: yes"));

    let json_path = write_temp(
        "chain.json",
        r#"{"vertices":[{"id":"a","weight":-2},{"id":"b","weight":-1},{"id":"c","weight":-2}],
            "edges":[["a","b"],["b","c"]]}"#,
    );
    let out = run(&["graph", "check", json_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr_of(&out));

    // loops are rejected with the line number
    let bad = write_temp("loop.graph", "vertex a -1\nedge a a\n");
    let out = run(&["graph", "check", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("line 2"));

    let out = run(&["graph", "check", text_path.to_str().unwrap(), "--dot"]);
    assert!(stdout_of(&out).starts_with("graph boundary {"));

    for p in [text_path, json_path, bad] {
        let _ = std::fs::remove_file(p);
    }
}

#[test]
fn graph_contract_and_normalize() {
    let path = write_temp(
        "contractible.graph",
        "vertex a -2\nvertex b -1\nvertex c -2\nedge a b\nedge b c\n",
    );
    let out = run(&["graph", "contract", path.to_str().unwrap(), "--vertex", "b"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("vertex a -1"));
    assert!(text.contains("edge a c"));

    let out = run(&["graph", "contract", path.to_str().unwrap(), "--vertex", "a"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("weight -1"));

    let out = run(&["graph", "normalize", path.to_str().unwrap(), "--trace"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("contract b"));
    assert!(text.contains("minimal model"));
    let _ = std::fs::remove_file(path);
}

#[test]
fn catalog_gen_match_classify_round_trip() {
    let out = run(&["catalog", "gen", "21"]);
    assert_eq!(out.status.code(), Some(0));
    let gen_text = stdout_of(&out);
    let path = write_temp("family21.graph", &gen_text);

    let out = run(&["catalog", "match", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr_of(&out));
    assert!(stdout_of(&out).contains("family (21)"));

    let out = run(&["graph", "classify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr_of(&out));
    let text = stdout_of(&out);
    assert!(text.contains("contains the affine plane"));
    assert!(text.contains("Hirzebruch pair (0, -2)"));

    let _ = std::fs::remove_file(path);
}

#[test]
fn catalog_match_reports_orbit_mismatch() {
    // family (24) shape with every vertex in its own orbit block
    let out = run(&["catalog", "gen", "24", "--json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    let mut lines = String::new();
    for v in value["graph"]["vertices"].as_array().unwrap() {
        lines.push_str(&format!(
            "vertex {} {}\n",
            v["id"].as_str().unwrap(),
            v["weight"].as_i64().unwrap()
        ));
    }
    for e in value["graph"]["edges"].as_array().unwrap() {
        lines.push_str(&format!(
            "edge {} {}\n",
            e[0].as_str().unwrap(),
            e[1].as_str().unwrap()
        ));
    }
    let path = write_temp("family24-split.graph", &lines);
    let out = run(&["catalog", "match", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout_of(&out);
    assert!(text.contains("no configuration matches"));
    assert!(text.contains("orbit partition is what fails"));
    let _ = std::fs::remove_file(path);
}

#[test]
fn catalog_match_flags_du_val() {
    let out = run(&["catalog", "gen", "18", "--m", "2"]);
    let path = write_temp("family18.graph", &stdout_of(&out));
    let out = run(&["catalog", "match", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr_of(&out));
    let text = stdout_of(&out);
    assert!(text.contains("family (18) with m=2"), "{}", text);
    assert!(text.contains("Du Val D4"), "{}", text);
    let _ = std::fs::remove_file(path);
}

#[test]
fn catalog_verify_small_grid() {
    let out = run(&[
        "catalog",
        "verify",
        "--max-t",
        "0",
        "--max-m",
        "2",
        "--twig-det",
        "5",
        "--n-span",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout_of(&out));
    let text = stdout_of(&out);
    assert!(text.contains("52/52 families pass"));
    assert_eq!(text.matches("PASS").count(), 52);
}

#[test]
fn twig_pool_environment_override() {
    let pool = write_temp("pool.twigs", "[2]\n[3]\n");
    let out = bin()
        .args([
            "catalog", "verify", "--max-t", "0", "--max-m", "2", "--n-span", "0",
        ])
        .env("PLUMBING_TWIG_POOL", pool.to_str().unwrap())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stdout_of(&out));
    // family (8) enumerates exactly the two pool twigs
    let line = stdout_of(&out)
        .lines()
        .find(|l| l.starts_with("( 8)"))
        .unwrap()
        .to_string();
    assert!(line.contains("2 instances"), "{}", line);
    let _ = std::fs::remove_file(pool);
}

#[test]
fn deterministic_output() {
    for args in [
        vec!["catalog", "gen", "7", "--twig", "[2,4]", "--n", "2"],
        vec!["dp", "table"],
        vec![
            "catalog",
            "verify",
            "--max-t",
            "0",
            "--max-m",
            "2",
            "--twig-det",
            "4",
            "--n-span",
            "0",
        ],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(stdout_of(&a), stdout_of(&b));
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn user_template_files_extend_the_catalog() {
    let tpl = write_temp(
        "extra.templates",
        "version 1\nfamily 90 group I\nparams t\nchain o(-2) ! o(-(t+2)) ! o(-2)\n",
    );
    let out = run(&[
        "catalog",
        "gen",
        "90",
        "--t",
        "1",
        "--templates",
        tpl.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr_of(&out));
    assert!(stdout_of(&out).contains("vertex"));

    // header is mandatory
    let bad = write_temp("bad.templates", "family 91 group I\nchain ! o(-2)\n");
    let out = run(&["catalog", "gen", "91", "--templates", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    for p in [tpl, bad] {
        let _ = std::fs::remove_file(p);
    }
}

#[test]
fn json_outputs_parse() {
    let out = run(&["twig", "adjoint", "[2,4]", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["adjoint"], "[2,2,3]");

    let out = run(&[
        "dp",
        "contains-a2",
        "--degree",
        "2",
        "--type",
        "E6",
        "--json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["verdict"], "Contains");

    let path = write_temp(
        "norm.graph",
        "vertex a -2\nvertex b -1\nvertex c -2\nedge a b\nedge b c\n",
    );
    let out = run(&[
        "graph",
        "normalize",
        path.to_str().unwrap(),
        "--json",
        "--trace",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert!(v["steps"].is_array());
    let _ = std::fs::remove_file(path);
}
