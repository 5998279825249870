use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", name]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gradelift"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn failure(args: &[&str]) -> (i32, String) {
    let out = run(args);
    assert!(out.stdout.is_empty());
    (out.status.code().unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn groebner_basis_of_the_weyl_algebra() {
    assert_eq!(
        stdout(&["gb", &fixture("weyl.alg"), "--degree-bound", "6"]),
        "Y*X - X*Y - 1\nstatus: complete\n"
    );
    let json: serde_json::Value = serde_json::from_str(&stdout(&["gb", &fixture("weyl.alg"), "--json"])).unwrap();
    assert_eq!(json["basis"][0], "Y*X - X*Y - 1");
    assert_eq!(json["status"]["kind"], "complete");
}

#[test]
fn chains_of_the_triangular_set() {
    let out = stdout(&["chains", &fixture("triangular.alg")]);
    assert!(out.contains("C_2 = {X3*X2*X1}\n"));
    assert!(out.contains("C_3 = {}\n"));
    assert!(out.ends_with("gl.dim ≤ 3\n"));
    let out = stdout(&["chains", &fixture("right_noetherian.alg"), "--depth", "4"]);
    assert!(out.ends_with("gl.dim: no bound (chains of every length)\n"));
}

#[test]
fn hilbert_counts_of_the_staircase() {
    let out = stdout(&["hilbert", &fixture("staircase.alg"), "--depth", "5"]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("1 2 3 4 5 6"));
    assert_eq!(lines.next(), Some("series: 1/(1 - 2t + t^2)"));
    assert_eq!(lines.next(), Some("status: complete"));
}

#[test]
fn normal_form_in_the_weyl_algebra() {
    let out = stdout(&["nf", &fixture("weyl.alg"), "--poly", "Y*X*X"]);
    assert_eq!(out, "X*X*Y + 2*X\nstatus: complete\n");
}

#[test]
fn graphs_as_text_and_dot() {
    let out = stdout(&["graph", &fixture("right_noetherian.alg")]);
    assert_eq!(out, "vertices: X, Y\nX -> Y [Y]\nY -> Y [Y]\n");
    let dot = stdout(&["graph", &fixture("right_noetherian.alg"), "--dot"]);
    assert!(dot.starts_with("digraph ufnarovski {"));
    assert!(dot.contains("n0 -> n1 [label=\"Y\"];"));
    let dot = stdout(&["graph", &fixture("triangular.alg"), "--dot", "--chain"]);
    assert!(dot.starts_with("digraph chains {"));
    assert_eq!(dot.matches("->").count(), 6);
}

#[test]
fn report_and_analyze() {
    let text = stdout(&["report", &fixture("weyl.alg"), "--degree-bound", "6", "--depth", "4"]);
    let json: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(json["schema_version"], 1);
    assert_eq!(json["targets"]["quotient_algebra"]["pbw"]["value"], "yes");
    let invocation = json["invocation"].as_str().unwrap();
    assert!(invocation.starts_with("gradelift report ") && invocation.ends_with("--degree-bound 6 --depth 4"));
    let analyzed: serde_json::Value =
        serde_json::from_str(&stdout(&["analyze", &fixture("pbw3.alg"), "--json", "--depth", "3"])).unwrap();
    assert_eq!(
        analyzed["targets"]["quotient_algebra"]["gldim_bound"]["value"]["value"],
        3
    );
    let table = stdout(&["analyze", &fixture("square_root.alg"), "--depth", "3"]);
    assert!(table.contains("domain"));
}

#[test]
fn every_fixture_runs_every_command() {
    for name in [
        "weyl.alg",
        "triangular.alg",
        "staircase.alg",
        "pbw3.alg",
        "right_noetherian.alg",
        "square_root.alg",
    ] {
        for cmd in ["gb", "analyze", "hilbert", "graph", "chains", "report"] {
            stdout(&[cmd, &fixture(name), "--depth", "4"]);
        }
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["report".to_owned(), fixture("pbw3.alg")],
        vec!["graph".to_owned(), fixture("square_root.alg"), "--dot".to_owned()],
        vec!["analyze".to_owned(), fixture("weyl.alg")],
    ] {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        assert_eq!(stdout(&args), stdout(&args));
    }
}

#[test]
fn writes_to_a_file() {
    let dir = std::env::temp_dir().join(format!("gradelift-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("gb.txt");
    let out = run(&["gb", &fixture("weyl.alg"), "--out", path.to_str().unwrap()]);
    assert!(out.status.success() && out.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        "Y*X - X*Y - 1\nstatus: complete\n"
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes_and_error_prefixes() {
    let (code, err) = failure(&["gb", &fixture("weyl.alg"), "--degree-bound", "1"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error[compute]: "), "{err}");

    let (code, err) = failure(&["gb", "/nonexistent/input.alg"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error[input]: "), "{err}");

    let (code, err) = failure(&["gb", &fixture("weyl.alg"), "--bogus"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error[usage]: "), "{err}");

    let (code, err) = failure(&["frobnicate"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error[usage]: "), "{err}");

    let (code, err) = failure(&["gb", &fixture("weyl.alg"), "--degree-bound", "0"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error[usage]: "), "{err}");

    let (code, err) = failure(&["nf", &fixture("weyl.alg"), "--poly", "Z*X"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error[usage]: --poly: "), "{err}");

    let (code, err) = failure(&["gb", &fixture("weyl.alg"), "--out", "/nonexistent/dir/out.txt"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error[output]: "), "{err}");

    let bad = std::env::temp_dir().join(format!("gradelift-bad-{}.alg", std::process::id()));
    std::fs::write(&bad, "generators: X < Y\nX*Q\n").unwrap();
    let (code, err) = failure(&["gb", bad.to_str().unwrap()]);
    std::fs::remove_file(&bad).unwrap();
    assert_eq!(code, 1);
    assert!(
        err.starts_with("error[input]: ") && err.contains("2:3: unknown generator `Q`"),
        "{err}"
    );

    let help = run(&["--help"]);
    assert_eq!(help.status.code(), Some(0));
    assert!(String::from_utf8(help.stdout).unwrap().contains("Usage"));
}
