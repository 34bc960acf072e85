use serde_json::Value;
use std::path::PathBuf;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("syzlab").chain(args.iter().copied());
    let code = syzlab::cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(s: &str) -> Value {
    serde_json::from_str(s).expect("JSON output")
}

fn write_temp(name: &str, text: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("syzlab-{}-{name}", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn analyze_nearly_free_quintic() {
    let (code, out, _) = run(&["analyze", "y^4z+x^5"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "analyze");
    assert_eq!(v["result"]["d"], 5);
    assert_eq!(v["result"]["r"], 1);
    assert_eq!(v["result"]["tau"], 12);
    assert_eq!(v["result"]["freeness"], "NearlyFree(1,4)");
}

#[test]
fn recognize_tangent_line_family() {
    let path = write_temp("cl2.txt", "# three components\nx\nxz + y^2\n\nxz + 2y^2\n");
    let (code, out, _) = run(&["recognize", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(code, 0);
    assert_eq!(json(&out)["result"]["tag"], "CL2");
}

#[test]
fn verify_max_tau_passes() {
    let (code, out, _) = run(&["verify", "max-tau", "--trials", "20", "--seed", "7"]);
    assert_eq!(code, 0, "{out}");
    let v = json(&out);
    assert_eq!(v["result"]["violations"], 0);
    assert_eq!(v["result"]["checks"].as_array().unwrap().len(), 140);
}

#[test]
fn same_seed_gives_identical_bytes() {
    for args in [
        &["generate", "CL3", "--m", "3", "--random-coords", "--seed", "11"][..],
        &["verify", "thm-product", "--trials", "6", "--seed", "3"][..],
        &["verify", "dpw", "--trials", "2", "--seed", "5"][..],
    ] {
        let (c1, a, _) = run(args);
        let (c2, b, _) = run(args);
        assert_eq!(c1, c2);
        assert_eq!(a, b, "{args:?}");
    }
}

#[test]
fn thread_count_does_not_change_output() {
    let args = ["verify", "min-tau", "--trials", "2", "--seed", "9"];
    std::env::set_var("SYZLAB_THREADS", "1");
    let (_, serial, _) = run(&args);
    std::env::set_var("SYZLAB_THREADS", "3");
    let (_, parallel, _) = run(&args);
    std::env::remove_var("SYZLAB_THREADS");
    assert_eq!(serial, parallel);
}

#[test]
fn input_errors_exit_with_two() {
    let (code, out, _) = run(&["analyze", "x^2 + y"]);
    assert_eq!(code, 2);
    let v = json(&out);
    assert!(!v["diagnostics"].as_array().unwrap().is_empty());

    let (code, _, _) = run(&["generate", "CL9", "--m", "3"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["recognize", "/nonexistent/curve.txt"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["no-such-command"]);
    assert_eq!(code, 2);
}

#[test]
fn generate_then_recognize() {
    let (code, text, _) = run(&["--output", "text", "generate", "CL5", "--m", "3", "--random-coords", "--seed", "4"]);
    assert_eq!(code, 0);
    let path = write_temp("cl5.txt", &text);
    let (code, out, _) = run(&["recognize", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(code, 0);
    assert_eq!(json(&out)["result"]["tag"], "CL5");
}

#[test]
fn eigen_on_cuspidal_cubic_with_line() {
    let (code, out, _) = run(&["eigen", "y(x^3-y^2z)"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["result"]["eigenscheme_degree"], 7);
}

#[test]
fn polar_reports_contracted_lines() {
    let path = write_temp("l.txt", "z\nx\ny\nx+y\nx-y\n");
    let (code, out, _) = run(&["polar", path.to_str().unwrap(), "--fibers", "5", "--seed", "1"]);
    std::fs::remove_file(&path).ok();
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["result"]["contracted_lines"].as_array().unwrap().len(), 5);
    assert_eq!(v["result"]["degree_estimate"], 3);
}
