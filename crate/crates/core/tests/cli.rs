//! The `quiverforge` binary: exit codes, literal outputs and agreement with
//! the library.

use std::fs;
use std::path::PathBuf;
use std::process::Command;

use quiverforge::cluster::{enumerate_variables, ClusterSeed};
use quiverforge::hyperpotential::{from_potential, Hyperpotential, Potential, PotentialDoc};
use quiverforge::mesh::orbit::orbit_report;
use quiverforge::mesh::{OrbitCategory, OrbitSpec};
use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_quiverforge"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn run_json(args: &[&str]) -> Value {
    let (code, stdout, stderr) = run(args);
    assert_eq!(code, 0, "{args:?}: {stderr}{stdout}");
    serde_json::from_str(&stdout).unwrap()
}

#[test]
fn lambda_family_outputs() {
    let (code, out, _) = run(&["family", "lambda", "--m", "4", "--e", "2", "--field", "GF:2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "{\"jacobian_dim\":28,\"via\":\"hyperpotential\"}\n");
    let (code, out, _) = run(&[
        "family",
        "lambda",
        "--m",
        "4",
        "--e",
        "2",
        "--field",
        "GF:2",
        "--as",
        "potential",
    ]);
    assert_eq!(code, 1);
    assert_eq!(out, "{\"error\":\"potential vanishes in char 2\"}\n");
    let (code, out, _) = run(&[
        "family",
        "lambda",
        "--m",
        "4",
        "--e",
        "2",
        "--field",
        "GF(3)",
        "--as",
        "potential",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, "{\"jacobian_dim\":28,\"via\":\"potential\"}\n");
}

#[test]
fn cy_lattice_outputs() {
    let (code, out, _) = run(&[
        "cy-lattice",
        "--d1",
        "14",
        "--e1",
        "15",
        "--d2",
        "4",
        "--e2",
        "4",
        "--member",
        "2,1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, "{\"member\":true,\"coeffs\":[-1,4]}\n");
    let (code, out, _) = run(&[
        "cy-lattice",
        "--d1",
        "6",
        "--e1",
        "7",
        "--d2",
        "-2",
        "--e2",
        "-3",
        "--ratio",
        "2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "{\"D\":4,\"hom_finite\":true,\"certified\":\"L\",\"answer\":[2,1]}\n"
    );
    let (code, out, _) = run(&["cy-lattice", "--d1", "2", "--e1", "2", "--d2", "1", "--e2", "1"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("{\"error\":"));
}

#[test]
fn usage_errors_exit_2() {
    let (code, out, err) = run(&["family", "lambda", "--m", "4", "--e", "2", "--bogus"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("--bogus"));
    assert_eq!(run(&["no-such-command"]).0, 2);
    assert_eq!(run(&["family", "lambda", "--m", "4"]).0, 2);
    assert_eq!(run(&["family", "g2", "--field", "GF(4)"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn domain_errors_exit_1() {
    for args in [
        vec!["hyperpot", "check", "/nonexistent/h.json"],
        vec!["orbit", "build", "--diagram", "F4", "--g", "tau"],
        vec!["orbit", "build", "--diagram", "A4", "--g", "tau*phi"],
        vec!["orbit", "build", "--diagram", "D4", "--g", "phi"],
    ] {
        let (code, out, _) = run(&args);
        assert_eq!(code, 1, "{args:?}");
        let v: Value = serde_json::from_str(&out).unwrap();
        assert!(v["error"].is_string(), "{args:?}");
    }
}

#[test]
fn outputs_equal_library_values() {
    let h = Hyperpotential::parse_json(&fs::read_to_string(data("lambda42.json")).unwrap()).unwrap();
    assert_eq!(
        run_json(&["hyperpot", "check", &data("lambda42.json")]),
        serde_json::to_value(h.check()).unwrap()
    );
    let doc: PotentialDoc = serde_json::from_str(&fs::read_to_string(data("loop_potential.json")).unwrap()).unwrap();
    let hp = from_potential(&Potential::from_doc(&doc).unwrap());
    assert_eq!(
        run_json(&["hyperpot", "from-potential", &data("loop_potential.json")]),
        serde_json::to_value(hp.to_doc()).unwrap()
    );
    let vars: Vec<String> = enumerate_variables(&ClusterSeed::g2())
        .unwrap()
        .iter()
        .map(|v| v.to_string())
        .collect();
    assert_eq!(run_json(&["g2", "cluster-vars"]), serde_json::to_value(vars).unwrap());
    let cat = OrbitCategory::new(OrbitSpec::c_me(4, 2).unwrap());
    assert_eq!(
        run_json(&["orbit", "build", "--diagram", "D8", "--g", "(phi*tau)^4"]),
        serde_json::to_value(orbit_report(&cat).unwrap()).unwrap()
    );
}

#[test]
fn golden_outputs() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let cases: [(&str, Vec<String>); 6] = [
        (
            "transport.json",
            vec![
                "hyperpot".into(),
                "transport".into(),
                data("loop_subst.json"),
                data("loop_beta3.json"),
            ],
        ),
        (
            "d2_invalid.json",
            vec!["ginzburg".into(), "d2".into(), data("q4_invalid.json")],
        ),
        (
            "jacobian_lambda42.json",
            vec![
                "jacobian".into(),
                "dims".into(),
                data("lambda42.json"),
                "--trunc".into(),
                "11".into(),
            ],
        ),
        (
            "hochschild_loop_gf2.json",
            vec![
                "hochschild".into(),
                "table".into(),
                data("loop.json"),
                "--max-degree".into(),
                "6".into(),
                "--field".into(),
                "GF:2".into(),
            ],
        ),
        (
            "orbit_g2.json",
            ["orbit", "build", "--diagram", "E8", "--g", "tau^4"]
                .map(String::from)
                .to_vec(),
        ),
        ("exchange_g2.json", ["g2", "exchange"].map(String::from).to_vec()),
    ];
    for (name, args) in cases {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let (code, out, err) = run(&args);
        assert_eq!(code, 0, "{name}: {err}");
        let path = dir.join(name);
        if std::env::var_os("UPDATE_GOLDEN").is_some() {
            fs::write(&path, &out).unwrap();
        }
        assert_eq!(out, fs::read_to_string(&path).unwrap(), "{name}");
    }
}

#[test]
fn reports_are_deterministic() {
    let args = ["--report", "hyperpot", "check", &data("lambda42.json")];
    let (c1, a, _) = run(&args);
    let (c2, b, _) = run(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["exit_status"], 0);
    assert_eq!(v["result"]["ok"], true);
    assert!(v["input_digest"].as_str().unwrap().starts_with("sha256:"));
    let other: Value =
        serde_json::from_str(&run(&["--report", "hyperpot", "check", &data("q4_invalid.json")]).1).unwrap();
    assert_ne!(v["input_digest"], other["input_digest"]);
    let (code, out, _) = run(&[
        "--report",
        "family",
        "lambda",
        "--m",
        "2",
        "--e",
        "2",
        "--field",
        "GF:2",
        "--as",
        "potential",
    ]);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["exit_status"], 1);
    assert_eq!(v["result"]["error"], "potential vanishes in char 2");
}

#[test]
fn jobs_flag_does_not_change_output() {
    let a = run(&["--jobs", "1", "orbit", "build", "--diagram", "D4", "--g", "tau^3*phi"]);
    let b = run(&["--jobs", "4", "orbit", "build", "--diagram", "D4", "--g", "tau^3*phi"]);
    assert_eq!(a.0, 0);
    assert_eq!(a, b);
}

#[test]
fn dot_emission() {
    let (code, out, _) = run(&[
        "orbit",
        "build",
        "--diagram",
        "D8",
        "--g",
        "(phi*tau)^4",
        "--emit",
        "dot",
        "--mark",
        "0,6;-1,7;-2,6;-3,7",
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("digraph AR {"));
    assert_eq!(out.matches("fillcolor=black").count(), 4);
    let (code, out, _) = run(&["ginzburg", "d2", &data("loop_beta3.json"), "--emit", "dot"]);
    assert_eq!(code, 0);
    assert!(out.contains("t_1 (-2)"));
}
