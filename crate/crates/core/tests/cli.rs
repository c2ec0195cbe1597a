use std::collections::BTreeMap;
use std::process::Command;

use clap::Parser;
use qbrauer::algebra::{AlgebraElement, QBrauer};
use qbrauer::coeff::FieldElem;
use qbrauer::cli::{parse_element, run, Cli, Format};
use serde_json::Value;

fn bin(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qbrauer")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn report(args: &[&str]) -> (bool, String, Value) {
    let mut full = vec!["qbrauer"];
    full.extend_from_slice(args);
    let cli = Cli::parse_from(full);
    let o = run(&cli).unwrap_or_else(|e| panic!("{e}"));
    (o.passed, o.render(Format::Text), o.json)
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(format!("{}/testdata/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

#[test]
fn canonical_basis_matches_golden_files() {
    for n in ["2", "3"] {
        for (dual, file) in [(false, format!("canonical_n{n}.json")), (true, format!("dual_canonical_n{n}.json"))] {
            let mut args = vec!["canonical-basis", "--n", n, "--format", "json"];
            if dual {
                args.push("--dual");
            }
            let (code, out, _) = bin(&args);
            assert_eq!(code, 0);
            assert_eq!(out, golden(&file), "{file}");
        }
    }
}

#[test]
fn rank_two_text() {
    let (passed, text, _) = report(&["canonical-basis", "--n", "2"]);
    assert!(passed);
    assert_eq!(text, "C_e = H_e\nC_0 = H_0\nC_1 = H_1 + q^-1*H_0\n");
}

#[test]
fn multiply_in_canonical_basis() {
    let (_, text, json) = report(&["multiply", "--n", "3", "--lhs", "C_1", "--rhs", "C_2e"]);
    assert_eq!(text.trim(), "C_12e + C_e");
    assert!(json["result"]["canonical"].is_array());
    let (_, text, _) = report(&["multiply", "--n", "3", "--lhs", "C_{2e}", "--rhs", "C_{e2}"]);
    assert_eq!(text.trim(), "((q*z - q*z^-1)/(q^2 - 1))*C_2e2");
}

#[test]
fn element_inputs_agree() {
    let alg = QBrauer::new(3).unwrap();
    let mut tables = BTreeMap::new();
    let mut p = |s: &str| parse_element(&alg, s, &mut tables, 5).unwrap().0;
    let word = p("H1*H2*e");
    assert_eq!(word, p("H_12e"));
    let diagram = format!("{}", word.terms().next().unwrap().0);
    assert_eq!(word, p(&diagram));
    let mut c1 = p("H1");
    c1.add_scaled(&p("{1-1', 2-2', 3-3'}"), &FieldElem::q_pow(-1));
    assert_eq!(p("C_1"), c1);
    assert_eq!(p("H_1"), p("H1"));
}

#[test]
fn json_output_round_trips() {
    let alg = QBrauer::new(3).unwrap();
    let (_, _, json) = report(&["multiply", "--n", "3", "--lhs", "C_2e", "--rhs", "C_e2"]);
    let standard = &json["result"]["standard"];
    let mut tables = BTreeMap::new();
    let x = parse_element(&alg, &standard.to_string(), &mut tables, 5).unwrap().0;
    let lhs = parse_element(&alg, "C_2e", &mut tables, 5).unwrap().0;
    let rhs = parse_element(&alg, "C_e2", &mut tables, 5).unwrap().0;
    assert_eq!(x, alg.multiply(&lhs, &rhs));
    let (_, _, basis) = report(&["canonical-basis", "--n", "3", "--format", "json"]);
    for rec in basis["result"]["basis"].as_array().unwrap() {
        let c = AlgebraElement::from_json(&rec["expansion"], 3).unwrap();
        let label = format!("C_{}", rec["label"].as_str().unwrap());
        assert_eq!(c, parse_element(&alg, &label, &mut tables, 5).unwrap().0);
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["brauer-oracle", "--n", "3", "--N", "2", "--seed", "5", "--samples", "50", "--format", "json"],
        vec!["duality-check", "--variant", "ai", "--m", "3", "--n", "2", "--seed", "3", "--format", "json"],
    ] {
        let a = bin(&args);
        assert_eq!(a.0, 0, "{}", a.2);
        assert_eq!(a, bin(&args));
    }
}

#[test]
fn exit_codes() {
    assert_eq!(bin(&["verify-relations", "--n", "4"]).0, 0);
    assert_eq!(bin(&["brauer-oracle", "--n", "2", "--N", "3", "--exhaustive"]).0, 0);
    assert_eq!(bin(&["duality-check", "--variant", "aii", "--m", "1", "--n", "2"]).0, 0);
    assert_eq!(bin(&["positivity-scan", "--n", "2", "--zm", "2"]).0, 0);
    let (code, _, err) = bin(&["canonical-basis", "--n", "6"]);
    assert_eq!(code, 2);
    assert!(err.contains("--unsafe-large"));
    assert_eq!(bin(&["multiply", "--n", "3", "--lhs", "H7", "--rhs", "e"]).0, 2);
    assert_eq!(bin(&["no-such-command"]).0, 2);
    assert_eq!(bin(&["duality-check", "--variant", "ai", "--m", "1", "--n", "2"]).0, 2);
    assert_eq!(bin(&["duality-check", "--variant", "ai", "--m", "2", "--n", "2", "--varsigma", "1=0"]).0, 2);
}

#[test]
fn varsigma_overrides_are_reported() {
    let (passed, _, json) =
        report(&["duality-check", "--variant", "ai", "--m", "3", "--n", "2", "--varsigma", "2=-q^2", "--rho"]);
    assert!(passed);
    assert_eq!(json["params"]["varsigma"]["2"], "-q^2");
    assert!(json["result"]["classical_limit"].as_array().unwrap().is_empty());
    assert_eq!(json["schema_version"], 1);
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("qbrauer-cli-{}.txt", std::process::id()));
    let p = path.to_str().unwrap();
    assert_eq!(bin(&["canonical-basis", "--n", "2", "--output", p]).0, 0);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), report(&["canonical-basis", "--n", "2"]).1);
    std::fs::remove_file(path).unwrap();
}
