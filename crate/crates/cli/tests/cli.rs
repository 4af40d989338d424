use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn ghc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ghc")).args(args).output().expect("ghc runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn certify_to(dir: &tempfile::TempDir, input: &str, extra: &[&str]) -> PathBuf {
    let out = dir.path().join(format!("{input}.cert.json"));
    let inp = data(input);
    let mut args = vec!["certify", inp.to_str().unwrap(), "--out", out.to_str().unwrap()];
    args.extend_from_slice(extra);
    let o = ghc(&args);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    out
}

fn verify(report: &PathBuf, input: &str) -> Output {
    ghc(&["verify", report.to_str().unwrap(), data(input).to_str().unwrap()])
}

#[test]
fn certify_and_verify_every_fixture() {
    let dir = tempfile::tempdir().unwrap();
    for (input, verdict) in [
        ("a1xa1_factor.json", "IdealNoModule"),
        ("a1_torus.json", "ExistsWitness"),
        ("a2_torus.json", "ExistsWitness"),
        ("a2_principal.json", "ExistsWitness"),
        ("b2_sl2.json", "ExistsWitness"),
    ] {
        let out = certify_to(&dir, input, &["--oracle-check"]);
        let cert: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
        assert_eq!(cert["verdict"]["kind"], verdict, "{input}");
        if verdict == "ExistsWitness" {
            assert!(cert["witness"]["r"].as_u64().unwrap() > 0);
            assert_eq!(cert["witness"]["vanishing"], true);
            assert_eq!(cert["witness"]["oracle"]["match_with_kostant"], true);
        }
        let o = verify(&out, input);
        assert_eq!(code(&o), 0, "{input}: {}", String::from_utf8_lossy(&o.stdout));
    }
}

#[test]
fn reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let a = certify_to(&dir, "a2_principal.json", &["--seed", "3"]);
    let first = std::fs::read(&a).unwrap();
    let b = certify_to(&dir, "a2_principal.json", &["--seed", "3"]);
    assert_eq!(first, std::fs::read(&b).unwrap());
    let o = ghc(&["certify", data("a2_principal.json").to_str().unwrap(), "--seed", "3"]);
    assert_eq!(o.stdout, first);
}

#[test]
fn tampered_certificates_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let out = certify_to(&dir, "b2_sl2.json", &[]);
    let cert: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let mutants: Vec<(&str, Box<dyn Fn(&mut Value)>)> = vec![
        ("r", Box::new(|c| c["witness"]["r"] = (c["witness"]["r"].as_u64().unwrap() + 1).into())),
        ("mu", Box::new(|c| c["witness"]["mu"]["coords"][0] = "-10/1".into())),
        ("nu labels", Box::new(|c| c["witness"]["nu_b_labels"][0] = 3.into())),
        ("verdict", Box::new(|c| c["verdict"] = serde_json::json!({"kind": "IdealNoModule"}))),
        ("count", Box::new(|c| c["witness"]["genericity"]["enumerated_count"] = 999.into())),
        ("summands", Box::new(|c| c["witness"]["kostant"]["summands"].as_array_mut().unwrap().clear())),
        ("dim n", Box::new(|c| c["witness"]["dims"]["n"] = 1.into())),
        ("h", Box::new(|c| c["witness"]["h_t_coords"][0] = "0/1".into())),
    ];
    for (name, mutate) in mutants {
        let mut c = cert.clone();
        mutate(&mut c);
        let p = dir.path().join(format!("bad-{}.json", name.replace(' ', "_")));
        std::fs::write(&p, serde_json::to_string_pretty(&c).unwrap()).unwrap();
        let o = verify(&p, "b2_sl2.json");
        assert_eq!(code(&o), 1, "mutant {name}: {}", String::from_utf8_lossy(&o.stdout));
        assert!(String::from_utf8_lossy(&o.stdout).starts_with("REJECT"));
    }
}

#[test]
fn verifying_against_another_input_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = certify_to(&dir, "a1_torus.json", &[]);
    let o = verify(&out, "a2_torus.json");
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("digest"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"algebra": "A2", "subalgebra_generators": [["1"]], "cartan_t": []}"#).unwrap();
    assert_eq!(code(&ghc(&["certify", bad.to_str().unwrap()])), 2);
    assert_eq!(code(&ghc(&["certify", "/nonexistent.json"])), 2);

    let capped = dir.path().join("capped.json");
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(data("a2_torus.json")).unwrap()).unwrap();
    v["search"] = serde_json::json!({"cond2_cap": 1});
    std::fs::write(&capped, v.to_string()).unwrap();
    assert_eq!(code(&ghc(&["certify", capped.to_str().unwrap()])), 4);

    v["search"] = serde_json::json!({"n_cap": 2});
    std::fs::write(&capped, v.to_string()).unwrap();
    assert_eq!(code(&ghc(&["certify", capped.to_str().unwrap()])), 0);
    assert_eq!(code(&ghc(&["certify", capped.to_str().unwrap(), "--oracle-check"])), 4);
}

#[test]
fn check_ideal_subcommand() {
    let o = ghc(&["check-ideal", data("a1xa1_factor.json").to_str().unwrap()]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["is_ideal"], true);
    let o = ghc(&["check-ideal", data("a2_principal.json").to_str().unwrap()]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["is_ideal"], false);
}

#[test]
fn kostant_subcommand() {
    let k = data("a2_torus.json");
    let o = ghc(&["kostant", "--type", "A2", "--nu", "0,0", "--k-spec", k.to_str().unwrap(), "--degree", "2"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["summands"].as_array().unwrap().len(), 2);
    assert_eq!(v["vanishing"], true);
    let o = ghc(&["kostant", "--type", "A2", "--nu", "0,0", "--k-spec", k.to_str().unwrap(), "--degree", "0"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["vanishing"], false);
    let o = ghc(&["kostant", "--type", "B2", "--nu", "0,0", "--k-spec", k.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    let o = ghc(&["kostant", "--type", "A2", "--nu", "-1,0", "--k-spec", k.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
}

#[test]
fn oracle_compare_subcommand() {
    let o = ghc(&["oracle-compare", data("b2_sl2.json").to_str().unwrap(), "--nu", "1,1", "--degrees", "0..3"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["module_dim"], 16);
    assert_eq!(v["match_with_kostant"], true);
    assert_eq!(v["degrees"].as_array().unwrap().len(), 4);
}
