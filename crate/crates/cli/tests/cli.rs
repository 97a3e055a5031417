use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use proptest::prelude::*;
use serde_json::Value;
use sll_cli::commands::{random, Kind};
use sll_cli::InstanceFile;
use sll_core::FieldSpec;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn sll(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sll"))
        .args(args)
        .env_remove("SLL_MAX_ELEMENTS")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json report")
}

#[test]
fn decompose_g2_prints_theta() {
    let out = sll(&["decompose", fixture("g2.json").to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    let theta = &doc["data"]["theta"];
    assert_eq!(theta, &serde_json::json!([["0", "-1/2"], ["1/2", "0"]]));
    assert_eq!(doc["data"]["split"]["ftilde"]["dim"], 2);
}

#[test]
fn decompose_aligned_is_all_fe() {
    let out = sll(&["decompose", fixture("aligned_hyperbolic.json").to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["data"]["split"]["f_e"]["dim"], 2);
}

#[test]
fn malformed_file_reports_position() {
    let out = sll(&["decompose", fixture("malformed.json").to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 5, column"), "{err}");
}

#[test]
fn lattice_writes_dot_and_legend() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("g2.dot");
    let out = sll(&[
        "lattice",
        fixture("g2.json").to_str().unwrap(),
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let text = std::fs::read_to_string(&dot).unwrap();
    assert_eq!(text.matches("label=").count(), 6);
    assert_eq!(text.matches(" -> ").count(), 8);
    let legend = std::fs::read_to_string(dir.path().join("g2.dot.legend.tsv")).unwrap();
    assert_eq!(legend.lines().count(), 6);

    let dot = dir.path().join("diamond.dot");
    let out = sll(&[
        "lattice",
        fixture("two_lines.json").to_str().unwrap(),
        "--dot",
        dot.to_str().unwrap(),
        "--labels",
        "bases",
    ]);
    assert_eq!(code(&out), 0);
    let text = std::fs::read_to_string(&dot).unwrap();
    assert_eq!(text.matches("label=").count(), 4);
    assert_eq!(text.matches(" -> ").count(), 4);
}

#[test]
fn lattice_cap_exits_four() {
    let g2 = fixture("g2.json");
    let out = sll(&["lattice", g2.to_str().unwrap(), "--max", "2"]);
    assert_eq!(code(&out), 4);
    let out = sll(&["lattice", g2.to_str().unwrap(), "--max", "5"]);
    assert_eq!(code(&out), 4);
    assert_eq!(json(&out)["truncated"], true);
    let out = sll(&["lattice", g2.to_str().unwrap(), "--max", "5", "--allow-truncated"]);
    assert_eq!(code(&out), 0);
    let out = Command::new(env!("CARGO_BIN_EXE_sll"))
        .args(["lattice", g2.to_str().unwrap()])
        .env("SLL_MAX_ELEMENTS", "5")
        .output()
        .unwrap();
    assert_eq!(code(&out), 4);
}

#[test]
fn verify_exit_codes() {
    for name in ["aligned_hyperbolic.json", "swapped_identity.json", "g2.json"] {
        let out = sll(&["verify", fixture(name).to_str().unwrap()]);
        assert_eq!(code(&out), 0, "{name}: {}", String::from_utf8_lossy(&out.stdout));
    }
    let out = sll(&["verify", fixture("g2.json").to_str().unwrap(), "--suite", "reflexive"]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    let clauses = doc["reports"][0]["clauses"].as_array().unwrap();
    assert!(clauses.iter().all(|c| c["status"] == "inapplicable"));
    let out = sll(&["verify", fixture("not_complementary.json").to_str().unwrap()]);
    assert_eq!(code(&out), 3);
}

#[test]
fn random_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for path in [&a, &b] {
        let out = sll(&[
            "random", "--field", "gf:3", "--dim", "4", "--seed", "1", "--kind", "twosum", "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(code(&out), 0);
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let out = sll(&["random", "--field", "gf:2", "--dim", "3", "--seed", "1"]);
    assert_eq!(code(&out), 2);
    let out = sll(&["random", "--field", "q", "--dim", "2", "--seed", "7", "--kind", "reflexive"]);
    assert_eq!(code(&out), 0);
    let file = InstanceFile::parse(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert!(file.form.is_some());
    file.resolve().unwrap().decomposition().unwrap();
}

#[test]
fn integer_entries_are_accepted() {
    let text = std::fs::read_to_string(fixture("g2.json")).unwrap();
    let file = InstanceFile::parse(&text).unwrap();
    let canonical = file.to_canonical_json();
    assert!(canonical.contains("\"-1\""));
    assert_eq!(InstanceFile::parse(&canonical).unwrap(), file);
}

#[test]
fn bad_entries_are_rejected() {
    let bad = r#"{"field": "q", "dim": 1, "subspaces": {"V1": [["1/0"]]}}"#;
    assert!(InstanceFile::parse(bad).is_err());
    let unknown = r#"{"field": "q", "dim": 1, "subspaces": {}, "extra": 1}"#;
    assert!(InstanceFile::parse(unknown).is_err());
    // 1/3 has no meaning in GF(3)
    let file = InstanceFile::parse(
        r#"{"field": "gf:3", "dim": 1, "subspaces": {"V1": [["1/3"]]}}"#,
    )
    .unwrap();
    assert!(file.resolve().is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn instance_files_round_trip(seed in any::<u64>(), dim in 1usize..=4, k in 0usize..3, p in 0usize..3) {
        let kind = [Kind::TwoSum, Kind::Reflexive, Kind::Curvature][k];
        let field = [FieldSpec::Rationals, FieldSpec::Prime(3), FieldSpec::Prime(5)][p];
        let file = random(field, dim, seed, kind).unwrap();
        let text = file.to_canonical_json();
        let back = InstanceFile::parse(&text).unwrap();
        prop_assert_eq!(back.to_canonical_json(), text);
        prop_assert_eq!(random(field, dim, seed, kind).unwrap(), file);
    }
}
