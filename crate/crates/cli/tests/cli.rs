use std::path::PathBuf;
use std::process::Command;

use proptest::prelude::*;
use serde_json::Value;
use toric_cli::{run, Outcome, Style};
use toric_core::ClassificationResult;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("examples")
        .join(name)
        .display()
        .to_string()
}

fn toric(args: &[&str]) -> Outcome {
    let mut argv = vec!["toric".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    run(argv, Style::default())
}

fn with_document(text: &str, args: &[&str]) -> Outcome {
    let dir = std::env::temp_dir().join(format!("toric-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(format!("{:x}.json", fxhash(text)));
    std::fs::write(&path, text).unwrap();
    let mut full: Vec<&str> = args.to_vec();
    let p = path.display().to_string();
    full.push(&p);
    let out = toric(&full);
    let _ = std::fs::remove_file(&path);
    out
}

fn fxhash(text: &str) -> u64 {
    text.bytes().fold(0xcbf29ce484222325u64, |h, b| {
        (h ^ b as u64).wrapping_mul(0x100000001b3)
    })
}

#[test]
fn unimodular_check_reports_the_factor() {
    let out = toric(&["check", "unimodular", &fixture("tuple_example.json")]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("invariant factor 2"), "{}", out.stdout);
    assert_eq!(
        toric(&["check", "unimodular", &fixture("tuple_unimodular.json")]).code,
        0
    );
}

#[test]
fn classification_fixtures() {
    let out = toric(&["classify", &fixture("punctured_octahedron.json")]);
    assert_eq!(out.code, 0);
    assert!(
        out.stdout.starts_with("Z^3 × R^1 (Theorem: stratified)"),
        "{}",
        out.stdout
    );
    for name in [
        "delta_prime.json",
        "octahedron.json",
        "cone_example.json",
        "pyramid_compact.json",
    ] {
        let out = toric(&["classify", &fixture(name)]);
        assert_eq!(
            (out.code, out.stdout.lines().next()),
            (0, Some("unique")),
            "{name}"
        );
    }
    let out = toric(&["classify", &fixture("octahedron_with_polytope.json")]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("not good"));
}

#[test]
fn cohomology_of_the_tetrahedron() {
    let out = toric(&[
        "cohomology",
        &fixture("tetrahedron.json"),
        "--degree",
        "2",
        "--coeff",
        "Z",
    ]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.trim(), "H^2(K; Z) = Z");
    let out = toric(&[
        "cohomology",
        &fixture("tetrahedron.json"),
        "--degree",
        "1",
        "--coeff",
        "Q",
    ]);
    assert_eq!(out.stdout.trim(), "H^1(K; Q) = 0");
    let out = toric(&[
        "--json",
        "cohomology",
        &fixture("torus.json"),
        "--degree",
        "1",
        "--coeff",
        "lattice:2",
    ]);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["group"]["free_rank"], 4);
    let bad = toric(&[
        "cohomology",
        &fixture("torus.json"),
        "--degree",
        "1",
        "--coeff",
        "lattice:0",
    ]);
    assert_eq!(bad.code, 2);
}

#[test]
fn relative_and_checks() {
    let out = toric(&["relative", &fixture("disk_boundary.json"), "--degree", "2"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("H^2(K, L; Z) = Z\n"));
    let out = toric(&[
        "--json",
        "relative",
        &fixture("torus_meridian.json"),
        "--degree",
        "1",
    ]);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["les_exact"], true);
    assert_eq!(
        toric(&["check", "good-cone", &fixture("good_cone_fail.json")]).code,
        1
    );
    assert_eq!(
        toric(&["check", "good-cone", &fixture("good_cone_pass.json")]).code,
        0
    );
    assert_eq!(
        toric(&["check", "polytope", &fixture("square.json")]).code,
        0
    );
    assert_eq!(
        toric(&["check", "polytope", &fixture("octahedron_polytope.json")]).code,
        1
    );
    let out = toric(&["--json", "check", "polytope", &fixture("triangle.json")]);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["delzant"], false);
    assert_eq!(
        v["failing_vertices"][0]["vertex"],
        serde_json::json!(["1", "0"])
    );
    assert_eq!(
        toric(&["check", "cone", &fixture("cone_check.json")]).code,
        0
    );
}

#[test]
fn wrong_inputs_exit_two() {
    assert_eq!(toric(&["snf", &fixture("cone_check.json")]).code, 2);
    let missing = toric(&["snf", "/nonexistent/file.json"]);
    assert_eq!(missing.code, 2);
    assert!(missing.stderr.contains("cannot read"));
    assert_eq!(toric(&["frobnicate"]).code, 2);
    assert_eq!(toric(&["--help"]).code, 0);
    let located = with_document("{\"schema_version\": 1,\n\"matrix\": [[1, 2.0]]}", &["snf"]);
    assert_eq!(located.code, 2);
    assert!(located.stderr.contains("line 2"), "{}", located.stderr);
    let missing_model = with_document(
        r#"{"schema_version": 1, "classification": {"kind": "cone", "torus_rank": 2}}"#,
        &["classify"],
    );
    assert_eq!(missing_model.code, 2);
}

#[test]
fn json_reports_round_trip() {
    let cases: Vec<Vec<String>> = vec![
        vec!["snf".into(), fixture("matrix_snf.json")],
        vec!["check".into(), "cone".into(), fixture("cone_check.json")],
        vec![
            "check".into(),
            "polytope".into(),
            fixture("octahedron_polytope.json"),
        ],
        vec![
            "relative".into(),
            fixture("disk_boundary.json"),
            "--degree".into(),
            "2".into(),
        ],
        vec!["classify".into(), fixture("punctured_octahedron.json")],
        vec!["classify".into(), fixture("sphere_manifold.json")],
    ];
    for case in cases {
        let mut args = vec!["--json"];
        args.extend(case.iter().map(String::as_str));
        let out = toric(&args);
        let parsed: Value = serde_json::from_str(&out.stdout).unwrap();
        let rendered = serde_json::to_string_pretty(&parsed).unwrap() + "\n";
        assert_eq!(rendered, out.stdout, "{case:?}");
        if case[0] == "classify" {
            let result: ClassificationResult = serde_json::from_value(parsed).unwrap();
            assert!(result.is_consistent());
            let again = serde_json::to_value(&result).unwrap();
            assert_eq!(
                serde_json::from_value::<ClassificationResult>(again).unwrap(),
                result
            );
        }
    }
}

#[test]
fn directories_are_processed_in_order() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("examples")
        .display()
        .to_string();
    let serial = toric(&["--json", "classify", &dir]);
    let parallel = toric(&["--json", "--parallel", "classify", &dir]);
    assert_eq!(serial, parallel);
    let entries: Vec<Value> = serde_json::from_str(&serial.stdout).unwrap();
    let files: Vec<&str> = entries
        .iter()
        .map(|e| e["file"].as_str().unwrap())
        .collect();
    let mut sorted = files.clone();
    sorted.sort();
    assert_eq!(files, sorted);
    // non-classification documents in the directory are invalid for this command
    assert_eq!(serial.code, 2);
}

#[test]
fn binary_respects_color_setting() {
    let bin = env!("CARGO_BIN_EXE_toric");
    let out = Command::new(bin)
        .env("TORIC_COLOR", "never")
        .args(["check", "unimodular", &fixture("tuple_example.json")])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(!String::from_utf8_lossy(&out.stdout).contains('\x1b'));
    let colored = run(
        [
            "toric",
            "check",
            "unimodular",
            &fixture("tuple_example.json"),
        ],
        Style { color: true },
    );
    assert!(colored.stdout.contains("\x1b[31m"));
}

fn arb_json() -> impl Strategy<Value = Value> {
    let leaf = prop_oneof![
        Just(Value::Null),
        any::<bool>().prop_map(Value::Bool),
        any::<i32>().prop_map(Value::from),
        (-1e6f64..1e6).prop_map(|x| serde_json::json!(x)),
        "[a-z0-9/_-]{0,6}".prop_map(Value::String),
    ];
    leaf.prop_recursive(4, 32, 6, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 0..5).prop_map(Value::Array),
            prop::collection::btree_map(
                prop_oneof![
                    Just("schema_version".to_string()),
                    Just("matrix".to_string()),
                    Just("tuple".to_string()),
                    Just("cone".to_string()),
                    Just("complex".to_string()),
                    Just("classification".to_string()),
                    "[a-z]{1,5}",
                ],
                inner,
                0..4
            )
            .prop_map(|m| Value::Object(m.into_iter().collect())),
        ]
    })
}

const COMMANDS: &[&[&str]] = &[
    &["snf"],
    &["check", "unimodular"],
    &["check", "cone"],
    &["check", "good-cone"],
    &["check", "polytope"],
    &["cohomology", "--degree", "1", "--coeff", "Z"],
    &["relative", "--degree", "1"],
    &["classify"],
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn malformed_documents_never_exit_one(doc in arb_json(), cmd in 0..COMMANDS.len()) {
        let out = with_document(&doc.to_string(), COMMANDS[cmd]);
        prop_assert_ne!(out.code, 1, "{}", out.stdout);
    }

    #[test]
    fn truncated_fixtures_never_exit_one(cut in 0.0f64..1.0, cmd in 0..COMMANDS.len()) {
        let text = std::fs::read_to_string(fixture("punctured_octahedron.json")).unwrap();
        let end = text.trim_end().len() - 1;
        let at = ((end as f64) * cut) as usize;
        let out = with_document(&text[..at], COMMANDS[cmd]);
        prop_assert_eq!(out.code, 2);
    }

    #[test]
    fn garbage_text_never_exits_one(text in "\\PC{0,40}", cmd in 0..COMMANDS.len()) {
        let out = with_document(&text, COMMANDS[cmd]);
        prop_assert_eq!(out.code, 2);
    }
}
