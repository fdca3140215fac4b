mod common;

use altdef_core::cochain::delta1;
use altdef_core::deformation::conjugate;
use altdef_core::{catalog, Cochain, DeformationJet, GaugeJet, Rational};
use common::{altdef, path_str, write, write_cochain, write_gauge, write_jet};
use serde_json::json;

#[test]
fn identity_failure_is_data_not_an_error() {
    let r = altdef(&[
        "check",
        "octonions",
        "--identities",
        "left-alternative,associative",
    ])
    .report();
    assert_eq!(r["status"], "ok");
    let results = r["output"]["results"].as_array().unwrap();
    assert_eq!(results[0]["holds"], true);
    assert_eq!(results[1]["holds"], false);
    // first failing triple in lexicographic order, 1-based
    assert_eq!(results[1]["witness"]["indices"], json!([2, 3, 4]));
}

#[test]
fn default_identity_list_is_complete() {
    let r = altdef(&["check", "m2"]).report();
    let results = r["output"]["results"].as_array().unwrap();
    assert_eq!(results.len(), 9);
    assert!(results.iter().all(|x| x["holds"] == true));
}

#[test]
fn input_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(
        dir.path(),
        "bad.json",
        &json!({"format": "altdef-algebra-v1", "name": "x", "dim": 2, "table": [[1, 1, 1, "1"], [1, 1, 1, "2"]]}),
    );
    let out = altdef(&["check", path_str(&bad)]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("table[1]"), "{}", out.stderr);
    assert_eq!(out.json()["status"], "input-error");

    let range = write(
        dir.path(),
        "range.json",
        &json!({"format": "altdef-algebra-v1", "name": "x", "dim": 2, "table": [[1, 3, 1, "1"]]}),
    );
    let out = altdef(&["check", path_str(&range)]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("index 3"), "{}", out.stderr);

    assert_eq!(altdef(&["check", "no-such-algebra"]).code, 2);
    assert_eq!(
        altdef(&["check", "m2", "--identities", "commutative"]).code,
        2
    );
    assert_eq!(altdef(&["cohomology", "m2", "--degree", "4"]).code, 2);
    assert_eq!(
        altdef(&[
            "cohomology",
            "alt4-a",
            "--degree",
            "2",
            "--theory",
            "hochschild"
        ])
        .code,
        2
    );
    assert_eq!(altdef(&["subalgebra", "m2", "--generators", "5"]).code, 2);
    assert_eq!(altdef(&["cohomology", "m2"]).code, 2);
}

#[test]
fn mismatched_jet_algebra_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let jet = write_jet(
        dir.path(),
        "jet.json",
        &DeformationJet::zero(catalog("alt4-a").unwrap(), 1),
    );
    let out = altdef(&["deform-verify", "alt4-b", "--jet", path_str(&jet)]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("does not match"));
}

#[test]
fn out_flag_writes_the_same_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("report.json");
    let out = altdef(&[
        "cohomology",
        "alt4-b",
        "--degree",
        "1",
        "--out",
        path_str(&file),
    ]);
    assert_eq!(out.code, 0);
    assert_eq!(std::fs::read_to_string(&file).unwrap(), out.stdout);
}

#[test]
fn verify_class_reports_preimage() {
    let dir = tempfile::tempdir().unwrap();
    let m2 = catalog("m2").unwrap();
    let g = Cochain::from_entries(1, 4, &[(vec![1, 2], Rational::from(1))]).unwrap();
    let phi = write_cochain(dir.path(), "phi.json", &delta1(&m2, &g).unwrap());
    let r = altdef(&["verify-class", "m2", path_str(&phi)]).report();
    assert_eq!(r["output"]["cocycle"], true);
    assert_eq!(r["output"]["coboundary"], true);
    assert_eq!(r["output"]["preimage"]["degree"], 1);
    let wrong = write_cochain(dir.path(), "wrong.json", &g);
    assert_eq!(altdef(&["verify-class", "m2", path_str(&wrong)]).code, 2);
}

#[test]
fn obstruct_rejects_invalid_jets() {
    let dir = tempfile::tempdir().unwrap();
    let m2 = catalog("m2").unwrap();
    let jet = write_jet(
        dir.path(),
        "jet.json",
        &DeformationJet::new(m2, vec![Cochain::basis(2, 4, 3)]).unwrap(),
    );
    let out = altdef(&["obstruct", "m2", "--jet", path_str(&jet)]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("order 1"));
    let dv = altdef(&["deform-verify", "m2", "--jet", path_str(&jet)]).report();
    assert_eq!(dv["output"]["all_zero"], false);
    assert_eq!(dv["output"]["residuals"][1]["zero"], false);
}

#[test]
fn integrate_reports_obstructed_direction() {
    let dir = tempfile::tempdir().unwrap();
    let mu1 = Cochain::from_entries(
        2,
        2,
        &[
            (vec![1, 0, 1], Rational::from(1)),
            (vec![1, 1, 0], Rational::from(1)),
        ],
    )
    .unwrap();
    let path = write_cochain(dir.path(), "mu1.json", &mu1);
    let r = altdef(&["integrate", "zero-2", path_str(&path), "--max-order", "3"]).report();
    assert_eq!(r["output"]["stopped_at"], 1);
    assert_eq!(r["output"]["failure"]["solvable"], false);
    assert_eq!(r["output"]["failure"]["order"], 2);
}

#[test]
fn normalize_and_equiv_agree() {
    let dir = tempfile::tempdir().unwrap();
    let a = catalog("alt4-a").unwrap();
    let g = Cochain::from_entries(
        1,
        4,
        &[
            (vec![0, 0], Rational::from(1)),
            (vec![3, 2], Rational::from(-1)),
        ],
    )
    .unwrap();
    let gauge = GaugeJet::new(4, vec![g]).unwrap();
    let jet = conjugate(&DeformationJet::zero(a, 2), &gauge).unwrap();
    assert!(!jet.is_trivial());
    let jet_path = write_jet(dir.path(), "jet.json", &jet);
    let r = altdef(&["normalize", "alt4-a", "--jet", path_str(&jet_path)]).report();
    assert_eq!(r["output"]["leading_order"], serde_json::Value::Null);
    let normal = write(dir.path(), "normal.json", &r["output"]["jet"]);
    let used = write(dir.path(), "gauge.json", &r["output"]["gauge"]);
    let eq = altdef(&[
        "equiv",
        "alt4-a",
        "--jet-a",
        path_str(&jet_path),
        "--jet-b",
        path_str(&normal),
        "--gauge",
        path_str(&used),
    ])
    .report();
    assert_eq!(eq["output"]["all_zero"], true);
    // the identity gauge does not relate a nontrivial jet to its normal form
    let id = write_gauge(dir.path(), "id.json", &GaugeJet::identity(4, 0));
    let eq = altdef(&[
        "equiv",
        "alt4-a",
        "--jet-a",
        path_str(&jet_path),
        "--jet-b",
        path_str(&normal),
        "--gauge",
        path_str(&id),
    ])
    .report();
    assert_eq!(eq["output"]["all_zero"], false);
}

#[test]
fn subalgebra_closure_and_associativity() {
    let r = altdef(&[
        "subalgebra",
        "octonions",
        "--generators",
        "2,3",
        "--check-associative",
    ])
    .report();
    assert_eq!(r["output"]["dim"], 4);
    assert_eq!(r["output"]["associative"]["holds"], true);
    let r = altdef(&[
        "subalgebra",
        "octonions",
        "--generators",
        "2,3,4",
        "--check-associative",
    ])
    .report();
    assert_eq!(r["output"]["dim"], 8);
    assert_eq!(r["output"]["associative"]["holds"], false);
}

#[test]
fn catalog_dump_reads_back() {
    let dir = tempfile::tempdir().unwrap();
    let dump = altdef(&["catalog", "--dump", "alt4-b"]);
    assert_eq!(dump.code, 0);
    assert_eq!(dump.json()["format"], "altdef-algebra-v1");
    let path = dir.path().join("alt4-b.json");
    std::fs::write(&path, &dump.stdout).unwrap();
    let a = altdef(&["check", "alt4-b"]).report();
    let b = altdef(&["check", path_str(&path)]).report();
    assert_eq!(a["output"], b["output"]);
    assert_eq!(a["inputs_digest"], b["inputs_digest"]);
    assert_eq!(altdef(&["catalog", "--dump", "nope"]).code, 2);
}
