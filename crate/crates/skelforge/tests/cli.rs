use std::path::Path;
use std::process::Command;

use serde_json::Value;

use skelforge::json::{parse_generators, to_pretty, GeneratorSetJson};
use skelforge_core::presets::PresetId;

fn skelforge(args: &[&str]) -> (bool, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_skelforge")).args(args).output().expect("binary runs");
    (out.status.success(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).expect("valid json")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn classify_p10_is_chiral_66() {
    let (ok, out, _) = skelforge(&["classify", "--preset", "P:1,0", "--quotient", "2"]);
    assert!(ok);
    let report = json(&out);
    assert_eq!(report["verdict"]["kind"], "chiral");
    assert_eq!(report["schlafli"], "{6,6}");
}

#[test]
fn petrie_of_cube_has_four_skew_hexagons() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("petrie.json");
    let (ok, _, _) = skelforge(&["petrie", "--preset", "cube", "--out", out_path.to_str().unwrap()]);
    assert!(ok);
    let built = json(&std::fs::read_to_string(&out_path).unwrap());
    let faces = built["complex"]["faces"].as_array().unwrap();
    assert_eq!(faces.len(), 4);
    assert!(faces.iter().all(|f| f["cycle"].as_array().unwrap().len() == 6));

    let (ok, out, _) = skelforge(&["classify", "--preset", "petrie(cube)"]);
    assert!(ok);
    assert_eq!(json(&out)["faces"]["6_s"], 4);
}

#[test]
fn net_of_k4_is_pcu() {
    let (ok, out, _) = skelforge(&["net", "--preset", "K4_12", "--depth", "4"]);
    assert!(ok);
    assert_eq!(json(&out)["net"], "pcu");
}

#[test]
fn generator_round_trip_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let (ok, built, _) = skelforge(&["build", "--preset", "P:1,0", "--radius", "2"]);
    assert!(ok);
    let gens: GeneratorSetJson = serde_json::from_value(json(&built)["generators"].clone()).unwrap();
    let text = to_pretty(&gens);
    let file = write(dir.path(), "p10.json", &text);

    let ingested = parse_generators(&text).unwrap();
    assert_eq!(to_pretty(&GeneratorSetJson::from(&ingested)), text);
    assert_eq!(Some(ingested), "P:1,0".parse::<PresetId>().unwrap().generators().unwrap());

    let (ok, rebuilt, _) = skelforge(&["build", "--input", &file, "--radius", "2"]);
    assert!(ok);
    assert_eq!(rebuilt, built);
}

#[test]
fn non_orthogonal_matrix_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let text = r#"{"generators":[{"name":"S1","matrix":[["1","1","0"],["0","1","0"],["0","0","1"]],"translation":["0","0","0"]}],
                   "base_vertex":["0","0","0"],"base_edge_other":["1","0","0"],"face_generator":"S1"}"#;
    let file = write(dir.path(), "bad.json", text);
    let (ok, _, err) = skelforge(&["build", "--input", &file]);
    assert!(!ok);
    let e = json(&err);
    assert_eq!(e["code"], "not_an_isometry");
    assert!(e["detail"].as_str().unwrap().contains("S1"));
}

#[test]
fn coincident_base_edge_is_rejected() {
    let text = r#"{"generators":[{"name":"S1","matrix":[["1","0","0"],["0","1","0"],["0","0","1"]],"translation":["0","0","0"]}],
                   "base_vertex":["0","0","0"],"base_edge_other":["0","0","0"],"face_generator":"S1"}"#;
    let err = parse_generators(text).unwrap_err();
    assert_eq!(err.code(), "invalid_generators");
}

#[test]
fn malformed_file_is_a_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "junk.json", "{\"generators\": 3}");
    let (ok, _, err) = skelforge(&["validate", "--input", &file]);
    assert!(!ok);
    assert_eq!(json(&err)["code"], "parse_error");
}

#[test]
fn configuration_errors_have_distinct_codes() {
    let cases: [(&[&str], &str); 6] = [
        (&["build", "--preset", "cube", "--bogus"], "usage"),
        (&["build", "--preset", "cube", "--input", "x.json"], "usage"),
        (&["build", "--preset", "nonesuch"], "unknown_preset"),
        (&["build", "--preset", "P:1,0", "--radius=-1"], "bad_config"),
        (&["build", "--preset", "P:0,0"], "invalid_parameters"),
        (&["classify", "--preset", "sq44", "--quotient", "1"], "bad_config"),
    ];
    for (args, code) in cases {
        let (ok, out, err) = skelforge(args);
        assert!(!ok, "{args:?}");
        assert!(out.is_empty());
        assert_eq!(json(&err)["code"], code, "{args:?}");
    }
}

#[test]
fn validate_reports_r_for_complexes() {
    let (ok, out, _) = skelforge(&["validate", "--preset", "skel2cubic"]);
    assert!(ok);
    let v = json(&out);
    assert_eq!(v["valid"], true);
    assert_eq!(v["r"], 4);
}

#[test]
fn obj_export_uses_polylines_for_skew_and_infinite_faces() {
    let (ok, out, _) = skelforge(&["export", "--preset", "petrie(cube)"]);
    assert!(ok);
    assert_eq!(out.lines().filter(|l| l.starts_with("l ")).count(), 4);
    assert_eq!(out.lines().filter(|l| l.starts_with("f ")).count(), 0);

    let (ok, out, _) = skelforge(&["export", "--preset", "cube"]);
    assert!(ok);
    assert_eq!(out.lines().filter(|l| l.starts_with("f ")).count(), 6);

    let (ok, out, _) = skelforge(&["export", "--preset", "petrie(sq44)", "--radius", "2", "--periods", "2"]);
    assert!(ok);
    let line = out.lines().find(|l| l.starts_with("l ")).unwrap();
    assert_eq!(line.split_whitespace().count(), 1 + 2 * 2 + 1);
    let v = out.lines().find(|l| l.starts_with("v ")).unwrap();
    assert!(v.split_whitespace().skip(1).all(|x| x.split('.').nth(1).map(str::len) == Some(12)));
}

#[test]
fn pgr_export_reimports() {
    let (ok, out, _) = skelforge(&["export", "--preset", "K1_12", "--format", "pgr"]);
    assert!(ok);
    let g = skelforge::pgr::parse_pgr(&out).unwrap();
    assert_eq!(skelforge_core::nets::identify_net(&g).as_str(), "fcu");
}
