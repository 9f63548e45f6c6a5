//! End-to-end checks of the command-line interface: exit codes, file
//! formats, the structured/text output contract, and the generate ->
//! analyze round trip.

use std::path::PathBuf;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_minmult"))
}

fn tmpdir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("minmult-cli-{name}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn analyze_complex_text_and_structured() {
    let dir = tmpdir("analyze");
    let path = dir.join("golden5.json");
    std::fs::write(
        &path,
        r#"{"vertices":5,"facets":[[1,2,3],[1,3,4],[1,4,5],[2,3,5],[2,4,5]]}"#,
    )
    .unwrap();

    let out = bin().args(["analyze", "--complex"]).arg(&path).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("minimal multiplicity: yes (degree 3)"), "{text}");
    assert!(text.contains("e = 5"));

    let out = bin()
        .args(["analyze", "--format", "structured", "--complex"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["multiplicity"], "5");
    assert_eq!(json["minimal_multiplicity"], "yes");
    assert_eq!(json["minimal_multiplicity_degree"], "3");
    assert_eq!(json["a_invariant"], "-2");
}

#[test]
fn analyze_ideal_exit_codes() {
    let dir = tmpdir("ideal");
    let path = dir.join("goto223.json");
    std::fs::write(
        &path,
        r#"{"variables":["X1","X2","Y1","Y2"],
            "generators":["X1^3","X1^2*X2","X1*X2^2","X2^3",
                          "X1^2*Y1","X1*X2*Y1","X2^2*Y1",
                          "X1^2*Y2","X1*X2*Y2","X2^2*Y2"]}"#,
    )
    .unwrap();
    let out = bin()
        .args(["analyze", "--format", "structured", "--ideal"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["multiplicity"], "3");
    assert_eq!(json["depth"], "0");
    assert_eq!(json["buchsbaum"], "yes");

    // Malformed file: exit 2 with a diagnostic naming the offender.
    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"vertices":3,"facets":[[1,2],[2,9]]}"#).unwrap();
    let out = bin().args(["analyze", "--complex"]).arg(&bad).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("facet #2"), "{err}");
}

#[test]
fn generate_then_analyze_round_trip() {
    let dir = tmpdir("generate");
    let path = dir.join("hanano.json");
    let out = bin()
        .args(["generate", "hanano", "--out"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(path.exists());
    let sidecar = dir.join("hanano.expected.json");
    assert!(sidecar.exists());
    let expected: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&sidecar).unwrap()).unwrap();
    assert_eq!(expected["family"], "hanano");

    let out = bin()
        .args(["analyze", "--format", "structured", "--complex"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["multiplicity"], "5");

    // cyclic_dual q=3 d=3 lives on 5 vertices.
    let cd = dir.join("cyclic.json");
    let out = bin()
        .args(["generate", "cyclic_dual", "--q", "3", "--d", "3", "--out"])
        .arg(&cd)
        .output()
        .unwrap();
    assert!(out.status.success());
    let file: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&cd).unwrap()).unwrap();
    assert_eq!(file["vertices"], 5);

    // non_buchsbaum d=2 q=4 has 10 quartic generators.
    let nb = dir.join("nb.json");
    let out = bin()
        .args(["generate", "non_buchsbaum", "--d", "2", "--q", "4", "--out"])
        .arg(&nb)
        .output()
        .unwrap();
    assert!(out.status.success());
    let file: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&nb).unwrap()).unwrap();
    assert_eq!(file["generators"].as_array().unwrap().len(), 10);

    // Parameter violations exit 2.
    let out = bin()
        .args(["generate", "cyclic_dual", "--q", "3", "--d", "2", "--out"])
        .arg(dir.join("x.json"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn search_exit_codes_and_content() {
    let out = bin()
        .args(["search", "4", "1", "--require-minimal"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = json["rows"].as_array().unwrap();
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|r| r["minimal_multiplicity"] == true));

    // Cap exceeded: exit 4.
    let out = bin().args(["search", "9", "3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn search_5_2_contains_golden_class() {
    let out = bin()
        .args(["search", "5", "2", "--require-minimal", "--jobs", "2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = json["rows"].as_array().unwrap();
    assert!(!rows.is_empty());
    // The golden 5-vertex class appears with d=3, c=2, q=3, h=1.
    assert!(rows.iter().any(|r| {
        r["d"] == "3" && r["c"] == "2" && r["q"] == "3" && r["h"] == "1"
    }));
}
