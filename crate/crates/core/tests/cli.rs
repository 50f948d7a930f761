//! The `spectra` binary end to end.

use std::process::{Command, Output};

use serde_json::Value;

fn spectra(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spectra")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout))
    })
}

#[test]
fn spec_lists_points() {
    let out = spectra(&["spec", "--ring", "Z/12"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    let labels: Vec<&str> = doc["points"].as_array().unwrap().iter().map(|p| p["label"].as_str().unwrap()).collect();
    assert_eq!(labels, ["(2)", "(3)"]);
}

#[test]
fn local_ring_has_a_hasse_edge() {
    let out = spectra(&["spec", "--ring", "Zloc(3)"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["hasse"].as_array().unwrap().len(), 1);
}

#[test]
fn topology_families() {
    for (which, count) in [("zariski", 3), ("flat", 3), ("patch", 4)] {
        let out = spectra(&["topology", "--ring", "Zloc(2)", "--which", which]);
        assert_eq!(out.status.code(), Some(0), "{which}");
        let doc = json(&out);
        assert_eq!(doc["closed_sets"].as_array().unwrap().len(), count, "{which}: {doc}");
    }
}

#[test]
fn flat_and_not_flat() {
    let out = spectra(&["flat", "--ring", "Z/6", "--ideal", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["flat"], true);
    assert_eq!(doc["projective"], true);

    let out = spectra(&["flat", "--ring", "Z/4", "--ideal", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["flat"], false);
    assert!(!doc["failing_member"].is_null());
}

#[test]
fn flat_accepts_negative_literals() {
    let out = spectra(&["flat", "--ring", "Z/6", "--ideal", "-3"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json(&out)["flat"], true);
}

#[test]
fn sring_exit_codes() {
    let out = spectra(&["sring", "--ring", "Z/30"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["sring"], true);

    let out = spectra(&["sring", "--ring", "EvBits"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["sring"], false);
    assert!(!doc["non_example"].is_null());
}

#[test]
fn verify_one_and_all() {
    let out = spectra(&["verify", "--ring", "Z/12", "--theorem", "th2"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc.as_array().unwrap().len(), 1);
    assert_eq!(doc[0]["verdict"], "pass", "{doc}");

    let out = spectra(&["verify", "--ring", "Z/2 * Zloc(3)"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    assert_eq!(json(&out).as_array().unwrap().len(), 11);
}

#[test]
fn th55_variants() {
    let out = spectra(&["th55", "--ring", "Zloc(2)", "--X", "max"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["hypothesis_holds"], true);

    // the generic point lies below the maximal ideal
    let out = spectra(&["th55", "--ring", "Zloc(2)", "--X", "min"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["hypothesis_holds"], true);

    // nothing in {(2)} lies below (3)
    let out = spectra(&["th55", "--ring", "Z/6", "--X", "custom", "--points", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["hypothesis_holds"], false);
    assert_eq!(doc["uncovered"], "(3)");

    let out = spectra(&["th55", "--ring", "Z/6", "--X", "custom", "--points", "0,1"]);
    assert_eq!(out.status.code(), Some(0));

    let out = spectra(&["th55", "--ring", "Z/6", "--X", "custom", "--points", "7"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn export_dot_is_stable() {
    let a = spectra(&["export-dot", "--ring", "Zloc(2) * Z/3"]);
    let b = spectra(&["export-dot", "--ring", "Zloc(2) * Z/3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.starts_with("digraph spectrum {"));
    assert_eq!(text.matches(" -> ").count(), 1);
}

#[test]
fn bad_input_exits_two() {
    let out = spectra(&["spec", "--ring", "GF(6)"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.starts_with("error: --ring"), "{err}");
    assert!(err.contains("at 3"), "{err}");

    assert_eq!(spectra(&["verify", "--ring", "Z/6", "--theorem", "nope"]).status.code(), Some(2));
    assert_eq!(spectra(&["flat", "--ring", "Z/6"]).status.code(), Some(2));
    assert_eq!(spectra(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn corpus_files() {
    let dir = std::env::temp_dir().join(format!("spectra-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();

    let good = dir.join("good.toml");
    std::fs::write(&good, "[[ring]]\nexpr = \"Z/6\"\nspectrum_size = 2\n").unwrap();
    let out = spectra(&["corpus", good.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["summary"]["failed"], 0);

    let wrong = dir.join("wrong.toml");
    std::fs::write(&wrong, "[[ring]]\nexpr = \"Z/12\"\nspectrum_size = 3\n").unwrap();
    let out = spectra(&["corpus", wrong.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["summary"]["failed"], 1);

    let broken = dir.join("broken.toml");
    std::fs::write(&broken, "[[ring]]\nexpr = \"Z/\"\n").unwrap();
    assert_eq!(spectra(&["corpus", broken.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(spectra(&["corpus", dir.join("missing.toml").to_str().unwrap()]).status.code(), Some(2));

    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn bundled_corpus_passes() {
    let out = spectra(&["corpus"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["summary"]["failed"], 0);
    assert_eq!(doc["summary"]["errors"], 0);
}
