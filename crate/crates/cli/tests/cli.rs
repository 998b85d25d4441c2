use std::path::{Path, PathBuf};
use std::process::Command;

use engeltori_cli::{run, Invocation, EXIT_HYPOTHESIS, EXIT_INVALID, EXIT_OK};
use serde_json::Value;

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

fn cli(args: &[&str]) -> Invocation {
    run(std::iter::once("engeltori").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = cli(&full);
    assert_eq!(out.code, EXIT_OK, "{args:?}: {}", out.stderr);
    serde_json::from_str(&out.stdout).expect("valid JSON")
}

fn write_json(dir: &Path, name: &str, v: &Value) -> String {
    let p: PathBuf = dir.join(name);
    std::fs::write(&p, serde_json::to_string(v).unwrap()).unwrap();
    p.display().to_string()
}

#[test]
fn front_unknot_invariants() {
    let v = json(&["knot", "invariants", &fixture("front-unknot.json")]);
    assert_eq!((v["tb"].as_i64(), v["rot"].as_i64()), (Some(-1), Some(0)));
    let v = json(&["knot", "invariants", &fixture("front-trefoil.json")]);
    assert_eq!((v["tb"].as_i64(), v["rot"].as_i64()), (Some(1), Some(0)));
    let v = json(&["knot", "invariants", &fixture("braid-trefoil.json")]);
    assert_eq!(v["sl"].as_i64(), Some(1));
}

#[test]
fn torus2_homology() {
    let v = json(&["homology", "catalog:torus2"]);
    let ranks: Vec<u64> = v["groups"].as_array().unwrap().iter().map(|g| g["free_rank"].as_u64().unwrap()).collect();
    assert_eq!(ranks, vec![1, 2, 1]);
    assert_eq!(v["display"], serde_json::json!(["Z", "Z^2", "Z"]));
    let v = json(&["homology", &fixture("complex-torus.json")]);
    assert_eq!(v["display"], serde_json::json!(["Z", "Z^2", "Z"]));
}

#[test]
fn thm11_with_five() {
    let v = json(&["verify", "thm11", "--count", "5"]);
    let pairs = v["pairs"].as_array().unwrap();
    assert_eq!(pairs.len(), 15);
    assert!(pairs.iter().all(|p| p["outcome"] == "Distinct"));
    let text = cli(&["verify", "thm11", "--count", "5"]);
    assert_eq!(text.code, EXIT_OK);
    assert_eq!(text.stdout.matches("Distinct").count(), 15 + 1);
}

#[test]
fn exit_codes_follow_error_class() {
    // validation errors
    for args in [
        vec!["knot", "invariants", "/nonexistent.json"],
        vec!["knot", "invariants", &fixture("braid-hopf.json")],
        vec!["homology", &fixture("complex-bad.json")],
        vec!["homology", "catalog:klein_bottle"],
        vec!["knot", "stabilize", &fixture("front-unknot.json"), "--sign", "sideways"],
        vec!["torus", "tb-class", &fixture("transverse-unknot.json")],
        vec!["torus", "distinguish", &fixture("transverse-unknot.json"), &fixture("legendrian-unknot.json")],
        vec!["no-such-command"],
    ] {
        let out = cli(&args);
        assert_eq!(out.code, EXIT_INVALID, "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    // hypothesis violations
    for args in [
        vec!["torus", "sl-class", &fixture("transverse-bad-ambient.json")],
        vec!["torus", "tb-class", &fixture("legendrian-not-manifold.json")],
        vec!["homology", "alexander", "--sphere-dim", "1", &fixture("graded-torus.json")],
    ] {
        let out = cli(&args);
        assert_eq!(out.code, EXIT_HYPOTHESIS, "{args:?}: {}", out.stderr);
        assert!(out.stderr.contains("hypothesis") || out.stderr.contains("3-manifold"));
    }
    assert_eq!(cli(&["--help"]).code, EXIT_OK);
}

#[test]
fn outputs_feed_back_in() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();

    // invariants of an emitted invariants object are the same
    let first = json(&["knot", "invariants", &fixture("front-trefoil.json")]);
    let again = json(&["knot", "invariants", &write_json(d, "inv.json", &first)]);
    assert_eq!(first, again);

    // a stabilized profile can be stabilized further
    let once = json(&["knot", "stabilize", &fixture("front-unknot.json"), "--sign", "-", "--count", "1"]);
    let twice = json(&["knot", "stabilize", &write_json(d, "s1.json", &once), "--sign", "-", "--count", "1"]);
    let direct = json(&["knot", "stabilize", &fixture("front-unknot.json"), "--sign", "-", "--count", "2"]);
    assert_eq!(twice["profile"], direct["profile"]);
    assert_eq!((twice["tb"].as_i64(), twice["rot"].as_i64()), (Some(-3), Some(-2)));

    // homology output is a graded group for the duality and product commands
    let h = json(&["homology", "catalog:torus2"]);
    let hp = write_json(d, "h.json", &h);
    let dual = json(&["homology", "alexander", "--sphere-dim", "4", &hp]);
    assert_eq!(dual["display"], serde_json::json!(["0", "Z", "Z^2"]));
    let k = json(&["homology", "kunneth", &hp, "catalog:circle"]);
    assert_eq!(k["display"], serde_json::json!(["Z", "Z^3", "Z^3", "Z"]));

    // a catalog export is a complex
    let shown = json(&["catalog", "show", "moore_z2"]);
    let h = json(&["homology", &write_json(d, "m.json", &shown)]);
    assert_eq!(h["display"], serde_json::json!(["Z", "Z/2"]));

    // class reports carry their manifest
    for (cmd, m) in [("sl-class", "transverse-unknot-3.json"), ("tb-class", "legendrian-unknot-2.json")] {
        let first = json(&["torus", cmd, &fixture(m)]);
        let again = json(&["torus", cmd, &write_json(d, "c.json", &first)]);
        assert_eq!(first, again, "{cmd}");
    }
}

#[test]
fn torus_commands() {
    let v = json(&["torus", "sl-class", &fixture("transverse-unknot-3.json")]);
    assert_eq!(v["class"]["coords"], serde_json::json!([-7, 0]));
    assert_eq!(v["class"]["basis"], "alpha_beta");
    let v = json(&["torus", "tb-class", &fixture("legendrian-unknot-2.json")]);
    assert_eq!(v["class"]["coords"], serde_json::json!([-3]));
    assert_eq!(v["complement_h2"]["free_rank"].as_u64(), Some(3));
    let v = json(&["torus", "distinguish", &fixture("transverse-unknot.json"), &fixture("transverse-unknot-3.json")]);
    assert_eq!(v["outcome"], "Distinct");
    assert_eq!(v["certificate"], serde_json::json!([1, 7]));
    let v = json(&["torus", "distinguish", &fixture("legendrian-unknot.json"), &fixture("legendrian-unknot.json")]);
    assert_eq!(v["outcome"], "Inconclusive");
    assert!(v["certificate"].is_null());
    let v = json(&["torus", "family", &fixture("transverse-unknot-3.json")]);
    assert_eq!(v["pairs"].as_array().unwrap().len(), 6);
}

#[test]
fn verify_scenarios() {
    assert_eq!(json(&["verify", "lemma42"])["all_agree"], true);
    let s = json(&["verify", "segment"]);
    assert_eq!((s["exact"].as_bool(), s["f_injective"].as_bool()), (Some(true), Some(true)));
    let l = json(&["verify", "laws", "--seed", "9", "--samples", "25"]);
    assert_eq!(l["passed"], true);
    // same seed, same report
    assert_eq!(l, json(&["verify", "laws", "--seed", "9", "--samples", "25"]));
}

#[test]
fn render_writes_svg() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("trefoil.svg");
    let v = json(&["render", "front", &fixture("front-trefoil.json"), "--svg", out.to_str().unwrap()]);
    let svg = std::fs::read_to_string(&out).unwrap();
    assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
    assert_eq!(svg.matches("<path").count() as u64, v["paths"].as_u64().unwrap());
    assert_eq!(cli(&["render", "front", &fixture("braid-trefoil.json"), "--svg", "/tmp/x.svg"]).code, EXIT_INVALID);
}

#[test]
fn catalog_directory_override() {
    // run the binary so the environment change stays out of this process
    let dir = tempfile::tempdir().unwrap();
    std::fs::copy(fixture("complex-rp2.json"), dir.path().join("torus2.json")).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_engeltori"))
        .args(["--json", "homology", "catalog:torus2"])
        .env("ENGELTORI_CATALOG_DIR", dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["display"], serde_json::json!(["Z", "Z/2"]));
    // ids without an override file fall back to the built-in entry
    let out = Command::new(env!("CARGO_BIN_EXE_engeltori"))
        .args(["--json", "homology", "catalog:circle"])
        .env("ENGELTORI_CATALOG_DIR", dir.path())
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["display"], serde_json::json!(["Z", "Z"]));
}

#[test]
fn binary_exit_codes() {
    let status = |args: &[&str]| Command::new(env!("CARGO_BIN_EXE_engeltori")).args(args).output().unwrap().status.code();
    assert_eq!(status(&["verify", "thm12", "--count", "3"]), Some(0));
    assert_eq!(status(&["knot", "invariants", &fixture("braid-hopf.json")]), Some(1));
    assert_eq!(status(&["torus", "sl-class", &fixture("transverse-bad-ambient.json")]), Some(2));
}
