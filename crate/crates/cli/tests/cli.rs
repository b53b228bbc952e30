use std::process::{Command, Output};

fn dnlat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dnlat")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_passes_and_skips() {
    let o = dnlat(&["verify", "--check", "relation-module-decomposition", "--n", "7"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("pass"));

    let o = dnlat(&["verify", "--theorem", "relation-module-cohomology", "--n", "6"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("dih:3:0"));

    let o = dnlat(&["verify", "--check", "mtilde-plus-stably-permutation", "--n", "4", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["status"], "skipped");
    assert_eq!(v[0]["detail"], "requires odd n >= 3");

    assert!(!dnlat(&["verify", "--check", "nonsense", "--n", "3"]).status.success());
}

#[test]
fn suite_reports_and_rejects_bad_ranges() {
    let o = dnlat(&["suite", "--n-min", "2", "--n-max", "2", "--format", "json", "--deterministic"]);
    assert!(o.status.success());
    let v: Vec<serde_json::Value> = serde_json::from_str(&stdout(&o)).unwrap();
    let status = |id: &str| v.iter().find(|r| r["id"] == id).unwrap()["status"].clone();
    assert_eq!(status("relation-module-cohomology"), "pass");
    assert_eq!(status("relation-module-action"), "pass");
    assert_eq!(status("mtilde-sum-permutation"), "skipped");
    assert!(v.iter().all(|r| r["elapsed_ms"] == 0));

    let again = dnlat(&["suite", "--n-min", "2", "--n-max", "2", "--format", "json", "--deterministic"]);
    assert_eq!(o.stdout, again.stdout);

    let bad = dnlat(&["suite", "--n-min", "9", "--n-max", "3"]);
    assert!(!bad.status.success());
}

#[test]
fn cohomology_tables() {
    let o = dnlat(&["cohomology", "--lattice", "Rab", "--n", "2", "--subgroup", "dih:1:0", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["h_minus1"], "Z/2");
    assert_eq!(v[0]["h1"], "0");

    let o = dnlat(&["cohomology", "--lattice", "regular", "--n", "5", "--format", "json"]);
    let v: Vec<serde_json::Value> = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v.iter().all(|r| r["h_minus1"] == "0" && r["h0_hat"] == "0" && r["h1"] == "0"));

    assert!(!dnlat(&["cohomology", "--lattice", "nope", "--n", "3"]).status.success());
    assert!(!dnlat(&["cohomology", "--lattice", "Rab", "--n", "6", "--subgroup", "rot:4"]).status.success());
}

#[test]
fn verdicts() {
    let o = dnlat(&["verdict", "--n", "9", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["stably_rational"], true);
    assert!(v["evidence"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));

    let o = dnlat(&["verdict", "--n", "8", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["stably_rational"], false);
    assert_eq!(v["retract_rational_over_infinite_k"], false);
    assert!(v["evidence"][0]["detail"].as_str().unwrap().contains("dih:4:0"));

    assert!(!dnlat(&["verdict", "--n", "1"]).status.success());
}

#[test]
fn export_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    for (name, n, rank) in [("mtilde_plus", 3, 4), ("Rab", 2, 5)] {
        let path = dir.path().join(format!("{name}.json"));
        let o = dnlat(&["export", "--lattice", name, "--n", &n.to_string(), "--out", path.to_str().unwrap()]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        let doc: dnlat::LatticeDoc = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(doc.rank, rank);
        let l = dnlat::DnLattice::from_doc(&doc).unwrap();
        assert_eq!(l, dnlat::lattice_by_name(name, n).unwrap());
    }
}
