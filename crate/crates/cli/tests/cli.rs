use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures").join(name);
    p.to_string_lossy().into_owned()
}

fn scratch(tag: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("milnorplumb-cli-{}-{tag}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_milnorplumb")).args(args).output().unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut a = args.to_vec();
    a.push("--json");
    serde_json::from_str(&ok(&a)).unwrap()
}

#[test]
fn xyz3_pipeline_signature() {
    let d = scratch("xyz3");
    let (g, r) = (d.join("g.pl"), d.join("r.pl"));
    let (g, r) = (g.to_str().unwrap(), r.to_str().unwrap());
    ok(&["main-alg", &fixture("xyz3.gc"), "-o", g]);
    ok(&["reduce", g, "-o", r]);
    let s = json(&["signature", r]);
    assert_eq!(s["cg"], 1);
    assert_eq!(s["h1rank"], 1);
}

#[test]
fn a3_boundary_charpoly() {
    let d = scratch("a3");
    let gc = d.join("a3.gc");
    let gc = gc.to_str().unwrap();
    ok(&["build", "arrangement", &fixture("a3.arr"), "-o", gc]);
    let out = ok(&["boundary-charpoly", gc]);
    assert!(out.contains("charpoly: (t^3-1)^4 (t-1)^7"), "{out}");
    let v = json(&["boundary-charpoly", gc]);
    assert_eq!(v["status"], "exact");
    assert_eq!(v["charpoly"]["degree"], 19);
}

#[test]
fn c4_snf() {
    let d = scratch("c4");
    let (gc, pl) = (d.join("c4.gc"), d.join("c4.pl"));
    let (gc, pl) = (gc.to_str().unwrap(), pl.to_str().unwrap());
    ok(&["build", "homogeneous", &fixture("c4.curve"), "-o", gc]);
    ok(&["main-alg", gc, "-o", pl]);
    let v = json(&["snf", pl]);
    assert_eq!(v["torsion"], serde_json::json!(["5"]));
    assert_eq!(v["free_rank"], 0);
}

#[test]
fn xayb_orbifold() {
    let d = scratch("xayb");
    let pl = d.join("x.pl");
    let pl = pl.to_str().unwrap();
    ok(&["build", "xayb", "0", "4", "3", "7", "-o", pl]);
    assert_eq!(json(&["orbifold-euler", pl])["e"], "4/21");
}

#[test]
fn invariants_221() {
    let v = json(&["invariants", &fixture("221.gc")]);
    let t = &v["transversal"][0];
    assert_eq!(t["gluing_tori"], 1);
    assert_eq!(t["d_e"], serde_json::json!([2]));
    assert_eq!(t["transversal_branches"], 2);
}

#[test]
fn charpoly_selectors() {
    assert_eq!(json(&["charpoly", "--which", "phi-hor", &fixture("221.gc")])["charpoly"]["factored"], "(t-1)^2");
    let out = run(&["charpoly", "--which", "nope", &fixture("221.gc")]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["charpoly", "--which", "j-hor", &fixture("221.gc")]);
    assert_eq!(out.status.code(), Some(2), "missing branch index is a precondition failure");
}

#[test]
fn every_fixture_validates() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures");
    for e in std::fs::read_dir(dir).unwrap() {
        let p = e.unwrap().path();
        let v = json(&["validate", p.to_str().unwrap()]);
        assert_eq!(v["valid"], true, "{}", p.display());
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["snf", "/nonexistent/file.pl"]).status.code(), Some(1));
    let out = run(&["snf", &fixture("221.gc")]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.starts_with("error: validation:"), "{err}");
    assert_eq!(err.lines().count(), 1);
    // a leg ending in a 0-vertex has no orbifold Euler number
    let d = scratch("codes");
    let pl = d.join("zero.pl");
    std::fs::write(&pl, "plumb 1\nvertex c e=-2\nvertex l e=0\nedge c l s=+\n").unwrap();
    assert_eq!(run(&["orbifold-euler", pl.to_str().unwrap()]).status.code(), Some(3));
}

#[test]
fn preprocess_round_trip() {
    let d = scratch("pre");
    let out = d.join("a.gc");
    ok(&["preprocess", "--assumption", "a", &fixture("nu2.gc"), out.to_str().unwrap()]);
    let v = json(&["validate", out.to_str().unwrap()]);
    assert_eq!(v["assumption_a_violations"], 0);
}
