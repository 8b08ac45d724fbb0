//! The shipped fixture files and the exit-code contract of the binary.

use std::path::{Path, PathBuf};
use std::process::Command;

use dpcolor::fixtures;
use dpcolor::format::{parse_pg, parse_plan, write_pg};
use dpcolor::classify;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn dpcolor(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_dpcolor")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn fixture_files_match_the_corpus() {
    for (name, g) in fixtures::corpus() {
        let text = std::fs::read_to_string(fixture(&format!("{name}.pg"))).unwrap();
        assert_eq!(text, write_pg(&g), "{name}.pg is stale; rerun the export_corpus example");
        assert_eq!(parse_pg(&text).unwrap().canonical_code(), g.canonical_code());
    }
    for plan in ["light_pentagon.plan", "bad_path.plan"] {
        let text = std::fs::read_to_string(fixture(plan)).unwrap();
        parse_plan(&text, 42).unwrap();
    }
}

#[test]
fn exit_codes_on_the_corpus() {
    for (name, g) in fixtures::corpus() {
        let p = fixture(&format!("{name}.pg"));
        let p = p.to_str().unwrap();
        let member = classify(&g).in_class_g;
        assert_eq!(dpcolor(&["info", p]).0, 0, "{name}");
        assert_eq!(dpcolor(&["member", p]).0, if member { 0 } else { 1 }, "{name}");
        let (code, text) = dpcolor(&["discharge", p]);
        if member {
            assert_eq!(code, 0, "{name}");
            assert!(text.lines().any(|l| l == "totals: 0/1 0/1"), "{name}");
        } else {
            assert_eq!(code, 2, "{name}");
        }
        let audit = dpcolor(&["audit", p]).0;
        assert_eq!(audit, if member { 0 } else { 2 }, "{name}");
    }
}

#[test]
fn spec_style_invocations() {
    let h = fixture("h.pg");
    let c4 = fixture("c4.pg");
    let (h, c4) = (h.to_str().unwrap(), c4.to_str().unwrap());
    assert_eq!(dpcolor(&["member", h]).0, 0);
    assert_eq!(dpcolor(&["verify", c4]).0, 2);
    assert_eq!(dpcolor(&["dpcheck", "--k", "3", c4]).0, 0);
    assert_eq!(dpcolor(&["dpcheck", "--k", "2", "--jobs", "3", c4]).0, 1);
    assert_eq!(dpcolor(&["verify", "--jobs", "2", h]).0, 0);
    assert_eq!(dpcolor(&["solve", "--sig", fixture("h.sig").to_str().unwrap(), h]).0, 0);
    assert_eq!(dpcolor(&["goodcycle", "--cycle", "1,2,3,4,5,6", h]).0, 0);
    let claw = fixture("claw_5_5_8.pg");
    let cyc = (1..=12).map(|v| v.to_string()).collect::<Vec<_>>().join(",");
    let (code, text) = dpcolor(&["goodcycle", "--cycle", &cyc, claw.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(text.contains("[5,5,8]"), "{text}");
    assert_eq!(dpcolor(&["frobnicate"]).0, 2);
}

#[test]
fn surgery_and_extend_from_files() {
    let lp = fixture("light_pentagon.pg");
    let lp = lp.to_str().unwrap();
    let plan = fixture("light_pentagon.plan");
    let (code, text) = dpcolor(&["surgery", lp, "--plan", plan.to_str().unwrap()]);
    assert_eq!(code, 0, "{text}");
    assert!(text.contains("condition_b: true"));
    let bp = fixture("bad_path.pg");
    let plan = fixture("bad_path.plan");
    assert_eq!(dpcolor(&["surgery", bp.to_str().unwrap(), "--plan", plan.to_str().unwrap()]).0, 0);
    let pre = fixture("light_pentagon.precolor");
    assert_eq!(dpcolor(&["extend", lp, "--precolor", pre.to_str().unwrap()]).0, 0);
    let (code, text) = dpcolor(&["--json", "audit", lp, "--precolor", pre.to_str().unwrap()]);
    assert_eq!(code, 0);
    for line in text.lines() {
        serde_json::from_str::<serde_json::Value>(line).unwrap();
    }
}

#[test]
fn gen_is_byte_identical() {
    let a = dpcolor(&["gen", "--n", "30", "--seed", "11"]);
    let b = dpcolor(&["gen", "--n", "30", "--seed", "11"]);
    assert_eq!(a, b);
    assert_eq!(a.0, 0);
    let pg: String = a.1.lines().filter(|l| !l.starts_with("verdict:")).map(|l| format!("{l}\n")).collect();
    let g = parse_pg(&pg).unwrap();
    assert!(classify(&g).in_class_g);
    assert_eq!(g.n_vertices(), 30);
}
