use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use nvk_core::construct::manin_from_bialgebra;
use nvk_core::derived::gelfand_nn;
use nvk_core::io::{parse_spec, parse_tensor};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn nvk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nvk"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn check_exit_codes() {
    let nn2 = fixture("nn2.alg");
    assert_eq!(code(&nvk(&["check", p(&nn2), "--profile", "nn-bialgebra"])), 0);
    assert_eq!(code(&nvk(&["check", p(&fixture("zero2.alg")), "--profile", "nn-bialgebra"])), 0);
    let broken = nvk(&["check", p(&fixture("nn2-broken.alg")), "--profile", "nn-bialgebra"]);
    assert_eq!(code(&broken), 1);
    assert!(stdout(&broken).contains("FAIL NN-BI-3"));
    assert_eq!(code(&nvk(&["check", p(&nn2), "--profile", "no-such-profile"])), 2);
    assert_eq!(code(&nvk(&["check", p(&nn2), "--identity", "NOPE"])), 2);
    assert_eq!(code(&nvk(&["check", "/nonexistent.alg", "--identity", "NN-1"])), 2);
}

#[test]
fn report_file_lists_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    let rep = dir.path().join("r.json");
    let o = nvk(&[
        "check",
        p(&fixture("nn2-broken.alg")),
        "--identity",
        "NN-BI-1..4",
        "--report",
        p(&rep),
    ]);
    assert_eq!(code(&o), 1);
    let json = std::fs::read_to_string(&rep).unwrap();
    assert!(json.contains("\"verdict\": \"fail\""));
    assert!(json.contains("\"id\": \"NN-BI-3\""));
    assert!(json.contains("\"tuple\""));
}

#[test]
fn malformed_input_is_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.alg");
    std::fs::write(&bad, "dim = 2\n[ops]\nprec = [[0, 0, 2, \"1\"]]\n").unwrap();
    let o = nvk(&["check", p(&bad), "--identity", "NN-1"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn manin_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("m.alg");
    let nn2 = fixture("nn2.alg");
    assert_eq!(code(&nvk(&["construct", p(&nn2), "manin", "--out", p(&out)])), 0);
    assert_eq!(code(&nvk(&["check", p(&out), "--identity", "NN-1,NN-2,INV-NN"])), 0);
    let expected = manin_from_bialgebra(&parse_spec(&nn2).unwrap()).unwrap().value;
    assert_eq!(parse_spec(&out).unwrap(), expected);
}

#[test]
fn gelfand_round_trip_and_rejection() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.alg");
    let poly = fixture("poly3.alg");
    let o = nvk(&["construct", p(&poly), "gelfand", "--out", p(&out)]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("PASS NN-2"));
    assert_eq!(parse_spec(&out).unwrap(), gelfand_nn(&parse_spec(&poly).unwrap()).unwrap().value);
    let out2 = dir.path().join("x.alg");
    let o = nvk(&["construct", p(&fixture("poly3-ddx.alg")), "gelfand", "--out", p(&out2)]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("FAIL DER"));
    assert!(!out2.exists());
}

#[test]
fn triangular_with_zero_tensor() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.alg");
    let o = nvk(&[
        "construct",
        p(&fixture("zero2.alg")),
        "triangular",
        "--r",
        p(&fixture("r0.tensor")),
        "--out",
        p(&out),
    ]);
    assert_eq!(code(&o), 0);
    let spec = parse_spec(&out).unwrap();
    assert!(spec.coprod("coprec").unwrap().is_zero());
    assert!(spec.coprod("cosucc").unwrap().is_zero());
}

#[test]
fn matched_pair_then_bowtie_equals_manin() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b, bt) = (dir.path().join("a.alg"), dir.path().join("b.alg"), dir.path().join("bt.alg"));
    let nn2 = fixture("nn2.alg");
    let o = nvk(&["construct", p(&nn2), "matched-pair", "--out", p(&a), "--out-b", p(&b)]);
    assert_eq!(code(&o), 0);
    assert_eq!(code(&nvk(&["construct", p(&a), "bowtie-nn", "--with", p(&b), "--out", p(&bt)])), 0);
    let manin = manin_from_bialgebra(&parse_spec(&nn2).unwrap()).unwrap().value;
    assert_eq!(parse_spec(&bt).unwrap().ops, manin.ops);
    assert_eq!(code(&nvk(&["construct", p(&a), "bowtie-nn"])), 2);
}

#[test]
fn every_construction_runs_on_its_fixture() {
    let dir = tempfile::tempdir().unwrap();
    let out = |n: &str| dir.path().join(n);
    let run = |spec: &Path, c: &str, extra: &[&str], o: &Path| {
        let mut args = vec!["construct", p(spec), c, "--out", p(o)];
        args.extend_from_slice(extra);
        let res = nvk(&args);
        assert_eq!(code(&res), 0, "{c}: {}", stdout(&res));
        assert!(o.exists(), "{c} wrote nothing");
    };
    run(&fixture("nn2.alg"), "adjoint", &[], &out("adj.alg"));
    run(&out("adj.alg"), "dual-rep", &[], &out("dual.alg"));
    run(&fixture("nn2.alg"), "coadjoint", &[], &out("co.alg"));
    assert_eq!(parse_spec(&out("dual.alg")).unwrap(), parse_spec(&out("co.alg")).unwrap());
    run(&out("adj.alg"), "semidirect-nn", &[], &out("sd.alg"));
    run(&fixture("asi2.alg"), "double-construction", &[], &out("dc.alg"));
    run(&out("dc.alg"), "adjoint-form", &[], &out("dca.alg"));
    let dca = parse_spec(&out("dca.alg")).unwrap();
    assert_eq!(dca.map("partial_adjoint").unwrap(), dca.map("partial_hat").unwrap());
    run(&fixture("copoly3.alg"), "gelfand-dual", &[], &out("gd.alg"));
    run(&fixture("poly3-dend.alg"), "pre-novikov-from-dendriform", &[], &out("pnv.alg"));
    run(&fixture("pnv3-o.alg"), "pre-novikov-from-o", &[], &out("pnv2.alg"));
    assert_eq!(parse_spec(&out("pnv.alg")).unwrap(), parse_spec(&out("pnv2.alg")).unwrap());
    run(&fixture("pnv3-o.alg"), "lift-o-operator", &[], &out("lift.alg"));
    let lift = parse_spec(&out("lift.alg")).unwrap();
    assert_eq!(lift.dim, 6);
    run(&out("lift.alg"), "triangular", &[], &out("tri.alg"));
    assert_eq!(code(&nvk(&["check", p(&out("tri.alg")), "--profile", "nn-bialgebra"])), 0);
    run(&fixture("lift-qf.alg"), "pre-novikov-from-qf", &[], &out("pq.alg"));
    run(&fixture("dasi0.alg"), "derive-nn-bialgebra", &[], &out("d.alg"));
    assert_eq!(code(&nvk(&["check", p(&out("d.alg")), "--profile", "nn-bialgebra"])), 0);
}

#[test]
fn diagnostic_mode_builds_despite_failed_hypotheses() {
    let dir = tempfile::tempdir().unwrap();
    let o = dir.path().join("d.alg");
    let asi = fixture("asi2.alg");
    assert_eq!(code(&nvk(&["construct", p(&asi), "derive-nn-bialgebra", "--out", p(&o)])), 2);
    let dasi = fixture("dasi0.alg");
    let text = std::fs::read_to_string(&dasi).unwrap().replace("[2, 2, \"-2\"]", "[2, 2, \"2\"]");
    let bent = dir.path().join("bent.alg");
    std::fs::write(&bent, text).unwrap();
    assert_eq!(code(&nvk(&["construct", p(&bent), "derive-nn-bialgebra", "--out", p(&o)])), 1);
    assert!(!o.exists());
    let res = nvk(&["construct", p(&bent), "derive-nn-bialgebra", "--diagnostic", "--out", p(&o)]);
    assert!(stdout(&res).contains("[hypothesis]"));
    assert!(o.exists());
}

#[test]
fn search_examples() {
    let o = nvk(&["search", p(&fixture("nn2.alg")), "--grid", "-2,-1,0,1,2"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("1 solutions"));
    let dir = tempfile::tempdir().unwrap();
    let o = nvk(&[
        "search",
        p(&fixture("zero2.alg")),
        "--grid",
        "0,1",
        "--emit-bialgebras",
        p(dir.path()),
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("2 solutions"));
    let hit = dir.path().join("solution-1.alg");
    assert_eq!(code(&nvk(&["check", p(&hit), "--profile", "nn-bialgebra"])), 0);
    let o = nvk(&["search", p(&fixture("zero4.alg")), "--grid", "0,1,2", "--budget", "10"]);
    assert_eq!(code(&o), 3);
}

#[test]
fn search_prints_parseable_tensors() {
    let o = nvk(&["search", p(&fixture("zero2.alg")), "--grid", "1"]);
    let text = stdout(&o);
    let body = text.split("solution 0:\n").nth(1).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("r.tensor");
    std::fs::write(&f, body).unwrap();
    let r = parse_tensor(&f).unwrap();
    assert!(r.is_antisymmetric() && !r.is_zero());
}

#[test]
fn reports_are_identical_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let mut outs = Vec::new();
    for t in ["1", "4"] {
        let rep = dir.path().join(format!("r{t}.json"));
        let o = nvk(&[
            "--threads",
            t,
            "check",
            p(&fixture("nn2-broken.alg")),
            "--profile",
            "nn-bialgebra",
            "--report",
            p(&rep),
        ]);
        assert_eq!(code(&o), 1);
        outs.push(std::fs::read(&rep).unwrap());
    }
    assert_eq!(outs[0], outs[1]);
    let bad = Command::new(env!("CARGO_BIN_EXE_nvk"))
        .env("NVK_THREADS", "many")
        .args(["check", p(&fixture("nn2.alg")), "--identity", "NN-1"])
        .output()
        .unwrap();
    assert_eq!(code(&bad), 2);
}
