use std::path::PathBuf;
use std::process::Command;

use nschur::cli::{run, EXIT_DOMAIN, EXIT_FAIL, EXIT_OK, EXIT_USAGE};
use nschur::exactalg::ratfunc_from_json;
use nschur::nschur::n_schur;
use nschur::MayaSequence;

fn nschur(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("nschur").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn fixture(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("nschur-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn compute_golden_text() {
    let (code, out, _) = nschur(&["compute", "-n", "1", "--partition", "2"]);
    assert_eq!((code, out.as_str()), (EXIT_OK, "h[1,1,2] / h[1,1,0]\n"));
    let (code, out, _) = nschur(&["compute", "-n", "3", "--partition", ""]);
    assert_eq!((code, out.as_str()), (EXIT_OK, "1\n"));
    let (_, by_maya, _) = nschur(&["compute", "-n", "2", "--maya", "[-2,1,2]"]);
    let (_, by_part, _) = nschur(&["compute", "-n", "2", "--partition", "2"]);
    assert_eq!(by_maya, by_part);
    let (_, cross, _) = nschur(&["compute", "-n", "2", "--partition", "[-2]"]);
    assert_eq!(cross, by_part);
}

#[test]
fn compute_json_roundtrips() {
    let (code, out, _) = nschur(&["compute", "-n", "2", "--partition", "2,1", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let f = ratfunc_from_json(&v).unwrap();
    let s = MayaSequence::from_partition(&"2,1".parse().unwrap());
    assert!(f.identical(&n_schur(&s, 2)));
}

#[test]
fn compute_latex() {
    let (code, out, _) = nschur(&["compute", "--partition", "2", "--format", "latex"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "\\frac{h_{1,1,2}}{h_{1,1,0}}");
}

#[test]
fn compute_errors() {
    let (code, _, err) = nschur(&["compute", "-n", "2", "--partition", "1,1,1", "-N", "1"]);
    assert_eq!(code, EXIT_DOMAIN);
    assert!(err.contains("truncation"));
    assert_eq!(nschur(&["compute", "--partition", "1,2"]).0, EXIT_USAGE);
    assert_eq!(nschur(&["compute", "--maya", "[3]"]).0, EXIT_USAGE);
    assert_eq!(nschur(&["compute"]).0, EXIT_USAGE);
    assert_eq!(nschur(&["compute", "--partition", "1", "--maya", "[-1]"]).0, EXIT_USAGE);
    assert_eq!(nschur(&["compute", "-n", "0", "--partition", "1"]).0, EXIT_USAGE);
}

#[test]
fn enumerate_rows() {
    let (code, out, _) = nschur(&["enumerate", "--weight", "2"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "1,1\t[-1,0]\n2\t[-2]\n");
    let (_, out, _) = nschur(&["enumerate", "--weight", "0"]);
    assert_eq!(out, "∅\t[]\n");
    let (_, out, _) = nschur(&["enumerate", "--weight", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 5);
    assert_eq!(v[4]["maya"], "[-4]");
    assert_eq!(nschur(&["enumerate", "--weight", "-1"]).0, EXIT_USAGE);
}

#[test]
fn verify_pass_and_json() {
    let point = fixture("p.json", r#"{"n":1,"d":1,"r":1,"B":[["1"],["2"]]}"#);
    let series = fixture("s.json", r#"{"n":1,"K":3,"H":[[["2"]],[["1"]],[["-3"]],[["1/2"]]]}"#);
    let (p, s) = (point.to_str().unwrap(), series.to_str().unwrap());
    let (code, out, _) = nschur(&["verify", "--point", p, "--series", s]);
    assert_eq!(code, EXIT_OK);
    // <[-1]|W> f_[-1] + <[]|W> = 1 * (1/2) + 2
    assert!(out.contains("lhs: 5/2\nrhs: 5/2"));
    assert!(out.ends_with("result: pass\n"));
    let (_, out, _) = nschur(&["verify", "--point", p, "--series", s, "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["support"].as_array().unwrap().len(), 2);
}

#[test]
fn verify_identity_and_coordinate_points() {
    let identity = fixture("id.json", r#"{"n":2,"d":0,"r":0,"B":[]}"#);
    let (code, out, _) = nschur(&["verify", "--point", identity.to_str().unwrap(), "--seed", "1"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("lhs: 1\nrhs: 1\n"), "{out}");
    // W spanned by e_{-2}, e_0, e_2, e_3, ...: the coordinate point of [-2,0].
    let coord = fixture("coord.json", r#"{"n":2,"d":2,"r":2,"B":[["1","0"],["0","0"],["0","1"],["0","0"]]}"#);
    let (code, out, _) = nschur(&["verify", "--point", coord.to_str().unwrap(), "--seed", "2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("support: 1 ([-2,0])"), "{out}");
}

#[test]
fn verify_random_series_is_seeded() {
    let point = fixture("p2.json", r#"{"n":2,"d":2,"r":2,"B":[["1","0"],["3","1/2"],["0","2"],["5","-1"]]}"#);
    let p = point.to_str().unwrap();
    let a = nschur(&["verify", "--point", p, "--seed", "4"]);
    let b = nschur(&["verify", "--point", p, "--seed", "4"]);
    assert_eq!(a.0, EXIT_OK);
    assert_eq!(a, b);
}

#[test]
fn verify_errors() {
    let singular = fixture("sing.json", r#"{"n":1,"K":1,"H":[[["0"]],[["1"]]]}"#);
    let point = fixture("p3.json", r#"{"n":1,"d":1,"r":1,"B":[["1"],["2"]]}"#);
    let bad_rank = fixture("rank.json", r#"{"n":1,"d":1,"r":1,"B":[["0"],["0"]]}"#);
    let garbage = fixture("garbage.json", "{");
    let (p, s) = (point.to_str().unwrap(), singular.to_str().unwrap());
    assert_eq!(nschur(&["verify", "--point", p, "--series", s]).0, EXIT_DOMAIN);
    assert_eq!(nschur(&["verify", "--point", bad_rank.to_str().unwrap()]).0, EXIT_DOMAIN);
    assert_eq!(nschur(&["verify", "--point", garbage.to_str().unwrap()]).0, EXIT_USAGE);
    assert_eq!(nschur(&["verify", "--point", "/nonexistent/p.json"]).0, EXIT_USAGE);
    let frac = fixture("frac.json", r#"{"n":1,"d":1,"r":1,"B":[["1/7"],["2"]]}"#);
    let (code, _, err) = nschur(&["verify", "--point", frac.to_str().unwrap(), "--max-denominator", "5"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("max-denominator"));
    // EXIT_FAIL is reserved for a genuine mismatch, which exact arithmetic never produces.
    assert_ne!(EXIT_FAIL, EXIT_OK);
}

#[test]
fn tau_expand_exp() {
    let coeffs = fixture("c.json", r#"{"terms":[{"partition":"","coeff":"1"},{"partition":"1","coeff":"1"}]}"#);
    let c = coeffs.to_str().unwrap();
    let (code, out, _) = nschur(&["tau-expand", "--exp", "t1,t2", "--degree", "3", "--coeffs", c]);
    assert_eq!((code, out.as_str()), (EXIT_OK, "1 + t1\n"));
    let psi = fixture("psi.json", r#"{"exp":{"times":["t1","t2"],"K":3}}"#);
    let (code, out, _) = nschur(&["tau-expand", "--psi", psi.to_str().unwrap(), "--coeffs", c]);
    assert_eq!((code, out.as_str()), (EXIT_OK, "1 + t1\n"));
    let (_, out, _) = nschur(&["tau-expand", "--exp", "t1,t2", "--degree", "3", "--coeffs", c, "--format", "json"]);
    let f = ratfunc_from_json(&serde_json::from_str(&out).unwrap()).unwrap();
    assert_eq!(f.to_string(), "1 + t1");
}

#[test]
fn tau_expand_errors() {
    let big = fixture("big.json", r#"{"terms":[{"partition":"2,2","coeff":"1"}]}"#);
    let b = big.to_str().unwrap();
    let (code, _, err) = nschur(&["tau-expand", "--exp", "t1", "--degree", "2", "--coeffs", b]);
    assert_eq!(code, EXIT_DOMAIN);
    assert!(err.contains('3'), "{err}");
    assert_eq!(nschur(&["tau-expand", "--exp", "t1", "--coeffs", b]).0, EXIT_USAGE);
    assert_eq!(nschur(&["tau-expand", "--coeffs", b]).0, EXIT_USAGE);
}

#[test]
fn binary_runs() {
    let out = Command::new(env!("CARGO_BIN_EXE_nschur"))
        .args(["compute", "-n", "1", "--partition", "2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "h[1,1,2] / h[1,1,0]\n");
    let out = Command::new(env!("CARGO_BIN_EXE_nschur")).arg("frobnicate").output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
}
