use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use parabolic_contact::specfile::{read_surface, ParseOptions};
use parabolic_contact::{sample_stratum, StratumId};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_parabolic-contact"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn field<'a>(text: &'a str, key: &str) -> Option<&'a str> {
    text.lines().find_map(|l| l.strip_prefix(key)?.strip_prefix(": "))
}

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn invariants_are_exact() {
    let o = run(&["invariants", data("beaks.monge").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(field(&out, "Q_D4"), Some("1/1"));
    assert_eq!(field(&out, "DC_f.discriminant_minus_Q_D4^3/144"), Some("0/1"));
    assert_eq!(field(&out, "dcf_root[+].residual"), Some("0/1"));
    assert_eq!(field(&out, "dcf_closed_form_agrees[+]"), Some("false"));
    for line in out.lines() {
        let v = line.split_once(": ").unwrap().1;
        if line.starts_with("Q_") || line.starts_with("R_") || line.starts_with("S_") {
            assert!(v.contains('/'), "{line}");
        }
    }
}

#[test]
fn validation_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let umbilic = write(&dir, "u.monge", "monge K=7\na 3 0 1/1\n");
    let o = run(&["invariants", &umbilic]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).to_lowercase().contains("umbilic"));
    let bad = write(&dir, "b.monge", "monge K=7\na 0 2 1/1\na 3 0 1//2\n");
    let o = run(&["classify", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    let dec = write(&dir, "d.monge", "monge K=7\na 0 2 0.5\na 3 0 1\na 1 2 1\n");
    assert_eq!(run(&["classify", &dec]).status.code(), Some(2));
    let o = run(&["--float", "classify", "--mode", "projection", &dec]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(field(&stdout(&o), "projection"), Some("lips"));
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(run(&[]).status.code(), Some(1));
    assert_eq!(run(&["classify"]).status.code(), Some(1));
    assert_eq!(run(&["verify", "everything"]).status.code(), Some(1));
    assert_eq!(run(&["invariants", "/no/such/file"]).status.code(), Some(1));
    let lips = data("lips.monge");
    assert_eq!(
        run(&["classify", "--mode", "contact", lips.to_str().unwrap()])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}

#[test]
fn classify_modes() {
    let lips = data("lips.monge");
    let lips = lips.to_str().unwrap();
    let out = stdout(&run(&["classify", lips]));
    assert_eq!(field(&out, "stratum"), Some("(ii)"));
    assert_eq!(field(&out, "projection"), Some("lips"));
    let out = stdout(&run(&["classify", "--mode", "stratum", lips]));
    assert_eq!(field(&out, "stratum"), Some("(ii)"));
    assert_eq!(field(&out, "projection"), None);
    let o = run(&["classify", "--mode", "contact", "--curve", "0,1", lips]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(field(&out, "contact"), Some("D_4^+"));
    assert_eq!(field(&out, "contact_agree"), Some("true"));
    assert!(field(&out, "contact_rule").unwrap().contains("D_4^+"));
    assert_eq!(field(&out, "milnor_mu"), Some("4"));
}

#[test]
fn traces_are_printed_on_request() {
    let beaks = data("beaks.monge");
    let beaks = beaks.to_str().unwrap();
    let plain = stdout(&run(&["contact", beaks, "--curve", "0,1"]));
    assert!(!plain.contains("contact_trace:"));
    let traced = stdout(&run(&["--trace", "contact", beaks, "--curve", "0,1,2"]));
    assert!(traced.contains("contact_trace:\n  start: "), "{traced}");
    assert!(traced.contains("  step 1:"), "{traced}");
}

#[test]
fn stratum_vi_reports_an_a6_directrix() {
    let dir = tempfile::tempdir().unwrap();
    let s = &sample_stratum(StratumId::VI, 3, 1)[0];
    let path = write(&dir, "vi.monge", &parabolic_contact::specfile::print_surface(s));
    let out = stdout(&run(&["classify", &path]));
    assert_eq!(field(&out, "stratum"), Some("(vi)"));
    assert_eq!(field(&out, "projection"), Some("ugly_gulls"));
    let a6 = out
        .lines()
        .find(|l| l.starts_with("cylinder[A_6"))
        .unwrap_or_else(|| panic!("no A_6 directrix in\n{out}"));
    let curve = a6.split_once(": ").unwrap().1;
    assert!(curve.contains("g2=") && curve.contains("g3="), "{curve}");
    // Feed the curve back through the contact command.
    let list: Vec<&str> = curve.split(' ').map(|t| t.split_once('=').unwrap().1).collect();
    let out = stdout(&run(&[
        "contact",
        &path,
        "--curve",
        &format!("0,{}", list[1..].join(",")),
    ]));
    assert!(field(&out, "contact").unwrap().starts_with("A_6"), "{out}");
}

#[test]
fn cylinder_targets() {
    let beaks = data("beaks.monge");
    let beaks = beaks.to_str().unwrap();
    let o = run(&["cylinder", beaks, "--target", "D_5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(field(&stdout(&o), "cylinder[D_5][0]").is_some());
    let o = run(&["cylinder", beaks, "--target", "A_7"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(field(&stdout(&o), "cylinder[A_7]").unwrap().starts_with("unreachable"));
    assert_eq!(run(&["cylinder", beaks, "--target", "Z_11"]).status.code(), Some(1));
}

#[test]
fn degree_bound_and_tolerance() {
    let gulls = data("gulls.monge");
    let gulls = gulls.to_str().unwrap();
    let out = stdout(&run(&["--degree-bound", "9", "invariants", gulls]));
    assert_eq!(field(&out, "degree_bound"), Some("9"));
    // Under a tolerance even an exact zero such as a_30 is indeterminate.
    let out = stdout(&run(&["--tolerance", "1/100", "classify", "--mode", "stratum", gulls]));
    assert!(field(&out, "stratum").unwrap().starts_with("boundary"), "{out}");
    let lips = data("lips.monge");
    let lips = lips.to_str().unwrap();
    let out = stdout(&run(&["--tolerance", "1/100", "classify", "--mode", "stratum", lips]));
    assert_eq!(field(&out, "stratum"), Some("(ii)"));
    let out = stdout(&run(&["--tolerance", "2", "classify", "--mode", "stratum", lips]));
    assert_eq!(field(&out, "stratum"), Some("boundary(sign of a_30 != 0)"));
    assert_eq!(run(&["--tolerance", "-1", "invariants", gulls]).status.code(), Some(1));
}

#[test]
fn verify_suites_pass() {
    for suite in ["theorem45", "oracle", "discriminant", "determinacy"] {
        let o = run(&["verify", suite, "--seed", "5", "--count", "3"]);
        let out = stdout(&o);
        assert_eq!(o.status.code(), Some(0), "{out}");
        assert_eq!(field(&out, "result"), Some("pass"));
        assert_eq!(field(&out, "failures"), Some("0"));
    }
}

#[test]
fn sample_writes_canonical_files() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("out");
    let o = run(&[
        "sample",
        "iii",
        "--seed",
        "7",
        "--count",
        "3",
        "--out",
        out_dir.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let mut files: Vec<_> = fs::read_dir(&out_dir).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    assert_eq!(files.len(), 3);
    let expected = sample_stratum(StratumId::III, 7, 3);
    for (path, s) in files.iter().zip(&expected) {
        let text = fs::read_to_string(path).unwrap();
        assert_eq!(read_surface(&text, ParseOptions::default()).unwrap().jet(), s.jet());
        let out = stdout(&run(&["classify", "--mode", "projection", path.to_str().unwrap()]));
        assert_eq!(field(&out, "projection"), Some("goose"));
    }
    assert_eq!(
        run(&["sample", "ix", "--out", out_dir.to_str().unwrap()]).status.code(),
        Some(1)
    );
}
