use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

fn legvar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_legvar")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, serde_json::Value) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = legvar(&full);
    (o.status.code().unwrap(), serde_json::from_slice(&o.stdout).expect("JSON report"))
}

fn value<'a>(report: &'a serde_json::Value, name: &str) -> &'a str {
    report["values"].as_array().unwrap().iter().find(|v| v["name"] == name).unwrap_or_else(|| panic!("no value {name}"))
        ["value"]
        .as_str()
        .unwrap()
}

fn statuses(report: &serde_json::Value) -> Vec<String> {
    report["checks"].as_array().unwrap().iter().map(|c| c["status"].as_str().unwrap().to_string()).collect()
}

#[test]
fn k3_sigma_check() {
    let (code, r) = json(&["chern", "check", "--catalog", "K3blowup12", "--m", "1"]);
    assert_eq!(code, 0);
    assert_eq!(r["schema"], 1);
    assert_eq!(value(&r, "h^2"), "20");
    assert_eq!(value(&r, "c1*h^1"), "-12");
    assert_eq!(value(&r, "2ch2*h^0"), "-84");
    assert_eq!(statuses(&r), ["PASS"]);
}

#[test]
fn pullback_is_zero() {
    let (code, r) = json(&["bryant", "pullback", "--n", "3"]);
    assert_eq!(code, 0);
    assert_eq!(value(&r, "residual on x_0 != 0"), "0");
    assert_eq!(statuses(&r), ["PASS"]);
}

#[test]
fn ruled_verdict_fails() {
    let (code, r) = json(&["chern", "ruled", "--p", "3", "--q", "2"]);
    assert_eq!(code, 1);
    assert_eq!(r["exit_code"], 1);
    assert_eq!(value(&r, "discriminant"), "-32");
    assert_eq!(statuses(&r), ["FAIL"]);
}

#[test]
fn roots_check_prints_both_sides() {
    let (code, r) = json(&["roots", "check", "--type", "C", "--rank", "3", "--node", "3", "--lambda", "1"]);
    assert_eq!(code, 0);
    assert_eq!(value(&r, "lhs"), value(&r, "rhs"));
    let (code, _) = json(&["roots", "check", "--type", "A", "--rank", "3", "--node", "1", "--lambda", "2"]);
    assert_eq!(code, 1);
}

#[test]
fn chart_files() {
    let (code, r) = json(&["legendrian", "verify", "--chart", &fixture("twisted_cubic.chart")]);
    assert_eq!(code, 0);
    assert_eq!(statuses(&r), ["SAMPLED", "PASS"]);
    let (code, _) = json(&["legendrian", "verify", "--chart", &fixture("conic.chart")]);
    assert_eq!(code, 1);
    let (code, r) = json(&["legendrian", "discover-form", "--chart", &fixture("twisted_cubic.chart")]);
    assert_eq!(code, 0);
    assert_eq!(value(&r, "solution space dimension"), "1");
}

#[test]
fn variety_files() {
    let (code, r) = json(&["chern", "check", "--variety", &fixture("p1xp1.var")]);
    assert_eq!(code, 0);
    assert_eq!(value(&r, "h^2"), "4");
    let (code, _) = json(&["chern", "codegree", "--variety", &fixture("p1xp1.var")]);
    assert_eq!(code, 0);
    let (code, _) = json(&["chern", "check", "--variety", &fixture("p1xp1_bad.var")]);
    assert_eq!(code, 1);
}

#[test]
fn kummer_surface() {
    let kummer = fixture("kummer.hyp");
    let (code, r) = json(&["bryant", "position-report", "--hypersurface", &kummer]);
    assert_eq!(code, 0);
    assert!(statuses(&r).iter().all(|s| s == "PASS" || s == "SAMPLED"));
    let (_, r) = json(&["bryant", "indeterminacy", "--hypersurface", &kummer]);
    assert_eq!(value(&r, "degree"), "12");
}

#[test]
fn hypersurface_transforms() {
    let cubic = fixture("cuspidal_cubic.hyp");
    for cmd in ["lift", "transform"] {
        let (code, r) = json(&["bryant", cmd, "--hypersurface", &cubic]);
        assert_eq!(code, 0, "{cmd}");
        assert!(statuses(&r).iter().all(|s| s == "PASS"), "{cmd}");
    }
}

#[test]
fn flags_round_trip() {
    let (code, r) = json(&["bryant", "map", "--x", "[1,2,3]", "--y", "[-5,1,1]"]);
    assert_eq!(code, 0);
    let image = value(&r, "image").to_string();
    let (code, _) = json(&["bryant", "inverse", "--point", &image]);
    assert_eq!(code, 0);
    // Not incident.
    assert_eq!(legvar(&["bryant", "map", "--x", "[1,2,3]", "--y", "[1,1,1]"]).status.code(), Some(2));
}

#[test]
fn psi_reports() {
    let (code, r) = json(&["--prime", "1000003", "bryant", "psi", "--p", "x1*x2*x3"]);
    assert_eq!(code, 0);
    assert_eq!(value(&r, "P(grad P) / P^(d-1)"), "1");
    let (code, r) = json(&["--prime", "1000003", "bryant", "psi", "--p", "x1^3 + x2^3 + x3^3"]);
    assert_eq!(code, 1);
    assert!(statuses(&r).contains(&"FAIL".to_string()));
}

#[test]
fn sigma_variants() {
    let (code, _) = json(&["chern", "sigma", "--n", "3", "--m", "1"]);
    assert_eq!(code, 0);
    let (code, _) = json(&["chern", "sigma", "--n", "3", "--m", "1", "--variant", "binomial"]);
    assert_eq!(code, 1);
    let (code, r) = json(&["chern", "resultant", "--n", "8", "--compare-c8"]);
    assert_eq!(code, 1);
    assert_eq!(statuses(&r).iter().filter(|s| *s == "UNKNOWN").count(), 2);
    let (code, _) = json(&["chern", "resultant", "--catalog", "P1xQ(8)"]);
    assert_eq!(code, 0);
    let (code, r) = json(&["chern", "kodaira0", "--chi", "2"]);
    assert_eq!(code, 0);
    assert_eq!(value(&r, "sectional genus"), "9");
}

#[test]
fn malformed_input_exits_2() {
    let dir = std::env::temp_dir().join(format!("legvar-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.chart");
    std::fs::write(&bad, "3 1\n1\nt1\n").unwrap();
    let o = legvar(&["legendrian", "verify", "--chart", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert_eq!(legvar(&["legendrian", "verify", "--chart", "/nonexistent/file"]).status.code(), Some(2));
    assert_eq!(legvar(&["bryant", "pullback", "--n", "three"]).status.code(), Some(2));
    assert_eq!(legvar(&["chern", "check", "--catalog", "nope"]).status.code(), Some(2));
    assert_eq!(legvar(&["--format", "yaml", "selftest"]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn digest_ignores_whitespace() {
    let dir = std::env::temp_dir().join(format!("legvar-ws-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let (tight, spaced) = (dir.join("tight.hyp"), dir.join("spaced.hyp"));
    std::fs::write(&tight, "F=x2*x0^2-x1^3").unwrap();
    std::fs::write(&spaced, "\n  F   =   x2 * x0^2  -  x1^3\n\n").unwrap();
    let digest = |p: &PathBuf| {
        json(&["bryant", "lift", "--hypersurface", p.to_str().unwrap()]).1["inputs_sha256"]
            .as_str()
            .unwrap()
            .to_string()
    };
    assert_eq!(digest(&tight), digest(&spaced));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn reports_are_deterministic() {
    let kummer = fixture("kummer.hyp");
    let cubic = fixture("twisted_cubic.chart");
    for args in [
        vec!["bryant", "position-report", "--hypersurface", kummer.as_str()],
        vec!["--seed", "7", "legendrian", "verify", "--chart", cubic.as_str()],
        vec!["--seed", "3", "bryant", "psi", "--p", "x1*x2*x3", "--trials", "5"],
    ] {
        let a = legvar(&args);
        let b = legvar(&args);
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn text_report_layout() {
    let o = legvar(&["chern", "kodaira0", "--chi", "1"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.starts_with("command: chern kodaira0\ninputs sha256: "));
    assert!(text.lines().any(|l| l.starts_with("FAIL")));
    assert!(text.ends_with("exit code: 1\n"));
}

#[test]
fn selftest_passes() {
    let (code, r) = json(&["selftest"]);
    assert_eq!(r["checks"].as_array().unwrap().len(), 14);
    assert_eq!(code, 0, "{r}");
}
