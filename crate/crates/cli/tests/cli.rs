use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bergman-eggs"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn run_ok(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    stdout(&out)
}

fn json_lines(text: &str) -> Vec<serde_json::Value> {
    text.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn describe_reports_invariants() {
    let v = run_ok(&["describe", "--domain", "V"]);
    assert!(v.contains("r=2, a=6, b=4, g=12, n=16"), "{v}");
    assert!(v.contains("not of tube type"));
    let iii = run_ok(&["describe", "--domain", "III:3"]);
    assert!(iii.contains("r=3, a=1, b=0, g=4, n=6"), "{iii}");
    let doc: serde_json::Value = serde_json::from_str(&run_ok(&["describe", "--domain", "IV:5", "--format", "json"])).unwrap();
    assert_eq!(doc["invariants"]["a"], 3);
    assert_eq!(doc["tube_type"], true);
}

#[test]
fn invalid_domains_exit_2() {
    for spec in ["IV:2", "IV:1", "I:3,2", "II:1", "VII", "I:1"] {
        assert_eq!(run(&["describe", "--domain", spec]).status.code(), Some(2), "{spec}");
    }
    assert_eq!(run(&["chi", "--domain", "V", "--format", "pdf"]).status.code(), Some(2));
}

#[test]
fn chi_renderings() {
    let vi = run_ok(&["chi", "--domain", "VI"]);
    assert!(vi.starts_with("chi(s) = (s+1)_17 * (s+5)_9 * (s+9)\n"), "{vi}");
    assert!(vi.contains("degree 27"));
    assert!(run_ok(&["chi", "--domain", "I:2,3"]).contains("(s+1)_3 * (s+2)_3"));
    let disc: serde_json::Value = serde_json::from_str(&run_ok(&["chi", "--domain", "I:1,1", "--format", "json"])).unwrap();
    assert_eq!(disc["coefficients"], serde_json::json!([1, 1]));
    assert_eq!(run_ok(&["chi", "--domain", "V", "--format", "latex"]).trim(), "\\chi(s) = (s+1)_{11}(s+4)_{5}");
}

#[test]
fn kernel_emission() {
    let y = run_ok(&["kernel", "y", "--domain", "I:1,1", "--k", "1", "--q", "1"]);
    assert!(y.contains("F(X) = 2*(1-X)^-3"), "{y}");
    assert!(y.contains("chi(0)*vol"));
    let e = run_ok(&["kernel", "e", "--domain", "I:1,1", "--k", "1", "--p", "1", "--q", "1", "--format", "latex"]);
    assert!(e.contains("(1-\\lambda)^{-4}"), "{e}");
    let k_dec = run_ok(&["kernel", "e", "--domain", "IV:3", "--k", "1.5", "--p", "2", "--q", "2", "--format", "json"]);
    let k_rat = run_ok(&["kernel", "e", "--domain", "IV:3", "--k", "3/2", "--p", "2", "--q", "2", "--format", "json"]);
    assert_eq!(k_dec, k_rat);
    assert!(k_rat.starts_with("{\"k\":\"3/2\",\"terms\":["));
}

#[test]
fn emit_round_trip_is_byte_identical() {
    let doc = run_ok(&["kernel", "e", "--domain", "IV:3", "--k", "3/2", "--p", "2", "--q", "2", "--format", "json"]);
    let mut child = Command::new(env!("CARGO_BIN_EXE_bergman-eggs"))
        .args(["emit", "--format", "json"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(doc.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out), doc);
    let bad = run(&["emit", "/nonexistent/kernel.json"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn eval_at_ball_points() {
    let center: f64 = run_ok(&["eval", "y", "--domain", "I:1,1", "--k", "1", "--vol", "1"]).trim().parse().unwrap();
    assert!((center - 2.0).abs() < 1e-14);
    let e: f64 = run_ok(&[
        "eval", "e", "--domain", "I:1,1", "--k", "1", "--w1", "0.2", "--w2", "0.3", "--z", "0.1", "--vol", "1",
    ])
    .trim()
    .parse()
    .unwrap();
    let want = 6.0 * (1.0f64 - 0.04 - 0.09 - 0.01).powi(-4);
    assert!((e - want).abs() / want < 1e-12, "{e} vs {want}");
    let y2: f64 = run_ok(&["eval", "y", "--domain", "I:1,1", "--k", "1", "--q", "2", "--w", "0.1,0.2i", "--z", "0.3i"])
        .trim()
        .parse()
        .unwrap();
    let want = 3.0 * (1.0f64 - 0.01 - 0.04 - 0.09).powi(-4);
    assert!((y2 - want).abs() / want < 1e-12, "{y2} vs {want}");
}

#[test]
fn eval_error_codes() {
    let outside = run(&["eval", "y", "--domain", "I:1,1", "--k", "1", "--w", "0.9", "--z", "0.5"]);
    assert_eq!(outside.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&outside.stderr).contains("outside"));
    let z_outside = run(&["eval", "y", "--domain", "I:1,1", "--k", "1", "--z", "1.5"]);
    assert_eq!(z_outside.status.code(), Some(3));
    let no_volume = run(&["eval", "y", "--domain", "I:2,2", "--k", "1"]);
    assert_eq!(no_volume.status.code(), Some(2));
    let arity = run(&["eval", "y", "--domain", "I:1,1", "--k", "1", "--w", "0.1,0.1"]);
    assert_eq!(arity.status.code(), Some(2));
    let bad_k = run(&["eval", "y", "--domain", "I:1,1", "--k", "0"]);
    assert_eq!(bad_k.status.code(), Some(2));
}

#[test]
fn verify_series_suites_pass() {
    let reports = json_lines(&run_ok(&["verify", "series-e", "--domain", "I:1,1", "--k", "2", "--points", "10"]));
    assert_eq!(reports.len(), 10);
    assert!(reports.iter().all(|r| r["pass"] == true && r["tolerance"] == 1e-8));
    let reports = json_lines(&run_ok(&["verify", "series-y", "--domain", "IV:3", "--k", "3/2", "--points", "4"]));
    assert!(reports.iter().all(|r| r["pass"] == true));
}

#[test]
fn verification_failure_exits_1() {
    let out = run(&["verify", "series-y", "--domain", "I:1,1", "--points", "2", "--tol", "1e-30"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json_lines(&stdout(&out)).len(), 2);
}

#[test]
fn verify_is_reproducible_and_caches_volumes() {
    let args = ["verify", "volume", "--domain", "I:1,2", "--samples", "100000", "--seed", "4"];
    let a = run_ok(&args);
    assert_eq!(a, run_ok(&args));
    assert_eq!(a, run_ok(&["--workers", "1", "verify", "volume", "--domain", "I:1,2", "--samples", "100000", "--seed", "4"]));
    assert_eq!(json_lines(&a)[0]["pass"], true);

    let cache = std::env::temp_dir().join(format!("bergman-eggs-cache-{}.json", std::process::id()));
    let _ = std::fs::remove_file(&cache);
    let cache_arg = cache.to_str().unwrap();
    let est = json_lines(&run_ok(&["verify", "volume", "--domain", "I:2,2", "--samples", "100000", "--cache", cache_arg]));
    let vol = est[0]["estimate"].as_f64().unwrap();
    let cached: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&cache).unwrap()).unwrap();
    assert_eq!(cached["I:2,2|100000|1"]["value"].as_f64(), Some(vol));
    let with_cache: f64 = run_ok(&["eval", "y", "--domain", "I:2,2", "--k", "1", "--cache", cache_arg]).trim().parse().unwrap();
    let with_vol: f64 = run_ok(&["eval", "y", "--domain", "I:2,2", "--k", "1", "--vol", &vol.to_string()]).trim().parse().unwrap();
    assert_eq!(with_cache, with_vol);
    std::fs::remove_file(&cache).unwrap();
}

#[test]
fn verify_stochastic_suites() {
    let r = json_lines(&run_ok(&["verify", "selberg", "--domain", "I:1,1", "--s", "1/2,2", "--samples", "100000", "--seed", "7"]));
    assert_eq!(r.len(), 2);
    assert!((r[1]["reference"].as_f64().unwrap() - 1.0 / 3.0).abs() < 1e-15);
    let r = json_lines(&run_ok(&["verify", "coeffs", "--domain", "I:1,1", "--k", "2", "--samples", "100000", "--degree", "1"]));
    assert_eq!(r.len(), 5);
    let r = json_lines(&run_ok(&["verify", "reproducing", "--domain", "I:1,1", "--samples", "200000"]));
    assert_eq!(r[0]["pass"], true);
}
