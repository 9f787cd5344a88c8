use std::path::Path;
use std::process::{Command, Output};

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_renormkit")).current_dir(dir).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn cloud_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["codes", "cloud", "--q", "2", "--n", "12", "--count", "1000", "--seed", "7"];
    let first = run(dir.path(), &[&args[..], &["--out", "a.csv", "--svg", "a.svg"]].concat());
    assert!(first.status.success(), "{}", String::from_utf8_lossy(&first.stderr));
    let second = run(dir.path(), &[&args[..], &["--out", "b.csv", "--svg", "b.svg"]].concat());
    assert!(second.status.success());
    let read = |f: &str| std::fs::read(dir.path().join(f)).unwrap();
    assert_eq!(read("a.csv"), read("b.csv"));
    assert_eq!(read("a.svg"), read("b.svg"));
    let csv = String::from_utf8(read("a.csv")).unwrap();
    let lines: Vec<_> = csv.lines().collect();
    assert!(lines[0].starts_with("# renormkit "));
    assert_eq!(lines[1], "q,n,size,k,d,R,delta,K_bits");
    assert_eq!(lines.len(), 1002);
    let svg = String::from_utf8(read("a.svg")).unwrap();
    assert!(svg.contains("viewBox=\"0 0 800 600\""));
    assert_eq!(svg.matches("<polyline").count(), 3);
    assert_eq!(svg.matches("<circle").count(), 1000);
}

#[test]
fn invalid_parameters_write_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["codes", "cloud", "--n", "0", "--out", "x.csv", "--svg", "x.svg"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!String::from_utf8_lossy(&o.stderr).is_empty());
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 0);
    let o = run(dir.path(), &["codes", "cloud", "--q", "2", "--n", "4", "--size", "17"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(dir.path(), &["codes", "cloud", "-n", "4"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn empty_sweep_selection_gives_zeros() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(
        dir.path(),
        &["codes", "sweep", "--n", "8", "--count", "50", "--rate", "0.9", "--delta", "1", "--steps", "5", "--out", "s.csv"],
    );
    assert_eq!(o.status.code(), Some(0));
    let csv = std::fs::read_to_string(dir.path().join("s.csv")).unwrap();
    let rows: Vec<_> = csv.lines().skip(2).collect();
    assert_eq!(rows.len(), 5);
    for r in rows {
        let cols: Vec<_> = r.split(',').collect();
        assert_eq!(cols[3].parse::<f64>().unwrap(), 0.0);
        assert_eq!(cols[4], "0");
    }
}

#[test]
fn feynman_check_matches() {
    let o = run(Path::new("."), &["feynman-check", "--c3", "1", "--c4", "1", "--order", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("match through λ^2"));
    let o = run(Path::new("."), &["feynman-check", "--c3", "-2/3", "--c4", "-5/7", "--order", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let o = run(Path::new("."), &["feynman-check", "--order", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn hopf_verify_passes() {
    let o = run(Path::new("."), &["hopf-verify", "--max-vertices", "3", "--max-flags", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("all axioms pass"));
}

#[test]
fn birkhoff_primitive_character() {
    let dir = tempfile::tempdir().unwrap();
    let input = r#"{"degree": 0, "values": [{"graph": "u1|:0.0|", "value": {"polar": ["1"], "regular": ["2/3"]}}]}"#;
    std::fs::write(dir.path().join("phi.json"), input).unwrap();
    let o = run(dir.path(), &["birkhoff", "--character", "phi.json", "--out", "split.json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("split.json")).unwrap()).unwrap();
    assert_eq!(doc["minus"]["values"][0]["value"]["polar"], serde_json::json!(["-1"]));
    assert_eq!(doc["plus"]["values"][0]["value"]["regular"], serde_json::json!(["2/3"]));
    assert_eq!(doc["plus"]["values"][0]["value"]["polar"], serde_json::json!([]));
    let o = run(dir.path(), &["birkhoff", "--character", "missing.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn probe_reports() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("empty.json"), r#"{"function": {"kind": "empty"}}"#).unwrap();
    let o = run(dir.path(), &["probe", "--program", "empty.json", "--point", "3,2", "--out", "r.json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("r.json")).unwrap()).unwrap();
    assert_eq!(doc["verdict"], "finite_orbit");
    assert_eq!(doc["certificate"]["period"], 1);
    assert_eq!(doc["point"], serde_json::json!([3, 2]));
    for key in ["budget_used", "proxy_version"] {
        assert!(doc.get(key).is_some());
    }
    let o = run(dir.path(), &["probe", "--program", "empty.json", "--point", "3,2", "--budget", "0"]);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["verdict"], "inconclusive");
    std::fs::write(dir.path().join("bad.json"), "{").unwrap();
    let o = run(dir.path(), &["probe", "--program", "bad.json", "--point", "1,1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn zipf_synthetic_exponent() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["zipf", "--synthetic", "--out", "z.csv"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let exponent = doc["exponent"].as_f64().unwrap();
    assert!((exponent + 1.0).abs() <= 0.1, "{exponent}");
    let csv = std::fs::read_to_string(dir.path().join("z.csv")).unwrap();
    assert_eq!(csv.lines().nth(1), Some("rank,token,count,frequency"));
}

#[test]
fn verbose_echoes_config() {
    let o = run(Path::new("."), &["--verbose", "zipf", "--synthetic", "--tokens", "100"]);
    let err = String::from_utf8_lossy(&o.stderr);
    let config: serde_json::Value = serde_json::from_str(err.lines().next().unwrap()).unwrap();
    assert_eq!(config["subcommand"], "zipf");
    assert_eq!(config["tokens"], 100);
}
