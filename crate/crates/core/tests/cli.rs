use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_e2homlab"))
        .args(args)
        .env_remove("E2HOMLAB_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn report_sections_and_schema() {
    let o = run(&["report", "--ring", "GF(5)", "--deg", "2", "--checks", "ring,h1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["ring"]["order"], 5);
    assert!(v.get("h1").is_some());
    assert!(v.get("bloch").is_none());
    assert!(v.get("timing_millis").is_none());
}

#[test]
fn report_is_reproducible() {
    let args = ["report", "--ring", "Z/9", "--deg", "3"];
    assert_eq!(stdout(&run(&args)), stdout(&run(&args)));
}

#[test]
fn bad_ring_exits_2() {
    let o = run(&["report", "--ring", "GF(6)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("prime power"));
}

#[test]
fn cap_exits_3() {
    let o = Command::new(env!("CARGO_BIN_EXE_e2homlab"))
        .args(["check", "--ring", "GF(7)", "--checks", "1,3"])
        .env("E2HOMLAB_CAP", "500")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn flag_cap_overrides_env() {
    let o = Command::new(env!("CARGO_BIN_EXE_e2homlab"))
        .args(["check", "--ring", "GF(3)", "--checks", "1", "--cap", "1000000"])
        .env("E2HOMLAB_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn check_csv_rows() {
    let o = run(&["check", "--family", "local-char2", "--checks", "1,2,4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("ring,criterion,expected,got,verdict,millis"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 9);
    assert!(rows.iter().all(|r| r.contains(",pass,")));
    assert!(rows.iter().all(|r| r.ends_with(',')), "millis column empty without --timing");
}

#[test]
fn rings_listing() {
    let o = run(&["rings", "--family", "products"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("products,Z/12,12,4,"));
    assert_eq!(text.lines().count(), 5);
}

#[test]
fn unknown_family_exits_2() {
    assert_eq!(run(&["check", "--family", "nope"]).status.code(), Some(2));
}

#[test]
fn reports_match_shipped_schema() {
    let schema: serde_json::Value =
        serde_json::from_str(include_str!("../../../docs/report.schema.json")).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    for (ring, deg) in [("Z/9", "3"), ("GF(4)", "4"), ("Z/6", "2"), ("F2[t]/t^2", "3")] {
        let o = run(&["report", "--ring", ring, "--deg", deg, "--timing"]);
        assert_eq!(o.status.code(), Some(0), "{ring}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        let errors: Vec<String> = validator.iter_errors(&v).map(|e| format!("{} at {}", e, e.instance_path())).collect();
        assert!(errors.is_empty(), "{ring}: {errors:?}");
    }
}
