//! The `nilact` binary end to end.

use std::process::{Command, Output};

fn nilact(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nilact")).args(args).env_remove("NILACT_CAP").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

#[test]
fn verify_witt_hall_scope_passes() {
    let o = nilact(&["verify", "--scope", "lemma-jo"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let jo: Vec<&str> = out.lines().filter(|l| l.starts_with("check=lemma-jo ")).collect();
    assert!(jo.len() >= 10);
    assert!(jo.iter().all(|l| l.contains("outcome=pass")));
    assert!(!out.contains("outcome=fail"));
}

#[test]
fn empty_scope_is_empty_and_passes() {
    let o = nilact(&["verify", "--scope", "no-such-check"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
}

#[test]
fn tres_scope_lists_orders_and_classes() {
    let o = nilact(&["verify", "--scope", "thm-tres"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().filter(|l| l.starts_with("check=")).collect();
    // abelian p-groups of order at most 64 in the bundled catalog
    assert_eq!(lines.len(), 55);
    for l in &lines {
        assert!(l.contains("outcome=pass") && l.contains(" order=") && l.contains(" class="), "{l}");
    }
    assert!(out.contains("check=thm-tres instance=Z4 outcome=pass p=2 order=2 class=1"));
}

#[test]
fn output_is_deterministic() {
    let a = nilact(&["verify", "--scope", "prop-,thm-dos"]);
    let b = nilact(&["verify", "--scope", "prop-,thm-dos"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn json_records_parse() {
    let o = nilact(&["--json", "verify", "--scope", "prop-propodos"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let records: Vec<serde_json::Value> = out.lines().map(|l| serde_json::from_str(l).expect("json line")).collect();
    let t = records.iter().find(|r| r["instance"] == "Times3Z4").expect("pinned instance");
    assert_eq!(t["outcome"], "pass");
    assert_eq!(t["witness"]["nil"], "2");
    assert_eq!(t["witness"]["bound"], "2");
    assert!(records.iter().all(|r| r.get("wall_ms").is_none()));
    let timed = nilact(&["--json", "verify", "--scope", "prop-propodos", "--timings"]);
    let first: serde_json::Value = serde_json::from_str(stdout(&timed).lines().next().unwrap()).unwrap();
    assert!(first["wall_ms"].is_number());
}

#[test]
fn provenance_map_covers_every_check() {
    let o = nilact(&["verify", "--list-checks"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), nilact::cli::CHECKS.len());
    assert!(out.contains("check=thm-cuatro label=Theorem cuatro operation=homotopy::check_cuatro"));
}

#[test]
fn verbs() {
    let cases: &[(&[&str], &str)] = &[
        (&["lcs", "S3"], "group=S3 orders=6,3 verdict=stabilized-at-1"),
        (&["lcs", "D8"], "orders=8,2,1 verdict=nilpotent-of-order-2"),
        (&["frattini", "Q8"], "phi_order=2"),
        (&["series", "Times3Z4"], "orders=4,2,1 verdict=nilpotent-of-order-2"),
        (&["localize", "Times5Z12", "--prime", "2"], "local_order=4"),
        (&["localize", "D8", "--prime", "2"], "local_order=8"),
        (&["localize", "D8", "--prime", "3"], "local_order=1"),
        (&["aut", "Z8"], "order=4"),
        (&["aut", "Z2xZ2"], "order=6"),
        (&["eshp", "Z4", "--prime", "2"], "order=2 esharp_order=1 generators=[3]"),
        (&["eshp", "Z2xZ2", "--prime", "3", "--degree", "3"], "order=6"),
    ];
    for (args, want) in cases {
        let o = nilact(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert!(stdout(&o).contains(want), "{args:?}: {}", stdout(&o));
    }
}

#[test]
fn catalog_print_lists_entries() {
    let o = nilact(&["catalog", "print"]);
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.starts_with("S3 kind=perm-group")));
    assert!(out.lines().any(|l| l.starts_with("RemarkFinal kind=fixture") && l.contains("sourced(final Remark)")));
}

#[test]
fn usage_and_parse_errors_exit_2() {
    assert_eq!(nilact(&["bogus"]).status.code(), Some(2));
    assert_eq!(nilact(&["lcs", "NoSuchGroup"]).status.code(), Some(2));
    assert_eq!(nilact(&["localize", "S3", "--prime", "2"]).status.code(), Some(2));

    let dir = std::env::temp_dir().join(format!("nilact-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.catalog");
    std::fs::write(&bad, "group S3 perm 3 : (0 1) (0 1 2)\ngroup X perm 3 : (0 1\n").unwrap();
    let o = nilact(&["--catalog", bad.to_str().unwrap(), "catalog", "print"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 2"), "{err}");

    let good = dir.join("good.catalog");
    std::fs::write(&good, "group S3 perm 3 : (0 1) (0 1 2)\naction ConjS3 S3 on S3 : auto\n").unwrap();
    let o = nilact(&["--catalog", good.to_str().unwrap(), "verify", "--scope", "lemma-jo"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("check=lemma-jo instance=ConjS3 outcome=pass"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_nilact")).args(["lcs", "S3"]).env("NILACT_CAP", "5").output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("order cap 5"));
}
