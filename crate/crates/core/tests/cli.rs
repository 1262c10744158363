use std::process::Command;

fn bx(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_bx")).args(args).output().expect("spawn bx");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn check_baxter_exit_codes() {
    assert_eq!(bx(&["check-baxter", "2413"]), (0, "false\n".into(), String::new()));
    assert_eq!(bx(&["check-baxter", "3142"]).1, "false\n");
    assert_eq!(bx(&["check-baxter", "2143"]).1, "true\n");
}

#[test]
fn parse_errors_report_position() {
    let (code, out, err) = bx(&["insert", "5x2"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("position 1"), "{err}");
}

#[test]
fn unknown_subcommand_is_usage_error() {
    assert_eq!(bx(&["frobnicate"]).0, 2);
}

#[test]
fn product_degree_one() {
    let (code, out, _) = bx(&["product", "--plain", "[ (. .) | (. .) ]", "[ (. .) | (. .) ]"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines.iter().all(|l| l.starts_with("1\t")));
}

#[test]
fn dims_table() {
    let (code, out, _) = bx(&["dims", "5", "--plain"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().last(), Some("5\t92\t47\t19"));
}

#[test]
fn lattice_json_edge_count() {
    let (code, out, _) = bx(&["lattice", "3", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 6);
    assert!(!v["edges"].as_array().unwrap().is_empty());
}

#[test]
fn verify_suite_passes() {
    let (code, out, _) = bx(&["verify", "insertion", "--max-n", "4", "--plain"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().all(|l| l.starts_with("PASS")), "{out}");
}
