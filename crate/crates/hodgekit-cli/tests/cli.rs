use std::process::{Command, Output};

use serde_json::Value;

fn hodgekit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hodgekit"))
        .args(args)
        .env_remove("NO_COLOR")
        .output()
        .expect("run hodgekit")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = hodgekit(&full);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn help_lists_every_command() {
    let o = hodgekit(&["--help"]);
    assert!(o.status.success());
    let text = stdout(&o);
    for cmd in ["describe", "base-point", "blocks", "triples", "bracket", "abelian", "max-abelian", "verify"] {
        assert!(text.contains(cmd), "missing {cmd}");
    }
}

#[test]
fn describe_so12_text() {
    let o = hodgekit(&["describe", "4", "2,2,4,2,2"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("SO(12,C)"));
    assert!(text.contains("real form           SO(8,4)"));
    assert!(text.contains("signature sequence  +-+-+"));
    assert!(text.contains("dim g               66"));
    assert!(!text.contains('\x1b'), "no color when piped");
}

#[test]
fn half_and_full_sequences_agree() {
    assert_eq!(stdout(&hodgekit(&["describe", "4", "2,2,4"])), stdout(&hodgekit(&["describe", "4", "2,2,4,2,2"])));
}

#[test]
fn base_point_so11_spans() {
    let text = stdout(&hodgekit(&["base-point", "4", "2,2,3"]));
    assert!(text.contains("V^{2,2} = <e3,e9,e6>"), "{text}");
    assert!(text.contains("V^{0,4} = <e7,e8>"));
}

#[test]
fn blocks_include_self_mirrored_block() {
    let text = stdout(&hodgekit(&["blocks", "4", "2,2,4", "--p", "2"]));
    assert!(text.contains("g^{-2,2} = A20 ⊕ C20 ⊕ C31 ⊕ C42  (dim 9)"), "{text}");
    let neg = stdout(&hodgekit(&["blocks", "4", "2,2,4", "--p", "-3"]));
    assert!(neg.contains("B03") && neg.contains("B14"), "{neg}");
}

#[test]
fn json_envelope() {
    let v = json(&["describe", "5", "2,3,2"]);
    assert_eq!(v["schema"], "hodgekit/1");
    assert_eq!(v["command"], "describe");
    assert_eq!(v["result"]["group"], "Sp(14,C)");
    assert_eq!(v["result"]["real_form"], "Sp(7,7)");
}

#[test]
fn bracket_reports_both_clauses() {
    let text = stdout(&hodgekit(&["bracket", "4", "2,2,4", "--t1", "H10", "--t2", "Hc41"]));
    assert!(text.starts_with("[H10, Hc41] = Hc31 (AxC.1) + Hc40 (AxC.3)"), "{text}");
    assert!(text.contains("spans equal: true"));
}

#[test]
fn max_abelian_weight_one() {
    let v = json(&["max-abelian", "1", "3", "--oracle"]);
    assert_eq!(v["result"]["path_max"], 6);
    assert_eq!(v["result"]["oracle"]["max"], 6);
}

#[test]
fn invalid_input_exits_1() {
    let o = hodgekit(&["describe", "4", "2,2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("invalid input"));
    let o = hodgekit(&["--format", "json", "describe", "4", "x"]);
    assert_eq!(o.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(err["exit_code"], 1);
    assert_eq!(hodgekit(&["no-such-command"]).status.code(), Some(1));
}

#[test]
fn oracle_guard_exits_3() {
    let o = hodgekit(&["max-abelian", "7", "3,3,3,3", "--oracle"]);
    assert_eq!(o.status.code(), Some(3));
    let o = hodgekit(&["max-abelian", "7", "3,3,3,3"]);
    assert!(o.status.success());
}

#[test]
fn strict_verify_exits_2_on_findings() {
    assert_eq!(hodgekit(&["verify", "--max-weight", "2", "--max-h", "2"]).status.code(), Some(0));
    assert_eq!(hodgekit(&["verify", "--max-weight", "2", "--max-h", "2", "--strict"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["--format", "json", "verify", "--max-weight", "4", "--max-h", "2"];
    assert_eq!(hodgekit(&args).stdout, hodgekit(&args).stdout);
}

#[test]
fn out_file() {
    let dir = std::env::temp_dir().join(format!("hodgekit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("triples.txt");
    let o = hodgekit(&["--out", path.to_str().unwrap(), "triples", "4", "2,2,4", "--p", "1"]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("H10") && text.contains("H21") && text.contains("Hc32"), "{text}");
    std::fs::remove_dir_all(dir).unwrap();
}
