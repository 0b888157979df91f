use std::process::{Command, Output};

fn suq2(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_suq2"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim().to_string()
}

#[test]
fn normalize_and_mul() {
    let o = suq2(&["normalize", "a c - q c a"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "0");
    assert_eq!(stdout(&suq2(&["mul", "a^*", "a"])), stdout(&suq2(&["normalize", "1 - c^* c"])));
}

#[test]
fn hopf_commands() {
    assert_eq!(stdout(&suq2(&["counit", "a + c"])), "1");
    assert_eq!(stdout(&suq2(&["antipode", "a"])), stdout(&suq2(&["normalize", "a^*"])));
    let d = stdout(&suq2(&["delta", "c"]));
    assert!(d.contains('⊗'));
}

#[test]
fn json_output_is_valid() {
    let o = suq2(&["--json", "normalize", "c a"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["text"], "(q^-1) * a c");
    let o = suq2(&["corep", "check", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["corep_eq"], true);
}

#[test]
fn weights_and_decompose() {
    assert_eq!(stdout(&suq2(&["weights", "U1 x U1 + U0"])), "{-2:1,0:3,2:1}");
    assert_eq!(stdout(&suq2(&["decompose", "{-2:1,0:2,2:1}"])), "{2:1,0:1}");
    assert_eq!(stdout(&suq2(&["decompose", "{-1:1,0:1,1:1}"])), "{1:1,0:1}");
    assert_eq!(suq2(&["decompose", "{0:1,1:1}"]).status.code(), Some(1));
}

#[test]
fn inf_and_sl2() {
    assert!(suq2(&["inf", "verify", "6", "--q", "0.9"]).status.success());
    assert!(suq2(&["inf", "equiv", "3", "--q", "1/3"]).status.success());
    assert!(suq2(&["sl2", "7"]).status.success());
}

#[test]
fn exit_codes() {
    let o = suq2(&["normalize", "a^0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("position"));
    assert_eq!(suq2(&["eval", "chi7", "a"]).status.code(), Some(2));
    assert_eq!(suq2(&["weights", "U1 y U2"]).status.code(), Some(2));
    assert_eq!(suq2(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_suites() {
    for suite in ["relations", "hopf", "derivation", "sl2"] {
        let o = suq2(&["verify", suite]);
        assert!(o.status.success(), "{suite}");
        assert!(!stdout(&o).contains("FAIL"));
    }
    let o = suq2(&["verify", "conprop", "--bound", "2", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], true);
}
