use std::process::{Command, Output};

fn frobkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_frobkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn report_lists_gaps() {
    let o = frobkit(&["report", "4", "7", "11", "--list"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["g"], 17);
    assert_eq!(v["n"], 9);
    assert_eq!(v["s"], 66);
    assert_eq!(v["gaps"], serde_json::json!([1, 2, 3, 5, 6, 9, 10, 13, 17]));
}

#[test]
fn ap_sum_is_bare() {
    let o = frobkit(&["ap", "--a", "7", "--d", "2", "--k", "3", "--sum"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "165\n");
}

#[test]
fn wsum_lambda_two() {
    let o = frobkit(&["wsum", "7", "9", "11", "--lambda", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["weighted"]["re"], 2160333442u64);
    assert_eq!(v["weighted"]["im"], 0);
    assert_eq!(v["lambda"], "2");
}

#[test]
fn large_values_are_strings() {
    let o = frobkit(&["wsum", "7", "9", "11", "--lambda", "10"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["weighted"]["re"].is_string());
    let o = frobkit(&["wsum", "7", "9", "11", "--lambda", "1/2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["weighted"]["re"].as_str().unwrap().contains('/'));
}

#[test]
fn exit_codes() {
    assert_eq!(frobkit(&["report", "6", "9"]).status.code(), Some(1));
    assert_eq!(frobkit(&["nonsense"]).status.code(), Some(1));
    assert_eq!(frobkit(&["wsum", "4", "7", "--lambda", "1+"]).status.code(), Some(1));
    assert_eq!(
        frobkit(&["ap", "--a", "6", "--d", "5", "--k", "4", "--lambda", "-1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(frobkit(&["geom", "--a", "17", "--k", "4"]).status.code(), Some(1));
}

#[test]
fn cell_cap_comes_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_frobkit"))
        .args(["gaps", "97", "101"])
        .env("FROBKIT_MAX_CELLS", "1000")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("1000"));
}

#[test]
fn verify_output_is_reproducible() {
    let args = [
        "--format", "csv", "verify", "--family", "extra", "--a-max", "14", "--K-max", "7",
    ];
    let first = frobkit(&args);
    assert_eq!(first.status.code(), Some(0));
    assert!(stdout(&first).starts_with("family,params,generators,status,closed,oracle,detail\n"));
    assert_eq!(stdout(&first), stdout(&frobkit(&args)));
}
