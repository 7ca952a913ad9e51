use std::process::{Command, Output};

fn intrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_intrep"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn decode_prints_value() {
    let o = intrep(&[
        "decode",
        "--format",
        "posit16",
        "--bits",
        "0100000000000000",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\n");
    let o = intrep(&["decode", "--format", "e4m3", "--bits", "01111110"]);
    assert_eq!(stdout(&o), "448\n");
}

#[test]
fn negative_values_parse() {
    let o = intrep(&["encode-int", "--format", "takum", "--value", "-1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "11\n");
}

#[test]
fn exit_codes() {
    assert_eq!(intrep(&["--help"]).status.code(), Some(0));
    assert_eq!(intrep(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(
        intrep(&["decode", "--format", "posit9x", "--bits", "0"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(intrep(&["figure", "--n-min", "4"]).status.code(), Some(3));
    assert_eq!(intrep(&["verify", "--max-n", "25"]).status.code(), Some(3));
    assert_eq!(
        intrep(&["encode-int", "--format", "posit8", "--value", "1000"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn verify_passes() {
    let o = intrep(&["verify", "--max-n", "12", "--max-m", "512"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("all checks passed\n"));
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("intrep-figure-{}.csv", std::process::id()));
    let o = intrep(&[
        "figure",
        "--n-min",
        "5",
        "--n-max",
        "6",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let csv = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(csv, "n,posit_exponent,takum_exponent\n5,1,1\n6,2,1\n");
}
