use std::process::{Command, Output};

fn hgc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hgc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn normalized_csv() {
    let out = hgc(&[
        "compute",
        "--N",
        "1",
        "--n-max",
        "3",
        "--normalized",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "index,value\n0,1\n1,1/2\n2,-1/12\n3,1/24\n");
}

#[test]
fn default_json_table() {
    let out = hgc(&["compute", "--N", "2", "--n-max", "1"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "{\"N\":2,\"method\":\"recurrence\",\"normalized\":false,\"r\":1,\"values\":[\"1\",\"2/3\"]}\n"
    );
    let out = hgc(&["compute", "--N", "1", "--n-max", "0"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["values"], serde_json::json!(["1"]));
}

#[test]
fn json_round_trips_byte_for_byte() {
    for method in ["series", "trudi", "explicit", "convolution"] {
        let out = hgc(&[
            "compute", "--N", "3", "--r", "2", "--n-max", "9", "--method", method,
        ]);
        assert!(out.status.success(), "{method}");
        let text = stdout(&out);
        let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(format!("{}\n", serde_json::to_string(&doc).unwrap()), text);
    }
}

#[test]
fn output_is_deterministic() {
    let args = [
        "verify", "--suite", "all", "--N-max", "2", "--n-max", "6", "--format", "json",
    ];
    let a = hgc(&args);
    let b = hgc(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn methods_agree_through_the_cli() {
    let reference = stdout(&hgc(&["compute", "--N", "4", "--n-max", "12", "--format", "csv"]));
    for method in [
        "series",
        "determinant",
        "compositions",
        "trudi",
        "explicit",
        "convolution",
    ] {
        let out = hgc(&[
            "compute", "--N", "4", "--n-max", "12", "--format", "csv", "--method", method,
        ]);
        assert_eq!(stdout(&out), reference, "{method}");
    }
}

#[test]
fn invalid_flags_exit_2() {
    for args in [
        vec!["compute", "--N", "0", "--n-max", "3"],
        vec!["compute", "--n-max", "3"],
        vec!["compute", "--N", "1", "--n-max", "3", "--method", "magic"],
        vec!["compute", "--N", "1", "--n-max", "3", "--format", "xml"],
        vec![
            "compute",
            "--N",
            "1",
            "--r",
            "2",
            "--n-max",
            "3",
            "--method",
            "compositions",
        ],
        vec!["verify", "--suite", "everything"],
        vec!["invert", "--rule", "hgc", "--r", "2", "--n-max", "3"],
    ] {
        assert_eq!(hgc(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn cap_exceeded_exits_3() {
    let out = hgc(&["compute", "--N", "1", "--n-max", "23", "--method", "compositions"]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("composition"), "{err}");
    let out = hgc(&["verify", "--suite", "relations", "--n-max", "15"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn unsafe_caps_warns() {
    let out = hgc(&[
        "compute",
        "--N",
        "1",
        "--n-max",
        "23",
        "--method",
        "compositions",
        "--unsafe-caps",
    ]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stderr).unwrap().contains("warning"));
}

#[test]
fn verify_examples() {
    let out = hgc(&["verify", "--suite", "core", "--N-max", "3", "--n-max", "10"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("suite core: 355 pass, 0 fail, 1 erratum-noted\n"));
    let out = hgc(&["verify", "--suite", "inversion", "--N-max", "1", "--n-max", "1"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn invert_examples() {
    let out = hgc(&["invert", "--rule", "cauchy", "--N", "1", "--n-max", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let recovered: Vec<&str> = text
        .lines()
        .skip(1)
        .take(4)
        .map(|l| l.split_whitespace().nth(3).unwrap())
        .collect();
    assert_eq!(recovered, ["1/2", "1/3", "1/4", "1/5"]);

    let text = stdout(&hgc(&["invert", "--rule", "hgc", "--N", "3", "--n-max", "1"]));
    let row: Vec<&str> = text.lines().nth(1).unwrap().split_whitespace().collect();
    assert_eq!(row, ["1", "3/4", "3/4", "3/4", "-3/4"]);

    let out = hgc(&[
        "invert", "--rule", "weights", "--N", "2", "--r", "2", "--n-max", "8",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("round trip: ok\n"));
}
