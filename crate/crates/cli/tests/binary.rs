use std::path::Path;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .display()
        .to_string()
}

fn a3kit(args: &[&str], threads: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_a3kit"));
    cmd.args(args);
    match threads {
        Some(t) => cmd.env("A3KIT_THREADS", t),
        None => cmd.env_remove("A3KIT_THREADS"),
    };
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn check_exit_codes() {
    let ex = data("admissible_plane.json");
    assert_eq!(
        a3kit(&["check", &ex, "--laws", "a3,admissible"], None)
            .status
            .code(),
        Some(0)
    );
    let bad = a3kit(&["check", &ex, "--laws", "associative"], None);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("(e1,e2,e2): 2·e2"));
}

#[test]
fn malformed_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    let text = std::fs::read_to_string(data("admissible_plane.json"))
        .unwrap()
        .replacen("\"2\"", "\"1/0\"", 1);
    std::fs::write(&path, text).unwrap();
    let out = a3kit(&["check", path.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("products"));

    std::fs::write(&path, "[1, 2").unwrap();
    assert_eq!(
        a3kit(&["classify", path.to_str().unwrap()], None)
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        a3kit(&["check", "/definitely/not/here.json"], None)
            .status
            .code(),
        Some(2)
    );
    assert_eq!(a3kit(&["frobnicate"], None).status.code(), Some(2));
    assert_eq!(
        a3kit(
            &[
                "search",
                &data("admissible_plane.json"),
                "rb",
                "--grid",
                "1,1"
            ],
            None
        )
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn rb2ybe_document_round_trips() {
    let out = a3kit(
        &[
            "rb2ybe",
            &data("idempotent_rb.json"),
            "--map",
            "T",
            "--format",
            "json",
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["document"]["dim"], 4);
    let doc = serde_json::to_string(&v["document"]).unwrap();
    let file = a3kit_cli::AlgebraFile::from_json(&doc).unwrap();
    assert_eq!(
        a3kit_cli::AlgebraFile::from_json(&file.to_json()).unwrap(),
        file
    );
}

#[test]
fn search_json_is_stable_across_thread_counts() {
    let ex = data("idempotent_rb.json");
    let args = [
        "search",
        ex.as_str(),
        "rb",
        "--grid",
        "-1,0,1",
        "--format",
        "json",
    ];
    let one = a3kit(&args, Some("1"));
    let four = a3kit(&args, Some("4"));
    let default = a3kit(&args, None);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(one.stdout, default.stdout);
}
