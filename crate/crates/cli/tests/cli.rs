use std::path::PathBuf;
use std::process::{Command, Output};

fn permupark(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_permupark"))
        .args(args)
        .env_remove("PERMUPARK_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = permupark(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name]
        .iter()
        .collect();
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn assert_golden(args: &[&str], name: &str) {
    assert_eq!(stdout(args), golden(name), "{args:?} differs from {name}");
}

/// Exit code and the single diagnostic line.
fn failure(args: &[&str]) -> (i32, String) {
    let out = permupark(args);
    assert!(out.stdout.is_empty(), "{args:?} wrote to stdout");
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.lines().count(), 1, "{args:?}: {err:?}");
    assert!(err.starts_with("permupark: error: "), "{err:?}");
    (out.status.code().unwrap(), err)
}

#[test]
fn face_4_13_2_round_trip() {
    assert_eq!(stdout(&["bij", "to-upf", "4/13/2"]), "2,4,2,1\n");
    assert_eq!(stdout(&["bij", "to-upf", "4/1,3/2"]), "2,4,2,1\n");
    assert_eq!(stdout(&["bij", "to-osp", "2,4,2,1"]), "4/1,3/2\n");
    assert_eq!(stdout(&["bij", "to-osp", "2421"]), "4/1,3/2\n");
}

#[test]
fn golden_outputs() {
    assert_golden(&["park", "--pf", "2,1,3,3"], "park_2133.txt");
    assert_golden(&["check", "--pf", "2,2,3,6,6,1,4"], "check_2236614.txt");
    assert_golden(
        &["decompose", "--pf", "2,2,3,6,6,1,4"],
        "decompose_2236614.txt",
    );
    assert_golden(
        &["dyck", "--pf", "2,2,3,6,6,1,4", "--ascii"],
        "dyck_2236614_ascii.txt",
    );
    assert_golden(&["dyck", "--pf", "2421", "--json"], "dyck_2421.json");
    assert_golden(&["bij", "to-upf", "4/13/2"], "bij_to_upf_4_13_2.txt");
    assert_golden(&["faces", "--n", "3", "--dim", "2"], "faces_n3_dim2.txt");
    assert_golden(&["faces", "--n", "3"], "faces_n3.txt");
    assert_golden(&["faces", "--n", "3", "--format", "json"], "faces_n3.json");
    assert_golden(&["faces", "--n", "3", "--format", "dot"], "faces_n3.dot");
    assert_golden(
        &[
            "enumerate",
            "--n",
            "4",
            "--what",
            "upf",
            "--by-displacement",
        ],
        "enumerate_upf_n4_by_displacement.txt",
    );
    assert_golden(
        &["enumerate", "--n", "5", "--what", "counts"],
        "enumerate_counts_n5.txt",
    );
    assert_golden(&["orbit", "--pf", "1,1,2,4,4"], "orbit_11244.txt");
}

#[test]
fn top_face_of_p3() {
    let table = stdout(&["faces", "--n", "3", "--dim", "2", "--format", "table"]);
    let rows: Vec<&str> = table.lines().skip(1).collect();
    assert_eq!(rows, ["12 | 2 | 1,2,3 | 1,1,2 | 3"]);
}

#[test]
fn orbit_numbers() {
    let out = stdout(&["orbit", "--pf", "1,1,2,4,4"]);
    assert!(out.contains("orbit size: 10\n"));
    assert!(out.contains("stabilizer order: 12\n"));
    assert!(out.contains("preserving permutations: 40\n"));
    assert!(out.contains("preserving permutations (enumerated): 40\n"));
    let listed = out.split("orbit:\n").nth(1).unwrap();
    assert_eq!(listed.lines().count(), 10);
}

#[test]
fn enumerate_lists() {
    let upf = stdout(&["enumerate", "--n", "3", "--what", "upf"]);
    assert_eq!(upf.lines().count(), 13);
    assert_eq!(
        stdout(&["enumerate", "--n", "4", "--what", "pf"])
            .lines()
            .count(),
        125
    );
    assert_eq!(
        stdout(&["enumerate", "--n", "4", "--what", "ppf"])
            .lines()
            .count(),
        27
    );
    let osp = stdout(&["enumerate", "--n", "3", "--what", "osp"]);
    assert_eq!(osp.lines().next(), Some("1,2,3"));
    assert_eq!(osp.lines().count(), 13);
}

#[test]
fn verify_reports() {
    let text = stdout(&["verify", "--n", "3"]);
    assert!(text.ends_with("0 failed\n"), "{text}");
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["verify", "--n", "3", "--json"])).unwrap();
    assert_eq!(json["passed"], true);
    assert_eq!(json["counts"]["upf"], "13");
    assert_eq!(
        json["counts"]["upf_by_displacement"],
        serde_json::json!(["6", "6", "1"])
    );
}

#[test]
fn faces_json_is_deterministic() {
    let args = ["faces", "--n", "4", "--format", "json"];
    let first = stdout(&args);
    assert_eq!(stdout(&args), first);
    for threads in ["1", "2", "4"] {
        let mut with_threads = vec!["--threads", threads];
        with_threads.extend(args);
        assert_eq!(stdout(&with_threads), first, "--threads {threads}");
    }
    let json: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(json["faces"].as_array().unwrap().len(), 75);
}

#[test]
fn out_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    for format in ["table", "json", "dot"] {
        let path = dir.path().join(format!("faces.{format}"));
        let path_str = path.to_str().unwrap();
        let printed = stdout(&["faces", "--n", "3", "--format", format]);
        let quiet = stdout(&["faces", "--n", "3", "--format", format, "--out", path_str]);
        assert!(quiet.is_empty());
        let written = std::fs::read_to_string(&path).unwrap();
        assert_eq!(written, printed);
        assert!(written.ends_with('\n'));
    }
}

#[test]
fn exit_codes() {
    let cases: [(&[&str], i32, &str); 9] = [
        (&["park", "--pf", "3,3,3"], 1, "not-a-parking-function"),
        (&["park", "--pf", "1,x"], 1, "parse"),
        (&["park", "--pf", "1,4"], 1, "invalid-pref-list"),
        (&["decompose", "--pf", "2,2"], 1, "not-a-parking-function"),
        (&["bij", "to-osp", "1,1,1"], 1, "not-unit-interval"),
        (&["bij", "to-upf", "1/1"], 1, "invalid-partition"),
        (&["faces", "--n", "9"], 1, "limit-exceeded"),
        (&["bogus"], 64, "usage"),
        (&["faces", "--n", "3", "--format", "svg"], 64, "usage"),
    ];
    for (args, code, id) in cases {
        let (got, err) = failure(args);
        assert_eq!(got, code, "{args:?}: {err}");
        assert!(
            err.starts_with(&format!("permupark: error: {id}: ")),
            "{args:?}: {err}"
        );
    }
    assert_eq!(failure(&["dyck", "--pf", "12", "--ascii", "--json"]).0, 64);
    assert_eq!(failure(&["faces"]).0, 64);
}

#[test]
fn check_without_parking() {
    assert_eq!(
        stdout(&["check", "--pf", "3,3,3"]),
        "parking function: no\n"
    );
}

#[test]
fn help_and_version_succeed() {
    assert!(stdout(&["--help"]).contains("faces"));
    assert!(stdout(&["--version"]).starts_with("permupark "));
}

#[test]
fn env_limit_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_permupark"))
        .args(["faces", "--n", "4"])
        .env("PERMUPARK_MAX_N", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("limit-exceeded"));
}
