use std::process::{Command, Output};

fn cayley(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cayley")).args(args).output().expect("binary runs")
}

fn scratch(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("cayley-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn text_report_passes() {
    let out = cayley(&["--suite", "algebra", "--trials", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("suite algebra (seed 0, trials 5)"));
    assert!(text.contains("PASS table [49 evaluations]"));
    assert!(text.trim_end().ends_with("failed"));
}

#[test]
fn json_schema() {
    let out = cayley(&["--suite", "r8", "--trials", "4", "--seed", "9", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["suite"], "r8");
    assert_eq!(v["seed"], 9);
    assert_eq!(v["trials"], 4);
    let check = &v["checks"][0];
    for key in ["id", "statement", "status", "evaluations", "witness"] {
        assert!(check.get(key).is_some(), "missing {key}");
    }
    assert!(v["notes"].as_array().unwrap().iter().all(|n| n["id"].is_string()));
}

#[test]
fn out_file_matches_stdout() {
    let path = scratch("report.json");
    let args = ["--suite", "stereo", "--trials", "5", "--format", "json"];
    let to_file = cayley(&[&args[..], &["--out", path.to_str().unwrap()]].concat());
    assert_eq!(to_file.status.code(), Some(0));
    assert!(to_file.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), cayley(&args).stdout);
}

#[test]
fn point_list_replay() {
    let path = scratch("points.txt");
    std::fs::write(&path, "# two points\ns33\n0,0,0,1,0,0,0\n3/4, 0, 0, 5/4, 0, 0, 0\n").unwrap();
    let out = cayley(&["--suite", "s33", "--trials", "2", "--points", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let on_sphere = v["checks"].as_array().unwrap().iter().find(|c| c["id"] == "points_on_sphere").unwrap();
    assert_eq!(on_sphere["evaluations"], 2);
}

#[test]
fn usage_and_input_errors_exit_2() {
    assert_eq!(cayley(&["--suite", "nope"]).status.code(), Some(2));
    assert_eq!(cayley(&["--trials", "-1"]).status.code(), Some(2));
    assert_eq!(cayley(&["--suite", "s24", "--points", "/nonexistent/points.txt"]).status.code(), Some(2));

    let path = scratch("bad.txt");
    std::fs::write(&path, "s24\n1,0,0,0,0,0,0\n1,1,0,0,0,0,0\n").unwrap();
    let out = cayley(&["--suite", "s24", "--points", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    let out = cayley(&["--suite", "forms", "--points", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}
