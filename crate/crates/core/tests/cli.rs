use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_interdep"))
        .args(args)
        .env_remove("INTERDEP_WORKERS")
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_then_cut() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("g.txt");
    let out = run(&[
        "gen",
        "--n",
        "12",
        "--p",
        "0.4",
        "--colors",
        "4",
        "--connected",
        "--seed",
        "3",
        "--out",
        path_str(&file),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let out = run(&["cut", path_str(&file), "--algo", "exact"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("value "));
    assert!(text.contains("method exact"));

    let out = run(&[
        "cut",
        path_str(&file),
        "--algo",
        "qapprox",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("value,lower_bound,method,q,colors,cut_nodes\n"));
}

#[test]
fn hitting_set_gadget_cut() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("hs.txt");
    let out = run(&[
        "gadget",
        "hs",
        "--universe",
        "6",
        "--sets",
        "1,2,5;1,3;1,4,5",
        "--out",
        path_str(&file),
    ]);
    assert!(out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("source 0, target 1"));
    let out = run(&[
        "cut",
        path_str(&file),
        "--mode",
        "st",
        "--source",
        "0",
        "--target",
        "1",
    ]);
    let text = stdout(&out);
    assert!(text.contains("value 1\n"), "{text}");
    assert!(text.contains("colors 1\n"), "{text}");
}

#[test]
fn assignment_and_transform() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.txt");
    let sys = dir.path().join("sys.txt");
    assert!(run(&[
        "gen",
        "--n",
        "10",
        "--p",
        "0.5",
        "--connected",
        "--seed",
        "1",
        "--out",
        path_str(&g)
    ])
    .status
    .success());
    let out = run(&[
        "assign",
        path_str(&g),
        "--algo",
        "cds",
        "--colors",
        "3",
        "--out",
        path_str(&sys),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&sys).unwrap();
    assert!(text.starts_with("demand 10"));
    let out = run(&["transform", path_str(&sys)]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("10 "));
    let out = run(&["cut", path_str(&sys)]);
    assert!(out.status.success());
}

#[test]
fn table_is_reproducible() {
    let args = [
        "table1",
        "--n1",
        "10",
        "--n2",
        "15",
        "--p1",
        "0.5",
        "--p2",
        "0.5",
        "--instances",
        "2",
        "--seed",
        "4",
        "--format",
        "csv",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn export_milp_writes_lp() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("vc.txt");
    assert!(run(&["gadget", "vc", "--out", path_str(&file)])
        .status
        .success());
    let out = run(&["export-milp", path_str(&file)]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("Subject To"));
    assert!(text.trim_end().ends_with("End"));
}

#[test]
fn errors_exit_with_one() {
    let out = run(&["cut", "/nonexistent/file.txt"]);
    assert_eq!(out.status.code(), Some(1));
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.txt");
    std::fs::write(&file, "3 1 2\n0 9\n").unwrap();
    let out = run(&["cut", path_str(&file)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().starts_with("error:"));
}
