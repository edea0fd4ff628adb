use std::io::Write;
use std::process::{Command, Output};

fn pipedream(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pipedream"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn enumerate_1432_json() {
    let o = pipedream(&["enumerate", "--perm", "1,4,3,2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 5);
}

#[test]
fn enumerate_ascii_with_legend() {
    let o = pipedream(&["enumerate", "--perm", "1,3,2", "--legend"]);
    let s = stdout(&o);
    assert!(s.starts_with("legend:"));
    assert!(s.contains(".+.\n..\n.\n"));
    assert!(s.contains("...\n+.\n.\n"));
    assert!(s.trim_end().ends_with("2 rc-graphs"));
}

#[test]
fn json_output_is_stable() {
    let args = ["biject", "--n", "4", "--to", "eg", "--format", "json"];
    assert_eq!(pipedream(&args).stdout, pipedream(&args).stdout);
}

#[test]
fn catalan_values() {
    assert_eq!(
        stdout(&pipedream(&["catalan", "--n", "0", "--q"])).trim(),
        "1"
    );
    assert_eq!(stdout(&pipedream(&["catalan", "--n", "7"])).trim(), "429");
    let a = pipedream(&["catalan", "--n", "6", "--q", "--via", "partitions"]);
    let b = pipedream(&["catalan", "--n", "6", "--q", "--via", "recurrence"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn schubert_and_specialize() {
    let o = pipedream(&["schubert", "--perm", "1,4,3,2", "--oracle"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("oracle: agrees"));
    assert_eq!(
        stdout(&pipedream(&["specialize", "--perm", "1,4,3,2"])).trim(),
        "q + 2q^2 + q^3 + q^4"
    );
    assert_eq!(
        stdout(&pipedream(&["specialize", "--perm", "1,4,3,2", "--at-one"])).trim(),
        "5"
    );
}

#[test]
fn verify_all_passes() {
    let o = pipedream(&["verify", "--max-n", "6", "--suite", "all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn multiplicity_is_catalan() {
    assert_eq!(
        stdout(&pipedream(&["multiplicity", "--n", "4"])).trim(),
        "14"
    );
}

#[test]
fn biject_single_file() {
    let mut f = std::env::temp_dir();
    f.push(format!("pipedream-cli-test-{}.txt", std::process::id()));
    std::fs::File::create(&f)
        .unwrap()
        .write_all(b".++.\n.+.\n..\n.\n")
        .unwrap();
    let o = pipedream(&[
        "biject",
        "--n",
        "3",
        "--to",
        "dyck",
        "--rc",
        f.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).trim_end().ends_with("-> URURUR"));
    let o = pipedream(&[
        "biject",
        "--n",
        "2",
        "--to",
        "dyck",
        "--rc",
        f.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--rc"));
    std::fs::remove_file(f).ok();
}

#[test]
fn invalid_input_exits_one() {
    let o = pipedream(&["enumerate", "--bogus"]);
    assert_eq!(o.status.code(), Some(1));
    let o = pipedream(&["enumerate", "--perm", "1,1,2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--perm"));
    let o = pipedream(&["multiplicity", "--n", "x"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(pipedream(&["--help"]).status.code(), Some(0));
}
