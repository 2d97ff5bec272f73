use std::fs;
use std::process::{Command, Output};

fn shufsq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shufsq"))
        .args(args)
        .env_remove("SHUFSQ_WORKERS")
        .output()
        .expect("run shufsq")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn check_exit_status() {
    let o = shufsq(&["check", "10010110"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("not a shuffle square"));

    let o = shufsq(&["check", "ABABCC", "--gamma", "213"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("gamma=213"));

    let o = shufsq(&["check", "0011"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("first=[0,2] second=[1,3]"));

    assert_eq!(shufsq(&["check", "00x1"]).status.code(), Some(2));
    assert_eq!(shufsq(&["check", "0011", "--gamma", "213"]).status.code(), Some(2));
}

#[test]
fn records_are_flat_json() {
    let o = shufsq(&["check", "0011", "--format", "records"]);
    assert_eq!(stdout(&o), "{\"first\":[0,2],\"found\":true,\"gamma\":\"12\",\"second\":[1,3],\"word\":\"0011\"}\n");
    let o = shufsq(&["table", "table1", "--max-length", "2", "--format", "records"]);
    assert_eq!(stdout(&o), "{\"classes\":1,\"length\":2,\"s\":2}\n");
}

#[test]
fn word_queries() {
    let o = shufsq(&["decompose", "10010110"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("gamma=3412"));
    assert_eq!(stdout(&shufsq(&["shift", "100100"])), "shift=0 word=100100 fallback=false\n");
    assert_eq!(stdout(&shufsq(&["s-of", "10010110"])), "s=6\n");
    assert_eq!(shufsq(&["decompose", "0012"]).status.code(), Some(2));
}

#[test]
fn tables() {
    let o = shufsq(&["table", "table5", "--max-length", "6", "--format", "csv"]);
    assert_eq!(stdout(&o), "2k/2n,2,4,6\n0,1,1,1\n2,1,4,10\n4,0,1,10\n6,0,0,1\nsum,2,6,22\n");

    let o = shufsq(&["table", "table1", "--max-length", "2"]);
    let text = stdout(&o);
    let row: Vec<&str> = text.lines().nth(1).unwrap().split_whitespace().collect();
    assert_eq!(row, ["2", "2", "1"]);

    let o = shufsq(&["table", "covering-k", "--k", "3"]);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 16);
    assert!(text.lines().any(|l| l == "ABABCC 1 0 1 0 0"));
    assert_eq!(stdout(&shufsq(&["table", "table3"])), text);

    assert_eq!(shufsq(&["table", "table5", "--max-length", "7"]).status.code(), Some(2));
    assert_eq!(shufsq(&["table", "covering-k"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic_across_workers() {
    let one = shufsq(&["--workers", "1", "table", "table1", "--max-length", "16", "--format", "csv"]);
    let three = shufsq(&["--workers", "3", "table", "table1", "--max-length", "16", "--format", "csv"]);
    assert_eq!(one.stdout, three.stdout);
    let env = Command::new(env!("CARGO_BIN_EXE_shufsq"))
        .args(["table", "table1", "--max-length", "16", "--format", "csv"])
        .env("SHUFSQ_WORKERS", "2")
        .output()
        .unwrap();
    assert_eq!(env.stdout, one.stdout);
    assert_eq!(shufsq(&["--workers", "0", "s-of", "0011"]).status.code(), Some(2));
}

#[test]
fn out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t5.csv");
    let o = shufsq(&["table", "table5", "--max-length", "4", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert_eq!(fs::read_to_string(&path).unwrap(), "2k/2n,2,4\n0,1,1\n2,1,4\n4,0,1\nsum,2,6\n");
}

#[test]
fn scans() {
    let o = shufsq(&["scan", "anti-square", "--length", "24"]);
    assert_eq!(stdout(&o), "length=24 s_min=0 classes=1\n000001001111000011101111\n");

    let o = shufsq(&["scan", "dihedral", "--k", "3", "--max-length", "6"]);
    assert_eq!(stdout(&o), "violations=0\n");

    let o = shufsq(&["scan", "euler", "--k", "3"]);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 16);
    assert!(text.ends_with("euler_one=12 shuffle_squares=5 violations=9 methods_agree=true\n"));

    assert_eq!(shufsq(&["scan", "euler", "--k", "3", "--checkpoint", "x"]).status.code(), Some(2));
}

#[test]
fn anti_square_scan_resumes() {
    let dir = tempfile::tempdir().unwrap();
    let cp = dir.path().join("scan.ckpt");
    let cp = cp.to_str().unwrap();
    let full = shufsq(&["scan", "anti-square", "--length", "18"]);
    let partial = shufsq(&[
        "scan", "anti-square", "--length", "18", "--checkpoint", cp, "--checkpoint-every", "50", "--stop-after", "200",
    ]);
    assert!(stdout(&partial).contains("complete=false"));
    let resumed = shufsq(&["scan", "anti-square", "--length", "18", "--checkpoint", cp]);
    assert_eq!(stdout(&resumed), stdout(&full));
}

#[test]
fn corrupt_checkpoint_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let cp = dir.path().join("scan.ckpt");
    let cps = cp.to_str().unwrap();
    shufsq(&["scan", "anti-square", "--length", "16", "--checkpoint", cps, "--stop-after", "20"]);
    let mut bytes = fs::read(&cp).unwrap();
    let mid = bytes.len() / 2;
    bytes[mid] ^= 0xff;
    fs::write(&cp, bytes).unwrap();
    let o = shufsq(&["scan", "anti-square", "--length", "16", "--checkpoint", cps]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("restart required"));
    assert!(o.stdout.is_empty());
}

#[test]
fn cover_and_codes() {
    let o = shufsq(&["cover", "--k", "4"]);
    let text = stdout(&o);
    assert!(text.starts_with("k=4 size=14 optimal=true\n"));
    assert_eq!(text.lines().count(), 15);

    let o = shufsq(&["codes", "AABCBC"]);
    assert!(stdout(&o).ends_with("euler distinct=1 labelled=2\n"));
    let o = shufsq(&["codes", "ABCADCBD", "--view", "chords", "--format", "csv"]);
    assert!(stdout(&o).starts_with("a,b\n"));
    let o = shufsq(&["codes", "AABCBC", "--dot"]);
    assert!(stdout(&o).starts_with("digraph D {\n"));
}
