use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_modwidth"))
}

fn write(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("modwidth-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn c5() -> PathBuf {
    write("c5.txt", "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
}

fn run(args: &[&str]) -> (i32, String) {
    let Output { status, stdout, .. } = bin().args(args).output().unwrap();
    (status.code().unwrap(), String::from_utf8(stdout).unwrap())
}

#[test]
fn solve_examples() {
    let g = c5();
    let g = g.to_str().unwrap();
    assert_eq!(run(&["solve", "chromatic-number", g]), (0, "value 3\n".into()));
    assert_eq!(run(&["solve", "hamiltonian-cycle", g]), (0, "yes\n".into()));
    let (code, out) = run(&["solve", "independent-set", g, "--k", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().last(), Some("no"));
    let (code, out) = run(&["solve", "independent-set", g, "--oracle-mode", "membership"]);
    assert_eq!((code, out.as_str()), (0, "value 2\n"));
}

#[test]
fn input_errors_exit_2() {
    let g = c5();
    assert_eq!(run(&["solve", "no-such-problem", g.to_str().unwrap()]).0, 2);
    let bad = write("bad.txt", "3 1\n0 7\n");
    assert_eq!(run(&["solve", "vertex-cover", bad.to_str().unwrap()]).0, 2);
    assert_eq!(run(&["gen", "--n", "10", "--k", "3"]).0, 2);
}

#[test]
fn transcript_file() {
    let g = c5();
    let t = std::env::temp_dir().join(format!("modwidth-cli-{}", std::process::id())).join("t.txt");
    let (code, _) = run(&["solve", "dominating-set", g.to_str().unwrap(), "--transcript", t.to_str().unwrap()]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&t).unwrap();
    let parsed = modwidth::engine::parse_dump(&text).unwrap();
    assert_eq!(parsed.render(), text);
    assert_eq!((parsed.mw, parsed.n), (5, 5));
}

#[test]
fn mdtree_output() {
    let (code, out) = run(&["mdtree", c5().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.ends_with("mw=5\n"));
    let c4 = write("c4.txt", "4 4\n0 1\n1 2\n2 3\n3 0\n");
    assert!(run(&["mdtree", c4.to_str().unwrap()]).1.ends_with("mw=0\n"));
    let p4 = write("p4.txt", "4 3\n0 1\n1 2\n2 3\n");
    let out = run(&["mdtree", p4.to_str().unwrap()]).1;
    assert!(out.starts_with("prime module={0,1,2,3}\n"));
    assert_eq!(out.matches("  leaf").count(), 4);
}

#[test]
fn gen_is_deterministic_and_parses() {
    let a = run(&["gen", "--n", "25", "--k", "5", "--seed", "9"]);
    assert_eq!(a, run(&["gen", "--n", "25", "--k", "5", "--seed", "9"]));
    assert!(a.1.starts_with("# gen n=25 k=5 seed=9\n"));
    let g = modwidth::Graph::parse_edge_list(&a.1).unwrap();
    assert!(modwidth::decompose(&g).modular_width() <= 5);
}

#[test]
fn verify_statuses() {
    let g = write("g.txt", &modwidth::generators::random_graph(9, 0.5, 4).unwrap().to_edge_list());
    let g = g.to_str().unwrap();
    let (code, out) = run(&["verify", "feedback-vertex-set", g]);
    assert_eq!(code, 0);
    assert!(out.starts_with("MATCH value="));
    let (code, out) = run(&["verify", "dominating-set", g, "--corrupt-oracle"]);
    assert_eq!(code, 4);
    assert!(out.starts_with("MISMATCH"));
    let big = write("big.txt", &modwidth::Graph::path(40).unwrap().to_edge_list());
    assert_eq!(run(&["verify", "vertex-cover", big.to_str().unwrap()]).0, 2);
}

#[test]
fn oracle_protocol() {
    use std::io::Write;
    use std::process::Stdio;
    let mut child = bin().args(["oracle", "--system", "s-col"]).stdin(Stdio::piped()).stdout(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(b"0005010399492480\nzz\n").unwrap();
    let out = String::from_utf8(child.wait_with_output().unwrap().stdout).unwrap();
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "3");
    assert!(lines[1].starts_with("error "));
}
