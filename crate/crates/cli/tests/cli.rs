//! End-to-end runs of the `newtonbez` binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use newtonbez::io::{InstanceFile, MatrixFile};
use newtonbez_core::Rational;
use proptest::prelude::*;
use tempfile::TempDir;

const EXAMPLE: &str =
    r#"{"field": "rational", "nodes": ["-1", "0", "2"], "F": ["1", "2", "3", "4"], "G": ["5", "6", "7"]}"#;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_newtonbez")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

fn matrix(path: &Path) -> MatrixFile {
    MatrixFile::from_json(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn bezout_example_all_modes() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "ex.json", EXAMPLE);
    let mut outputs = Vec::new();
    for mode in ["preserving", "transform", "oracle"] {
        let out_path = dir.path().join(format!("{mode}.json"));
        let out = run(&["bezout", &input, "--mode", mode, "-o", out_path.to_str().unwrap()]);
        assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
        outputs.push(fs::read(&out_path).unwrap());
    }
    assert!(outputs.iter().all(|o| o == &outputs[0]));
    let m = matrix(&dir.path().join("preserving.json"));
    assert_eq!((m.rows, m.cols), (3, 3));
    assert_eq!(m.entries, ["28", "24", "20", "24", "-24", "-52", "20", "-52", "56"]);
}

#[test]
fn bezout_to_stdout_and_monomial_basis() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "ex.json", EXAMPLE);
    let newton = run(&["bezout", &input]);
    assert_eq!(code(&newton), 0);
    assert!(String::from_utf8_lossy(&newton.stdout).contains("\"28\""));
    let a = run(&["bezout", &input, "--basis", "monomial"]);
    let b = run(&["bezout", &input, "--basis", "monomial", "--mode", "oracle"]);
    let c = run(&["bezout", &input, "--basis", "monomial", "--mode", "transform"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    assert_ne!(a.stdout, newton.stdout);
}

#[test]
fn long_g_is_precondition_error() {
    let dir = TempDir::new().unwrap();
    let input =
        write(&dir, "bad.json", r#"{"field": "rational", "nodes": ["1"], "F": ["1", "2"], "G": ["1", "2", "3"]}"#);
    let out = run(&["bezout", &input]);
    assert_eq!(code(&out), 3);
    assert!(!out.stderr.is_empty());
}

#[test]
fn oracle_on_floats_is_precondition_error() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "f.json", &EXAMPLE.replace("rational", "f64"));
    assert_eq!(code(&run(&["bezout", &input])), 0);
    assert_eq!(code(&run(&["bezout", &input, "--mode", "oracle"])), 3);
}

#[test]
fn confederate_identity_and_byte_equal_approaches() {
    let dir = TempDir::new().unwrap();
    let one = write(&dir, "one.json", &EXAMPLE.replace(r#"["5", "6", "7"]"#, r#"["1"]"#));
    for approach in ["a", "b", "c"] {
        let out = run(&["confederate", &one, "--approach", approach]);
        assert_eq!(code(&out), 0);
        let m = MatrixFile::from_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
        assert_eq!(m.entries, ["1", "0", "0", "0", "1", "0", "0", "0", "1"]);
    }
    let input = write(&dir, "ex.json", EXAMPLE);
    let (pa, pc) = (dir.path().join("a.json"), dir.path().join("c.json"));
    assert_eq!(code(&run(&["confederate", &input, "--approach", "a", "-o", pa.to_str().unwrap()])), 0);
    assert_eq!(code(&run(&["confederate", &input, "--approach", "c", "-o", pc.to_str().unwrap()])), 0);
    assert_eq!(fs::read(pa).unwrap(), fs::read(pc).unwrap());
}

#[test]
fn malformed_inputs_are_parse_errors() {
    let dir = TempDir::new().unwrap();
    let bad_scalar = write(&dir, "s.json", &EXAMPLE.replace("\"-1\"", "\"1.5\""));
    assert_eq!(code(&run(&["confederate", &bad_scalar])), 2);
    let bad_json = write(&dir, "j.json", "{\"field\": ");
    assert_eq!(code(&run(&["bezout", &bad_json])), 2);
    assert_eq!(code(&run(&["bezout", dir.path().join("missing.json").to_str().unwrap()])), 2);
    assert_eq!(code(&run(&["bezout", &bad_scalar, "--mode", "nonsense"])), 2);
}

#[test]
fn gen_is_deterministic_and_round_trips() {
    let dir = TempDir::new().unwrap();
    let (p1, p2) = (dir.path().join("1.json"), dir.path().join("2.json"));
    assert_eq!(code(&run(&["gen", "3", "2", "7", "-o", p1.to_str().unwrap()])), 0);
    assert_eq!(code(&run(&["gen", "3", "2", "7", "-o", p2.to_str().unwrap()])), 0);
    let text = fs::read_to_string(&p1).unwrap();
    assert_eq!(text, fs::read_to_string(&p2).unwrap());
    let file = InstanceFile::from_json(&text).unwrap();
    let inst = file.to_instance::<Rational>().unwrap();
    assert_eq!((inst.nodes().len(), inst.g.degree()), (3, Some(2)));
    assert_eq!(InstanceFile::from_json(&file.to_json()).unwrap(), file);
    assert_eq!(code(&run(&["gen", "2", "5", "1"])), 3);
}

#[test]
fn verify_random_batch_passes() {
    let out = run(&["verify", "--random", "8", "6", "42", "25"]);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert_eq!(code(&out), 0, "{stdout}");
    assert_eq!(stdout.lines().filter(|l| l.starts_with("PASS ")).count(), 9);
}

#[test]
fn verify_g_equal_f_file() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "same.json", &EXAMPLE.replace(r#"["5", "6", "7"]"#, r#"["1", "2", "3", "4"]"#));
    let out = run(&["verify", &input]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("note:"));
}

#[test]
fn verify_corrupt_hook_fails_with_counterexample() {
    let dir = TempDir::new().unwrap();
    let cx = dir.path().join("cx.json");
    let out = run(&["verify", "--random", "5", "3", "1", "4", "--corrupt", "--counterexample", cx.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL "));
    let inst = InstanceFile::read(&cx).unwrap().to_instance::<Rational>().unwrap();
    assert_eq!(inst.nodes().len(), 5);
}

#[test]
fn bench_csv_and_usage_errors() {
    let dir = TempDir::new().unwrap();
    let csv = dir.path().join("b.csv");
    let out = run(&["bench", "--degrees", "4", "--field", "rational", "--csv", csv.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,m,size,t_preserving,t_trans,ratio,mults,adds"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 2);
    for row in rows {
        assert_eq!(&row[6..], ["26", "28"]);
    }
    assert_eq!(code(&run(&["bench"])), 2);
    assert_eq!(code(&run(&["bench", "--degrees", "1"])), 2);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn generated_files_reparse(n in 1usize..=8, m_pick in 0usize..8, seed in any::<u32>()) {
        let m = 1 + m_pick % n;
        let out = run(&["gen", &n.to_string(), &m.to_string(), &seed.to_string()]);
        prop_assert_eq!(code(&out), 0);
        let text = String::from_utf8(out.stdout).unwrap();
        let file = InstanceFile::from_json(&text).unwrap();
        let inst = file.to_instance::<Rational>().unwrap();
        prop_assert_eq!(InstanceFile::from_instance(&inst, file.field).to_json(), text);
    }
}
