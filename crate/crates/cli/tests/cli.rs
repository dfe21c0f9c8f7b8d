use std::path::PathBuf;
use std::process::{Command, Output};

fn kordered(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kordered"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("kordered-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn power_of_short_path_is_complete() {
    let o = kordered(&["power", "--gen", "path:4", "--p", "3"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().next(), Some("4 6"));
    assert_eq!(stdout(&o).lines().count(), 7);
}

#[test]
fn power_one_leaves_cycle_unchanged() {
    let o = kordered(&["power", "--gen", "cycle:5", "--p", "1"]);
    assert_eq!(stdout(&o), "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
}

#[test]
fn generators_are_byte_identical() {
    let a = kordered(&["power", "--gen", "rand-tree:10:7", "--p", "1"]);
    let b = kordered(&["power", "--gen", "rand-tree:10:7", "--p", "1"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn power_writes_file_and_reads_it_back() {
    let out = scratch("p.txt", "");
    let o = kordered(&["power", "--gen", "rand-conn:12:20:3", "--p", "2", "--output", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let again = kordered(&["power", "--input", out.to_str().unwrap(), "--p", "1"]);
    assert_eq!(stdout(&again), std::fs::read_to_string(&out).unwrap());
}

#[test]
fn order_round_trips_through_verify() {
    let cases: [(&str, &str, &str, &str); 4] = [
        ("path:7", "0,5,1,6", "four", "power: 4"),
        ("cycle:9", "0,4,2,6,8", "cycle5", "power: 3"),
        ("rand-conn:20:30:1", "3,17,9", "auto", "power: 5"),
        ("path:12", "11,0,5,3,8,1", "auto", "power: 8"),
    ];
    for (i, (gen, seq, family, diag)) in cases.into_iter().enumerate() {
        let o = kordered(&["order", "--gen", gen, "--seq", seq, "--family", family]);
        assert_eq!(code(&o), 0, "{}", stderr(&o));
        assert!(stderr(&o).contains(diag), "{}", stderr(&o));
        let cert = scratch(&format!("cert{i}.json"), &stdout(&o));
        let v = kordered(&["verify", "--gen", gen, "--cert", cert.to_str().unwrap()]);
        assert_eq!(code(&v), 0, "{}", stderr(&v));
    }
}

#[test]
fn host5_reads_the_hamiltonian_cycle() {
    let g = scratch("k5.txt", "5 10\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
    let ham = scratch("ham.txt", "0 2 4 1 3\n");
    let args = ["order", "--input", g.to_str().unwrap(), "--seq", "4,3,2,1,0", "--family", "host5"];
    let o = kordered(&[&args[..], &["--ham", ham.to_str().unwrap()]].concat());
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(code(&kordered(&args)), 1);
}

#[test]
fn tampered_certificate_is_rejected() {
    let o = kordered(&["order", "--gen", "path:7", "--seq", "0,5,1,6", "--family", "four"]);
    let text = stdout(&o).replace("\"power\": 4", "\"power\": 2");
    let cert = scratch("tampered.json", &text);
    let v = kordered(&["verify", "--gen", "path:7", "--cert", cert.to_str().unwrap()]);
    assert_eq!(code(&v), 2);
    assert!(stderr(&v).contains("edge violation"));
    let wrong_n = kordered(&["verify", "--gen", "path:8", "--cert", cert.to_str().unwrap()]);
    assert_eq!(code(&wrong_n), 1);
    let garbage = scratch("garbage.json", "{");
    assert_eq!(code(&kordered(&["verify", "--gen", "path:7", "--cert", garbage.to_str().unwrap()])), 1);
}

#[test]
fn oracle_answers() {
    let p3 = scratch("p73.txt", &stdout(&kordered(&["power", "--gen", "path:7", "--p", "3"])));
    let o = kordered(&["oracle", "--input", p3.to_str().unwrap(), "--seq", "0,5,1,6"]);
    assert_eq!((code(&o), stdout(&o)), (2, "no\n".to_string()));
    let p5 = scratch("p75.txt", &stdout(&kordered(&["power", "--gen", "path:7", "--p", "5"])));
    let o = kordered(&["oracle", "--input", p5.to_str().unwrap(), "--seq", "0,5,1,6", "--hamiltonian"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("yes\n"));
    let o = kordered(&["oracle", "--gen", "complete:4", "--seq", "0,1,2,3", "--hamiltonian"]);
    assert_eq!(code(&o), 0);
    let o = kordered(&["oracle", "--gen", "path:30", "--seq", "0,1,2"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn witnesses_are_confirmed() {
    let o = kordered(&["witness", "path-lower", "--k", "4"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("n=7 power=3 anchors(1-indexed)=1,6,2,7"));
    let o = kordered(&["witness", "path-lower", "--k", "5"]);
    assert!(stdout(&o).starts_with("n=9 power=4"));
    assert!(stdout(&o).contains("confirmed: no ordered cycle"));
    let o = kordered(&["witness", "cycle-lower", "--m", "3", "--max-n", "24"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("confirmed: n=11"));
}

#[test]
fn bench_pk_values() {
    let o = kordered(&["bench", "pk", "--gen", "path:7", "--k", "4"]);
    assert!(stdout(&o).ends_with("p_k=4\n"), "{}", stdout(&o));
    let o = kordered(&["bench", "pk", "--gen", "cycle:8", "--k", "5", "--csv"]);
    assert_eq!(stdout(&o).lines().last(), Some("3,true,\"\""));
    let o = kordered(&["bench", "pk", "--gen", "path:5", "--k", "3"]);
    let pk: usize = stdout(&o).trim().rsplit('=').next().unwrap().parse().unwrap();
    assert!(pk <= 3);
    assert_eq!(code(&kordered(&["bench", "pk", "--gen", "path:20", "--k", "3"])), 1);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(code(&kordered(&["bogus"])), 1);
    assert_eq!(code(&kordered(&["order", "--gen", "path:7", "--seq", "0,0,1"])), 1);
    assert_eq!(code(&kordered(&["order", "--gen", "path:7", "--seq", "0,1,2", "--family", "nope"])), 1);
    assert_eq!(code(&kordered(&["power", "--gen", "path:4", "--input", "x", "--p", "2"])), 1);
    assert_eq!(code(&kordered(&["power", "--input", "/nonexistent/file", "--p", "2"])), 1);
    assert_eq!(code(&kordered(&["--help"])), 0);
}
