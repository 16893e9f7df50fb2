use std::process::{Command, Output};

use qbernoulli::beta::{evaluate, x_arg, BetaFamily};
use qbernoulli::RatFunc;

fn qbern(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qbern")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn compute_json(args: &[&str]) -> RatFunc {
    let o = qbern(args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    RatFunc::from_json(stdout(&o).trim()).expect("wire json")
}

#[test]
fn carlitz_two_at_zero() {
    let v = compute_json(&["compute", "--family", "carlitz", "--n", "2", "--arg", "0"]);
    let q = RatFunc::q();
    let one = RatFunc::from(1);
    let two = &one + &q;
    let three = &two + &(&q * &q);
    let want = q.checked_div(&(&two * &three)).unwrap();
    assert_eq!(v, want);
}

#[test]
fn twisted_zero_is_zero_mode() {
    let o = qbern(&["compute", "--family", "twisted", "--n", "0", "--format", "text"]);
    assert_eq!(stdout(&o).trim(), "(-1+q)/L");
}

#[test]
fn substitution_gives_a_number() {
    let o = qbern(&["compute", "--family", "carlitz", "--n", "1", "--at", "q=1/2", "--format", "text"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "-2/3");
}

#[test]
fn symbolic_argument_round_trips() {
    let v = compute_json(&["compute", "--family", "hr", "--h", "3", "--r", "2", "--n", "3", "--arg", "symbolic"]);
    assert_eq!(v, evaluate(&BetaFamily::hr(3, 3, 2), &x_arg()).unwrap());
    assert_eq!(RatFunc::from_json(&v.to_json()).unwrap(), v);
}

#[test]
fn hr_with_h2_r1_is_carlitz() {
    for n in 0..=5 {
        let n = n.to_string();
        let a = compute_json(&["compute", "--family", "hr", "--h", "2", "--r", "1", "--n", &n]);
        let b = compute_json(&["compute", "--family", "carlitz", "--n", &n]);
        assert_eq!(a, b, "n={n}");
    }
}

#[test]
fn json_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let o = qbern(&["compute", "--family", "chi", "--f", "4", "--chi", "1", "--n", "2", "--json", path.to_str().unwrap()]);
    assert!(o.status.success());
    let file = std::fs::read_to_string(&path).unwrap();
    assert_eq!(RatFunc::from_json(&file).unwrap(), RatFunc::from_json(stdout(&o).trim()).unwrap());
}

#[test]
fn table_rows_and_header() {
    let o = qbern(&["table", "--family", "carlitz", "--n", "0..4"]);
    assert!(o.status.success());
    let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
    assert_eq!(rdr.headers().unwrap().iter().collect::<Vec<_>>(), ["n", "value", "json"]);
    let rows: Vec<_> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 5);
    for (n, row) in rows.iter().enumerate() {
        assert_eq!(row[0], n.to_string());
        let v = RatFunc::from_json(&row[2]).unwrap();
        assert_eq!(v.to_string(), row[1]);
    }
}

#[test]
fn empty_table_has_only_header() {
    let o = qbern(&["table", "--family", "carlitz", "--n", "3..2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn table_numeric_column() {
    let o = qbern(&["table", "--family", "carlitz", "--n", "1", "--eval-q", "0.5"]);
    let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
    let row = rdr.records().next().unwrap().unwrap();
    let re: f64 = row[3].parse().unwrap();
    assert!((re + 1.0 / 1.5).abs() < 1e-14);
}

#[test]
fn table_rejects_large_n() {
    let o = qbern(&["table", "--family", "carlitz", "--n", "0..13"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn list_counts() {
    let o = qbern(&["list", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["identities"].as_array().unwrap().len() >= 18);
    assert_eq!(v["families"].as_array().unwrap().len(), 8);
    assert!(!v["errata"].as_array().unwrap().is_empty());
    let only = qbern(&["list", "--families", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&only.stdout).unwrap();
    assert!(v.get("identities").is_none());
}

#[test]
fn exit_codes() {
    assert_eq!(qbern(&["verify", "--identity", "I2"]).status.code(), Some(0));
    assert_eq!(qbern(&["verify", "--identity", "I2", "--perturb"]).status.code(), Some(1));
    assert_eq!(qbern(&["verify", "--identity", "I99"]).status.code(), Some(2));
    assert_eq!(qbern(&["compute", "--family", "hr", "--n", "1"]).status.code(), Some(2));
    assert_eq!(qbern(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(qbern(&["oracle", "complex", "--q", "0.95"]).status.code(), Some(2));
    assert_eq!(qbern(&["oracle", "padic", "--family", "carlitz", "--n", "1", "--x0", "1/2"]).status.code(), Some(2));
}

#[test]
fn verify_writes_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let o = qbern(&["verify", "--identity", "I7,I19", "--max-n", "3", "--json", path.to_str().unwrap()]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["cases"].as_array().unwrap().len(), 2);
    assert_eq!(v["limits"]["max_n"], 3);
}

#[test]
fn padic_oracle_converges() {
    let o = qbern(&["oracle", "padic", "--family", "twisted", "--n", "2", "--p", "5", "--N", "1..4"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("nonincreasing distance: yes"));
}

#[test]
fn padic_rejects_unembeddable_character() {
    // order-4 characters need 4 | p-1
    let o = qbern(&["oracle", "padic", "--family", "chi", "--f", "5", "--chi", "1", "--n", "1", "--p", "7"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn complex_oracle_single_point() {
    let o = qbern(&["oracle", "complex", "--q", "0.5+0.2i", "--x", "0.7"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains(" 0 failed"));
}

#[test]
fn config_merges_and_flags_win() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.toml");
    std::fs::write(&path, "n = 1\nformat = \"text\"\n[compute]\nfamily = \"carlitz\"\n").unwrap();
    let p = path.to_str().unwrap();
    let o = qbern(&["--config", p, "compute"]);
    assert_eq!(stdout(&o).trim(), "-1/(1+q)");
    let o = qbern(&["compute", "--config", p, "--n", "0"]);
    assert_eq!(stdout(&o).trim(), "1");
    std::fs::write(&path, "[compute]\nbogus = 1\n").unwrap();
    assert_eq!(qbern(&["--config", p, "compute", "--family", "carlitz", "--n", "1"]).status.code(), Some(2));
}
