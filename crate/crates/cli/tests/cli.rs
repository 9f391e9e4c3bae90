use std::process::{Command, Output};

fn tableaux(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tableaux"))
        .args(args)
        .env_remove("TABLEAUX_BUDGET_OVERRIDE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

#[test]
fn count_examples() {
    let o = tableaux(&["count", "--graph", "young", "--k", "2", "--from", "0,1", "--to", "1,3", "--method", "all"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "2\n"));
    let o = tableaux(&["count", "--graph", "pascal", "--k", "3", "--to", "1,1,1"]);
    assert_eq!(stdout(&o), "6\n");
    let o = tableaux(&["count", "--graph", "strict", "--k", "2", "--to-partition", "2,1"]);
    assert_eq!(stdout(&o), "1\n");
    let o = tableaux(&["count", "--graph", "young", "--k", "3", "--to-partition", "3,2,1", "--method", "all"]);
    assert_eq!(stdout(&o), "16\n");
}

#[test]
fn count_json_is_strings() {
    // C(80, 40) needs more than 64 bits
    let expected = (0..40u128).fold(1u128, |c, i| c * (80 - i) / (i + 1));
    assert!(expected > u64::MAX as u128);
    let o = Command::new(env!("CARGO_BIN_EXE_tableaux"))
        .args(["count", "--graph", "pascal", "--k", "2", "--to", "40,40", "--method", "all", "--format", "json"])
        .env("TABLEAUX_BUDGET_OVERRIDE", "10")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["counts"]["formula"], expected.to_string());
    assert_eq!(v["counts"]["oracle"], v["counts"]["phi"]);
    assert_eq!(v["counts"]["oracle"], v["counts"]["formula"]);
    assert_eq!(v["agree"], true);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&tableaux(&["count", "--graph", "young", "--k", "2", "--to", "1,1"])), 2);
    assert_eq!(code(&tableaux(&["count", "--graph", "pascal", "--k", "2", "--to-partition", "2,1"])), 2);
    assert_eq!(code(&tableaux(&["count", "--graph", "custom", "--k", "1", "--vertices", "0;1", "--to", "1"])), 2);
    assert_eq!(code(&tableaux(&["table", "--graph", "strict", "--k", "3", "--deg", "6", "--format", "xml"])), 2);
    assert_eq!(code(&tableaux(&["verify", "skew", "--n", "2"])), 2);
    assert_eq!(code(&tableaux(&["hooks", "1,2"])), 2);
}

#[test]
fn custom_graph_counts_by_oracle_and_phi() {
    let o = tableaux(&[
        "count",
        "--graph",
        "custom",
        "--k",
        "2",
        "--vertices",
        "0,0;1,0;0,1;1,1",
        "--to",
        "1,1",
        "--method",
        "oracle",
    ]);
    assert_eq!(stdout(&o), "2\n");
    let o = tableaux(&[
        "count",
        "--graph",
        "custom",
        "--k",
        "2",
        "--vertices",
        "0,0;1,0;0,1;1,1",
        "--to",
        "1,1",
        "--method",
        "phi",
    ]);
    assert_eq!(stdout(&o), "2\n");
}

#[test]
fn verify_examples() {
    let o = tableaux(&["verify", "vandermonde", "--k", "2", "--n", "3"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["identity"], "vandermonde");
    assert_eq!(v["status"], "pass");
    let o = tableaux(&["verify", "ivanov", "--sigma", "1", "--k", "2", "--n", "3"]);
    assert_eq!(code(&o), 0);
    let o = tableaux(&["verify", "hook", "--k", "9", "--n", "99"]);
    assert_eq!(code(&o), 2);
    let o = tableaux(&["verify", "skew", "--m", "0,2", "--n", "2", "--no-timing"]);
    assert_eq!(
        stdout(&o),
        "{\"identity\":\"skew_identity\",\"params\":{\"k\":\"2\",\"m\":\"0,2\",\"n\":\"2\"},\"status\":\"pass\"}\n"
    );
}

#[test]
fn cross_validation_records_seed() {
    let o = tableaux(&[
        "verify",
        "cross",
        "--graph",
        "young",
        "--k",
        "3",
        "--levels",
        "6",
        "--samples",
        "20",
        "--seed",
        "5",
    ]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["seed"], 5);
}

#[test]
fn budget_override_raises_limits() {
    let base = ["verify", "multinomial", "--k", "6", "--n", "2"];
    assert_eq!(code(&tableaux(&base)), 2);
    let o =
        Command::new(env!("CARGO_BIN_EXE_tableaux")).args(base).env("TABLEAUX_BUDGET_OVERRIDE", "2").output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    let o = Command::new(env!("CARGO_BIN_EXE_tableaux"))
        .args(base)
        .env("TABLEAUX_BUDGET_OVERRIDE", "lots")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sweep_is_deterministic_without_timing() {
    let a = tableaux(&["verify", "hook", "--sweep", "--no-timing"]);
    let b = tableaux(&["verify", "hook", "--sweep", "--no-timing", "--threads", "4"]);
    assert_eq!(code(&a), 0);
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(stdout(&a).lines().count(), 18);
}

#[test]
fn hooks_examples() {
    assert_eq!(stdout(&tableaux(&["hooks", "2,1"])), "3 1\n1\nproduct 3\ncount 2\n");
    assert_eq!(stdout(&tableaux(&["hooks", "1"])), "1\nproduct 1\ncount 1\n");
    let o = tableaux(&["hooks", "2,2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!((v["product"].as_str(), v["count"].as_str()), (Some("12"), Some("2")));
}

#[test]
fn phi_examples() {
    let o = tableaux(&["phi", "--graph", "young", "--k", "2", "--v", "0,1", "--D", "4"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "-1*x1 + 1*x2\nconditions up to degree 4: pass\n");
    let o = tableaux(&["phi", "--graph", "pascal", "--k", "3", "--v", "0,0,0", "--D", "4"]);
    assert_eq!(stdout(&o).lines().next(), Some("1"));
    let o = tableaux(&["phi", "--graph", "custom", "--k", "2", "--vertices", "0,0;2,0", "--v", "0,0", "--D", "2"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("(1,0) is not"));
    let o = tableaux(&[
        "phi",
        "--graph",
        "strict",
        "--k",
        "2",
        "--v",
        "0,1",
        "--D",
        "5",
        "--format",
        "json",
        "--no-timing",
    ]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["verification"]["status"], "pass");
    assert_eq!(v["degree_bound"], "5");
}

#[test]
fn table_formats() {
    let o = tableaux(&["table", "--graph", "strict", "--k", "3", "--deg", "6", "--format", "csv"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(reader.headers().unwrap(), vec!["vertex", "count"]);
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    let find = |v: &str| rows.iter().find(|r| &r[0] == v).map(|r| r[1].to_string());
    assert_eq!(find("0,1,2").as_deref(), Some("1"));
    assert_eq!(find("0,1,3").as_deref(), Some("2"));
    assert!(text.contains("\"0,1,3\",2"));
    let empty = tableaux(&["table", "--graph", "young", "--k", "3", "--deg", "2", "--format", "csv"]);
    assert_eq!(stdout(&empty), "vertex,count\n");
    let json = tableaux(&["table", "--graph", "pascal", "--k", "2", "--deg", "1", "--format", "json"]);
    assert_eq!(stdout(&json).lines().count(), 3);
}
