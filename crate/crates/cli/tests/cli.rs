use std::process::{Command, Output};

use serde_json::Value;

// Arguments are split on whitespace.
fn ulis(args: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ulis"))
        .args(args.split_whitespace())
        .output()
        .expect("binary runs")
}

fn stdout(args: &str) -> String {
    let out = ulis(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "ulis {args}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &str) -> i32 {
    ulis(args).status.code().unwrap()
}

fn stderr(args: &str) -> String {
    String::from_utf8(ulis(args).stderr).unwrap()
}

#[test]
fn count_231_series_csv() {
    let got = stdout("count --pattern 231 --class perm --max-n 9 --method series --format csv");
    assert_eq!(
        got,
        "n,count\n0,1\n1,1\n2,1\n3,2\n4,5\n5,13\n6,35\n7,97\n8,275\n9,794\n"
    );
}

#[test]
fn count_123_involutions() {
    let got = stdout("count --pattern 123 --class inv --max-n 6 --format bfile");
    assert_eq!(got, "1 1\n2 1\n3 0\n4 1\n5 0\n6 1\n");
}

#[test]
fn count_321_json_schema() {
    let got = stdout("count --pattern 321 --class perm --max-n 3 --method brute --format json");
    let v: Value = serde_json::from_str(&got).unwrap();
    assert_eq!(v["method"], "brute");
    assert_eq!(v["config"]["pattern"], "3,2,1");
    assert_eq!(v["config"]["max_n"], 3);
    let counts: Vec<&str> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["count"].as_str().unwrap())
        .collect();
    assert_eq!(counts, ["1", "1", "1", "3"]);
    assert_eq!(v["rows"][3]["n"], 3);
}

#[test]
fn bfiles_match_vendored_sequences() {
    let a082582 = stdout("count --pattern 231 --max-n 9 --method series --format bfile");
    assert_eq!(a082582, ulis_core::fixtures::A082582);
    let a152880 = stdout("count --pattern 132 --min-n 1 --max-n 9 --method tree-dp --format bfile");
    assert_eq!(a152880, ulis_core::fixtures::A152880);
}

#[test]
fn methods_agree() {
    let args = |m: &str| format!("count --pattern 132 --max-n 10 --method {m} --format bfile");
    assert_eq!(stdout(&args("brute")), stdout(&args("tree-dp")));
    let threaded = stdout("count --pattern 132 --max-n 10 --threads 3 --format bfile");
    assert_eq!(threaded, stdout(&args("brute")));
}

#[test]
fn ballot_counts() {
    let got = stdout("count --class ballot --max-n 8 --format bfile");
    assert_eq!(got, "1 1\n2 1\n3 1\n4 1\n5 2\n6 3\n7 5\n8 9\n");
}

#[test]
fn series_routes() {
    let solve = stdout("series --pattern 231 --terms 20 --format bfile");
    let closed = stdout("series --pattern 231 --terms 20 --route closed --format bfile");
    let brute = stdout("series --pattern 231 --terms 10 --route brute --format bfile");
    assert_eq!(solve, closed);
    assert!(solve.starts_with(&brute));
    let u1 = stdout("series --pattern 231 --terms 6 --indecomposable --format csv");
    assert_eq!(u1, "n,count\n0,0\n1,1\n2,0\n3,1\n4,2\n5,5\n");
}

#[test]
fn singularity_values() {
    let got = stdout("singularity");
    assert_eq!(
        got,
        "root        0.295597742522\nreciprocal  3.382975767905\n"
    );
}

#[test]
fn ratios_table() {
    let got = stdout("ratios --max-n 3 --format csv");
    assert_eq!(
        got,
        "n,u132,catalan,ratio,note\n1,1,1,1.000000000000,\n2,1,2,0.500000000000,\n3,3,5,0.600000000000,\n"
    );
}

#[test]
fn bijection_goldens() {
    assert_eq!(
        stdout("bijection f --perm 3,5,1,2,4,7,8,6"),
        "3,5,7,1,2,4,8,9,6\n"
    );
    assert_eq!(
        stdout("bijection f-inverse --perm 3,5,7,1,2,4,8,9,6"),
        "3,5,1,2,4,7,8,6\n"
    );
    assert_eq!(stdout("bijection phi --perm 1,2"), "UUDD\n");
    assert_eq!(stdout("bijection psi --perm 2,1"), "(()())\n");
    assert_eq!(stdout("bijection rs --perm 1,2,3"), "P=Q=[1 2 3]\n");
    assert_eq!(
        stdout("bijection rs --perm 2,3,1"),
        "P=[1 3 / 2]\nQ=[1 2 / 3]\n"
    );
}

#[test]
fn bijection_precondition_reports_witness() {
    let args = "bijection phi --perm 2,1,4,3";
    assert_eq!(code(args), 1);
    assert!(stderr(args).contains("positions [1, 3, 4] (values [2, 4, 3])"));
    assert_eq!(code("bijection f --perm 3,2,1"), 1);
    assert_eq!(code("bijection rs --perm 2,2,1"), 1);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(code("count --pattern 1234 --max-n 4"), 1);
    assert_eq!(code("count --pattern 231 --max-n 4 --method tree-dp"), 1);
    assert_eq!(code("count --pattern 132 --max-n 4 --method series"), 1);
    assert_eq!(code("count --pattern 132 --max-n 20"), 1);
    assert_eq!(code("count --max-n 4"), 1);
    assert_eq!(code("count --pattern 132"), 1);
    assert_eq!(code("frobnicate"), 1);
    assert_eq!(code("verify --suite nope"), 1);
    assert_eq!(code("series --pattern 321 --route closed"), 1);
    assert!(
        stderr("count --pattern 231 --max-n 4 --method tree-dp")
            .lines()
            .count()
            == 1
    );
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(code("--help"), 0);
    assert_eq!(code("--version"), 0);
    assert_eq!(code("count --help"), 0);
}

#[test]
fn verify_passes_and_fails() {
    let ok = ulis("verify --suite oeis --max-n 9");
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8(ok.stdout)
        .unwrap()
        .ends_with("PASS suite oeis\n"));
    assert_eq!(code("verify --suite bijections --max-n 8"), 0);

    let bad = ulis("verify --suite series --inject-fault sqrt");
    assert_eq!(bad.status.code(), Some(2));
    let text = String::from_utf8(bad.stdout).unwrap();
    assert!(
        text.contains(
            "first counterexample: series/sqrt-squares-back: residual coefficient index 3"
        ),
        "{text}"
    );
}

#[test]
fn sample_seed_rules() {
    assert_eq!(code("sample --n 10 --trials 10 --format json"), 1);
    let auto = stdout("sample --n 10 --trials 10");
    assert!(auto.lines().next().unwrap().contains("(auto)"));

    let args = "sample --n 40 --trials 2000 --seed 11 --format json";
    let a = stdout(args);
    assert_eq!(a, stdout(args));
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["config"]["seed"], 11);
    assert_eq!(v["report"]["streams"], 1);
    let total: u64 = v["report"]["estimates"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["hits"].as_u64().unwrap())
        .sum::<u64>()
        + v["report"]["overflow"]["hits"].as_u64().unwrap();
    assert_eq!(total, 2000);

    let par = "sample --n 40 --trials 2000 --seed 11 --threads 3 --format csv";
    assert_eq!(stdout(par), stdout(par));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("ulis-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("u231.csv");
    let args = "count --pattern 231 --max-n 7 --format csv";
    assert_eq!(stdout(&format!("{args} --out {}", path.display())), "");
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout(args));
    std::fs::remove_dir_all(&dir).unwrap();
}
