use ulis_core::verify::{run_suite, Faults, Suite, VerifyOptions};

fn run(suite: Suite, max_n: usize) {
    let opts = VerifyOptions {
        max_n,
        threads: 2,
        faults: Faults::default(),
    };
    let report = run_suite(suite, &opts);
    println!("{report}");
    assert!(report.passed(), "{report}");
}

#[test]
fn bijections_suite() {
    run(Suite::Bijections, 9);
}

#[test]
fn rs_suite() {
    run(Suite::Rs, 8);
}

#[test]
fn series_suite() {
    run(Suite::Series, 13);
}

#[test]
fn oeis_suite() {
    run(Suite::Oeis, 9);
}

#[test]
fn ballot_suite() {
    run(Suite::Ballot, 12);
}

#[test]
fn sampler_suite() {
    run(Suite::Sampler, 12);
}

#[test]
fn faulty_sqrt_is_caught_with_coefficient_index() {
    let opts = VerifyOptions {
        max_n: 9,
        threads: 1,
        faults: Faults { sqrt: true },
    };
    let report = run_suite(Suite::Series, &opts);
    assert!(!report.passed());
    let first = report.first_failure().unwrap();
    assert_eq!(first.name, "sqrt-squares-back");
    assert!(
        first.detail.contains("residual coefficient index 3"),
        "{}",
        first.detail
    );
}
