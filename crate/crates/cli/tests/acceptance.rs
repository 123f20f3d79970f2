//! Acceptance battery as a test target.  One line per check; the test
//! fails if any check does.  Run with `--nocapture` to see the lines even
//! on success.

use ellfan::battery;

#[test]
fn acceptance() {
    let results = battery::run_all(None);
    assert_eq!(results.len(), 11, "all eleven checks must run");
    let mut failed = Vec::new();
    for r in &results {
        let status = if r.passed { "PASS" } else { "FAIL" };
        println!("{status} {} - {}", r.name, r.detail);
        if !r.passed {
            failed.push(r.name);
        }
    }
    assert!(failed.is_empty(), "failing checks: {failed:?}");
}
