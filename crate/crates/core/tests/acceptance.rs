//! Runs every verification suite once and prints one line per criterion.
//! `cargo test --release -p ringdyn --test acceptance -- --nocapture`

use ringdyn::bounds::Bounds;
use ringdyn::suites::{run_suites, SUITES};

#[test]
fn acceptance_criteria() {
    let ids: Vec<u8> = SUITES.iter().map(|s| s.0).collect();
    let reports = run_suites(&ids, &Bounds::default(), 0).expect("suites run");
    for r in &reports {
        println!("{}", r.summary_line());
        for f in &r.failures {
            println!("    failure: {f}");
        }
        for n in &r.notes {
            println!("    note: {n}");
        }
    }
    let failed: Vec<&str> = reports.iter().filter(|r| !r.passed).map(|r| r.name).collect();
    assert_eq!(reports.len(), 11);
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
