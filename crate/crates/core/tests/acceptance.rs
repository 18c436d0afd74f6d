//! Runs every reproduction criterion and prints one line per criterion.
//! Exits non-zero if any criterion fails.

use matroid_split::verify::{self, VerifyConfig, CRITERIA};

fn main() {
    let cfg = VerifyConfig::default();
    // `cargo test` passes harness flags; a bare number selects one criterion
    let only: Vec<u8> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for &(id, _, _) in CRITERIA.iter().filter(|c| only.is_empty() || only.contains(&c.0)) {
        let r = verify::run(id, &cfg);
        let status = if r.passed { "PASS" } else { "FAIL" };
        println!("{status} criterion {id}: {} ({} ms, budget {} s) {}", r.title, r.millis, r.budget_secs, r.detail);
        failed += usize::from(!r.passed);
    }
    println!("acceptance: {failed} failing");
    if failed > 0 {
        std::process::exit(1);
    }
}
