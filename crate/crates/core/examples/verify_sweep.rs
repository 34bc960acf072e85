//! Seeded invariant sweeps, as run by `syzlab verify`.
//!
//! Usage: `cargo run --release --example verify_sweep -- [trials] [seed]`

use syzlab::cli::{run_suite, Suite};

fn main() {
    let mut args = std::env::args().skip(1);
    let trials = args.next().and_then(|s| s.parse().ok()).unwrap_or(2);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(7);
    for suite in [Suite::MaxTau, Suite::MinTau, Suite::Dpw, Suite::ThmProduct, Suite::EigenDichotomy] {
        let report = run_suite(suite, trials, seed);
        println!("{suite}: {} checks, {} violations", report.checks.len(), report.violations);
        for c in report.checks.iter().filter(|c| !c.passed) {
            println!("  trial {} {} d={}: {}", c.trial, c.label, c.degree, c.detail);
        }
    }
}
