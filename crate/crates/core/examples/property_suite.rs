//! The seeded property suite behind `expcube verify all`.

use expansion_cubes::oracle::Seed;
use expansion_cubes::verify::run_all;

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    let report = run_all(Seed(seed), 100);
    for check in &report.checks {
        println!("{check}");
    }
    std::process::exit(if report.passed() { 0 } else { 1 });
}
