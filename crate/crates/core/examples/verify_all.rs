// Runs every identity check over a small range and prints a summary.

use zasym::verify::{sweep, Claim, SweepConfig};
use zasym::SweepSummary;

fn main() {
    let cfg = SweepConfig {
        max_weight: 6,
        max_n: 3,
        ..SweepConfig::default()
    };
    let mut all_passed = true;
    for claim in Claim::ALL {
        let reports = sweep(claim, &cfg);
        let summary = SweepSummary::of(&reports);
        all_passed &= summary.all_passed();
        println!("{claim:>14}: {} of {} passed", summary.passed, summary.total);
        for failure in reports.iter().filter(|r| !r.passed()) {
            println!("  {}", serde_json::to_string(failure).unwrap());
        }
    }
    assert!(all_passed);
}
