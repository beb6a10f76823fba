//! Evaluates the Lah sum rule in three variants and prints the evidence:
//! the left index as printed (r-1), the shifted index (r+1), and the two
//! right-hand sums against each other.
//!
//!     cargo run --example lah_adjudication

use derangements::identities::{check_lah_sum_rule, LAH_SAMPLE_POINTS};

fn main() {
    for report in check_lah_sum_rule(30, 6) {
        println!(
            "{:<26} {:<16} {}  ({} counterexamples)",
            report.id.name(),
            report.grid,
            report.verdict.as_str(),
            report.counterexamples.len()
        );
        for (n, r) in LAH_SAMPLE_POINTS {
            let e = report.evaluation(&format!("n={n},r={r}")).unwrap();
            println!("    n={n} r={r}: lhs {:>4}  rhs {:>4}", e.lhs, e.rhs);
        }
        for c in report.counterexamples.iter().take(3) {
            println!("    counterexample {}: lhs {} rhs {}", c.params, c.lhs, c.rhs);
        }
    }
}
