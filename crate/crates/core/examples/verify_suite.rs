//! Runs every identity check on reduced grids and prints a summary; pass
//! `--full` for the default (acceptance) grids.
//!
//!     cargo run --release --example verify_suite -- --full

use derangements::identities::{check_all, Grids};

fn main() {
    let grids = if std::env::args().any(|a| a == "--full") {
        Grids::default()
    } else {
        Grids {
            main_r_max: 5,
            main_n_max: 60,
            classical_n_max: 60,
            recurrence_n_max: 40,
            shift_n_max: 60,
            nearest_n_max: 80,
            oracle_points_max: 7,
            oracle_signed_n_max: 5,
            oracle_lah_n_max: 6,
            ..Grids::default()
        }
    };
    for report in check_all(&grids) {
        println!(
            "{:<26} {:<44} {:<4} {:>4} {:>10.1?}",
            report.id.name(),
            report.grid,
            report.verdict.as_str(),
            report.counterexamples.len(),
            report.elapsed
        );
    }
}
