//! Prints the first terms of every sequence family, plus one large
//! derangement number obtained both from the alternating sum and as the
//! integer nearest to n!/e.
//!
//!     cargo run --example sequence_table

use derangements::sequences::{
    b_derangement, b_stirling_k0, derangement, derangement_nearest_int, lah, r_derangement,
};

fn row(label: &str, values: impl Iterator<Item = String>) {
    println!("{label:<14}{}", values.collect::<Vec<_>>().join(" "));
}

fn main() {
    const N: usize = 10;
    row("D(n)", (0..=N).map(|n| derangement(n).to_string()));
    for r in 1..=4 {
        row(&format!("D_{r}(n)"), (0..=N).map(|n| r_derangement(n, r).to_string()));
    }
    row("D^B(n)", (0..=N).map(|n| b_derangement(n).to_string()));
    for r in 0..=3 {
        row(&format!("B k=0, r={r}"), (0..=6).map(|n| b_stirling_k0(n, r).to_string()));
    }

    println!("\nLah triangle L(n, k):");
    for n in 0..=7 {
        row(&format!("n={n}"), (0..=n).map(|k| lah(n, k).to_string()));
    }

    let n = 60;
    let sum = derangement(n);
    let nearest = derangement_nearest_int(n).expect("n >= 1");
    println!("\nD({n}) alternating sum = {sum}");
    println!("D({n}) nearest to n!/e = {nearest}");
    assert_eq!(sum, nearest);
}
