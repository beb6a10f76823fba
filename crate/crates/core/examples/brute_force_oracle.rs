//! Counts r-derangements, signed derangements and ordered set partitions by
//! exhaustive enumeration and compares each count with its closed form.
//!
//!     cargo run --release --example brute_force_oracle

use derangements::oracle::{
    compose_cycles, count_ordered_partitions, count_r_derangements_parallel,
    count_signed_derangements, cycle_decomposition, is_r_derangement, OracleConfig,
};
use derangements::sequences::{b_derangement, lah, r_derangement};

fn main() {
    let perm = compose_cycles(9, &[vec![1, 8, 4], vec![2, 9, 3, 7], vec![6, 5]]);
    let zero_based: Vec<usize> = perm.iter().map(|p| p - 1).collect();
    println!("cycles of {perm:?}: {:?}", cycle_decomposition(&perm).unwrap());
    println!(
        "  2-derangement: {}, 3-derangement: {}",
        is_r_derangement(&zero_based, 2),
        is_r_derangement(&zero_based, 3)
    );

    println!("\nr-derangements (n free points, r distinguished):");
    for r in 0..=3 {
        for n in r..=8 - r {
            let cfg = OracleConfig::unsigned(n, r).unwrap();
            let counted = count_r_derangements_parallel(&cfg).unwrap();
            println!("  n={n} r={r}: enumerated {counted:>6}, closed form {:>6}", r_derangement(n, r));
        }
    }

    println!("\nsigned derangements:");
    for n in 0..=6 {
        let counted = count_signed_derangements(&OracleConfig::signed(n).unwrap()).unwrap();
        println!("  n={n}: enumerated {counted:>6}, closed form {:>6}", b_derangement(n));
    }

    println!("\nordered set partitions:");
    for n1 in 0..=6 {
        let counted: Vec<String> = (0..=n1).map(|n2| count_ordered_partitions(n1, n2).unwrap().to_string()).collect();
        let closed: Vec<String> = (0..=n1).map(|n2| lah(n1, n2).to_string()).collect();
        println!("  n1={n1}: {} | {}", counted.join(" "), closed.join(" "));
    }

    match OracleConfig::unsigned(8, 4) {
        Ok(_) => unreachable!(),
        Err(e) => println!("\nrefused: {e}"),
    }
}
