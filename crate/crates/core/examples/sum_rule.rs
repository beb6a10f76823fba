//! The r-derangement sum rule sum_k C(n,k) D_r(k) = n! C(n,r), evaluated by
//! direct summation and through the EGF route, next to the right side.
//!
//!     cargo run --example sum_rule [r] [n]

use derangements::arith::{binomial, factorial};
use derangements::identities::{sum_rule_lhs_direct, sum_rule_lhs_egf};

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("integer argument"));
    let r = args.next().unwrap_or(3);
    let n_max = args.next().unwrap_or(12);

    let direct = sum_rule_lhs_direct(r, n_max);
    let via_egf = sum_rule_lhs_egf(r, n_max);
    println!("r = {r}");
    println!("{:>4}  {:>24}  {:>24}  {:>24}", "n", "direct", "egf", "n! C(n,r)");
    for n in 0..=n_max {
        let rhs = factorial(n) * binomial(n, r);
        let mark = if direct[n] == rhs && via_egf[n] == rhs { "" } else { "  <-- mismatch" };
        println!("{n:>4}  {:>24}  {:>24}  {rhs:>24}{mark}", direct[n], via_egf[n]);
    }
}
