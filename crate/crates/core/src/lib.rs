//! Exact computation of the derangement family of integer sequences and
//! machine checks of the identities that connect them.
//!
//! * [`arith`]: big integers, reduced rationals, memoized factorials and
//!   binomials.
//! * [`sequences`]: `D(n)`, `D_r(n)`, `D^B(n)`, Lah numbers and the `k = 0`
//!   B-type r-Stirling values.
//! * [`egf`]: truncated power series, Cauchy products and binomial
//!   convolution, with builders for the generating functions above.
//! * [`oracle`]: brute-force enumeration of permutations, signed
//!   permutations and ordered set partitions.
//! * [`identities`]: sweeps every identity over a grid and reports
//!   counterexamples.
//! * [`cli`]: the `seq`, `verify` and `egf` commands behind the
//!   `derangements` binary.
//!
//! ```
//! use derangements::sequences::r_derangement;
//! use derangements::arith::{binomial, factorial};
//!
//! // sum_k C(n,k) D_r(k) = n! C(n,r)
//! let (n, r) = (7, 3);
//! let lhs: derangements::BigInt = (0..=n).map(|k| binomial(n, k) * r_derangement(k, r)).sum();
//! assert_eq!(lhs, factorial(n) * binomial(n, r));
//! ```

pub mod arith;
pub mod cli;
pub mod egf;
pub mod identities;
pub mod oracle;
pub mod sequences;

pub use arith::{BigInt, ExactRational};
