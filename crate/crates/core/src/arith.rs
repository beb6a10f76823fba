//! Exact integer and rational arithmetic shared by every other module.
//!
//! Integers are [`num_bigint::BigInt`] and rationals are
//! [`num_rational::BigRational`], which is always kept in lowest terms with a
//! positive denominator. Factorials and binomial coefficients are memoized in
//! process-wide tables guarded by [`RwLock`]s, so concurrent sweeps can share
//! them.

use std::sync::{OnceLock, RwLock};

use num_traits::{One, Zero};

pub use num_bigint::BigInt;

/// Normalized fraction of two [`BigInt`]s.
pub type ExactRational = num_rational::BigRational;

/// Rows of Pascal's triangle are cached up to this `n`; larger arguments fall
/// back to the factorial quotient.
const PASCAL_ROWS: usize = 1024;

fn factorial_table() -> &'static RwLock<Vec<BigInt>> {
    static TABLE: OnceLock<RwLock<Vec<BigInt>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![BigInt::one()]))
}

fn pascal_table() -> &'static RwLock<Vec<Vec<BigInt>>> {
    static TABLE: OnceLock<RwLock<Vec<Vec<BigInt>>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![vec![BigInt::one()]]))
}

/// `n!`, exactly.
pub fn factorial(n: usize) -> BigInt {
    {
        let table = factorial_table().read().expect("factorial table poisoned");
        if let Some(v) = table.get(n) {
            return v.clone();
        }
    }
    let mut table = factorial_table().write().expect("factorial table poisoned");
    // Another writer may have extended the table in the meantime.
    while table.len() <= n {
        let next = table.len();
        let value = &table[next - 1] * BigInt::from(next);
        table.push(value);
    }
    table[n].clone()
}

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    if n > PASCAL_ROWS {
        return factorial(n) / (factorial(k) * factorial(n - k));
    }
    {
        let rows = pascal_table().read().expect("pascal table poisoned");
        if let Some(row) = rows.get(n) {
            return row[k].clone();
        }
    }
    let mut rows = pascal_table().write().expect("pascal table poisoned");
    while rows.len() <= n {
        let prev = rows.last().expect("row 0 always present");
        let mut row = Vec::with_capacity(prev.len() + 1);
        row.push(BigInt::one());
        for w in prev.windows(2) {
            row.push(&w[0] + &w[1]);
        }
        row.push(BigInt::one());
        rows.push(row);
    }
    rows[n][k].clone()
}

/// `C(n, k)` for a possibly negative lower index; zero when `k < 0`.
pub fn binomial_signed(n: usize, k: i64) -> BigInt {
    match usize::try_from(k) {
        Ok(k) => binomial(n, k),
        Err(_) => BigInt::zero(),
    }
}

/// The rising product `(r+1)(r+2)...(r+q) = (r+q)!/r!`; one when `q = 0`.
pub fn rising_factorial(r: usize, q: usize) -> BigInt {
    (r + 1..=r + q).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `n!/(n-j)!`, the falling product of `j` factors starting at `n`.
pub fn falling_factorial(n: usize, j: usize) -> BigInt {
    if j > n {
        return BigInt::zero();
    }
    (n - j + 1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Builds the reduced fraction `p/q`.
///
/// # Panics
///
/// Panics if `q` is zero.
pub fn ratio(p: impl Into<BigInt>, q: impl Into<BigInt>) -> ExactRational {
    ExactRational::new(p.into(), q.into())
}

/// Returns the integer value of `x` if its denominator is one.
pub fn as_integer(x: &ExactRational) -> Option<BigInt> {
    x.is_integer().then(|| x.numer().clone())
}

/// Renders a rational as `numerator/denominator`, always with both parts.
pub fn fraction_string(x: &ExactRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Renders a rational as a plain integer when it is one, else as `p/q`.
pub fn exact_string(x: &ExactRational) -> String {
    match as_integer(x) {
        Some(v) => v.to_string(),
        None => fraction_string(x),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;
    use proptest::prelude::*;

    fn pascal_oracle(n: usize) -> Vec<Vec<u128>> {
        let mut rows = vec![vec![1u128]];
        for i in 1..=n {
            let mut row = vec![1u128; i + 1];
            for k in 1..i {
                row[k] = rows[i - 1][k - 1] + rows[i - 1][k];
            }
            rows.push(row);
        }
        rows
    }

    #[test]
    fn factorial_small_values() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        let by_hand: u64 = (1..=20u64).product();
        assert_eq!(by_hand, 2432902008176640000);
        assert_eq!(factorial(20), BigInt::from(by_hand));
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(4, 5), BigInt::zero());
        assert_eq!(binomial_signed(4, -1), BigInt::zero());
        assert_eq!(binomial_signed(0, 0), BigInt::one());
        assert_eq!(pascal_oracle(10)[10][3], 120);
        assert_eq!(binomial(10, 3), BigInt::from(120));
    }

    #[test]
    fn binomial_matches_pascal_oracle() {
        let oracle = pascal_oracle(100);
        for (n, row) in oracle.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                assert_eq!(binomial(n, k), BigInt::from(*v), "C({n},{k})");
            }
        }
    }

    #[test]
    fn binomial_beyond_cached_rows() {
        let n = PASCAL_ROWS + 7;
        assert_eq!(binomial(n, 2), BigInt::from(n * (n - 1) / 2));
        assert_eq!(binomial(n, n), BigInt::one());
    }

    #[test]
    fn rising_factorial_examples() {
        assert_eq!(rising_factorial(3, 0), BigInt::one());
        assert_eq!(rising_factorial(2, 3), BigInt::from(3 * 4 * 5));
        assert_eq!(rising_factorial(0, 4), BigInt::from(24));
    }

    #[test]
    fn falling_factorial_examples() {
        assert_eq!(falling_factorial(5, 0), BigInt::one());
        assert_eq!(falling_factorial(5, 2), BigInt::from(20));
        assert_eq!(falling_factorial(5, 5), BigInt::from(120));
        assert_eq!(falling_factorial(2, 3), BigInt::zero());
    }

    #[test]
    fn binomial_symmetry_and_pascal_rule() {
        for n in 0..=64 {
            for k in 0..=n {
                assert_eq!(binomial(n, k), binomial(n, n - k));
                if k >= 1 {
                    assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
                }
            }
        }
    }

    #[test]
    fn rising_factorial_times_factorial() {
        for r in 0..=32 {
            for q in 0..=32 {
                assert_eq!(rising_factorial(r, q) * factorial(r), factorial(r + q));
            }
        }
    }

    #[test]
    fn concurrent_factorials_agree() {
        let values: Vec<BigInt> = std::thread::scope(|s| {
            let handles: Vec<_> = (0..8)
                .map(|t| s.spawn(move || factorial(300 + t * 13)))
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        for (t, v) in values.iter().enumerate() {
            let n = 300 + t * 13;
            let direct = (1..=n).fold(BigInt::one(), |a, i| a * BigInt::from(i));
            assert_eq!(*v, direct);
        }
    }

    #[test]
    fn string_forms() {
        assert_eq!(fraction_string(&ratio(2, 4)), "1/2");
        assert_eq!(fraction_string(&ratio(3, 1)), "3/1");
        assert_eq!(exact_string(&ratio(-6, 3)), "-2");
        assert_eq!(exact_string(&ratio(1, -2)), "-1/2");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn rational_is_normalized(p in any::<i64>(), q in any::<i64>().prop_filter("nonzero", |q| *q != 0)) {
            let x = ratio(p, q);
            prop_assert!(x.denom() > &BigInt::zero());
            prop_assert!(x.numer().gcd(x.denom()).is_one());
            // cross-multiplication preserves the value
            prop_assert_eq!(x.numer() * BigInt::from(q), BigInt::from(p) * x.denom());
        }
    }
}
