//! Closed forms and recurrences for the derangement family.
//!
//! Conventions used throughout:
//!
//! * `r_derangement(n, r)` counts fixed-point-free permutations of `n + r`
//!   elements whose first `r` elements lie in pairwise distinct cycles. It is
//!   zero for `n < r` (the alternating sum is empty).
//! * `lah(0, 0) = 1`, `lah(n, 0) = 0` for `n >= 1`, `lah(n, k) = 0` for `k > n`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{binomial, factorial, falling_factorial, ratio, BigInt, ExactRational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("the nearest-integer form is only defined for n >= 1")]
    NearestIntegerAtZero,
    #[error("unknown sequence family `{0}`")]
    UnknownFamily(String),
    #[error("family `{family}` takes {expected} parameter(s), got {got}")]
    Arity {
        family: Family,
        expected: usize,
        got: usize,
    },
}

/// `D(n)`: number of fixed-point-free permutations of `n` elements.
pub fn derangement(n: usize) -> BigInt {
    // sum_{i=0}^{n} (-1)^i n!/i!, accumulating n!/i! from i = n downwards
    let mut sum = BigInt::zero();
    let mut quotient = BigInt::one();
    for i in (0..=n).rev() {
        if i % 2 == 0 {
            sum += &quotient;
        } else {
            sum -= &quotient;
        }
        quotient *= BigInt::from(i.max(1));
    }
    sum
}

/// `D(n)` as the integer nearest to `n!/e`.
///
/// `e` is bracketed by `S_m = sum_{k<=m} 1/k!` and `S_m + 2/(m+1)!`; `m` grows
/// until every point of the induced bracket of `n!/e` rounds to one integer.
pub fn derangement_nearest_int(n: usize) -> Result<BigInt, SequenceError> {
    if n == 0 {
        return Err(SequenceError::NearestIntegerAtZero);
    }
    let n_fact = ExactRational::from_integer(factorial(n));
    let half = ratio(1, 2);

    let mut partial = ExactRational::zero();
    let mut inv_fact = ExactRational::one();
    for k in 0..=n {
        partial += &inv_fact;
        inv_fact /= BigInt::from(k + 1);
    }
    // here inv_fact = 1/(m+1)! with m = n
    let mut m = n;
    loop {
        let upper_e = &partial + &inv_fact * BigInt::from(2);
        let lo = &n_fact / upper_e;
        let hi = &n_fact / &partial;
        let candidate = (&lo + &half).floor();
        if hi <= &candidate + &half {
            return Ok(candidate.to_integer());
        }
        m += 1;
        partial += &inv_fact;
        inv_fact /= BigInt::from(m + 1);
    }
}

/// `D_r(n) = sum_{j=r}^{n} (-1)^{n-j} C(j, r) n!/(n-j)!`; zero when `n < r`.
pub fn r_derangement(n: usize, r: usize) -> BigInt {
    let mut sum = BigInt::zero();
    for j in r..=n {
        let term = binomial(j, r) * falling_factorial(n, j);
        if (n - j).is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum
}

/// `D_r(0..len)` from the closed form.
pub fn r_derangement_terms(r: usize, len: usize) -> Vec<BigInt> {
    (0..len).map(|n| r_derangement(n, r)).collect()
}

/// `D_r(n)` through the three-term recurrence
/// `D_r(n) = r D_{r-1}(n-1) + (n-1) D_r(n-2) + (n+r-1) D_r(n-1)` for
/// `n > 2, r > 0`.
///
/// Entries with `n <= 2` come from the closed form and `r = 0` from
/// [`derangement`]. The table is filled bottom-up, one row per `r`.
pub fn r_derangement_recurrence(n: usize, r: usize) -> BigInt {
    let mut prev_row: Vec<BigInt> = (0..=n).map(derangement).collect();
    if r == 0 {
        return prev_row.swap_remove(n);
    }
    for rr in 1..=r {
        let mut row: Vec<BigInt> = Vec::with_capacity(n + 1);
        for nn in 0..=n {
            let value = if nn <= 2 {
                r_derangement(nn, rr)
            } else {
                BigInt::from(rr) * &prev_row[nn - 1]
                    + BigInt::from(nn - 1) * &row[nn - 2]
                    + BigInt::from(nn + rr - 1) * &row[nn - 1]
            };
            row.push(value);
        }
        prev_row = row;
    }
    prev_row.swap_remove(n)
}

/// `D^B(n) = n! sum_{k=0}^{n} (-1)^k 2^{n-k} / k!`: signed permutations of
/// `n` elements with no `sigma(i) = i`.
pub fn b_derangement(n: usize) -> BigInt {
    let mut sum = BigInt::zero();
    for k in 0..=n {
        let term = falling_factorial(n, n - k) * (BigInt::one() << (n - k));
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum
}

/// Lah number `L(n1, n2)`: partitions of an `n1`-set into `n2` nonempty
/// linearly ordered blocks, via `C(n1-1, n2-1) n1!/n2!`.
pub fn lah(n1: usize, n2: usize) -> BigInt {
    match (n1, n2) {
        (0, 0) => BigInt::one(),
        (_, 0) => BigInt::zero(),
        _ if n2 > n1 => BigInt::zero(),
        _ => binomial(n1 - 1, n2 - 1) * factorial(n1) / factorial(n2),
    }
}

/// The `k = 0` B-type r-Stirling value
/// `sum_{j=0}^{r} C(r, j) 2^{n+r-j} (r-j)! L(n, r-j)`.
pub fn b_stirling_k0(n: usize, r: usize) -> BigInt {
    (0..=r)
        .map(|j| {
            binomial(r, j) * (BigInt::one() << (n + r - j)) * factorial(r - j) * lah(n, r - j)
        })
        .sum()
}

/// A sequence family, named as on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Derangement,
    RDerangement,
    BDerangement,
    Lah,
    BStirlingK0,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Derangement,
        Family::RDerangement,
        Family::BDerangement,
        Family::Lah,
        Family::BStirlingK0,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Derangement => "derangement",
            Family::RDerangement => "r-derangement",
            Family::BDerangement => "b-derangement",
            Family::Lah => "lah",
            Family::BStirlingK0 => "b-stirling-k0",
        }
    }

    /// Number of integer parameters besides `n`.
    pub fn arity(self) -> usize {
        match self {
            Family::Derangement | Family::BDerangement => 0,
            Family::RDerangement | Family::Lah | Family::BStirlingK0 => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = SequenceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| SequenceError::UnknownFamily(s.to_string()))
    }
}

/// A family together with its fixed parameters; the running index `n` is
/// supplied at evaluation time.
///
/// For [`Family::Lah`] the parameter is the block count `n2`, so `value(n)`
/// is `L(n, n2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SequenceId {
    family: Family,
    params: Vec<usize>,
}

impl SequenceId {
    pub fn new(family: Family, params: Vec<usize>) -> Result<Self, SequenceError> {
        if params.len() != family.arity() {
            return Err(SequenceError::Arity {
                family,
                expected: family.arity(),
                got: params.len(),
            });
        }
        Ok(SequenceId { family, params })
    }

    pub fn derangement() -> Self {
        SequenceId { family: Family::Derangement, params: vec![] }
    }

    pub fn r_derangement(r: usize) -> Self {
        SequenceId { family: Family::RDerangement, params: vec![r] }
    }

    pub fn b_derangement() -> Self {
        SequenceId { family: Family::BDerangement, params: vec![] }
    }

    pub fn lah(n2: usize) -> Self {
        SequenceId { family: Family::Lah, params: vec![n2] }
    }

    pub fn b_stirling_k0(r: usize) -> Self {
        SequenceId { family: Family::BStirlingK0, params: vec![r] }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn params(&self) -> &[usize] {
        &self.params
    }

    /// Parameters joined by commas; empty for parameterless families.
    pub fn params_string(&self) -> String {
        self.params
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn value(&self, n: usize) -> BigInt {
        match self.family {
            Family::Derangement => derangement(n),
            Family::RDerangement => r_derangement(n, self.params[0]),
            Family::BDerangement => b_derangement(n),
            Family::Lah => lah(n, self.params[0]),
            Family::BStirlingK0 => b_stirling_k0(n, self.params[0]),
        }
    }
}
