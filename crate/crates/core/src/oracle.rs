//! Exhaustive enumeration used as ground truth for the closed forms.
//!
//! Permutations are enumerated in lexicographic order on `0..m`; the first
//! `r` points are the distinguished ones. Enumeration sizes grow factorially,
//! so every entry point refuses inputs above a fixed cap instead of running
//! for hours.

use std::collections::BTreeMap;

use rayon::prelude::*;
use thiserror::Error;

use crate::arith::BigInt;

/// Largest `n + r` accepted for unsigned permutation enumeration.
pub const UNSIGNED_CAP: usize = 10;
/// Largest `n` accepted for signed permutation enumeration.
pub const SIGNED_CAP: usize = 8;
/// Largest set size accepted for ordered partition enumeration.
pub const PARTITION_CAP: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("enumeration of {size} points exceeds the cap of {cap} ({what})")]
    CapExceeded { what: &'static str, size: usize, cap: usize },
    #[error("distinguished elements are not supported for signed enumeration")]
    SignedWithDistinguished,
    #[error("expected a {expected} enumeration config")]
    WrongMode { expected: &'static str },
    #[error("mapping is not a bijection on 1..={0}")]
    NotBijection(usize),
}

/// `n` free points, `r` distinguished points, signed or not.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    n: usize,
    r: usize,
    signed: bool,
}

impl OracleConfig {
    pub fn unsigned(n: usize, r: usize) -> Result<Self, OracleError> {
        if n + r > UNSIGNED_CAP {
            return Err(OracleError::CapExceeded {
                what: "unsigned permutations",
                size: n + r,
                cap: UNSIGNED_CAP,
            });
        }
        Ok(OracleConfig { n, r, signed: false })
    }

    pub fn signed(n: usize) -> Result<Self, OracleError> {
        if n > SIGNED_CAP {
            return Err(OracleError::CapExceeded {
                what: "signed permutations",
                size: n,
                cap: SIGNED_CAP,
            });
        }
        Ok(OracleConfig { n, r: 0, signed: true })
    }

    /// General constructor; signed configurations must have `r = 0`.
    pub fn new(n: usize, r: usize, signed: bool) -> Result<Self, OracleError> {
        match (signed, r) {
            (false, _) => Self::unsigned(n, r),
            (true, 0) => Self::signed(n),
            (true, _) => Err(OracleError::SignedWithDistinguished),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn is_signed(&self) -> bool {
        self.signed
    }

    pub fn points(&self) -> usize {
        self.n + self.r
    }
}

/// Advances `perm` to its lexicographic successor; false once it is the last.
pub fn next_permutation(perm: &mut [usize]) -> bool {
    let Some(i) = perm.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = perm.iter().rposition(|&x| x > perm[i]).expect("a larger suffix element exists");
    perm.swap(i, j);
    perm[i + 1..].reverse();
    true
}

/// True when `perm` (on `0..m`) has no fixed point and its first `r` points lie
/// in pairwise distinct cycles.
pub fn is_r_derangement(perm: &[usize], r: usize) -> bool {
    if perm.iter().enumerate().any(|(i, &p)| i == p) {
        return false;
    }
    // walking the cycle of each distinguished point must not meet another one
    for start in 0..r {
        let mut x = perm[start];
        while x != start {
            if x < r {
                return false;
            }
            x = perm[x];
        }
    }
    true
}

fn count_block(m: usize, r: usize, first: usize) -> u64 {
    let mut perm: Vec<usize> = std::iter::once(first)
        .chain((0..m).filter(|&x| x != first))
        .collect();
    let mut count = 0;
    loop {
        if is_r_derangement(&perm, r) {
            count += 1;
        }
        if !next_permutation(&mut perm[1..]) {
            return count;
        }
    }
}

fn require_unsigned(cfg: &OracleConfig) -> Result<(), OracleError> {
    if cfg.signed {
        return Err(OracleError::WrongMode { expected: "unsigned" });
    }
    Ok(())
}

/// Counts fixed-point-free permutations of `n + r` points whose first `r`
/// points are in distinct cycles, by visiting all `(n + r)!` permutations.
pub fn count_r_derangements(cfg: &OracleConfig) -> Result<BigInt, OracleError> {
    require_unsigned(cfg)?;
    let m = cfg.points();
    let mut perm: Vec<usize> = (0..m).collect();
    let mut count: u64 = 0;
    loop {
        if is_r_derangement(&perm, cfg.r) {
            count += 1;
        }
        if !next_permutation(&mut perm) {
            return Ok(BigInt::from(count));
        }
    }
}

/// Same count as [`count_r_derangements`], split by the image of the first
/// point and summed across threads.
pub fn count_r_derangements_parallel(cfg: &OracleConfig) -> Result<BigInt, OracleError> {
    require_unsigned(cfg)?;
    let m = cfg.points();
    if m == 0 {
        return count_r_derangements(cfg);
    }
    let total: u64 = (0..m).into_par_iter().map(|first| count_block(m, cfg.r, first)).sum();
    Ok(BigInt::from(total))
}

/// Counts pairs `(pi, s)` of a permutation and a sign vector such that no
/// point is mapped to itself with a positive sign.
pub fn count_signed_derangements(cfg: &OracleConfig) -> Result<BigInt, OracleError> {
    if !cfg.signed {
        return Err(OracleError::WrongMode { expected: "signed" });
    }
    let m = cfg.points();
    let mut perm: Vec<usize> = (0..m).collect();
    let mut count: u64 = 0;
    loop {
        let fixed: u32 = perm
            .iter()
            .enumerate()
            .filter(|(i, p)| i == *p)
            .fold(0, |acc, (i, _)| acc | (1 << i));
        // bit i of `negative` set means s_i = -1
        for negative in 0u32..(1 << m) {
            if fixed & !negative == 0 {
                count += 1;
            }
        }
        if !next_permutation(&mut perm) {
            return Ok(BigInt::from(count));
        }
    }
}

/// Histogram of cycle types (sorted cycle lengths, longest first) over all
/// permutations of `m` points.
pub fn cycle_type_histogram(m: usize) -> Result<BTreeMap<Vec<usize>, u64>, OracleError> {
    if m > UNSIGNED_CAP {
        return Err(OracleError::CapExceeded { what: "unsigned permutations", size: m, cap: UNSIGNED_CAP });
    }
    let mut perm: Vec<usize> = (0..m).collect();
    let mut histogram = BTreeMap::new();
    loop {
        let one_based: Vec<usize> = perm.iter().map(|p| p + 1).collect();
        let mut lengths: Vec<usize> = cycle_decomposition(&one_based)?
            .iter()
            .map(Vec::len)
            .collect();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        *histogram.entry(lengths).or_insert(0) += 1;
        if !next_permutation(&mut perm) {
            return Ok(histogram);
        }
    }
}

/// Enumerates partitions of `{1..=n1}` into `n2` nonempty blocks, each block
/// carrying a linear order.
///
/// Elements are inserted in increasing order; each one either opens a new
/// block or goes into any slot of an existing block, so every structure is
/// produced exactly once. Blocks are listed by their smallest element.
pub fn ordered_partitions(n1: usize, n2: usize) -> Result<Vec<Vec<Vec<usize>>>, OracleError> {
    let mut out = Vec::new();
    visit_ordered_partitions(n1, n2, &mut |blocks| out.push(blocks.to_vec()))?;
    Ok(out)
}

/// Number of structures produced by [`ordered_partitions`], without
/// collecting them.
pub fn count_ordered_partitions(n1: usize, n2: usize) -> Result<BigInt, OracleError> {
    let mut count: u64 = 0;
    visit_ordered_partitions(n1, n2, &mut |_| count += 1)?;
    Ok(BigInt::from(count))
}

fn visit_ordered_partitions(
    n1: usize,
    n2: usize,
    visit: &mut dyn FnMut(&[Vec<usize>]),
) -> Result<(), OracleError> {
    if n1 > PARTITION_CAP {
        return Err(OracleError::CapExceeded {
            what: "ordered set partitions",
            size: n1,
            cap: PARTITION_CAP,
        });
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    insert_next(1, n1, n2, &mut blocks, visit);
    Ok(())
}

fn insert_next(
    next: usize,
    n1: usize,
    n2: usize,
    blocks: &mut Vec<Vec<usize>>,
    visit: &mut dyn FnMut(&[Vec<usize>]),
) {
    let remaining = n1 + 1 - next;
    if blocks.len() > n2 || blocks.len() + remaining < n2 {
        return;
    }
    if next > n1 {
        visit(blocks);
        return;
    }
    blocks.push(vec![next]);
    insert_next(next + 1, n1, n2, blocks, visit);
    blocks.pop();
    for b in 0..blocks.len() {
        for slot in 0..=blocks[b].len() {
            blocks[b].insert(slot, next);
            insert_next(next + 1, n1, n2, blocks, visit);
            blocks[b].remove(slot);
        }
    }
}

/// Cycles of a bijection on `{1..=m}` given as `perm[i-1] = image of i`.
///
/// Each cycle starts at its smallest element and cycles are ordered by that
/// element; fixed points are 1-cycles.
pub fn cycle_decomposition(perm: &[usize]) -> Result<Vec<Vec<usize>>, OracleError> {
    let m = perm.len();
    let mut hit = vec![false; m];
    for &p in perm {
        if p == 0 || p > m || std::mem::replace(&mut hit[p - 1], true) {
            return Err(OracleError::NotBijection(m));
        }
    }
    let mut seen = vec![false; m];
    let mut cycles = Vec::new();
    for start in 1..=m {
        if seen[start - 1] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x - 1] {
            seen[x - 1] = true;
            cycle.push(x);
            x = perm[x - 1];
        }
        cycles.push(cycle);
    }
    Ok(cycles)
}

/// Inverse of [`cycle_decomposition`]: the mapping on `{1..=m}` whose cycles
/// are `cycles`. Points not mentioned are fixed.
pub fn compose_cycles(m: usize, cycles: &[Vec<usize>]) -> Vec<usize> {
    let mut perm: Vec<usize> = (1..=m).collect();
    for cycle in cycles {
        for (i, &x) in cycle.iter().enumerate() {
            perm[x - 1] = cycle[(i + 1) % cycle.len()];
        }
    }
    perm
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn worked_example() -> Vec<usize> {
        compose_cycles(9, &[vec![1, 8, 4], vec![2, 9, 3, 7], vec![6, 5]])
    }

    #[test]
    fn next_permutation_visits_all_in_order() {
        let mut p = vec![0, 1, 2];
        let mut seen = vec![p.clone()];
        while next_permutation(&mut p) {
            seen.push(p.clone());
        }
        assert_eq!(
            seen,
            vec![
                vec![0, 1, 2],
                vec![0, 2, 1],
                vec![1, 0, 2],
                vec![1, 2, 0],
                vec![2, 0, 1],
                vec![2, 1, 0]
            ]
        );
        assert!(!next_permutation(&mut []));
    }

    #[test]
    fn worked_example_predicates() {
        let perm: Vec<usize> = worked_example().iter().map(|p| p - 1).collect();
        assert!(is_r_derangement(&perm, 2));
        assert!(!is_r_derangement(&perm, 3));
        assert!(is_r_derangement(&perm, 0));
    }

    #[test]
    fn r_derangement_counts() {
        let count = |n, r| count_r_derangements(&OracleConfig::unsigned(n, r).unwrap()).unwrap();
        assert_eq!(count(2, 0), BigInt::from(1));
        assert_eq!(count(4, 0), BigInt::from(9));
        assert_eq!(count(4, 2), BigInt::from(84));
        assert_eq!(count(0, 0), BigInt::from(1));
        assert_eq!(count(1, 2), BigInt::from(0));
    }

    #[test]
    fn parallel_matches_sequential() {
        for (n, r) in [(0, 0), (1, 0), (3, 1), (4, 2), (5, 2), (3, 3)] {
            let cfg = OracleConfig::unsigned(n, r).unwrap();
            assert_eq!(
                count_r_derangements(&cfg).unwrap(),
                count_r_derangements_parallel(&cfg).unwrap()
            );
        }
    }

    #[test]
    fn signed_counts() {
        let count = |n| count_signed_derangements(&OracleConfig::signed(n).unwrap()).unwrap();
        assert_eq!(count(0), BigInt::from(1));
        assert_eq!(count(1), BigInt::from(1));
        assert_eq!(count(2), BigInt::from(5));
        assert_eq!(count(3), BigInt::from(29));
    }

    #[test]
    fn caps_and_modes_are_enforced() {
        assert!(matches!(
            OracleConfig::unsigned(8, 3),
            Err(OracleError::CapExceeded { size: 11, cap: 10, .. })
        ));
        assert!(OracleConfig::unsigned(6, 4).is_ok());
        assert!(matches!(OracleConfig::signed(9), Err(OracleError::CapExceeded { .. })));
        assert_eq!(OracleConfig::new(3, 1, true), Err(OracleError::SignedWithDistinguished));
        let signed = OracleConfig::new(3, 0, true).unwrap();
        assert!(count_r_derangements(&signed).is_err());
        assert!(count_signed_derangements(&OracleConfig::unsigned(3, 0).unwrap()).is_err());
        assert!(count_ordered_partitions(9, 2).is_err());
    }

    #[test]
    fn ordered_partitions_of_three_into_two() {
        let all = ordered_partitions(3, 2).unwrap();
        let expected = vec![
            vec![vec![1, 3], vec![2]],
            vec![vec![3, 1], vec![2]],
            vec![vec![1], vec![2, 3]],
            vec![vec![1], vec![3, 2]],
            vec![vec![2, 1], vec![3]],
            vec![vec![1, 2], vec![3]],
        ];
        let mut got = all.clone();
        got.sort();
        let mut want = expected;
        want.sort();
        assert_eq!(got, want);
        assert_eq!(count_ordered_partitions(3, 2).unwrap(), BigInt::from(6));
        assert_eq!(count_ordered_partitions(4, 1).unwrap(), BigInt::from(24));
        for n in 0..=6 {
            assert_eq!(count_ordered_partitions(n, n).unwrap(), BigInt::from(1));
        }
        assert_eq!(count_ordered_partitions(3, 4).unwrap(), BigInt::from(0));
        assert_eq!(count_ordered_partitions(3, 0).unwrap(), BigInt::from(0));
    }

    #[test]
    fn cycle_decomposition_examples() {
        assert_eq!(cycle_decomposition(&[1, 2, 3]).unwrap(), vec![vec![1], vec![2], vec![3]]);
        assert_eq!(
            cycle_decomposition(&worked_example()).unwrap(),
            vec![vec![1, 8, 4], vec![2, 9, 3, 7], vec![5, 6]]
        );
        assert_eq!(cycle_decomposition(&[2, 3, 4, 1]).unwrap(), vec![vec![1, 2, 3, 4]]);
        assert_eq!(cycle_decomposition(&[1, 1, 3]), Err(OracleError::NotBijection(3)));
        assert_eq!(cycle_decomposition(&[0, 1]), Err(OracleError::NotBijection(2)));
        assert_eq!(cycle_decomposition(&[4, 1, 2]), Err(OracleError::NotBijection(3)));
    }

    #[test]
    fn cycle_type_histogram_is_complete() {
        for m in 0..=7 {
            let hist = cycle_type_histogram(m).unwrap();
            let total: u64 = hist.values().sum();
            assert_eq!(total, (1..=m as u64).product::<u64>());
            // class sizes m! / prod(k^a_k a_k!)
            for (lengths, count) in &hist {
                let mut mult = BTreeMap::<usize, u64>::new();
                for &l in lengths {
                    *mult.entry(l).or_insert(0) += 1;
                }
                let denom: u64 = mult
                    .iter()
                    .map(|(&k, &a)| (k as u64).pow(a as u32) * (1..=a).product::<u64>())
                    .product();
                assert_eq!(*count, total / denom);
            }
        }
    }

    proptest! {
        #[test]
        fn decomposition_recomposes(perm in (0usize..=9).prop_flat_map(|m| Just((1..=m).collect::<Vec<_>>()).prop_shuffle())) {
            let cycles = cycle_decomposition(&perm).unwrap();
            let covered: usize = cycles.iter().map(Vec::len).sum();
            prop_assert_eq!(covered, perm.len());
            prop_assert_eq!(compose_cycles(perm.len(), &cycles), perm);
        }
    }
}
