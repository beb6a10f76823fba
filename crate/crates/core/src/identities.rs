//! Executable identities for the derangement family, swept over parameter
//! grids.
//!
//! Every checker returns an [`IdentityReport`]. A failed identity is data, not
//! an error: the report carries each counterexample with both sides written
//! out exactly. Some reports also carry `samples`, evaluations that are
//! recorded whatever the verdict.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{binomial, exact_string, factorial, BigInt, ExactRational};
use crate::egf::{
    binomial_convolution, cauchy_product, egf_b_derangement, egf_r_derangement, from_terms,
    series_exp, to_terms, Sign, TermSequence,
};
use crate::oracle::{
    count_ordered_partitions, count_r_derangements_parallel, count_signed_derangements,
    OracleConfig,
};
use crate::sequences::{
    b_derangement, derangement, derangement_nearest_int, lah, r_derangement,
    r_derangement_recurrence, r_derangement_terms,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdentityId {
    MainSumRule,
    ClassicalSumRule,
    RecurrenceConsistency,
    ShiftD1,
    BaseCases,
    EgfRDerangement,
    EgfBDerangement,
    NearestInteger,
    LahSumRulePrinted,
    LahSumRuleShifted,
    LahSumRuleSecondForm,
    ConvolutionEquivalence,
    OracleRDerangement,
    OracleBDerangement,
    OracleLah,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown identity `{0}`")]
pub struct UnknownIdentity(pub String);

impl IdentityId {
    pub const ALL: [IdentityId; 15] = [
        IdentityId::MainSumRule,
        IdentityId::ClassicalSumRule,
        IdentityId::RecurrenceConsistency,
        IdentityId::ShiftD1,
        IdentityId::BaseCases,
        IdentityId::EgfRDerangement,
        IdentityId::EgfBDerangement,
        IdentityId::NearestInteger,
        IdentityId::LahSumRulePrinted,
        IdentityId::LahSumRuleShifted,
        IdentityId::LahSumRuleSecondForm,
        IdentityId::ConvolutionEquivalence,
        IdentityId::OracleRDerangement,
        IdentityId::OracleBDerangement,
        IdentityId::OracleLah,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::MainSumRule => "main-sum-rule",
            IdentityId::ClassicalSumRule => "classical-sum-rule",
            IdentityId::RecurrenceConsistency => "recurrence-consistency",
            IdentityId::ShiftD1 => "shift-d1",
            IdentityId::BaseCases => "base-cases",
            IdentityId::EgfRDerangement => "egf-r-derangement",
            IdentityId::EgfBDerangement => "egf-b-derangement",
            IdentityId::NearestInteger => "nearest-integer",
            IdentityId::LahSumRulePrinted => "lah-sum-rule-printed",
            IdentityId::LahSumRuleShifted => "lah-sum-rule-shifted",
            IdentityId::LahSumRuleSecondForm => "lah-sum-rule-second-form",
            IdentityId::ConvolutionEquivalence => "convolution-equivalence",
            IdentityId::OracleRDerangement => "oracle-r-derangement",
            IdentityId::OracleBDerangement => "oracle-b-derangement",
            IdentityId::OracleLah => "oracle-lah",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = UnknownIdentity;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| UnknownIdentity(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        }
    }
}

/// Both sides of an identity at one parameter point, as exact strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evaluation {
    pub params: String,
    pub lhs: String,
    pub rhs: String,
}

impl Evaluation {
    fn new(params: String, lhs: impl ToString, rhs: impl ToString) -> Self {
        Evaluation { params, lhs: lhs.to_string(), rhs: rhs.to_string() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub grid: String,
    pub verdict: Verdict,
    pub counterexamples: Vec<Evaluation>,
    pub samples: Vec<Evaluation>,
    pub elapsed: Duration,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Looks up an evaluation at `params` among samples and counterexamples.
    pub fn evaluation(&self, params: &str) -> Option<&Evaluation> {
        self.samples
            .iter()
            .chain(&self.counterexamples)
            .find(|e| e.params == params)
    }
}

/// Accumulates evaluations while a checker runs.
struct ReportBuilder {
    id: IdentityId,
    grid: String,
    counterexamples: Vec<Evaluation>,
    samples: Vec<Evaluation>,
    started: Instant,
}

impl ReportBuilder {
    fn new(id: IdentityId, grid: String) -> Self {
        ReportBuilder {
            id,
            grid,
            counterexamples: Vec::new(),
            samples: Vec::new(),
            started: Instant::now(),
        }
    }

    fn compare<T: PartialEq + fmt::Display>(&mut self, params: impl FnOnce() -> String, lhs: &T, rhs: &T) {
        if lhs != rhs {
            self.counterexamples.push(Evaluation::new(params(), lhs, rhs));
        }
    }

    fn sample(&mut self, eval: Evaluation) {
        self.samples.push(eval);
    }

    fn finish(self) -> IdentityReport {
        let verdict = if self.counterexamples.is_empty() { Verdict::Pass } else { Verdict::Fail };
        IdentityReport {
            id: self.id,
            grid: self.grid,
            verdict,
            counterexamples: self.counterexamples,
            samples: self.samples,
            elapsed: self.started.elapsed(),
        }
    }
}

/// Sweep ranges for every identity. [`Grids::default`] holds the acceptance
/// grids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grids {
    pub main_r_max: usize,
    pub main_n_max: usize,
    pub classical_n_max: usize,
    pub recurrence_r_max: usize,
    pub recurrence_n_max: usize,
    pub shift_n_max: usize,
    pub base_r_max: usize,
    pub egf_r_max: usize,
    pub egf_order: usize,
    pub egf_product_order: usize,
    pub egf_b_order: usize,
    pub nearest_n_max: usize,
    pub lah_n_max: usize,
    pub lah_r_max: usize,
    pub convolution_pairs: usize,
    pub convolution_len: usize,
    pub convolution_seed: u64,
    pub oracle_r_max: usize,
    pub oracle_points_max: usize,
    pub oracle_signed_n_max: usize,
    pub oracle_lah_n_max: usize,
}

impl Default for Grids {
    fn default() -> Self {
        Grids {
            main_r_max: 10,
            main_n_max: 300,
            classical_n_max: 300,
            recurrence_r_max: 10,
            recurrence_n_max: 120,
            shift_n_max: 200,
            base_r_max: 30,
            egf_r_max: 8,
            egf_order: 64,
            egf_product_order: 40,
            egf_b_order: 64,
            nearest_n_max: 500,
            lah_n_max: 30,
            lah_r_max: 6,
            convolution_pairs: 20,
            convolution_len: 33,
            convolution_seed: 0x5eed_d3a7,
            oracle_r_max: 4,
            oracle_points_max: 9,
            oracle_signed_n_max: 7,
            oracle_lah_n_max: 8,
        }
    }
}

/// Optional overrides of the two or three ranges each identity sweeps.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GridOverrides {
    pub r_max: Option<usize>,
    pub n_max: Option<usize>,
    pub order: Option<usize>,
}

impl Grids {
    /// Applies `o` to the fields `id` reads. `order` feeds the series order
    /// of the EGF checks; for the r-derangement EGF it sets both the term
    /// order and the product order.
    pub fn with_overrides(mut self, id: IdentityId, o: GridOverrides) -> Self {
        fn set(field: &mut usize, v: Option<usize>) {
            if let Some(v) = v {
                *field = v;
            }
        }
        match id {
            IdentityId::MainSumRule => {
                set(&mut self.main_r_max, o.r_max);
                set(&mut self.main_n_max, o.n_max);
            }
            IdentityId::ClassicalSumRule => set(&mut self.classical_n_max, o.n_max),
            IdentityId::RecurrenceConsistency => {
                set(&mut self.recurrence_r_max, o.r_max);
                set(&mut self.recurrence_n_max, o.n_max);
            }
            IdentityId::ShiftD1 => set(&mut self.shift_n_max, o.n_max),
            IdentityId::BaseCases => set(&mut self.base_r_max, o.r_max),
            IdentityId::EgfRDerangement => {
                set(&mut self.egf_r_max, o.r_max);
                set(&mut self.egf_order, o.order.or(o.n_max));
                set(&mut self.egf_product_order, o.order.or(o.n_max));
            }
            IdentityId::EgfBDerangement => set(&mut self.egf_b_order, o.order.or(o.n_max)),
            IdentityId::NearestInteger => set(&mut self.nearest_n_max, o.n_max),
            IdentityId::LahSumRulePrinted
            | IdentityId::LahSumRuleShifted
            | IdentityId::LahSumRuleSecondForm => {
                set(&mut self.lah_r_max, o.r_max);
                set(&mut self.lah_n_max, o.n_max);
            }
            IdentityId::ConvolutionEquivalence => {
                set(&mut self.convolution_len, o.order.map(|n| n + 1).or(o.n_max.map(|n| n + 1)));
            }
            IdentityId::OracleRDerangement => {
                set(&mut self.oracle_r_max, o.r_max);
                set(&mut self.oracle_points_max, o.n_max);
            }
            IdentityId::OracleBDerangement => set(&mut self.oracle_signed_n_max, o.n_max),
            IdentityId::OracleLah => set(&mut self.oracle_lah_n_max, o.n_max),
        }
        self
    }
}

fn nr(n: usize, r: usize) -> String {
    format!("n={n},r={r}")
}

/// `sum_{k=0}^{n} C(n,k) D_r(k)` for `n = 0..=n_max`, by direct summation over
/// closed-form values.
pub fn sum_rule_lhs_direct(r: usize, n_max: usize) -> Vec<BigInt> {
    let d = r_derangement_terms(r, n_max + 1);
    (0..=n_max)
        .map(|n| (0..=n).map(|k| binomial(n, k) * &d[k]).sum())
        .collect()
}

/// The same left side through the EGF route: `D_r` terms read off
/// `x^r e^{-x}/(1-x)^{r+1}`, then binomially convolved with the constant
/// sequence 1.
pub fn sum_rule_lhs_egf(r: usize, n_max: usize) -> Vec<BigInt> {
    let terms = to_terms(&egf_r_derangement(r, n_max)).expect("EGF of an integer sequence");
    binomial_convolution(&terms, &TermSequence::ones(n_max + 1))
        .expect("equal lengths")
        .0
}

pub fn check_main_sum_rule(r_max: usize, n_max: usize) -> IdentityReport {
    let mut b = ReportBuilder::new(IdentityId::MainSumRule, format!("r=0..{r_max},n=r..{n_max}"));
    let per_r: Vec<(Vec<BigInt>, Vec<BigInt>)> = (0..=r_max)
        .into_par_iter()
        .map(|r| (sum_rule_lhs_direct(r, n_max), sum_rule_lhs_egf(r, n_max)))
        .collect();
    for (r, (direct, via_egf)) in per_r.iter().enumerate() {
        for n in r..=n_max {
            let rhs = factorial(n) * binomial(n, r);
            b.compare(|| format!("{},route=direct", nr(n, r)), &direct[n], &rhs);
            b.compare(|| format!("{},route=egf", nr(n, r)), &via_egf[n], &rhs);
        }
    }
    b.finish()
}

/// `sum_k C(n,k) D(k) = n!`, using [`derangement`] directly.
pub fn classical_sum_rule_lhs(n_max: usize) -> Vec<BigInt> {
    let d: Vec<BigInt> = (0..=n_max).map(derangement).collect();
    (0..=n_max)
        .map(|n| (0..=n).map(|k| binomial(n, k) * &d[k]).sum())
        .collect()
}

pub fn check_classical_sum_rule(n_max: usize) -> IdentityReport {
    let mut b = ReportBuilder::new(IdentityId::ClassicalSumRule, format!("n=0..{n_max}"));
    for (n, lhs) in classical_sum_rule_lhs(n_max).iter().enumerate() {
        b.compare(|| format!("n={n}"), lhs, &factorial(n));
    }
    b.finish()
}

pub fn check_recurrence(r_max: usize, n_max: usize) -> IdentityReport {
    let mut b = ReportBuilder::new(
        IdentityId::RecurrenceConsistency,
        format!("r=0..{r_max},n=0..{n_max}"),
    );
    for r in 0..=r_max {
        for n in 0..=n_max {
            b.compare(|| nr(n, r), &r_derangement_recurrence(n, r), &r_derangement(n, r));
        }
    }
    b.finish()
}

pub fn check_shift_d1(n_max: usize) -> IdentityReport {
    let mut b = ReportBuilder::new(IdentityId::ShiftD1, format!("n=1..{n_max}"));
    for n in 1..=n_max {
        b.compare(|| format!("n={n}"), &r_derangement(n, 1), &derangement(n + 1));
    }
    b.finish()
}

pub fn check_base_cases(r_max: usize) -> IdentityReport {
    let mut b = ReportBuilder::new(
        IdentityId::BaseCases,
        format!("D_r(r):r=1..{r_max};D_r(r+1):r=2..{r_max}"),
    );
    for r in 1..=r_max {
        b.compare(|| format!("n={r},r={r}"), &r_derangement(r, r), &factorial(r));
    }
    for r in 2..=r_max {
        let rhs = BigInt::from(r) * factorial(r + 1);
        b.compare(|| nr(r + 1, r), &r_derangement(r + 1, r), &rhs);
    }
    b.finish()
}

/// Terms of `x^r e^{-x}/(1-x)^{r+1}` against the closed form up to `order`,
/// and the ordinary coefficients of its product with `e^x` against `C(n, r)`
/// up to `product_order`.
pub fn check_egf_r_derangement(r_max: usize, order: usize, product_order: usize) -> IdentityReport {
    let mut b = ReportBuilder::new(
        IdentityId::EgfRDerangement,
        format!("r=0..{r_max},terms:n=0..{order},product:n=0..{product_order}"),
    );
    let rows: Vec<_> = (0..=r_max)
        .into_par_iter()
        .map(|r| {
            let terms = to_terms(&egf_r_derangement(r, order));
            let product = cauchy_product(
                &egf_r_derangement(r, product_order),
                &series_exp(Sign::Plus, product_order),
            )
            .expect("equal orders");
            (terms, product)
        })
        .collect();
    for (r, (terms, product)) in rows.into_iter().enumerate() {
        match terms {
            Ok(terms) => {
                for n in 0..=order {
                    b.compare(|| format!("{},part=terms", nr(n, r)), &terms.0[n], &r_derangement(n, r));
                }
            }
            Err(e) => b.counterexamples.push(Evaluation::new(
                format!("r={r},part=terms"),
                e,
                "integer terms",
            )),
        }
        for (n, c) in product.coeffs().iter().enumerate() {
            let expected = ExactRational::from_integer(binomial(n, r));
            if *c != expected {
                b.counterexamples.push(Evaluation::new(
                    format!("{},part=product", nr(n, r)),
                    exact_string(c),
                    exact_string(&expected),
                ));
            }
        }
    }
    b.finish()
}

pub fn check_egf_b_derangement(order: usize) -> IdentityReport {
    let mut b = ReportBuilder::new(IdentityId::EgfBDerangement, format!("n=0..{order}"));
    match to_terms(&egf_b_derangement(order)) {
        Ok(terms) => {
            for n in 0..=order {
                b.compare(|| format!("n={n}"), &terms.0[n], &b_derangement(n));
            }
        }
        Err(e) => b.counterexamples.push(Evaluation::new("terms".into(), e, "integer terms")),
    }
    b.finish()
}

pub fn check_nearest_integer(n_max: usize) -> IdentityReport {
    let mut b = ReportBuilder::new(IdentityId::NearestInteger, format!("n=1..{n_max}"));
    let values: Vec<BigInt> = (1..=n_max)
        .into_par_iter()
        .map(|n| derangement_nearest_int(n).expect("n >= 1"))
        .collect();
    for (i, v) in values.iter().enumerate() {
        let n = i + 1;
        b.compare(|| format!("n={n}"), v, &derangement(n));
    }
    b.finish()
}

/// Points at which the Lah reports always record both sides.
pub const LAH_SAMPLE_POINTS: [(usize, usize); 2] = [(2, 1), (3, 1)];

/// `sum_{s=0}^{n-1} C(n,s) (n-s) D_r(s)`.
pub fn lah_first_sum(n: usize, r: usize) -> BigInt {
    (0..n)
        .map(|s| binomial(n, s) * BigInt::from(n - s) * r_derangement(s, r))
        .sum()
}

/// `sum_{s=0}^{n} C(n,s) s D_r(n-s)`.
pub fn lah_second_sum(n: usize, r: usize) -> BigInt {
    (0..=n)
        .map(|s| binomial(n, s) * BigInt::from(s) * r_derangement(n - s, r))
        .sum()
}

fn lah_report(id: IdentityId, n_max: usize, r_max: usize) -> IdentityReport {
    let mut b = ReportBuilder::new(id, format!("n=0..{n_max},r=1..{r_max}"));
    let evaluate = |n: usize, r: usize| -> (String, String) {
        let first = lah_first_sum(n, r);
        match id {
            IdentityId::LahSumRuleSecondForm => {
                (first.to_string(), lah_second_sum(n, r).to_string())
            }
            _ => {
                let lhs = match id {
                    IdentityId::LahSumRulePrinted => lah(n, r - 1),
                    _ => lah(n, r + 1),
                };
                let rhs = ExactRational::new(first, factorial(r + 1));
                (lhs.to_string(), exact_string(&rhs))
            }
        }
    };
    for r in 1..=r_max {
        for n in 0..=n_max {
            let (lhs, rhs) = evaluate(n, r);
            b.compare(|| nr(n, r), &lhs, &rhs);
        }
    }
    for (n, r) in LAH_SAMPLE_POINTS {
        let (lhs, rhs) = evaluate(n, r);
        b.sample(Evaluation::new(nr(n, r), lhs, rhs));
    }
    b.finish()
}

/// `L(n, r-1)` against `(1/(r+1)!) sum_{s<n} C(n,s)(n-s) D_r(s)`.
pub fn check_lah_printed(n_max: usize, r_max: usize) -> IdentityReport {
    lah_report(IdentityId::LahSumRulePrinted, n_max, r_max)
}

/// `L(n, r+1)` against the same right side.
pub fn check_lah_shifted(n_max: usize, r_max: usize) -> IdentityReport {
    lah_report(IdentityId::LahSumRuleShifted, n_max, r_max)
}

/// The two right-hand sums against each other, before division by `(r+1)!`.
pub fn check_lah_second_form(n_max: usize, r_max: usize) -> IdentityReport {
    lah_report(IdentityId::LahSumRuleSecondForm, n_max, r_max)
}

pub fn check_lah_sum_rule(n_max: usize, r_max: usize) -> Vec<IdentityReport> {
    vec![
        check_lah_printed(n_max, r_max),
        check_lah_shifted(n_max, r_max),
        check_lah_second_form(n_max, r_max),
    ]
}

/// Random integer sequences whose values lie in `-10^9..=10^9`.
pub fn random_term_pairs(pairs: usize, len: usize, seed: u64) -> Vec<(TermSequence, TermSequence)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |rng: &mut ChaCha8Rng| -> TermSequence {
        (0..len).map(|_| rng.gen_range(-1_000_000_000i64..=1_000_000_000)).collect()
    };
    (0..pairs).map(|_| (draw(&mut rng), draw(&mut rng))).collect()
}

pub fn check_convolution_equivalence(pairs: usize, len: usize, seed: u64) -> IdentityReport {
    let mut b = ReportBuilder::new(
        IdentityId::ConvolutionEquivalence,
        format!("pairs={pairs},len={len},seed={seed}"),
    );
    for (i, (x, y)) in random_term_pairs(pairs, len, seed).iter().enumerate() {
        let direct = binomial_convolution(x, y).expect("equal lengths");
        let via_product = from_terms(x)
            .and_then(|a| from_terms(y).and_then(|b| cauchy_product(&a, &b)))
            .and_then(|p| to_terms(&p));
        match via_product {
            Ok(terms) => {
                for n in 0..len {
                    b.compare(|| format!("pair={i},n={n}"), &direct.0[n], &terms.0[n]);
                }
            }
            Err(e) => b.counterexamples.push(Evaluation::new(format!("pair={i}"), "integer terms", e)),
        }
    }
    b.finish()
}

pub fn check_oracle_r_derangement(r_max: usize, points_max: usize) -> IdentityReport {
    let mut b = ReportBuilder::new(
        IdentityId::OracleRDerangement,
        format!("r=0..{r_max},n=r..,n+r<={points_max}"),
    );
    for r in 0..=r_max {
        for n in r..=points_max.saturating_sub(r) {
            let counted = OracleConfig::unsigned(n, r).and_then(|c| count_r_derangements_parallel(&c));
            match counted {
                Ok(c) => b.compare(|| nr(n, r), &c, &r_derangement(n, r)),
                Err(e) => b.counterexamples.push(Evaluation::new(nr(n, r), e, r_derangement(n, r))),
            }
        }
    }
    b.finish()
}

pub fn check_oracle_b_derangement(n_max: usize) -> IdentityReport {
    let mut b = ReportBuilder::new(IdentityId::OracleBDerangement, format!("n=0..{n_max}"));
    for n in 0..=n_max {
        match OracleConfig::signed(n).and_then(|c| count_signed_derangements(&c)) {
            Ok(c) => b.compare(|| format!("n={n}"), &c, &b_derangement(n)),
            Err(e) => b.counterexamples.push(Evaluation::new(format!("n={n}"), e, b_derangement(n))),
        }
    }
    b.finish()
}

pub fn check_oracle_lah(n_max: usize) -> IdentityReport {
    let mut b = ReportBuilder::new(IdentityId::OracleLah, format!("n1=0..{n_max},n2=0..n1"));
    for n1 in 0..=n_max {
        for n2 in 0..=n1 {
            let params = || format!("n1={n1},n2={n2}");
            match count_ordered_partitions(n1, n2) {
                Ok(c) => b.compare(params, &c, &lah(n1, n2)),
                Err(e) => b.counterexamples.push(Evaluation::new(params(), e, lah(n1, n2))),
            }
        }
    }
    b.finish()
}

/// Runs the checker for `id` on `grids`.
pub fn check(id: IdentityId, g: &Grids) -> IdentityReport {
    match id {
        IdentityId::MainSumRule => check_main_sum_rule(g.main_r_max, g.main_n_max),
        IdentityId::ClassicalSumRule => check_classical_sum_rule(g.classical_n_max),
        IdentityId::RecurrenceConsistency => check_recurrence(g.recurrence_r_max, g.recurrence_n_max),
        IdentityId::ShiftD1 => check_shift_d1(g.shift_n_max),
        IdentityId::BaseCases => check_base_cases(g.base_r_max),
        IdentityId::EgfRDerangement => {
            check_egf_r_derangement(g.egf_r_max, g.egf_order, g.egf_product_order)
        }
        IdentityId::EgfBDerangement => check_egf_b_derangement(g.egf_b_order),
        IdentityId::NearestInteger => check_nearest_integer(g.nearest_n_max),
        IdentityId::LahSumRulePrinted => check_lah_printed(g.lah_n_max, g.lah_r_max),
        IdentityId::LahSumRuleShifted => check_lah_shifted(g.lah_n_max, g.lah_r_max),
        IdentityId::LahSumRuleSecondForm => check_lah_second_form(g.lah_n_max, g.lah_r_max),
        IdentityId::ConvolutionEquivalence => {
            check_convolution_equivalence(g.convolution_pairs, g.convolution_len, g.convolution_seed)
        }
        IdentityId::OracleRDerangement => {
            check_oracle_r_derangement(g.oracle_r_max, g.oracle_points_max)
        }
        IdentityId::OracleBDerangement => check_oracle_b_derangement(g.oracle_signed_n_max),
        IdentityId::OracleLah => check_oracle_lah(g.oracle_lah_n_max),
    }
}

/// Every identity on `grids`, concurrently, reported in [`IdentityId`] order.
pub fn check_all(grids: &Grids) -> Vec<IdentityReport> {
    IdentityId::ALL.par_iter().map(|&id| check(id, grids)).collect()
}
