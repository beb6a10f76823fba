//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! All comparisons are exact; there are no tolerances.

use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use derangements::arith::{binomial, factorial, BigInt, ExactRational};
use derangements::identities::{
    check_base_cases, check_classical_sum_rule, check_convolution_equivalence,
    check_egf_b_derangement, check_egf_r_derangement, check_lah_sum_rule, check_main_sum_rule,
    check_nearest_integer, check_recurrence, check_shift_d1, IdentityId, IdentityReport,
    LAH_SAMPLE_POINTS,
};
use derangements::oracle::{
    count_ordered_partitions, count_r_derangements, count_signed_derangements, OracleConfig,
};
use derangements::sequences::{b_derangement, lah, r_derangement};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

fn report_outcome(report: &IdentityReport, grid: &str) -> Outcome {
    if report.grid != grid {
        return Err(format!("ran on grid `{}`, expected `{grid}`", report.grid));
    }
    match report.counterexamples.first() {
        None => Ok(format!("{} on {grid}", report.id)),
        Some(c) => Err(format!(
            "{} counterexample(s), first at {}: lhs {} rhs {}",
            report.counterexamples.len(),
            c.params,
            c.lhs,
            c.rhs
        )),
    }
}

fn within(elapsed: Duration, limit: Duration, outcome: Outcome) -> Outcome {
    let detail = outcome?;
    if elapsed > limit {
        return Err(format!("{detail}, but took {elapsed:.1?} (limit {limit:?})"));
    }
    Ok(format!("{detail} in {elapsed:.1?}"))
}

fn oracle_r_derangements() -> Outcome {
    let started = Instant::now();
    let mut checked = 0;
    for r in 0..=4 {
        for n in r..=9 - r {
            let cfg = OracleConfig::unsigned(n, r).map_err(|e| e.to_string())?;
            let counted = count_r_derangements(&cfg).map_err(|e| e.to_string())?;
            let closed = r_derangement(n, r);
            if counted != closed {
                return Err(format!("n={n} r={r}: enumeration {counted} vs closed form {closed}"));
            }
            checked += 1;
        }
    }
    within(started.elapsed(), Duration::from_secs(60), Ok(format!("{checked} (n, r) pairs, single-threaded")))
}

fn oracle_b_derangements() -> Outcome {
    const GOLDEN: [u64; 8] = [1, 1, 5, 29, 233, 2329, 27949, 391285];
    for (n, golden) in GOLDEN.iter().enumerate() {
        let cfg = OracleConfig::signed(n).map_err(|e| e.to_string())?;
        let counted = count_signed_derangements(&cfg).map_err(|e| e.to_string())?;
        let closed = b_derangement(n);
        if counted != BigInt::from(*golden) || closed != counted {
            return Err(format!("n={n}: enumeration {counted}, closed form {closed}, golden {golden}"));
        }
    }
    Ok("n=0..7 match 1, 1, 5, 29, 233, 2329, 27949, 391285".into())
}

fn oracle_lah() -> Outcome {
    for n1 in 0..=8 {
        for n2 in 0..=n1 {
            let counted = count_ordered_partitions(n1, n2).map_err(|e| e.to_string())?;
            if counted != lah(n1, n2) {
                return Err(format!("L({n1},{n2}): enumeration {counted} vs {}", lah(n1, n2)));
            }
        }
    }
    Ok("0 <= n2 <= n1 <= 8".into())
}

fn main_sum_rule() -> Outcome {
    let started = Instant::now();
    let report = check_main_sum_rule(10, 300);
    within(started.elapsed(), Duration::from_secs(300), report_outcome(&report, "r=0..10,n=r..300"))
        .map(|d| format!("{d} (direct and EGF routes)"))
}

fn lah_adjudication() -> Outcome {
    let reports = check_lah_sum_rule(30, 6);
    let ids: Vec<IdentityId> = reports.iter().map(|r| r.id).collect();
    let expected_ids = [
        IdentityId::LahSumRulePrinted,
        IdentityId::LahSumRuleShifted,
        IdentityId::LahSumRuleSecondForm,
    ];
    if ids != expected_ids {
        return Err(format!("unexpected reports {ids:?}"));
    }
    let [printed, shifted, second] = &reports[..] else { unreachable!() };
    report_outcome(second, "n=0..30,r=1..6")?;

    for report in [printed, shifted] {
        for (n, r) in LAH_SAMPLE_POINTS {
            let key = format!("n={n},r={r}");
            if report.evaluation(&key).is_none() {
                return Err(format!("{} has no explicit values at {key}", report.id));
            }
        }
        // the counterexample list must be exactly the points where the two
        // sides differ; the right side is n! C(n-1, r) / (r+1)! in closed form
        let mut expected = Vec::new();
        for r in 1..=6usize {
            for n in 0..=30usize {
                let lhs = match report.id {
                    IdentityId::LahSumRulePrinted => lah(n, r - 1),
                    _ => lah(n, r + 1),
                };
                let rhs = match n {
                    0 => ExactRational::from_integer(BigInt::from(0)),
                    _ => ExactRational::new(factorial(n) * binomial(n - 1, r), factorial(r + 1)),
                };
                if ExactRational::from_integer(lhs) != rhs {
                    expected.push(format!("n={n},r={r}"));
                }
            }
        }
        let listed: Vec<&str> = report.counterexamples.iter().map(|c| c.params.as_str()).collect();
        if listed != expected {
            return Err(format!(
                "{} lists {} counterexamples, independent evaluation finds {}",
                report.id,
                listed.len(),
                expected.len()
            ));
        }
        if report.passed() != report.counterexamples.is_empty() {
            return Err(format!("{} verdict disagrees with its counterexamples", report.id));
        }
    }
    let show = |r: &IdentityReport, key: &str| {
        let e = r.evaluation(key).expect("checked above");
        format!("{}={}|{}", key, e.lhs, e.rhs)
    };
    Ok(format!(
        "second form pass; printed {} ({} counterexamples; {} {}); shifted {} ({} {})",
        printed.verdict.as_str(),
        printed.counterexamples.len(),
        show(printed, "n=2,r=1"),
        show(printed, "n=3,r=1"),
        shifted.verdict.as_str(),
        show(shifted, "n=2,r=1"),
        show(shifted, "n=3,r=1"),
    ))
}

fn cli_goldens() -> Outcome {
    let fixtures = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    let cases: [(&[&str], &str, i32); 9] = [
        (&["seq", "r-derangement", "--r", "2", "--from", "2", "--to", "4", "--format", "tsv"], "seq_r_derangement.tsv", 0),
        (&["seq", "derangement", "--from", "0", "--to", "1"], "seq_derangement.tsv", 0),
        (&["seq", "lah", "3", "2"], "seq_lah_point.tsv", 0),
        (&["verify", "main-sum-rule", "--r-max", "4", "--n-max", "50"], "verify_main_sum_rule.tsv", 0),
        (&["verify", "all"], "verify_all.tsv", 0),
        (&["verify", "lah-sum-rule-printed"], "verify_lah_printed.tsv", 1),
        (&["egf", "r-derangement", "--r", "2", "--order", "4", "--mode", "terms"], "egf_r_derangement_terms.tsv", 0),
        (&["egf", "exp", "--sign", "-1", "--order", "2", "--mode", "coeffs"], "egf_exp_coeffs.tsv", 0),
        (&["egf", "b-derangement", "--order", "2", "--mode", "terms"], "egf_b_derangement_terms.tsv", 0),
    ];
    let mut verify_all_time = Duration::ZERO;
    for (args, name, code) in cases {
        let started = Instant::now();
        let out = Command::new(env!("CARGO_BIN_EXE_derangements"))
            .args(args)
            .output()
            .map_err(|e| e.to_string())?;
        if args == ["verify", "all"] {
            verify_all_time = started.elapsed();
            let summaries = out.stdout.split(|b| *b == b'\n').filter(|l| !l.is_empty() && l[0] != b'\t').count();
            if summaries != 15 {
                return Err(format!("`verify all` printed {summaries} summary records"));
            }
        }
        let expected = std::fs::read(fixtures.join(name)).map_err(|e| format!("{name}: {e}"))?;
        if out.status.code() != Some(code) {
            return Err(format!("{args:?} exited {:?}, expected {code}", out.status.code()));
        }
        if out.stdout != expected {
            return Err(format!("{args:?} output differs from {name}"));
        }
    }
    within(verify_all_time, Duration::from_secs(600), Ok("9 invocations byte-identical".into()))
        .map(|d| format!("{d} (`verify all` timing)"))
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("AC01 oracle equivalence, r-derangements", Box::new(oracle_r_derangements)),
        ("AC02 oracle equivalence, B-type derangements", Box::new(oracle_b_derangements)),
        ("AC03 oracle equivalence, Lah numbers", Box::new(oracle_lah)),
        ("AC04 main sum rule", Box::new(main_sum_rule)),
        ("AC05 classical corollary", Box::new(|| report_outcome(&check_classical_sum_rule(300), "n=0..300"))),
        ("AC06 recurrence consistency", Box::new(|| report_outcome(&check_recurrence(10, 120), "r=0..10,n=0..120"))),
        ("AC07 shift identity D_1(n) = D(n+1)", Box::new(|| report_outcome(&check_shift_d1(200), "n=1..200"))),
        ("AC08 base cases", Box::new(|| {
            report_outcome(&check_base_cases(30), "D_r(r):r=1..30;D_r(r+1):r=2..30")
        })),
        ("AC09 nearest-integer formula", Box::new(|| report_outcome(&check_nearest_integer(500), "n=1..500"))),
        ("AC10 EGF coefficient matches", Box::new(|| {
            let a = report_outcome(
                &check_egf_r_derangement(8, 64, 40),
                "r=0..8,terms:n=0..64,product:n=0..40",
            )?;
            let b = report_outcome(&check_egf_b_derangement(64), "n=0..64")?;
            Ok(format!("{a}; {b}"))
        })),
        ("AC11 convolution equivalence", Box::new(|| {
            let report = check_convolution_equivalence(20, 33, derangements::identities::Grids::default().convolution_seed);
            let grid = report.grid.clone();
            if !grid.starts_with("pairs=20,len=33,") {
                return Err(format!("unexpected grid {grid}"));
            }
            report_outcome(&report, &grid)
        })),
        ("AC12 Lah sum rule adjudication", Box::new(lah_adjudication)),
        ("AC13 CLI golden files", Box::new(cli_goldens)),
    ];

    let mut failed = 0;
    for (name, criterion) in &criteria {
        match criterion() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
