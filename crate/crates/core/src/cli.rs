//! Command-line front end: `seq`, `verify` and `egf`.
//!
//! Output is byte-deterministic: fixed field order, `\n` line endings, and
//! integers written as plain decimal strings in both `tsv` and `jsonl`.
//!
//! Exit status: 0 on success, 1 when a verification fails, a term is not an
//! integer, or the cache disagrees with a recomputed value, 2 on usage and
//! parse errors.

use std::collections::HashMap;
use std::ffi::OsString;
use std::fs::{File, OpenOptions};
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{fraction_string, BigInt};
use crate::egf::{
    egf_b_derangement, egf_r_derangement, series_exp, series_reciprocal_pole, to_terms, Sign,
    TruncatedSeries,
};
use crate::identities::{
    check, Evaluation, GridOverrides, Grids, IdentityId, IdentityReport, Verdict,
};
use crate::sequences::{Family, SequenceId};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Failure(String),
    #[error("{path}:{line}: malformed cache line: {reason}")]
    MalformedCache { path: PathBuf, line: usize, reason: String },
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::MalformedCache { .. } => EXIT_USAGE,
            CliError::Failure(_) | CliError::Io(_) => EXIT_FAILURE,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Tsv,
    Jsonl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Mode {
    #[default]
    Coeffs,
    Terms,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesName {
    RDerangement,
    BDerangement,
    Exp,
    Pole,
}

#[derive(Debug, Parser)]
#[command(name = "derangements", version, about = "Exact derangement-family sequences and identity checks")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    pub format: Format,

    /// Append-only term cache used by `seq`.
    #[arg(long, global = true, value_name = "PATH")]
    pub cache: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print sequence terms.
    ///
    /// Either a range (`--from`/`--to` plus `--r` or `--k`), or a single point
    /// given positionally as `n` followed by the family parameter, e.g.
    /// `seq lah 3 2` for L(3, 2).
    Seq {
        /// derangement, r-derangement, b-derangement, lah or b-stirling-k0.
        #[arg(value_parser = parse_family)]
        family: Family,
        /// Single point: `n` then the family parameter, if any.
        #[arg(conflicts_with_all = ["from", "to"])]
        point: Vec<usize>,
        /// Distinguished-element count for r-derangement and b-stirling-k0.
        #[arg(long)]
        r: Option<usize>,
        /// Block count for lah.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 0)]
        from: usize,
        #[arg(long)]
        to: Option<usize>,
    },
    /// Check an identity (or `all`) and print one summary record per report.
    Verify {
        identity: String,
        #[arg(long)]
        r_max: Option<usize>,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        order: Option<usize>,
        /// Comma-separated identities whose failures do not affect the exit
        /// status, or `none`. Defaults to `lah-sum-rule-printed` for `all`
        /// and to `none` otherwise.
        #[arg(long)]
        advisory: Option<String>,
    },
    /// Expand a generating function.
    Egf {
        #[arg(value_enum)]
        series: SeriesName,
        #[arg(long)]
        r: Option<usize>,
        /// +1 or -1, for exp.
        #[arg(long, allow_negative_numbers = true)]
        sign: Option<i64>,
        /// Pole location m in 1/(1 - m x)^p.
        #[arg(long, allow_negative_numbers = true)]
        m: Option<i64>,
        /// Pole multiplicity p >= 1.
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Mode::Coeffs)]
        mode: Mode,
    },
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse::<Family>().map_err(|e| e.to_string())
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit status. Data goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if matches!(e, CliError::Usage(_)) {
                let _ = writeln!(err, "\nFor more information, try '--help'.");
            }
            e.exit_code()
        }
    }
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match &cli.command {
        Command::Seq { family, point, r, k, from, to } => {
            cmd_seq(*family, point, *r, *k, *from, *to, cli.format, cli.cache.as_deref(), out)
        }
        Command::Verify { identity, r_max, n_max, order, advisory } => {
            let overrides = GridOverrides { r_max: *r_max, n_max: *n_max, order: *order };
            cmd_verify(identity, overrides, advisory.as_deref(), cli.format, out)
        }
        Command::Egf { series, r, sign, m, p, order, mode } => {
            let series = build_series(*series, *r, *sign, *m, *p, *order)?;
            cmd_egf(&series, *mode, cli.format, out)
        }
    }
}

/// One `seq` output line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub family: Family,
    pub params: Vec<String>,
    pub n: String,
    pub value: String,
}

impl TermRecord {
    pub fn new(id: &SequenceId, n: usize, value: &BigInt) -> Self {
        TermRecord {
            family: id.family(),
            params: id.params().iter().map(usize::to_string).collect(),
            n: n.to_string(),
            value: value.to_string(),
        }
    }

    pub fn to_tsv(&self) -> String {
        format!("{}\t{}\t{}\t{}", self.family, self.params.join(","), self.n, self.value)
    }

    pub fn to_jsonl(&self) -> String {
        serde_json::to_string(self).expect("plain strings serialize")
    }
}

fn sequence_from_args(
    family: Family,
    point: &[usize],
    r: Option<usize>,
    k: Option<usize>,
) -> Result<(SequenceId, Option<usize>), CliError> {
    if !point.is_empty() {
        if r.is_some() || k.is_some() {
            return Err(CliError::Usage("give parameters either positionally or by flag, not both".into()));
        }
        let id = SequenceId::new(family, point[1..].to_vec()).map_err(|e| {
            CliError::Usage(format!("{e}; the single-point form is `seq {family} <n> [param]`"))
        })?;
        return Ok((id, Some(point[0])));
    }
    let params = match (family, r, k) {
        (Family::Derangement | Family::BDerangement, None, None) => vec![],
        (Family::RDerangement | Family::BStirlingK0, Some(r), None) => vec![r],
        (Family::Lah, None, Some(k)) => vec![k],
        (Family::Derangement | Family::BDerangement, _, _) => {
            return Err(CliError::Usage(format!("`{family}` takes no parameters")))
        }
        (Family::RDerangement | Family::BStirlingK0, _, _) => {
            return Err(CliError::Usage(format!("`{family}` needs --r and nothing else")))
        }
        (Family::Lah, _, _) => return Err(CliError::Usage("`lah` needs --k and nothing else".into())),
    };
    Ok((SequenceId::new(family, params).expect("arity checked above"), None))
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_seq(
    family: Family,
    point: &[usize],
    r: Option<usize>,
    k: Option<usize>,
    from: usize,
    to: Option<usize>,
    format: Format,
    cache: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let (id, single) = sequence_from_args(family, point, r, k)?;
    let range = match (single, to) {
        (Some(n), _) => n..=n,
        (None, Some(to)) if to >= from => from..=to,
        (None, Some(to)) => {
            return Err(CliError::Usage(format!("empty range: --from {from} exceeds --to {to}")))
        }
        (None, None) => return Err(CliError::Usage("a range needs --to (or give a single point)".into())),
    };

    let mut cache = cache.map(TermCache::open).transpose()?;
    let mut records = Vec::new();
    for n in range {
        let value = id.value(n);
        if let Some(cache) = cache.as_mut() {
            cache.reconcile(&id, n, &value)?;
        }
        records.push(TermRecord::new(&id, n, &value));
    }
    if let Some(mut cache) = cache {
        cache.flush()?;
    }
    for rec in &records {
        let line = match format {
            Format::Tsv => rec.to_tsv(),
            Format::Jsonl => rec.to_jsonl(),
        };
        writeln!(out, "{line}")?;
    }
    Ok(EXIT_OK)
}

/// Append-only text cache of `seq` tsv records keyed by (family, params, n).
///
/// Every cached value that is requested again is compared with a fresh
/// computation; a mismatch is an integrity failure.
#[derive(Debug)]
pub struct TermCache {
    path: PathBuf,
    entries: HashMap<(SequenceId, usize), BigInt>,
    pending: Vec<String>,
}

impl TermCache {
    /// Reads `path`; a missing file is an empty cache.
    pub fn open(path: &Path) -> Result<Self, CliError> {
        let mut cache = TermCache { path: path.to_path_buf(), entries: HashMap::new(), pending: Vec::new() };
        let file = match File::open(path) {
            Ok(f) => f,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(cache),
            Err(e) => return Err(e.into()),
        };
        for (i, line) in BufReader::new(file).lines().enumerate() {
            let line = line?;
            let malformed = |reason: String| CliError::MalformedCache {
                path: path.to_path_buf(),
                line: i + 1,
                reason,
            };
            let (id, n, value) = parse_cache_line(&line).map_err(malformed)?;
            match cache.entries.get(&(id.clone(), n)) {
                Some(existing) if *existing != value => {
                    return Err(CliError::Failure(format!(
                        "cache integrity failure: {}:{}: {} n={} recorded as both {} and {}",
                        path.display(),
                        i + 1,
                        id.family(),
                        n,
                        existing,
                        value
                    )))
                }
                Some(_) => {}
                None => {
                    cache.entries.insert((id, n), value);
                }
            }
        }
        Ok(cache)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, id: &SequenceId, n: usize) -> Option<&BigInt> {
        self.entries.get(&(id.clone(), n))
    }

    /// Checks a computed value against the cache, queueing it for append on a
    /// miss.
    pub fn reconcile(&mut self, id: &SequenceId, n: usize, value: &BigInt) -> Result<(), CliError> {
        match self.entries.get(&(id.clone(), n)) {
            Some(cached) if cached != value => Err(CliError::Failure(format!(
                "cache integrity failure: {} params=[{}] n={}: cached {} but recomputed {}",
                id.family(),
                id.params_string(),
                n,
                cached,
                value
            ))),
            Some(_) => Ok(()),
            None => {
                self.entries.insert((id.clone(), n), value.clone());
                self.pending.push(TermRecord::new(id, n, value).to_tsv());
                Ok(())
            }
        }
    }

    /// Appends queued records to the file.
    pub fn flush(&mut self) -> Result<(), CliError> {
        if self.pending.is_empty() {
            return Ok(());
        }
        let mut file = OpenOptions::new().create(true).append(true).open(&self.path)?;
        let mut buf = String::new();
        for line in self.pending.drain(..) {
            buf.push_str(&line);
            buf.push('\n');
        }
        file.write_all(buf.as_bytes())?;
        Ok(())
    }
}

fn parse_cache_line(line: &str) -> Result<(SequenceId, usize, BigInt), String> {
    let fields: Vec<&str> = line.split('\t').collect();
    let [family, params, n, value] = fields[..] else {
        return Err(format!("expected 4 tab-separated fields, found {}", fields.len()));
    };
    let family: Family = family.parse().map_err(|e: crate::sequences::SequenceError| e.to_string())?;
    let params = if params.is_empty() {
        vec![]
    } else {
        params
            .split(',')
            .map(|p| p.parse::<usize>().map_err(|_| format!("bad parameter `{p}`")))
            .collect::<Result<Vec<_>, _>>()?
    };
    let id = SequenceId::new(family, params).map_err(|e| e.to_string())?;
    let n = n.parse::<usize>().map_err(|_| format!("bad index `{n}`"))?;
    if value.is_empty() || value.starts_with('+') {
        return Err(format!("bad value `{value}`"));
    }
    let value = value.parse::<BigInt>().map_err(|_| format!("bad value `{value}`"))?;
    Ok((id, n, value))
}

/// A `verify` summary record as written in jsonl, with its counterexamples
/// and samples inline.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub identity: IdentityId,
    pub grid: String,
    pub verdict: Verdict,
    pub advisory: bool,
    pub counterexample_count: String,
    pub counterexamples: Vec<Evaluation>,
    pub samples: Vec<Evaluation>,
}

impl ReportRecord {
    pub fn new(report: &IdentityReport, advisory: bool) -> Self {
        ReportRecord {
            identity: report.id,
            grid: report.grid.clone(),
            verdict: report.verdict,
            advisory,
            counterexample_count: report.counterexamples.len().to_string(),
            counterexamples: report.counterexamples.clone(),
            samples: report.samples.clone(),
        }
    }

    /// Rebuilds the report; elapsed time is not serialized and comes back as
    /// zero.
    pub fn into_report(self) -> IdentityReport {
        IdentityReport {
            id: self.identity,
            grid: self.grid,
            verdict: self.verdict,
            counterexamples: self.counterexamples,
            samples: self.samples,
            elapsed: Duration::ZERO,
        }
    }

    pub fn to_jsonl(&self) -> String {
        serde_json::to_string(self).expect("plain strings serialize")
    }

    pub fn to_tsv(&self) -> String {
        let verdict = match self.advisory {
            true => format!("{} (advisory)", self.verdict.as_str()),
            false => self.verdict.as_str().to_string(),
        };
        let mut s = format!(
            "{}\t{}\t{}\t{}\n",
            self.identity, self.grid, verdict, self.counterexample_count
        );
        for (kind, evals) in [("counterexample", &self.counterexamples), ("sample", &self.samples)] {
            for e in evals {
                s.push_str(&format!("\t{kind}\t{}\t{}\t{}\n", e.params, e.lhs, e.rhs));
            }
        }
        s
    }
}

fn parse_advisory(arg: Option<&str>, all: bool) -> Result<Vec<IdentityId>, CliError> {
    match arg {
        None if all => Ok(vec![IdentityId::LahSumRulePrinted]),
        None | Some("none") => Ok(vec![]),
        Some(list) => list
            .split(',')
            .map(|s| s.trim().parse::<IdentityId>().map_err(|e| CliError::Usage(e.to_string())))
            .collect(),
    }
}

pub fn cmd_verify(
    identity: &str,
    overrides: GridOverrides,
    advisory: Option<&str>,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let ids: Vec<IdentityId> = if identity == "all" {
        IdentityId::ALL.to_vec()
    } else {
        vec![identity.parse().map_err(|e: crate::identities::UnknownIdentity| {
            CliError::Usage(format!("{e}; expected `all` or one of: {}", identity_names()))
        })?]
    };
    let advisory = parse_advisory(advisory, identity == "all")?;
    let reports: Vec<IdentityReport> = {
        use rayon::prelude::*;
        ids.par_iter()
            .map(|&id| check(id, &Grids::default().with_overrides(id, overrides)))
            .collect()
    };

    let mut code = EXIT_OK;
    for report in &reports {
        let is_advisory = advisory.contains(&report.id);
        if !report.passed() && !is_advisory {
            code = EXIT_FAILURE;
        }
        let record = ReportRecord::new(report, is_advisory);
        match format {
            Format::Tsv => out.write_all(record.to_tsv().as_bytes())?,
            Format::Jsonl => writeln!(out, "{}", record.to_jsonl())?,
        }
    }
    Ok(code)
}

fn identity_names() -> String {
    IdentityId::ALL.iter().map(|id| id.name()).collect::<Vec<_>>().join(", ")
}

pub fn build_series(
    series: SeriesName,
    r: Option<usize>,
    sign: Option<i64>,
    m: Option<i64>,
    p: Option<usize>,
    order: usize,
) -> Result<TruncatedSeries, CliError> {
    let usage = |msg: &str| Err(CliError::Usage(msg.to_string()));
    match (series, r, sign, m, p) {
        (SeriesName::RDerangement, Some(r), None, None, None) => Ok(egf_r_derangement(r, order)),
        (SeriesName::RDerangement, ..) => usage("`r-derangement` needs --r and nothing else"),
        (SeriesName::BDerangement, None, None, None, None) => Ok(egf_b_derangement(order)),
        (SeriesName::BDerangement, ..) => usage("`b-derangement` takes no parameters besides --order"),
        (SeriesName::Exp, None, Some(1), None, None) => Ok(series_exp(Sign::Plus, order)),
        (SeriesName::Exp, None, Some(-1), None, None) => Ok(series_exp(Sign::Minus, order)),
        (SeriesName::Exp, ..) => usage("`exp` needs --sign 1 or --sign -1 and nothing else"),
        (SeriesName::Pole, None, None, Some(m), Some(p)) if p >= 1 => {
            Ok(series_reciprocal_pole(m, p, order).expect("p >= 1"))
        }
        (SeriesName::Pole, ..) => usage("`pole` needs --m and --p (p >= 1) and nothing else"),
    }
}

pub fn cmd_egf(
    series: &TruncatedSeries,
    mode: Mode,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let values: Vec<String> = match mode {
        Mode::Coeffs => series.coeffs().iter().map(fraction_string).collect(),
        Mode::Terms => to_terms(series)
            .map_err(|e| CliError::Failure(e.to_string()))?
            .0
            .iter()
            .map(BigInt::to_string)
            .collect(),
    };
    let key = match mode {
        Mode::Coeffs => "coeff",
        Mode::Terms => "term",
    };
    for (n, v) in values.iter().enumerate() {
        match format {
            Format::Tsv => writeln!(out, "{n}\t{v}")?,
            Format::Jsonl => {
                let mut obj = serde_json::Map::new();
                obj.insert("n".into(), n.to_string().into());
                obj.insert(key.into(), v.clone().into());
                writeln!(out, "{}", serde_json::Value::Object(obj))?;
            }
        }
    }
    Ok(EXIT_OK)
}
