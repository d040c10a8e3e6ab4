//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a Wilf violation or counterexample was found,
//! 2 invalid input, 3 node limit exceeded.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::enumeration::{Enumerator, VerificationSummary, DEFAULT_NODE_LIMIT};
use crate::error::Error;
use crate::profile::{IntervalProfile, WilfReport};
use crate::semigroup::Semigroup;
use crate::verifiers::{Evidence, GasOutcome, GasSpec, LemmaId};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "wilfkit",
    version,
    about = "Numerical semigroup invariants and Wilf-inequality verification"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    pub format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Jsonl,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apéry set, Frobenius number, type and related invariants.
    Invariants(GensArg),
    /// Wilf inequality with its slack computed three ways.
    Wilf(GensArg),
    /// Interval counts n_k and the eta/epsilon tallies.
    Profile(GensArg),
    /// Run the checkers over every semigroup up to a genus bound.
    Verify(VerifyArgs),
    /// Type formula for generalized arithmetic sequences over a grid.
    Gas(GasArgs),
}

#[derive(Debug, Args)]
pub struct GensArg {
    /// Comma-separated positive integers, e.g. `7,8,10,19`.
    #[arg(long)]
    pub gens: String,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub max_genus: u64,
    /// Comma-separated checker ids or `all`.
    #[arg(long, default_value = "all")]
    pub checkers: String,
    /// Restrict checks to a family; the tree is still fully traversed.
    #[arg(long, value_enum, default_value_t = Filter::All)]
    pub filter: Filter,
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
    pub node_limit: u64,
}

#[derive(Debug, Args)]
pub struct GasArgs {
    /// Multiplicity, a value `N` or an inclusive range `A-B`.
    #[arg(long)]
    pub m: String,
    #[arg(long)]
    pub h: String,
    #[arg(long)]
    pub d: String,
    /// Defaults to the full range `1-(m-2)`.
    #[arg(long)]
    pub l: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Filter {
    All,
    /// 2ν >= m
    TwoNuGeM,
    /// m <= 8
    MLe8,
    /// m <= 6
    MLe6,
    /// ν <= 3
    NuLe3,
}

impl Filter {
    pub fn accepts(self, s: &Semigroup) -> bool {
        let m = s.multiplicity();
        let nu = s.embedding_dimension() as u64;
        match self {
            Filter::All => true,
            Filter::TwoNuGeM => 2 * nu >= m,
            Filter::MLe8 => m <= 8,
            Filter::MLe6 => m <= 6,
            Filter::NuLe3 => nu <= 3,
        }
    }

    fn name(self) -> String {
        self.to_possible_value()
            .map(|v| v.get_name().to_string())
            .unwrap_or_default()
    }
}

/// A failure mapped to an exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ResourceLimit { .. } => EXIT_RESOURCE,
            _ => EXIT_INVALID,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Self {
            code: EXIT_INVALID,
            message: e.to_string(),
        }
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INVALID,
        message: message.into(),
    }
}

pub fn parse_generators(text: &str) -> Result<Vec<u64>, String> {
    let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if cleaned.is_empty() {
        return Err(Error::EmptyInput.to_string());
    }
    cleaned
        .split(',')
        .map(|part| {
            part.parse::<u64>()
                .map_err(|_| format!("invalid generator `{part}`"))
        })
        .collect()
}

fn parse_range(text: &str) -> Result<(u64, u64), String> {
    let text = text.trim();
    let parse = |s: &str| {
        s.trim()
            .parse::<u64>()
            .map_err(|_| format!("invalid range `{text}`"))
    };
    let (lo, hi) = match text.split_once('-') {
        Some((a, b)) => (parse(a)?, parse(b)?),
        None => {
            let v = parse(text)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range `{text}`"));
    }
    Ok((lo, hi))
}

fn list<T: ToString>(items: &[T]) -> String {
    let inner: Vec<String> = items.iter().map(ToString::to_string).collect();
    format!("[{}]", inner.join(","))
}

fn timestamp() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

fn construct(gens: &str) -> Result<Semigroup, Failure> {
    let raw = parse_generators(gens).map_err(invalid)?;
    Ok(Semigroup::new(&raw)?)
}

fn emit(
    out: &mut dyn Write,
    format: Format,
    record: &Value,
    human: &[(&str, String)],
) -> io::Result<()> {
    match format {
        Format::Jsonl => writeln!(out, "{record}"),
        Format::Human => {
            for (key, value) in human {
                writeln!(out, "{key}: {value}")?;
            }
            Ok(())
        }
    }
}

fn cmd_invariants(s: &Semigroup, format: Format, out: &mut dyn Write) -> Result<i32, Failure> {
    let pf = s.pseudo_frobenius().ok();
    let t = s.type_number().ok();
    let max_ap = s.max_apery();
    let record = json!({
        "gens": s.generators(),
        "m": s.multiplicity(),
        "nu": s.embedding_dimension(),
        "f": s.frobenius(),
        "conductor": s.conductor(),
        "genus": s.genus(),
        "n": s.n_of(),
        "t": t,
        "apery": s.apery(),
        "pseudo_frobenius": pf,
        "min_ap": s.min_apery(),
        "max_ap": max_ap,
    });
    let opt = |v: Option<String>| v.unwrap_or_else(|| "undefined".into());
    let human = [
        ("gens", list(s.generators())),
        ("m", s.multiplicity().to_string()),
        ("nu", s.embedding_dimension().to_string()),
        ("f", s.frobenius().to_string()),
        ("conductor", s.conductor().to_string()),
        ("genus", s.genus().to_string()),
        ("n", s.n_of().to_string()),
        ("t", opt(t.map(|t| t.to_string()))),
        ("apery", list(s.apery())),
        ("pseudo_frobenius", opt(pf.as_deref().map(list))),
        ("min_ap", list(s.min_apery())),
        ("max_ap", list(&max_ap)),
    ];
    emit(out, format, &record, &human)?;
    Ok(EXIT_OK)
}

fn cmd_wilf(s: &Semigroup, format: Format, out: &mut dyn Write) -> Result<i32, Failure> {
    let r = WilfReport::new(s)?;
    let record = json!({
        "gens": s.generators(),
        "m": s.multiplicity(),
        "nu": s.embedding_dimension(),
        "f": s.frobenius(),
        "lhs": r.wilf_lhs,
        "rhs": r.wilf_rhs,
        "slack": r.slack_direct,
        "slack_interval": r.slack_interval,
        "slack_epsilon": r.slack_epsilon,
        "satisfied": r.satisfied,
    });
    let human = [
        ("gens", list(s.generators())),
        ("lhs", r.wilf_lhs.to_string()),
        ("rhs", r.wilf_rhs.to_string()),
        ("slack", r.slack_direct.to_string()),
        ("slack_interval", r.slack_interval.to_string()),
        ("slack_epsilon", r.slack_epsilon.to_string()),
        ("satisfied", r.satisfied.to_string()),
    ];
    emit(out, format, &record, &human)?;
    Ok(if r.satisfied { EXIT_OK } else { EXIT_VIOLATION })
}

fn cmd_profile(s: &Semigroup, format: Format, out: &mut dyn Write) -> Result<i32, Failure> {
    let p = IntervalProfile::new(s)?;
    let record = json!({
        "gens": s.generators(),
        "m": s.multiplicity(),
        "f": s.frobenius(),
        "L": p.last_interval,
        "rho": p.rho,
        "n_k": p.n_k,
        "last_interval_members": p.last_interval_members,
        "eta": p.eta,
        "epsilon": p.epsilon,
    });
    let human = [
        ("gens", list(s.generators())),
        ("L", p.last_interval.to_string()),
        ("rho", p.rho.to_string()),
        ("n", list(&p.n_k)),
        ("last_interval_members", p.last_interval_members.to_string()),
        ("eta", list(&p.eta)),
        ("epsilon", list(&p.epsilon)),
    ];
    emit(out, format, &record, &human)?;
    Ok(EXIT_OK)
}

fn parse_checkers(text: &str) -> Result<Vec<LemmaId>, Failure> {
    if text.trim().eq_ignore_ascii_case("all") {
        return Ok(LemmaId::PER_SEMIGROUP.to_vec());
    }
    let mut ids = Vec::new();
    for part in text.split(',').filter(|p| !p.trim().is_empty()) {
        let id: LemmaId = part.parse().map_err(invalid)?;
        if id == LemmaId::Gener {
            return Err(invalid("GENER runs through the `gas` command"));
        }
        if !ids.contains(&id) {
            ids.push(id);
        }
    }
    if ids.is_empty() {
        return Err(invalid("no checkers selected"));
    }
    ids.sort();
    Ok(ids)
}

/// Runs the selected checkers over the tree and records the minimum Wilf
/// slack of every accepted semigroup.
pub fn verify(
    enumerator: &Enumerator,
    checkers: &[LemmaId],
    filter: Filter,
) -> crate::Result<VerificationSummary> {
    enumerator.run_filtered(
        |s| filter.accepts(s),
        |s, acc| {
            let evidence = Evidence::new(s)?;
            acc.observe_slack(evidence.wilf.slack_direct, s);
            for &id in checkers {
                acc.record(&evidence.check(id)?);
            }
            Ok(())
        },
    )
}

pub fn summary_record(
    summary: &VerificationSummary,
    max_genus: u64,
    checkers: &[LemmaId],
    filter: &str,
    timestamp: u64,
) -> Value {
    let stats: serde_json::Map<String, Value> = summary
        .checker_stats
        .iter()
        .map(|(id, s)| {
            (
                id.to_string(),
                json!({
                    "checked": s.checked,
                    "hypothesis_met": s.hypothesis_met,
                    "counterexamples": s.counterexamples.len(),
                }),
            )
        })
        .collect();
    let (min_slack, witness) = match &summary.wilf_min_slack {
        Some(m) => (json!(m.slack), json!(m.witness)),
        None => (Value::Null, Value::Null),
    };
    json!({
        "record": "summary",
        "max_genus": max_genus,
        "filter": filter,
        "checkers": checkers.iter().map(|c| c.as_str()).collect::<Vec<_>>(),
        "genus_counts": summary.genus_counts,
        "total": summary.total(),
        "visited": summary.visited,
        "checker_stats": stats,
        "counterexamples": summary.counterexample_count(),
        "min_slack": min_slack,
        "witness": witness,
        "timestamp": timestamp,
    })
}

fn cmd_verify(args: &VerifyArgs, format: Format, out: &mut dyn Write) -> Result<i32, Failure> {
    let checkers = parse_checkers(&args.checkers)?;
    let mut enumerator = Enumerator::new(args.max_genus).node_limit(args.node_limit);
    if let Some(jobs) = args.jobs {
        if jobs == 0 {
            return Err(invalid("--jobs must be at least 1"));
        }
        enumerator = enumerator.jobs(jobs);
    }
    let summary = verify(&enumerator, &checkers, args.filter)?;

    for (id, stats) in &summary.checker_stats {
        for gens in &stats.counterexamples {
            let record = json!({
                "record": "counterexample",
                "lemma_id": id,
                "gens": gens,
                "hypothesis_met": true,
                "conclusion_met": false,
            });
            let human = [("counterexample", format!("{id} {}", list(gens)))];
            emit(out, format, &record, &human)?;
        }
    }

    let record = summary_record(
        &summary,
        args.max_genus,
        &checkers,
        &args.filter.name(),
        timestamp(),
    );
    let mut human = vec![
        ("genus_counts", list(&summary.genus_counts)),
        ("total", summary.total().to_string()),
        ("visited", summary.visited.to_string()),
    ];
    let stat_lines: Vec<(String, String)> = summary
        .checker_stats
        .iter()
        .map(|(id, s)| {
            (
                id.to_string(),
                format!(
                    "checked {}, hypothesis met {}, counterexamples {}",
                    s.checked,
                    s.hypothesis_met,
                    s.counterexamples.len()
                ),
            )
        })
        .collect();
    for (k, v) in &stat_lines {
        human.push((k.as_str(), v.clone()));
    }
    if let Some(m) = &summary.wilf_min_slack {
        human.push(("min_slack", m.slack.to_string()));
        human.push(("witness", list(&m.witness)));
    }
    human.push((
        "counterexamples",
        summary.counterexample_count().to_string(),
    ));
    emit(out, format, &record, &human)?;

    let violated = summary.wilf_min_slack.as_ref().is_some_and(|m| m.slack < 0);
    Ok(if summary.counterexample_count() == 0 && !violated {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    })
}

fn cmd_gas(args: &GasArgs, format: Format, out: &mut dyn Write) -> Result<i32, Failure> {
    let m = parse_range(&args.m).map_err(invalid)?;
    let h = parse_range(&args.h).map_err(invalid)?;
    let d = parse_range(&args.d).map_err(invalid)?;
    let l = args
        .l
        .as_deref()
        .map(parse_range)
        .transpose()
        .map_err(invalid)?;

    // A fully pinned spec is validated so the user sees why it is rejected.
    if m.0 == m.1 && h.0 == h.1 && d.0 == d.1 {
        let probe_l = l.map_or(1, |r| r.0);
        let probe = GasSpec {
            m: m.0,
            h: h.0,
            d: d.0,
            l: probe_l,
        };
        if let Err(e) = probe.validate() {
            return Err(e.into());
        }
    }

    let mut count = 0u64;
    let mut all_hold = true;
    for spec in GasSpec::grid(m, h, d, l) {
        let o = GasOutcome::new(&spec)?;
        count += 1;
        all_hold &= o.holds();
        let record = json!({
            "record": "gas",
            "m": spec.m,
            "h": spec.h,
            "d": spec.d,
            "l": spec.l,
            "gens": o.gens,
            "nu": o.nu,
            "t_computed": o.t_computed,
            "t_formula": o.t_formula,
            "match": o.matches,
            "slack": o.slack,
            "satisfied": o.satisfied,
        });
        match format {
            Format::Jsonl => writeln!(out, "{record}")?,
            Format::Human => writeln!(
                out,
                "gens: {}, t_computed: {}, t_formula: {}, match: {}, nu: {}, slack: {}, wilf: {}",
                list(&o.gens),
                o.t_computed,
                o.t_formula,
                o.matches,
                o.nu,
                o.slack,
                if o.satisfied { "satisfied" } else { "violated" }
            )?,
        }
    }
    if count == 0 {
        return Err(invalid(
            "no valid generalized arithmetic sequence in the given ranges",
        ));
    }
    let summary = json!({ "record": "summary", "count": count, "all_hold": all_hold });
    emit(
        out,
        format,
        &summary,
        &[
            ("count", count.to_string()),
            ("all_hold", all_hold.to_string()),
        ],
    )?;
    Ok(if all_hold { EXIT_OK } else { EXIT_VIOLATION })
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    match &cli.command {
        Command::Invariants(g) => cmd_invariants(&construct(&g.gens)?, cli.format, out),
        Command::Wilf(g) => cmd_wilf(&construct(&g.gens)?, cli.format, out),
        Command::Profile(g) => cmd_profile(&construct(&g.gens)?, cli.format, out),
        Command::Verify(v) => cmd_verify(v, cli.format, out),
        Command::Gas(g) => cmd_gas(g, cli.format, out),
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code. Diagnostics go to stderr.
pub fn run<I, T>(args: I, stdout: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
        }
    };
    let result = match &cli.out {
        Some(path) => File::create(path).map_err(Failure::from).and_then(|file| {
            let mut writer = BufWriter::new(file);
            let code = dispatch(&cli, &mut writer)?;
            writer.flush()?;
            Ok(code)
        }),
        None => dispatch(&cli, stdout),
    };
    match result {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            failure.code
        }
    }
}
