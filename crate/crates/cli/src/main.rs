use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use nvk_core::io::{parse_spec, write_spec, ReportFile};
use nvk_core::model::{check_ids, expand_ids, profile, Binding, CheckOptions};
use nvk_core::{Error, Report};

mod construct;
mod search;

#[derive(Parser)]
#[command(name = "nvk", version, about = "Exact checks and constructions for noncommutative Novikov structures")]
struct Cli {
    /// Worker threads (overrides NVK_THREADS).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a spec file against a profile or a list of identities.
    Check {
        spec: PathBuf,
        #[arg(long, conflicts_with = "identity", required_unless_present = "identity")]
        profile: Option<String>,
        /// Comma-separated ids; ranges like NN-BI-1..4 are expanded.
        #[arg(long)]
        identity: Option<String>,
        /// Role bindings, e.g. "prec=lhd1,succ=rhd1".
        #[arg(long)]
        bind: Option<String>,
        #[arg(long, default_value_t = 16)]
        witnesses: usize,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Build a structure and verify its contract.
    Construct(construct::Args),
    /// Enumerate antisymmetric Yang-Baxter solutions over a grid.
    Search(search::Args),
}

/// Exit code 1: some identity failed.
pub(crate) const FAILED: u8 = 1;
/// Exit code 2: unreadable or inconsistent input.
pub(crate) const INPUT: u8 = 2;
/// Exit code 3: search refused by the budget.
pub(crate) const BUDGET: u8 = 3;

pub(crate) fn exit_code(e: &Error) -> u8 {
    match e {
        Error::PreconditionFailed { .. }
        | Error::NybeNonzero(_)
        | Error::Degenerate(_)
        | Error::Inconsistent(_) => FAILED,
        Error::BudgetExceeded { .. } => BUDGET,
        _ => INPUT,
    }
}

/// Prints one line per report and returns whether all passed.
pub(crate) fn summarize(reports: &[Report]) -> bool {
    for r in reports {
        if r.passed() {
            println!("PASS {}", r.label());
        } else {
            let first = r
                .witnesses
                .first()
                .map(|w| {
                    let res: Vec<String> = w.residual.iter().map(ToString::to_string).collect();
                    format!(" at {:?}: [{}]", w.tuple, res.join(", "))
                })
                .unwrap_or_default();
            println!("FAIL {} ({} violations){first}", r.label(), r.violations);
        }
    }
    let file = ReportFile::new(reports.to_vec());
    println!("{} passed, {} failed", file.passed, file.failed);
    file.failed == 0
}

pub(crate) fn write_report(path: Option<&Path>, reports: &[Report]) -> anyhow::Result<()> {
    if let Some(p) = path {
        ReportFile::new(reports.to_vec()).write(p)?;
    }
    Ok(())
}

/// Reports the error, writing any attached reports, and picks the exit code.
pub(crate) fn fail(e: anyhow::Error, report: Option<&Path>) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(err) => {
            if !err.reports().is_empty() {
                summarize(err.reports());
                if let Err(w) = write_report(report, err.reports()) {
                    eprintln!("error: {w:#}");
                }
            }
            eprintln!("error: {e:#}");
            exit_code(err)
        }
        None => {
            eprintln!("error: {e:#}");
            INPUT
        }
    }
}

pub(crate) fn save(path: &Path, spec: &nvk_core::AlgebraSpec) -> anyhow::Result<()> {
    write_spec(path, spec)?;
    println!("wrote {}", path.display());
    Ok(())
}

fn check(
    spec: &Path,
    profile_name: Option<&str>,
    identity: Option<&str>,
    bind: Option<&str>,
    witnesses: usize,
    report: Option<&Path>,
) -> anyhow::Result<u8> {
    let spec = parse_spec(spec)?;
    let ids: Vec<String> = match (profile_name, identity) {
        (Some(p), _) => profile(p)
            .ok_or_else(|| Error::UnknownProfile(p.to_string()))?
            .iter()
            .map(|s| s.to_string())
            .collect(),
        (None, Some(list)) => expand_ids(list),
        (None, None) => unreachable!("clap requires one of them"),
    };
    let binding = match bind {
        Some(b) => Binding::parse(b)?,
        None => Binding::new(),
    };
    let reports = check_ids(&spec, &ids, &binding, CheckOptions::with_witness_limit(witnesses))?;
    let ok = summarize(&reports);
    write_report(report, &reports)?;
    Ok(if ok { 0 } else { FAILED })
}

fn threads(flag: Option<usize>) -> anyhow::Result<usize> {
    if let Some(n) = flag {
        return Ok(n);
    }
    match std::env::var("NVK_THREADS") {
        Ok(v) => Ok(v.trim().parse().map_err(|_| anyhow::anyhow!("NVK_THREADS={v:?} is not a count"))?),
        Err(_) => Ok(0),
    }
}

fn run(cli: Cli) -> u8 {
    let pool = match threads(cli.threads).and_then(|n| {
        Ok(rayon::ThreadPoolBuilder::new().num_threads(n).build()?)
    }) {
        Ok(p) => p,
        Err(e) => return fail(e, None),
    };
    pool.install(|| match &cli.command {
        Command::Check {
            spec,
            profile,
            identity,
            bind,
            witnesses,
            report,
        } => check(
            spec,
            profile.as_deref(),
            identity.as_deref(),
            bind.as_deref(),
            *witnesses,
            report.as_deref(),
        )
        .unwrap_or_else(|e| fail(e, report.as_deref())),
        Command::Construct(args) => {
            construct::run(args).unwrap_or_else(|e| fail(e, args.report.as_deref()))
        }
        Command::Search(args) => search::run(args).unwrap_or_else(|e| fail(e, args.report.as_deref())),
    })
}

fn main() -> ExitCode {
    ExitCode::from(run(Cli::parse()))
}
