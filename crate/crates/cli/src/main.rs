//! `quadpart` — enumerate, count, and verify partition identities
//! over real quadratic fields.
//!
//! Every verification subcommand emits fixed-column report rows
//! (`field, target, check, lhs, rhs, verdict, millis`) in canonical
//! order and exits nonzero iff any verdict is `unequal`. See
//! `README.md` for the element syntax and the check vocabulary.

mod job;
mod rows;
mod run;

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use quadpart::par::Width;
use quadpart::{FieldCtx, QuadInt};

use rows::{sort_rows, write_rows, OutFormat, Row};
use run::{resolve_targets, run_checks, Check};

#[derive(Parser)]
#[command(
    name = "quadpart",
    version,
    about = "Exact partition counting and identity verification over Q(sqrt(d))"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Target selection shared by the per-element verification commands.
#[derive(Args)]
struct Select {
    /// Radicand of the field (squarefree, >= 2).
    #[arg(long)]
    d: i64,
    /// Target element (canonical text `x+y*w@d` or a bare integer);
    /// may be repeated.
    #[arg(long)]
    target: Vec<String>,
    /// Also take every totally positive element with trace <= this.
    #[arg(long)]
    trace_max: Option<i64>,
    /// Parallelism width: 1 = sequential (default), 0 = all cores.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

/// Output destination and format.
#[derive(Args)]
struct Emit {
    /// Output format for report rows.
    #[arg(long, value_enum, default_value_t = OutFormat::Csv)]
    format: OutFormat,
    /// Write rows to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// List every totally positive element below a target, in
    /// canonical order.
    Downset {
        /// Radicand of the field.
        #[arg(long)]
        d: i64,
        /// The bounding element.
        #[arg(long)]
        target: String,
    },
    /// List every partition of a target, optionally restricted to a
    /// class, one per line (largest part first).
    Partitions {
        /// Radicand of the field.
        #[arg(long)]
        d: i64,
        /// The element to partition.
        #[arg(long)]
        target: String,
        /// Class restriction (all | sylA:k=.. | sylB:k=.. |
        /// gorA:k=..,i=.. | gorB:k=..,i=.. | modp:parts=14|23 |
        /// modp:shape=1|2).
        #[arg(long, default_value = "all")]
        class: String,
    },
    /// Count partitions by two independent routes and report both.
    Count {
        #[command(flatten)]
        select: Select,
        /// Class restriction (same syntax as `partitions --class`).
        #[arg(long, default_value = "all")]
        class: String,
        #[command(flatten)]
        emit: Emit,
    },
    /// Verify the odd-parts vs distinct-parts refinement at level k.
    VerifySylvester {
        #[command(flatten)]
        select: Select,
        /// Refinement level (number of distinct parts / runs).
        #[arg(long)]
        k: i64,
        #[command(flatten)]
        emit: Emit,
    },
    /// Verify the Gordon congruence-vs-difference identity.
    VerifyGordon {
        #[command(flatten)]
        select: Select,
        /// Gordon level (k >= 2).
        #[arg(long)]
        k: i64,
        /// Comma-separated indices in 1..=k (default: all of them).
        #[arg(long)]
        i: Option<String>,
        #[command(flatten)]
        emit: Emit,
    },
    /// Verify both Rogers-Ramanujan cases (Gordon level 2).
    VerifyRr {
        #[command(flatten)]
        select: Select,
        #[command(flatten)]
        emit: Emit,
    },
    /// Verify the mod-5 count equalities and generating functions;
    /// reports a skipped row when 5 does not split in the field.
    VerifyModp {
        #[command(flatten)]
        select: Select,
        #[command(flatten)]
        emit: Emit,
    },
    /// Verify a truncated q-sum identity.
    VerifyQsum {
        #[command(subcommand)]
        mode: QsumMode,
    },
    /// Run a JSON job file; output is byte-identical across widths.
    Batch {
        /// Path to the job file.
        #[arg(long)]
        config: PathBuf,
        /// Override the job file's parallelism width.
        #[arg(long)]
        jobs: Option<usize>,
        /// Write rows to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum QsumMode {
    /// Classical bivariate expansion check over integer exponents;
    /// reports the standard reading against the shortened-factor one.
    Cauchy {
        /// Exponent truncation.
        #[arg(long, default_value_t = 15)]
        bound: i64,
        /// Cap on powers of the first marker.
        #[arg(long, default_value_t = 5)]
        k: u16,
        /// Cap on powers of the second marker.
        #[arg(long, default_value_t = 5)]
        i: u16,
        #[command(flatten)]
        emit: Emit,
    },
    /// Triangular-number sum check: classical when --d is absent,
    /// lifted to the field when --d is given (--bound is then element
    /// text).
    Leveque {
        /// Field radicand; selects the lifted form.
        #[arg(long)]
        d: Option<i64>,
        /// Truncation: an integer (classical) or element text (lifted).
        #[arg(long, default_value = "20")]
        bound: String,
        /// Cap on powers of the marker.
        #[arg(long, default_value_t = 6)]
        k: u16,
        #[command(flatten)]
        emit: Emit,
    },
    /// Gordon generating-function identity at a field truncation.
    GordonGf {
        /// Radicand of the field.
        #[arg(long)]
        d: i64,
        /// Truncation element.
        #[arg(long)]
        bound: String,
        /// Gordon level (k >= 2).
        #[arg(long)]
        k: i64,
        /// Gordon index in 1..=k.
        #[arg(long)]
        i: i64,
        #[command(flatten)]
        emit: Emit,
    },
    /// Bivariate Sylvester expansion over one section, checked
    /// against both classical counters.
    SylvesterGf {
        /// Radicand of the field.
        #[arg(long)]
        d: i64,
        /// Section generator (a primitive element; default 1).
        #[arg(long, default_value = "1")]
        target: String,
        /// Truncation element.
        #[arg(long)]
        bound: String,
        /// Cap on marker powers (largest level probed).
        #[arg(long, default_value_t = 4)]
        k: u16,
        #[command(flatten)]
        emit: Emit,
    },
}

fn parse_element(d: i64, text: &str) -> anyhow::Result<QuadInt> {
    let ctx = FieldCtx::new(d)?;
    let element =
        QuadInt::parse_in(ctx, text).with_context(|| format!("parsing element {text:?}"))?;
    Ok(element)
}

fn parse_index_list(text: Option<&str>, k: i64) -> anyhow::Result<Vec<i64>> {
    match text {
        None => Ok((1..=k).collect()),
        Some(t) => t
            .split(',')
            .map(|piece| {
                piece
                    .trim()
                    .parse::<i64>()
                    .with_context(|| format!("bad index {piece:?}"))
            })
            .collect(),
    }
}

/// Sorts, emits, reports to stderr, and converts verdicts to an exit
/// code.
fn finish(mut rows: Vec<Row>, emit: &Emit, started: Instant) -> anyhow::Result<ExitCode> {
    sort_rows(&mut rows);
    match &emit.out {
        Some(path) => {
            let mut file =
                File::create(path).with_context(|| format!("creating {}", path.display()))?;
            write_rows(&mut file, emit.format, &rows)?;
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            write_rows(&mut lock, emit.format, &rows)?;
            lock.flush()?;
        }
    }
    let unequal = rows
        .iter()
        .filter(|r| r.verdict == rows::Verdict::Unequal)
        .count();
    eprintln!(
        "{} rows, {} unequal, {} ms",
        rows.len(),
        unequal,
        started.elapsed().as_millis()
    );
    Ok(if unequal == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn run_select(select: &Select, checks: &[Check]) -> anyhow::Result<Vec<Row>> {
    let ctx = FieldCtx::new(select.d)?;
    let targets = resolve_targets(ctx, &select.target, select.trace_max)?;
    run_checks(Width::from_jobs(select.jobs), &targets, checks)
}

fn dispatch(command: Command, started: Instant) -> anyhow::Result<ExitCode> {
    match command {
        Command::Downset { d, target } => {
            let delta = parse_element(d, &target)?;
            for e in delta.downset()? {
                println!("{e}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Partitions { d, target, class } => {
            let delta = parse_element(d, &target)?;
            let n = run::print_partitions(&delta, &class)?;
            eprintln!("{n} partitions, {} ms", started.elapsed().as_millis());
            Ok(ExitCode::SUCCESS)
        }
        Command::Count {
            select,
            class,
            emit,
        } => {
            let rows = run_select(&select, &[Check::Count(class)])?;
            finish(rows, &emit, started)
        }
        Command::VerifySylvester { select, k, emit } => {
            let rows = run_select(&select, &[Check::Sylvester { k }])?;
            finish(rows, &emit, started)
        }
        Command::VerifyGordon { select, k, i, emit } => {
            let checks: Vec<Check> = parse_index_list(i.as_deref(), k)?
                .into_iter()
                .map(|i| Check::Gordon { k, i })
                .collect();
            let rows = run_select(&select, &checks)?;
            finish(rows, &emit, started)
        }
        Command::VerifyRr { select, emit } => {
            let rows = run_select(&select, &[Check::Rr])?;
            finish(rows, &emit, started)
        }
        Command::VerifyModp { select, emit } => {
            let rows = run_select(&select, &[Check::ModP, Check::ModPGf])?;
            finish(rows, &emit, started)
        }
        Command::VerifyQsum { mode } => match mode {
            QsumMode::Cauchy { bound, k, i, emit } => {
                finish(run::cauchy_rows(bound, k, i)?, &emit, started)
            }
            QsumMode::Leveque { d, bound, k, emit } => {
                let rows = match d {
                    None => {
                        let n: i64 = bound
                            .parse()
                            .context("classical --bound must be an integer (or pass --d)")?;
                        run::leveque_rows(n, k)?
                    }
                    Some(d) => {
                        let delta = parse_element(d, &bound)?;
                        run::leveque_lift_rows(&delta, k)?
                    }
                };
                finish(rows, &emit, started)
            }
            QsumMode::GordonGf {
                d,
                bound,
                k,
                i,
                emit,
            } => {
                let delta = parse_element(d, &bound)?;
                let rows = run_checks(Width::Sequential, &[delta], &[Check::GordonGf { k, i }])?;
                finish(rows, &emit, started)
            }
            QsumMode::SylvesterGf {
                d,
                target,
                bound,
                k,
                emit,
            } => {
                let gamma = parse_element(d, &target)?;
                let delta = parse_element(d, &bound)?;
                finish(run::sylvester_gf_rows(&gamma, &delta, k)?, &emit, started)
            }
        },
        Command::Batch { config, jobs, out } => {
            let spec = job::JobSpec::load(&config)?;
            let (rows, format) = spec.run(jobs)?;
            let emit = Emit { format, out };
            finish(rows, &emit, started)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    match dispatch(cli.command, started) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}
