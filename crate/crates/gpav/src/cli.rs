//! Argument definitions and command dispatch.

use std::io::Write;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use gpav_core::oracle::{for_each_avoider, DEFAULT_CEILING, MAX_CEILING};
use gpav_core::Permutation;
use log::info;
use serde_json::json;

use crate::error::{CliError, Result};
use crate::family::FamilySpec;
use crate::methods::{self, Method};
use crate::output::{self, Format};
use crate::report::RunReport;
use crate::sweep::Sweeper;
use crate::verify::{self, Suite, VerifyConfig};

/// Largest `n` listed by `avoiders` without `--force`.
pub const AVOIDERS_GUARD: usize = 7;

#[derive(Parser, Debug)]
#[command(
    name = "gpav",
    version,
    about = "Count permutations avoiding families of dashed patterns"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ListFormat {
    Text,
    Json,
}

#[derive(clap::Args, Debug, Clone, Copy)]
pub struct Workers {
    /// Worker threads for brute-force counting (default: all cores).
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Largest n the brute-force oracle accepts.
    #[arg(long, default_value_t = DEFAULT_CEILING)]
    pub ceiling: usize,
}

impl Workers {
    fn sweeper(&self) -> Result<Sweeper> {
        Sweeper::new(self.ceiling, self.jobs)
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the patterns of a family.
    Patterns {
        #[command(flatten)]
        family: FamilySpec,
        #[arg(long, value_enum, default_value = "text")]
        format: ListFormat,
    },
    /// Count the avoiders of length n.
    Count {
        #[command(flatten)]
        family: FamilySpec,
        #[arg(long)]
        n: usize,
        /// Defaults to the recurrence, then the series, then the oracle.
        #[arg(long, value_enum, conflicts_with = "all_methods")]
        method: Option<Method>,
        /// Run every applicable method and compare.
        #[arg(long)]
        all_methods: bool,
        #[command(flatten)]
        workers: Workers,
    },
    /// Counts for n = 0..=nmax.
    Sequence {
        #[command(flatten)]
        family: FamilySpec,
        #[arg(long)]
        nmax: usize,
        #[arg(long, value_enum)]
        method: Option<Method>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[command(flatten)]
        workers: Workers,
    },
    /// List the avoiders of length n in lexicographic order.
    Avoiders {
        #[command(flatten)]
        family: FamilySpec,
        #[arg(long)]
        n: usize,
        /// Allow n above the listing guard.
        #[arg(long)]
        force: bool,
    },
    /// Run a verification suite and print a JSON report.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 5)]
        kmax: usize,
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        #[arg(long, default_value_t = 12)]
        order: usize,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<()> {
    match &cli.command {
        Command::Patterns { family, format } => {
            let fam = family.resolve()?;
            let text = match format {
                ListFormat::Text => output::family_text(&fam),
                ListFormat::Json => output::family_json(&fam),
            };
            out.write_all(text.as_bytes())?;
        }
        Command::Count {
            family,
            n,
            method,
            all_methods,
            workers,
        } => {
            let fam = family.resolve()?;
            let sweeper = workers.sweeper()?;
            if *all_methods {
                return count_all(&fam, *n, &sweeper, out);
            }
            let method = method.unwrap_or_else(|| methods::default_method(&fam));
            info!("count n={n} by {}", method.name());
            writeln!(out, "{}", methods::count(method, &fam, *n, &sweeper)?)?;
        }
        Command::Sequence {
            family,
            nmax,
            method,
            format,
            workers,
        } => {
            let fam = family.resolve()?;
            let sweeper = workers.sweeper()?;
            let method = method.unwrap_or_else(|| methods::default_method(&fam));
            let seq = methods::sequence(method, &fam, *nmax, &sweeper)?;
            out.write_all(output::sequence(&fam, method.name(), &seq, *format).as_bytes())?;
        }
        Command::Avoiders { family, n, force } => {
            let fam = family.resolve()?;
            if *n > AVOIDERS_GUARD && !force {
                return Err(CliError::Usage(format!(
                    "n = {n} lists up to {n}! permutations; pass --force above {AVOIDERS_GUARD}"
                )));
            }
            if *n > MAX_CEILING {
                return Err(gpav_core::Error::CeilingExceeded {
                    n: *n,
                    ceiling: MAX_CEILING,
                }
                .into());
            }
            let mut shown = 0u64;
            let mut io_err = None;
            for_each_avoider(&fam, *n, &[], |w| {
                if io_err.is_none() {
                    let perm =
                        Permutation::new(w.to_vec()).expect("enumerated words are permutations");
                    if let Err(e) = writeln!(out, "{perm}") {
                        io_err = Some(e);
                    }
                }
                shown += 1;
            })?;
            if let Some(e) = io_err {
                return Err(e.into());
            }
            let noun = if shown == 1 { "avoider" } else { "avoiders" };
            writeln!(out, "({shown} {noun})")?;
        }
        Command::Verify {
            suite,
            kmax,
            nmax,
            order,
            jobs,
        } => {
            let start = Instant::now();
            let cfg = VerifyConfig {
                kmax: *kmax,
                nmax: *nmax,
                order: *order,
            };
            let ceiling = (*nmax).max(verify::SPOT_N);
            let sweeper = Sweeper::new(ceiling, *jobs)?;
            let checks = verify::run(*suite, &cfg, &sweeper)?;
            let params =
                json!({ "suite": suite.name(), "kmax": kmax, "nmax": nmax, "order": order });
            let report = RunReport::new("verify", params, checks, start.elapsed());
            out.write_all(report.to_json().as_bytes())?;
            for c in report.failures() {
                eprintln!("FAIL {} {} {}", c.name, c.params, c.detail);
            }
            if !report.ok() {
                return Err(CliError::Mismatch(format!(
                    "{} of {} checks failed",
                    report.summary.failed,
                    report.checks.len()
                )));
            }
        }
    }
    Ok(())
}

fn count_all(
    fam: &gpav_core::PatternFamily,
    n: usize,
    sweeper: &Sweeper,
    out: &mut dyn Write,
) -> Result<()> {
    let mut results = Vec::new();
    for m in Method::ALL
        .into_iter()
        .filter(|m| methods::applicable(*m, fam))
    {
        if m == Method::Oracle && n > sweeper.oracle().ceiling() {
            writeln!(
                out,
                "{:<10}  skipped (n > ceiling {})",
                m.name(),
                sweeper.oracle().ceiling()
            )?;
            continue;
        }
        let v = methods::count(m, fam, n, sweeper)?;
        writeln!(out, "{:<10}  {v}", m.name())?;
        results.push((m, v));
    }
    let reference = &results[0].1;
    let dissent: Vec<&str> = results
        .iter()
        .filter(|(_, v)| v != reference)
        .map(|(m, _)| m.name())
        .collect();
    if dissent.is_empty() {
        writeln!(out, "consistent")?;
        Ok(())
    } else {
        let msg = format!(
            "inconsistent: {} disagree with {}",
            dissent.join(", "),
            results[0].0.name()
        );
        writeln!(out, "{msg}")?;
        Err(CliError::Mismatch(msg))
    }
}
