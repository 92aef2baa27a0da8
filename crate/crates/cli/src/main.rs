//! `tfk`: generators, tube reduction, exact independence and invariant
//! suites for triangle-free plane graphs.
//!
//! Exit codes: 0 success, 1 a checked property failed, 2 usage or parse error.

mod commands;
mod error;
mod verify;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use error::CliError;

#[derive(Parser)]
#[command(name = "tfk", version, about = "Toolkit for triangle-free plane graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a member of a graph family as a plr file.
    Generate {
        /// tw, rtw, st, patched or grid.
        #[arg(long)]
        family: String,
        #[arg(long)]
        k: usize,
        /// Output file; the graph goes to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Reduce every clean 5-tube and write the kernel.
    Reduce {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Compute the independence number with a witness.
    Alpha {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Decide whether 3α(G) >= |G| + a on the reduced kernel.
    Decide {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        excess: i64,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Run an invariant suite.
    Verify {
        /// euler, deltagood, margin, coltw, extend, kernel, alpha or tightness.
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        count: Option<usize>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Print size, face and degree statistics and the clean-tube census.
    Stats {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

fn write_report<T: Serialize>(path: Option<&Path>, value: &T) -> Result<(), CliError> {
    if let Some(p) = path {
        let mut text = serde_json::to_string_pretty(value)?;
        text.push('\n');
        commands::write_text(p, &text)?;
    }
    Ok(())
}

fn census_line(census: &std::collections::BTreeMap<usize, usize>) -> String {
    census
        .iter()
        .map(|(len, n)| format!("{len}:{n}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Generate { family, k, out, report } => {
            let (text, rep) = commands::generate(&family, k)?;
            let summary = format!(
                "{family} k={k}: n={} edges={} faces {}",
                rep.n,
                rep.edges,
                census_line(&rep.face_census)
            );
            match &out {
                Some(p) => {
                    commands::write_text(p, &text)?;
                    println!("{summary}");
                }
                None => {
                    print!("{text}");
                    eprintln!("{summary}");
                }
            }
            write_report(report.as_deref(), &rep)
        }
        Command::Reduce { input, out, report } => {
            let g = commands::read_graph(&input)?;
            let (kernel, rep) = commands::reduce(&g)?;
            if let Some(p) = &out {
                commands::write_text(p, &tfkernel::plr::write(&kernel))?;
            }
            println!(
                "n {} -> {} in {} steps, kernel faces {}",
                rep.report.initial_n,
                rep.report.final_n,
                rep.report.steps.len(),
                census_line(&rep.kernel_face_census)
            );
            write_report(report.as_deref(), &rep)
        }
        Command::Alpha { input, report } => {
            let g = commands::read_graph(&input)?;
            let r = commands::alpha(&g)?;
            println!("alpha {} (n={}, {} nodes)", r.value, g.n(), r.nodes);
            println!("witness {:?}", r.witness);
            write_report(report.as_deref(), &r)
        }
        Command::Decide { input, excess, report } => {
            let g = commands::read_graph(&input)?;
            let r = commands::decide(&g, excess)?;
            println!(
                "{} (3α - n = {} on a {}-vertex kernel after {} steps)",
                r.answer, r.excess, r.kernel_n, r.reduction_steps
            );
            write_report(report.as_deref(), &r)
        }
        Command::Verify {
            suite,
            seed,
            count,
            report,
        } => {
            if !verify::SUITES.contains(&suite.as_str()) {
                return Err(CliError::UnknownSuite(suite));
            }
            let count = count.unwrap_or_else(|| verify::default_count(&suite));
            let r = verify::run(&suite, seed, count)?;
            for i in r.instances.iter().filter(|i| !i.ok) {
                println!("FAIL #{} {}: {}", i.index, i.name, i.detail);
            }
            println!("{}: {} passed, {} failed", r.suite, r.passed, r.failed);
            write_report(report.as_deref(), &r)?;
            if r.failed > 0 {
                return Err(CliError::Violation(format!("{} instances failed", r.failed)));
            }
            Ok(())
        }
        Command::Stats { input, report } => {
            let g = commands::read_graph(&input)?;
            let s = commands::stats(&g)?;
            println!("n={} edges={} triangle-free={}", s.n, s.edges, s.triangle_free);
            println!("faces {}", census_line(&s.face_census));
            println!("degrees {:?}", s.degree_histogram);
            println!("degree <= 4 fraction {:.4}", s.low_degree_fraction);
            if let Some(t) = &s.tube_census {
                println!("clean tubes k = {t:?}");
            }
            write_report(report.as_deref(), &s)?;
            if s.triangle_free && s.low_degree_fraction < 0.2 {
                return Err(CliError::Violation(
                    "fewer than n/5 vertices of degree at most 4".into(),
                ));
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
