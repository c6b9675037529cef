use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde_json::json;
use tcorelab::expr::series_expr;
use tcorelab::tables::render_table;
use tcorelab::{enumeration_bound_from_env, run_check, search_counterexample, verify_all, CheckReport, RunConfig, VerifyError};
use tcorelab_core::cores::{phi1, phi2};
use tcorelab_core::{Partition, Statistic};

/// Exact checks of partition statistics, t-cores and q-series identities.
#[derive(Parser)]
#[command(name = "tcorelab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one statistic on a partition.
    Stat {
        #[arg(long)]
        stat: Statistic,
        /// Comma-separated parts, e.g. 4,2,1. Empty for the empty partition.
        #[arg(long, allow_hyphen_values = true)]
        partition: Partition,
    },
    /// t-core, t-quotient and n-vector of a partition.
    Decompose {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        t: u64,
        #[arg(long)]
        partition: Partition,
    },
    /// Print one of the two weight-9 tables.
    Table {
        #[arg(long)]
        name: String,
        #[arg(long)]
        json: bool,
    },
    /// Run registry checks.
    Verify(VerifyArgs),
    /// Search for a counterexample.
    Search {
        #[arg(long)]
        family: String,
        #[arg(long)]
        max_weight: usize,
    },
    /// Print the first coefficients of a named series.
    Series {
        #[arg(long)]
        expr: String,
        #[arg(long)]
        order: usize,
    },
}

#[derive(Args)]
#[command(group(ArgGroup::new("target").required(true).args(["check", "all"])))]
struct VerifyArgs {
    #[arg(long)]
    check: Option<String>,
    #[arg(long)]
    all: bool,
    #[arg(long, requires = "check")]
    max_n: Option<usize>,
    #[arg(long, requires = "check")]
    order: Option<usize>,
}

const USAGE: u8 = 2;

fn emit(report: &CheckReport) {
    println!("{}", serde_json::to_string(report).expect("reports serialize"));
}

fn summary(reports: &[CheckReport]) -> ExitCode {
    let failed: Vec<&str> = reports.iter().filter(|r| !r.status.is_success()).map(|r| r.id.as_str()).collect();
    for r in reports {
        eprintln!("{:<14} {:<22} checked {}", r.id, serde_json::to_value(r.status).expect("status").as_str().unwrap_or("?"), r.checked);
    }
    eprintln!("{} of {} passed", reports.len() - failed.len(), reports.len());
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        eprintln!("failed: {}", failed.join(", "));
        ExitCode::from(1)
    }
}

fn usage_error(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(USAGE)
}

fn run(cli: Cli) -> Result<ExitCode, VerifyError> {
    let bound = enumeration_bound_from_env()?;
    match cli.command {
        Command::Stat { stat, partition } => {
            let value = stat.evaluate(&partition)?;
            println!("{}", json!({ "stat": stat.name(), "partition": partition.to_csv(), "value": value }));
        }
        Command::Decompose { t, partition } => {
            let t = t as usize;
            let cq = phi1(&partition, t)?;
            let n = phi2(&cq.core, t)?;
            println!(
                "{}",
                json!({
                    "t": t,
                    "partition": partition.to_csv(),
                    "core": cq.core.to_csv(),
                    "quotient": cq.quotient.iter().map(Partition::to_csv).collect::<Vec<_>>(),
                    "nvector": n.coords(),
                })
            );
        }
        Command::Table { name, json } => print!("{}", render_table(&name, json, bound)?),
        Command::Verify(v) => {
            let reports = match v.check {
                Some(id) => {
                    let cfg = RunConfig { max_n: v.max_n, order: v.order, bound };
                    match run_check(&id, &cfg) {
                        Ok(r) => vec![r],
                        Err(e @ VerifyError::UnknownCheck(_)) => return Err(e),
                        Err(e) => {
                            eprintln!("error: {e}");
                            return Ok(ExitCode::from(1));
                        }
                    }
                }
                None => verify_all(bound),
            };
            reports.iter().for_each(emit);
            return Ok(summary(&reports));
        }
        Command::Search { family, max_weight } => {
            let r = search_counterexample(&family, max_weight)?;
            emit(&r);
            return Ok(summary(&[r]));
        }
        Command::Series { expr, order } => println!("{}", series_expr(&expr, order)?),
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    run(cli).unwrap_or_else(usage_error)
}
