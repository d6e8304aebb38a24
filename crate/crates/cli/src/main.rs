//! `refvw`: tables of refined invariants and the verification suites.
//!
//! The thread count for `verify` comes from `REFVW_THREADS` (default: all
//! cores). Output does not depend on it.

mod config;
mod output;
mod suite;
mod tables;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use refined_vw::enriques::SymbolReading;

use config::RunConfig;
use suite::{Item, Suite};
use tables::ClassRange;

#[derive(Parser)]
#[command(name = "refvw", version, about = "Exact refined Vafa-Witten and stable pair invariants")]
struct Cli {
    #[command(flatten)]
    cfg: RunConfig,
    /// Write to FILE instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Reading {
    Literal,
    Swapped,
}

#[derive(Subcommand)]
enum Cmd {
    /// VW, stripped vw and Omega^NO for one class or a box of classes.
    Vw {
        #[arg(long, allow_hyphen_values = true, requires = "n")]
        r: Option<i64>,
        #[arg(long, default_value_t = 0)]
        beta_sq: i64,
        /// Divisibility of beta; 0 for beta = 0 (the default when beta^2 = 0).
        #[arg(long)]
        beta_div: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        n: Option<i64>,
        #[arg(long, default_value_t = 2, conflicts_with = "r")]
        r_max: i64,
        #[arg(long, default_value_t = 8, conflicts_with = "r")]
        square_max: i64,
        #[arg(long, default_value_t = 2, conflicts_with = "r")]
        n_max: i64,
    },
    /// PT slices from the product formula and from Toda's equation.
    Pt,
    /// Run verification suites; the exit code is 1 if any check fails.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::Default)]
        suite: Suite,
        /// Run only these items (repeatable); overrides --suite.
        #[arg(long, value_enum)]
        only: Vec<Item>,
        /// Perturb the product form of the Jacobi identities by p q.
        #[arg(long)]
        corrupt: bool,
        /// How to read the two symbols of the printed beta_2 polynomial.
        #[arg(long, value_enum, default_value_t = Reading::Swapped)]
        beta2_reading: Reading,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(msg) = cli.cfg.validate() {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    let mut out: Box<dyn Write> = match &cli.out {
        Some(p) => Box::new(BufWriter::new(File::create(p).with_context(|| format!("creating {}", p.display()))?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let cfg = &cli.cfg;
    let ok = match cli.cmd {
        Cmd::Vw { r, beta_sq, beta_div, n, r_max, square_max, n_max } => {
            let range = match (r, n) {
                (Some(r), Some(n)) => ClassRange::Single { r, beta_sq, beta_div, n },
                _ => ClassRange::Box { r_max, square_max, n_max },
            };
            output::vw(&mut out, cfg, &tables::vw_table(range)?)?;
            true
        }
        Cmd::Pt => {
            let rows = tables::pt_table(cfg)?;
            output::pt(&mut out, cfg, &rows)?;
            rows.iter().all(|r| r.t1_agree && r.agree != Some(false))
        }
        Cmd::Verify { suite, only, corrupt, beta2_reading } => {
            let items = if only.is_empty() { suite.items() } else { only };
            let reading = match beta2_reading {
                Reading::Literal => SymbolReading::Literal,
                Reading::Swapped => SymbolReading::Swapped,
            };
            let mut pool = rayon::ThreadPoolBuilder::new();
            if let Ok(n) = std::env::var("REFVW_THREADS") {
                pool = pool.num_threads(n.parse().context("REFVW_THREADS must be a number")?);
            }
            let reports = pool.build()?.install(|| suite::run(&items, cfg, corrupt, reading));
            output::reports(&mut out, cfg, &reports)?;
            reports.iter().all(|r| r.passed())
        }
    };
    out.flush()?;
    Ok(ok)
}
