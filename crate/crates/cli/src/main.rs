//! `lzsing`: F-purity and tangent modules of surface singularities.
//!
//! Exit codes: 0 success, 1 a verification reported a mismatch, 2 invalid
//! input, 3 `f` does not vanish at the origin, 4 S-pair budget exhausted.

mod commands;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use lzsing_core::{Error, StdOptions};

#[derive(Parser)]
#[command(name = "lzsing", version, about = "F-purity and tangent modules of surface singularities in characteristic p")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze the germ of {f = 0} at the origin.
    Check {
        /// Polynomial in x, y, z (and `a` over an extension field).
        f: String,
        #[arg(short = 'p', long = "char")]
        p: u64,
        /// Minimal polynomial of the extension generator `a`, e.g. "a^2-a-1".
        #[arg(long)]
        ext: Option<String>,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = StdOptions::default().pair_budget)]
        pair_budget: usize,
    },
    /// Compare computed verdicts for all normal forms in characteristic p
    /// with the published ones.
    Table {
        #[arg(short = 'p', long = "char")]
        p: u32,
        /// Largest family parameter (at most 12).
        #[arg(long, default_value_t = 8)]
        max_n: u32,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = StdOptions::default().pair_budget)]
        pair_budget: usize,
    },
    /// Determinant of the intersection matrix and tameness.
    Tame {
        /// A, D or E.
        ade_type: String,
        n: u32,
        p: u32,
    },
    /// Pull back v^-n dv along v = w^2/(u(u+1)) and compare with the closed form.
    Pullback {
        n: u32,
        #[arg(short = 'p', long = "char", default_value_t = 2)]
        p: u32,
    },
    /// Pairing matrix of dy/y, dx/x against the tangent basis of D_{2n}^{n-1}
    /// in characteristic 2.
    Pair {
        n: u32,
        #[arg(long, default_value_t = StdOptions::default().pair_budget)]
        pair_budget: usize,
    },
    /// Export the catalog with computed verdicts as JSON.
    Catalog {
        /// Characteristics to include.
        #[arg(short = 'p', long = "char", value_delimiter = ',', default_values_t = [2u32, 3, 5, 7])]
        p: Vec<u32>,
        #[arg(long, default_value_t = 8)]
        max_n: u32,
        #[arg(long, default_value_t = StdOptions::default().pair_budget)]
        pair_budget: usize,
    },
}

/// Outcome of a command that ran to completion.
pub enum Outcome {
    Ok,
    Mismatch,
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::NotAtOrigin => 3,
        Error::ResourceLimit(_) => 4,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check { f, p, ext, json, pair_budget } => {
            commands::check(&f, p, ext.as_deref(), json, StdOptions { pair_budget })
        }
        Command::Table { p, max_n, json, pair_budget } => commands::table(p, max_n, json, StdOptions { pair_budget }),
        Command::Tame { ade_type, n, p } => commands::tame(&ade_type, n, p),
        Command::Pullback { n, p } => commands::pullback(n, p),
        Command::Pair { n, pair_budget } => commands::pair(n, StdOptions { pair_budget }),
        Command::Catalog { p, max_n, pair_budget } => commands::catalog(&p, max_n, StdOptions { pair_budget }),
    };
    match result {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
