mod cli;
mod commands;
mod report;
mod state_spec;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use hvdiscord::Error;

use crate::cli::{Cli, Command, Emit};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Degenerate(String),
    Io(std::io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::ConditioningOnNullEvent | Error::DegenerateConfiguration(_) => CliError::Degenerate(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Degenerate(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "error: {m}"),
            CliError::Degenerate(m) => write!(f, "{m}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

fn run(cli: Cli, echo: Vec<String>) -> Result<bool, CliError> {
    let g = &cli.global;
    let report = match cli.command {
        Command::VerifyBell { samples, mc_samples } => commands::verify_bell(g, echo, samples, mc_samples)?,
        Command::Conflict { s, n, m } => commands::conflict(g, echo, s, n, m)?,
        Command::Linearity { lambda, n, m, s } => commands::linearity(g, echo, lambda, n, m, s)?,
        Command::Discord { state, grid, landscape } => commands::discord(g, echo, &state, grid, landscape.as_deref())?,
        Command::Rigidity { mode, trials } => commands::rigidity(g, echo, mode, trials)?,
        Command::Unified { m, n, s } => commands::unified(g, echo, m, n, s)?,
    };
    let bytes = match g.emit {
        Emit::Json => {
            let mut b = serde_json::to_vec_pretty(&report.to_json()).expect("report serializes");
            b.push(b'\n');
            b
        }
        Emit::Csv => report.to_csv().map_err(CliError::Io)?,
    };
    match &g.out {
        Some(path) => std::fs::write(path, bytes).map_err(CliError::Io)?,
        None => std::io::stdout().write_all(&bytes).map_err(CliError::Io)?,
    }
    Ok(report.passed())
}

fn main() -> ExitCode {
    let echo: Vec<String> = std::env::args().skip(1).collect();
    let cli = Cli::parse();
    if !cli.global.tol.is_finite() || cli.global.tol < 0.0 {
        eprintln!("error: --tol must be a finite non-negative number");
        return ExitCode::from(2);
    }
    match run(cli, echo) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code())
        }
    }
}
