//! Output plumbing shared by the subcommands.

use clap::ValueEnum;
use std::path::PathBuf;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Csv,
    Json,
    Svg,
}

/// Usage errors exit 2, invariant violations and runtime failures exit 1.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failure(String),
}

impl From<cmconic::Error> for CliError {
    fn from(e: cmconic::Error) -> Self {
        match e {
            cmconic::Error::Parse { .. }
            | cmconic::Error::InvalidParams(_)
            | cmconic::Error::NotCoprime { .. } => CliError::Usage(e.to_string()),
            other => CliError::Failure(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Failure(e.to_string())
    }
}

/// Writes to `--out FILE` when given, stdout otherwise.
pub fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

/// Parses `a:b` display windows.
pub fn parse_window(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| format!("window must look like a:b, got `{s}`"))?;
    let lo: i64 = a.trim().parse().map_err(|_| format!("bad window bound `{a}`"))?;
    let hi: i64 = b.trim().parse().map_err(|_| format!("bad window bound `{b}`"))?;
    if lo > hi {
        return Err(format!("window is empty: {lo} > {hi}"));
    }
    Ok((lo, hi))
}
