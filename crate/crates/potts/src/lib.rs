//! Command line front end for `potts-core`: subcommands, JSON reports,
//! settings files and graph inputs.
//!
//! Exit codes: 0 for PASS or DATA, 1 for FAIL, 2 for usage, parse and
//! input errors (with a one-line diagnostic on stderr).

pub mod cli;
pub mod commands;
pub mod config;
pub mod inputs;
pub mod report;

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;

use cli::{Cli, Command, LpAction};
use config::Settings;

/// Runs the CLI on `args` (program name first) with the process
/// environment.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_env(args, |k| std::env::var(k).ok(), out, err)
}

pub fn run_with_env<I, T>(
    args: I,
    env: impl Fn(&str) -> Option<String>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let rendered = e.to_string();
                    let line = rendered.lines().next().unwrap_or("error: invalid usage");
                    let _ = writeln!(err, "{line}");
                    2
                }
            };
        }
    };
    let settings = match Settings::load(cli.config.as_deref(), env) {
        Ok(s) => s,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return 2;
        }
    };
    let (result, json) = match &cli.command {
        Command::Views(a) => (commands::views(a, &settings), a.format == cli::Format::Json),
        Command::Stats(a) => (commands::stats(a, &settings), a.json),
        Command::CertifyMin(a) => (commands::certify_min(a), a.json),
        Command::CertifyMax(a) => (commands::certify_max(a), a.json),
        Command::Lp(a) => match &a.action {
            Some(LpAction::Scan(s)) => (commands::lp_scan(s, &settings), s.format == cli::Format::Json),
            None => (commands::lp_solve(a, &settings), a.json),
        },
        Command::Oracle(a) => (commands::oracle(a, &settings), a.json),
        Command::Cycle(a) => (commands::cycle(a, &settings), a.json),
    };
    match result {
        Ok(outcome) => {
            let body = if json { outcome.report.to_json() } else { outcome.text };
            let _ = out.write_all(body.as_bytes());
            outcome.report.verdict.exit_code()
        }
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}
