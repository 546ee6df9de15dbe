use std::io::{IsTerminal, Write};
use std::process::ExitCode;

use cicy::{execute, Cli, Style};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let style = Style {
        color: std::env::var_os("CICY_NO_COLOR").is_none() && std::io::stdout().is_terminal(),
    };
    let outcome = execute(&cli.command, &mut std::io::stdin().lock(), style);
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
