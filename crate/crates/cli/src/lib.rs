//! Command-line front end for `cicy-core`: the text matrix format, JSON
//! reports and chain documents, the catalog of worked examples, and the
//! subcommands of the `cicy` binary.

pub mod catalog;
pub mod commands;
pub mod json;
pub mod text;

pub use commands::{execute, Cli, Command, Outcome, Style};
