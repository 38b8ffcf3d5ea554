//! Run configuration, report records and the command implementations behind the
//! `qgroup` binary.

mod commands;
mod config;
mod report;

pub use commands::{cmd_frobenius_check, cmd_linkage, cmd_triple_verify};
pub use config::{OutputFormat, RunConfig, Suite, DEFAULT_SEED};
pub use report::{Artifacts, Check, Report, Status, SCHEMA_VERSION};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CliError {
    #[error("bad configuration: {0}")]
    Config(String),
    #[error("bad input: {0}")]
    Input(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl CliError {
    /// Usage and input problems all exit with 2.
    pub fn exit_code(&self) -> i32 {
        2
    }
}
