//! Command-line front end for `rdi-core`.
//!
//! The binary is a thin wrapper over [`run`], which writes everything meant
//! for stdout into the supplied writer so that tests can capture it.

use std::io::Write;
use std::path::PathBuf;

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod format;
pub mod point;

pub use args::Cli;
pub use error::{CliError, Result};

/// Environment variable naming the default output directory.
pub const OUTPUT_DIR_VAR: &str = "RDI_OUTPUT_DIR";

/// How a successful run ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    ValidationFailed,
}

impl Outcome {
    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Success => 0,
            Outcome::ValidationFailed => 1,
        }
    }
}

pub struct Context<'a> {
    pub out: &'a mut dyn Write,
    /// Value of [`OUTPUT_DIR_VAR`], if set.
    pub output_dir: Option<PathBuf>,
}

pub fn run(cli: Cli, ctx: &mut Context<'_>) -> Result<Outcome> {
    use args::Command::*;
    match cli.command {
        Energy(a) => commands::energy::run(&a, ctx),
        Sweep(a) => commands::sweep::run(&a, ctx),
        Figure3(a) => commands::figure3::run(&a, ctx),
        Validate(a) => commands::validate::run(&a, ctx),
        Convert(a) => commands::convert::run(&a, ctx),
    }
}
