use rdi_core::validation::{all_passed, run_filtered, run_validation_suite};

use crate::args::ValidateArgs;
use crate::error::CliError;
use crate::{Context, Outcome, Result};

/// One JSON object per line, then exit 1 if anything failed.
pub fn run(args: &ValidateArgs, ctx: &mut Context<'_>) -> Result<Outcome> {
    let reports = match &args.filter {
        Some(prefix) => run_filtered(prefix),
        None => run_validation_suite(),
    };
    if reports.is_empty() {
        return Err(CliError::usage(format!(
            "no validation case matches `{}`",
            args.filter.as_deref().unwrap_or("")
        )));
    }
    for r in &reports {
        serde_json::to_writer(&mut *ctx.out, r)?;
        writeln!(ctx.out)?;
    }
    Ok(if all_passed(&reports) { Outcome::Success } else { Outcome::ValidationFailed })
}
