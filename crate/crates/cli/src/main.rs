use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use rdi_cli::{run, Cli, Context, OUTPUT_DIR_VAR};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let mut ctx = Context {
        out: &mut out,
        output_dir: std::env::var_os(OUTPUT_DIR_VAR).filter(|v| !v.is_empty()).map(Into::into),
    };
    let result = run(cli, &mut ctx);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(outcome), Ok(())) => ExitCode::from(outcome.exit_code()),
        (Ok(_), Err(e)) => {
            eprintln!("rdi: writing output: {e}");
            ExitCode::from(3)
        }
        (Err(e), _) => {
            eprintln!("rdi: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
