use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use ringdyn::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let _ = std::io::stdout().write_all(out.stdout.as_bytes());
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("ringdyn: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
