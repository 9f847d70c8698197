use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use cubenoise::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            if cli.run.output.is_none() {
                let mut stdout = std::io::stdout().lock();
                if let Err(e) = stdout.write_all(&outcome.report) {
                    eprintln!("error: cannot write report: {e}");
                    return ExitCode::from(2);
                }
            }
            match outcome.violations.first() {
                None => ExitCode::SUCCESS,
                Some(v) => {
                    eprintln!("violation: {v}");
                    ExitCode::from(1)
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
