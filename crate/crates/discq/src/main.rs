use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use discq::cli::{run, Cli};

fn main() -> ExitCode {
    // DISCQ_THREADS is accepted for compatibility; every computation is sequential.
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(e.code as u8)
        }
    }
}
