use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = crimp::Cli::parse();
    match crimp::run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("crimp: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
