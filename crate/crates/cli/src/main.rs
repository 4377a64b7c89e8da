use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use gainsym_cli::{execute, write_files, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let echo = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    let outcome = match execute(&cli, echo) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    if let Err(e) = write_files(&outcome) {
        eprintln!("error: {e}");
        return ExitCode::from(e.exit_code() as u8);
    }
    if cli.human {
        print!("{}", outcome.report.to_human());
    } else {
        println!("{}", outcome.report.to_json());
    }
    ExitCode::SUCCESS
}
