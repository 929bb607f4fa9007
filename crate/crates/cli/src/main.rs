use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use fourier_minors_cli::{
    append_record, error_exit_code, execute, summary, Cli, EXIT_INCONCLUSIVE, EXIT_OK, EXIT_USAGE,
};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::from(EXIT_OK),
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    let record = match execute(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(error_exit_code(&e));
        }
    };
    if let Some(path) = &cli.out {
        if let Err(e) = append_record(path, &record) {
            eprintln!("error: {e:#}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    if cli.json {
        match serde_json::to_string(&record) {
            Ok(line) => println!("{line}"),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_USAGE);
            }
        }
    } else {
        print!("{}", summary(&record));
    }
    if record.inconclusive() {
        ExitCode::from(EXIT_INCONCLUSIVE)
    } else {
        ExitCode::from(EXIT_OK)
    }
}
