use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use ringlocal_cli::{execute, output_path, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // clap's own exit codes collide with the documented ones;
            // usage problems are validation errors.
            if err.use_stderr() {
                eprint!("{err}");
                return ExitCode::from(1);
            }
            print!("{err}");
            return ExitCode::SUCCESS;
        }
    };
    match execute(&cli.command) {
        Ok(csv) => {
            let result = match output_path(&cli.command) {
                Some(path) => std::fs::write(path, csv.as_bytes()),
                None => std::io::stdout().lock().write_all(csv.as_bytes()),
            };
            if let Err(err) = result {
                eprintln!("error: {err}");
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
