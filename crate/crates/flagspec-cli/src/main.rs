//! Entry point: argument parsing and exit-code discipline.
//!
//! A run exits with 0 on success, which includes help output and empty scan
//! tables. Usage errors exit with 1. Mathematical precondition failures exit
//! with 2.

mod args;
mod document;
mod exec;

use clap::Parser;

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match args::Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return code;
        }
    };
    match exec::execute(cli) {
        Ok(output) => {
            print!("{output}");
            0
        }
        Err(exec::Failure::Usage(message)) => {
            eprintln!("error: {message}");
            1
        }
        Err(exec::Failure::Precondition {
            kind,
            message,
            json_doc,
        }) => {
            eprintln!("error ({kind}): {message}");
            if let Some(doc) = json_doc {
                print!("{doc}");
            }
            2
        }
    }
}
