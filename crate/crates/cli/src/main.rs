use std::process::ExitCode;

use clap::Parser;
use ncforms_cli::{run, Cli, Command};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = match &cli.command {
        Command::Diff(a) | Command::Normalize(a) => a.common.json,
        Command::Div(a) => a.common.json,
        Command::Integrate(a) => a.common.json,
        Command::Check(a) => a.common.json,
    };
    match run(&cli) {
        Ok(out) => {
            println!("{}", out.render(json));
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
