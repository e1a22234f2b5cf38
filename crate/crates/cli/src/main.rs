//! `greatcircle` command-line front end.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 domain precondition
//! violated, 3 verification failed (the report is still written).

mod args;
mod commands;
mod output;

use std::process::ExitCode;

use clap::Parser;
use greatcircle::Tolerances;

use args::{Cli, Command, FibrationCommand};
use commands::{CommandError, CommandResult, Context};

fn tolerances(overrides: &[String]) -> Result<Tolerances, CommandError> {
    let mut tol = Tolerances::default();
    for item in overrides {
        let (name, value) = item
            .split_once('=')
            .ok_or_else(|| CommandError::Usage(format!("tolerance override `{item}` is not NAME=VALUE")))?;
        let value: f64 = value
            .parse()
            .map_err(|_| CommandError::Usage(format!("tolerance `{name}`: `{value}` is not a number")))?;
        if !tol.set(name, value) {
            return Err(CommandError::Usage(format!(
                "unknown tolerance `{name}` or non-positive value (known: {})",
                Tolerances::NAMES.join(", ")
            )));
        }
    }
    Ok(tol)
}

fn run(cli: &Cli) -> CommandResult {
    let ctx = Context { seed: cli.seed, samples: cli.samples, format: cli.format, tol: tolerances(&cli.tol)? };
    match &cli.command {
        Command::Fibration(FibrationCommand::Build(a)) => commands::fibration::build(a, &ctx),
        Command::Fibration(FibrationCommand::Check(a)) => commands::fibration::check(a, &ctx),
        Command::Grassmann(a) => commands::grassmann::run(a, &ctx),
        Command::Curvature(a) => commands::curvature::run(a, &ctx),
        Command::Volume(a) => commands::volume::run(a, &ctx),
        Command::Berger(a) => commands::berger::run(a, &ctx),
    }
}

fn main() -> ExitCode {
    let argv = args::normalize_tolerance_flags(std::env::args());
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let result = run(&cli).and_then(|report| {
        output::emit(&report.body, cli.out.as_deref())?;
        Ok(report.verified)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("verification failed");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
