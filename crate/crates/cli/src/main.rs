mod args;
mod grid;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use thiserror::Error;

use args::{Cli, Command, Common, Format};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] qfield_core::Error),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("self-check failed: {0}")]
    SelfCheck(String),

    #[error("output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        use qfield_core::Error as E;
        match self {
            CliError::Config(_) => 2,
            CliError::SelfCheck(_) => 5,
            CliError::Io(_) => 1,
            CliError::Core(e) => match e {
                E::NotFundamental(_) | E::PrincipalCharacter(_) | E::ClassNumberNotOne(_) | E::IndefiniteForm(_) => 3,
                E::ScaleLimit { .. } | E::Overflow(_) => 4,
                E::Report(_) => 1,
                E::InvalidDiscriminant(_)
                | E::NotPrime(_)
                | E::InvalidForm { .. }
                | E::Domain(_)
                | E::ConstantMismatch(_)
                | E::InvalidParams(_) => 2,
            },
        }
    }
}

fn default_format(command: &Command) -> Format {
    match command {
        Command::Constants(_) => Format::Json,
        Command::Verify(_) => Format::Csv,
        _ => Format::Human,
    }
}

fn emit(common: &Common, text: &str) -> Result<(), CliError> {
    match &common.output {
        Some(path) => std::fs::write(path, text)?,
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
        }
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let format = cli.common.format.unwrap_or_else(|| default_format(&cli.command));
    let text = report::render(&cli.command, &cli.common, format)?;
    emit(&cli.common, &text)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("qfield: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
