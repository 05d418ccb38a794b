mod args;
mod commands;
mod error;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};
use error::{CliError, EXIT_USAGE};

fn run(cli: Cli) -> error::Result<()> {
    match cli.command {
        Command::Synth { spec, out } => commands::synth(&spec, &out),
        Command::Detect {
            dem,
            out_dir,
            geometry,
            stretch,
            emit_intermediates,
        } => {
            let summary = commands::detect(
                &dem,
                &out_dir,
                &geometry,
                stretch.as_deref(),
                emit_intermediates,
            )?;
            println!("{summary}");
            Ok(())
        }
        Command::Incidence {
            dem,
            out_dir,
            geometry,
            window,
        } => commands::incidence(&dem, &out_dir, &geometry, &window),
        Command::Profile {
            spec,
            dem,
            out,
            geometry,
        } => commands::profile(spec.as_deref(), dem.as_deref(), &out, &geometry),
        Command::Height {
            shadow_len_m,
            range_m,
            height_m,
        } => {
            println!("{}", commands::height(shadow_len_m, range_m, height_m)?);
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE as u8),
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            if let CliError::Usage(_) = e {
                eprintln!("run `sarshadow --help` for usage");
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
