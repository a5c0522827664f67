use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pedal_cli::{commands, svg, verify, CliError, Document};
use pedal_core::Tolerance;

/// Pedal and antipedal triangle constructions.
#[derive(Parser, Debug)]
#[command(name = "pedal", version)]
struct Cli {
    /// Base tolerance, scaled by the size of each configuration.
    #[arg(long, global = true, default_value_t = 1e-9, value_parser = parse_tolerance)]
    tolerance: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Io {
    /// Read the input document from FILE instead of stdin.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Write the result to FILE instead of stdout.
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Pedal triangle, area ratio and sign profile of a point.
    Pedal(Io),
    /// Antipedal triangle of an interior point and its area ratio.
    Antipedal(Io),
    /// Isogonal conjugate of a point.
    Isogonal(Io),
    /// Doubly-inscribed triangles for ratios [k1, k2, k3].
    Inscribe(Io),
    /// Circles on which the pedal area ratio is constant.
    Locus(Io),
    /// Collinearity of the feet of perpendiculars.
    Simson(Io),
    /// Randomized property suite.
    Verify {
        /// Sampler seed; the report is reproducible for a given seed.
        #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u64).range(..=i64::MAX as u64))]
        seed: u64,
        /// Samples drawn per property.
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..=i64::MAX as u64))]
        trials: u64,
        /// Write the report to FILE instead of stdout.
        #[arg(long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Render a scene description as SVG.
    Svg(Io),
}

fn parse_tolerance(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x.is_finite() && x > 0.0 => Ok(x),
        _ => Err(format!("expected a positive finite number, got {s:?}")),
    }
}

fn read_input(io: &Io) -> Result<Document, CliError> {
    let text = match &io.input {
        Some(path) => fs::read_to_string(path)?,
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    Document::parse(&text)
}

fn write_output(path: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match path {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let tol = Tolerance(cli.tolerance);
    let document = |io: &Io, f: fn(&Document, Tolerance) -> Result<Document, CliError>| {
        let out = f(&read_input(io)?, tol)?;
        write_output(io.output.as_ref(), &out.emit())?;
        Ok(ExitCode::SUCCESS)
    };
    match &cli.command {
        Command::Pedal(io) => document(io, commands::cmd_pedal),
        Command::Antipedal(io) => document(io, commands::cmd_antipedal),
        Command::Isogonal(io) => document(io, commands::cmd_isogonal),
        Command::Inscribe(io) => document(io, commands::cmd_inscribe),
        Command::Locus(io) => document(io, commands::cmd_locus),
        Command::Simson(io) => document(io, commands::cmd_simson),
        Command::Svg(io) => {
            let out = svg::cmd_svg(&read_input(io)?, tol)?;
            write_output(io.output.as_ref(), &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            seed,
            trials,
            output,
        } => {
            let reports = verify::run(*seed, *trials, tol);
            let doc = verify::report_document(*seed, *trials, &reports);
            write_output(output.as_ref(), &doc.emit())?;
            let passed = reports.iter().all(verify::PropertyReport::passed);
            Ok(if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("pedal: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
