//! Command-line front end. [`run`] is the whole program minus process
//! plumbing, so tests can drive it with captured output.

pub mod args;
mod commands;
pub mod output;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;
use eaqmds_core::Error;
use log::LevelFilter;

use crate::args::{Cli, Command, Format};
use crate::output::{write_csv, write_json};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Errors caused by the arguments rather than by a failed computation.
fn is_usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::InvalidModulus { .. }
            | Error::ResidueOutOfRange { .. }
            | Error::NotPrimePower(_)
            | Error::NotPrime(_)
            | Error::RunIndexOutOfRange { .. }
            | Error::BadLength { .. }
            | Error::EbitsOutOfRange { .. }
            | Error::InvalidFamily(_)
            | Error::FieldTooLarge { .. }
            | Error::NoRootOfUnity { .. }
    )
}

fn init_logging(verbose: u8) {
    let level = match verbose {
        0 => LevelFilter::Warn,
        1 => LevelFilter::Info,
        _ => LevelFilter::Debug,
    };
    // a second call from the same process (tests) keeps the first logger
    let _ = env_logger::Builder::new()
        .filter_level(level)
        .target(env_logger::Target::Stderr)
        .try_init();
}

/// Parses `argv` (program name first), runs the command and returns the
/// exit status: 0 on success, 1 when a verification failed (or, with
/// `--strict`, when a discrepancy was reported), 2 on a usage error.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    init_logging(cli.verbose);

    let result = match &cli.command {
        Command::Cosets(a) => commands::cosets(a),
        Command::Decompose(a) => commands::decompose(a),
        Command::Code(a) => commands::code(a, cli.cap),
        Command::Verify(a) => commands::verify(a, cli.cap),
        Command::Tables(a) => commands::tables(a, cli.cap),
        Command::Sweep(a) => commands::sweep(a, cli.cap),
        Command::Selfcheck => commands::selfcheck(cli.cap),
    };
    let outcome = match result {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return if is_usage_error(&e) { EXIT_USAGE } else { EXIT_FAILED };
        }
    };

    let written = match cli.format {
        Format::Json => write_json(out, &outcome.payload),
        Format::Csv => write_csv(out, &outcome.payload.records),
        Format::Text => out.write_all(outcome.render_text().as_bytes()),
    };
    if let Err(e) = written {
        // reader went away, e.g. piped into head
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return EXIT_OK;
        }
        let _ = writeln!(err, "error: writing output: {e}");
        return EXIT_FAILED;
    }

    if outcome.failed {
        let _ = writeln!(err, "verification failed");
        EXIT_FAILED
    } else if cli.strict && !outcome.payload.reports.is_empty() {
        let _ = writeln!(
            err,
            "{} discrepancies reported (--strict)",
            outcome.payload.reports.len()
        );
        EXIT_FAILED
    } else {
        EXIT_OK
    }
}
