use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use intrep::verify::ClosedForms;
use intrep_cli::{self as cli, CliError};

#[derive(Parser)]
#[command(
    name = "intrep",
    version,
    about = "Integer representation in posit, takum and minifloat formats"
)]
struct Cli {
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decode a bit string in the given format.
    Decode {
        #[arg(long)]
        format: String,
        #[arg(long)]
        bits: String,
    },
    /// Shortest encoding of an integer (posit or takum).
    EncodeInt {
        #[arg(long)]
        format: String,
        #[arg(long, allow_hyphen_values = true)]
        value: String,
        /// Reject encodings longer than this.
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Minimal bit length of an integer (posit or takum).
    MinBits {
        #[arg(long)]
        format: String,
        #[arg(long, allow_hyphen_values = true)]
        value: String,
    },
    /// Largest L such that every integer in [-L, L] is representable.
    MaxConsecutive {
        /// A format such as posit16, takum32 or float16, or a family with --n.
        #[arg(long)]
        format: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        exact: bool,
    },
    /// Comparison table of common formats.
    Table {
        #[arg(long)]
        exact: bool,
    },
    /// CSV of log2 of the largest consecutive integer for posit and takum.
    Figure {
        #[arg(long, default_value_t = 5)]
        n_min: usize,
        #[arg(long, default_value_t = 128)]
        n_max: usize,
    },
    /// CSV of non-fraction bits per binary exponent.
    PrecisionProfile {
        #[arg(long)]
        format: String,
    },
    /// Check the closed forms against exhaustive enumeration.
    Verify {
        #[arg(long, default_value_t = 16)]
        max_n: usize,
        #[arg(long, default_value_t = 4096)]
        max_m: u64,
    },
}

fn resolve_format(format: &str, n: Option<usize>) -> cli::Result<intrep::FormatSpec> {
    match n {
        None => cli::parse_format(format),
        Some(n) => match format.trim().to_ascii_lowercase().as_str() {
            "posit" | "takum" => cli::parse_format(&format!("{format}{n}")),
            _ => Err(CliError::Usage(format!(
                "--n only applies to posit or takum, not {format}"
            ))),
        },
    }
}

fn run(command: Command) -> cli::Result<String> {
    match command {
        Command::Decode { format, bits } => cli::cmd_decode(&cli::parse_format(&format)?, &bits),
        Command::EncodeInt {
            format,
            value,
            max_n,
        } => {
            let (family, width) = cli::parse_tapered(&format)?;
            let max_n = max_n.or(width).unwrap_or(cli::DEFAULT_MAX_N);
            cli::cmd_encode_int(family, &cli::parse_integer(&value)?, max_n)
        }
        Command::MinBits { format, value } => {
            let (family, _) = cli::parse_tapered(&format)?;
            cli::cmd_min_bits(family, &cli::parse_integer(&value)?)
        }
        Command::MaxConsecutive { format, n, exact } => {
            cli::cmd_max_consecutive(&resolve_format(&format, n)?, exact)
        }
        Command::Table { exact } => cli::cmd_table(exact),
        Command::Figure { n_min, n_max } => cli::cmd_figure(n_min, n_max),
        Command::PrecisionProfile { format } => {
            cli::cmd_precision_profile(&cli::parse_format(&format)?)
        }
        Command::Verify { max_n, max_m } => cli::cmd_verify(max_n, max_m, &ClosedForms::default()),
    }
}

fn emit(out: Option<&PathBuf>, text: &str) -> cli::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let args = match Cli::try_parse() {
        Ok(args) => args,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let result = run(args.command);
    let result = match result {
        Ok(text) => emit(args.out.as_ref(), &text),
        Err(CliError::Verification(text)) => {
            // the failing report is still the command's output
            emit(args.out.as_ref(), &text).and(Err(CliError::Verification(String::new())))
        }
        Err(e) => Err(e),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let msg = e.to_string();
            if !msg.is_empty() {
                eprintln!("error: {msg}");
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
