//! Commands behind the `intrep` binary. Each returns the text it prints so
//! the binary only has to route output and map errors to exit codes.

use std::fmt::Write as _;

use intrep::format::Tapered;
use intrep::report::{self, CurvePoint, Table, TableRow};
use intrep::verify::{self, ClosedForms, VerifyConfig, VerifyReport};
use intrep::{oracle, posit, takum, BitString, FormatSpec};
use num_bigint::BigInt;
use thiserror::Error;

/// Width cap for `encode-int` when none is given.
pub const DEFAULT_MAX_N: usize = 256;

/// Largest value printed as a plain decimal in the table unless `--exact` is set.
const TABLE_DECIMAL_LIMIT_LOG2: u64 = 20;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Verification(String),
    #[error("{0}")]
    Budget(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 1,
            CliError::Verification(_) => 2,
            CliError::Budget(_) => 3,
        }
    }
}

impl From<intrep::Error> for CliError {
    fn from(e: intrep::Error) -> Self {
        use intrep::Error::*;
        match e {
            Budget { .. } | Range(_) | Capacity { .. } => CliError::Budget(e.to_string()),
            Domain(_) | Format(_) | Parse(_) => CliError::Usage(e.to_string()),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

pub fn parse_format(s: &str) -> Result<FormatSpec> {
    Ok(s.parse::<FormatSpec>()?)
}

/// `posit`/`takum`, optionally with a width that then caps the encoding length.
pub fn parse_tapered(s: &str) -> Result<(Tapered, Option<usize>)> {
    match s.trim().to_ascii_lowercase().as_str() {
        "posit" => Ok((Tapered::Posit, None)),
        "takum" => Ok((Tapered::Takum, None)),
        other => match other.parse::<FormatSpec>()? {
            FormatSpec::Posit(n) => Ok((Tapered::Posit, Some(n))),
            FormatSpec::Takum(n) => Ok((Tapered::Takum, Some(n))),
            FormatSpec::Minifloat(_) => Err(CliError::Usage(format!(
                "{s} has no integer encoder; use posit or takum"
            ))),
        },
    }
}

pub fn parse_integer(s: &str) -> Result<BigInt> {
    s.trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("not an integer: {s:?}")))
}

pub fn cmd_decode(format: &FormatSpec, bits: &str) -> Result<String> {
    let bits: BitString = bits.parse()?;
    Ok(format!("{}\n", format.decode(&bits)?))
}

pub fn cmd_encode_int(family: Tapered, value: &BigInt, max_n: usize) -> Result<String> {
    let b = match family {
        Tapered::Posit => posit::encode_integer(value, max_n)?,
        Tapered::Takum => takum::encode_integer(value, max_n)?,
    };
    Ok(format!("{b}\n"))
}

pub fn cmd_min_bits(family: Tapered, value: &BigInt) -> Result<String> {
    if value == &BigInt::from(0) {
        return Err(CliError::Usage("minimal length is undefined for 0".into()));
    }
    let len = match family {
        Tapered::Posit => posit::min_length(value)?,
        Tapered::Takum => takum::min_length(value)?,
    };
    Ok(format!("{len}\n"))
}

fn render_pow2(log2: u64, exact: bool) -> String {
    if exact || log2 <= TABLE_DECIMAL_LIMIT_LOG2 {
        format!("2^{log2} = {}", intrep::dyadic::pow2(log2))
    } else {
        format!("2^{log2} (≈ {})", report::approx_pow2(log2))
    }
}

/// Largest consecutive integer of one format: closed form where available,
/// otherwise enumeration.
pub fn cmd_max_consecutive(format: &FormatSpec, exact: bool) -> Result<String> {
    let (value, source) = match format.consecutive_closed_form() {
        Some(v) => (v, oracle::Source::ClosedForm),
        None => (
            oracle::largest_consecutive(format)?.largest_consecutive,
            oracle::Source::Oracle,
        ),
    };
    let log2 = value.bits().saturating_sub(1);
    let shown = if value.count_ones() == 1 {
        render_pow2(log2, exact)
    } else {
        value.to_string()
    };
    Ok(format!("{format}: {shown} [{source}]\n"))
}

/// Two significant digits, switching to scientific notation below 0.1.
pub fn format_percent(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if x < 0.1 {
        return format!("{x:.1e}");
    }
    let digits = (1 - x.log10().floor() as i32).max(0) as usize;
    format!("{x:.digits$}")
}

fn row_cells(row: &TableRow, exact: bool) -> [String; 3] {
    let name = if row.flagged {
        format!("{}*", row.type_name)
    } else {
        row.type_name.clone()
    };
    [
        name,
        render_pow2(row.log2, exact),
        format_percent(row.signed_integer_ratio_percent),
    ]
}

pub fn render_table(table: &Table, exact: bool) -> String {
    let header = [
        "type",
        "largest consecutive integer",
        "signed integer ratio/%",
    ];
    let cells: Vec<[String; 3]> = table.rows.iter().map(|r| row_cells(r, exact)).collect();
    let mut widths = header.map(|h| h.chars().count());
    for row in &cells {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cols: [&str; 3]| {
        let mut s = String::new();
        for (i, (c, w)) in cols.iter().zip(widths).enumerate() {
            let pad = w - c.chars().count();
            if i > 0 {
                s.push_str(" | ");
            }
            s.push_str(c);
            if i < 2 {
                s.extend(std::iter::repeat_n(' ', pad));
            }
        }
        s.push('\n');
        s
    };
    let mut out = line(header);
    out.push_str(&line([
        &"-".repeat(widths[0]),
        &"-".repeat(widths[1]),
        &"-".repeat(widths[2]),
    ]));
    for row in &cells {
        out.push_str(&line([&row[0], &row[1], &row[2]]));
    }
    for note in &table.notes {
        let _ = writeln!(out, "* {note}");
    }
    out
}

pub fn cmd_table(exact: bool) -> Result<String> {
    Ok(render_table(&report::comparison_table()?, exact))
}

pub fn render_curve(points: &[CurvePoint]) -> String {
    let mut out = String::from("n,posit_exponent,takum_exponent\n");
    for p in points {
        let _ = writeln!(out, "{},{},{}", p.n, p.posit_log2, p.takum_log2);
    }
    out
}

pub fn cmd_figure(n_min: usize, n_max: usize) -> Result<String> {
    Ok(render_curve(&report::consecutive_curve(n_min, n_max)?))
}

pub fn cmd_precision_profile(format: &FormatSpec) -> Result<String> {
    let mut out = String::from("exponent,non_fraction_bits\n");
    for (e, bits) in report::precision_profile(format)? {
        let _ = writeln!(out, "{e},{bits}");
    }
    Ok(out)
}

pub fn render_verify(report: &VerifyReport) -> String {
    const SHOWN_FAILURES: usize = 20;
    let mut out = String::new();
    for check in &report.checks {
        if check.passed() {
            let _ = writeln!(out, "PASS {} ({} cases)", check.name, check.cases);
        } else {
            let _ = writeln!(
                out,
                "FAIL {} ({} of {} cases)",
                check.name,
                check.failures.len(),
                check.cases
            );
            for m in check.failures.iter().take(SHOWN_FAILURES) {
                let _ = writeln!(out, "  {m}");
            }
            if check.failures.len() > SHOWN_FAILURES {
                let _ = writeln!(out, "  ... {} more", check.failures.len() - SHOWN_FAILURES);
            }
        }
    }
    for note in &report.notes {
        let _ = writeln!(out, "note: {note}");
    }
    out
}

/// Runs the verification suite. A failed check yields [`CliError::Verification`]
/// carrying the full report.
pub fn cmd_verify(max_n: usize, max_m: u64, forms: &ClosedForms) -> Result<String> {
    let report = verify::run(&VerifyConfig { max_n, max_m }, forms)?;
    let mut out = render_verify(&report);
    match report.first_failure() {
        None => {
            out.push_str("all checks passed\n");
            Ok(out)
        }
        Some(first) => {
            let _ = writeln!(out, "verification failed; first failure: {first}");
            Err(CliError::Verification(out))
        }
    }
}
