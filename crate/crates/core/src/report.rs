//! Data behind the comparison table, the consecutive-integer curves and
//! the precision profiles.

use num_bigint::BigUint;

use crate::dyadic::pow2;
use crate::error::{Error, Result};
use crate::format::{integer_ratio, FormatSpec};
use crate::minifloat::MinifloatSpec;
use crate::oracle::{self, Source};
use crate::{posit, takum};

/// Fraction width used by the widely quoted E4M3 figure of `2^5`, which
/// swaps the format's 4 exponent and 3 fraction bits.
pub const E4M3_SWAPPED_FRACTION_BITS: u64 = 4;

#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub type_name: String,
    pub width: usize,
    pub largest_consecutive: BigUint,
    pub log2: u64,
    pub signed_integer_ratio_percent: f64,
    pub source: Source,
    /// The row carries a known discrepancy explained in the table notes.
    pub flagged: bool,
}

impl TableRow {
    fn new(type_name: &str, width: usize, largest: BigUint, source: Source) -> Self {
        Self {
            type_name: type_name.to_string(),
            width,
            log2: largest.bits().saturating_sub(1),
            signed_integer_ratio_percent: 100.0 * integer_ratio(&largest, width),
            largest_consecutive: largest,
            source,
            flagged: false,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Table {
    pub rows: Vec<TableRow>,
    pub notes: Vec<String>,
}

fn closed_form_row(name: &str, format: FormatSpec) -> Result<TableRow> {
    let largest = format
        .consecutive_closed_form()
        .ok_or_else(|| Error::Domain(format!("no closed form for {format}")))?;
    Ok(TableRow::new(
        name,
        format.width(),
        largest,
        Source::ClosedForm,
    ))
}

fn oracle_row(name: &str, format: FormatSpec) -> Result<TableRow> {
    let report = oracle::largest_consecutive(&format)?;
    Ok(TableRow::new(
        name,
        format.width(),
        report.largest_consecutive,
        Source::Oracle,
    ))
}

/// Rows for the 8 to 128 bit formats, grouped by width.
///
/// IEEE and tapered rows use the closed forms, the OFP8 rows enumerate all
/// 256 patterns. The `OFP8 E4M3` row shows the closed form under the
/// swapped 3/4 field split and is flagged; `e4m3 (computed)` is the
/// enumerated value for the actual 4/3 layout.
pub fn comparison_table() -> Result<Table> {
    let mut e4m3_swapped = TableRow::new(
        "OFP8 E4M3",
        8,
        pow2(E4M3_SWAPPED_FRACTION_BITS + 1),
        Source::ClosedForm,
    );
    e4m3_swapped.flagged = true;

    let e4m3 = oracle_row(
        "e4m3 (computed)",
        FormatSpec::Minifloat(MinifloatSpec::E4M3),
    )?;
    let mut rows = vec![
        e4m3_swapped,
        oracle_row("OFP8 E5M2", FormatSpec::Minifloat(MinifloatSpec::E5M2))?,
        closed_form_row("posit8", FormatSpec::Posit(8))?,
        closed_form_row("takum8", FormatSpec::Takum(8))?,
    ];
    for (ieee, name, n) in [
        (MinifloatSpec::FLOAT16, "float16", 16),
        (MinifloatSpec::FLOAT32, "float32", 32),
        (MinifloatSpec::FLOAT64, "float64", 64),
        (MinifloatSpec::FLOAT128, "float128", 128),
    ] {
        rows.push(closed_form_row(name, FormatSpec::Minifloat(ieee))?);
        if n == 16 {
            rows.push(closed_form_row(
                "bfloat16",
                FormatSpec::Minifloat(MinifloatSpec::BFLOAT16),
            )?);
        }
        rows.push(closed_form_row(&format!("posit{n}"), FormatSpec::Posit(n))?);
        rows.push(closed_form_row(&format!("takum{n}"), FormatSpec::Takum(n))?);
    }
    let notes = vec![format!(
        "OFP8 E4M3: enumerating all 256 patterns gives 2^{} = {}; the listed 2^{} = {} applies \
         2^(n_f+1) with n_e = 3, n_f = 4, but E4M3 has 4 exponent and 3 fraction bits",
        e4m3.log2,
        e4m3.largest_consecutive,
        E4M3_SWAPPED_FRACTION_BITS + 1,
        pow2(E4M3_SWAPPED_FRACTION_BITS + 1),
    )];
    rows.push(e4m3);
    Ok(Table { rows, notes })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CurvePoint {
    pub n: usize,
    pub posit_log2: u64,
    pub takum_log2: u64,
}

pub const FIGURE_MIN_N: usize = 5;
pub const FIGURE_MAX_N: usize = 1024;

/// `floor(log2)` of the largest consecutive posit and takum integers for each width.
pub fn consecutive_curve(n_min: usize, n_max: usize) -> Result<Vec<CurvePoint>> {
    if n_min < FIGURE_MIN_N || n_max > FIGURE_MAX_N || n_min > n_max {
        return Err(Error::Range(format!(
            "need {FIGURE_MIN_N} <= n_min <= n_max <= {FIGURE_MAX_N}, got {n_min}..{n_max}"
        )));
    }
    (n_min..=n_max)
        .map(|n| {
            Ok(CurvePoint {
                n,
                posit_log2: posit::consecutive_exponent(n)?,
                takum_log2: takum::largest_consecutive(n)?.bits() - 1,
            })
        })
        .collect()
}

/// Bits spent on sign and exponent (including fraction bits given up by
/// subnormals) for every binary exponent the format can encode.
pub fn precision_profile(format: &FormatSpec) -> Result<Vec<(i64, usize)>> {
    match *format {
        FormatSpec::Posit(n) => {
            if n < 2 {
                return Err(Error::Domain("posit profile needs at least 2 bits".into()));
            }
            let max = 4 * n as i64 - 8;
            Ok((-max..=max)
                .map(|e| {
                    let run = if e >= 0 {
                        e.div_euclid(4) + 1
                    } else {
                        -e.div_euclid(4)
                    };
                    (e, n.min(4 + run as usize))
                })
                .collect())
        }
        FormatSpec::Takum(n) => Ok((takum::MIN_EXPONENT..=takum::MAX_EXPONENT)
            .map(|e| {
                let magnitude = if e >= 0 { e + 1 } else { -e };
                let regime = 63 - magnitude.leading_zeros() as usize;
                (e, n.min(5 + regime))
            })
            .collect()),
        FormatSpec::Minifloat(spec) => {
            let base = 1 + spec.exponent_bits as usize;
            let e_min = spec.min_normal_exponent();
            let lowest = e_min - spec.fraction_bits as i64;
            Ok((lowest..=spec.max_normal_exponent())
                .map(|e| {
                    (
                        e,
                        if e >= e_min {
                            base
                        } else {
                            base + (e_min - e) as usize
                        },
                    )
                })
                .collect())
        }
    }
}

/// `2^k` rendered approximately as mantissa and decimal exponent, e.g. `1.68e+07`.
pub fn approx_pow2(k: u64) -> String {
    let log10 = k as f64 * std::f64::consts::LOG10_2;
    let mut exp = log10.floor();
    let mut mantissa = 10f64.powf(log10 - exp);
    if (mantissa * 100.0).round() >= 1000.0 {
        mantissa /= 10.0;
        exp += 1.0;
    }
    format!(
        "{mantissa:.2}e{}{:02}",
        if exp < 0.0 { '-' } else { '+' },
        exp.abs() as i64
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curve_points() {
        let c = consecutive_curve(5, 128).unwrap();
        assert_eq!(c.len(), 124);
        let at = |n: usize| c[n - 5];
        assert_eq!(
            at(5),
            CurvePoint {
                n: 5,
                posit_log2: 1,
                takum_log2: 1
            }
        );
        assert_eq!(
            at(32),
            CurvePoint {
                n: 32,
                posit_log2: 23,
                takum_log2: 24
            }
        );
        assert_eq!(
            at(128),
            CurvePoint {
                n: 128,
                posit_log2: 100,
                takum_log2: 118
            }
        );
        assert!(consecutive_curve(4, 10).is_err());
        assert!(consecutive_curve(10, 9).is_err());
        assert!(consecutive_curve(5, 1025).is_err());
    }

    #[test]
    fn curve_is_monotone_to_the_end() {
        let c = consecutive_curve(5, 1024).unwrap();
        for w in c.windows(2) {
            assert!(w[0].posit_log2 <= w[1].posit_log2);
            assert!(w[0].takum_log2 <= w[1].takum_log2);
        }
        assert_eq!(c.last().unwrap().takum_log2, 254);
    }

    #[test]
    fn profile_examples() {
        let lookup = |f: FormatSpec, e: i64| {
            precision_profile(&f)
                .unwrap()
                .into_iter()
                .find(|(x, _)| *x == e)
                .unwrap()
                .1
        };
        assert_eq!(lookup(FormatSpec::Takum(32), 0), 5);
        assert_eq!(lookup(FormatSpec::Posit(32), 0), 5);
        assert_eq!(lookup(FormatSpec::Minifloat(MinifloatSpec::FLOAT32), 0), 9);
        assert_eq!(
            lookup(FormatSpec::Minifloat(MinifloatSpec::FLOAT32), -149),
            9 + 23
        );
        assert_eq!(lookup(FormatSpec::Takum(32), 254), 12);
        assert_eq!(lookup(FormatSpec::Takum(32), -255), 12);
        assert_eq!(lookup(FormatSpec::Posit(16), -1), 5);
        assert_eq!(lookup(FormatSpec::Posit(16), -5), 6);
    }

    #[test]
    fn approximations() {
        assert_eq!(approx_pow2(24), "1.68e+07");
        assert_eq!(approx_pow2(53), "9.01e+15");
        assert_eq!(approx_pow2(113), "1.04e+34");
        assert_eq!(approx_pow2(0), "1.00e+00");
    }
}
