use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::bits::BitString;
use crate::dyadic::{pow2, DyadicValue};
use crate::error::{Error, Result};
use crate::minifloat::MinifloatSpec;
use crate::{posit, takum};

/// A concrete number format of fixed width.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormatSpec {
    Posit(usize),
    Takum(usize),
    Minifloat(MinifloatSpec),
}

/// Formats whose bit strings may have any length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tapered {
    Posit,
    Takum,
}

impl Tapered {
    pub fn decode(self, b: &BitString) -> DyadicValue {
        match self {
            Tapered::Posit => posit::decode(b),
            Tapered::Takum => takum::decode(b),
        }
    }

    pub fn at(self, n: usize) -> FormatSpec {
        match self {
            Tapered::Posit => FormatSpec::Posit(n),
            Tapered::Takum => FormatSpec::Takum(n),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Tapered::Posit => "posit",
            Tapered::Takum => "takum",
        }
    }
}

impl FormatSpec {
    pub fn width(&self) -> usize {
        match self {
            FormatSpec::Posit(n) | FormatSpec::Takum(n) => *n,
            FormatSpec::Minifloat(spec) => spec.width(),
        }
    }

    pub fn tapered(&self) -> Option<Tapered> {
        match self {
            FormatSpec::Posit(_) => Some(Tapered::Posit),
            FormatSpec::Takum(_) => Some(Tapered::Takum),
            FormatSpec::Minifloat(_) => None,
        }
    }

    /// Decodes a bit string of exactly this format's width.
    pub fn decode(&self, b: &BitString) -> Result<DyadicValue> {
        match self {
            FormatSpec::Minifloat(spec) => spec.decode(b),
            FormatSpec::Posit(n) | FormatSpec::Takum(n) => {
                if b.len() != *n {
                    return Err(Error::Format(format!(
                        "expected {n} bits for {self}, got {}",
                        b.len()
                    )));
                }
                Ok(self.tapered().expect("tapered format").decode(b))
            }
        }
    }

    /// Largest consecutive integer from the closed form, where one exists.
    ///
    /// Minifloats whose exponent range cannot reach `n_f + 1` have none.
    pub fn consecutive_closed_form(&self) -> Option<BigUint> {
        match self {
            FormatSpec::Posit(n) => posit::largest_consecutive(*n).ok(),
            FormatSpec::Takum(n) => takum::largest_consecutive(*n).ok(),
            FormatSpec::Minifloat(spec) => spec.consecutive_closed_form(),
        }
    }
}

impl fmt::Display for FormatSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormatSpec::Posit(n) => write!(f, "posit{n}"),
            FormatSpec::Takum(n) => write!(f, "takum{n}"),
            FormatSpec::Minifloat(spec) => spec.fmt(f),
        }
    }
}

impl FromStr for FormatSpec {
    type Err = Error;

    /// `posit<n>`, `takum<n>`, a minifloat preset name or `minifloat:...`.
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        for (prefix, family) in [("posit", Tapered::Posit), ("takum", Tapered::Takum)] {
            if let Some(width) = lower.strip_prefix(prefix) {
                let n: usize = width
                    .parse()
                    .map_err(|_| Error::Parse(format!("expected {prefix}<width>, got {s:?}")))?;
                if n == 0 {
                    return Err(Error::Parse(format!("width must be positive in {s:?}")));
                }
                return Ok(family.at(n));
            }
        }
        lower.parse().map(FormatSpec::Minifloat)
    }
}

/// `largest / (2^(n-1) - 1)`, the share of the same-width signed integer range.
pub fn integer_ratio(largest: &BigUint, width: usize) -> f64 {
    let max_signed = pow2(width as u64 - 1) - BigUint::one();
    ratio(largest, &max_signed)
}

fn ratio(a: &BigUint, b: &BigUint) -> f64 {
    let shift = a.bits().max(b.bits()).saturating_sub(1000);
    let a = (a >> shift).to_f64().unwrap_or(f64::INFINITY);
    let b = (b >> shift).to_f64().unwrap_or(f64::INFINITY);
    a / b
}

/// Signed integer ratio of a format, from its closed-form largest consecutive integer.
pub fn signed_integer_ratio(format: &FormatSpec) -> Result<f64> {
    let largest = format
        .consecutive_closed_form()
        .ok_or_else(|| Error::Domain(format!("no closed form for {format}")))?;
    if format.width() < 2 {
        return Err(Error::Domain(
            "signed integer ratio needs at least 2 bits".into(),
        ));
    }
    Ok(integer_ratio(&largest, format.width()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_formats() {
        assert_eq!(
            "posit16".parse::<FormatSpec>().unwrap(),
            FormatSpec::Posit(16)
        );
        assert_eq!(
            "Takum12".parse::<FormatSpec>().unwrap(),
            FormatSpec::Takum(12)
        );
        assert_eq!(
            "e4m3".parse::<FormatSpec>().unwrap(),
            FormatSpec::Minifloat(MinifloatSpec::E4M3)
        );
        assert!("posit".parse::<FormatSpec>().is_err());
        assert!("posit0".parse::<FormatSpec>().is_err());
        assert!("int8".parse::<FormatSpec>().is_err());
        for name in [
            "posit8",
            "takum64",
            "float128",
            "bfloat16",
            "e5m2",
            "minifloat:3,4,3,none",
        ] {
            assert_eq!(name.parse::<FormatSpec>().unwrap().to_string(), name);
        }
    }

    #[test]
    fn decode_checks_width() {
        let b: BitString = "0100".parse().unwrap();
        assert!(FormatSpec::Posit(5).decode(&b).is_err());
        assert!(FormatSpec::Posit(4).decode(&b).is_ok());
    }

    #[test]
    fn ratio_examples() {
        let posit8 = signed_integer_ratio(&FormatSpec::Posit(8)).unwrap();
        assert!((posit8 - 16.0 / 127.0).abs() < 1e-15);
        assert!((posit8 * 100.0 - 12.598).abs() < 1e-3);
        let f64r = signed_integer_ratio(&FormatSpec::Minifloat(MinifloatSpec::FLOAT64)).unwrap();
        assert!((f64r * 100.0 - 9.765_625e-2).abs() < 1e-8);
        let t16 = signed_integer_ratio(&FormatSpec::Takum(16)).unwrap();
        assert!((t16 * 100.0 - 1.5625).abs() < 1e-3);
        let p128 = signed_integer_ratio(&FormatSpec::Posit(128)).unwrap();
        assert!((p128 * 100.0 - 7.45e-7).abs() < 1e-9);
    }
}
