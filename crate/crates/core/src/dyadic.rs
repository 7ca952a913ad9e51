//! Exact decoded values and integer profiles.

use std::fmt;
use std::ops::Neg;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// The exact value of a decoded bit pattern.
///
/// Finite values are kept as `(-1)^negative * significand * 2^exponent`
/// with an odd significand, so structural equality is numeric equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum DyadicValue {
    Zero,
    /// Not a real: NaR for posits and takums, infinities and NaNs for minifloats.
    NaR,
    Finite {
        negative: bool,
        significand: BigUint,
        exponent: i64,
    },
}

impl DyadicValue {
    /// Canonical value of `±significand * 2^exponent`.
    pub fn finite(negative: bool, significand: BigUint, exponent: i64) -> Self {
        let Some(tz) = significand.trailing_zeros() else {
            return DyadicValue::Zero;
        };
        DyadicValue::Finite {
            negative,
            significand: significand >> tz,
            exponent: exponent + tz as i64,
        }
    }

    pub fn from_integer(m: &BigInt) -> Self {
        Self::finite(m.sign() == Sign::Minus, m.magnitude().clone(), 0)
    }

    pub fn is_integer(&self) -> bool {
        match self {
            DyadicValue::Zero => true,
            DyadicValue::NaR => false,
            DyadicValue::Finite { exponent, .. } => *exponent >= 0,
        }
    }

    pub fn is_finite(&self) -> bool {
        !matches!(self, DyadicValue::NaR)
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        match self {
            DyadicValue::Zero => Some(BigInt::zero()),
            DyadicValue::NaR => None,
            DyadicValue::Finite {
                negative,
                significand,
                exponent,
            } => {
                if *exponent < 0 {
                    return None;
                }
                let magnitude = significand << (*exponent as u64);
                let sign = if *negative { Sign::Minus } else { Sign::Plus };
                Some(BigInt::from_biguint(sign, magnitude))
            }
        }
    }

    /// The integer value if it fits an `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            DyadicValue::Zero => Some(0),
            DyadicValue::NaR => None,
            DyadicValue::Finite {
                negative,
                significand,
                exponent,
            } => {
                if *exponent < 0 || significand.bits() as i64 + *exponent > 63 {
                    return None;
                }
                let mag = i64::try_from(significand.to_u64_digits().first().copied().unwrap_or(0))
                    .ok()?;
                let mag = mag << *exponent;
                Some(if *negative { -mag } else { mag })
            }
        }
    }

    /// `floor(log2 |x|)` for finite nonzero values.
    pub fn log2_floor(&self) -> Option<i64> {
        match self {
            DyadicValue::Finite {
                significand,
                exponent,
                ..
            } => Some(significand.bits() as i64 - 1 + exponent),
            _ => None,
        }
    }
}

impl Neg for DyadicValue {
    type Output = DyadicValue;

    fn neg(self) -> DyadicValue {
        match self {
            DyadicValue::Finite {
                negative,
                significand,
                exponent,
            } => DyadicValue::Finite {
                negative: !negative,
                significand,
                exponent,
            },
            other => other,
        }
    }
}

impl fmt::Display for DyadicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DyadicValue::Zero => f.write_str("0"),
            DyadicValue::NaR => f.write_str("NaR"),
            DyadicValue::Finite {
                negative,
                significand,
                exponent,
            } => {
                let sign = if *negative { "-" } else { "" };
                if *exponent >= 0 {
                    write!(f, "{sign}{}", significand << (*exponent as u64))
                } else {
                    write!(f, "{sign}{significand}*2^{exponent}")
                }
            }
        }
    }
}

/// Bit length `v` and trailing-zero count `w` of a nonzero integer's magnitude.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntegerProfile {
    pub v: u64,
    pub w: u64,
}

impl IntegerProfile {
    /// True for powers of two, where the fraction field is empty.
    pub fn is_power_of_two(&self) -> bool {
        self.w + 1 == self.v
    }
}

pub fn integer_profile(m: &BigInt) -> Result<IntegerProfile> {
    magnitude_profile(m.magnitude())
}

pub(crate) fn magnitude_profile(mag: &BigUint) -> Result<IntegerProfile> {
    match mag.trailing_zeros() {
        Some(w) => Ok(IntegerProfile { v: mag.bits(), w }),
        None => Err(Error::Domain("profile undefined for zero".into())),
    }
}

/// `2^k` as a big integer.
pub fn pow2(k: u64) -> BigUint {
    BigUint::one() << k
}
