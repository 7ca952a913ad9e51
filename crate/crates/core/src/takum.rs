//! Linear takums.
//!
//! Layout: sign, direction bit, three regime bits, `r` characteristic bits
//! and `p = n - r - 5` fraction bits. Strings shorter than [`MIN_WIDTH`]
//! are zero-extended.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use crate::bits::{truncate_trailing_zeros, twos_complement, BitString};
use crate::dyadic::{integer_profile, magnitude_profile, pow2, DyadicValue, IntegerProfile};
use crate::error::{Error, Result};

pub use crate::lambert::{lambert_consecutive_exponent, lambert_w0, LambertW0};

pub const MIN_WIDTH: usize = 12;

/// Largest binary exponent of a finite takum.
pub const MAX_EXPONENT: i64 = 254;
/// Smallest binary exponent of a finite takum.
pub const MIN_EXPONENT: i64 = -255;

/// Bit fields of a takum that is neither zero nor NaR.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TakumFields {
    pub sign: bool,
    pub direction: bool,
    /// Raw three-bit regime field.
    pub regime_bits: u8,
    /// Regime value `r` in `0..=7`, also the characteristic width.
    pub regime: u32,
    pub characteristic_bits: u64,
    pub characteristic: i64,
    pub fraction_bits: usize,
    pub fraction: BigUint,
    pub exponent: i64,
}

impl TakumFields {
    pub fn unpack(b: &BitString) -> Option<Self> {
        if b.tail_is_zero() {
            return None;
        }
        let n = b.len().max(MIN_WIDTH);
        let sign = b.bit(0);
        let direction = b.bit(1);
        let regime_bits = b.field_u64(2, 3) as u8;
        let regime = if direction {
            regime_bits
        } else {
            7 - regime_bits
        } as u32;
        let characteristic_bits = b.field_u64(5, regime as usize);
        let characteristic = if direction {
            (1i64 << regime) - 1 + characteristic_bits as i64
        } else {
            -(1i64 << (regime + 1)) + 1 + characteristic_bits as i64
        };
        let fraction_bits = n.saturating_sub(regime as usize + 5);
        let fraction = b.field(regime as usize + 5, fraction_bits);
        let exponent = if sign {
            -(characteristic + 1)
        } else {
            characteristic
        };
        Some(Self {
            sign,
            direction,
            regime_bits,
            regime,
            characteristic_bits,
            characteristic,
            fraction_bits,
            fraction,
            exponent,
        })
    }

    /// Exact value `[(1 - 3S) + f] * 2^e`.
    pub fn value(&self) -> DyadicValue {
        let p = self.fraction_bits as u64;
        let significand = if self.sign {
            (pow2(p) << 1u32) - &self.fraction
        } else {
            pow2(p) + &self.fraction
        };
        DyadicValue::finite(self.sign, significand, self.exponent - p as i64)
    }
}

pub fn decode(b: &BitString) -> DyadicValue {
    match TakumFields::unpack(b) {
        Some(fields) => fields.value(),
        None if b.bit(0) => DyadicValue::NaR,
        None => DyadicValue::Zero,
    }
}

fn check_range(m: &BigInt) -> Result<()> {
    if m.magnitude() > &pow2(254) {
        return Err(Error::Range(format!(
            "|{m}| exceeds 2^254, the largest takum integer range"
        )));
    }
    Ok(())
}

/// Shortest takum bit string for the integer `m`, `|m| <= 2^254`.
///
/// Zero encodes as the single bit `0`; negative integers are the two's
/// complement of the encoding of `|m|`.
pub fn encode_integer(m: &BigInt, max_n: usize) -> Result<BitString> {
    if m.is_zero() {
        return Ok(BitString::zeros(1));
    }
    check_range(m)?;
    let mag = m.magnitude();
    let IntegerProfile { v, w } = magnitude_profile(mag)?;

    // v = c + 1 = 2^r + int(C)
    let regime = 63 - v.leading_zeros() as u64;
    let characteristic = v - (1 << regime);

    let mut bits = Vec::with_capacity(5 + regime as usize + v as usize);
    bits.extend([false, true]);
    bits.extend((0..3).rev().map(|i| regime >> i & 1 == 1));
    bits.extend((0..regime).rev().map(|i| characteristic >> i & 1 == 1));
    bits.extend((w..v - 1).rev().map(|i| mag.bit(i)));

    let encoded = truncate_trailing_zeros(&BitString::new(bits)?, 2);
    if encoded.len() > max_n {
        return Err(Error::Capacity {
            needed: encoded.len(),
            max: max_n,
        });
    }
    Ok(if m.sign() == Sign::Minus {
        twos_complement(&encoded)
    } else {
        encoded
    })
}

/// Length of the shortest takum encoding of the nonzero integer `m`.
///
/// Trailing zeros of the characteristic can only be dropped when the
/// fraction is empty, and those of the regime only when the characteristic
/// is zero as well.
pub fn min_length(m: &BigInt) -> Result<usize> {
    check_range(m)?;
    let p = integer_profile(m)?;
    let (v, w) = (p.v, p.w);
    let log2_v = 63 - v.leading_zeros() as u64;
    let mut len = 4 + v - w + log2_v;
    if p.is_power_of_two() {
        let characteristic = v - (1 << log2_v);
        if characteristic != 0 {
            len -= u64::from(characteristic.trailing_zeros()).min(log2_v);
        } else {
            len -= log2_v;
            len -= if log2_v == 0 {
                3
            } else {
                u64::from(log2_v.trailing_zeros()).min(3)
            };
        }
    }
    Ok(len as usize)
}

/// Largest `v >= 1` with `v * 2^v < 2^(n - 3)`, by exact integer search.
pub fn consecutive_exponent(n: usize) -> Result<u64> {
    if n < 5 {
        return Err(Error::Domain(format!(
            "takum width must be at least 5, got {n}"
        )));
    }
    let bound = pow2(n as u64 - 3);
    let mut v = 1u64;
    while BigUint::from(v + 1) << (v + 1) < bound {
        v += 1;
    }
    Ok(v)
}

/// Largest `L` such that every integer in `[-L, L]` is an `n`-bit takum.
///
/// This is `2^V` with `V` from [`consecutive_exponent`] while `V <= 254`.
/// From `n = 266` on, every integer below `2^255` fits and the result
/// saturates at `2^255 - 1`.
pub fn largest_consecutive(n: usize) -> Result<BigUint> {
    let v = consecutive_exponent(n)?;
    if v <= MAX_EXPONENT as u64 {
        Ok(pow2(v))
    } else {
        Ok(pow2(MAX_EXPONENT as u64 + 1) - BigUint::one())
    }
}
