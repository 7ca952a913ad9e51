//! Posits with a 2-bit exponent field.
//!
//! An `n`-bit posit is laid out as sign, regime run, regime terminator,
//! two exponent bits and `p = n - k - 4` fraction bits, where `k` is the
//! regime run length. Strings shorter than [`MIN_WIDTH`] are zero-extended.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::bits::{truncate_trailing_zeros, twos_complement, BitString};
use crate::dyadic::{integer_profile, magnitude_profile, pow2, DyadicValue};
use crate::error::{Error, Result};

pub const MIN_WIDTH: usize = 5;

/// Bit fields of a posit that is neither zero nor NaR.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositFields {
    pub sign: bool,
    /// Regime run length `k >= 1`.
    pub run_length: usize,
    /// Value of the repeated regime bit.
    pub run_bit: bool,
    pub regime: i64,
    /// Two-bit exponent field value in `0..=3`.
    pub exponent_field: u8,
    pub fraction_bits: usize,
    pub fraction: BigUint,
    /// Actual binary exponent `(-1)^S (4r + ê + S)`.
    pub exponent: i64,
}

impl PositFields {
    pub fn unpack(b: &BitString) -> Option<Self> {
        if b.tail_is_zero() {
            return None;
        }
        let n = b.len().max(MIN_WIDTH);
        let sign = b.bit(0);
        let run_bit = b.bit(1);
        let mut run_length = 1;
        while 1 + run_length < n && b.bit(1 + run_length) == run_bit {
            run_length += 1;
        }
        let regime = if run_bit {
            run_length as i64 - 1
        } else {
            -(run_length as i64)
        };
        let exponent_field = b.field_u64(run_length + 2, 2) as u8;
        let fraction_bits = n.saturating_sub(run_length + 4);
        let fraction = b.field(run_length + 4, fraction_bits);
        let unsigned = 4 * regime + exponent_field as i64;
        let exponent = if sign { -(unsigned + 1) } else { unsigned };
        Some(Self {
            sign,
            run_length,
            run_bit,
            regime,
            exponent_field,
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
    match PositFields::unpack(b) {
        Some(fields) => fields.value(),
        None if b.bit(0) => DyadicValue::NaR,
        None => DyadicValue::Zero,
    }
}

/// Shortest posit bit string for the integer `m`.
///
/// Zero encodes as the single bit `0`. Negative integers are the two's
/// complement of the encoding of `|m|` at the same length.
pub fn encode_integer(m: &BigInt, max_n: usize) -> Result<BitString> {
    if m.is_zero() {
        return Ok(BitString::zeros(1));
    }
    let mag = m.magnitude();
    let profile = magnitude_profile(mag)?;
    let (v, w) = (profile.v, profile.w);

    // (v - 1) = 4(k - 1) + ê
    let run_length = v.div_ceil(4) as usize;
    let exponent_field = (v + 3) % 4;

    let mut bits = Vec::with_capacity(run_length + 4 + v as usize);
    bits.push(false);
    bits.extend(std::iter::repeat_n(true, run_length));
    bits.push(false);
    bits.push(exponent_field & 2 != 0);
    bits.push(exponent_field & 1 != 0);
    bits.extend((w..v - 1).rev().map(|i| mag.bit(i)));

    let encoded = truncate_trailing_zeros(&BitString::new(bits)?, 2);
    if encoded.len() > max_n {
        return Err(Error::Capacity {
            needed: encoded.len(),
            max: max_n,
        });
    }
    Ok(if m.sign() == num_bigint::Sign::Minus {
        twos_complement(&encoded)
    } else {
        encoded
    })
}

/// Length of the shortest posit encoding of the nonzero integer `m`.
pub fn min_length(m: &BigInt) -> Result<usize> {
    let p = integer_profile(m)?;
    let (v, w) = (p.v, p.w);
    let mut len = 5 * (v + 3) / 4 - w;
    if p.is_power_of_two() {
        len -= match v % 4 {
            1 => 3,
            3 => 1,
            _ => 0,
        };
    }
    Ok(len as usize)
}

/// `floor(4(n - 3) / 5)`, the base-2 logarithm of the largest consecutive integer.
pub fn consecutive_exponent(n: usize) -> Result<u64> {
    if n < 3 {
        return Err(Error::Domain(format!(
            "posit width must be at least 3, got {n}"
        )));
    }
    Ok((4 * (n as u64 - 3)) / 5)
}

/// Largest `L` such that every integer in `[-L, L]` is an `n`-bit posit.
pub fn largest_consecutive(n: usize) -> Result<BigUint> {
    consecutive_exponent(n).map(pow2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bs(s: &str) -> BitString {
        s.parse().unwrap()
    }

    fn int(m: i64) -> DyadicValue {
        DyadicValue::from_integer(&BigInt::from(m))
    }

    #[test]
    fn decode_examples() {
        assert_eq!(decode(&bs("00000")), DyadicValue::Zero);
        assert_eq!(decode(&bs("10000")), DyadicValue::NaR);
        assert_eq!(decode(&bs("0")), DyadicValue::Zero);
        assert_eq!(decode(&bs("1")), DyadicValue::NaR);
        assert_eq!(decode(&bs("01000000")), int(1));
        assert_eq!(decode(&bs("0101")), int(4));
        assert_eq!(decode(&bs("0100000000000000")), int(1));
        assert_eq!(decode(&bs("11000000")), int(-1));
    }

    #[test]
    fn decode_hand_values() {
        // 0 10 01 100 at n=8: r=0, ê=1, f=1/2 -> 3
        assert_eq!(decode(&bs("01001100")), int(3));
        // 0 0001 ... : k=3 zeros, r=-3, ê=0 -> 2^-12
        assert_eq!(
            decode(&bs("00001000")),
            DyadicValue::finite(false, BigUint::from(1u32), -12)
        );
        // maxpos at n=8: k=7, r=6 -> 2^24
        assert_eq!(decode(&bs("01111111")), int(1 << 24));
        // minpos at n=8 -> 2^-24
        assert_eq!(
            decode(&bs("00000001")),
            DyadicValue::finite(false, BigUint::from(1u32), -24)
        );
        // most negative finite at n=8 is -maxpos
        assert_eq!(decode(&bs("10000001")), int(-(1 << 24)));
    }

    #[test]
    fn encode_examples() {
        let cases = [
            (1, "01"),
            (4, "0101"),
            (16, "011"),
            (-4, "1011"),
            (3, "010011"),
            (8, "01011"),
        ];
        for (m, expected) in cases {
            let got = encode_integer(&BigInt::from(m), 64).unwrap();
            assert_eq!(got, bs(expected), "m = {m}");
            assert_eq!(got.len(), min_length(&BigInt::from(m)).unwrap());
            assert_eq!(decode(&got), int(m));
        }
        assert_eq!(encode_integer(&BigInt::from(0), 64).unwrap(), bs("0"));
    }

    #[test]
    fn encode_respects_capacity() {
        let err = encode_integer(&BigInt::from(3), 5).unwrap_err();
        assert_eq!(err, Error::Capacity { needed: 6, max: 5 });
        assert!(encode_integer(&BigInt::from(3), 6).is_ok());
    }

    #[test]
    fn min_length_examples() {
        assert_eq!(min_length(&BigInt::from(3)).unwrap(), 6);
        assert_eq!(min_length(&BigInt::from(8)).unwrap(), 5);
        assert_eq!(min_length(&BigInt::from(16)).unwrap(), 3);
        assert_eq!(min_length(&BigInt::from(-16)).unwrap(), 3);
        assert!(matches!(
            min_length(&BigInt::from(0)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn largest_consecutive_examples() {
        assert_eq!(largest_consecutive(8).unwrap(), BigUint::from(16u32));
        assert_eq!(largest_consecutive(16).unwrap(), BigUint::from(1024u32));
        assert_eq!(largest_consecutive(64).unwrap(), pow2(48));
        assert_eq!(largest_consecutive(3).unwrap(), BigUint::from(1u32));
        assert!(largest_consecutive(2).is_err());
    }

    #[test]
    fn no_integer_below_two_bits() {
        assert!(!decode(&bs("0")).is_finite() || decode(&bs("0")) == DyadicValue::Zero);
        assert_eq!(decode(&bs("1")), DyadicValue::NaR);
        for m in 1i64..2000 {
            assert!(min_length(&BigInt::from(m)).unwrap() >= 2);
        }
    }

    #[test]
    fn round_trip_up_to_2_pow_12() {
        for m in -4096i64..=4096 {
            if m == 0 {
                continue;
            }
            let m = BigInt::from(m);
            let b = encode_integer(&m, 64).unwrap();
            assert_eq!(decode(&b), DyadicValue::from_integer(&m));
            assert_eq!(b.len(), min_length(&m).unwrap());
        }
    }

    #[test]
    fn ghost_bits_do_not_change_value() {
        for len in 1..=10usize {
            for word in 0..(1u64 << len) {
                let b = BitString::from_word(word, len);
                let base = decode(&b);
                for extra in 1..4 {
                    assert_eq!(decode(&b.zero_extend(extra)), base, "{b}");
                }
            }
        }
    }
}
