//! IEEE 754 style sign/exponent/fraction formats, including the OFP8 types.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::bits::BitString;
use crate::dyadic::{pow2, DyadicValue};
use crate::error::{Error, Result};

/// How the all-ones biased exponent is interpreted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpecialValues {
    /// Infinities and NaNs, as in IEEE 754.
    Ieee,
    /// No infinities; only exponent and mantissa all ones is NaN (OFP8 E4M3).
    E4m3,
    /// No special values; the all-ones exponent is an ordinary binade.
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MinifloatSpec {
    pub exponent_bits: u32,
    pub fraction_bits: u32,
    pub bias: i64,
    pub special: SpecialValues,
}

impl MinifloatSpec {
    pub const FLOAT16: Self = Self::ieee(5, 10);
    pub const BFLOAT16: Self = Self::ieee(8, 7);
    pub const FLOAT32: Self = Self::ieee(8, 23);
    pub const FLOAT64: Self = Self::ieee(11, 52);
    pub const FLOAT128: Self = Self::ieee(15, 112);
    pub const E4M3: Self = Self {
        exponent_bits: 4,
        fraction_bits: 3,
        bias: 7,
        special: SpecialValues::E4m3,
    };
    pub const E5M2: Self = Self::ieee(5, 2);

    pub const PRESETS: [(&'static str, Self); 7] = [
        ("float16", Self::FLOAT16),
        ("bfloat16", Self::BFLOAT16),
        ("float32", Self::FLOAT32),
        ("float64", Self::FLOAT64),
        ("float128", Self::FLOAT128),
        ("e4m3", Self::E4M3),
        ("e5m2", Self::E5M2),
    ];

    /// IEEE layout with the standard bias `2^(n_e - 1) - 1`.
    pub const fn ieee(exponent_bits: u32, fraction_bits: u32) -> Self {
        Self {
            exponent_bits,
            fraction_bits,
            bias: (1i64 << (exponent_bits - 1)) - 1,
            special: SpecialValues::Ieee,
        }
    }

    pub fn preset(name: &str) -> Option<Self> {
        Self::PRESETS
            .iter()
            .find(|(n, _)| n.eq_ignore_ascii_case(name))
            .map(|(_, s)| *s)
    }

    pub fn preset_name(&self) -> Option<&'static str> {
        Self::PRESETS
            .iter()
            .find(|(_, s)| s == self)
            .map(|(n, _)| *n)
    }

    pub fn width(&self) -> usize {
        1 + self.exponent_bits as usize + self.fraction_bits as usize
    }

    fn all_ones_exponent(&self) -> u64 {
        (1u64 << self.exponent_bits) - 1
    }

    /// Unbiased exponent of the smallest normal binade.
    pub fn min_normal_exponent(&self) -> i64 {
        1 - self.bias
    }

    /// Unbiased exponent of the largest binade holding finite values.
    pub fn max_normal_exponent(&self) -> i64 {
        let top = self.all_ones_exponent() as i64;
        let top = match self.special {
            SpecialValues::Ieee => top - 1,
            // with no mantissa bits the whole all-ones binade is NaN
            SpecialValues::E4m3 if self.fraction_bits == 0 => top - 1,
            SpecialValues::E4m3 | SpecialValues::None => top,
        };
        top - self.bias
    }

    pub fn decode(&self, b: &BitString) -> Result<DyadicValue> {
        if b.len() != self.width() {
            return Err(Error::Format(format!(
                "expected {} bits for this format, got {}",
                self.width(),
                b.len()
            )));
        }
        let nf = self.fraction_bits as usize;
        let sign = b.bit(0);
        let biased = b.field_u64(1, self.exponent_bits as usize);
        let fraction = b.field(1 + self.exponent_bits as usize, nf);
        let fraction_all_ones = fraction == pow2(nf as u64) - 1u32;

        if biased == self.all_ones_exponent() {
            match self.special {
                SpecialValues::Ieee => return Ok(DyadicValue::NaR),
                SpecialValues::E4m3 if fraction_all_ones => return Ok(DyadicValue::NaR),
                _ => {}
            }
        }
        let value = if biased == 0 {
            if fraction.is_zero() {
                return Ok(DyadicValue::Zero);
            }
            DyadicValue::finite(sign, fraction, self.min_normal_exponent() - nf as i64)
        } else {
            DyadicValue::finite(
                sign,
                pow2(nf as u64) + fraction,
                biased as i64 - self.bias - nf as i64,
            )
        };
        Ok(value)
    }

    /// Whether every integer up to `2^(n_f + 1)` lies in the normal range,
    /// the condition under which [`consecutive_closed_form`](Self::consecutive_closed_form) holds.
    pub fn closed_form_applies(&self) -> bool {
        self.min_normal_exponent() <= 0 && self.max_normal_exponent() > self.fraction_bits as i64
    }

    /// `2^(n_f + 1)` when [`closed_form_applies`](Self::closed_form_applies).
    pub fn consecutive_closed_form(&self) -> Option<BigUint> {
        self.closed_form_applies()
            .then(|| pow2(self.fraction_bits as u64 + 1))
    }
}

impl fmt::Display for MinifloatSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(name) = self.preset_name() {
            return f.write_str(name);
        }
        let special = match self.special {
            SpecialValues::Ieee => "ieee",
            SpecialValues::E4m3 => "e4m3",
            SpecialValues::None => "none",
        };
        write!(
            f,
            "minifloat:{},{},{},{}",
            self.exponent_bits, self.fraction_bits, self.bias, special
        )
    }
}

impl FromStr for MinifloatSpec {
    type Err = Error;

    /// A preset name, or `minifloat:<n_e>,<n_f>[,<bias>[,ieee|e4m3|none]]`.
    fn from_str(s: &str) -> Result<Self> {
        if let Some(spec) = Self::preset(s) {
            return Ok(spec);
        }
        let body = s
            .strip_prefix("minifloat:")
            .ok_or_else(|| Error::Parse(format!("unknown minifloat format {s:?}")))?;
        let parts: Vec<&str> = body.split(',').map(str::trim).collect();
        if !(2..=4).contains(&parts.len()) {
            return Err(Error::Parse(format!(
                "expected minifloat:<n_e>,<n_f>[,<bias>[,<special>]], got {s:?}"
            )));
        }
        let num = |p: &str| {
            p.parse::<i64>()
                .map_err(|e| Error::Parse(format!("{p:?}: {e}")))
        };
        let exponent_bits = num(parts[0])?;
        let fraction_bits = num(parts[1])?;
        if !(1..=30).contains(&exponent_bits) || !(0..=240).contains(&fraction_bits) {
            return Err(Error::Parse(format!("unsupported field widths in {s:?}")));
        }
        let mut spec = Self::ieee(exponent_bits as u32, fraction_bits as u32);
        if let Some(bias) = parts.get(2) {
            spec.bias = num(bias)?;
        }
        if let Some(special) = parts.get(3) {
            spec.special = match special.to_ascii_lowercase().as_str() {
                "ieee" => SpecialValues::Ieee,
                "e4m3" => SpecialValues::E4m3,
                "none" => SpecialValues::None,
                other => {
                    return Err(Error::Parse(format!(
                        "unknown special-value convention {other:?}"
                    )))
                }
            };
        }
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn bs(s: &str) -> BitString {
        s.parse().unwrap()
    }

    fn int(m: i64) -> DyadicValue {
        DyadicValue::from_integer(&BigInt::from(m))
    }

    #[test]
    fn decode_examples() {
        let e4m3 = MinifloatSpec::E4M3;
        assert_eq!(e4m3.decode(&bs("01111110")).unwrap(), int(448));
        assert_eq!(e4m3.decode(&bs("01111111")).unwrap(), DyadicValue::NaR);
        assert_eq!(e4m3.decode(&bs("11111111")).unwrap(), DyadicValue::NaR);
        assert_eq!(e4m3.decode(&bs("01111000")).unwrap(), int(256));
        assert_eq!(
            MinifloatSpec::FLOAT16
                .decode(&bs("0 00000 0000000000"))
                .unwrap(),
            DyadicValue::Zero
        );
        assert_eq!(
            MinifloatSpec::FLOAT16
                .decode(&bs("1 00000 0000000000"))
                .unwrap(),
            DyadicValue::Zero
        );
        assert_eq!(
            MinifloatSpec::E5M2.decode(&bs("0 11111 00")).unwrap(),
            DyadicValue::NaR
        );
        assert_eq!(
            MinifloatSpec::E5M2.decode(&bs("0 11110 11")).unwrap(),
            int(57344)
        );
    }

    #[test]
    fn decode_subnormals() {
        // smallest float16 subnormal 2^-24
        let v = MinifloatSpec::FLOAT16
            .decode(&bs("0 00000 0000000001"))
            .unwrap();
        assert_eq!(v, DyadicValue::finite(false, BigUint::from(1u32), -24));
        // e4m3 largest subnormal 7/8 * 2^-6
        let v = MinifloatSpec::E4M3.decode(&bs("1 0000 111")).unwrap();
        assert_eq!(v, DyadicValue::finite(true, BigUint::from(7u32), -9));
    }

    #[test]
    fn decode_agrees_with_native_f32_and_f16_bits() {
        for bits in [
            0x3f80_0000u32,
            0x4b80_0000,
            0xc2f6_e979,
            0x0000_0001,
            0x7f7f_ffff,
            0x8080_0000,
        ] {
            let v = MinifloatSpec::FLOAT32
                .decode(&BitString::from_word(bits as u64, 32))
                .unwrap();
            let x = f32::from_bits(bits) as f64;
            let DyadicValue::Finite {
                negative,
                significand,
                exponent,
            } = v
            else {
                panic!()
            };
            let mag = significand.to_string().parse::<f64>().unwrap() * 2f64.powi(exponent as i32);
            assert_eq!(if negative { -mag } else { mag }, x);
        }
        let inf = MinifloatSpec::FLOAT32
            .decode(&BitString::from_word(0x7f80_0000, 32))
            .unwrap();
        assert_eq!(inf, DyadicValue::NaR);
    }

    #[test]
    fn width_mismatch_is_an_error() {
        assert!(matches!(
            MinifloatSpec::E4M3.decode(&bs("0101")),
            Err(Error::Format(_))
        ));
    }

    #[test]
    fn closed_form_precondition() {
        assert_eq!(
            MinifloatSpec::FLOAT16.consecutive_closed_form(),
            Some(BigUint::from(2048u32))
        );
        assert_eq!(
            MinifloatSpec::BFLOAT16.consecutive_closed_form(),
            Some(BigUint::from(256u32))
        );
        assert_eq!(
            MinifloatSpec::E5M2.consecutive_closed_form(),
            Some(BigUint::from(8u32))
        );
        assert_eq!(
            MinifloatSpec::E4M3.consecutive_closed_form(),
            Some(BigUint::from(16u32))
        );
        assert_eq!(
            MinifloatSpec::FLOAT128.consecutive_closed_form(),
            Some(pow2(113))
        );
        assert_eq!(MinifloatSpec::E4M3.max_normal_exponent(), 8);
        assert_eq!(MinifloatSpec::E5M2.max_normal_exponent(), 15);
        assert_eq!(MinifloatSpec::E5M2.min_normal_exponent(), -14);
        // 2 exponent bits cannot reach 2^(10+1)
        assert!(!MinifloatSpec::ieee(2, 10).closed_form_applies());
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(
            "bfloat16".parse::<MinifloatSpec>().unwrap(),
            MinifloatSpec::BFLOAT16
        );
        assert_eq!(
            "E4M3".parse::<MinifloatSpec>().unwrap(),
            MinifloatSpec::E4M3
        );
        let custom: MinifloatSpec = "minifloat:3,4,3,none".parse().unwrap();
        assert_eq!(custom.width(), 8);
        assert_eq!(custom.special, SpecialValues::None);
        assert_eq!(custom.to_string().parse::<MinifloatSpec>().unwrap(), custom);
        assert_eq!("minifloat:4,3".parse::<MinifloatSpec>().unwrap().bias, 7);
        assert!("float8".parse::<MinifloatSpec>().is_err());
        assert!("minifloat:0,3".parse::<MinifloatSpec>().is_err());
    }
}
