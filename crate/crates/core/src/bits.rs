//! Fixed-length bit strings, stored MSB first.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};

/// A non-empty sequence of bits, most significant bit first.
///
/// Codecs read positions past the end as zero ("ghost bits"), so a string
/// and any zero extension of it decode to the same value.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitString {
    bits: Vec<bool>,
}

impl BitString {
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::Domain(
                "bit string must hold at least one bit".into(),
            ));
        }
        Ok(Self { bits })
    }

    pub fn zeros(len: usize) -> Self {
        assert!(len >= 1, "bit string must hold at least one bit");
        Self {
            bits: vec![false; len],
        }
    }

    /// The `len` low bits of `word`, MSB first.
    pub fn from_word(word: u64, len: usize) -> Self {
        assert!((1..=64).contains(&len), "word patterns hold 1 to 64 bits");
        let bits = (0..len).rev().map(|i| (word >> i) & 1 == 1).collect();
        Self { bits }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    /// Always false; kept for clippy's `len_without_is_empty`.
    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Bit at MSB-first position `i`; ghost bits past the end read as zero.
    #[inline]
    pub fn bit(&self, i: usize) -> bool {
        self.bits.get(i).copied().unwrap_or(false)
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.bits
    }

    /// Unsigned integer formed by `count` bits starting at `start`, with ghost bits past the end.
    pub fn field(&self, start: usize, count: usize) -> BigUint {
        if count <= 64 {
            return BigUint::from(self.field_u64(start, count));
        }
        let mut acc = BigUint::zero();
        for i in start..start + count {
            acc <<= 1u32;
            if self.bit(i) {
                acc += 1u32;
            }
        }
        acc
    }

    /// Same as [`field`](Self::field) for fields of at most 64 bits.
    pub fn field_u64(&self, start: usize, count: usize) -> u64 {
        debug_assert!(count <= 64);
        (start..start + count).fold(0u64, |acc, i| (acc << 1) | self.bit(i) as u64)
    }

    pub fn trailing_zeros(&self) -> usize {
        self.bits.iter().rev().take_while(|b| !**b).count()
    }

    pub fn zero_extend(&self, extra: usize) -> Self {
        let mut bits = self.bits.clone();
        bits.resize(self.len() + extra, false);
        Self { bits }
    }

    /// True when every bit after the first is zero.
    pub fn tail_is_zero(&self) -> bool {
        self.bits[1..].iter().all(|b| !b)
    }
}

/// Shortest prefix of `b`, at least `min_len` long, whose zero extension gives back `b`.
pub fn truncate_trailing_zeros(b: &BitString, min_len: usize) -> BitString {
    let min_len = min_len.max(1);
    let keep = (b.len() - b.trailing_zeros()).max(min_len).min(b.len());
    BitString {
        bits: b.bits[..keep].to_vec(),
    }
}

/// Two's complement of `b` at its own width.
pub fn twos_complement(b: &BitString) -> BitString {
    let mut bits: Vec<bool> = b.bits.iter().map(|x| !x).collect();
    for bit in bits.iter_mut().rev() {
        *bit = !*bit;
        if *bit {
            break;
        }
    }
    BitString { bits }
}

impl FromStr for BitString {
    type Err = Error;

    /// Accepts ASCII `0`/`1`, an optional `0b` prefix, and `_` or spaces as separators.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim();
        let body = body.strip_prefix("0b").unwrap_or(body);
        let mut bits = Vec::with_capacity(body.len());
        for ch in body.chars() {
            match ch {
                '0' => bits.push(false),
                '1' => bits.push(true),
                '_' | ' ' => {}
                other => {
                    return Err(Error::Parse(format!(
                        "invalid bit character {other:?} in {s:?}"
                    )))
                }
            }
        }
        if bits.is_empty() {
            return Err(Error::Parse(format!("empty bit string {s:?}")));
        }
        Ok(Self { bits })
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString(\"{self}\")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bs(s: &str) -> BitString {
        s.parse().unwrap()
    }

    #[test]
    fn truncation_examples() {
        assert_eq!(truncate_trailing_zeros(&bs("011000"), 2), bs("011"));
        assert_eq!(truncate_trailing_zeros(&bs("0101"), 2), bs("0101"));
        assert_eq!(truncate_trailing_zeros(&bs("0000"), 1), bs("0"));
        assert_eq!(truncate_trailing_zeros(&bs("0100"), 3), bs("010"));
        assert_eq!(truncate_trailing_zeros(&bs("01"), 5), bs("01"));
    }

    #[test]
    fn twos_complement_examples() {
        assert_eq!(twos_complement(&bs("0100")), bs("1100"));
        assert_eq!(twos_complement(&bs("0000")), bs("0000"));
        assert_eq!(twos_complement(&bs("1000")), bs("1000"));
        assert_eq!(twos_complement(&bs("0001")), bs("1111"));
    }

    #[test]
    fn parsing() {
        assert_eq!(bs("0b0101"), bs("0101"));
        assert_eq!(bs("0 00000 0000000000").len(), 16);
        assert_eq!(bs("1_0").to_string(), "10");
        assert!("".parse::<BitString>().is_err());
        assert!("0b".parse::<BitString>().is_err());
        assert!("0120".parse::<BitString>().is_err());
    }

    #[test]
    fn fields_read_ghost_bits() {
        let b = bs("0101");
        assert_eq!(b.field_u64(1, 3), 0b101);
        assert_eq!(b.field_u64(2, 4), 0b0100);
        assert_eq!(b.field(0, 70), BigUint::from(0b0101u32) << 66u32);
    }

    fn arb_bits() -> impl Strategy<Value = BitString> {
        prop::collection::vec(any::<bool>(), 1..40).prop_map(|v| BitString::new(v).unwrap())
    }

    proptest! {
        #[test]
        fn truncation_is_minimal_and_idempotent(b in arb_bits(), min_len in 1usize..8) {
            let t = truncate_trailing_zeros(&b, min_len);
            prop_assert_eq!(truncate_trailing_zeros(&t, min_len), t.clone());
            prop_assert_eq!(t.zero_extend(b.len() - t.len()), b.clone());
            if t.len() > min_len {
                prop_assert!(t.bit(t.len() - 1));
            }
        }

        #[test]
        fn twos_complement_is_involution(b in arb_bits()) {
            prop_assert_eq!(twos_complement(&twos_complement(&b)), b);
        }

        #[test]
        fn negation_commutes_with_truncation(b in arb_bits()) {
            let t = b.trailing_zeros();
            let neg = twos_complement(&b);
            prop_assert_eq!(neg.trailing_zeros(), t);
            if t < b.len() {
                let head = BitString::new(b.as_slice()[..b.len() - t].to_vec()).unwrap();
                let neg_head = BitString::new(neg.as_slice()[..b.len() - t].to_vec()).unwrap();
                prop_assert_eq!(twos_complement(&head), neg_head);
            }
        }
    }
}
