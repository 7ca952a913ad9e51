//! Exhaustive enumeration of bit patterns.
//!
//! Every result here is derived only from the decoders, never from the
//! closed forms, so the two can be checked against each other.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::bits::{twos_complement, BitString};
use crate::dyadic::{pow2, DyadicValue};
use crate::error::{Error, Result};
use crate::format::{FormatSpec, Tapered};

/// Widest format the oracle will enumerate.
pub const ENUMERATION_BUDGET: usize = 24;

fn check_budget(width: usize) -> Result<()> {
    if width > ENUMERATION_BUDGET {
        return Err(Error::Budget {
            width,
            max: ENUMERATION_BUDGET,
        });
    }
    if width == 0 {
        return Err(Error::Domain("width must be positive".into()));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    ClosedForm,
    Oracle,
}

impl std::fmt::Display for Source {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Source::ClosedForm => "closed_form",
            Source::Oracle => "oracle",
        })
    }
}

/// Integers within `[-window, window]` that some pattern of the format decodes to.
#[derive(Debug, Clone)]
pub struct RepresentableSet {
    pub format: FormatSpec,
    pub n: usize,
    pub window: BigUint,
    pub integers: BTreeSet<BigInt>,
}

impl RepresentableSet {
    pub fn contains(&self, m: &BigInt) -> bool {
        self.integers.contains(m)
    }

    /// Smallest positive `m` with `m + 1` absent, or zero when 1 is absent.
    pub fn largest_consecutive(&self) -> BigUint {
        let mut expected = BigInt::one();
        for m in self.integers.range(BigInt::one()..) {
            if *m != expected {
                break;
            }
            expected += 1;
        }
        (expected - BigInt::one()).magnitude().clone()
    }
}

fn decode_pattern(format: &FormatSpec, word: u64, width: usize) -> DyadicValue {
    let b = BitString::from_word(word, width);
    match format {
        FormatSpec::Minifloat(spec) => spec.decode(&b).expect("pattern width matches format"),
        other => other.tapered().expect("tapered format").decode(&b),
    }
}

pub fn representable_set(format: &FormatSpec, window: &BigUint) -> Result<RepresentableSet> {
    let n = format.width();
    check_budget(n)?;
    let integers = (0..1u64 << n)
        .into_par_iter()
        .fold(BTreeSet::new, |mut set, word| {
            if let Some(m) = decode_pattern(format, word, n).to_integer() {
                if m.magnitude() <= window {
                    set.insert(m);
                }
            }
            set
        })
        .reduce(BTreeSet::new, |mut a, mut b| {
            a.append(&mut b);
            a
        });
    Ok(RepresentableSet {
        format: *format,
        n,
        window: window.clone(),
        integers,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsecutiveReport {
    pub format: FormatSpec,
    pub n: usize,
    pub largest_consecutive: BigUint,
    /// `floor(log2(largest_consecutive))`, zero when nothing is representable.
    pub log2_value: u64,
    pub source: Source,
    pub closed_form: Option<BigUint>,
    /// The enumerated value equals the closed form.
    pub agreement: bool,
}

/// Largest consecutive integer by enumerating all patterns of the format.
pub fn largest_consecutive(format: &FormatSpec) -> Result<ConsecutiveReport> {
    let n = format.width();
    // n patterns hold at most 2^n distinct values, so the first gap is below 2^n
    let set = representable_set(format, &pow2(n as u64))?;
    let largest = set.largest_consecutive();
    let closed_form = format.consecutive_closed_form();
    Ok(ConsecutiveReport {
        format: *format,
        n,
        log2_value: largest.bits().saturating_sub(1),
        agreement: closed_form.as_ref() == Some(&largest),
        closed_form,
        largest_consecutive: largest,
        source: Source::Oracle,
    })
}

/// Shortest length `<= max_len` at which some pattern decodes to `m`.
pub fn min_length(family: Tapered, m: &BigInt, max_len: usize) -> Result<Option<usize>> {
    check_budget(max_len)?;
    if m.is_zero() {
        return Err(Error::Domain(
            "minimal length is defined for nonzero integers".into(),
        ));
    }
    let target = DyadicValue::from_integer(m);
    for len in 1..=max_len {
        let found = (0..1u64 << len)
            .into_par_iter()
            .any(|word| family.decode(&BitString::from_word(word, len)) == target);
        if found {
            return Ok(Some(len));
        }
    }
    Ok(None)
}

/// [`min_length`] for every `m` in `1..=max_m` at once; entry `i` is for `m = i + 1`.
///
/// Each length is enumerated once and the scan stops as soon as every
/// integer has been seen.
pub fn min_lengths(family: Tapered, max_m: u64, max_len: usize) -> Result<Vec<Option<usize>>> {
    check_budget(max_len)?;
    let mut result = vec![None; max_m as usize];
    let mut missing = max_m as usize;
    for len in 1..=max_len {
        if missing == 0 {
            break;
        }
        let seen: BTreeSet<u64> = (0..1u64 << len)
            .into_par_iter()
            .filter_map(
                |word| match family.decode(&BitString::from_word(word, len)) {
                    v @ DyadicValue::Finite {
                        negative: false, ..
                    } => v.to_i64().map(|m| m as u64),
                    _ => None,
                },
            )
            .filter(|m| (1..=max_m).contains(m))
            .collect();
        for m in seen {
            let slot = &mut result[m as usize - 1];
            if slot.is_none() {
                *slot = Some(len);
                missing -= 1;
            }
        }
    }
    Ok(result)
}

/// Patterns of width `n` whose two's complement does not decode to the negated value.
pub fn negation_violations(family: Tapered, n: usize) -> Result<Vec<BitString>> {
    check_budget(n)?;
    Ok((0..1u64 << n)
        .into_par_iter()
        .filter_map(|word| {
            let b = BitString::from_word(word, n);
            let value = family.decode(&b);
            if !value.is_finite() || value == DyadicValue::Zero {
                return None;
            }
            (family.decode(&twos_complement(&b)) != -value).then_some(b)
        })
        .collect())
}

/// The set is closed under negation and contains zero.
pub fn is_symmetric(set: &RepresentableSet) -> bool {
    set.integers.contains(&BigInt::zero())
        && set.integers.iter().all(|m| set.integers.contains(&-m))
}
