//! Inputs shared by the benchmarks.

use intrep::BitString;
use num_bigint::BigInt;

/// Every `n`-bit pattern, in counting order.
pub fn all_patterns(n: usize) -> Vec<BitString> {
    assert!(n <= 20, "too many patterns for a benchmark input");
    (0..1u64 << n).map(|w| BitString::from_word(w, n)).collect()
}

/// `count` integers spread over `[-2^bits, 2^bits]`, skipping zero.
pub fn spread_integers(count: usize, bits: u32) -> Vec<BigInt> {
    // fixed LCG so runs are comparable
    let mut state: u64 = 0x2545_f491_4f6c_dd1d;
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        let width = 1 + (state >> 58) as u32 % bits.min(63);
        let magnitude = (state >> 1) & ((1u64 << width) - 1);
        if magnitude == 0 {
            continue;
        }
        let m = BigInt::from(magnitude);
        out.push(if state & 1 == 1 { -m } else { m });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inputs() {
        assert_eq!(all_patterns(5).len(), 32);
        let ints = spread_integers(100, 40);
        assert_eq!(ints.len(), 100);
        assert!(ints.iter().all(|m| m.bits() <= 40 && m != &BigInt::from(0)));
    }
}
