//! Binary-expansion statistics of positive integers.
//!
//! For `k = a_0 + 2 a_1 + ... + 2^n a_n` with `a_n = 1`, the quantities
//! below drive every node construction and every bound in the crate:
//! the number of ones `sigma1`, the number of zeros `sigma0` among the
//! `n + 1` digits, and the 2-adic valuation `p`.

use serde::{Deserialize, Serialize};

use crate::error::{LejaError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinaryStats {
    pub k: u64,
    /// `2^n <= k < 2^(n+1)`.
    pub n: u32,
    pub sigma1: u32,
    pub sigma0: u32,
    /// Largest `p` with `2^p | k`.
    pub p: u32,
}

pub fn binary_stats(k: u64) -> Result<BinaryStats> {
    if k == 0 {
        return Err(LejaError::ZeroIndex);
    }
    let n = 63 - k.leading_zeros();
    let sigma1 = k.count_ones();
    Ok(BinaryStats {
        k,
        n,
        sigma1,
        sigma0: n + 1 - sigma1,
        p: k.trailing_zeros(),
    })
}

/// Number of ones in the binary expansion. `sigma1(0) = 0`.
#[inline]
pub fn sigma1(k: u64) -> u32 {
    k.count_ones()
}

/// 2-adic valuation. Panics on zero.
#[inline]
pub fn two_adic(k: u64) -> u32 {
    assert!(k > 0, "2-adic valuation of zero");
    k.trailing_zeros()
}

/// `n` with `2^n <= k < 2^(n+1)`. Panics on zero.
#[inline]
pub fn floor_log2(k: u64) -> u32 {
    assert!(k > 0, "log2 of zero");
    63 - k.leading_zeros()
}

/// Reverses the lowest `bits` bits of `k`.
#[inline]
pub fn reverse_bits(k: u64, bits: u32) -> u64 {
    if bits == 0 {
        return 0;
    }
    k.reverse_bits() >> (64 - bits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(
            binary_stats(1).unwrap(),
            BinaryStats { k: 1, n: 0, sigma1: 1, sigma0: 0, p: 0 }
        );
        assert_eq!(
            binary_stats(6).unwrap(),
            BinaryStats { k: 6, n: 2, sigma1: 2, sigma0: 1, p: 1 }
        );
        assert_eq!(
            binary_stats(1 << 10).unwrap(),
            BinaryStats { k: 1024, n: 10, sigma1: 1, sigma0: 10, p: 10 }
        );
    }

    #[test]
    fn zero_rejected() {
        assert_eq!(binary_stats(0), Err(LejaError::ZeroIndex));
    }

    #[test]
    fn recursions_up_to_2_pow_16() {
        for k in 1..=(1u64 << 16) {
            let s = binary_stats(k).unwrap();
            assert_eq!(s.sigma1 + s.sigma0, s.n + 1);
            assert!(s.p <= s.n);
            if k % 2 == 1 {
                assert_eq!(s.p, 0);
            }
            let b = binary_stats(2 * k).unwrap();
            assert_eq!(b.sigma1, s.sigma1);
            let c = binary_stats(2 * k + 1).unwrap();
            assert_eq!(c.sigma1, s.sigma1 + 1);
            // identity behind the gamma-table recursion
            let m = binary_stats(k + 1).unwrap();
            assert_eq!(c.sigma1 + c.p, m.sigma1 + m.p);
        }
    }

    #[test]
    fn bit_reversal() {
        assert_eq!(reverse_bits(0b110, 3), 0b011);
        assert_eq!(reverse_bits(1, 1), 1);
        assert_eq!(reverse_bits(0b1011, 4), 0b1101);
    }
}
