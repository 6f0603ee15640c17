//! Exact dyadic angles `num * pi / 2^log2den`.
//!
//! Every node in the crate is stored as one of these. Floating-point
//! coordinates are derived views; set equality between node families is
//! decided on the integers.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::binary::{floor_log2, reverse_bits};
use crate::error::{LejaError, Result};

/// Largest supported denominator exponent.
pub const MAX_LOG2DEN: u32 = 62;

/// Angle `num * pi / 2^log2den` reduced to `[0, 2pi)`.
///
/// Canonical form: either `num == 0 && log2den == 0`, or `num` odd with
/// `num < 2^(log2den + 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DyadicAngle {
    num: u64,
    log2den: u32,
}

impl DyadicAngle {
    pub const ZERO: DyadicAngle = DyadicAngle { num: 0, log2den: 0 };
    pub const PI: DyadicAngle = DyadicAngle { num: 1, log2den: 0 };
    pub const HALF_PI: DyadicAngle = DyadicAngle { num: 1, log2den: 1 };

    /// Builds `num * pi / 2^log2den`, reducing modulo `2pi` and stripping
    /// common factors of two.
    pub fn new(num: u64, log2den: u32) -> Result<Self> {
        if log2den > MAX_LOG2DEN {
            return Err(LejaError::AngleOverflow { max: MAX_LOG2DEN });
        }
        let modulus = 1u64 << (log2den + 1);
        Ok(Self::canonical(num & (modulus - 1), log2den))
    }

    /// `pi / 2^n`.
    pub fn pi_over_pow2(n: u32) -> Result<Self> {
        Self::new(1, n)
    }

    fn canonical(num: u64, log2den: u32) -> Self {
        if num == 0 {
            return Self::ZERO;
        }
        let tz = num.trailing_zeros().min(log2den);
        let (num, log2den) = (num >> tz, log2den - tz);
        // num even here means log2den hit zero: num/1 * pi with num even is 0 mod 2pi
        if num % 2 == 0 {
            Self::ZERO
        } else {
            DyadicAngle { num: num % (1u64 << (log2den + 1)), log2den }
        }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn log2den(&self) -> u32 {
        self.log2den
    }

    /// `theta / pi` as a float in `[0, 2)`.
    pub fn over_pi(&self) -> f64 {
        self.num as f64 / (1u64 << self.log2den) as f64
    }

    pub fn radians(&self) -> f64 {
        std::f64::consts::PI * self.over_pi()
    }

    /// `2 theta mod 2pi`.
    pub fn double(&self) -> Self {
        if self.log2den == 0 {
            return Self::ZERO;
        }
        Self::canonical(self.num, self.log2den - 1)
    }

    /// `theta / 2` in `[0, pi)`.
    pub fn halve(&self) -> Result<Self> {
        if self.num == 0 {
            return Ok(Self::ZERO);
        }
        Self::new(self.num, self.log2den + 1)
    }

    /// `theta + pi`, i.e. the angle of `-e^{i theta}`.
    pub fn negate(&self) -> Self {
        self.add(&Self::PI)
    }

    /// `2pi - theta`, i.e. the angle of the complex conjugate.
    pub fn conjugate(&self) -> Self {
        if self.num == 0 {
            return Self::ZERO;
        }
        let modulus = 1u64 << (self.log2den + 1);
        Self::canonical(modulus - self.num, self.log2den)
    }

    /// `theta + other mod 2pi`.
    pub fn add(&self, other: &Self) -> Self {
        let d = self.log2den.max(other.log2den);
        let a = self.num << (d - self.log2den);
        let b = other.num << (d - other.log2den);
        let modulus = 1u64 << (d + 1);
        // both below modulus <= 2^63, so the sum fits
        Self::canonical((a + b) % modulus, d)
    }

    /// Representative of `{theta, 2pi - theta}` in `[0, pi]`; equal folds
    /// mean equal cosines.
    pub fn fold(&self) -> Self {
        if self.num > (1u64 << self.log2den) {
            self.conjugate()
        } else {
            *self
        }
    }

    /// `(cos theta, sin theta)` with exact values on multiples of `pi/2` and
    /// exact sign symmetry under `theta -> theta + pi`.
    pub fn cos_sin(&self) -> (f64, f64) {
        if self.num == 0 {
            return (1.0, 0.0);
        }
        // theta = (q + r / D) * pi/2 with D = 2^(log2den - 1)
        let (q, r, d) = if self.log2den == 0 {
            (2 * self.num, 0, 1u64)
        } else {
            let d = 1u64 << (self.log2den - 1);
            (self.num / d, self.num % d, d)
        };
        let (c, s) = if r == 0 {
            (1.0, 0.0)
        } else if 2 * r <= d {
            let phi = std::f64::consts::FRAC_PI_2 * (r as f64 / d as f64);
            (phi.cos(), phi.sin())
        } else {
            let phi = std::f64::consts::FRAC_PI_2 * ((d - r) as f64 / d as f64);
            (phi.sin(), phi.cos())
        };
        let (c, s) = match q % 4 {
            0 => (c, s),
            1 => (-s, c),
            2 => (-c, -s),
            _ => (s, -c),
        };
        // no negative zeros
        (c + 0.0, s + 0.0)
    }

    pub fn cos(&self) -> f64 {
        self.cos_sin().0
    }

    fn cmp_value(&self, other: &Self) -> Ordering {
        let d = self.log2den.max(other.log2den);
        (self.num << (d - self.log2den)).cmp(&(other.num << (d - other.log2den)))
    }
}

impl PartialOrd for DyadicAngle {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DyadicAngle {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_value(other)
    }
}

impl fmt::Display for DyadicAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.num, self.log2den) {
            (0, _) => write!(f, "0"),
            (1, 0) => write!(f, "pi"),
            (n, 0) => write!(f, "{n}pi"),
            (1, d) => write!(f, "pi/{}", 1u64 << d),
            (n, d) => write!(f, "{n}pi/{}", 1u64 << d),
        }
    }
}

/// Angle of the `k`-th point of the bit-reversal enumeration of the unit
/// circle: `pi * sum_j a_j 2^-j` where `k = sum_j a_j 2^j`.
pub fn bit_reversed_angle(k: u64) -> DyadicAngle {
    if k == 0 {
        return DyadicAngle::ZERO;
    }
    let n = floor_log2(k);
    // the top digit a_n lands on 2^0, so the numerator is odd
    DyadicAngle::canonical(reverse_bits(k, n + 1), n)
}
