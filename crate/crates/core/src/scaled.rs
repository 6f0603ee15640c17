//! Products of many complex factors without overflow or underflow.
//!
//! A value is held as `mantissa * 2^exp` with the mantissa kept near unit
//! magnitude. Multiplying thousands of factors in `[0, 2]` stays exact to
//! the usual per-factor rounding.

use num_complex::Complex64;

/// `x * 2^e`, stepping so intermediate powers stay finite.
pub fn ldexp(mut x: f64, mut e: i32) -> f64 {
    const STEP: i32 = 1000;
    let big = f64::from_bits(((1023 + STEP) as u64) << 52);
    let small = f64::from_bits(((1023 - STEP) as u64) << 52);
    while e > STEP {
        x *= big;
        e -= STEP;
    }
    while e < -STEP {
        x *= small;
        e += STEP;
    }
    x * pow2(e)
}

/// `2^e` for `|e| <= 1022`.
#[inline]
fn pow2(e: i32) -> f64 {
    debug_assert!((-1022..=1023).contains(&e));
    f64::from_bits(((1023 + e) as u64) << 52)
}

/// Binary exponent of a finite nonzero `x`: `2^e <= |x| < 2^(e+1)`.
#[inline]
pub fn exponent(x: f64) -> i32 {
    let bits = x.abs().to_bits();
    let raw = (bits >> 52) as i32;
    if raw == 0 {
        // subnormal
        return exponent(x * pow2(64)) - 64;
    }
    raw - 1023
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scaled {
    mant: Complex64,
    exp: i32,
}

impl Scaled {
    pub const ONE: Scaled = Scaled { mant: Complex64 { re: 1.0, im: 0.0 }, exp: 0 };

    pub fn new(z: Complex64) -> Self {
        let mut s = Scaled { mant: z, exp: 0 };
        s.renorm();
        s
    }

    #[inline]
    fn renorm(&mut self) {
        let a = self.mant.re.abs().max(self.mant.im.abs());
        if a == 0.0 || !a.is_finite() {
            return;
        }
        let e = exponent(a);
        if e != 0 {
            self.mant *= pow2(-e);
            self.exp += e;
        }
    }

    #[inline]
    pub fn mul(&mut self, z: Complex64) {
        self.mant *= z;
        self.renorm();
    }

    pub fn mul_scaled(&mut self, other: &Scaled) {
        self.mant *= other.mant;
        self.exp += other.exp;
        self.renorm();
    }

    pub fn is_zero(&self) -> bool {
        self.mant.re == 0.0 && self.mant.im == 0.0
    }

    pub fn mantissa(&self) -> Complex64 {
        self.mant
    }

    pub fn exp(&self) -> i32 {
        self.exp
    }

    /// Value times `2^shift` as a plain complex number.
    pub fn to_complex_shifted(&self, shift: i32) -> Complex64 {
        let e = self.exp + shift;
        Complex64::new(ldexp(self.mant.re, e), ldexp(self.mant.im, e))
    }

    pub fn to_complex(&self) -> Complex64 {
        self.to_complex_shifted(0)
    }

    pub fn log2_abs(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        self.mant.norm().log2() + self.exp as f64
    }

    pub fn abs(&self) -> f64 {
        ldexp(self.mant.norm(), self.exp)
    }

    /// `1 / self` as a scaled value.
    pub fn recip(&self) -> Scaled {
        let mut s = Scaled { mant: self.mant.inv(), exp: -self.exp };
        s.renorm();
        s
    }
}

/// Running product of non-negative reals with an explicit exponent.
#[derive(Debug, Clone, Copy)]
pub struct ScaledReal {
    mant: f64,
    exp: i32,
}

impl ScaledReal {
    const HI: f64 = 1.0e150;
    const LO: f64 = 1.0e-150;

    pub fn one() -> Self {
        ScaledReal { mant: 1.0, exp: 0 }
    }

    #[inline]
    pub fn mul(&mut self, x: f64) {
        self.mant *= x;
        if !(Self::LO..=Self::HI).contains(&self.mant) && self.mant != 0.0 {
            let e = exponent(self.mant);
            self.mant *= pow2(-e);
            self.exp += e;
        }
    }

    pub fn log2(&self) -> f64 {
        self.mant.log2() + self.exp as f64
    }

    pub fn value_shifted(&self, shift: i32) -> f64 {
        ldexp(self.mant, self.exp + shift)
    }

    pub fn value(&self) -> f64 {
        self.value_shifted(0)
    }

    pub fn mantissa(&self) -> f64 {
        self.mant
    }

    pub fn exp(&self) -> i32 {
        self.exp
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ldexp_roundtrip() {
        assert_eq!(ldexp(1.5, 3), 12.0);
        assert_eq!(ldexp(1.0, -1074), f64::from_bits(1));
        assert_eq!(ldexp(3.0, 2000 - 2000), 3.0);
        assert_eq!(exponent(1.0), 0);
        assert_eq!(exponent(0.75), -1);
        assert_eq!(exponent(f64::from_bits(1)), -1074);
    }

    #[test]
    fn long_products_do_not_underflow() {
        let mut s = Scaled::ONE;
        let mut r = ScaledReal::one();
        for _ in 0..5000 {
            s.mul(Complex64::new(0.0, 0.25));
            r.mul(0.25);
        }
        assert!((s.log2_abs() + 10000.0).abs() < 1e-9);
        assert!((r.log2() + 10000.0).abs() < 1e-9);
        // (i/4)^5000 = 4^-5000, since i^5000 = 1
        assert!(s.mantissa().im.abs() < 1e-12 * s.mantissa().re.abs());
    }
}
