//! Fixed-precision binary floating point: `mant * 2^exp` with a 384-bit
//! mantissa (roughly 115 decimal digits).
//!
//! The closed-form coefficient expressions of the phase-fitted methods
//! suffer catastrophic cancellation: intermediates grow like
//! `csc(v/2)^10 ~ (v/2)^-10`, so evaluating them near `v = 0.01` loses on
//! the order of 25 decimal digits. Native doubles are unusable there and a
//! few hundred bits are ample, so this module trades generality for a
//! small, auditable core: truncating arithmetic, Maclaurin `sin`/`cos`
//! for moderate arguments, and decimal parsing for test oracles. Each
//! operation is accurate to about one unit in the 384th bit; the chains
//! evaluated in this crate stay far shorter than the 60-digit headroom.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Working mantissa precision in bits.
const PREC: u64 = 384;
/// Alignment cutoff: beyond this exponent gap the smaller addend is below
/// one ulp of the result and is dropped.
const ALIGN_LIMIT: i64 = (PREC as i64) + 64;

/// Arbitrary-range binary float with a fixed-width mantissa.
///
/// The value is `mant * 2^exp`. A zero mantissa always carries `exp = 0`.
#[derive(Clone, Debug)]
pub struct BigFloat {
    mant: BigInt,
    exp: i64,
}

impl BigFloat {
    /// The value 0.
    pub fn zero() -> Self {
        BigFloat { mant: BigInt::zero(), exp: 0 }
    }

    /// The value 1.
    pub fn one() -> Self {
        BigFloat::from_i64(1)
    }

    pub fn from_i64(n: i64) -> Self {
        BigFloat { mant: BigInt::from(n), exp: 0 }.normalized()
    }

    /// Exact quotient of two machine integers, correctly truncated to
    /// working precision.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        &BigFloat::from_i64(num) / &BigFloat::from_i64(den)
    }

    /// Exact conversion (every finite f64 is a dyadic rational).
    ///
    /// Panics on NaN or infinity.
    pub fn from_f64(x: f64) -> Self {
        assert!(x.is_finite(), "BigFloat::from_f64 requires a finite value");
        if x == 0.0 {
            return BigFloat::zero();
        }
        let bits = x.to_bits();
        let sign = if bits >> 63 == 1 { -1 } else { 1 };
        let biased = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (mant_u, exp) = if biased == 0 {
            (frac, -1074) // subnormal
        } else {
            (frac | (1u64 << 52), biased - 1075)
        };
        BigFloat { mant: BigInt::from(sign) * BigInt::from(mant_u), exp }.normalized()
    }

    /// Nearest double, rounding the 54-bit truncation once; overflow maps
    /// to an infinity, extreme underflow to zero.
    pub fn to_f64(&self) -> f64 {
        if self.mant.is_zero() {
            return 0.0;
        }
        let bits = self.mant.bits() as i64;
        let shift = bits - 54;
        let (top, exp) = if shift > 0 {
            ((&self.mant >> shift).to_i64().expect("54-bit slice"), self.exp + shift)
        } else {
            (self.mant.to_i64().expect("small mantissa"), self.exp)
        };
        ldexp(top as f64, exp)
    }

    /// Parses a plain decimal like `-49.99885669`, optionally with a
    /// decimal exponent (`1.88859e-9`). Returns `None` on malformed input.
    pub fn parse(s: &str) -> Option<Self> {
        let (dec, exp10) = match s.find(['e', 'E']) {
            Some(i) => (&s[..i], s[i + 1..].parse::<i32>().ok()?),
            None => (s, 0),
        };
        let (sign, digits) = match dec.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, dec.strip_prefix('+').unwrap_or(dec)),
        };
        let (int_part, frac_part) = match digits.find('.') {
            Some(i) => (&digits[..i], &digits[i + 1..]),
            None => (digits, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return None;
        }
        let mut whole = BigInt::zero();
        for ch in int_part.chars().chain(frac_part.chars()) {
            whole = whole * 10 + BigInt::from(ch.to_digit(10)? as i64);
        }
        whole *= sign;
        let exp10 = exp10 - frac_part.len() as i32;
        let pow = BigInt::from(10u32).pow(exp10.unsigned_abs());
        let value = if exp10 >= 0 {
            BigFloat { mant: whole * pow, exp: 0 }.normalized()
        } else {
            &BigFloat { mant: whole, exp: 0 }.normalized()
                / &BigFloat { mant: pow, exp: 0 }.normalized()
        };
        Some(value)
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn abs(&self) -> Self {
        BigFloat { mant: self.mant.abs(), exp: self.exp }
    }

    /// Base-2 logarithm of the magnitude, rounded up; `i64::MIN` for zero.
    /// Cheap magnitude probe for convergence cutoffs.
    pub fn log2_magnitude(&self) -> i64 {
        if self.mant.is_zero() {
            i64::MIN
        } else {
            self.exp + self.mant.bits() as i64
        }
    }

    /// Small integer power by repeated multiplication (exponents here
    /// never exceed 14).
    pub fn powi(&self, n: u32) -> Self {
        let mut acc = BigFloat::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn recip(&self) -> Self {
        &BigFloat::one() / self
    }

    /// Maclaurin sine and cosine in one pass.
    ///
    /// No argument reduction is performed; the series is exact for any
    /// argument but the partial sums grow like `e^|x|`, so the magnitude
    /// is capped to keep the absolute error below `2^-290`.
    pub fn sin_cos(&self) -> (Self, Self) {
        assert!(
            self.log2_magnitude() <= 6,
            "sin_cos argument magnitude must stay below 64"
        );
        let x2 = self * self;
        let cutoff = -(PREC as i64) - 96;

        let mut sin = self.clone();
        let mut term = self.clone();
        let mut k: i64 = 0;
        while term.log2_magnitude() > cutoff {
            term = &(&term * &x2) / &BigFloat::from_i64(-(2 * k + 2) * (2 * k + 3));
            sin = &sin + &term;
            k += 1;
        }

        let mut cos = BigFloat::one();
        let mut term = BigFloat::one();
        let mut k: i64 = 0;
        while term.log2_magnitude() > cutoff {
            term = &(&term * &x2) / &BigFloat::from_i64(-(2 * k + 1) * (2 * k + 2));
            cos = &cos + &term;
            k += 1;
        }
        (sin, cos)
    }

    pub fn sin(&self) -> Self {
        self.sin_cos().0
    }

    pub fn cos(&self) -> Self {
        self.sin_cos().1
    }

    /// Truncates the mantissa to the working precision.
    fn normalized(mut self) -> Self {
        let bits = self.mant.bits();
        if bits > PREC {
            let shift = (bits - PREC) as i64;
            self.mant >>= shift;
            self.exp += shift;
        }
        if self.mant.is_zero() {
            self.exp = 0;
        }
        self
    }
}

/// `x * 2^e` without overflowing the intermediate scale factor.
fn ldexp(x: f64, e: i64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    if e > 2100 {
        return if x > 0.0 { f64::INFINITY } else { f64::NEG_INFINITY };
    }
    if e < -2200 {
        return 0.0;
    }
    let mut out = x;
    let mut rem = e;
    while rem != 0 {
        let chunk = rem.clamp(-900, 900);
        out *= 2f64.powi(chunk as i32);
        rem -= chunk;
    }
    out
}

fn add_aligned(a: &BigFloat, b: &BigFloat) -> BigFloat {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    let (hi, lo) = if a.exp >= b.exp { (a, b) } else { (b, a) };
    let gap = hi.exp - lo.exp;
    if gap > ALIGN_LIMIT + hi.mant.bits() as i64 {
        return hi.clone();
    }
    BigFloat { mant: (&hi.mant << gap) + &lo.mant, exp: lo.exp }.normalized()
}

impl Add for &BigFloat {
    type Output = BigFloat;
    fn add(self, rhs: &BigFloat) -> BigFloat {
        add_aligned(self, rhs)
    }
}

impl Sub for &BigFloat {
    type Output = BigFloat;
    fn sub(self, rhs: &BigFloat) -> BigFloat {
        add_aligned(self, &-rhs)
    }
}

impl Mul for &BigFloat {
    type Output = BigFloat;
    fn mul(self, rhs: &BigFloat) -> BigFloat {
        BigFloat { mant: &self.mant * &rhs.mant, exp: self.exp + rhs.exp }.normalized()
    }
}

impl Div for &BigFloat {
    type Output = BigFloat;
    fn div(self, rhs: &BigFloat) -> BigFloat {
        assert!(!rhs.is_zero(), "division by zero");
        if self.is_zero() {
            return BigFloat::zero();
        }
        // Pre-scale so the quotient keeps a full-width mantissa.
        let scale = ALIGN_LIMIT + rhs.mant.bits() as i64 - self.mant.bits() as i64;
        let scale = scale.max(0);
        let mant = (&self.mant << scale) / &rhs.mant;
        BigFloat { mant, exp: self.exp - rhs.exp - scale }.normalized()
    }
}

impl Neg for &BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        BigFloat { mant: -&self.mant, exp: self.exp }
    }
}

impl Neg for BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        BigFloat { mant: -self.mant, exp: self.exp }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for BigFloat {
            type Output = BigFloat;
            fn $method(self, rhs: BigFloat) -> BigFloat {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&BigFloat> for BigFloat {
            type Output = BigFloat;
            fn $method(self, rhs: &BigFloat) -> BigFloat {
                (&self).$method(rhs)
            }
        }
        impl $trait<BigFloat> for &BigFloat {
            type Output = BigFloat;
            fn $method(self, rhs: BigFloat) -> BigFloat {
                self.$method(&rhs)
            }
        }
        impl $trait<i64> for &BigFloat {
            type Output = BigFloat;
            fn $method(self, rhs: i64) -> BigFloat {
                self.$method(&BigFloat::from_i64(rhs))
            }
        }
        impl $trait<i64> for BigFloat {
            type Output = BigFloat;
            fn $method(self, rhs: i64) -> BigFloat {
                (&self).$method(&BigFloat::from_i64(rhs))
            }
        }
        impl $trait<&BigFloat> for i64 {
            type Output = BigFloat;
            fn $method(self, rhs: &BigFloat) -> BigFloat {
                (&BigFloat::from_i64(self)).$method(rhs)
            }
        }
        impl $trait<BigFloat> for i64 {
            type Output = BigFloat;
            fn $method(self, rhs: BigFloat) -> BigFloat {
                (&BigFloat::from_i64(self)).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl PartialEq for BigFloat {
    fn eq(&self, other: &Self) -> bool {
        (self - other).is_zero()
    }
}

impl PartialOrd for BigFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let d = self - other;
        Some(if d.is_zero() {
            Ordering::Equal
        } else if d.is_negative() {
            Ordering::Less
        } else {
            Ordering::Greater
        })
    }
}
