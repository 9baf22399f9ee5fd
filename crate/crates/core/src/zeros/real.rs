//! Working-precision floats for the root finder.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use dashu::base::{BitTest, SquareRoot, UnsignedAbs};
use dashu::float::{round::mode::HalfEven, FBig};
use dashu::integer::IBig;
use num_bigint::BigInt;

/// Real scalar with a run-time working precision in decimal digits.
///
/// `f64` ignores the requested precision; [`MpFloat`] honours it.
pub trait Real:
    Clone
    + PartialOrd
    + Debug
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_f64(x: f64, digits: u32) -> Self;
    fn from_bigint(x: &BigInt, digits: u32) -> Self;
    fn to_f64(&self) -> f64;
    fn sqrt(&self) -> Self;
    fn abs(&self) -> Self;
    /// `log2 |x|`, `-inf` at zero; finite even when `to_f64` would overflow.
    fn log2_abs(&self) -> f64;
    /// Unit roundoff at this value's precision.
    fn unit_roundoff(&self) -> Self;
    /// Decimal digits carried.
    fn digits(&self) -> u32;

    /// A constant at the same precision as `self`.
    fn lift(&self, x: f64) -> Self {
        Self::from_f64(x, self.digits())
    }

    fn is_zero(&self) -> bool {
        self.log2_abs() == f64::NEG_INFINITY
    }
}

impl Real for f64 {
    fn from_f64(x: f64, _digits: u32) -> Self {
        x
    }
    fn from_bigint(x: &BigInt, _digits: u32) -> Self {
        num_traits::ToPrimitive::to_f64(x).unwrap_or(f64::NAN)
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn sqrt(&self) -> Self {
        f64::sqrt(*self)
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
    fn log2_abs(&self) -> f64 {
        f64::abs(*self).log2()
    }
    fn unit_roundoff(&self) -> Self {
        f64::EPSILON / 2.0
    }
    fn digits(&self) -> u32 {
        15
    }
}

type F = FBig<HalfEven, 2>;

const GUARD_BITS: usize = 8;
const LOG2_10: f64 = std::f64::consts::LOG2_10;

fn bits_for(digits: u32) -> usize {
    (digits as f64 * LOG2_10).ceil() as usize + GUARD_BITS
}

/// Binary multiprecision float backed by `dashu`.
#[derive(Clone, Debug, PartialEq, PartialOrd)]
pub struct MpFloat(F);

impl MpFloat {
    fn at(x: F, bits: usize) -> Self {
        MpFloat(x.with_precision(bits).value())
    }

    fn bits(&self) -> usize {
        self.0.precision()
    }
}

macro_rules! mp_binop {
    ($tr:ident, $f:ident) => {
        impl $tr for MpFloat {
            type Output = MpFloat;
            fn $f(self, rhs: MpFloat) -> MpFloat {
                MpFloat(self.0.$f(rhs.0))
            }
        }
    };
}
mp_binop!(Add, add);
mp_binop!(Sub, sub);
mp_binop!(Mul, mul);
mp_binop!(Div, div);

impl Neg for MpFloat {
    type Output = MpFloat;
    fn neg(self) -> MpFloat {
        MpFloat(-self.0)
    }
}

impl Real for MpFloat {
    fn from_f64(x: f64, digits: u32) -> Self {
        let v = F::try_from(x).expect("finite f64");
        MpFloat::at(v, bits_for(digits))
    }

    fn from_bigint(x: &BigInt, digits: u32) -> Self {
        let i = IBig::from_le_bytes(&x.to_signed_bytes_le());
        MpFloat::at(F::from(i), bits_for(digits))
    }

    fn to_f64(&self) -> f64 {
        self.0.to_f64().value()
    }

    fn sqrt(&self) -> Self {
        MpFloat(self.0.sqrt())
    }

    fn abs(&self) -> Self {
        if self.0 < F::ZERO {
            MpFloat(-self.0.clone())
        } else {
            self.clone()
        }
    }

    fn log2_abs(&self) -> f64 {
        let repr = self.0.repr();
        let sig = repr.significand().unsigned_abs();
        let len = sig.bit_len();
        if len == 0 {
            return f64::NEG_INFINITY;
        }
        let shift = len.saturating_sub(60);
        let top = (sig >> shift).to_f64().value();
        top.log2() + shift as f64 + repr.exponent() as f64
    }

    fn unit_roundoff(&self) -> Self {
        let bits = self.bits();
        MpFloat::at(F::from_parts(IBig::ONE, -(bits as isize)), bits)
    }

    fn digits(&self) -> u32 {
        ((self.bits().saturating_sub(GUARD_BITS)) as f64 / LOG2_10).floor() as u32
    }
}

/// Complex number over a [`Real`].
#[derive(Clone, Debug, PartialEq)]
pub struct Complex<T> {
    pub re: T,
    pub im: T,
}

impl<T: Real> Complex<T> {
    pub fn new(re: T, im: T) -> Self {
        Complex { re, im }
    }

    pub fn from_f64(re: f64, im: f64, digits: u32) -> Self {
        Complex::new(T::from_f64(re, digits), T::from_f64(im, digits))
    }

    pub fn zero_like(x: &T) -> Self {
        Complex::new(x.lift(0.0), x.lift(0.0))
    }

    pub fn norm_sqr(&self) -> T {
        self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone()
    }

    /// `(max(|re|, |im|), min/max)`, the ratio rounded to `f64`.
    fn scaled(&self) -> (T, f64) {
        let (a, b) = (self.re.abs(), self.im.abs());
        let (big, small) = if a >= b { (a, b) } else { (b, a) };
        if big.is_zero() {
            return (big, 0.0);
        }
        let r = (small / big.clone()).to_f64();
        (big, r)
    }

    /// Modulus without overflow in the intermediate square.
    pub fn abs(&self) -> T {
        let (big, small) = if self.re.abs() >= self.im.abs() {
            (self.re.abs(), self.im.abs())
        } else {
            (self.im.abs(), self.re.abs())
        };
        if big.is_zero() {
            return big;
        }
        let r = small / big.clone();
        big.clone() * (big.lift(1.0) + r.clone() * r).sqrt()
    }

    pub fn log2_abs(&self) -> f64 {
        let (big, r) = self.scaled();
        big.log2_abs() + 0.5 * (1.0 + r * r).log2()
    }

    pub fn scale(&self, k: &T) -> Self {
        Complex::new(self.re.clone() * k.clone(), self.im.clone() * k.clone())
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    /// `1/z` through `|z|²`; callers keep `|z|` well inside the exponent range.
    pub fn recip(&self) -> Self {
        let inv = self.re.lift(1.0) / self.norm_sqr();
        Complex::new(self.re.clone() * inv.clone(), -self.im.clone() * inv)
    }
}

impl<T: Real> Add for Complex<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Complex::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl<T: Real> Sub for Complex<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Complex::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl<T: Real> Mul for Complex<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Complex::new(
            self.re.clone() * rhs.re.clone() - self.im.clone() * rhs.im.clone(),
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl<T: Real> Div for Complex<T> {
    type Output = Self;
    // Smith's algorithm: no overflow in |rhs|²
    fn div(self, rhs: Self) -> Self {
        if rhs.re.abs() >= rhs.im.abs() {
            let r = rhs.im.clone() / rhs.re.clone();
            let den = rhs.re + rhs.im * r.clone();
            Complex::new(
                (self.re.clone() + self.im.clone() * r.clone()) / den.clone(),
                (self.im - self.re * r) / den,
            )
        } else {
            let r = rhs.re.clone() / rhs.im.clone();
            let den = rhs.re * r.clone() + rhs.im;
            Complex::new(
                (self.re.clone() * r.clone() + self.im.clone()) / den.clone(),
                (self.im * r - self.re) / den,
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiprecision_basics() {
        let two = MpFloat::from_f64(2.0, 50);
        assert_eq!(two.digits(), 50);
        let r = two.sqrt();
        let err = (r.clone() * r - two).abs();
        assert!(err.log2_abs() < -160.0);
        let big = BigInt::from(-7) * BigInt::from(10).pow(400);
        let b = MpFloat::from_bigint(&big, 30);
        assert!((b.log2_abs() - (7f64.log2() + 400.0 * LOG2_10)).abs() < 1e-9);
        assert!(b < MpFloat::from_f64(0.0, 30));
        assert!(MpFloat::from_f64(0.0, 30).is_zero());
        assert!((MpFloat::from_f64(1.0, 100).unit_roundoff().log2_abs() + 341.0).abs() < 1.0);
    }

    #[test]
    fn complex_ops() {
        let a = Complex::<f64>::from_f64(1.0, 2.0, 15);
        let b = Complex::<f64>::from_f64(3.0, -1.0, 15);
        let q = a.clone() / b.clone();
        let back = q * b;
        assert!((back.re - 1.0).abs() < 1e-15 && (back.im - 2.0).abs() < 1e-15);
        assert!((a.abs() - 5f64.sqrt()).abs() < 1e-15);
        let huge = Complex::<f64>::from_f64(1e200, -3e200, 15);
        let q = huge.clone() / huge.clone();
        assert!((q.re - 1.0).abs() < 1e-15 && q.im.abs() < 1e-15);
        assert!((huge.abs() / 1e200 - 10f64.sqrt()).abs() < 1e-14);
        assert!((huge.log2_abs() - (1e200f64.log2() + 0.5 * 10f64.log2())).abs() < 1e-12);
    }
}
