//! Arbitrary-precision reals.
//!
//! [`BigReal`] is an MPFR float; every value carries its own precision in
//! bits and all helpers here take the target precision explicitly.

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Float, Integer, Rational};

pub type BigReal = Float;

pub fn pi(prec: u32) -> BigReal {
    Float::with_val(prec, Constant::Pi)
}

pub fn from_integer(value: &Integer, prec: u32) -> BigReal {
    Float::with_val(prec, value)
}

pub fn from_rational(value: &Rational, prec: u32) -> BigReal {
    Float::with_val(prec, value)
}

pub fn from_u64(value: u64, prec: u32) -> BigReal {
    Float::with_val(prec, value)
}

/// `base^exponent` for a rational exponent given as `num/den`.
pub fn pow_ratio(base: &BigReal, num: i32, den: u32, prec: u32) -> BigReal {
    let exponent = Float::with_val(prec, Rational::from((num, den)));
    Float::with_val(prec, base).pow(exponent)
}

/// `(cos 2πt, sin 2πt)` for an exact angle `t`.
pub fn cos_sin_turns(t: &Rational, prec: u32) -> (BigReal, BigReal) {
    let angle = pi(prec + 16) * 2u32 * Float::with_val(prec + 16, t);
    let (sin, cos) = angle.sin_cos(Float::new(prec + 16));
    (Float::with_val(prec, cos), Float::with_val(prec, sin))
}

/// Decimal rendering with `digits` significant digits.
pub fn to_decimal(value: &BigReal, digits: usize) -> String {
    value.to_string_radix(10, Some(digits))
}

/// Significant decimal digits carried by `prec` bits.
pub fn digits_for_bits(prec: u32) -> usize {
    ((prec as f64) * std::f64::consts::LOG10_2).floor().max(1.0) as usize
}
