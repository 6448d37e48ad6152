//! Coefficient field abstraction: double precision by default, exact
//! rationals where a parameter set admits them.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Field of coefficients for the truncated polynomial algebra.
///
/// Implemented for `f64` (default numeric mode) and [`Rat`] (exact mode,
/// used when square roots in the formulas collapse to rationals).
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn ratio(num: i64, den: i64) -> Self;
    fn is_zero(&self) -> bool;
    /// Absolute value as f64, used for pruning and pivot selection.
    fn magnitude(&self) -> f64;
    fn to_f64(&self) -> f64;
    /// Whether tiny coefficients should be pruned (floating point only).
    fn prunes() -> bool;
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_int(n: i64) -> Self {
        n as f64
    }
    fn ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn prunes() -> bool {
        true
    }
}

/// Exact rational coefficient.
pub type Rat = BigRational;

impl Scalar for Rat {
    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }
    fn one() -> Self {
        <BigRational as One>::one()
    }
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn magnitude(&self) -> f64 {
        ToPrimitive::to_f64(&self.abs()).unwrap_or(f64::INFINITY)
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
    fn prunes() -> bool {
        false
    }
}

/// Parse a rational from a decimal or `p/q` literal, for exact-mode inputs.
pub fn rat_from_str(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().ok()?;
        let d: BigInt = den.trim().parse().ok()?;
        if Zero::is_zero(&d) {
            return None;
        }
        return Some(BigRational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let sign = if int.trim_start().starts_with('-') { -1 } else { 1 };
        let i: BigInt = if int == "-" || int.is_empty() { Zero::zero() } else { int.parse().ok()? };
        let f: BigInt = if frac.is_empty() { Zero::zero() } else { frac.parse().ok()? };
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let frac_part = BigRational::new(f * BigInt::from(sign), scale);
        return Some(BigRational::from_integer(i) + frac_part);
    }
    let n: BigInt = s.parse().ok()?;
    Some(BigRational::from_integer(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_parsing() {
        assert_eq!(rat_from_str("3/4").unwrap(), Rat::ratio(3, 4));
        assert_eq!(rat_from_str("-0.25").unwrap(), Rat::ratio(-1, 4));
        assert_eq!(rat_from_str("2").unwrap(), Rat::from_int(2));
        assert!(rat_from_str("1/0").is_none());
    }

    #[test]
    fn magnitudes() {
        assert_eq!((-2.5f64).magnitude(), 2.5);
        assert_eq!(Rat::ratio(-3, 2).magnitude(), 1.5);
    }
}
