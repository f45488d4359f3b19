//! Exact arithmetic tower.
//!
//! Every coefficient in the workbench lives in the field
//! `Q(q)[u, v] / (u^2 - 2, v^2 - q)`: rationals, rational functions in the
//! indeterminate `q`, and the square roots `u = sqrt(2)` and `v = sqrt(q)`.
//! Truncated power series in `t` sit on top of it for the quantization lab.

mod poly;
mod ratfunc;
mod series;
mod tower;

pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use series::TruncSeries;
pub use tower::{Scalar, ScalarPoly};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Arbitrary-precision rational number, always stored in lowest terms.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at q = {0}")]
    Pole(String),
    #[error("{0} has no rational square root")]
    IrrationalSqrt(String),
}

/// A commutative field with exact equality.
///
/// Implemented by [`Rational`], [`RatFunc`] and [`Scalar`]; the generic
/// polynomial and elimination code is written against this trait.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn div(&self, other: &Self) -> Result<Self, ScalarError> {
        other
            .inv()
            .map(|i| self.clone() * i)
            .ok_or(ScalarError::DivisionByZero)
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact square root of a rational, if it exists.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer();
    let d = r.denom();
    let sn = n.sqrt();
    let sd = d.sqrt();
    if &(&sn * &sn) == n && &(&sd * &sd) == d {
        Some(Rational::new(sn, sd))
    } else {
        None
    }
}

/// Renders a rational the way the relation grammar reads it back: `3`, `-1/2`.
pub(crate) fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_of_squares() {
        assert_eq!(rational_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rational_sqrt(&int(0)), Some(int(0)));
        assert_eq!(rational_sqrt(&int(2)), None);
        assert_eq!(rational_sqrt(&int(-4)), None);
    }

    #[test]
    fn rational_inverse() {
        assert_eq!(Field::inv(&rat(-3, 7)), Some(rat(-7, 3)));
        assert_eq!(Field::inv(&int(0)), None);
        assert_eq!(int(1).div(&int(0)), Err(ScalarError::DivisionByZero));
    }
}
