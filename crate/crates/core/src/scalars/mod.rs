//! Exact scalar substrate.
//!
//! Every coefficient in the crate lives in one of three carriers:
//! [`Rational`] (arbitrary precision, always reduced), [`QuadExt`] for the
//! field ℚ(√2), and [`Poly7`], sparse polynomials over ℚ in `x1..x7`.
//! The [`Ring`] and [`Field`] traits let the algebra modules run unchanged
//! over exact scalars and over `f64` for the floating-point paths.

mod poly;
mod quad;

use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use num_rational::BigRational as Rational;
pub use poly::{Exponents, Poly7};
pub use quad::QuadExt;

/// Commutative ring with unit, closed under the operator traits by value.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_int(v: i64) -> Self;

    /// `self * rhs` without consuming either side.
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.clone() * rhs.clone()
    }
}

/// A [`Ring`] in which every nonzero element is invertible.
pub trait Field: Ring + Div<Output = Self> {}

impl Ring for Rational {
    fn from_int(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
}
impl Field for Rational {}

impl Ring for f64 {
    fn from_int(v: i64) -> Self {
        v as f64
    }
}
impl Field for f64 {}

/// `p/q` as an exact rational. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// The integer `p` as a rational.
pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("malformed rational literal `{0}`")]
    BadRational(alloc::string::String),
    #[error("malformed quadratic-extension literal `{0}`")]
    BadQuad(alloc::string::String),
    #[error("division by zero")]
    DivisionByZero,
}

/// Parses `p` or `p/q` (optionally signed, surrounding whitespace ignored).
pub fn parse_rational(s: &str) -> Result<Rational, ScalarError> {
    let t = s.trim();
    let bad = || ScalarError::BadRational(t.into());
    if t.is_empty() {
        return Err(bad());
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n = BigInt::from_str(num).map_err(|_| bad())?;
    let d = BigInt::from_str(den).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(ScalarError::DivisionByZero);
    }
    Ok(Rational::new(n, d))
}

/// Exact square root of a nonnegative rational, if it is a rational square.
pub fn exact_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer();
    let d = r.denom();
    let sn = n.sqrt();
    let sd = d.sqrt();
    (&sn * &sn == *n && &sd * &sd == *d).then(|| Rational::new(sn, sd))
}

/// Nearest `f64` to an exact rational.
pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        // Extreme magnitudes: scale through the integer parts.
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn rationals_are_reduced_with_positive_denominator() {
        let r = rat(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(rat(0, 5), Rational::zero());
        assert_eq!(rat(0, 5).denom(), &BigInt::from(1));
    }

    #[test]
    fn rational_string_format() {
        assert_eq!(rat(3, 4).to_string(), "3/4");
        assert_eq!(int(-7).to_string(), "-7");
        assert_eq!(parse_rational(" -3/4 ").unwrap(), rat(-3, 4));
        assert_eq!(parse_rational("12").unwrap(), int(12));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn exact_square_roots() {
        assert_eq!(exact_sqrt(&rat(25, 16)), Some(rat(5, 4)));
        assert_eq!(exact_sqrt(&int(0)), Some(int(0)));
        assert_eq!(exact_sqrt(&rat(2, 1)), None);
        assert_eq!(exact_sqrt(&rat(-1, 4)), None);
        assert_eq!(exact_sqrt(&rat(9, 8)), None);
    }
}
