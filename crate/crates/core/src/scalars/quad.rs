use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;

use num_traits::{One, Signed, Zero};

use super::{int, parse_rational, Field, Rational, Ring, ScalarError};

/// `a + b√2` with `a, b ∈ ℚ`.
///
/// The norm `a² − 2b²` vanishes only at zero because √2 is irrational, so
/// every nonzero element has an inverse.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct QuadExt {
    pub a: Rational,
    pub b: Rational,
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational) -> Self {
        Self { a, b }
    }

    pub fn rational(a: Rational) -> Self {
        Self { a, b: Rational::zero() }
    }

    /// `b·√2`.
    pub fn sqrt2_times(b: Rational) -> Self {
        Self { a: Rational::zero(), b }
    }

    pub fn sqrt2() -> Self {
        Self::sqrt2_times(int(1))
    }

    /// `(a + b√2)(a − b√2) = a² − 2b²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - int(2) * &self.b * &self.b
    }

    pub fn conjugate(&self) -> Self {
        Self { a: self.a.clone(), b: -self.b.clone() }
    }

    pub fn inverse(&self) -> Result<Self, ScalarError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self { a: &self.a / &n, b: -(&self.b / &n) })
    }

    pub fn to_f64(&self) -> f64 {
        super::to_f64(&self.a) + super::to_f64(&self.b) * core::f64::consts::SQRT_2
    }
}

impl fmt::Display for QuadExt {
    /// `p/q+r/s*sqrt2`; the √2 part is always written so the form round-trips.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_negative() {
            write!(f, "{}-{}*sqrt2", self.a, -self.b.clone())
        } else {
            write!(f, "{}+{}*sqrt2", self.a, self.b)
        }
    }
}

impl FromStr for QuadExt {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let bad = || ScalarError::BadQuad(t.into());
        let Some(body) = t.strip_suffix("*sqrt2") else {
            return parse_rational(t).map(Self::rational).map_err(|_| bad());
        };
        // The separator is the last sign that is not the leading one.
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last()
            .ok_or_else(bad)?;
        let a = parse_rational(&body[..split]).map_err(|_| bad())?;
        let b = parse_rational(&body[split..]).map_err(|_| bad())?;
        Ok(Self { a, b })
    }
}

impl Add for QuadExt {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self { a: self.a + rhs.a, b: self.b + rhs.b }
    }
}

impl Sub for QuadExt {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self { a: self.a - rhs.a, b: self.b - rhs.b }
    }
}

impl Neg for QuadExt {
    type Output = Self;
    fn neg(self) -> Self {
        Self { a: -self.a, b: -self.b }
    }
}

impl Mul for QuadExt {
    type Output = Self;
    /// `(a+b√2)(c+d√2) = (ac+2bd) + (ad+bc)√2`
    fn mul(self, rhs: Self) -> Self {
        let a = &self.a * &rhs.a + int(2) * &self.b * &rhs.b;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        Self { a, b }
    }
}

impl Div for QuadExt {
    type Output = Self;
    /// Panics on division by zero, like the rational division it extends.
    fn div(self, rhs: Self) -> Self {
        self * rhs.inverse().expect("QuadExt division by zero")
    }
}

impl Zero for QuadExt {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadExt {
    fn one() -> Self {
        Self::rational(int(1))
    }
}

impl Ring for QuadExt {
    fn from_int(v: i64) -> Self {
        Self::rational(int(v))
    }
}

impl Field for QuadExt {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn q(a: (i64, i64), b: (i64, i64)) -> QuadExt {
        QuadExt::new(rat(a.0, a.1), rat(b.0, b.1))
    }

    #[test]
    fn quad_mul_examples() {
        assert_eq!(QuadExt::sqrt2() * QuadExt::sqrt2(), QuadExt::from_int(2));
        let c = q((3, 5), (-2, 7));
        assert_eq!(QuadExt::one() * c.clone(), c);
        assert_eq!(q((1, 1), (1, 1)) * q((1, 1), (-1, 1)), QuadExt::from_int(-1));
    }

    #[test]
    fn zero_has_no_inverse() {
        assert_eq!(QuadExt::zero().inverse(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn string_format_round_trips() {
        let x = q((1, 2), (-3, 4));
        assert_eq!(x.to_string(), "1/2-3/4*sqrt2");
        assert_eq!("1/2-3/4*sqrt2".parse::<QuadExt>().unwrap(), x);
        assert_eq!("-1/2+0*sqrt2".parse::<QuadExt>().unwrap(), q((-1, 2), (0, 1)));
        assert_eq!("7".parse::<QuadExt>().unwrap(), QuadExt::from_int(7));
        assert!("sqrt2".parse::<QuadExt>().is_err());
    }

    fn small() -> impl Strategy<Value = Rational> {
        (-9i64..=9, 1i64..=4).prop_map(|(p, q)| rat(p, q))
    }

    fn quad() -> impl Strategy<Value = QuadExt> {
        (small(), small()).prop_map(|(a, b)| QuadExt::new(a, b))
    }

    proptest! {
        #[test]
        fn field_axioms(x in quad(), y in quad(), z in quad()) {
            prop_assert_eq!((x.clone() * y.clone()) * z.clone(), x.clone() * (y.clone() * z.clone()));
            prop_assert_eq!(x.clone() * (y.clone() + z.clone()), x.clone() * y.clone() + x.clone() * z.clone());
            prop_assert_eq!(x.clone() * y.clone(), y.clone() * x.clone());
            if !x.is_zero() {
                prop_assert_eq!(x.clone() * x.inverse().unwrap(), QuadExt::one());
            }
        }

        #[test]
        fn rational_field_axioms(x in small(), y in small(), z in small()) {
            prop_assert_eq!((&x * &y) * &z, &x * (&y * &z));
            prop_assert_eq!(&x * (&y + &z), &x * &y + &x * &z);
            if !x.is_zero() {
                prop_assert_eq!(&x * x.recip(), Rational::one());
            }
        }
    }
}
