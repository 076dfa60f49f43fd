use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{int, Rational};

/// Exponent vector of a monomial `x1^e1 ⋯ x7^e7`.
pub type Exponents = [u8; 7];

/// Sparse polynomial over ℚ in the seven coordinates `x1..x7`.
///
/// Zero coefficients are never stored, so structural equality is
/// polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Poly7 {
    terms: BTreeMap<Exponents, Rational>,
}

impl Poly7 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial([0; 7], c)
    }

    /// The coordinate function `x_i`, `i ∈ 1..=7`.
    pub fn var(i: usize) -> Self {
        assert!((1..=7).contains(&i), "coordinate index {i} out of range 1..=7");
        let mut e = [0; 7];
        e[i - 1] = 1;
        Self::monomial(e, int(1))
    }

    pub fn monomial(exps: Exponents, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(exps, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&k| k == 0))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().map(|&k| u32::from(k)).sum()).max()
    }

    fn add_term(&mut self, exps: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect() }
    }

    /// Formal partial derivative `∂/∂x_i`, `i ∈ 1..=7`.
    pub fn partial(&self, i: usize) -> Self {
        assert!((1..=7).contains(&i), "coordinate index {i} out of range 1..=7");
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let k = e[i - 1];
            if k == 0 {
                continue;
            }
            let mut d = *e;
            d[i - 1] -= 1;
            out.add_term(d, c * int(i64::from(k)));
        }
        out
    }

    /// Exact substitution `x_i ↦ point[i-1]`.
    pub fn eval(&self, point: &[Rational; 7]) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut m = c.clone();
            for (x, &k) in point.iter().zip(e.iter()) {
                for _ in 0..k {
                    m *= x;
                }
            }
            acc += m;
        }
        acc
    }

    pub fn eval_f64(&self, point: &[f64; 7]) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut m = super::to_f64(c);
                for (x, &k) in point.iter().zip(e.iter()) {
                    m *= libm::pow(*x, f64::from(k));
                }
                m
            })
            .sum()
    }
}

impl From<Rational> for Poly7 {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl Add for &Poly7 {
    type Output = Poly7;
    fn add(self, rhs: &Poly7) -> Poly7 {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &Poly7 {
    type Output = Poly7;
    fn sub(self, rhs: &Poly7) -> Poly7 {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Neg for &Poly7 {
    type Output = Poly7;
    fn neg(self) -> Poly7 {
        Poly7 { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

impl Mul for &Poly7 {
    type Output = Poly7;
    fn mul(self, rhs: &Poly7) -> Poly7 {
        let mut out = Poly7::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut e = [0u8; 7];
                for k in 0..7 {
                    e[k] = ea[k] + eb[k];
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Add for Poly7 {
    type Output = Poly7;
    fn add(self, rhs: Poly7) -> Poly7 {
        &self + &rhs
    }
}

impl Sub for Poly7 {
    type Output = Poly7;
    fn sub(self, rhs: Poly7) -> Poly7 {
        &self - &rhs
    }
}

impl Mul for Poly7 {
    type Output = Poly7;
    fn mul(self, rhs: Poly7) -> Poly7 {
        &self * &rhs
    }
}

impl Neg for Poly7 {
    type Output = Poly7;
    fn neg(self) -> Poly7 {
        -&self
    }
}

impl fmt::Display for Poly7 {
    /// Terms in descending exponent order, e.g. `3/2*x1*x4^2 - x2 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let constant = e.iter().all(|&k| k == 0);
            let mut first = true;
            if constant || !mag.is_one() {
                write!(f, "{mag}")?;
                first = false;
            }
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                write!(f, "x{}", i + 1)?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn pt(v: [(i64, i64); 7]) -> [Rational; 7] {
        v.map(|(p, q)| rat(p, q))
    }

    #[test]
    fn eval_examples() {
        let x1x4 = &Poly7::var(1) * &Poly7::var(4);
        assert_eq!(x1x4.eval(&pt([(1, 1), (0, 1), (0, 1), (1, 1), (0, 1), (0, 1), (0, 1)])), int(1));
        let one = Poly7::constant(int(1));
        assert_eq!(one.eval(&pt([(3, 1), (-2, 7), (0, 1), (1, 1), (5, 3), (0, 1), (9, 1)])), int(1));
        let q = (1..=7).fold(Poly7::zero(), |acc, i| {
            let sq = &Poly7::var(i) * &Poly7::var(i);
            if i <= 3 {
                &acc + &sq
            } else {
                &acc - &sq
            }
        });
        assert_eq!(q.eval(&pt([(5, 4), (0, 1), (0, 1), (3, 4), (0, 1), (0, 1), (0, 1)])), int(1));
    }

    #[test]
    fn partial_examples() {
        let x1x4 = &Poly7::var(1) * &Poly7::var(4);
        assert_eq!(x1x4.partial(1), Poly7::var(4));
        assert!(Poly7::constant(rat(5, 2)).partial(3).is_zero());
        let x2 = Poly7::var(2);
        let cube = &(&x2 * &x2) * &x2;
        assert_eq!(cube.partial(2), (&x2 * &x2).scale(&int(3)));
    }

    #[test]
    fn display() {
        let p = &(&Poly7::var(1) * &Poly7::var(4)).scale(&rat(3, 2)) - &Poly7::var(2);
        let p = &p + &Poly7::constant(int(1));
        assert_eq!(p.to_string(), "3/2*x1*x4 - x2 + 1");
        assert_eq!(Poly7::zero().to_string(), "0");
        assert_eq!((-&Poly7::var(7)).to_string(), "-x7");
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let p = &Poly7::var(3) - &Poly7::var(3);
        assert!(p.is_zero());
        assert_eq!(p, Poly7::zero());
    }

    fn small() -> impl Strategy<Value = Rational> {
        (-9i64..=9, 1i64..=4).prop_map(|(p, q)| rat(p, q))
    }

    fn poly() -> impl Strategy<Value = Poly7> {
        proptest::collection::vec((proptest::array::uniform7(0u8..3), small()), 0..5).prop_map(|ts| {
            ts.into_iter().fold(Poly7::zero(), |acc, (e, c)| &acc + &Poly7::monomial(e, c))
        })
    }

    fn point() -> impl Strategy<Value = [Rational; 7]> {
        proptest::array::uniform7(small())
    }

    proptest! {
        #[test]
        fn partials_commute(p in poly(), i in 1usize..=7, j in 1usize..=7) {
            prop_assert_eq!(p.partial(i).partial(j), p.partial(j).partial(i));
        }

        #[test]
        fn eval_is_a_ring_homomorphism(p in poly(), q in poly(), x in point()) {
            prop_assert_eq!((&p * &q).eval(&x), p.eval(&x) * q.eval(&x));
            prop_assert_eq!((&p + &q).eval(&x), p.eval(&x) + q.eval(&x));
        }
    }
}
