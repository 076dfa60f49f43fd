use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use super::{mask_degree, mask_indices, merge_sign, signed, FormError};
use crate::linalg::Matrix;
use crate::scalars::Rational;

/// A constant exterior `k`-form on a `dim`-dimensional space, stored by its
/// coefficients on the increasing multi-index basis. Used both for ambient
/// values at a point (`dim = 7`) and for tangential forms written in the dual
/// basis of a tangent frame (`dim = 6`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConstForm {
    dim: usize,
    degree: usize,
    coeffs: BTreeMap<u8, Rational>,
}

impl ConstForm {
    /// The zero `k`-form. `k` may exceed `dim`, where `Λ^k` is zero; this
    /// is the tangential part of an ambient 7-form.
    pub fn zero(dim: usize, degree: usize) -> Self {
        assert!(dim <= 8 && degree <= 8);
        Self { dim, degree, coeffs: BTreeMap::new() }
    }

    pub fn from_coeffs(dim: usize, degree: usize, it: impl IntoIterator<Item = (u8, Rational)>) -> Self {
        let mut out = Self::zero(dim, degree);
        for (m, c) in it {
            out.add_term(m, c);
        }
        out
    }

    /// Basis element `ω^I` for an increasing index list.
    pub fn basis(dim: usize, indices: &[u8]) -> Self {
        let mask = indices.iter().fold(0u8, |m, &i| m | 1 << (i - 1));
        Self::from_coeffs(dim, indices.len(), [(mask, Rational::from_integer(1.into()))])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&u8, &Rational)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, mask: u8) -> Option<&Rational> {
        self.coeffs.get(&mask)
    }

    pub fn coeff_or_zero(&self, mask: u8) -> Rational {
        self.coeffs.get(&mask).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub(crate) fn add_term(&mut self, mask: u8, c: Rational) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(mask_degree(mask), self.degree);
        debug_assert!(u32::from(mask) < 1 << self.dim);
        let slot = self.coeffs.entry(mask).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&mask);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.dim, self.degree), (rhs.dim, rhs.degree), "adding incompatible forms");
        let mut out = self.clone();
        for (&m, c) in &rhs.coeffs {
            out.add_term(m, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&Rational::from_integer((-1).into())))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::from_coeffs(self.dim, self.degree, self.coeffs.iter().map(|(&m, c)| (m, c * s)))
    }

    pub fn wedge(&self, rhs: &Self) -> Result<Self, FormError> {
        assert_eq!(self.dim, rhs.dim, "wedge across different spaces");
        if self.degree + rhs.degree > self.dim {
            return Err(FormError::DegreeOverflow(self.degree, rhs.degree));
        }
        let mut out = Self::zero(self.dim, self.degree + rhs.degree);
        for (&a, ca) in &self.coeffs {
            for (&b, cb) in &rhs.coeffs {
                let s = merge_sign(a, b);
                if s != 0 {
                    out.add_term(a | b, signed(s, ca * cb));
                }
            }
        }
        Ok(out)
    }

    /// `ι_v α` for a vector given in coordinates.
    pub fn interior(&self, v: &[Rational]) -> Result<Self, FormError> {
        assert_eq!(v.len(), self.dim);
        if self.degree == 0 {
            return Err(FormError::InteriorOfFunction);
        }
        let mut out = Self::zero(self.dim, self.degree - 1);
        for (&m, c) in &self.coeffs {
            for (r, i) in mask_indices(m).enumerate() {
                let vi = &v[usize::from(i) - 1];
                if vi.is_zero() {
                    continue;
                }
                out.add_term(m & !(1 << (i - 1)), signed(if r % 2 == 0 { 1 } else { -1 }, c * vi));
            }
        }
        Ok(out)
    }

    /// `α(v_1, …, v_k)`.
    pub fn evaluate(&self, vectors: &[Vec<Rational>]) -> Rational {
        assert_eq!(vectors.len(), self.degree, "wrong number of arguments");
        let mut acc = Rational::zero();
        for (&m, c) in &self.coeffs {
            let rows: Vec<usize> = mask_indices(m).map(|i| usize::from(i) - 1).collect();
            let minor = Matrix::from_fn(self.degree, self.degree, |r, j| vectors[j][rows[r]].clone()).det();
            acc += c * minor;
        }
        acc
    }
}

impl fmt::Display for ConstForm {
    /// `2*w123 - 1/2*w145`; empty forms print as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(Vec<u8>, &Rational)> = self.coeffs.iter().map(|(&m, c)| (mask_indices(m).collect(), c)).collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (idx, c)) in terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*w")?;
            for i in idx {
                write!(f, "{i}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::int;
    use alloc::vec;

    #[test]
    fn evaluation_is_the_determinant_minor() {
        let w12 = ConstForm::basis(3, &[1, 2]);
        let u = vec![int(1), int(2), int(0)];
        let v = vec![int(3), int(4), int(5)];
        assert_eq!(w12.evaluate(&[u.clone(), v.clone()]), int(-2));
        assert_eq!(w12.evaluate(&[v, u]), int(2));
    }

    #[test]
    fn interior_then_evaluate() {
        let w = ConstForm::basis(6, &[1, 3, 4]).add(&ConstForm::basis(6, &[2, 5, 6]).scale(&int(3)));
        let a = vec![int(1), int(-1), int(2), int(0), int(1), int(1)];
        let b = vec![int(0), int(2), int(1), int(1), int(3), int(-2)];
        let c = vec![int(4), int(1), int(0), int(2), int(1), int(1)];
        let lhs = w.interior(&a).unwrap().evaluate(&[b.clone(), c.clone()]);
        assert_eq!(lhs, w.evaluate(&[a, b, c]));
    }
}
