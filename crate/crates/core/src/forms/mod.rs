//! Exterior calculus on ℝ⁷ with polynomial coefficients, the ambient Hodge
//! star of signature (3,4), and pointwise restriction to tangent hyperplanes
//! of the pseudospheres.
//!
//! Forms follow the determinant convention: `ω^{I}(v_1,…,v_k)` is the
//! `k×k` minor of the coordinates of the `v_j` in rows `I`, and
//! `dx∧dy = dx⊗dy − dy⊗dx` with no normalising constant. A multi-index is a
//! bitmask with bit `i−1` standing for index `i`.

mod constant;
mod frame;
mod suite;

use alloc::collections::BTreeMap;
use core::fmt;

use num_traits::{One, Zero};

use crate::imspace::{ImVector, METRIC_SIGNS, OMEGA_TERMS, PSI_TERMS};
use crate::scalars::{int, Poly7, Rational};

pub use constant::ConstForm;
pub use frame::{Restriction, TangentFrame};
pub use suite::forms_suite;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormError {
    #[error("wedge of degrees {0} and {1} exceeds the dimension")]
    DegreeOverflow(usize, usize),
    #[error("interior product of a 0-form")]
    InteriorOfFunction,
    #[error("g(n,n) = {0}, the frame base is not on a unit pseudosphere")]
    NotOnSphere(Rational),
    #[error("frame vector {0} is not orthogonal to the base point")]
    NotTangent(usize),
    #[error("frame Gram matrix is degenerate")]
    DegenerateGram,
}

/// Indices `1..=dim` present in a mask, increasing.
pub fn mask_indices(mask: u8) -> impl Iterator<Item = u8> {
    (1..=8u8).filter(move |i| mask & (1 << (i - 1)) != 0)
}

pub fn mask_degree(mask: u8) -> usize {
    mask.count_ones() as usize
}

/// Mask and sorting sign of `ω^{i_1}∧…∧ω^{i_k}` for an arbitrary index list;
/// `None` if an index repeats.
pub fn sort_indices(indices: &[u8]) -> Option<(i8, u8)> {
    let mut mask = 0u8;
    let mut sign = 1i8;
    for (a, &i) in indices.iter().enumerate() {
        let bit = 1u8 << (i - 1);
        if mask & bit != 0 {
            return None;
        }
        mask |= bit;
        // Each earlier index larger than i is one transposition.
        if indices[..a].iter().filter(|&&j| j > i).count() % 2 == 1 {
            sign = -sign;
        }
    }
    Some((sign, mask))
}

/// Sign of `ω^a ∧ ω^b = ± ω^{a∪b}`, zero if the masks overlap.
pub fn merge_sign(a: u8, b: u8) -> i8 {
    if a & b != 0 {
        return 0;
    }
    let mut inversions = 0;
    for i in mask_indices(a) {
        inversions += mask_indices(b).filter(|&j| j < i).count();
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Product of the metric signs over a mask of ambient indices.
pub fn metric_sign(mask: u8) -> i8 {
    mask_indices(mask).fold(1, |s, i| s * METRIC_SIGNS[usize::from(i) - 1])
}

fn signed(sign: i8, r: Rational) -> Rational {
    if sign < 0 {
        -r
    } else {
        r
    }
}

fn signed_poly(sign: i8, p: Poly7) -> Poly7 {
    if sign < 0 {
        -p
    } else {
        p
    }
}

pub(crate) const FULL7: u8 = 0x7f;

/// Homogeneous differential `k`-form on ℝ⁷ with polynomial coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyForm {
    degree: usize,
    terms: BTreeMap<u8, Poly7>,
}

/// Polynomial vector field on ℝ⁷.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyVectorField {
    pub components: [Poly7; 7],
}

impl PolyVectorField {
    /// The position field `n(x) = x`.
    pub fn position() -> Self {
        Self { components: core::array::from_fn(|i| Poly7::var(i + 1)) }
    }

    pub fn constant(v: &ImVector) -> Self {
        Self { components: core::array::from_fn(|i| Poly7::constant(v.v[i].clone())) }
    }

    pub fn eval(&self, x: &[Rational; 7]) -> ImVector {
        ImVector::new(core::array::from_fn(|i| self.components[i].eval(x)))
    }

    /// Directional derivative `V(f) = Σ V^i ∂_i f`.
    pub fn apply(&self, f: &Poly7) -> Poly7 {
        (1..=7).fold(Poly7::zero(), |acc, i| acc + &self.components[i - 1] * &f.partial(i))
    }

    /// Lie bracket `[V, W]^i = V(W^i) − W(V^i)`.
    pub fn bracket(&self, rhs: &Self) -> Self {
        Self { components: core::array::from_fn(|i| self.apply(&rhs.components[i]) - rhs.apply(&self.components[i])) }
    }
}

impl PolyForm {
    pub fn zero(degree: usize) -> Self {
        Self { degree, terms: BTreeMap::new() }
    }

    pub fn scalar(f: Poly7) -> Self {
        let mut out = Self::zero(0);
        out.add_term(0, f);
        out
    }

    /// `c·dx^{i_1}∧…∧dx^{i_k}` for any index order; zero on repeats.
    pub fn monomial(indices: &[u8], c: Poly7) -> Self {
        let mut out = Self::zero(indices.len());
        if let Some((s, mask)) = sort_indices(indices) {
            out.add_term(mask, signed_poly(s, c));
        }
        out
    }

    /// Constant-coefficient form `Σ s_I ω^I`.
    pub fn from_signed_terms<const K: usize>(terms: &[(i8, [u8; K])]) -> Self {
        let mut out = Self::zero(K);
        for (s, idx) in terms {
            out = out.add(&Self::monomial(idx, Poly7::constant(int(i64::from(*s)))));
        }
        out
    }

    pub fn omega() -> Self {
        Self::from_signed_terms(&OMEGA_TERMS)
    }

    pub fn psi() -> Self {
        Self::from_signed_terms(&PSI_TERMS)
    }

    /// Volume form `μ = ω^{1234567}`.
    pub fn volume() -> Self {
        Self::monomial(&[1, 2, 3, 4, 5, 6, 7], Poly7::constant(int(1)))
    }

    /// Metric dual 1-form `V* = Σ s_i V^i dx^i`.
    pub fn metric_dual(v: &PolyVectorField) -> Self {
        let mut out = Self::zero(1);
        for i in 0..7 {
            out.add_term(1 << i, signed_poly(METRIC_SIGNS[i], v.components[i].clone()));
        }
        out
    }

    pub fn from_const(c: &ConstForm) -> Self {
        assert_eq!(c.dim(), 7, "only ambient constant forms lift to ℝ⁷");
        let mut out = Self::zero(c.degree());
        for (&m, v) in c.coeffs() {
            out.add_term(m, Poly7::constant(v.clone()));
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, mask: u8) -> Poly7 {
        self.terms.get(&mask).cloned().unwrap_or_default()
    }

    /// Terms in lexicographic order of their multi-indices.
    pub fn terms(&self) -> impl Iterator<Item = (alloc::vec::Vec<u8>, &Poly7)> {
        let mut v: alloc::vec::Vec<_> = self.terms.iter().map(|(&m, p)| (mask_indices(m).collect::<alloc::vec::Vec<_>>(), p)).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v.into_iter()
    }

    fn add_term(&mut self, mask: u8, c: Poly7) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(mask_degree(mask), self.degree);
        let slot = self.terms.entry(mask).or_default();
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.terms.remove(&mask);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.degree, rhs.degree, "adding forms of different degree");
        let mut out = self.clone();
        for (&m, c) in &rhs.terms {
            out.add_term(m, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Self { degree: self.degree, terms: self.terms.iter().map(|(&m, c)| (m, -c)).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.scale_poly(&Poly7::constant(c.clone()))
    }

    pub fn scale_poly(&self, f: &Poly7) -> Self {
        let mut out = Self::zero(self.degree);
        for (&m, c) in &self.terms {
            out.add_term(m, c * f);
        }
        out
    }

    pub fn wedge(&self, rhs: &Self) -> Result<Self, FormError> {
        if self.degree + rhs.degree > 7 {
            return Err(FormError::DegreeOverflow(self.degree, rhs.degree));
        }
        let mut out = Self::zero(self.degree + rhs.degree);
        for (&a, ca) in &self.terms {
            for (&b, cb) in &rhs.terms {
                let s = merge_sign(a, b);
                if s != 0 {
                    out.add_term(a | b, signed_poly(s, ca * cb));
                }
            }
        }
        Ok(out)
    }

    /// `dα = Σ_I Σ_i ∂_i a_I dx^i∧dx^I`. The differential of a 7-form is the
    /// zero 8-form, which is reported as a degree overflow.
    pub fn exterior_d(&self) -> Result<Self, FormError> {
        if self.degree >= 7 {
            return Err(FormError::DegreeOverflow(self.degree, 1));
        }
        let mut out = Self::zero(self.degree + 1);
        for (&m, c) in &self.terms {
            for i in 0..7u8 {
                let bit = 1u8 << i;
                let s = merge_sign(bit, m);
                if s == 0 {
                    continue;
                }
                let p = c.partial(usize::from(i) + 1);
                out.add_term(bit | m, signed_poly(s, p));
            }
        }
        Ok(out)
    }

    /// `ι_V α`, with `ι_V(dx^{i_1}∧…∧dx^{i_k}) = Σ_r (−1)^{r−1} V^{i_r} dx^{I∖i_r}`.
    pub fn interior(&self, v: &PolyVectorField) -> Result<Self, FormError> {
        if self.degree == 0 {
            return Err(FormError::InteriorOfFunction);
        }
        let mut out = Self::zero(self.degree - 1);
        for (&m, c) in &self.terms {
            for (r, i) in mask_indices(m).enumerate() {
                let comp = &v.components[usize::from(i) - 1];
                if comp.is_zero() {
                    continue;
                }
                let term = c * comp;
                out.add_term(m & !(1 << (i - 1)), if r % 2 == 0 { term } else { -term });
            }
        }
        Ok(out)
    }

    /// `L_V α = d ι_V α + ι_V dα`.
    pub fn lie_derivative(&self, v: &PolyVectorField) -> Self {
        let first = match self.interior(v) {
            Ok(i) => i.exterior_d().expect("degree below 7"),
            Err(_) => Self::zero(0),
        };
        let second = match self.exterior_d() {
            Ok(d) => d.interior(v).expect("degree at least 1"),
            Err(_) => Self::zero(7),
        };
        if self.degree == 0 {
            second
        } else if self.degree == 7 {
            first
        } else {
            first.add(&second)
        }
    }

    /// Lie derivative from the coordinate formula
    /// `L_V(f dx^{i_1}∧…∧dx^{i_k}) = V(f) dx^I + f Σ_r dx^{i_1}∧…∧dV^{i_r}∧…∧dx^{i_k}`,
    /// independent of the Cartan formula.
    pub fn lie_derivative_direct(&self, v: &PolyVectorField) -> Self {
        let mut out = Self::zero(self.degree);
        for (&m, c) in &self.terms {
            out.add_term(m, v.apply(c));
            let idx: alloc::vec::Vec<u8> = mask_indices(m).collect();
            for r in 0..idx.len() {
                let vi = &v.components[usize::from(idx[r]) - 1];
                for j in 1..=7u8 {
                    let dvi = vi.partial(usize::from(j));
                    if dvi.is_zero() {
                        continue;
                    }
                    let mut replaced = idx.clone();
                    replaced[r] = j;
                    out = out.add(&Self::monomial(&replaced, c * &dvi));
                }
            }
        }
        out
    }

    /// Ambient Hodge star: `∗ω^I = s_I σ(I,I^c) ω^{I^c}` where `s_I` is the
    /// product of metric signs over `I` and `σ` the sign of `ω^I∧ω^{I^c}`.
    pub fn hodge(&self) -> Self {
        let mut out = Self::zero(7 - self.degree);
        for (&m, c) in &self.terms {
            let comp = FULL7 & !m;
            out.add_term(comp, signed_poly(metric_sign(m) * merge_sign(m, comp), c.clone()));
        }
        out
    }

    /// Pointwise value at `x`.
    pub fn eval(&self, x: &[Rational; 7]) -> ConstForm {
        ConstForm::from_coeffs(7, self.degree, self.terms.iter().map(|(&m, c)| (m, c.eval(x))))
    }

    /// Pointwise value on `k` vectors at `x`.
    pub fn value(&self, x: &[Rational; 7], vectors: &[ImVector]) -> Rational {
        let vs: alloc::vec::Vec<alloc::vec::Vec<Rational>> = vectors.iter().map(|v| v.v.to_vec()).collect();
        self.eval(x).evaluate(&vs)
    }
}

/// Induced metric on constant ambient forms:
/// `g(ω^I, ω^J) = δ_{IJ} s_I` (determinant convention, no `1/k!`).
pub fn form_metric(a: &ConstForm, b: &ConstForm) -> Rational {
    assert_eq!(a.degree(), b.degree(), "form metric needs equal degrees");
    a.coeffs().fold(Rational::zero(), |acc, (&m, c)| match b.coeff(m) {
        Some(d) => acc + signed(metric_sign(m), c * d),
        None => acc,
    })
}

/// Ambient Hodge star of a constant form; same rule as [`PolyForm::hodge`].
pub fn hodge_const(a: &ConstForm) -> ConstForm {
    assert_eq!(a.dim(), 7, "ambient Hodge star acts on ℝ⁷ forms");
    ConstForm::from_coeffs(
        7,
        7 - a.degree(),
        a.coeffs().map(|(&m, c)| {
            let comp = FULL7 & !m;
            (comp, signed(metric_sign(m) * merge_sign(m, comp), c.clone()))
        }),
    )
}

impl fmt::Display for PolyForm {
    /// `(x1 + 1)*w23 - w145`; a form with no terms prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (idx, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let single = c.terms().count() == 1 && c.is_constant();
            if single && c.terms().next().map(|(_, v)| v.is_one()).unwrap_or(false) {
                // Bare basis element.
            } else {
                write!(f, "({c})*")?;
            }
            f.write_str("w")?;
            for i in idx {
                write!(f, "{i}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
