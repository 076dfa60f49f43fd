use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{hodge_const, mask_indices, merge_sign, signed, ConstForm, FormError, PolyForm};
use crate::imspace::{metric, ImVector, METRIC_SIGNS};
use crate::linalg::Matrix;
use crate::scalars::{int, Rational};

const FULL6: u8 = 0x3f;

/// A rational basis `b_1..b_6` of the tangent hyperplane `n^⊥` at a point
/// `x = n` of S^{2,4} or S^{3,3}, with its Gram matrix.
///
/// Tangential forms are written in the dual basis `b^1..b^6`; the
/// coefficient of `b^K` is the value of the form on `(b_k)_{k∈K}`. The
/// induced volume is the one for which `μ = n*∧μ_S`, i.e.
/// `μ_S = g(n,n)·ι_n μ`.
#[derive(Clone, Debug)]
pub struct TangentFrame {
    base: ImVector,
    basis: [ImVector; 6],
    gram: Matrix<Rational>,
    /// Minors of `G^{-1}`, the induced metric on tangent covectors.
    gram_inv: Minors,
    /// Inverse of the matrix with columns `n, b_1, …, b_6`; row `j ≥ 1` is
    /// the ambient covector extending `b^j` by zero on `n`.
    coframe: Matrix<Rational>,
    /// Minors of rows `1..=6` of `coframe`.
    coframe_minors: Minors,
    /// Minors of the 7×6 matrix whose columns are the `b_j`.
    basis_minors: Minors,
    normal_sign: i8,
    volume: Rational,
}

/// Pointwise decomposition `θ = θ|_S + n*∧θ̃` of an ambient form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Restriction {
    pub tangential: ConstForm,
    /// `θ̃`; absent for 0-forms.
    pub normal: Option<ConstForm>,
}

impl TangentFrame {
    pub fn new(base: ImVector, basis: [ImVector; 6]) -> Result<Self, FormError> {
        let nn = metric(&base, &base);
        let normal_sign = if nn == int(1) {
            1
        } else if nn == int(-1) {
            -1
        } else {
            return Err(FormError::NotOnSphere(nn));
        };
        if let Some(i) = basis.iter().position(|b| !metric(b, &base).is_zero()) {
            return Err(FormError::NotTangent(i + 1));
        }
        let gram = Matrix::from_fn(6, 6, |i, j| metric(&basis[i], &basis[j]));
        let gram_inv = Minors::new(&gram.inverse().ok_or(FormError::DegenerateGram)?, 0);
        let full = Matrix::from_fn(7, 7, |i, j| if j == 0 { base.v[i].clone() } else { basis[j - 1].v[i].clone() });
        let coframe = full.inverse().ok_or(FormError::DegenerateGram)?;
        let coframe_minors = Minors::new(&coframe, 1);
        let basis_minors = Minors::new(&Matrix::from_fn(7, 6, |i, j| basis[j].v[i].clone()), 0);
        let volume = signed(normal_sign, full.det());
        Ok(Self { base, basis, gram, gram_inv, coframe, coframe_minors, basis_minors, normal_sign, volume })
    }

    /// The coordinate frame `b_j = e_j − (s_j x_j)/(s_p x_p)·e_p`, `j ≠ p`,
    /// where `p` is the first nonzero coordinate of `x` and `s` the metric
    /// signs. At `x = e_1` this is `e_2..e_7`.
    pub fn standard(base: ImVector) -> Result<Self, FormError> {
        let Some(p) = base.v.iter().position(|c| !c.is_zero()) else {
            return Err(FormError::NotOnSphere(Rational::zero()));
        };
        let sp = signed(METRIC_SIGNS[p], base.v[p].clone());
        let mut basis: Vec<ImVector> = Vec::with_capacity(6);
        for j in (0..7).filter(|&j| j != p) {
            let mut b = ImVector::basis(j + 1);
            b.v[p] = -(signed(METRIC_SIGNS[j], base.v[j].clone()) / sp.clone());
            basis.push(b);
        }
        let basis: [ImVector; 6] = basis.try_into().expect("six tangent vectors");
        Self::new(base, basis)
    }

    pub fn base(&self) -> &ImVector {
        &self.base
    }

    pub fn basis(&self) -> &[ImVector; 6] {
        &self.basis
    }

    pub fn gram(&self) -> &Matrix<Rational> {
        &self.gram
    }

    /// `g(n,n)`, `+1` on S^{2,4} and `−1` on S^{3,3}.
    pub fn normal_sign(&self) -> i8 {
        self.normal_sign
    }

    /// `μ_S(b_1, …, b_6)`.
    pub fn volume(&self) -> &Rational {
        &self.volume
    }

    /// Frame coordinates of a tangent vector.
    pub fn coords(&self, v: &ImVector) -> Vec<Rational> {
        (1..7).map(|r| (0..7).fold(Rational::zero(), |acc, c| acc + &self.coframe[(r, c)] * &v.v[c])).collect()
    }

    /// Component of `v` along `n` in the decomposition `v = a·n + Σ c_j b_j`.
    pub fn normal_coord(&self, v: &ImVector) -> Rational {
        (0..7).fold(Rational::zero(), |acc, c| acc + &self.coframe[(0, c)] * &v.v[c])
    }

    pub fn vector(&self, coords: &[Rational]) -> ImVector {
        self.basis.iter().zip(coords).fold(ImVector::zero(), |acc, (b, c)| acc.add(&b.scale(c)))
    }

    /// Values of a constant ambient form on the frame, as a tangential form.
    pub fn pull_back(&self, alpha: &ConstForm) -> ConstForm {
        assert_eq!(alpha.dim(), 7);
        let k = alpha.degree();
        let mut out = ConstForm::zero(6, k);
        for mask in masks_of_degree(6, k) {
            let v = alpha.coeffs().fold(Rational::zero(), |acc, (&i, c)| acc + c * self.basis_minors.get(i, mask));
            out.add_term(mask, v);
        }
        out
    }

    /// The ambient form that agrees with `alpha` on the frame and vanishes
    /// whenever one argument is `n`.
    pub fn lift(&self, alpha: &ConstForm) -> ConstForm {
        assert_eq!(alpha.dim(), 6);
        let k = alpha.degree();
        let mut out = ConstForm::zero(7, k);
        for target in masks_of_degree(7, k) {
            let v = alpha.coeffs().fold(Rational::zero(), |acc, (&j, c)| acc + c * self.coframe_minors.get(j, target));
            out.add_term(target, v);
        }
        out
    }

    /// The metric dual `n*` of the normal as an ambient covector.
    pub fn normal_covector(&self) -> ConstForm {
        ConstForm::from_coeffs(7, 1, (0..7).map(|i| (1u8 << i, signed(METRIC_SIGNS[i], self.base.v[i].clone()))))
    }

    pub fn restrict_const(&self, theta: &ConstForm) -> Restriction {
        let tangential = self.pull_back(theta);
        // θ̃(b_J) = g(n,n)·θ(n, b_J).
        let eps = signed(self.normal_sign, int(1));
        let normal = theta.interior(&self.base.v).ok().map(|inner| self.pull_back(&inner).scale(&eps));
        Restriction { tangential, normal }
    }

    /// Decomposes the polynomial form `theta` at the frame's base point.
    pub fn restrict(&self, theta: &PolyForm) -> Restriction {
        self.restrict_const(&theta.eval(&self.base.v))
    }

    /// Rebuilds the ambient value `θ|_S + n*∧θ̃` from a decomposition.
    pub fn recompose(&self, r: &Restriction) -> ConstForm {
        let t = self.lift(&r.tangential);
        match &r.normal {
            Some(nu) => t.add(&self.normal_covector().wedge(&self.lift(nu)).expect("degree fits")),
            None => t,
        }
    }

    /// Induced metric on tangential forms, `g_S(b^I, b^J) = det(G^{-1}[I,J])`.
    pub fn form_metric(&self, a: &ConstForm, b: &ConstForm) -> Rational {
        let mut acc = Rational::zero();
        for (&i, ca) in a.coeffs() {
            for (&j, cb) in b.coeffs() {
                acc += ca * cb * self.gram_inv.get(i, j);
            }
        }
        acc
    }

    /// `μ_S` in the dual frame basis.
    pub fn volume_form(&self) -> ConstForm {
        ConstForm::from_coeffs(6, 6, [(FULL6, self.volume.clone())])
    }

    /// Hodge star of the tangent hyperplane, defined by
    /// `β∧∗_S α = g_S(β,α) μ_S` and computed from the Gram matrix:
    /// `(∗_S α)_{K^c} = σ(K,K^c)·μ_S(b)·Σ_J α_J det(G^{-1}[K,J])`.
    pub fn hodge(&self, alpha: &ConstForm) -> ConstForm {
        assert_eq!(alpha.dim(), 6);
        let k = alpha.degree();
        let mut out = ConstForm::zero(6, 6 - k);
        for kmask in masks_of_degree(6, k) {
            let acc = alpha.coeffs().fold(Rational::zero(), |acc, (&j, c)| acc + c * self.gram_inv.get(kmask, j));
            let comp = FULL6 & !kmask;
            out.add_term(comp, signed(merge_sign(kmask, comp), acc * &self.volume));
        }
        out
    }

    /// The same star through the ambient one:
    /// `∗_S(θ|_S) = g(n,n)(−1)^k ι_n(∗θ)` for the tangential lift `θ`.
    pub fn hodge_via_ambient(&self, alpha: &ConstForm) -> ConstForm {
        let k = alpha.degree();
        let star = hodge_const(&self.lift(alpha));
        let inner = star.interior(&self.base.v).expect("ambient star of a tangential form has positive degree");
        let sign = self.normal_sign * if k.is_multiple_of(2) { 1 } else { -1 };
        self.pull_back(&inner).scale(&signed(sign, Rational::one()))
    }
}

/// Every square minor of a matrix with at most 7 rows and columns, keyed by
/// row and column masks and filled by Laplace expansion along the first
/// column of each minor.
#[derive(Clone, Debug)]
pub(crate) struct Minors {
    cols: usize,
    table: Vec<Rational>,
}

impl Minors {
    /// Minors of the rows `row_offset..` of `m`; row mask bit `i` is matrix
    /// row `row_offset + i`.
    pub(crate) fn new(m: &Matrix<Rational>, row_offset: usize) -> Self {
        let rows = m.rows() - row_offset;
        let cols = m.cols();
        let mut table = alloc::vec![Rational::zero(); 1 << (rows + cols)];
        table[0] = Rational::one();
        let mut by_size: Vec<Vec<u8>> = alloc::vec![Vec::new(); rows.max(cols) + 1];
        for mask in 0u16..1 << rows.max(cols) {
            by_size[mask.count_ones() as usize].push(mask as u8);
        }
        for size in 1..=rows.min(cols) {
            for &cm in by_size[size].iter().filter(|&&c| u32::from(c) < 1 << cols) {
                let c0 = cm.trailing_zeros() as usize;
                let rest_c = cm & !(1 << c0);
                for &rm in by_size[size].iter().filter(|&&r| u32::from(r) < 1 << rows) {
                    let mut acc = Rational::zero();
                    for (p, r) in mask_indices(rm).enumerate() {
                        let r = usize::from(r) - 1;
                        let entry = &m[(row_offset + r, c0)];
                        if entry.is_zero() {
                            continue;
                        }
                        let sub = &table[Self::key(cols, rm & !(1 << r), rest_c)];
                        if sub.is_zero() {
                            continue;
                        }
                        let t = entry * sub;
                        if p % 2 == 0 {
                            acc += t;
                        } else {
                            acc -= t;
                        }
                    }
                    table[Self::key(cols, rm, cm)] = acc;
                }
            }
        }
        Self { cols, table }
    }

    fn key(cols: usize, rows: u8, cm: u8) -> usize {
        (usize::from(rows) << cols) | usize::from(cm)
    }

    pub(crate) fn get(&self, rows: u8, cols: u8) -> &Rational {
        &self.table[Self::key(self.cols, rows, cols)]
    }
}

/// All masks over `1..=dim` with `k` bits, in increasing numeric order.
pub(crate) fn masks_of_degree(dim: usize, k: usize) -> impl Iterator<Item = u8> {
    (0u16..1 << dim).filter(move |m| m.count_ones() as usize == k).map(|m| m as u8)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    fn e(i: usize) -> ImVector {
        ImVector::basis(i)
    }

    #[test]
    fn standard_frames_at_basis_points() {
        let f = TangentFrame::standard(e(1)).unwrap();
        assert_eq!(f.basis().to_vec(), (2..=7).map(e).collect::<Vec<_>>());
        let f = TangentFrame::standard(e(4)).unwrap();
        assert_eq!(f.basis().to_vec(), [1, 2, 3, 5, 6, 7].map(e).to_vec());
        assert_eq!(f.normal_sign(), -1);
    }

    #[test]
    fn rejects_bad_frames() {
        assert!(matches!(TangentFrame::standard(e(1).scale(&int(2))), Err(FormError::NotOnSphere(_))));
        let mut b = [2, 3, 4, 5, 6, 7].map(e);
        b[2] = e(1);
        assert_eq!(TangentFrame::new(e(1), b).unwrap_err(), FormError::NotTangent(3));
        let mut b = [2, 3, 4, 5, 6, 7].map(e);
        b[5] = e(2);
        assert_eq!(TangentFrame::new(e(1), b).unwrap_err(), FormError::DegenerateGram);
    }

    #[test]
    fn restriction_of_omega_at_e1() {
        let f = TangentFrame::standard(e(1)).unwrap();
        let r = f.restrict(&PolyForm::omega());
        // Frame index j is ambient index j+1; Ω(e2,e4,e6) = −1.
        assert_eq!(r.tangential.coeff_or_zero(0b010101), int(-1));
        let n_star = PolyForm::metric_dual(&super::super::PolyVectorField::position());
        assert!(f.restrict(&n_star).tangential.is_zero());
        let c = PolyForm::scalar(crate::scalars::Poly7::constant(rat(3, 2)));
        assert_eq!(f.restrict(&c).tangential, ConstForm::from_coeffs(6, 0, [(0, rat(3, 2))]));
    }

    #[test]
    fn hodge_routes_agree_on_basis_forms() {
        let x = ImVector::new([rat(1, 1), rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1)]);
        for base in [x, e(4)] {
            let f = TangentFrame::standard(base).unwrap();
            for k in 0..=6 {
                for m in masks_of_degree(6, k) {
                    let a = ConstForm::from_coeffs(6, k, [(m, int(1))]);
                    assert_eq!(f.hodge(&a), f.hodge_via_ambient(&a), "k={k} m={m:b}");
                }
            }
        }
    }
}
