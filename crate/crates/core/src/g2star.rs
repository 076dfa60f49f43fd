//! The Lie algebra g₂* in a null-adapted basis of a (3,4) space, where the
//! metric is `g = −2(e¹·e⁵ + e²·e⁶ + e³·e⁷) − (e⁴)²` and g₂* is the
//! infinitesimal stabiliser of
//! `Ω₀ = √2(e¹²³ − e⁵⁶⁷) + e⁴∧(e¹⁵ + e²⁶ + e³⁷)`.
//!
//! This basis is unrelated to the orthonormal one used by the other modules;
//! nothing here converts between them. Matrices act on column vectors,
//! `A e_j = Σ_i A_ij e_i`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::forms::{mask_indices, sort_indices};
use crate::linalg::Matrix;
use crate::report::{witness, Check, Report};
use crate::sampling::{small_rational, trial_rng};
use crate::scalars::{int, QuadExt, Rational};

pub const DIM: usize = 14;

/// An element of g₂*: its 14 parameters and the 7×7 matrix they determine.
#[derive(Clone, PartialEq, Debug)]
pub struct G2Element {
    pub params: [Rational; DIM],
    pub matrix: Matrix<QuadExt>,
}

/// A 3-form on the null-adapted space with coefficients in ℚ(√2).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ThreeForm {
    coeffs: BTreeMap<u8, QuadExt>,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum G2Error {
    #[error("commutator is not in the span of the generators; residual {0}")]
    NotClosed(alloc::string::String),
}

impl ThreeForm {
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_term(&mut self, indices: [u8; 3], c: QuadExt) {
        let Some((s, mask)) = sort_indices(&indices) else {
            return;
        };
        let c = if s < 0 { -c } else { c };
        let slot = self.coeffs.entry(mask).or_insert_with(QuadExt::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.coeffs.remove(&mask);
        }
    }

    /// Value on basis vectors `e_i, e_j, e_k` (1-based, any order).
    pub fn on_basis(&self, i: u8, j: u8, k: u8) -> QuadExt {
        match sort_indices(&[i, j, k]) {
            Some((s, mask)) => {
                let c = self.coeffs.get(&mask).cloned().unwrap_or_else(QuadExt::zero);
                if s < 0 {
                    -c
                } else {
                    c
                }
            }
            None => QuadExt::zero(),
        }
    }
}

impl fmt::Display for ThreeForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.coeffs.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*e")?;
            for i in mask_indices(*m) {
                write!(f, "{i}")?;
            }
        }
        Ok(())
    }
}

/// `Ω₀ = √2 e¹²³ − √2 e⁵⁶⁷ − e¹⁴⁵ − e²⁴⁶ − e³⁴⁷`.
pub fn omega0() -> ThreeForm {
    let mut w = ThreeForm::default();
    w.add_term([1, 2, 3], QuadExt::sqrt2());
    w.add_term([5, 6, 7], -QuadExt::sqrt2());
    for (a, b) in [(1, 5), (2, 6), (3, 7)] {
        w.add_term([4, a, b], QuadExt::one());
    }
    w
}

/// Gram matrix of the null-adapted metric.
pub fn null_metric() -> Matrix<Rational> {
    Matrix::from_fn(7, 7, |i, j| match (i + 1, j + 1) {
        (1, 5) | (5, 1) | (2, 6) | (6, 2) | (3, 7) | (7, 3) | (4, 4) => int(-1),
        _ => Rational::zero(),
    })
}

/// The matrix of the general element with parameters `a1..a14`.
pub fn build_element(a: &[Rational; DIM]) -> G2Element {
    let p = |k: usize| QuadExt::rational(a[k - 1].clone());
    let r = |k: usize| QuadExt::sqrt2_times(a[k - 1].clone());
    let z = QuadExt::zero;
    #[rustfmt::skip]
    let rows: [[QuadExt; 7]; 7] = [
        [-p(1) - p(4), p(5), p(6), -r(12), z(), -p(11), p(10)],
        [p(7), p(1), p(2), -r(13), p(11), z(), -p(9)],
        [p(8), p(3), p(4), -r(14), -p(10), p(9), z()],
        [-r(9), -r(10), -r(11), z(), r(12), r(13), r(14)],
        [z(), p(14), -p(13), r(9), p(1) + p(4), -p(7), -p(8)],
        [-p(14), z(), p(12), r(10), -p(5), -p(1), -p(3)],
        [p(13), -p(12), z(), r(11), -p(6), -p(2), -p(4)],
    ];
    G2Element { params: a.clone(), matrix: Matrix::from_fn(7, 7, |i, j| rows[i][j].clone()) }
}

/// Generator `k ∈ 1..=14`: parameter `a_k = 1`, the rest zero.
pub fn generator(k: usize) -> G2Element {
    let mut a: [Rational; DIM] = core::array::from_fn(|_| Rational::zero());
    a[k - 1] = int(1);
    build_element(&a)
}

/// `(A·Ω)(x,y,z) = Ω(Ax,y,z) + Ω(x,Ay,z) + Ω(x,y,Az)`, on basis triples.
pub fn derivation_action(a: &Matrix<QuadExt>, omega: &ThreeForm) -> ThreeForm {
    let mut out = ThreeForm::default();
    for i in 1..=7u8 {
        for j in i + 1..=7 {
            for k in j + 1..=7 {
                let mut acc = QuadExt::zero();
                for l in 1..=7u8 {
                    let (li, ii, jj, kk) = (usize::from(l) - 1, usize::from(i) - 1, usize::from(j) - 1, usize::from(k) - 1);
                    acc = acc
                        + a[(li, ii)].clone() * omega.on_basis(l, j, k)
                        + a[(li, jj)].clone() * omega.on_basis(i, l, k)
                        + a[(li, kk)].clone() * omega.on_basis(i, j, l);
                }
                out.add_term([i, j, k], acc);
            }
        }
    }
    out
}

fn lift(m: &Matrix<Rational>) -> Matrix<QuadExt> {
    Matrix::from_fn(m.rows(), m.cols(), |i, j| QuadExt::rational(m[(i, j)].clone()))
}

/// `AᵀG + GA = 0`.
pub fn is_metric_skew(a: &Matrix<QuadExt>, g: &Matrix<Rational>) -> bool {
    let g = lift(g);
    a.transpose().mul(&g).add(&g.mul(a)).is_zero()
}

pub fn commutator(a: &Matrix<QuadExt>, b: &Matrix<QuadExt>) -> Matrix<QuadExt> {
    a.mul(b).sub(&b.mul(a))
}

/// 49×14 matrix whose column `k` is the flattened generator `k`.
fn parameter_map() -> Matrix<QuadExt> {
    let gens: Vec<G2Element> = (1..=DIM).map(generator).collect();
    Matrix::from_fn(49, DIM, |r, k| gens[k].matrix[(r / 7, r % 7)].clone())
}

/// Parameters `c` with `build_element(c) = [build_element(a), build_element(b)]`.
pub fn bracket_closure(a: &[Rational; DIM], b: &[Rational; DIM]) -> Result<[Rational; DIM], G2Error> {
    let comm = commutator(&build_element(a).matrix, &build_element(b).matrix);
    let rhs: Vec<QuadExt> = (0..49).map(|r| comm[(r / 7, r % 7)].clone()).collect();
    let residual = || G2Error::NotClosed(alloc::format!("{comm:?}"));
    let sol = parameter_map().solve(&rhs).ok_or_else(residual)?;
    if sol.iter().any(|c| !c.b.is_zero()) {
        return Err(residual());
    }
    let c: [Rational; DIM] = core::array::from_fn(|k| sol[k].a.clone());
    if build_element(&c).matrix != comm {
        return Err(residual());
    }
    Ok(c)
}

/// Dimension of `{A : AᵀG + GA = 0, A·Ω₀ = 0}` from an exact nullspace
/// computation over ℚ(√2) in the 49 matrix entries, and the rank of that
/// space joined with the 14 generators.
pub fn stabilizer_dimension() -> (usize, usize) {
    let g = lift(&null_metric());
    let omega = omega0();
    let unit = |r: usize| {
        let mut m = Matrix::zeros(7, 7);
        m[(r / 7, r % 7)] = QuadExt::one();
        m
    };
    // Each equation is linear in the entries; evaluate it on unit matrices.
    let mut eqs: Vec<Vec<QuadExt>> = Vec::new();
    let columns: Vec<(Matrix<QuadExt>, ThreeForm)> = (0..49)
        .map(|r| {
            let e = unit(r);
            let skew = e.transpose().mul(&g).add(&g.mul(&e));
            let act = derivation_action(&e, &omega);
            (skew, act)
        })
        .collect();
    for i in 0..7 {
        for j in i..7 {
            eqs.push(columns.iter().map(|(s, _)| s[(i, j)].clone()).collect());
        }
    }
    for i in 1..=7u8 {
        for j in i + 1..=7 {
            for k in j + 1..=7 {
                eqs.push(columns.iter().map(|(_, w)| w.on_basis(i, j, k)).collect());
            }
        }
    }
    let system = Matrix::from_rows(&eqs);
    let null = system.nullspace();
    let pm = parameter_map();
    let mut joined: Vec<Vec<QuadExt>> = null.clone();
    for k in 0..DIM {
        joined.push((0..49).map(|r| pm[(r, k)].clone()).collect());
    }
    (null.len(), Matrix::from_rows(&joined).rank())
}

fn params_display(a: &[Rational; DIM]) -> alloc::string::String {
    let parts: Vec<alloc::string::String> = a.iter().map(|x| alloc::format!("{x}")).collect();
    alloc::format!("[{}]", parts.join(", "))
}

const SALT_RANDOM: u32 = 0x3c_01;

/// Invariance, skewness, injectivity, bracket closure, Jacobi, and the
/// independent stabiliser-dimension computation.
pub fn g2star_suite(trials: usize, seed: u64) -> Report {
    let mut report = Report::new("g2star", seed, trials);
    let g = null_metric();
    let omega = omega0();

    let mut annihilate = Check::new("generators_annihilate", "each generator A_k satisfies A_k·Ω₀ = 0");
    let mut skew = Check::new("generators_skew", "each generator satisfies AᵀG + GA = 0");
    for k in 1..=DIM {
        let a = generator(k);
        let act = derivation_action(&a.matrix, &omega);
        annihilate.record(act.is_zero(), || alloc::vec![witness("k", k), witness("A·Ω₀", &act)]);
        skew.record(is_metric_skew(&a.matrix, &g), || alloc::vec![witness("k", k)]);
    }

    let mut injective = Check::new("parameter_rank", "the parameter map a ↦ A has rank 14");
    let rank = parameter_map().rank();
    injective.record(rank == DIM, || alloc::vec![witness("rank", rank)]);

    let mut closure = Check::new("bracket_closure", "[A_i, A_j] lies in the span of the generators for all 91 pairs, with rational coefficients");
    let unit = |k: usize| -> [Rational; DIM] { core::array::from_fn(|i| if i + 1 == k { int(1) } else { Rational::zero() }) };
    for i in 1..=DIM {
        for j in i + 1..=DIM {
            let res = bracket_closure(&unit(i), &unit(j));
            closure.record(res.is_ok(), || alloc::vec![witness("i", i), witness("j", j)]);
        }
    }

    let mut dimension = Check::new(
        "stabilizer_dimension",
        "G-skew solutions of A·Ω₀ = 0 form a 14-dimensional space equal to the span of the generators",
    );
    let (dim, joined) = stabilizer_dimension();
    dimension.record(dim == DIM && joined == DIM, || alloc::vec![witness("nullity", dim), witness("rank with generators", joined)]);

    let mut random = Check::new("random_elements", "random elements annihilate Ω₀ and are G-skew");
    let mut jacobi = Check::new("jacobi", "[A,[B,C]] + [B,[C,A]] + [C,[A,B]] = 0 and closure of [A,B]");
    for t in 0..trials {
        let mut rng = trial_rng(seed, SALT_RANDOM, t as u64);
        let a: [Rational; DIM] = core::array::from_fn(|_| small_rational(&mut rng));
        let b: [Rational; DIM] = core::array::from_fn(|_| small_rational(&mut rng));
        let c: [Rational; DIM] = core::array::from_fn(|_| small_rational(&mut rng));
        let (ma, mb, mc) = (build_element(&a).matrix, build_element(&b).matrix, build_element(&c).matrix);
        let ok = derivation_action(&ma, &omega).is_zero() && is_metric_skew(&ma, &g);
        random.record(ok, || alloc::vec![witness("a", params_display(&a))]);
        let sum = commutator(&ma, &commutator(&mb, &mc))
            .add(&commutator(&mb, &commutator(&mc, &ma)))
            .add(&commutator(&mc, &commutator(&ma, &mb)));
        let ok = sum.is_zero() && bracket_closure(&a, &b).is_ok();
        jacobi.record(ok, || alloc::vec![witness("a", params_display(&a)), witness("b", params_display(&b)), witness("c", params_display(&c))]);
    }

    for c in [annihilate, skew, injective, closure, dimension, random, jacobi] {
        report.push(c);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entries(a: &G2Element) -> Vec<((usize, usize), QuadExt)> {
        let mut v = Vec::new();
        for i in 0..7 {
            for j in 0..7 {
                if !a.matrix[(i, j)].is_zero() {
                    v.push(((i + 1, j + 1), a.matrix[(i, j)].clone()));
                }
            }
        }
        v
    }

    #[test]
    fn element_examples() {
        let zero: [Rational; DIM] = core::array::from_fn(|_| Rational::zero());
        assert!(build_element(&zero).matrix.is_zero());
        let s = QuadExt::sqrt2();
        assert_eq!(
            entries(&generator(9)),
            alloc::vec![((2, 7), -QuadExt::one()), ((3, 6), QuadExt::one()), ((4, 1), -s.clone()), ((5, 4), s)]
        );
        let diag: Vec<QuadExt> = (0..7).map(|i| generator(1).matrix[(i, i)].clone()).collect();
        let expect: Vec<QuadExt> = [-1, 1, 0, 0, 1, -1, 0].iter().map(|&d| QuadExt::rational(int(d))).collect();
        assert_eq!(diag, expect);
    }

    #[test]
    fn derivation_action_examples() {
        assert!(derivation_action(&generator(9).matrix, &omega0()).is_zero());
        assert!(derivation_action(&Matrix::zeros(7, 7), &omega0()).is_zero());
        let mut single = Matrix::zeros(7, 7);
        single[(0, 1)] = QuadExt::one();
        assert!(!derivation_action(&single, &omega0()).is_zero());
    }

    #[test]
    fn metric_skew_examples() {
        let g = null_metric();
        assert!(is_metric_skew(&generator(3).matrix, &g));
        assert!(!is_metric_skew(&Matrix::identity(7), &g));
        assert!(is_metric_skew(&Matrix::zeros(7, 7), &g));
    }

    #[test]
    fn closure_examples() {
        let a = generator(9).params;
        assert!(bracket_closure(&a, &a).unwrap().iter().all(Zero::is_zero));
        assert!(bracket_closure(&generator(9).params, &generator(12).params).is_ok());
        assert!(bracket_closure(&generator(1).params, &generator(5).params).is_ok());
    }

    #[test]
    fn suite_passes() {
        let r = g2star_suite(5, 1);
        let f: Vec<_> = r.failures().collect();
        assert!(f.is_empty(), "{f:#?}");
    }
}
