//! The split Cayley algebra Ca′.
//!
//! Elements are written `x = x0 + x1 e1 + … + x7 e7` with `ei² = −1` for
//! `i = 1,2,3` and `ej² = +1` for `j = 4..7`. The multiplication table below
//! is the single source of truth; [`cayley_dickson_mul`] builds the same
//! product from quaternion pairs and is checked against it.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::report::{witness, Check, Report, Witness};
use crate::sampling::{small_rational, trial_rng, TrialRng};
use crate::scalars::{int, Field, Rational, Ring};

/// `TABLE[i-1][j-1] = (s, k)` means `ei·ej = s·ek`, with `k = 0` the unit.
/// Rows are the left factor.
pub const TABLE: [[(i8, u8); 7]; 7] = [
    [(-1, 0), (1, 3), (-1, 2), (1, 5), (-1, 4), (-1, 7), (1, 6)],
    [(-1, 3), (-1, 0), (1, 1), (1, 6), (1, 7), (-1, 4), (-1, 5)],
    [(1, 2), (-1, 1), (-1, 0), (1, 7), (-1, 6), (1, 5), (-1, 4)],
    [(-1, 5), (-1, 6), (-1, 7), (1, 0), (-1, 1), (-1, 2), (-1, 3)],
    [(1, 4), (-1, 7), (1, 6), (1, 1), (1, 0), (1, 3), (-1, 2)],
    [(1, 7), (1, 4), (-1, 5), (1, 2), (-1, 3), (1, 0), (1, 1)],
    [(-1, 6), (1, 5), (1, 4), (1, 3), (1, 2), (-1, 1), (1, 0)],
];

/// Metric signs of the basis `1, e1, …, e7`: `N(x) = Σ SIGNS[i]·xi²`.
pub const SIGNS: [i8; 8] = [1, 1, 1, 1, -1, -1, -1, -1];

/// Basis product `ei·ej` for `i, j ∈ 0..8` (index 0 is the unit).
pub fn basis_product(i: usize, j: usize) -> (i8, usize) {
    match (i, j) {
        (0, k) | (k, 0) => (1, k),
        _ => {
            let (s, k) = TABLE[i - 1][j - 1];
            (s, usize::from(k))
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SplitOctonion<T = Rational> {
    pub c: [T; 8],
}

impl<T: Ring> SplitOctonion<T> {
    pub fn new(c: [T; 8]) -> Self {
        Self { c }
    }

    pub fn zero() -> Self {
        Self { c: core::array::from_fn(|_| T::zero()) }
    }

    pub fn one() -> Self {
        Self::basis(0)
    }

    pub fn real(a: T) -> Self {
        let mut x = Self::zero();
        x.c[0] = a;
        x
    }

    /// `e_k` (`k = 0` gives the unit).
    pub fn basis(k: usize) -> Self {
        let mut x = Self::zero();
        x.c[k] = T::one();
        x
    }

    pub fn re(&self) -> T {
        self.c[0].clone()
    }

    /// The purely imaginary part `X` of `x = x0 + X`.
    pub fn im(&self) -> Self {
        let mut x = self.clone();
        x.c[0] = T::zero();
        x
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(T::is_zero)
    }

    pub fn scale(&self, s: &T) -> Self {
        Self { c: core::array::from_fn(|i| self.c[i].clone() * s.clone()) }
    }

    /// Product from the multiplication table, extended bilinearly.
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for i in 0..8 {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..8 {
                if rhs.c[j].is_zero() {
                    continue;
                }
                let (s, k) = basis_product(i, j);
                let term = self.c[i].mul_ref(&rhs.c[j]);
                let acc = core::mem::replace(&mut out.c[k], T::zero());
                out.c[k] = if s > 0 { acc + term } else { acc - term };
            }
        }
        out
    }

    /// `x̄ = x0 − x1 e1 − … − x7 e7`.
    pub fn conj(&self) -> Self {
        Self { c: core::array::from_fn(|i| if i == 0 { self.c[0].clone() } else { -self.c[i].clone() }) }
    }

    /// `N(x) = x x̄ = x0² + x1² + x2² + x3² − x4² − x5² − x6² − x7²`,
    /// read off as the real coefficient of `x·x̄`.
    pub fn norm(&self) -> T {
        self.mul(&self.conj()).re()
    }

    /// Diagonal formula `Σ SIGNS[i]·xi·yi`; agrees with [`inner`](Self::inner).
    pub fn inner_diag(&self, rhs: &Self) -> T {
        (0..8).fold(T::zero(), |acc, i| {
            let t = self.c[i].clone() * rhs.c[i].clone();
            if SIGNS[i] > 0 {
                acc + t
            } else {
                acc - t
            }
        })
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self { c: core::array::from_fn(|i| self.c[i].clone() + rhs.c[i].clone()) }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self { c: core::array::from_fn(|i| self.c[i].clone() - rhs.c[i].clone()) }
    }

    pub fn neg(&self) -> Self {
        Self { c: core::array::from_fn(|i| -self.c[i].clone()) }
    }
}

impl<T: Field> SplitOctonion<T> {
    /// The signature-(4,4) scalar product `(N(x+y) − N(x) − N(y))/2`.
    pub fn inner(&self, rhs: &Self) -> T {
        let twice = self.add(rhs).norm() - self.norm() - rhs.norm();
        twice / T::from_int(2)
    }
}

/// `[x, y, z] = (xy)z − x(yz)`.
pub fn associator<T: Ring>(x: &SplitOctonion<T>, y: &SplitOctonion<T>, z: &SplitOctonion<T>) -> SplitOctonion<T> {
    x.mul(y).mul(z).sub(&x.mul(&y.mul(z)))
}

/// Product via `(a+be)(c+de) = (ac + d̄b) + (da + bc̄)e` on quaternion pairs
/// `a = (x0,x1,x2,x3)`, `b = (x4,x5,x6,x7)`.
pub fn cayley_dickson_mul<T: Ring>(x: &SplitOctonion<T>, y: &SplitOctonion<T>) -> SplitOctonion<T> {
    let split = |o: &SplitOctonion<T>| {
        (
            [o.c[0].clone(), o.c[1].clone(), o.c[2].clone(), o.c[3].clone()],
            [o.c[4].clone(), o.c[5].clone(), o.c[6].clone(), o.c[7].clone()],
        )
    };
    let (a, b) = split(x);
    let (c, d) = split(y);
    let first = qadd(&qmul(&a, &c), &qmul(&qconj(&d), &b));
    let second = qadd(&qmul(&d, &a), &qmul(&b, &qconj(&c)));
    let [f0, f1, f2, f3] = first;
    let [s0, s1, s2, s3] = second;
    SplitOctonion::new([f0, f1, f2, f3, s0, s1, s2, s3])
}

type Quat<T> = [T; 4];

/// Hamilton product with `e1e2 = e3`, `e2e3 = e1`, `e3e1 = e2`.
fn qmul<T: Ring>(p: &Quat<T>, q: &Quat<T>) -> Quat<T> {
    let [a0, a1, a2, a3] = p.clone();
    let [b0, b1, b2, b3] = q.clone();
    [
        a0.clone() * b0.clone() - a1.clone() * b1.clone() - a2.clone() * b2.clone() - a3.clone() * b3.clone(),
        a0.clone() * b1.clone() + a1.clone() * b0.clone() + a2.clone() * b3.clone() - a3.clone() * b2.clone(),
        a0.clone() * b2.clone() - a1.clone() * b3.clone() + a2.clone() * b0.clone() + a3.clone() * b1.clone(),
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    ]
}

fn qconj<T: Ring>(p: &Quat<T>) -> Quat<T> {
    [p[0].clone(), -p[1].clone(), -p[2].clone(), -p[3].clone()]
}

fn qadd<T: Ring>(p: &Quat<T>, q: &Quat<T>) -> Quat<T> {
    core::array::from_fn(|i| p[i].clone() + q[i].clone())
}

impl<T: Ring> Mul for &SplitOctonion<T> {
    type Output = SplitOctonion<T>;
    fn mul(self, rhs: Self) -> SplitOctonion<T> {
        SplitOctonion::mul(self, rhs)
    }
}

impl<T: Ring> Add for &SplitOctonion<T> {
    type Output = SplitOctonion<T>;
    fn add(self, rhs: Self) -> SplitOctonion<T> {
        SplitOctonion::add(self, rhs)
    }
}

impl<T: Ring> Sub for &SplitOctonion<T> {
    type Output = SplitOctonion<T>;
    fn sub(self, rhs: Self) -> SplitOctonion<T> {
        SplitOctonion::sub(self, rhs)
    }
}

impl<T: Ring> Neg for &SplitOctonion<T> {
    type Output = SplitOctonion<T>;
    fn neg(self) -> SplitOctonion<T> {
        SplitOctonion::neg(self)
    }
}

impl<T: fmt::Display> fmt::Display for SplitOctonion<T> {
    /// Coefficient list `[x0, x1, …, x7]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.c.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

pub fn random_octonion(rng: &mut TrialRng) -> SplitOctonion {
    SplitOctonion::new(core::array::from_fn(|_| small_rational(rng)))
}

/// A random octonion of norm zero: the `e4..e7` block is a signed
/// permutation of the `1..e3` block, so both halves of `N` cancel.
pub fn random_null_octonion(rng: &mut TrialRng) -> SplitOctonion {
    use rand::seq::SliceRandom;
    use rand::Rng;
    let head: [Rational; 4] = core::array::from_fn(|_| small_rational(rng));
    let mut perm = [0usize, 1, 2, 3];
    perm.shuffle(rng);
    let mut c: [Rational; 8] = core::array::from_fn(|_| int(0));
    for i in 0..4 {
        c[i] = head[i].clone();
        let v = head[perm[i]].clone();
        c[4 + i] = if rng.gen::<bool>() { v } else { -v };
    }
    SplitOctonion::new(c)
}

fn w(name: &str, x: &SplitOctonion) -> Witness {
    witness(name, x)
}

const SALT_IDENTITIES: u32 = 0x0c_01;

/// Evaluates the composition law, alternativity and the Moufang-type
/// identities of Ca′ on `trials` pseudo-random rational tuples. Every tenth
/// tuple uses a null `x` and every fifth a null `y`.
pub fn identity_suite(trials: usize, seed: u64) -> Report {
    let mut report = Report::new("algebra", seed, trials);

    let mut table = Check::new("table", "ei·ej matches the printed multiplication table for all 49 basis pairs");
    let mut cd = Check::new("cayley_dickson", "(a+be)(c+de) = (ac+d̄b)+(da+bc̄)e reproduces the table on all 64 basis pairs");
    for i in 0..8 {
        for j in 0..8 {
            let (s, k) = basis_product(i, j);
            let expected = SplitOctonion::<Rational>::basis(k).scale(&int(i64::from(s)));
            let ei = SplitOctonion::basis(i);
            let ej = SplitOctonion::basis(j);
            let inputs = [witness("i", i), witness("j", j)];
            if i > 0 && j > 0 {
                table.record_eq(&ei.mul(&ej), &expected, &inputs);
            }
            cd.record_eq(&cayley_dickson_mul(&ei, &ej), &expected, &inputs);
        }
    }
    let mut squares = Check::new("basis_squares", "ei² = −1 for i = 1,2,3 and ej² = +1 for j = 4..7");
    for i in 1..8 {
        let e = SplitOctonion::<Rational>::basis(i);
        let want = SplitOctonion::real(int(if i <= 3 { -1 } else { 1 }));
        squares.record_eq(&e.mul(&e), &want, &[witness("i", i)]);
    }
    report.push(table);
    report.push(cd);
    report.push(squares);

    let mut checks = IdentityChecks::new();
    for t in 0..trials {
        let mut rng = trial_rng(seed, SALT_IDENTITIES, t as u64);
        let x = if t % 10 == 0 { random_null_octonion(&mut rng) } else { random_octonion(&mut rng) };
        let y = if t % 5 == 1 { random_null_octonion(&mut rng) } else { random_octonion(&mut rng) };
        let z = random_octonion(&mut rng);
        checks.run(&x, &y, &z);
    }
    for c in checks.into_vec() {
        report.push(c);
    }
    report
}

struct IdentityChecks {
    composition: Check,
    null_inputs: Check,
    cd_random: Check,
    norm_real: Check,
    inner: Check,
    left_alt: Check,
    right_alt: Check,
    flexible: Check,
    conj_left: Check,
    conj_right: Check,
    xxy_x: Check,
    assoc_xx: Check,
    right_moufang: Check,
    left_moufang: Check,
    middle_moufang: Check,
    alternating: Check,
    anti_automorphism: Check,
    involution: Check,
    re_symmetric: Check,
}

impl IdentityChecks {
    fn new() -> Self {
        Self {
            composition: Check::new("composition", "N(xy) = N(x)N(y)"),
            null_inputs: Check::new("composition_null", "N(xy) = 0 whenever N(x) = 0 or N(y) = 0"),
            cd_random: Check::new("cayley_dickson_random", "table product = Cayley–Dickson product on random pairs"),
            norm_real: Check::new("norm_real", "x x̄ is real and equals x0²+x1²+x2²+x3²−x4²−x5²−x6²−x7²"),
            inner: Check::new("inner_polarization", "polarized ⟨x,y⟩ equals Σ ±xi yi"),
            left_alt: Check::new("left_alternative", "(xx)y = x(xy)"),
            right_alt: Check::new("right_alternative", "x(yy) = (xy)y"),
            flexible: Check::new("flexible", "x(yx) = (xy)x"),
            conj_left: Check::new("conj_left", "(x x̄)y = x(x̄ y)"),
            conj_right: Check::new("conj_right", "x(ȳ y) = (x ȳ)y"),
            xxy_x: Check::new("xxy_x", "((xx)y)x = (xx)(yx)"),
            assoc_xx: Check::new("associator_xx_y_x", "[xx, y, x] = 0"),
            right_moufang: Check::new("right_moufang", "((xy)z)y = x((yz)y)"),
            left_moufang: Check::new("left_moufang", "((xy)x)z = x(y(xz))"),
            middle_moufang: Check::new("middle_moufang", "(xy)(zx) = (x(yz))x"),
            alternating: Check::new("associator_alternating", "[x,y,z] is antisymmetric under every transposition"),
            anti_automorphism: Check::new("conj_anti_automorphism", "conj(xy) = conj(y) conj(x)"),
            involution: Check::new("conj_involution", "conj(conj(x)) = x"),
            re_symmetric: Check::new("re_symmetric", "Re(xy) = Re(yx)"),
        }
    }

    fn run(&mut self, x: &SplitOctonion, y: &SplitOctonion, z: &SplitOctonion) {
        let inp = [w("x", x), w("y", y), w("z", z)];
        let xy = x.mul(y);
        let xx = x.mul(x);
        let nx = x.norm();
        let ny = y.norm();
        self.composition.record_eq(&xy.norm(), &(nx.clone() * ny.clone()), &inp);
        if num_traits::Zero::is_zero(&nx) || num_traits::Zero::is_zero(&ny) {
            self.null_inputs.record_eq(&xy.norm(), &int(0), &inp);
        }
        self.cd_random.record_eq(&xy, &cayley_dickson_mul(x, y), &inp);
        let xxbar = x.mul(&x.conj());
        self.norm_real.record_eq(&xxbar, &SplitOctonion::real(x.inner_diag(x)), &inp);
        self.inner.record_eq(&x.inner(y), &x.inner_diag(y), &inp);
        self.left_alt.record_eq(&xx.mul(y), &x.mul(&x.mul(y)), &inp);
        self.right_alt.record_eq(&x.mul(&y.mul(y)), &xy.mul(y), &inp);
        self.flexible.record_eq(&x.mul(&y.mul(x)), &xy.mul(x), &inp);
        self.conj_left.record_eq(&xxbar.mul(y), &x.mul(&x.conj().mul(y)), &inp);
        self.conj_right.record_eq(&x.mul(&y.conj().mul(y)), &x.mul(&y.conj()).mul(y), &inp);
        self.xxy_x.record_eq(&xx.mul(y).mul(x), &xx.mul(&y.mul(x)), &inp);
        self.assoc_xx.record_eq(&associator(&xx, y, x), &SplitOctonion::zero(), &inp);
        self.right_moufang.record_eq(&xy.mul(z).mul(y), &x.mul(&y.mul(z).mul(y)), &inp);
        self.left_moufang.record_eq(&xy.mul(x).mul(z), &x.mul(&y.mul(&x.mul(z))), &inp);
        self.middle_moufang.record_eq(&xy.mul(&z.mul(x)), &x.mul(&y.mul(z)).mul(x), &inp);

        let a = associator(x, y, z);
        let swaps = [associator(y, x, z), associator(x, z, y), associator(z, y, x)];
        let alternating = swaps.iter().all(|s| *s == a.neg())
            && associator(x, x, y).is_zero()
            && associator(x, y, y).is_zero()
            && associator(x, y, x).is_zero();
        self.alternating.record(alternating, || {
            let mut v = inp.to_vec();
            v.push(w("associator", &a));
            v
        });
        self.anti_automorphism.record_eq(&xy.conj(), &y.conj().mul(&x.conj()), &inp);
        self.involution.record_eq(&x.conj().conj(), x, &inp);
        self.re_symmetric.record_eq(&xy.re(), &y.mul(x).re(), &inp);
    }

    fn into_vec(self) -> Vec<Check> {
        vec![
            self.composition,
            self.null_inputs,
            self.cd_random,
            self.norm_real,
            self.inner,
            self.left_alt,
            self.right_alt,
            self.flexible,
            self.conj_left,
            self.conj_right,
            self.xxy_x,
            self.assoc_xx,
            self.right_moufang,
            self.left_moufang,
            self.middle_moufang,
            self.alternating,
            self.anti_automorphism,
            self.involution,
            self.re_symmetric,
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    type O = SplitOctonion;

    fn e(k: usize) -> O {
        O::basis(k)
    }

    #[test]
    fn table_examples() {
        assert_eq!(e(1).mul(&e(2)), e(3));
        assert_eq!(e(4).mul(&e(5)), e(1).neg());
        let x = O::new(core::array::from_fn(|i| rat(i as i64 - 3, 2)));
        assert_eq!(O::one().mul(&x), x);
        assert_eq!(x.mul(&O::one()), x);
    }

    #[test]
    fn cayley_dickson_reproduces_every_table_entry() {
        for i in 0..8 {
            for j in 0..8 {
                assert_eq!(cayley_dickson_mul(&e(i), &e(j)), e(i).mul(&e(j)), "e{i}·e{j}");
            }
        }
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(O::one().conj(), O::one());
        assert_eq!(e(5).conj(), e(5).neg());
    }

    #[test]
    fn norm_examples() {
        assert_eq!(e(1).norm(), int(1));
        assert_eq!(e(4).norm(), int(-1));
        assert_eq!((&(&O::one() + &e(1)) + &e(4)).norm(), int(1));
    }

    #[test]
    fn inner_examples() {
        assert_eq!(e(1).inner(&e(2)), int(0));
        assert_eq!(e(4).inner(&e(4)), int(-1));
        assert_eq!((&O::one() + &e(4)).inner(&(&O::one() - &e(4))), int(2));
    }

    #[test]
    fn associator_examples() {
        assert_eq!(associator(&e(1), &e(2), &e(4)), e(7).scale(&int(2)));
        let y = O::new(core::array::from_fn(|i| rat(2 * i as i64 - 5, 3)));
        let z = O::new(core::array::from_fn(|i| rat(i as i64 * i as i64, 4)));
        assert!(associator(&O::one(), &y, &z).is_zero());
        assert!(associator(&y, &y, &z).is_zero());
    }

    #[test]
    fn composition_with_null_factor() {
        let x = &e(1) + &e(4);
        assert_eq!(x.norm(), int(0));
        let y = O::new(core::array::from_fn(|i| rat(i as i64 + 1, 3)));
        assert_eq!(x.mul(&y).norm(), int(0));
    }

    #[test]
    fn alternativity_on_basis_pairs() {
        for i in 0..8 {
            for j in 0..8 {
                assert!(associator(&e(i), &e(i), &e(j)).is_zero());
                assert!(associator(&e(i), &e(j), &e(j)).is_zero());
                assert!(associator(&e(i), &e(j), &e(i)).is_zero());
            }
        }
    }

    #[test]
    fn null_sampler_produces_null_octonions() {
        for t in 0..50 {
            let mut rng = trial_rng(9, 1, t);
            assert_eq!(random_null_octonion(&mut rng).norm(), int(0));
        }
    }

    #[test]
    fn identity_suite_single_trial_passes() {
        let r = identity_suite(1, 0);
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
    }

    #[test]
    fn float_octonions_share_the_table() {
        let x = SplitOctonion::<f64>::basis(2);
        let y = SplitOctonion::<f64>::basis(6);
        assert_eq!(x.mul(&y), SplitOctonion::<f64>::basis(4).neg());
        assert_eq!(x.inner(&x), 1.0);
    }
}
