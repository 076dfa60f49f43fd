//! ℝ^{3,4} = Im(Ca′): the metric `g`, the 2-fold cross product
//! `X×Y = Im(XY)`, the triple form Ω, the 4-form Ψ, and the 3-fold vector
//! cross product on Ca′.

use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::linalg::Matrix;
use crate::octonion::{associator, SplitOctonion};
use crate::report::{witness, Check, Report, Witness};
use crate::sampling::{small_rational, trial_rng, TrialRng};
use crate::scalars::{int, Field, Rational, Ring};

/// Metric signs of `e1..e7`: three pluses, four minuses.
pub const METRIC_SIGNS: [i8; 7] = [1, 1, 1, -1, -1, -1, -1];

/// Ω = ω¹²³ − ω¹⁴⁵ + ω¹⁶⁷ − ω²⁴⁶ − ω²⁵⁷ − ω³⁴⁷ + ω³⁵⁶ (indices 1-based).
pub const OMEGA_TERMS: [(i8, [u8; 3]); 7] = [
    (1, [1, 2, 3]),
    (-1, [1, 4, 5]),
    (1, [1, 6, 7]),
    (-1, [2, 4, 6]),
    (-1, [2, 5, 7]),
    (-1, [3, 4, 7]),
    (1, [3, 5, 6]),
];

/// Ψ = ω⁴⁵⁶⁷ − ω²³⁶⁷ + ω²³⁴⁵ − ω¹³⁵⁷ − ω¹³⁴⁶ − ω¹²⁵⁶ + ω¹²⁴⁷.
pub const PSI_TERMS: [(i8, [u8; 4]); 7] = [
    (1, [4, 5, 6, 7]),
    (-1, [2, 3, 6, 7]),
    (1, [2, 3, 4, 5]),
    (-1, [1, 3, 5, 7]),
    (-1, [1, 3, 4, 6]),
    (-1, [1, 2, 5, 6]),
    (1, [1, 2, 4, 7]),
];

/// Sign ε in `⟨P(x,y,z), P(x,y,z)⟩ = ε·det(⟨xi,xj⟩)` for the chosen 3-fold
/// product on Ca′; measured by `imspace_suite` and pinned by tests.
pub const TRIPLE_CROSS_NORM_SIGN: i64 = 1;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ImError {
    #[error("g(n,n) = {0}, expected +1 or -1")]
    NotUnit(Rational),
}

/// A purely imaginary split octonion `X = x1 e1 + … + x7 e7`; `v[i-1] = xi`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ImVector<T = Rational> {
    pub v: [T; 7],
}

impl<T: Ring> ImVector<T> {
    pub fn new(v: [T; 7]) -> Self {
        Self { v }
    }

    pub fn zero() -> Self {
        Self { v: core::array::from_fn(|_| T::zero()) }
    }

    /// `e_i`, `i ∈ 1..=7`.
    pub fn basis(i: usize) -> Self {
        let mut x = Self::zero();
        x.v[i - 1] = T::one();
        x
    }

    pub fn is_zero(&self) -> bool {
        self.v.iter().all(T::is_zero)
    }

    pub fn to_octonion(&self) -> SplitOctonion<T> {
        SplitOctonion::new(core::array::from_fn(|i| if i == 0 { T::zero() } else { self.v[i - 1].clone() }))
    }

    /// Imaginary part of an octonion.
    pub fn from_octonion(x: &SplitOctonion<T>) -> Self {
        Self { v: core::array::from_fn(|i| x.c[i + 1].clone()) }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self { v: core::array::from_fn(|i| self.v[i].clone() + rhs.v[i].clone()) }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self { v: core::array::from_fn(|i| self.v[i].clone() - rhs.v[i].clone()) }
    }

    pub fn neg(&self) -> Self {
        Self { v: core::array::from_fn(|i| -self.v[i].clone()) }
    }

    pub fn scale(&self, s: &T) -> Self {
        Self { v: core::array::from_fn(|i| self.v[i].clone() * s.clone()) }
    }

    /// `g(X,Y) = x1y1 + x2y2 + x3y3 − x4y4 − x5y5 − x6y6 − x7y7`.
    pub fn metric(&self, rhs: &Self) -> T {
        metric(self, rhs)
    }

    pub fn cross(&self, rhs: &Self) -> Self {
        cross(self, rhs)
    }
}

impl<T: fmt::Display> fmt::Display for ImVector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, x) in self.v.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

pub fn metric<T: Ring>(x: &ImVector<T>, y: &ImVector<T>) -> T {
    (0..7).fold(T::zero(), |acc, i| {
        if x.v[i].is_zero() || y.v[i].is_zero() {
            return acc;
        }
        let t = x.v[i].mul_ref(&y.v[i]);
        if METRIC_SIGNS[i] > 0 {
            acc + t
        } else {
            acc - t
        }
    })
}

/// `X×Y = Im(XY)`.
pub fn cross<T: Ring>(x: &ImVector<T>, y: &ImVector<T>) -> ImVector<T> {
    ImVector::from_octonion(&x.to_octonion().mul(&y.to_octonion()))
}

/// Ω(X,Y,Z) = g(X×Y, Z).
pub fn triple<T: Ring>(x: &ImVector<T>, y: &ImVector<T>, z: &ImVector<T>) -> T {
    metric(&cross(x, y), z)
}

/// The 4-form Ψ = ∗Ω, evaluated through cross products:
/// `g(X,(Y×Z)×W) + g(X,Y)g(Z,W) − g(X,Z)g(Y,W)`.
///
/// The bare product `g(X,(Y×Z)×W)` agrees with Ψ whenever the arguments are
/// pairwise orthogonal (in particular on distinct basis vectors) but is not
/// alternating in general; the two metric terms are its symmetric part.
pub fn four_form<T: Ring>(x: &ImVector<T>, y: &ImVector<T>, z: &ImVector<T>, w: &ImVector<T>) -> T {
    four_form_product(x, y, z, w) + metric(x, y) * metric(z, w) - metric(x, z) * metric(y, w)
}

/// Ψ through the second product route,
/// `−g(X,Y×(Z×W)) + g(X,Z)g(Y,W) − g(X,W)g(Y,Z)`.
pub fn four_form_alt<T: Ring>(x: &ImVector<T>, y: &ImVector<T>, z: &ImVector<T>, w: &ImVector<T>) -> T {
    -metric(x, &cross(y, &cross(z, w))) + metric(x, z) * metric(y, w) - metric(x, w) * metric(y, z)
}

/// The bare product `g(X,(Y×Z)×W)`.
pub fn four_form_product<T: Ring>(x: &ImVector<T>, y: &ImVector<T>, z: &ImVector<T>, w: &ImVector<T>) -> T {
    metric(x, &cross(&cross(y, z), w))
}

/// `det` of the `k×k` block of coordinate rows `idx` (1-based) against the
/// given column vectors.
fn minor<T: Ring>(idx: &[u8], cols: &[&ImVector<T>]) -> T {
    let k = idx.len();
    let entry = |r: usize, c: usize| &cols[c].v[usize::from(idx[r]) - 1];
    let m2 = |a: usize, b: usize| entry(1, a).mul_ref(entry(2, b)) - entry(1, b).mul_ref(entry(2, a));
    match k {
        3 => entry(0, 0).mul_ref(&m2(1, 2)) - entry(0, 1).mul_ref(&m2(0, 2)) + entry(0, 2).mul_ref(&m2(0, 1)),
        _ => {
            // Laplace expansion along the first row.
            let mut acc = T::zero();
            for c in 0..k {
                let rest: Vec<&ImVector<T>> = cols.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, v)| *v).collect();
                let sub = minor(&idx[1..], &rest);
                let t = entry(0, c).mul_ref(&sub);
                acc = if c % 2 == 0 { acc + t } else { acc - t };
            }
            acc
        }
    }
}

/// Ω from its printed coefficient expansion (determinant convention).
pub fn omega_expansion<T: Ring>(x: &ImVector<T>, y: &ImVector<T>, z: &ImVector<T>) -> T {
    OMEGA_TERMS.iter().fold(T::zero(), |acc, (s, idx)| {
        let m = minor(idx, &[x, y, z]);
        if *s > 0 {
            acc + m
        } else {
            acc - m
        }
    })
}

/// Ψ from its printed coefficient expansion.
pub fn psi_expansion<T: Ring>(x: &ImVector<T>, y: &ImVector<T>, z: &ImVector<T>, w: &ImVector<T>) -> T {
    PSI_TERMS.iter().fold(T::zero(), |acc, (s, idx)| {
        let m = minor(idx, &[x, y, z, w]);
        if *s > 0 {
            acc + m
        } else {
            acc - m
        }
    })
}

/// Right-hand side of the associator formula on Im(Ca′):
/// `2(X×Y)×Z + 2g(Y,Z)X − 2g(Z,X)Y`.
pub fn assoc_via_cross<T: Ring>(x: &ImVector<T>, y: &ImVector<T>, z: &ImVector<T>) -> SplitOctonion<T> {
    let two = T::from_int(2);
    let v = cross(&cross(x, y), z)
        .add(&x.scale(&metric(y, z)))
        .sub(&y.scale(&metric(z, x)))
        .scale(&two);
    v.to_octonion()
}

/// The chosen 3-fold cross product on Ca′,
/// `P(x,y,z) = −(x ȳ)z + ⟨x,y⟩z + ⟨y,z⟩x − ⟨z,x⟩y`.
pub fn triple_cross<T: Field>(x: &SplitOctonion<T>, y: &SplitOctonion<T>, z: &SplitOctonion<T>) -> SplitOctonion<T> {
    x.mul(&y.conj())
        .mul(z)
        .neg()
        .add(&z.scale(&x.inner(y)))
        .add(&x.scale(&y.inner(z)))
        .sub(&y.scale(&z.inner(x)))
}

/// The companion product `−x(ȳz) + ⟨x,y⟩z + ⟨y,z⟩x − ⟨z,x⟩y`; related to
/// [`triple_cross`] by `conj(P(x,y,z)) = P₁(z̄,ȳ,x̄)`.
pub(crate) fn triple_cross_first<T: Field>(
    x: &SplitOctonion<T>,
    y: &SplitOctonion<T>,
    z: &SplitOctonion<T>,
) -> SplitOctonion<T> {
    x.mul(&y.conj().mul(z))
        .neg()
        .add(&z.scale(&x.inner(y)))
        .add(&x.scale(&y.inner(z)))
        .sub(&y.scale(&z.inner(x)))
}

/// Gram determinant `det(⟨xi, xj⟩)` of three octonions.
pub fn gram_det3(x: &SplitOctonion, y: &SplitOctonion, z: &SplitOctonion) -> Rational {
    let v = [x, y, z];
    Matrix::from_fn(3, 3, |i, j| v[i].inner(v[j])).det()
}

/// Evaluates the unit/anti-unit normal identities at `n` for the pair
/// `(Y, Z)`. Fails if `g(n,n) ∉ {1, −1}`.
pub fn n_identities(n: &ImVector, y: &ImVector, z: &ImVector) -> Result<Report, ImError> {
    let nn = metric(n, n);
    if nn != int(1) && nn != int(-1) {
        return Err(ImError::NotUnit(nn));
    }
    let mut report = Report::new("n_identities", 0, 1);
    let inp = [witness("n", n), witness("Y", y), witness("Z", z)];

    let mut double = Check::new("double_cross", "n×(n×Z) = −g(n,n)Z + g(n,Z)n");
    let lhs = cross(n, &cross(n, z));
    let rhs = z.scale(&-nn.clone()).add(&n.scale(&metric(n, z)));
    double.record_eq(&lhs, &rhs, &inp);
    report.push(double);

    let mut isometry = Check::new("cross_metric", "g(n×Y, n×Z) = g(n,n)g(Y,Z) − g(Y,n)g(Z,n)");
    let lhs = metric(&cross(n, y), &cross(n, z));
    let rhs = nn.clone() * metric(y, z) - metric(y, n) * metric(z, n);
    isometry.record_eq(&lhs, &rhs, &inp);
    report.push(isometry);

    if metric(y, n).is_zero() && metric(z, n).is_zero() {
        let mut perp = Check::new("perp_cross", "(n×Y)×Z = −n×(Y×Z) − g(Y,Z)n for Y,Z ⊥ n");
        let lhs = cross(&cross(n, y), z);
        let rhs = cross(n, &cross(y, z)).neg().sub(&n.scale(&metric(y, z)));
        perp.record_eq(&lhs, &rhs, &inp);
        report.push(perp);
    }

    let mut rearrange = Check::new("cross_rearrangement_normal", "(n×Y)×Z − g(n,Z)Y + g(Y,Z)n = −n×(Y×Z) + g(n,Z)Y − g(n,Y)Z");
    rearrangement_check(&mut rearrange, n, y, z, &inp);
    report.push(rearrange);
    Ok(report)
}

fn rearrangement_check(check: &mut Check, x: &ImVector, y: &ImVector, z: &ImVector, inp: &[Witness]) {
    let lhs = cross(&cross(x, y), z).sub(&y.scale(&metric(x, z))).add(&x.scale(&metric(y, z)));
    let rhs = cross(x, &cross(y, z)).neg().add(&y.scale(&metric(x, z))).sub(&z.scale(&metric(x, y)));
    check.record_eq(&lhs, &rhs, inp);
}

/// The positive multiple of `v` with coprime integer coordinates; zero
/// stays zero.
pub fn primitive(v: &ImVector) -> ImVector {
    use num_integer::Integer;
    let den = v.v.iter().fold(num_bigint::BigInt::from(1), |acc, c| acc.lcm(c.denom()));
    let ints: alloc::vec::Vec<num_bigint::BigInt> = v.v.iter().map(|c| (c * Rational::from_integer(den.clone())).to_integer()).collect();
    let g = ints.iter().fold(num_bigint::BigInt::from(0), |acc, c| acc.gcd(c));
    if g.is_zero() {
        return v.clone();
    }
    ImVector::new(core::array::from_fn(|i| Rational::from_integer(&ints[i] / &g)))
}

pub fn random_imvector(rng: &mut TrialRng) -> ImVector {
    ImVector::new(core::array::from_fn(|_| small_rational(rng)))
}

/// A random rational vector with `g(n,n) = +1` (`positive`) or `−1`: the
/// second intersection of a random line through `e1` (resp. `e4`) with the
/// quadric.
pub fn random_unit_vector(rng: &mut TrialRng, positive: bool) -> ImVector {
    let base = ImVector::basis(if positive { 1 } else { 4 });
    loop {
        let d = random_imvector(rng);
        let dd = metric(&d, &d);
        let bd = metric(&base, &d);
        if dd.is_zero() || bd.is_zero() {
            continue;
        }
        // g(b + s d, b + s d) = g(b,b) for s = −2g(b,d)/g(d,d).
        let s = -(int(2) * bd) / dd;
        return base.add(&d.scale(&s));
    }
}

const SALT_PAIRS: u32 = 0x1a_01;
const SALT_TRIPLES: u32 = 0x1a_02;
const SALT_NORMALS: u32 = 0x1a_03;

/// Cross-product axioms, the associator formula and the cross rearrangement, the
/// printed Ω/Ψ expansions, and the 3-fold product axioms.
pub fn imspace_suite(trials: usize, seed: u64) -> Report {
    let mut report = Report::new("imspace", seed, trials);

    let mut omega_basis = Check::new("omega_expansion", "g(ei×ej, ek) matches the printed expansion of Ω on all 35 basis triples");
    for i in 1..=7 {
        for j in i + 1..=7 {
            for k in j + 1..=7 {
                let (a, b, c) = (ImVector::<Rational>::basis(i), ImVector::basis(j), ImVector::basis(k));
                let inp = [witness("i", i), witness("j", j), witness("k", k)];
                omega_basis.record_eq(&triple(&a, &b, &c), &omega_expansion(&a, &b, &c), &inp);
            }
        }
    }
    let mut psi_basis = Check::new("psi_expansion", "g(ei,(ej×ek)×el) matches the printed expansion of Ψ on all 35 basis quadruples");
    let mut psi_product_gap: Option<Vec<Witness>> = None;
    for i in 1..=7 {
        for j in i + 1..=7 {
            for k in j + 1..=7 {
                for l in k + 1..=7 {
                    let v = [i, j, k, l].map(ImVector::<Rational>::basis);
                    let inp = [witness("i", i), witness("j", j), witness("k", k), witness("l", l)];
                    let lhs = four_form_product(&v[0], &v[1], &v[2], &v[3]);
                    let ok = lhs == psi_expansion(&v[0], &v[1], &v[2], &v[3]) && lhs == four_form(&v[0], &v[1], &v[2], &v[3]);
                    psi_basis.record(ok, || inp.to_vec());
                }
            }
        }
    }

    let mut axiom = Check::new("cross_axiom", "g(X×Y,X×Y) = g(X,X)g(Y,Y) − g(X,Y)²");
    let mut skew = Check::new("cross_skew", "X×Y = −Y×X and g(X×Y,X) = g(X×Y,Y) = 0");
    let mut product = Check::new("cross_product_formula", "X×Y = XY + g(X,Y) and xy = (x0y0 − ⟨X,Y⟩) + x0Y + y0X + X×Y");
    let mut double = Check::new("double_cross", "X×(X×Y) = −g(X,X)Y + g(X,Y)X");
    for t in 0..trials {
        let mut rng = trial_rng(seed, SALT_PAIRS, t as u64);
        let (x, y) = (random_imvector(&mut rng), random_imvector(&mut rng));
        let (x0, y0) = (small_rational(&mut rng), small_rational(&mut rng));
        let inp = [witness("X", &x), witness("Y", &y)];
        let xy = cross(&x, &y);
        axiom.record_eq(&metric(&xy, &xy), &(metric(&x, &x) * metric(&y, &y) - metric(&x, &y) * metric(&x, &y)), &inp);
        let ok = xy == cross(&y, &x).neg() && metric(&xy, &x).is_zero() && metric(&xy, &y).is_zero();
        skew.record(ok, || inp.to_vec());
        let full = x.to_octonion().mul(&y.to_octonion()).add(&SplitOctonion::real(metric(&x, &y)));
        let xo = SplitOctonion::real(x0.clone()).add(&x.to_octonion());
        let yo = SplitOctonion::real(y0.clone()).add(&y.to_octonion());
        let expanded = SplitOctonion::real(x0.clone() * y0.clone() - metric(&x, &y))
            .add(&y.scale(&x0).to_octonion())
            .add(&x.scale(&y0).to_octonion())
            .add(&xy.to_octonion());
        product.record(full == xy.to_octonion() && xo.mul(&yo) == expanded, || inp.to_vec());
        double.record_eq(&cross(&x, &xy), &y.scale(&-metric(&x, &x)).add(&x.scale(&metric(&x, &y))), &inp);
    }

    let mut assoc = Check::new("associator_cross", "[X,Y,Z] = 2(X×Y)×Z + 2g(Y,Z)X − 2g(Z,X)Y");
    let mut rearrange = Check::new("cross_rearrangement", "(X×Y)×Z − g(X,Z)Y + g(Y,Z)X = −X×(Y×Z) + g(X,Z)Y − g(X,Y)Z");
    let mut omega_alt = Check::new("omega_alternating", "Ω is alternating and equals its printed expansion");
    let mut psi = Check::new(
        "psi_routes",
        "g(X,(Y×Z)×W) + g(X,Y)g(Z,W) − g(X,Z)g(Y,W) = −g(X,Y×(Z×W)) + g(X,Z)g(Y,W) − g(X,W)g(Y,Z) = printed Ψ expansion, alternating",
    );
    let mut p_orth = Check::new("triple_cross_orthogonal", "⟨P(x,y,z), x⟩ = ⟨P(x,y,z), y⟩ = ⟨P(x,y,z), z⟩ = 0");
    let mut p_norm = Check::new("triple_cross_norm", "⟨P,P⟩ = ε·det(⟨xi,xj⟩) with the pinned ε");
    let mut p_conj = Check::new("triple_cross_conjugation", "conj(P(x,y,z)) = P₁(z̄,ȳ,x̄)");
    let mut measured_sign: Option<i64> = None;
    for t in 0..trials {
        let mut rng = trial_rng(seed, SALT_TRIPLES, t as u64);
        let (x, y, z, w) = (random_imvector(&mut rng), random_imvector(&mut rng), random_imvector(&mut rng), random_imvector(&mut rng));
        let inp = [witness("X", &x), witness("Y", &y), witness("Z", &z)];
        assoc.record_eq(&associator(&x.to_octonion(), &y.to_octonion(), &z.to_octonion()), &assoc_via_cross(&x, &y, &z), &inp);
        rearrangement_check(&mut rearrange, &x, &y, &z, &inp);
        let o = triple(&x, &y, &z);
        let ok = o == omega_expansion(&x, &y, &z)
            && o == metric(&x, &cross(&y, &z))
            && o == -triple(&y, &x, &z)
            && o == -triple(&x, &z, &y)
            && o == triple(&y, &z, &x);
        omega_alt.record(ok, || inp.to_vec());
        let p = four_form(&x, &y, &z, &w);
        let ok = p == four_form_alt(&x, &y, &z, &w)
            && p == psi_expansion(&x, &y, &z, &w)
            && p == -four_form(&y, &x, &z, &w)
            && p == -four_form(&x, &y, &w, &z)
            && p == -four_form(&w, &y, &z, &x);
        if psi_product_gap.is_none() && four_form_product(&x, &y, &z, &w) != p {
            psi_product_gap = Some(alloc::vec![
                witness("X", &x),
                witness("Y", &y),
                witness("Z", &z),
                witness("W", &w),
                witness("g(X,(Y×Z)×W)", four_form_product(&x, &y, &z, &w)),
                witness("Ψ", &p),
            ]);
        }
        psi.record(ok, || {
            let mut v = inp.to_vec();
            v.push(witness("W", &w));
            v
        });

        let (a, b, c) = (
            crate::octonion::random_octonion(&mut rng),
            crate::octonion::random_octonion(&mut rng),
            crate::octonion::random_octonion(&mut rng),
        );
        let oinp = [witness("x", &a), witness("y", &b), witness("z", &c)];
        let pc = triple_cross(&a, &b, &c);
        let ok = pc.inner(&a).is_zero() && pc.inner(&b).is_zero() && pc.inner(&c).is_zero();
        p_orth.record(ok, || oinp.to_vec());
        let gram = gram_det3(&a, &b, &c);
        let pp = pc.inner(&pc);
        if !gram.is_zero() && measured_sign.is_none() {
            measured_sign = Some(if pp == gram { 1 } else if pp == -gram.clone() { -1 } else { 0 });
        }
        p_norm.record_eq(&pp, &(int(TRIPLE_CROSS_NORM_SIGN) * gram), &oinp);
        p_conj.record_eq(&pc.conj(), &triple_cross_first(&c.conj(), &b.conj(), &a.conj()), &oinp);
    }

    let mut normals = Check::new("n_identities", "unit and anti-unit normal identities and the cross rearrangement at n");
    for t in 0..trials {
        let mut rng = trial_rng(seed, SALT_NORMALS, t as u64);
        let n = random_unit_vector(&mut rng, t % 2 == 0);
        let y = random_imvector(&mut rng);
        let z = random_imvector(&mut rng);
        // Project Y, Z onto n^⊥ half the time so the perpendicular bullet runs.
        let (y, z) = if t % 4 < 2 { (project_perp(&n, &y), project_perp(&n, &z)) } else { (y, z) };
        let sub = n_identities(&n, &y, &z).expect("sampled n is unit or anti-unit");
        let failed: Vec<_> = sub.failures().cloned().collect();
        normals.record(failed.is_empty(), || {
            let mut v = alloc::vec![witness("n", &n), witness("Y", &y), witness("Z", &z)];
            for f in failed {
                v.push(witness("failed", f.id));
            }
            v
        });
    }

    for c in [omega_basis, psi_basis, axiom, skew, product, double, assoc, rearrange, omega_alt, psi, p_orth, p_norm, p_conj, normals] {
        report.push(c);
    }
    report.note(
        "psi_bare_product",
        "g(X,(Y×Z)×W) equals Ψ on orthogonal arguments only; first generic input where the bare product differs",
        psi_product_gap.unwrap_or_default(),
    );
    report.note(
        "triple_cross_sign",
        "measured sign ε relating ⟨P,P⟩ to det(⟨xi,xj⟩) for P(x,y,z) = −(xȳ)z + ⟨x,y⟩z + ⟨y,z⟩x − ⟨z,x⟩y",
        alloc::vec![witness("measured", measured_sign.map_or(alloc::string::String::from("none"), |s| alloc::format!("{s}"))), witness("pinned", TRIPLE_CROSS_NORM_SIGN)],
    );
    report
}

/// `Y − g(Y,n)/g(n,n)·n`.
pub fn project_perp(n: &ImVector, y: &ImVector) -> ImVector {
    y.sub(&n.scale(&(metric(y, n) / metric(n, n))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    fn e(i: usize) -> ImVector {
        ImVector::basis(i)
    }

    #[test]
    fn metric_examples() {
        assert_eq!(metric(&e(1), &e(1)), int(1));
        assert_eq!(metric(&e(7), &e(7)), int(-1));
        assert_eq!(metric(&e(1), &e(4)), int(0));
        let x = ImVector::new(core::array::from_fn(|i| rat(i as i64 - 2, 3)));
        let y = ImVector::new(core::array::from_fn(|i| rat(5 - i as i64, 2)));
        assert_eq!(metric(&x, &y), x.to_octonion().inner(&y.to_octonion()));
    }

    #[test]
    fn cross_examples() {
        assert_eq!(cross(&e(1), &e(2)), e(3));
        assert_eq!(cross(&e(4), &e(5)), e(1).neg());
        let x = ImVector::new(core::array::from_fn(|i| rat(i as i64 + 1, 2)));
        assert!(cross(&x, &x).is_zero());
    }

    #[test]
    fn triple_examples() {
        assert_eq!(triple(&e(1), &e(2), &e(3)), int(1));
        assert_eq!(triple(&e(1), &e(4), &e(5)), int(-1));
        assert_eq!(triple(&e(1), &e(2), &e(4)), int(0));
    }

    #[test]
    fn four_form_examples() {
        assert_eq!(four_form(&e(4), &e(5), &e(6), &e(7)), int(1));
        assert_eq!(four_form(&e(1), &e(3), &e(5), &e(7)), int(-1));
        assert_eq!(four_form(&e(1), &e(2), &e(3), &e(4)), int(0));
        assert_eq!(psi_expansion(&e(1), &e(2), &e(4), &e(7)), int(1));
    }

    #[test]
    fn assoc_via_cross_examples() {
        assert_eq!(assoc_via_cross(&e(1), &e(2), &e(4)), SplitOctonion::basis(7).scale(&int(2)));
        let x = ImVector::new(core::array::from_fn(|i| rat(3 - i as i64, 4)));
        let y = ImVector::new(core::array::from_fn(|i| rat(i as i64, 5)));
        assert!(assoc_via_cross(&x, &x, &y).is_zero());
        assert!(assoc_via_cross(&e(1), &e(2), &e(3)).is_zero());
    }

    #[test]
    fn n_identity_examples() {
        assert_eq!(cross(&e(1), &cross(&e(1), &e(4))), e(4).neg());
        assert_eq!(cross(&e(4), &cross(&e(4), &e(1))), e(1));
        let lhs = cross(&cross(&e(1), &e(2)), &e(2)).add(&cross(&e(1), &cross(&e(2), &e(2)))).add(&e(1).scale(&metric(&e(2), &e(2))));
        assert!(lhs.is_zero());
        let r = n_identities(&e(1), &e(2), &e(2)).unwrap();
        assert!(r.passed());
        assert!(r.check("perp_cross").is_some());
        let r = n_identities(&e(4), &e(1), &e(5)).unwrap();
        assert!(r.passed());
    }

    #[test]
    fn n_identities_reject_non_unit_normal() {
        let n = e(1).scale(&int(2));
        assert_eq!(n_identities(&n, &e(2), &e(3)), Err(ImError::NotUnit(int(4))));
        let null = e(1).add(&e(4));
        assert!(n_identities(&null, &e(2), &e(3)).is_err());
    }

    #[test]
    fn triple_cross_degenerate_gram_gives_null_output() {
        let x = SplitOctonion::basis(1);
        let z = SplitOctonion::basis(2);
        let p = triple_cross(&x, &x, &z);
        assert_eq!(gram_det3(&x, &x, &z), int(0));
        assert_eq!(p.inner(&p), int(0));
    }

    #[test]
    fn triple_cross_norm_sign_is_pinned() {
        // Brute force both sides on seeded triples; the sign never changes.
        let mut seen = alloc::vec::Vec::new();
        for t in 0..100 {
            let mut rng = trial_rng(11, 99, t);
            let (a, b, c) = (
                crate::octonion::random_octonion(&mut rng),
                crate::octonion::random_octonion(&mut rng),
                crate::octonion::random_octonion(&mut rng),
            );
            let p = triple_cross(&a, &b, &c);
            let g = gram_det3(&a, &b, &c);
            if g.is_zero() {
                continue;
            }
            let pp = p.inner(&p);
            seen.push(if pp == g { 1 } else if pp == -g { -1 } else { 0 });
        }
        assert!(!seen.is_empty());
        assert!(seen.iter().all(|&s| s == TRIPLE_CROSS_NORM_SIGN), "{seen:?}");
    }

    #[test]
    fn suite_passes() {
        let r = imspace_suite(20, 3);
        assert!(r.passed(), "{:#?}", r.failures().collect::<alloc::vec::Vec<_>>());
    }
}
