//! Cayley structures on the open sets `ℝ^{8±} = ℝ₀ × {U : ±N₀(U) > 0}` of
//! the full algebra: `S(y) = n₂·y` with the unit field `n₂(u) = U/‖U‖`,
//! an almost complex structure on `ℝ^{8+}` and an almost para-complex one
//! on `ℝ^{8−}`.
//!
//! With `ε = ⟨n₂,n₂⟩ = ±1` and `‖U‖ = √(ε N₀(U))`:
//!
//! * `ω(y,z) = ⟨S y, z⟩ = y₀⟨n₂,z⟩ − z₀⟨n₂,y⟩ + ⟨n₂×Y, Z⟩`,
//! * `(D_x S)y = ‖U‖⁻¹ (X − ε⟨X,n₂⟩n₂)·y`,
//! * `dω(x,y,z) = ‖U‖⁻¹ (3Ω(X,Y,Z) − ε (n₂*∧ω)(X,Y,Z))`.
//!
//! Exact evaluation needs `|N₀(U)|` to be a rational square; the same code
//! runs in `f64` elsewhere and is checked against central differences.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;
use rand::Rng;

use crate::imspace::{cross, metric, triple, ImVector};
use crate::octonion::SplitOctonion;
use crate::report::{witness, Check, Report};
use crate::sampling::{nonzero_small_rational, small_rational, trial_rng, uniform, TrialRng};
use crate::scalars::{exact_sqrt, int, Field, Rational};
use crate::spheres::{random_point, SphereKind};

/// Central-difference step of the float oracles.
pub const FD_STEP: f64 = 1e-5;
/// Relative tolerance against the float oracles, `|a − b| ≤ tol·max(|b|, 1)`.
pub const FD_TOL: f64 = 1e-6;

const SALT_EXACT: u32 = 0x4e_01;
const SALT_FLOAT: u32 = 0x4e_02;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Region {
    /// `N₀(U) > 0`, carrying `J`.
    Plus,
    /// `N₀(U) < 0`, carrying `P`.
    Minus,
}

impl Region {
    /// `⟨n₂,n₂⟩`.
    pub fn sign(self) -> i64 {
        match self {
            Region::Plus => 1,
            Region::Minus => -1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Region::Plus => "plus",
            Region::Minus => "minus",
        }
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum R8Error {
    #[error("U lies on the null cone N₀(U) = 0")]
    Cone,
    #[error("the sign of N₀(U) does not match the {0} region")]
    WrongRegion(Region),
    #[error("|N₀(U)| is not a rational square; use the float path")]
    Irrational,
}

/// Scalars admitting the square root `‖U‖`: exact on rational squares,
/// always in `f64`.
pub trait RootField: Field + PartialOrd {
    fn root(&self) -> Option<Self>;
}

impl RootField for Rational {
    fn root(&self) -> Option<Self> {
        exact_sqrt(self)
    }
}

impl RootField for f64 {
    fn root(&self) -> Option<Self> {
        (*self >= 0.0).then(|| libm::sqrt(*self))
    }
}

/// `u = u₀ + U` in one of the two regions.
#[derive(Clone, PartialEq, Debug)]
pub struct R8Point<T = Rational> {
    pub u0: T,
    pub im: ImVector<T>,
    pub region: Region,
}

impl<T: RootField> R8Point<T> {
    pub fn new(u0: T, im: ImVector<T>, region: Region) -> Result<Self, R8Error> {
        let q = metric(&im, &im);
        if q.is_zero() {
            return Err(R8Error::Cone);
        }
        if (q > T::zero()) != (region == Region::Plus) {
            return Err(R8Error::WrongRegion(region));
        }
        Ok(Self { u0, im, region })
    }

    fn eps(&self) -> T {
        T::from_int(self.region.sign())
    }

    /// `‖U‖ = √(ε N₀(U))`.
    pub fn radius(&self) -> Result<T, R8Error> {
        let q = metric(&self.im, &self.im) * self.eps();
        if q.is_zero() {
            return Err(R8Error::Cone);
        }
        q.root().ok_or(R8Error::Irrational)
    }

    /// The point moved by `t·x`.
    pub fn shifted(&self, x: &SplitOctonion<T>, t: &T) -> Self {
        let xi = imaginary(x);
        Self { u0: self.u0.clone() + x.c[0].clone() * t.clone(), im: self.im.add(&xi.scale(t)), region: self.region }
    }
}

impl<T: fmt::Display> fmt::Display for R8Point<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {} ({})", self.u0, self.im, self.region)
    }
}

fn imaginary<T: Field>(x: &SplitOctonion<T>) -> ImVector<T> {
    ImVector::from_octonion(x)
}

fn inner8<T: Field>(x: &SplitOctonion<T>, y: &SplitOctonion<T>) -> T {
    x.c[0].clone() * y.c[0].clone() + metric(&imaginary(x), &imaginary(y))
}

/// `n₂(u) = U/‖U‖`.
pub fn n2_field<T: RootField>(u: &R8Point<T>) -> Result<ImVector<T>, R8Error> {
    let r = u.radius()?;
    Ok(u.im.scale(&(T::one() / r)))
}

/// `S(y) = n₂·y`.
pub fn structure8_apply<T: RootField>(u: &R8Point<T>, y: &SplitOctonion<T>) -> Result<SplitOctonion<T>, R8Error> {
    Ok(n2_field(u)?.to_octonion().mul(y))
}

/// `ω(y,z) = y₀⟨n₂,z⟩ − z₀⟨n₂,y⟩ + ⟨n₂×Y, Z⟩`.
pub fn omega8<T: RootField>(u: &R8Point<T>, y: &SplitOctonion<T>, z: &SplitOctonion<T>) -> Result<T, R8Error> {
    let n = n2_field(u)?;
    let (yi, zi) = (imaginary(y), imaginary(z));
    Ok(y.c[0].clone() * metric(&n, &zi) - z.c[0].clone() * metric(&n, &yi) + metric(&cross(&n, &yi), &zi))
}

/// `D_X n₂ = ‖U‖⁻¹ (X − w⟨X,n₂⟩n₂)`; the correct weight is `w = ε`.
fn dn2<T: RootField>(u: &R8Point<T>, x: &SplitOctonion<T>, weight: &T) -> Result<ImVector<T>, R8Error> {
    let r = u.radius()?;
    let n = u.im.scale(&(T::one() / r.clone()));
    let xi = imaginary(x);
    let c = weight.clone() * metric(&xi, &n);
    Ok(xi.sub(&n.scale(&c)).scale(&(T::one() / r)))
}

/// `(D_x S)y = (D_X n₂)·y`; the real part of `x` does not move `n₂`.
pub fn dstructure8<T: RootField>(u: &R8Point<T>, x: &SplitOctonion<T>, y: &SplitOctonion<T>) -> Result<SplitOctonion<T>, R8Error> {
    Ok(dn2(u, x, &u.eps())?.to_octonion().mul(y))
}

fn domega_weighted<T: RootField>(u: &R8Point<T>, x: &SplitOctonion<T>, y: &SplitOctonion<T>, z: &SplitOctonion<T>, weight: &T) -> Result<T, R8Error> {
    let r = u.radius()?;
    let n = u.im.scale(&(T::one() / r.clone()));
    let (xi, yi, zi) = (imaginary(x), imaginary(y), imaginary(z));
    let w = |a: &ImVector<T>, b: &ImVector<T>| metric(&cross(&n, a), b);
    let wedge = metric(&xi, &n) * w(&yi, &zi) + metric(&yi, &n) * w(&zi, &xi) + metric(&zi, &n) * w(&xi, &yi);
    Ok((T::from_int(3) * triple(&xi, &yi, &zi) - weight.clone() * wedge) / r)
}

/// `dω(x,y,z) = ‖U‖⁻¹ (3Ω(X,Y,Z) − ε (n₂*∧ω)(X,Y,Z))`.
pub fn domega8<T: RootField>(u: &R8Point<T>, x: &SplitOctonion<T>, y: &SplitOctonion<T>, z: &SplitOctonion<T>) -> Result<T, R8Error> {
    domega_weighted(u, x, y, z, &u.eps())
}

/// `dω(x,y,z) = ⟨(D_x S)y, z⟩ + ⟨(D_y S)z, x⟩ + ⟨(D_z S)x, y⟩`.
pub fn domega8_expansion<T: RootField>(
    u: &R8Point<T>,
    x: &SplitOctonion<T>,
    y: &SplitOctonion<T>,
    z: &SplitOctonion<T>,
) -> Result<T, R8Error> {
    Ok(inner8(&dstructure8(u, x, y)?, z) + inner8(&dstructure8(u, y, z)?, x) + inner8(&dstructure8(u, z, x)?, y))
}

/// Nijenhuis tensor of `S` on constant fields `x`, `y`:
/// `2((D_{Sx}S)y − (D_{Sy}S)x + S(D_yS)x − S(D_xS)y)`.
pub fn nijenhuis8<T: RootField>(u: &R8Point<T>, x: &SplitOctonion<T>, y: &SplitOctonion<T>) -> Result<SplitOctonion<T>, R8Error> {
    nijenhuis_with(u, x, y, &|p, a, b| dstructure8(p, a, b))
}

/// A directional derivative `(D_x S)y` of the structure.
type Derivative<'a, T> = &'a dyn Fn(&R8Point<T>, &SplitOctonion<T>, &SplitOctonion<T>) -> Result<SplitOctonion<T>, R8Error>;

fn nijenhuis_with<T: RootField>(
    u: &R8Point<T>,
    x: &SplitOctonion<T>,
    y: &SplitOctonion<T>,
    d: Derivative<'_, T>,
) -> Result<SplitOctonion<T>, R8Error> {
    let sx = structure8_apply(u, x)?;
    let sy = structure8_apply(u, y)?;
    let t = d(u, &sx, y)?
        .sub(&d(u, &sy, x)?)
        .add(&structure8_apply(u, &d(u, y, x)?)?)
        .sub(&structure8_apply(u, &d(u, x, y)?)?);
    Ok(t.scale(&T::from_int(2)))
}

type F8 = SplitOctonion<f64>;

/// `((S y)(u + h x) − (S y)(u − h x)) / 2h`.
pub fn fd_dstructure(u: &R8Point<f64>, x: &F8, y: &F8) -> Result<F8, R8Error> {
    let h = FD_STEP;
    let plus = structure8_apply(&u.shifted(x, &h), y)?;
    let minus = structure8_apply(&u.shifted(x, &-h), y)?;
    Ok(plus.sub(&minus).scale(&(0.5 / h)))
}

/// `x·ω(y,z) + y·ω(z,x) + z·ω(x,y)` by central differences.
pub fn fd_domega(u: &R8Point<f64>, x: &F8, y: &F8, z: &F8) -> Result<f64, R8Error> {
    let h = FD_STEP;
    let d = |a: &F8, b: &F8, c: &F8| -> Result<f64, R8Error> {
        Ok((omega8(&u.shifted(a, &h), b, c)? - omega8(&u.shifted(a, &-h), b, c)?) / (2.0 * h))
    };
    Ok(d(x, y, z)? + d(y, z, x)? + d(z, x, y)?)
}

fn rel_err(a: &[f64], b: &[f64]) -> f64 {
    let scale = b.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    a.iter().zip(b).fold(0.0f64, |m, (p, q)| m.max((p - q).abs())) / scale
}

fn float_octonion(rng: &mut TrialRng) -> F8 {
    SplitOctonion::new(core::array::from_fn(|_| uniform(rng, -1.0, 1.0)))
}

/// A float point with `ε N₀(U) ∈ [1/4, 4]` and `|u₀| ≤ 2`.
pub fn random_float_point(region: Region, rng: &mut TrialRng) -> R8Point<f64> {
    loop {
        let im = ImVector::new(core::array::from_fn(|_| uniform(rng, -2.0, 2.0)));
        let q = metric(&im, &im) * region.sign() as f64;
        if (0.25..=4.0).contains(&q) {
            return R8Point::new(uniform(rng, -2.0, 2.0), im, region).expect("sign checked");
        }
    }
}

/// A rational point with rational `‖U‖`: a scaled rational point of the
/// unit pseudosphere of the same sign.
pub fn random_exact_point(region: Region, rng: &mut TrialRng) -> R8Point {
    let kind = match region {
        Region::Plus => SphereKind::S24,
        Region::Minus => SphereKind::S33,
    };
    let unit = random_point(kind, rng).coords;
    let k = loop {
        let k = nonzero_small_rational(rng);
        if k > Rational::zero() {
            break k;
        }
    };
    R8Point::new(small_rational(rng), unit.scale(&k), region).expect("scaled unit point lies in the region")
}

fn random_exact_octonion(rng: &mut TrialRng) -> SplitOctonion {
    SplitOctonion::new(core::array::from_fn(|_| int(rng.gen_range(-5..=5))))
}

fn to_float_point(u: &R8Point) -> R8Point<f64> {
    use crate::scalars::to_f64;
    R8Point { u0: to_f64(&u.u0), im: ImVector::new(core::array::from_fn(|i| to_f64(&u.im.v[i]))), region: u.region }
}

fn fmt_f8(x: &F8) -> alloc::string::String {
    format!("{:?}", x.c)
}

/// Exact identities on rational points of rational radius and float
/// comparisons against central differences; `trials/2` points of each kind
/// per region.
pub fn r8_suite(trials: usize, seed: u64) -> Report {
    let mut report = Report::new("r8", seed, trials);
    let points = trials / 2;
    for region in [Region::Plus, Region::Minus] {
        let salt = if region == Region::Plus { 0 } else { 0x100 };
        let eps = int(region.sign());
        let r = region.name();
        let mut unit = Check::new(format!("n2_unit_{r}"), "⟨n₂,n₂⟩ = ε and n₂n₂ = −ε");
        let mut square = Check::new(
            format!("structure_square_{r}"),
            format!("S² = {}Id exactly", if region == Region::Plus { "−" } else { "+" }),
        );
        let mut omega = Check::new(format!("omega_{r}"), "y₀⟨n₂,z⟩ − z₀⟨n₂,y⟩ + ⟨n₂×Y,Z⟩ = ⟨Sy, z⟩, antisymmetric");
        let mut fixed = Check::new(format!("derivative_kernel_{r}"), "D_{e0}S = 0 and D_{n₂}S = 0");
        let mut routes = Check::new(
            format!("domega_routes_{r}"),
            "‖U‖⁻¹(3Ω − ε n₂*∧ω) equals the cyclic sum of ⟨(D_x S)y, z⟩ exactly",
        );
        let mut nonzero = Check::new(format!("nijenhuis_nonvanishing_{r}"), "N(x,y) ≠ 0 for some x, y ⟂ n₂ at every point");
        for t in 0..points {
            let mut rng = trial_rng(seed, SALT_EXACT + salt, t as u64);
            let u = random_exact_point(region, &mut rng);
            let (y, z, x) = (random_exact_octonion(&mut rng), random_exact_octonion(&mut rng), random_exact_octonion(&mut rng));
            let inp = vec![witness("u", &u), witness("x", &x), witness("y", &y), witness("z", &z)];
            let n = n2_field(&u).expect("rational radius");
            let no = n.to_octonion();
            unit.record(metric(&n, &n) == eps && no.mul(&no) == SplitOctonion::real(-eps.clone()), || inp.clone());

            let sy = structure8_apply(&u, &y).expect("valid");
            let ssy = structure8_apply(&u, &sy).expect("valid");
            square.record_eq(&ssy, &y.scale(&-eps.clone()), &inp);

            let w = omega8(&u, &y, &z).expect("valid");
            omega.record(w == inner8(&sy, &z) && w == -omega8(&u, &z, &y).expect("valid"), || inp.clone());

            let along_real = dstructure8(&u, &SplitOctonion::one(), &y).expect("valid");
            let along_normal = dstructure8(&u, &no, &y).expect("valid");
            fixed.record(along_real.is_zero() && along_normal.is_zero(), || inp.clone());

            let a = domega8(&u, &x, &y, &z).expect("valid");
            let b = domega8_expansion(&u, &x, &y, &z).expect("valid");
            routes.record_eq(&a, &b, &inp);

            let perp = |v: &SplitOctonion| {
                let vi = imaginary(v);
                let c = metric(&vi, &n) * &eps;
                v.sub(&n.scale(&c).to_octonion())
            };
            let basis: Vec<SplitOctonion> = (0..8).map(|k| perp(&SplitOctonion::basis(k))).collect();
            let found = (0..8).any(|i| (i + 1..8).any(|j| !nijenhuis8(&u, &basis[i], &basis[j]).expect("valid").is_zero()));
            nonzero.record(found, || vec![witness("u", &u)]);
        }

        let mut fd_d = Check::new(
            format!("dstructure_fd_{r}"),
            format!("(D_x S)y matches central differences (h = {FD_STEP:e}) within {FD_TOL:e} relative"),
        );
        let mut fd_w = Check::new(format!("domega_fd_{r}"), format!("dω matches the central-difference exterior derivative within {FD_TOL:e} relative"));
        let mut fd_n = Check::new(
            format!("nijenhuis_fd_{r}"),
            format!("N(x,y) from D S matches the same expression with central differences within {FD_TOL:e} relative"),
        );
        let (mut lit_d, mut lit_w) = (0usize, 0usize);
        let one = 1.0f64;
        for t in 0..points {
            let mut rng = trial_rng(seed, SALT_FLOAT + salt, t as u64);
            let u = if t % 5 == 4 {
                // Also exercise rational points through the float path.
                to_float_point(&random_exact_point(region, &mut rng))
            } else {
                random_float_point(region, &mut rng)
            };
            let (x, y, z) = (float_octonion(&mut rng), float_octonion(&mut rng), float_octonion(&mut rng));
            let inp = || vec![witness("u", &u), witness("x", fmt_f8(&x)), witness("y", fmt_f8(&y)), witness("z", fmt_f8(&z))];

            let analytic = dstructure8(&u, &x, &y).expect("valid");
            let numeric = fd_dstructure(&u, &x, &y).expect("valid");
            let e = rel_err(&analytic.c, &numeric.c);
            fd_d.record(e <= FD_TOL, || {
                let mut w = inp();
                w.extend([witness("analytic", fmt_f8(&analytic)), witness("numeric", fmt_f8(&numeric)), witness("rel_err", e)]);
                w
            });
            let literal = dn2(&u, &x, &one).expect("valid").to_octonion().mul(&y);
            if rel_err(&literal.c, &numeric.c) <= FD_TOL {
                lit_d += 1;
            }

            let analytic = domega8(&u, &x, &y, &z).expect("valid");
            let numeric = fd_domega(&u, &x, &y, &z).expect("valid");
            let e = rel_err(&[analytic], &[numeric]);
            fd_w.record(e <= FD_TOL, || {
                let mut w = inp();
                w.extend([witness("analytic", analytic), witness("numeric", numeric), witness("rel_err", e)]);
                w
            });
            let literal = domega_weighted(&u, &x, &y, &z, &one).expect("valid");
            if rel_err(&[literal], &[numeric]) <= FD_TOL {
                lit_w += 1;
            }

            let analytic = nijenhuis8(&u, &x, &y).expect("valid");
            let numeric = nijenhuis_with(&u, &x, &y, &|p, a, b| fd_dstructure(p, a, b)).expect("valid");
            let e = rel_err(&analytic.c, &numeric.c);
            fd_n.record(e <= FD_TOL, || {
                let mut w = inp();
                w.extend([witness("analytic", fmt_f8(&analytic)), witness("numeric", fmt_f8(&numeric)), witness("rel_err", e)]);
                w
            });
        }
        for c in [unit, square, omega, fixed, routes, nonzero, fd_d, fd_w, fd_n] {
            report.push(c);
        }
        report.note(
            format!("unweighted_derivative_{r}"),
            format!("(D_X n₂) = ‖U‖⁻¹(X − ⟨X,n₂⟩n₂) without the factor ε matched central differences at {lit_d} of {points} points"),
            vec![witness("epsilon", region.sign())],
        );
        report.note(
            format!("unweighted_domega_{r}"),
            format!("dω = ‖U‖⁻¹(3Ω − n₂*∧ω) without the factor ε matched central differences at {lit_w} of {points} points"),
            vec![witness("epsilon", region.sign())],
        );
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(k: usize) -> SplitOctonion {
        SplitOctonion::basis(k)
    }

    fn at(im: ImVector, region: Region) -> R8Point {
        R8Point::new(int(0), im, region).unwrap()
    }

    #[test]
    fn n2_examples() {
        assert_eq!(n2_field(&at(ImVector::basis(1), Region::Plus)).unwrap(), ImVector::basis(1));
        let u = at(ImVector::basis(1).scale(&int(3)).add(&ImVector::basis(2).scale(&int(4))), Region::Plus);
        let expected = ImVector::basis(1).scale(&crate::scalars::rat(3, 5)).add(&ImVector::basis(2).scale(&crate::scalars::rat(4, 5)));
        assert_eq!(n2_field(&u).unwrap(), expected);
        assert_eq!(n2_field(&at(ImVector::basis(4), Region::Minus)).unwrap(), ImVector::basis(4));
        let two = ImVector::basis(1).scale(&int(2));
        assert_eq!(n2_field(&at(two, Region::Plus)).unwrap(), ImVector::basis(1));
        let irr = at(ImVector::basis(1).add(&ImVector::basis(2)), Region::Plus);
        assert_eq!(n2_field(&irr), Err(R8Error::Irrational));
    }

    #[test]
    fn region_validation() {
        assert_eq!(R8Point::new(int(0), ImVector::basis(1).add(&ImVector::basis(4)), Region::Plus), Err(R8Error::Cone));
        assert_eq!(R8Point::new(int(0), ImVector::basis(4), Region::Plus), Err(R8Error::WrongRegion(Region::Plus)));
    }

    #[test]
    fn structure_examples() {
        let u = at(ImVector::basis(1), Region::Plus);
        let s1 = structure8_apply(&u, &e(0)).unwrap();
        assert_eq!(s1, e(1));
        assert_eq!(structure8_apply(&u, &s1).unwrap(), e(0).neg());
        assert_eq!(structure8_apply(&u, &e(2)).unwrap(), e(3));
        let v = at(ImVector::basis(4), Region::Minus);
        let s1 = structure8_apply(&v, &e(0)).unwrap();
        assert_eq!(s1, e(4));
        assert_eq!(structure8_apply(&v, &s1).unwrap(), e(0));
    }

    #[test]
    fn omega_examples() {
        let u = at(ImVector::basis(1), Region::Plus);
        assert_eq!(omega8(&u, &e(0), &e(1)).unwrap(), int(1));
        assert_eq!(omega8(&u, &e(2), &e(3)).unwrap(), int(1));
        let y = e(2).add(&e(5)).add(&e(0));
        assert_eq!(omega8(&u, &y, &y).unwrap(), int(0));
    }

    #[test]
    fn derivative_examples() {
        let u = at(ImVector::basis(1), Region::Plus);
        let y = e(0).add(&e(6)).add(&e(3).scale(&int(2)));
        assert_eq!(dstructure8(&u, &e(2), &y).unwrap(), e(2).mul(&y));
        assert!(dstructure8(&u, &e(1), &y).unwrap().is_zero());
        assert!(dstructure8(&u, &e(0), &y).unwrap().is_zero());
    }

    #[test]
    fn domega_examples() {
        let u = at(ImVector::basis(1), Region::Plus);
        assert_eq!(domega8(&u, &e(2), &e(4), &e(6)).unwrap(), int(-3));
        assert_eq!(domega8_expansion(&u, &e(2), &e(4), &e(6)).unwrap(), int(-3));
        assert_eq!(domega8(&u, &e(2), &e(2), &e(6)).unwrap(), int(0));
        let r = |k: i64| SplitOctonion::real(int(k));
        assert_eq!(domega8(&u, &r(1), &r(2), &r(3)).unwrap(), int(0));
        assert_eq!(domega8_expansion(&u, &r(1), &r(2), &r(3)).unwrap(), int(0));
    }

    #[test]
    fn suite_passes() {
        let r = r8_suite(20, 4);
        assert!(r.passed(), "{:#?}", r.failures().collect::<Vec<_>>());
    }
}
