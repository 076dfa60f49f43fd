//! Stereographic identifications `S^{2,4} ≅ S² × D⁴` and `S^{3,3} ≅ D³ × S³`.
//!
//! A point splits as `(x₁,x₂,x₃ | x₄,…,x₇)`. The factor on which the
//! Euclidean norm is normalized is a round sphere; the other factor lands
//! in the open unit ball. The maps are exact over ℚ whenever the relevant
//! radicand is a rational square and run in `f64` otherwise.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand::Rng;

use super::{random_point, random_tangent, SphereKind, SpherePoint};
use crate::imspace::ImVector;
use crate::report::{witness, Check, Report};
use crate::sampling::{trial_rng, uniform, TrialRng};
use crate::scalars::{exact_sqrt, int, rat, to_f64, Rational};

pub type FloatPoint = [f64; 7];

/// Round-trip tolerance of the float path.
pub const ROUND_TRIP_TOL: f64 = 1e-12;
/// Tolerance for identities of the pulled-back product structure.
pub const STRUCTURE_TOL: f64 = 1e-9;

const SALT_EXACT: u32 = 0x3d_01;
const SALT_FLOAT: u32 = 0x3d_02;
const SALT_PULLBACK: u32 = 0x3d_03;

/// Product coordinates: `first` holds the images of `x₁..x₃`, `second`
/// those of `x₄..x₇`.
#[derive(Clone, PartialEq, Debug)]
pub struct StereoPoint<T> {
    pub first: [T; 3],
    pub second: [T; 4],
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum StereoError {
    #[error("ball coordinate has norm² {0}, expected < 1")]
    BallNorm(f64),
    #[error("sphere factor has norm² {0}, expected 1")]
    FactorNorm(f64),
    #[error("the radius is irrational at this point; use the float path")]
    Irrational,
}

/// Whether the first three coordinates form the round-sphere factor.
fn factor_first(kind: SphereKind) -> bool {
    kind == SphereKind::S24
}

fn radicand<T: Clone + core::ops::Mul<Output = T> + core::ops::Add<Output = T>>(x: &[T], kind: SphereKind) -> T {
    let part = if factor_first(kind) { &x[..3] } else { &x[3..] };
    part.iter().skip(1).fold(part[0].clone() * part[0].clone(), |acc, v| acc + v.clone() * v.clone())
}

fn split<T: Clone>(x: &[T]) -> StereoPoint<T> {
    StereoPoint { first: core::array::from_fn(|i| x[i].clone()), second: core::array::from_fn(|i| x[i + 3].clone()) }
}

impl<T: Clone> StereoPoint<T> {
    fn joined(&self) -> Vec<T> {
        self.first.iter().chain(self.second.iter()).cloned().collect()
    }

    /// `(sphere factor, ball factor)` slices.
    fn parts(&self, kind: SphereKind) -> (&[T], &[T]) {
        if factor_first(kind) {
            (&self.first, &self.second)
        } else {
            (&self.second, &self.first)
        }
    }
}

/// Exact projection; `None` when the radius is irrational.
pub fn stereographic_exact(x: &SpherePoint) -> Option<StereoPoint<Rational>> {
    let r = exact_sqrt(&radicand(&x.coords.v, x.kind))?;
    let y: Vec<Rational> = x.coords.v.iter().map(|c| c / &r).collect();
    Some(split(&y))
}

/// Float projection of a point of the given sphere.
pub fn stereographic(x: &FloatPoint, kind: SphereKind) -> StereoPoint<f64> {
    let r = libm::sqrt(radicand(x, kind));
    let y: Vec<f64> = x.iter().map(|c| c / r).collect();
    split(&y)
}

/// Exact inverse: `x = y / √(1 − |ball|²)`.
pub fn stereographic_inverse_exact(p: &StereoPoint<Rational>, kind: SphereKind) -> Result<SpherePoint, StereoError> {
    let (factor, ball) = p.parts(kind);
    let fnorm: Rational = factor.iter().map(|v| v * v).sum();
    if !fnorm.is_one() {
        return Err(StereoError::FactorNorm(to_f64(&fnorm)));
    }
    let bnorm: Rational = ball.iter().map(|v| v * v).sum();
    if bnorm >= Rational::one() {
        return Err(StereoError::BallNorm(to_f64(&bnorm)));
    }
    let s = exact_sqrt(&(Rational::one() - bnorm)).ok_or(StereoError::Irrational)?;
    let v: Vec<Rational> = p.joined().iter().map(|c| c / &s).collect();
    let coords = ImVector::new(core::array::from_fn(|i| v[i].clone()));
    Ok(SpherePoint::new(kind, coords).expect("inverse projection lands on the sphere"))
}

/// Float inverse. The factor is only checked loosely, since float inputs
/// are rarely exactly unit.
pub fn stereographic_inverse(p: &StereoPoint<f64>, kind: SphereKind) -> Result<FloatPoint, StereoError> {
    let (factor, ball) = p.parts(kind);
    let fnorm: f64 = factor.iter().map(|v| v * v).sum();
    if (fnorm - 1.0).abs() > 1e-9 {
        return Err(StereoError::FactorNorm(fnorm));
    }
    let bnorm: f64 = ball.iter().map(|v| v * v).sum();
    if bnorm >= 1.0 {
        return Err(StereoError::BallNorm(bnorm));
    }
    let rho = 1.0 / libm::sqrt(1.0 - bnorm);
    let v = p.joined();
    Ok(core::array::from_fn(|i| rho * v[i]))
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Sphere-factor and ball-factor index ranges of a point of ℝ⁷.
fn ranges(kind: SphereKind) -> (core::ops::Range<usize>, core::ops::Range<usize>) {
    if factor_first(kind) {
        (0..3, 3..7)
    } else {
        (3..7, 0..3)
    }
}

/// Differential of the projection at `x`:
/// `dy = Y/r − x·⟨x_f, Y_f⟩/r³` with `r = |x_f|`.
fn projection_differential(x: &FloatPoint, v: &FloatPoint, kind: SphereKind) -> FloatPoint {
    let (f, _) = ranges(kind);
    let r = libm::sqrt(dot(&x[f.clone()], &x[f.clone()]));
    let c = dot(&x[f.clone()], &v[f]) / (r * r * r);
    core::array::from_fn(|i| v[i] / r - x[i] * c)
}

/// Differential of the inverse at `y`: `dx = ρW + ρ³⟨y_b, W_b⟩ y`.
fn inverse_differential(y: &FloatPoint, w: &FloatPoint, kind: SphereKind) -> FloatPoint {
    let (_, b) = ranges(kind);
    let rho = 1.0 / libm::sqrt(1.0 - dot(&y[b.clone()], &y[b.clone()]));
    let c = rho * rho * rho * dot(&y[b.clone()], &w[b]);
    core::array::from_fn(|i| rho * w[i] + c * y[i])
}

/// The standard product structure at `y`. On `S² × D⁴` it is the rotation
/// `W ↦ y_f × W` on the sphere factor and `(a,b,c,d) ↦ (−b,a,−d,c)` on the
/// ball; on `D³ × S³` it is `+Id` on the ball and `−Id` on the sphere.
fn product_structure(y: &FloatPoint, w: &FloatPoint, kind: SphereKind) -> FloatPoint {
    match kind {
        SphereKind::S24 => [
            y[1] * w[2] - y[2] * w[1],
            y[2] * w[0] - y[0] * w[2],
            y[0] * w[1] - y[1] * w[0],
            -w[4],
            w[3],
            -w[6],
            w[5],
        ],
        SphereKind::S33 => [w[0], w[1], w[2], -w[3], -w[4], -w[5], -w[6]],
    }
}

/// The product structure transported to the tangent space of the sphere at
/// `x` along the stereographic identification.
pub fn product_structure_pullback(x: &FloatPoint, v: &FloatPoint, kind: SphereKind) -> FloatPoint {
    let y: FloatPoint = {
        let p = stereographic(x, kind);
        let j = p.joined();
        core::array::from_fn(|i| j[i])
    };
    let w = projection_differential(x, v, kind);
    let jw = product_structure(&y, &w, kind);
    inverse_differential(&y, &jw, kind)
}

pub fn to_float(x: &ImVector) -> FloatPoint {
    core::array::from_fn(|i| to_f64(&x.v[i]))
}

fn max_abs(x: &[f64]) -> f64 {
    x.iter().fold(0.0f64, |m, v| m.max(v.abs()))
}

fn rel_close(a: &[f64], b: &[f64], tol: f64) -> bool {
    let scale = max_abs(a).max(max_abs(b)).max(1.0);
    a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol * scale)
}

fn float_metric(a: &FloatPoint, b: &FloatPoint) -> f64 {
    (0..7).map(|i| if i < 3 { a[i] * b[i] } else { -a[i] * b[i] }).sum()
}

/// A rational point of the unit sphere in ℝᵏ⁺¹ by inverse projection of a
/// rational point of ℝᵏ.
fn rational_unit<const K: usize>(rng: &mut TrialRng) -> Vec<Rational> {
    let t: Vec<Rational> = (0..K - 1).map(|_| rat(rng.gen_range(-6..=6), rng.gen_range(1..=3))).collect();
    let q: Rational = t.iter().map(|v| v * v).sum();
    let d = &q + Rational::one();
    let mut out: Vec<Rational> = t.iter().map(|v| int(2) * v / &d).collect();
    out.push((q - Rational::one()) / d);
    out
}

/// A rational point on the sphere whose radius is rational: a rational
/// unit factor, and a ball point of radius `2m/(1+m²)`, for which
/// `1 − |ball|²` is the square `((1−m²)/(1+m²))²`.
pub fn square_radicand_point(kind: SphereKind, rng: &mut TrialRng) -> SpherePoint {
    let q = rng.gen_range(2..=5);
    let m = rat(rng.gen_range(-(q - 1)..=q - 1), q);
    let radius = int(2) * &m / (Rational::one() + &m * &m);
    let (factor, dir) = if factor_first(kind) {
        (rational_unit::<3>(rng), rational_unit::<4>(rng))
    } else {
        (rational_unit::<4>(rng), rational_unit::<3>(rng))
    };
    let ball: Vec<Rational> = dir.iter().map(|v| v * &radius).collect();
    let joined: Vec<Rational> = if factor_first(kind) {
        factor.into_iter().chain(ball).collect()
    } else {
        ball.into_iter().chain(factor).collect()
    };
    let p = split(&joined);
    stereographic_inverse_exact(&p, kind).expect("constructed with a square radicand")
}

fn random_float_product(kind: SphereKind, rng: &mut TrialRng) -> StereoPoint<f64> {
    let unit = |rng: &mut TrialRng, k: usize| loop {
        let v: Vec<f64> = (0..k).map(|_| uniform(rng, -1.0, 1.0)).collect();
        let n = libm::sqrt(dot(&v, &v));
        if n > 0.1 {
            return v.into_iter().map(|c| c / n).collect::<Vec<f64>>();
        }
    };
    let (kf, kb) = if factor_first(kind) { (3, 4) } else { (4, 3) };
    let factor = unit(rng, kf);
    let dir = unit(rng, kb);
    let radius = uniform(rng, 0.0, 0.95);
    let ball: Vec<f64> = dir.into_iter().map(|c| c * radius).collect();
    let joined: Vec<f64> = if factor_first(kind) {
        factor.into_iter().chain(ball).collect()
    } else {
        ball.into_iter().chain(factor).collect()
    };
    split(&joined)
}

/// Exact and float round trips and the pulled-back product structures.
///
/// Sizes scale with `trials`: `trials/5` exact points and `trials/2`
/// pullback points per sphere, and `2·trials` float round trips in total.
pub fn stereo_suite(trials: usize, seed: u64) -> Report {
    let mut report = Report::new("stereo", seed, trials);
    let mut examples = Check::new("exact_examples", "(5/4,0,0,3/4,0,0,0) ↔ ((1,0,0),(3/5,0,0,0)) on s24, (3/4,0,0,5/4,0,0,0) ↔ ((3/5,0,0),(1,0,0,0)) on s33, e1 ↔ ((1,0,0),0)");
    for (ok, w) in exact_examples() {
        examples.record(ok, || w);
    }
    report.push(examples);

    let mut rejects = Check::new("ball_norm_rejected", "inverse projection rejects ball points of norm ≥ 1");
    let outside = StereoPoint { first: [1.0, 0.0, 0.0], second: [1.0, 0.0, 0.0, 0.0] };
    rejects.record(matches!(stereographic_inverse(&outside, SphereKind::S24), Err(StereoError::BallNorm(_))), Vec::new);
    rejects.record(matches!(stereographic_inverse(&outside, SphereKind::S33), Err(StereoError::BallNorm(_))), Vec::new);
    report.push(rejects);

    for kind in [SphereKind::S24, SphereKind::S33] {
        let salt = if kind == SphereKind::S24 { 0 } else { 0x100 };
        let mut exact = Check::new(
            format!("exact_round_trip_{kind}"),
            "projection then inverse, and inverse then projection, are the identity over ℚ on points of rational radius",
        );
        for t in 0..trials / 5 {
            let mut rng = trial_rng(seed, SALT_EXACT + salt, t as u64);
            let x = square_radicand_point(kind, &mut rng);
            let p = stereographic_exact(&x);
            let back = p.as_ref().map(|p| stereographic_inverse_exact(p, kind));
            let again = match &back {
                Some(Ok(y)) => stereographic_exact(y),
                _ => None,
            };
            let ok = matches!(&back, Some(Ok(y)) if *y == x) && again == p;
            exact.record(ok, || vec![witness("x", &x)]);
        }
        report.push(exact);

        let mut float = Check::new(
            format!("float_round_trip_{kind}"),
            format!("round trips in both directions agree within {ROUND_TRIP_TOL:e} (relative)"),
        );
        for t in 0..trials {
            let mut rng = trial_rng(seed, SALT_FLOAT + salt, t as u64);
            let p = random_float_product(kind, &mut rng);
            let x = stereographic_inverse(&p, kind).expect("ball radius below 1");
            let q = stereographic(&x, kind);
            let on_sphere = (float_metric(&x, &x) - kind.normal_square() as f64).abs() <= ROUND_TRIP_TOL * { let m = max_abs(&x).max(1.0); m * m };
            let rational = random_point(kind, &mut rng);
            let xr = to_float(&rational.coords);
            let xr_back = stereographic_inverse(&stereographic(&xr, kind), kind).expect("sphere point");
            let ok = on_sphere && rel_close(&p.joined(), &q.joined(), ROUND_TRIP_TOL) && rel_close(&xr, &xr_back, ROUND_TRIP_TOL);
            float.record(ok, || {
                vec![witness("product", format!("{:?}", p.joined())), witness("x", format!("{x:?}")), witness("rational_x", &rational)]
            });
        }
        report.push(float);

        let sign = -(kind.normal_square() as f64);
        let mut square = Check::new(
            format!("pullback_square_{kind}"),
            format!(
                "the transported product structure is tangent and squares to {}Id within {STRUCTURE_TOL:e}",
                if kind == SphereKind::S24 { "−" } else { "+" }
            ),
        );
        for t in 0..trials / 2 {
            let mut rng = trial_rng(seed, SALT_PULLBACK + salt, t as u64);
            let x = random_point(kind, &mut rng);
            let y = random_tangent(&x, &mut rng);
            let (xf, yf) = (to_float(&x.coords), to_float(&y));
            let jy = product_structure_pullback(&xf, &yf, kind);
            let jjy = product_structure_pullback(&xf, &jy, kind);
            let expected: FloatPoint = core::array::from_fn(|i| sign * yf[i]);
            let scale = max_abs(&xf).max(1.0) * max_abs(&jy).max(1.0);
            let tangent = float_metric(&jy, &xf).abs() <= STRUCTURE_TOL * scale;
            square.record(tangent && rel_close(&jjy, &expected, STRUCTURE_TOL), || {
                vec![witness("x", &x), witness("Y", &y), witness("JY", format!("{jy:?}")), witness("JJY", format!("{jjy:?}"))]
            });
        }
        report.push(square);
    }

    let mut base = Check::new(
        "pullback_basepoint",
        "at e1 the transported structure rotates e2 to e3 preserving the norm; at e4 it fixes e1",
    );
    let e = |i: usize| -> FloatPoint { core::array::from_fn(|j| if j + 1 == i { 1.0 } else { 0.0 }) };
    let rotated = product_structure_pullback(&e(1), &e(2), SphereKind::S24);
    base.record(rel_close(&rotated, &e(3), STRUCTURE_TOL), || vec![witness("J e2", format!("{rotated:?}"))]);
    let fixed = product_structure_pullback(&e(4), &e(1), SphereKind::S33);
    base.record(rel_close(&fixed, &e(1), STRUCTURE_TOL), || vec![witness("P e1", format!("{fixed:?}"))]);
    report.push(base);
    report
}

fn exact_examples() -> Vec<(bool, Vec<crate::report::Witness>)> {
    let z = Rational::zero;
    let mut out = Vec::new();
    let cases = [
        (SphereKind::S24, [rat(5, 4), z(), z(), rat(3, 4), z(), z(), z()], [int(1), z(), z()], [rat(3, 5), z(), z(), z()]),
        (SphereKind::S33, [rat(3, 4), z(), z(), rat(5, 4), z(), z(), z()], [rat(3, 5), z(), z()], [int(1), z(), z(), z()]),
        (SphereKind::S24, [int(1), z(), z(), z(), z(), z(), z()], [int(1), z(), z()], [z(), z(), z(), z()]),
    ];
    for (kind, x, first, second) in cases {
        let x = SpherePoint::new(kind, ImVector::new(x)).expect("example lies on the sphere");
        let p = StereoPoint { first, second };
        let forward = stereographic_exact(&x);
        let back = stereographic_inverse_exact(&p, kind);
        let ok = forward.as_ref() == Some(&p) && back.as_ref() == Ok(&x);
        out.push((ok, vec![witness("x", &x), witness("forward", format!("{forward:?}"))]));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert!(exact_examples().iter().all(|(ok, _)| *ok));
    }

    #[test]
    fn irrational_radius() {
        let x = SpherePoint::new(
            SphereKind::S24,
            ImVector::new([int(1), int(1), int(0), int(1), int(0), int(0), int(0)]),
        )
        .unwrap();
        assert_eq!(stereographic_exact(&x), None);
        let p = stereographic(&to_float(&x.coords), SphereKind::S24);
        let back = stereographic_inverse(&p, SphereKind::S24).unwrap();
        assert!(rel_close(&back, &to_float(&x.coords), ROUND_TRIP_TOL));
    }

    #[test]
    fn suite_passes() {
        let r = stereo_suite(20, 3);
        assert!(r.passed(), "{:#?}", r.failures().collect::<Vec<_>>());
    }
}
