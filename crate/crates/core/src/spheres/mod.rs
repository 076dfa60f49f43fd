//! The unit pseudospheres `S^{2,4} = {g(x,x) = 1}` and `S^{3,3} = {g(x,x) = −1}`
//! in ℝ^{3,4} with the Cayley structure `S_x(Y) = x × Y`: an almost complex
//! structure `J` on S^{2,4} and an almost para-complex structure `P` on
//! S^{3,3}.
//!
//! Both spheres are handled by one code path. The sign `ε = g(n,n)` of the
//! unit normal `n(x) = x` absorbs every difference between them.

mod stereo;
mod suite;

use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};
use rand::Rng;

use crate::forms::{ConstForm, FormError, PolyForm, PolyVectorField, TangentFrame};
use crate::imspace::{cross, metric, primitive, random_imvector, ImVector};
use crate::sampling::TrialRng;
use crate::scalars::{int, Rational};

pub use stereo::{
    square_radicand_point, to_float, ROUND_TRIP_TOL, STRUCTURE_TOL,
    product_structure_pullback, stereographic, stereographic_exact, stereographic_inverse, stereographic_inverse_exact,
    stereo_suite, FloatPoint, StereoError, StereoPoint,
};
pub use suite::{sphere_suite, sphere_suite_at, form_identities_suite};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum SphereKind {
    /// `g(x,x) = +1`, carrying `J`.
    S24,
    /// `g(x,x) = −1`, carrying `P`.
    S33,
}

impl SphereKind {
    /// `g(n,n)` for the unit normal.
    pub fn normal_square(self) -> i64 {
        match self {
            SphereKind::S24 => 1,
            SphereKind::S33 => -1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SphereKind::S24 => "s24",
            SphereKind::S33 => "s33",
        }
    }

    /// Number of minus signs in the induced metric.
    pub fn minus_count(self) -> i64 {
        match self {
            SphereKind::S24 => 4,
            SphereKind::S33 => 3,
        }
    }

    /// The basepoint `e1` or `e4`.
    pub fn basepoint(self) -> SpherePoint {
        let i = match self {
            SphereKind::S24 => 1,
            SphereKind::S33 => 4,
        };
        SpherePoint { kind: self, coords: ImVector::basis(i) }
    }
}

impl fmt::Display for SphereKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SphereError {
    #[error("g(x,x) = {1}, not a point of {0}")]
    NotOnSphere(SphereKind, Rational),
    #[error("vector is not tangent: g(Y,x) = {0}")]
    NotTangent(Rational),
    #[error("the line has no second rational intersection with the quadric; draw another direction")]
    Retry,
    #[error("seed lies on {0}, expected {1}")]
    KindMismatch(SphereKind, SphereKind),
    #[error(transparent)]
    Frame(#[from] FormError),
}

/// A rational point of a unit pseudosphere; the unit normal there is `n = x`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpherePoint {
    pub kind: SphereKind,
    pub coords: ImVector,
}

impl SpherePoint {
    pub fn new(kind: SphereKind, coords: ImVector) -> Result<Self, SphereError> {
        let q = metric(&coords, &coords);
        if q != int(kind.normal_square()) {
            return Err(SphereError::NotOnSphere(kind, q));
        }
        Ok(Self { kind, coords })
    }

    pub fn normal(&self) -> &ImVector {
        &self.coords
    }

    fn eps(&self) -> Rational {
        int(self.kind.normal_square())
    }

    fn require_tangent(&self, y: &ImVector) -> Result<(), SphereError> {
        let d = metric(y, &self.coords);
        if d.is_zero() {
            Ok(())
        } else {
            Err(SphereError::NotTangent(d))
        }
    }
}

impl fmt::Display for SpherePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coords)
    }
}

/// Second intersection of the line `seed + s·direction` with the quadric.
///
/// Solving `g(seed + s d, seed + s d) = g(seed, seed)` gives
/// `s (2g(seed,d) + s g(d,d)) = 0`. The nonzero root is
/// `s = −2g(seed,d)/g(d,d)`; when `g(d,d) = g(seed,d) = 0` the whole line
/// lies on the quadric and `seed + d` is returned.
pub fn sample_point(kind: SphereKind, direction: &ImVector, seed: &SpherePoint) -> Result<SpherePoint, SphereError> {
    if seed.kind != kind {
        return Err(SphereError::KindMismatch(seed.kind, kind));
    }
    let dd = metric(direction, direction);
    let sd = metric(&seed.coords, direction);
    let s = if !dd.is_zero() {
        -(int(2) * sd) / dd
    } else if sd.is_zero() && !direction.is_zero() {
        Rational::one()
    } else {
        return Err(SphereError::Retry);
    };
    if s.is_zero() {
        return Err(SphereError::Retry);
    }
    SpherePoint::new(kind, seed.coords.add(&direction.scale(&s)))
}

/// A random rational point: the second intersection of the line through
/// the basepoint with a random integer direction of entries in `[−3, 3]`.
/// Small directions keep the heights of the points, and so the cost of the
/// exact checks, moderate.
pub fn random_point(kind: SphereKind, rng: &mut TrialRng) -> SpherePoint {
    let base = kind.basepoint();
    loop {
        let d = ImVector::new(core::array::from_fn(|_| int(rng.gen_range(-3..=3))));
        if let Ok(p) = sample_point(kind, &d, &base) {
            return p;
        }
    }
}

/// A random tangent vector at `x`: `Y − g(Y,x)/g(x,x)·x`, rescaled to
/// coprime integer coordinates to keep the exact arithmetic small.
pub fn random_tangent(x: &SpherePoint, rng: &mut TrialRng) -> ImVector {
    let y = random_imvector(rng);
    let c = metric(&y, &x.coords) * x.eps();
    primitive(&y.sub(&x.coords.scale(&c)))
}

pub fn tangent_frame(x: &SpherePoint) -> TangentFrame {
    TangentFrame::standard(x.coords.clone()).expect("points of a unit pseudosphere have a coordinate frame")
}

/// `J_x(Y)` on S^{2,4} or `P_x(Y)` on S^{3,3}: `n(x) × Y`.
pub fn structure_apply(x: &SpherePoint, y: &ImVector) -> Result<ImVector, SphereError> {
    x.require_tangent(y)?;
    Ok(cross(&x.coords, y))
}

/// `ω(X,Y) = g(n×X, Y)`.
pub fn fundamental_form(x: &SpherePoint, a: &ImVector, b: &ImVector) -> Result<Rational, SphereError> {
    x.require_tangent(a)?;
    x.require_tangent(b)?;
    Ok(metric(&cross(&x.coords, a), b))
}

/// `(∇_X S)Y = X×Y − ε ω(X,Y) n`, the Levi-Civita derivative of the
/// structure (`−ω n` for `J`, `+ω n` for `P`).
pub fn nabla_structure(x: &SpherePoint, a: &ImVector, b: &ImVector) -> Result<ImVector, SphereError> {
    let w = fundamental_form(x, a, b)?;
    Ok(cross(a, b).sub(&x.coords.scale(&(x.eps() * w))))
}

/// Both routes to the Nijenhuis tensor.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Nijenhuis {
    /// `2(∇_{SX}(S)Y − ∇_{SY}(S)X + S∇_Y(S)X − S∇_X(S)Y)`.
    pub expansion: ImVector,
    /// `−8 n×(X×Y)`.
    pub closed_form: ImVector,
}

pub fn nijenhuis(x: &SpherePoint, a: &ImVector, b: &ImVector) -> Result<Nijenhuis, SphereError> {
    let sa = structure_apply(x, a)?;
    let sb = structure_apply(x, b)?;
    let n = &x.coords;
    let t1 = nabla_structure(x, &sa, b)?;
    let t2 = nabla_structure(x, &sb, a)?;
    let t3 = cross(n, &nabla_structure(x, b, a)?);
    let t4 = cross(n, &nabla_structure(x, a, b)?);
    let expansion = t1.sub(&t2).add(&t3).sub(&t4).scale(&int(2));
    let closed_form = cross(n, &cross(a, b)).scale(&int(-8));
    Ok(Nijenhuis { expansion, closed_form })
}

/// A vector field near `x` known through its value and first derivative.
struct Jet {
    value: ImVector,
    /// Directional derivative `D_u F(x)` as a linear function of `u`.
    deriv: [ImVector; 7],
}

impl Jet {
    fn derivative(&self, u: &ImVector) -> ImVector {
        (0..7).fold(ImVector::zero(), |acc, i| acc.add(&self.deriv[i].scale(&u.v[i])))
    }
}

/// Extension `X̃(y) = X − ε g(X,y) y`, tangent to the sphere along it.
fn extend(x: &SpherePoint, v: &ImVector) -> Jet {
    let eps = x.eps();
    let p = &x.coords;
    let value = v.sub(&p.scale(&(eps.clone() * metric(v, p))));
    let deriv = core::array::from_fn(|i| {
        let u = ImVector::basis(i + 1);
        // D_u X̃ = −ε (g(X,u) y + g(X,y) u).
        p.scale(&metric(v, &u)).add(&u.scale(&metric(v, p))).scale(&-eps.clone())
    });
    Jet { value, deriv }
}

/// `(SF)(y) = y × F(y)`.
fn apply_structure(x: &SpherePoint, f: &Jet) -> Jet {
    let p = &x.coords;
    let value = cross(p, &f.value);
    let deriv = core::array::from_fn(|i| {
        let u = ImVector::basis(i + 1);
        cross(&u, &f.value).add(&cross(p, &f.deriv[i]))
    });
    Jet { value, deriv }
}

fn bracket(a: &Jet, b: &Jet) -> ImVector {
    b.derivative(&a.value).sub(&a.derivative(&b.value))
}

/// Nijenhuis tensor from Lie brackets of vector fields on ℝ⁷ extending `X`
/// and `Y` tangentially to the sphere:
/// `2([SX,SY] + σ[X,Y] − S[SX,Y] − S[X,SY])` with `S² = σ·Id`.
pub fn nijenhuis_brackets(x: &SpherePoint, a: &ImVector, b: &ImVector) -> Result<ImVector, SphereError> {
    x.require_tangent(a)?;
    x.require_tangent(b)?;
    let sigma = -x.eps();
    let (xa, xb) = (extend(x, a), extend(x, b));
    let (sa, sb) = (apply_structure(x, &xa), apply_structure(x, &xb));
    let n = &x.coords;
    let v = bracket(&sa, &sb)
        .add(&bracket(&xa, &xb).scale(&sigma))
        .sub(&cross(n, &bracket(&sa, &xb)))
        .sub(&cross(n, &bracket(&xa, &sb)));
    Ok(v.scale(&int(2)))
}

/// Global forms of the structure: `ω = ι_nΩ`, `dω`, `ι_nΨ`.
pub struct StructureForms {
    pub omega: PolyForm,
    pub d_omega: PolyForm,
    pub iota_psi: PolyForm,
    pub psi: PolyForm,
}

impl StructureForms {
    pub fn new() -> Self {
        let n = PolyVectorField::position();
        let omega = PolyForm::omega().interior(&n).expect("3-form");
        let d_omega = omega.exterior_d().expect("2-form");
        let psi = PolyForm::psi();
        let iota_psi = psi.interior(&n).expect("4-form");
        Self { omega, d_omega, iota_psi, psi }
    }
}

impl Default for StructureForms {
    fn default() -> Self {
        Self::new()
    }
}

/// Hitchin operator of `ρ = dω|_S`: the vector `K` with
/// `ι_K μ_S = ι_Xρ ∧ ρ` on `T_x`.
pub fn hitchin_k(x: &SpherePoint, a: &ImVector) -> Result<ImVector, SphereError> {
    x.require_tangent(a)?;
    let frame = tangent_frame(x);
    let rho = frame.restrict(&StructureForms::new().d_omega).tangential;
    Ok(hitchin_in_frame(&frame, &rho, a))
}

pub(crate) fn hitchin_in_frame(frame: &TangentFrame, rho: &ConstForm, a: &ImVector) -> ImVector {
    let c = frame.coords(a);
    let beta = rho.interior(&c).expect("3-form").wedge(rho).expect("5-form");
    // ι_K(D b^{1..6}) = D Σ_i (−1)^{i−1} K^i b^{1..6∖i}.
    let d = frame.volume();
    let k: Vec<Rational> = (0..6)
        .map(|i| {
            let v = beta.coeff_or_zero(0x3f & !(1 << i)) / d;
            if i % 2 == 0 {
                v
            } else {
                -v
            }
        })
        .collect();
    frame.vector(&k)
}

/// Values of the Laplacian chain at one point.
#[derive(Clone, Debug)]
pub struct LaplacianChain {
    /// `∗_S dω` on `T_x`.
    pub star_d_omega: ConstForm,
    /// `ι_nΨ|_S` on `T_x`.
    pub iota_psi: ConstForm,
    /// The constant `c` with `∗_S dω = c·ι_nΨ|_S`, if one exists.
    pub ratio: Option<Rational>,
    /// `δdω` on `T_x`.
    pub delta_d_omega: ConstForm,
    /// `∗_S ω` and `Ψ|_S`, whose equality with `dΨ = 0` gives `δω = 0`.
    pub star_omega: ConstForm,
    pub psi_restricted: ConstForm,
    /// `δω` on `T_x`.
    pub delta_omega: ConstForm,
}

/// `(−1)^{kn+n+1+η}` for the codifferential on `k`-forms of a 6-manifold
/// with `η` minus signs.
pub fn codifferential_sign(k: i64, eta: i64) -> Rational {
    let n = 6;
    if (k * n + n + 1 + eta) % 2 == 0 {
        int(1)
    } else {
        int(-1)
    }
}

/// Evaluates `δdω` and `δω` at `x` following `∗_S dω = c·ι_nΨ|_S`,
/// `d(ι_nΨ) = L_nΨ = 4Ψ`, so `δdω = ±c·∗_S(4Ψ)|_S`.
pub fn laplacian_chain(x: &SpherePoint, frame: &TangentFrame, forms: &StructureForms, d_iota_psi: &PolyForm) -> LaplacianChain {
    let eta = x.kind.minus_count();
    let rho = frame.restrict(&forms.d_omega).tangential;
    let star_d_omega = frame.hodge(&rho);
    let iota_psi = frame.restrict(&forms.iota_psi).tangential;
    let ratio = proportionality(&star_d_omega, &iota_psi);
    let c = ratio.clone().unwrap_or_else(Rational::zero);
    // d_S(∗_S dω) is the restriction of d(c ι_nΨ).
    let d_star = frame.restrict(&d_iota_psi.scale(&c)).tangential;
    let delta_d_omega = frame.hodge(&d_star).scale(&codifferential_sign(3, eta));

    let omega = frame.restrict(&forms.omega).tangential;
    let star_omega = frame.hodge(&omega);
    let psi_restricted = frame.restrict(&forms.psi).tangential;
    let d_psi = frame.restrict(&forms.psi.exterior_d().expect("4-form")).tangential;
    let delta_omega = frame.hodge(&d_psi).scale(&codifferential_sign(2, eta));
    LaplacianChain { star_d_omega, iota_psi, ratio, delta_d_omega, star_omega, psi_restricted, delta_omega }
}

/// `c` with `a = c·b`, if `b ≠ 0` and the forms are proportional.
fn proportionality(a: &ConstForm, b: &ConstForm) -> Option<Rational> {
    let (&m, bv) = b.coeffs().next()?;
    let c = a.coeff_or_zero(m) / bv;
    (b.scale(&c) == *a).then_some(c)
}

/// `(δdω)(X,Y)` at `x` through the Laplacian chain.
pub fn laplacian_check(x: &SpherePoint, a: &ImVector, b: &ImVector) -> Result<Rational, SphereError> {
    x.require_tangent(a)?;
    x.require_tangent(b)?;
    let forms = StructureForms::new();
    let d_iota_psi = forms.iota_psi.exterior_d().expect("3-form");
    let frame = tangent_frame(x);
    let chain = laplacian_chain(x, &frame, &forms, &d_iota_psi);
    Ok(chain.delta_d_omega.evaluate(&[frame.coords(a), frame.coords(b)]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    fn e(i: usize) -> ImVector {
        ImVector::basis(i)
    }

    fn s24() -> SpherePoint {
        SphereKind::S24.basepoint()
    }

    fn s33() -> SpherePoint {
        SphereKind::S33.basepoint()
    }

    #[test]
    fn sample_point_examples() {
        assert_eq!(sample_point(SphereKind::S24, &e(4), &s24()), Err(SphereError::Retry));
        assert_eq!(sample_point(SphereKind::S24, &e(2), &s24()), Err(SphereError::Retry));
        let p = sample_point(SphereKind::S33, &e(1).add(&e(5)), &s33()).unwrap();
        assert_eq!(p.coords, e(1).add(&e(4)).add(&e(5)));
        let d = ImVector::new([int(1), int(1), int(0), int(0), int(0), int(0), int(0)]);
        let p = sample_point(SphereKind::S24, &d, &s24()).unwrap();
        assert_eq!(p.coords, e(2).neg());
        assert!(sample_point(SphereKind::S24, &e(2), &s33()).is_err());
    }

    #[test]
    fn frame_examples() {
        let f = tangent_frame(&s24());
        let diag: Vec<_> = (0..6).map(|i| f.gram()[(i, i)].clone()).collect();
        assert_eq!(diag, [1, 1, -1, -1, -1, -1].map(int).to_vec());
        let f = tangent_frame(&s33());
        let diag: Vec<_> = (0..6).map(|i| f.gram()[(i, i)].clone()).collect();
        assert_eq!(diag, [1, 1, 1, -1, -1, -1].map(int).to_vec());
    }

    #[test]
    fn structure_examples() {
        assert_eq!(structure_apply(&s24(), &e(2)).unwrap(), e(3));
        assert_eq!(structure_apply(&s33(), &e(1)).unwrap(), e(5).neg());
        let v = e(1).sub(&e(5));
        assert_eq!(structure_apply(&s33(), &v).unwrap(), v);
        assert!(matches!(structure_apply(&s24(), &e(1)), Err(SphereError::NotTangent(_))));
    }

    #[test]
    fn fundamental_form_examples() {
        assert_eq!(fundamental_form(&s24(), &e(2), &e(3)).unwrap(), int(1));
        assert_eq!(fundamental_form(&s24(), &e(2), &e(2)).unwrap(), int(0));
        assert_eq!(fundamental_form(&s33(), &e(1), &e(5)).unwrap(), int(1));
    }

    #[test]
    fn nabla_examples() {
        assert!(nabla_structure(&s24(), &e(3), &e(3)).unwrap().is_zero());
        assert_eq!(nabla_structure(&s24(), &e(2), &e(4)).unwrap(), e(6));
        assert_eq!(nabla_structure(&s33(), &e(1), &e(2)).unwrap(), e(3));
    }

    #[test]
    fn nijenhuis_examples() {
        let n = nijenhuis(&s24(), &e(2), &e(4)).unwrap();
        assert_eq!(n.closed_form, e(7).scale(&int(8)));
        assert_eq!(n.expansion, n.closed_form);
        assert_eq!(nijenhuis_brackets(&s24(), &e(2), &e(4)).unwrap(), n.closed_form);
        let n = nijenhuis(&s33(), &e(1), &e(2)).unwrap();
        assert_eq!(n.closed_form, e(7).scale(&int(8)));
        assert_eq!(n.expansion, n.closed_form);
        assert_eq!(nijenhuis_brackets(&s33(), &e(1), &e(2)).unwrap(), n.closed_form);
        assert!(nijenhuis(&s24(), &e(5), &e(5)).unwrap().expansion.is_zero());
    }

    #[test]
    fn hitchin_examples() {
        assert_eq!(hitchin_k(&s24(), &e(2)).unwrap(), e(3).scale(&int(18)));
        assert_eq!(hitchin_k(&s33(), &e(1)).unwrap(), e(5).scale(&int(-18)));
    }

    #[test]
    fn laplacian_examples() {
        assert_eq!(laplacian_check(&s24(), &e(2), &e(3)).unwrap(), int(12));
        assert_eq!(laplacian_check(&s33(), &e(1), &e(5)).unwrap(), int(-12));
        assert_eq!(laplacian_check(&s24(), &e(2), &e(4)).unwrap(), int(0));
    }

    #[test]
    fn point_validation() {
        assert!(SpherePoint::new(SphereKind::S24, e(4)).is_err());
        let x = ImVector::new([rat(5, 4), int(0), int(0), rat(3, 4), int(0), int(0), int(0)]);
        assert!(SpherePoint::new(SphereKind::S24, x).is_ok());
    }
}
