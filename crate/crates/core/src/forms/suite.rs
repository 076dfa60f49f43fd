use alloc::vec::Vec;

use rand::Rng;

use super::frame::masks_of_degree;
use super::{form_metric, hodge_const, ConstForm, PolyForm, PolyVectorField, TangentFrame};
use crate::imspace::{random_unit_vector, ImVector};
use crate::report::{witness, Check, Report};
use crate::sampling::{nonzero_small_rational, small_rational, trial_rng, TrialRng};
use crate::scalars::{int, Poly7};

const SALT_CALCULUS: u32 = 0x2b_01;
const SALT_HODGE: u32 = 0x2b_02;
const SALT_SPHERE: u32 = 0x2b_03;

/// A polynomial of total degree at most two with up to three terms.
pub fn random_poly(rng: &mut TrialRng) -> Poly7 {
    let mut p = Poly7::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let mut e = [0u8; 7];
        for _ in 0..rng.gen_range(0..=2) {
            e[rng.gen_range(0..7)] += 1;
        }
        p = p + Poly7::monomial(e, small_rational(rng));
    }
    p
}

pub fn random_form(rng: &mut TrialRng, degree: usize) -> PolyForm {
    let masks: Vec<u8> = masks_of_degree(7, degree).collect();
    let mut out = PolyForm::zero(degree);
    for _ in 0..rng.gen_range(1..=4) {
        let m = masks[rng.gen_range(0..masks.len())];
        let idx: Vec<u8> = super::mask_indices(m).collect();
        out = out.add(&PolyForm::monomial(&idx, random_poly(rng)));
    }
    out
}

pub fn random_field(rng: &mut TrialRng) -> PolyVectorField {
    PolyVectorField { components: core::array::from_fn(|_| random_poly(rng)) }
}

pub fn random_const_form(rng: &mut TrialRng, dim: usize, degree: usize) -> ConstForm {
    ConstForm::from_coeffs(dim, degree, masks_of_degree(dim, degree).map(|m| (m, small_rational(rng))).collect::<Vec<_>>())
}

/// A random rational frame of `T_x`: the coordinate frame mixed by a random
/// invertible integer-triangular matrix.
pub fn random_frame(rng: &mut TrialRng, x: &ImVector) -> TangentFrame {
    let std = TangentFrame::standard(x.clone()).expect("x lies on a unit pseudosphere");
    let b = std.basis();
    let mixed: [ImVector; 6] = core::array::from_fn(|i| {
        let mut v = b[i].scale(&nonzero_small_rational(rng));
        for j in 0..i {
            v = v.add(&b[j].scale(&small_rational(rng)));
        }
        v
    });
    TangentFrame::new(x.clone(), mixed).expect("triangular mix of a frame is a frame")
}

/// Exterior-calculus identities on ℝ⁷, the ambient Hodge star against the
/// printed Ω and Ψ, and the two constructions of the tangent-hyperplane
/// Hodge star on both pseudospheres.
pub fn forms_suite(trials: usize, seed: u64) -> Report {
    let mut report = Report::new("forms", seed, trials);
    let n = PolyVectorField::position();

    let mut star_omega = Check::new("star_omega", "∗Ω equals the printed expansion of Ψ");
    star_omega.record_eq(&PolyForm::omega().hodge(), &PolyForm::psi(), &[]);
    let mut star_psi = Check::new("star_psi", "∗Ψ equals the printed expansion of Ω");
    star_psi.record_eq(&PolyForm::psi().hodge(), &PolyForm::omega(), &[]);
    let mut constants = Check::new("closed_constants", "dΩ = 0, dΨ = 0, d(ι_nΩ) = 3Ω, ι_n(Ω∧Ω) = 0");
    let omega = PolyForm::omega();
    let psi = PolyForm::psi();
    let ok = omega.exterior_d().unwrap().is_zero()
        && psi.exterior_d().unwrap().is_zero()
        && omega.interior(&n).unwrap().exterior_d().unwrap() == omega.scale(&int(3))
        && omega.wedge(&omega).unwrap().interior(&n).unwrap().is_zero();
    constants.record(ok, Vec::new);
    let mut lie_n = Check::new("lie_position", "L_nΩ = 3Ω and L_nΨ = 4Ψ for n(x) = x, by both Lie derivative formulas");
    for (form, k) in [(&omega, 3), (&psi, 4)] {
        let target = form.scale(&int(k));
        let ok = form.lie_derivative(&n) == target && form.lie_derivative_direct(&n) == target;
        lie_n.record(ok, || alloc::vec![witness("form", form), witness("L_n", form.lie_derivative(&n))]);
    }

    let mut d_squared = Check::new("d_squared", "d(dα) = 0");
    let mut leibniz = Check::new("leibniz", "d(α∧β) = dα∧β + (−1)^a α∧dβ");
    let mut graded = Check::new("graded_commutative", "α∧β = (−1)^{ab} β∧α");
    let mut interior = Check::new("interior_antiderivation", "ι_Vι_Vα = 0 and ι_V(α∧β) = ι_Vα∧β + (−1)^a α∧ι_Vβ");
    let mut cartan = Check::new("cartan", "dι_Vα + ι_V dα equals the coordinate Lie derivative");
    for t in 0..trials {
        let mut rng = trial_rng(seed, SALT_CALCULUS, t as u64);
        let a = rng.gen_range(0..=5);
        let b = rng.gen_range(0..=(6 - a));
        let alpha = random_form(&mut rng, a);
        let beta = random_form(&mut rng, b);
        let v = random_field(&mut rng);
        let inp = [witness("alpha", &alpha), witness("beta", &beta)];

        let dd = alpha.exterior_d().unwrap().exterior_d();
        d_squared.record(matches!(&dd, Ok(f) if f.is_zero()) || a == 6, || inp.to_vec());

        let ab = alpha.wedge(&beta).unwrap();
        let lhs = ab.exterior_d().unwrap();
        let sign = if a % 2 == 0 { int(1) } else { int(-1) };
        let rhs = alpha.exterior_d().unwrap().wedge(&beta).unwrap().add(&alpha.wedge(&beta.exterior_d().unwrap()).unwrap().scale(&sign));
        leibniz.record_eq(&lhs, &rhs, &inp);

        let swap = if (a * b) % 2 == 0 { int(1) } else { int(-1) };
        graded.record_eq(&ab, &beta.wedge(&alpha).unwrap().scale(&swap), &inp);

        if a + b >= 1 {
            let twice = ab.interior(&v).and_then(|f| if f.degree() == 0 { Ok(PolyForm::zero(0)) } else { f.interior(&v) });
            let ia = if a == 0 { PolyForm::zero(0) } else { alpha.interior(&v).unwrap() };
            let ib = if b == 0 { PolyForm::zero(0) } else { beta.interior(&v).unwrap() };
            let mut expected = PolyForm::zero(a + b - 1);
            if a > 0 {
                expected = expected.add(&ia.wedge(&beta).unwrap());
            }
            if b > 0 {
                expected = expected.add(&alpha.wedge(&ib).unwrap().scale(&sign));
            }
            let ok = matches!(&twice, Ok(f) if f.is_zero()) && ab.interior(&v).unwrap() == expected;
            interior.record(ok, || inp.to_vec());
        }

        let g = rng.gen_range(0..=7);
        let gamma = random_form(&mut rng, g);
        cartan.record_eq(&gamma.lie_derivative(&v), &gamma.lie_derivative_direct(&v), &[witness("alpha", &gamma)]);
    }

    let mut defining = Check::new("hodge_defining", "β∧∗α = g(β,α)μ on ℝ^{3,4}");
    let mut involution = Check::new("hodge_involution", "∗∗α = α on ℝ^{3,4}");
    let mu = ConstForm::basis(7, &[1, 2, 3, 4, 5, 6, 7]);
    for t in 0..trials {
        let mut rng = trial_rng(seed, SALT_HODGE, t as u64);
        let k = t % 8;
        let alpha = random_const_form(&mut rng, 7, k);
        let beta = random_const_form(&mut rng, 7, k);
        let inp = [witness("alpha", &alpha), witness("beta", &beta)];
        defining.record_eq(&beta.wedge(&hodge_const(&alpha)).unwrap(), &mu.scale(&form_metric(&beta, &alpha)), &inp);
        involution.record_eq(&hodge_const(&hodge_const(&alpha)), &alpha, &inp);
    }

    let mut sphere_checks = Vec::new();
    for (positive, name) in [(true, "s24"), (false, "s33")] {
        let mut routes = Check::new(
            alloc::format!("hodge_sphere_routes_{name}"),
            "tangent Hodge star from the Gram matrix equals g(n,n)(−1)^k ι_n(∗θ) for the tangential lift θ",
        );
        let mut defining_s = Check::new(alloc::format!("hodge_sphere_defining_{name}"), "β∧∗_Sα = g_S(β,α)μ_S");
        let mut double = Check::new(
            alloc::format!("hodge_sphere_double_{name}"),
            "∗_S∗_S α = (−1)^k g(n,n) α (sign of the induced signature)",
        );
        let mut recompose = Check::new(alloc::format!("restrict_recompose_{name}"), "θ|_S + n*∧θ̃ reproduces θ at the point");
        for t in 0..trials {
            let mut rng = trial_rng(seed, SALT_SPHERE + u32::from(positive), t as u64);
            let x = random_unit_vector(&mut rng, positive);
            let frame = random_frame(&mut rng, &x);
            let eps = int(i64::from(frame.normal_sign()));
            let mut ok_routes = true;
            let mut ok_def = true;
            let mut ok_double = true;
            let mut bad: Option<ConstForm> = None;
            for k in 0..=6 {
                let alpha = random_const_form(&mut rng, 6, k);
                let beta = random_const_form(&mut rng, 6, k);
                let star = frame.hodge(&alpha);
                let r = star == frame.hodge_via_ambient(&alpha);
                let d = beta.wedge(&star).unwrap() == frame.volume_form().scale(&frame.form_metric(&beta, &alpha));
                let sign = if k % 2 == 0 { eps.clone() } else { -eps.clone() };
                let s = frame.hodge(&star) == alpha.scale(&sign);
                if !(r && d && s) && bad.is_none() {
                    bad = Some(alpha.clone());
                }
                ok_routes &= r;
                ok_def &= d;
                ok_double &= s;
            }
            let inp = || {
                let mut w = alloc::vec![witness("x", &x)];
                for (i, b) in frame.basis().iter().enumerate() {
                    w.push(witness(&alloc::format!("b{}", i + 1), b));
                }
                if let Some(a) = &bad {
                    w.push(witness("alpha", a));
                }
                w
            };
            routes.record(ok_routes, inp);
            defining_s.record(ok_def, inp);
            double.record(ok_double, inp);

            let k = rng.gen_range(0..=7);
            let theta = random_form(&mut rng, k);
            let r = frame.restrict(&theta);
            recompose.record_eq(&frame.recompose(&r), &theta.eval(&x.v), &[witness("x", &x), witness("theta", &theta)]);
        }
        sphere_checks.extend([routes, defining_s, double, recompose]);
    }

    for c in [star_omega, star_psi, constants, lie_n, d_squared, leibniz, graded, interior, cartan, defining, involution] {
        report.push(c);
    }
    for c in sphere_checks {
        report.push(c);
    }
    report
}
