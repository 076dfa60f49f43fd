use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::{
    hitchin_in_frame, laplacian_chain, nabla_structure, nijenhuis, nijenhuis_brackets, random_point, random_tangent,
    structure_apply, tangent_frame, SphereKind, SpherePoint, StructureForms,
};
use crate::forms::{ConstForm, PolyForm, TangentFrame};
use crate::imspace::{cross, metric, psi_expansion, random_imvector, triple, ImVector};
use crate::linalg::Matrix;
use crate::report::{witness, Check, Report, Witness};
use crate::sampling::{trial_rng, TrialRng};
use crate::scalars::{int, Rational};

const SALT_POINTS: u32 = 0x3c_01;
const SALT_TANGENTS: u32 = 0x3c_02;
const SALT_SINGLE: u32 = 0x3c_03;

const TRIPLES_PER_POINT: usize = 20;
const NIJENHUIS_PAIRS_PER_POINT: usize = 4;
const LAPLACIAN_PAIRS_PER_POINT: usize = 10;

/// Identities of the fundamental form and its derivative, evaluated on
/// tangent triples. The two signs that differ between the spheres are
/// checked in their `g(n,n)`-weighted form; the unweighted readings are
/// tallied separately and reported as notes.
struct FormIdentities {
    d_omega: Check,
    star_omega: Check,
    psi_relation: Check,
    shift_first: Check,
    shift_pair: Check,
    wedge: Check,
    omega_shift: Check,
    psi_via_omega: Check,
    psi_relation_unweighted: (usize, usize),
    shift_pair_unweighted: (usize, usize),
}

impl FormIdentities {
    fn new(s: &str) -> Self {
        Self {
            d_omega: Check::new("d_omega", "dω = 3Ω|_S: dω(X,Y,Z) = 3Ω(X,Y,Z) on tangent vectors, and d(ι_nΩ) = 3Ω globally"),
            star_omega: Check::new("star_omega", "∗_S ω = Ψ|_S"),
            psi_relation: Check::new(
                "psi_relation",
                format!("dω(X,Y,Z) = 3 g(n,n) ι_nΨ({s}X,Y,Z)"),
            ),
            shift_first: Check::new("shift_first", format!("dω({s}X,Y,Z) = dω(X,{s}Y,Z)")),
            shift_pair: Check::new("shift_pair", format!("dω(X,{s}Y,{s}Z) = −g(n,n) dω(X,Y,Z)")),
            wedge: Check::new("omega_wedge_d_omega", "ω ∧ dω = 0 on T_xS"),
            omega_shift: Check::new("omega_shift", format!("Ω({s}X,Y,Z) = Ω(X,{s}Y,Z)")),
            psi_via_omega: Check::new("psi_via_omega", format!("ι_nΨ(X,Y,Z) = −Ω({s}X,Y,Z)")),
            psi_relation_unweighted: (0, 0),
            shift_pair_unweighted: (0, 0),
        }
    }

    fn run_point(&mut self, x: &SpherePoint, frame: &TangentFrame, forms: &StructureForms, rng: &mut TrialRng, triples: usize) {
        let n = &x.coords;
        let eps = x.eps();
        let at = || vec![witness("x", x)];

        let omega_s = frame.restrict(&forms.omega).tangential;
        let d_omega_s = frame.restrict(&forms.d_omega).tangential;
        let psi_s = frame.restrict(&forms.psi).tangential;
        let star = frame.hodge(&omega_s);
        self.star_omega.record(star == psi_s, || {
            let mut w = at();
            w.extend([witness("lhs", &star), witness("rhs", &psi_s)]);
            w
        });
        let wedge = omega_s.wedge(&d_omega_s).expect("5-form");
        self.wedge.record(wedge.is_zero(), || {
            let mut w = at();
            w.push(witness("omega_wedge_d_omega", &wedge));
            w
        });

        let d_omega_x = forms.d_omega.eval(&n.v);
        let d_omega = |a: &ImVector, b: &ImVector, c: &ImVector| d_omega_x.evaluate(&[a.v.to_vec(), b.v.to_vec(), c.v.to_vec()]);
        let iota_psi = |a: &ImVector, b: &ImVector, c: &ImVector| psi_expansion(n, a, b, c);
        let s = |a: &ImVector| cross(n, a);
        for _ in 0..triples {
            let (a, b, c) = (random_tangent(x, rng), random_tangent(x, rng), random_tangent(x, rng));
            let inp = [witness("x", x), witness("X", &a), witness("Y", &b), witness("Z", &c)];
            let dw = d_omega(&a, &b, &c);

            self.d_omega.record_eq(&dw, &(int(3) * triple(&a, &b, &c)), &inp);

            let psi_term = int(3) * iota_psi(&s(&a), &b, &c);
            self.psi_relation.record_eq(&dw, &(eps.clone() * &psi_term), &inp);
            tally(&mut self.psi_relation_unweighted, dw == psi_term);

            self.shift_first.record_eq(&d_omega(&s(&a), &b, &c), &d_omega(&a, &s(&b), &c), &inp);

            let pair = d_omega(&a, &s(&b), &s(&c));
            self.shift_pair.record_eq(&pair, &(-(eps.clone()) * &dw), &inp);
            tally(&mut self.shift_pair_unweighted, pair == -dw.clone());

            self.omega_shift.record_eq(&triple(&s(&a), &b, &c), &triple(&a, &s(&b), &c), &inp);
            self.psi_via_omega.record_eq(&iota_psi(&a, &b, &c), &-triple(&s(&a), &b, &c), &inp);
        }
    }

    fn finish(self, report: &mut Report, kind: SphereKind) {
        let s = structure_letter(kind);
        let global = StructureForms::new();
        let mut d_omega = self.d_omega;
        d_omega.record(global.d_omega == PolyForm::omega().scale(&int(3)), Vec::new);
        for c in [
            d_omega,
            self.star_omega,
            self.psi_relation,
            self.shift_first,
            self.shift_pair,
            self.wedge,
            self.omega_shift,
            self.psi_via_omega,
        ] {
            report.push(c);
        }
        let (held, total) = self.psi_relation_unweighted;
        report.note(
            "psi_relation_unweighted",
            format!("dω(X,Y,Z) = 3ι_nΨ({s}X,Y,Z) without the g(n,n) factor held on {held} of {total} triples"),
            vec![witness("g(n,n)", kind.normal_square())],
        );
        let (held, total) = self.shift_pair_unweighted;
        report.note(
            "shift_pair_unweighted",
            format!("dω(X,{s}Y,{s}Z) = −dω(X,Y,Z) without the g(n,n) factor held on {held} of {total} triples"),
            vec![witness("g(n,n)", kind.normal_square())],
        );
    }
}

fn tally(t: &mut (usize, usize), ok: bool) {
    t.1 += 1;
    if ok {
        t.0 += 1;
    }
}

fn structure_letter(kind: SphereKind) -> &'static str {
    match kind {
        SphereKind::S24 => "J",
        SphereKind::S33 => "P",
    }
}

/// The fundamental-form identities at a single point on `trials` random
/// tangent triples.
pub fn form_identities_suite(x: &SpherePoint, trials: usize, seed: u64) -> Report {
    let mut report = Report::new(format!("{}_forms", x.kind.name()), seed, trials);
    let forms = StructureForms::new();
    let mut ids = FormIdentities::new(structure_letter(x.kind));
    let mut rng = trial_rng(seed, SALT_SINGLE, 0);
    ids.run_point(x, &tangent_frame(x), &forms, &mut rng, trials);
    ids.finish(&mut report, x.kind);
    report
}

/// The full geometry suite on `trials / 2` random rational points.
pub fn sphere_suite(kind: SphereKind, trials: usize, seed: u64) -> Report {
    let points: Vec<SpherePoint> =
        (0..trials / 2).map(|i| random_point(kind, &mut trial_rng(seed, SALT_POINTS + kind_salt(kind), i as u64))).collect();
    sphere_suite_at(kind, &points, trials, seed)
}

fn kind_salt(kind: SphereKind) -> u32 {
    match kind {
        SphereKind::S24 => 0,
        SphereKind::S33 => 0x100,
    }
}

/// The geometry suite on the given points. Every point receives the
/// pointwise checks; the Laplacian chain runs on the first half of them.
pub fn sphere_suite_at(kind: SphereKind, points: &[SpherePoint], trials: usize, seed: u64) -> Report {
    let mut report = Report::new(kind.name(), seed, trials);
    let s = structure_letter(kind);
    let eps = int(kind.normal_square());
    let sigma = -eps.clone();
    let forms = StructureForms::new();
    let d_iota_psi = forms.iota_psi.exterior_d().expect("3-form");

    let mut on_sphere = Check::new("points_on_sphere", format!("g(x,x) = {} at every sampled point", kind.normal_square()));
    let mut square = Check::new("structure_square", format!("{s}² = {}Id on T_x", if kind == SphereKind::S24 { "−" } else { "+" }));
    let mut tangent = Check::new("structure_tangent", format!("{s}Y is tangent"));
    let mut metric_rule = Check::new("structure_metric", "g(n×X, n×Y) = g(n,n)g(X,Y) − g(X,n)g(Y,n) for all X, Y in ℝ^{3,4}");
    let mut isotropic = Check::new("eigenspaces_isotropic", "the ±1 eigenspaces of P are 3-dimensional and totally isotropic");
    let mut form_def = Check::new("fundamental_form", format!("ω(X,Y) = g({s}X,Y) = g(n, X×Y) = (ι_nΩ)(X,Y), antisymmetric"));
    let mut nabla_skew = Check::new("nabla_skew", format!("g((∇_X{s})Y, Z) = −g(Y, (∇_X{s})Z) and (∇_X{s})Y is tangent"));
    let mut nabla_diag = Check::new("nabla_diagonal", format!("(∇_X{s})X = 0"));
    let mut nabla_type = Check::new("nabla_type", format!("(∇_{{{s}X}}{s})Y = −{s}(∇_X{s})Y"));
    let mut nij_routes = Check::new(
        "nijenhuis_routes",
        format!("N(X,Y) from ∇{s} and from Lie brackets of extended fields both equal −8 n×(X×Y)"),
    );
    let mut nij_nonzero = Check::new("nijenhuis_nonvanishing", "N(b_i, b_j) ≠ 0 for some pair of frame vectors at every point");
    let mut hitchin = Check::new("hitchin", format!("K_{{dω}}(X) = 18 {s}X"));
    let mut lap_ratio = Check::new("star_d_omega", "∗_S dω = −3 g(n,n) ι_nΨ|_S");
    let mut lap = Check::new(
        "laplacian",
        format!("δdω = {}12 ω, with δ = (−1)^{{kn+n+1+η}} ∗d∗", if kind == SphereKind::S24 { "" } else { "−" }),
    );
    let mut coclosed = Check::new("coclosed", "δω = 0, from ∗_Sω = Ψ|_S and dΨ = 0");
    let mut ids = FormIdentities::new(s);

    let lap_points = points.len().div_ceil(2);
    let mut nij_witness: Option<Vec<Witness>> = None;
    for (i, x) in points.iter().enumerate() {
        let mut rng = trial_rng(seed, SALT_TANGENTS + kind_salt(kind), i as u64);
        let n = &x.coords;
        on_sphere.record_eq(&metric(n, n), &eps, &[witness("x", x)]);
        if on_sphere.evaluations != i + 1 || metric(n, n) != eps {
            continue;
        }
        let frame = tangent_frame(x);
        let at = |pairs: &[(&str, &ImVector)]| {
            let mut w = vec![witness("x", x)];
            w.extend(pairs.iter().map(|(k, v)| witness(k, v)));
            w
        };

        for b in frame.basis() {
            let sb = structure_apply(x, b).expect("frame vectors are tangent");
            tangent.record(metric(&sb, n).is_zero(), || at(&[("Y", b)]));
            let ssb = structure_apply(x, &sb).expect("tangent");
            square.record_eq(&ssb, &b.scale(&sigma), &at(&[("Y", b)]));
        }
        if kind == SphereKind::S33 {
            let ok = [int(1), int(-1)].iter().all(|lambda| {
                let vs: Vec<ImVector> = frame
                    .basis()
                    .iter()
                    .map(|b| b.add(&cross(n, b).scale(lambda)))
                    .collect();
                let m = Matrix::from_fn(7, 6, |r, c| vs[c].v[r].clone());
                m.rank() == 3 && vs.iter().all(|v| vs.iter().all(|w| metric(v, w).is_zero()))
            });
            isotropic.record(ok, || at(&[]));
        }

        let a = random_imvector(&mut rng);
        let b = random_imvector(&mut rng);
        let lhs = metric(&cross(n, &a), &cross(n, &b));
        let rhs = eps.clone() * metric(&a, &b) - metric(&a, n) * metric(&b, n);
        metric_rule.record_eq(&lhs, &rhs, &at(&[("X", &a), ("Y", &b)]));

        for _ in 0..NIJENHUIS_PAIRS_PER_POINT {
            let a = random_tangent(x, &mut rng);
            let b = random_tangent(x, &mut rng);
            let c = random_tangent(x, &mut rng);
            let inp = at(&[("X", &a), ("Y", &b), ("Z", &c)]);
            let w = super::fundamental_form(x, &a, &b).expect("tangent");
            let ok = w == metric(&cross(n, &a), &b)
                && w == metric(n, &cross(&a, &b))
                && w == forms.omega.value(&n.v, &[a.clone(), b.clone()])
                && w == -super::fundamental_form(x, &b, &a).expect("tangent");
            form_def.record(ok, || inp.clone());

            let nab = nabla_structure(x, &a, &b).expect("tangent");
            let ok = metric(&nab, &c) == -metric(&b, &nabla_structure(x, &a, &c).expect("tangent")) && metric(&nab, n).is_zero();
            nabla_skew.record(ok, || inp.clone());
            nabla_diag.record(nabla_structure(x, &a, &a).expect("tangent").is_zero(), || inp.clone());
            let shifted = nabla_structure(x, &cross(n, &a), &b).expect("tangent");
            nabla_type.record_eq(&shifted, &cross(n, &nab).neg(), &inp);

            let nij = nijenhuis(x, &a, &b).expect("tangent");
            let brackets = nijenhuis_brackets(x, &a, &b).expect("tangent");
            let ok = nij.expansion == nij.closed_form && brackets == nij.closed_form;
            nij_routes.record(ok, || {
                let mut w = inp.clone();
                w.extend([
                    witness("expansion", &nij.expansion),
                    witness("brackets", &brackets),
                    witness("closed_form", &nij.closed_form),
                ]);
                w
            });
        }

        let basis = frame.basis();
        let found = (0..6).flat_map(|i| (i + 1..6).map(move |j| (i, j))).find_map(|(i, j)| {
            let v = nijenhuis(x, &basis[i], &basis[j]).expect("tangent").closed_form;
            (!v.is_zero()).then_some((i, j, v))
        });
        nij_nonzero.record(found.is_some(), || at(&[]));
        if let (None, Some((i, j, v))) = (&nij_witness, &found) {
            nij_witness = Some(vec![
                witness("x", x),
                witness("X", &basis[*i]),
                witness("Y", &basis[*j]),
                witness("N(X,Y)", v),
            ]);
        }

        let rho = frame.restrict(&forms.d_omega).tangential;
        let a = random_tangent(x, &mut rng);
        let k = hitchin_in_frame(&frame, &rho, &a);
        hitchin.record_eq(&k, &cross(n, &a).scale(&int(18)), &at(&[("X", &a)]));

        ids.run_point(x, &frame, &forms, &mut rng, TRIPLES_PER_POINT);

        if i < lap_points {
            let chain = laplacian_chain(x, &frame, &forms, &d_iota_psi);
            let expected_ratio = int(-3) * &eps;
            lap_ratio.record(chain.ratio.as_ref() == Some(&expected_ratio), || {
                let mut w = at(&[]);
                w.extend([witness("star_d_omega", &chain.star_d_omega), witness("iota_psi", &chain.iota_psi)]);
                w
            });
            coclosed.record(chain.star_omega == chain.psi_restricted && chain.delta_omega.is_zero(), || {
                let mut w = at(&[]);
                w.push(witness("delta_omega", &chain.delta_omega));
                w
            });
            for _ in 0..LAPLACIAN_PAIRS_PER_POINT {
                let a = random_tangent(x, &mut rng);
                let b = random_tangent(x, &mut rng);
                let value = chain.delta_d_omega.evaluate(&[frame.coords(&a), frame.coords(&b)]);
                let expected = int(12) * &eps * metric(&cross(n, &a), &b);
                lap.record_eq(&value, &expected, &at(&[("X", &a), ("Y", &b)]));
            }
        }
    }

    let base = kind.basepoint();
    let mut fixed = Check::new("basepoint_values", basepoint_statement(kind));
    for (ok, w) in basepoint_values(&base, &forms) {
        fixed.record(ok, || w);
    }

    for c in [on_sphere, square, tangent, metric_rule] {
        report.push(c);
    }
    if kind == SphereKind::S33 {
        report.push(isotropic);
    }
    for c in [form_def, nabla_skew, nabla_diag, nabla_type, nij_routes, nij_nonzero, hitchin] {
        report.push(c);
    }
    let letter_kind = kind;
    let mut tmp = Report::new("", seed, trials);
    ids.finish(&mut tmp, letter_kind);
    report.checks.extend(tmp.checks);
    for c in [lap_ratio, lap, coclosed, fixed] {
        report.push(c);
    }
    report.notes.extend(tmp.notes);
    if let Some(w) = nij_witness {
        report.note("nijenhuis_witness", "a nonvanishing Nijenhuis value at the first sampled point", w);
    }
    report
}

fn basepoint_statement(kind: SphereKind) -> &'static str {
    match kind {
        SphereKind::S24 => "at x = e1: N(e2,e4) = 8e7, K(e2) = 18e3, dω(e2,e4,e6) = −3, δdω(e2,e3) = 12",
        SphereKind::S33 => {
            "at x = e4: N(e1,e2) = 8e7, K(e1) = −18e5, dω = 3(w123 + w167 − w257 + w356) in the frame e1,e2,e3,e5,e6,e7, δdω(e1,e5) = −12"
        }
    }
}

fn basepoint_values(x: &SpherePoint, forms: &StructureForms) -> Vec<(bool, Vec<Witness>)> {
    let e = |i: usize| ImVector::<Rational>::basis(i);
    let mut out = Vec::new();
    let mut push = |name: &str, got: alloc::string::String, want: alloc::string::String| {
        out.push((got == want, vec![witness("value", name), witness("lhs", got), witness("rhs", want)]));
    };
    let frame = tangent_frame(x);
    let rho = frame.restrict(&forms.d_omega).tangential;
    match x.kind {
        SphereKind::S24 => {
            let nij = nijenhuis(x, &e(2), &e(4)).expect("tangent");
            push("N(e2,e4)", format!("{}", nij.expansion), format!("{}", e(7).scale(&int(8))));
            push("K(e2)", format!("{}", hitchin_in_frame(&frame, &rho, &e(2))), format!("{}", e(3).scale(&int(18))));
            let v = forms.d_omega.value(&x.coords.v, &[e(2), e(4), e(6)]);
            push("dω(e2,e4,e6)", format!("{v}"), format!("{}", int(-3)));
            let l = super::laplacian_check(x, &e(2), &e(3)).expect("tangent");
            push("δdω(e2,e3)", format!("{l}"), format!("{}", int(12)));
        }
        SphereKind::S33 => {
            let nij = nijenhuis(x, &e(1), &e(2)).expect("tangent");
            push("N(e1,e2)", format!("{}", nij.expansion), format!("{}", e(7).scale(&int(8))));
            push("K(e1)", format!("{}", hitchin_in_frame(&frame, &rho, &e(1))), format!("{}", e(5).scale(&int(-18))));
            let expected = ConstForm::basis(6, &[1, 2, 3])
                .add(&ConstForm::basis(6, &[1, 5, 6]))
                .sub(&ConstForm::basis(6, &[2, 4, 6]))
                .add(&ConstForm::basis(6, &[3, 4, 5]))
                .scale(&int(3));
            push("dω", format!("{rho}"), format!("{expected}"));
            let l = super::laplacian_check(x, &e(1), &e(5)).expect("tangent");
            push("δdω(e1,e5)", format!("{l}"), format!("{}", int(-12)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_on_few_points() {
        for kind in [SphereKind::S24, SphereKind::S33] {
            let r = sphere_suite(kind, 6, 1);
            let failures: Vec<_> = r.failures().collect();
            assert!(failures.is_empty(), "{failures:#?}");
            assert!(r.checks.iter().all(|c| c.evaluations > 0), "{:#?}", r.checks);
        }
    }

    #[test]
    fn single_point_suite() {
        let r = form_identities_suite(&SphereKind::S33.basepoint(), 5, 0);
        assert!(r.passed(), "{:#?}", r.failures().collect::<Vec<_>>());
        assert_eq!(r.notes.len(), 2);
    }
}
