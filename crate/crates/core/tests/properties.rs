use proptest::prelude::*;

use cayley_core::imspace::{cross, four_form, metric, primitive, triple, ImVector};
use cayley_core::octonion::{associator, cayley_dickson_mul, SplitOctonion};
use cayley_core::r8::{random_exact_point, structure8_apply, Region};
use cayley_core::sampling::trial_rng;
use cayley_core::scalars::{int, parse_rational, rat, Rational};
use cayley_core::spheres::{
    fundamental_form, nijenhuis, random_point, random_tangent, sample_point, stereographic, stereographic_inverse,
    structure_apply, to_float, SphereKind, ROUND_TRIP_TOL,
};

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(p, q)| rat(p, q))
}

fn octonion() -> impl Strategy<Value = SplitOctonion> {
    proptest::array::uniform8(rational()).prop_map(SplitOctonion::new)
}

fn imaginary() -> impl Strategy<Value = ImVector> {
    proptest::array::uniform7(rational()).prop_map(ImVector::new)
}

fn kind() -> impl Strategy<Value = SphereKind> {
    prop_oneof![Just(SphereKind::S24), Just(SphereKind::S33)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition(x in octonion(), y in octonion()) {
        prop_assert_eq!(x.mul(&y).norm(), x.norm() * y.norm());
    }

    #[test]
    fn doubling_agrees_with_table(x in octonion(), y in octonion()) {
        prop_assert_eq!(cayley_dickson_mul(&x, &y), x.mul(&y));
    }

    #[test]
    fn associator_alternates(x in octonion(), y in octonion(), z in octonion()) {
        prop_assert!(associator(&x, &x, &y).is_zero());
        prop_assert!(associator(&y, &x, &x).is_zero());
        prop_assert_eq!(associator(&x, &y, &z), associator(&y, &z, &x));
        prop_assert_eq!(associator(&x, &y, &z), associator(&y, &x, &z).neg());
    }

    #[test]
    fn moufang(x in octonion(), y in octonion(), z in octonion()) {
        prop_assert_eq!(x.mul(&y).mul(&z.mul(&x)), x.mul(&y.mul(&z)).mul(&x));
    }

    #[test]
    fn conjugation_reverses(x in octonion(), y in octonion()) {
        prop_assert_eq!(x.mul(&y).conj(), y.conj().mul(&x.conj()));
    }

    #[test]
    fn cross_axiom(x in imaginary(), y in imaginary()) {
        let c = cross(&x, &y);
        let gram = metric(&x, &x) * metric(&y, &y) - metric(&x, &y) * metric(&x, &y);
        prop_assert_eq!(metric(&c, &c), gram);
        prop_assert_eq!(metric(&c, &x), int(0));
        prop_assert_eq!(cross(&y, &x), c.neg());
    }

    #[test]
    fn forms_alternate(x in imaginary(), y in imaginary(), z in imaginary(), w in imaginary()) {
        let omega = triple(&x, &y, &z);
        prop_assert_eq!(triple(&y, &x, &z), -omega.clone());
        prop_assert_eq!(triple(&y, &z, &x), omega);
        let psi = four_form(&x, &y, &z, &w);
        prop_assert_eq!(four_form(&y, &x, &z, &w), -psi.clone());
        prop_assert_eq!(four_form(&x, &y, &w, &z), -psi.clone());
        prop_assert_eq!(four_form(&x, &z, &y, &w), -psi);
    }

    #[test]
    fn primitive_is_parallel(v in imaginary()) {
        let p = primitive(&v);
        for i in 0..7 {
            for j in 0..7 {
                prop_assert_eq!(&p.v[i] * &v.v[j], &p.v[j] * &v.v[i]);
            }
            prop_assert!(p.v[i].is_integer());
        }
    }

    #[test]
    fn rationals_round_trip(p in -1000i64..1000, q in 1i64..1000) {
        let r = rat(p, q);
        prop_assert_eq!(parse_rational(&r.to_string()).unwrap(), r);
    }

    #[test]
    fn sampled_points_stay_on_sphere(k in kind(), d in imaginary()) {
        let base = k.basepoint();
        if let Ok(x) = sample_point(k, &d, &base) {
            prop_assert_eq!(metric(&x.coords, &x.coords), int(k.normal_square()));
        }
    }

    #[test]
    fn structure_on_spheres(k in kind(), seed in any::<u64>()) {
        let mut rng = trial_rng(seed, 1, 0);
        let x = random_point(k, &mut rng);
        let a = random_tangent(&x, &mut rng);
        let b = random_tangent(&x, &mut rng);
        let ja = structure_apply(&x, &a).unwrap();
        let sign = int(-k.normal_square());
        prop_assert_eq!(structure_apply(&x, &ja).unwrap(), a.scale(&sign));
        prop_assert_eq!(fundamental_form(&x, &a, &b).unwrap(), -fundamental_form(&x, &b, &a).unwrap());
        let n = nijenhuis(&x, &a, &b).unwrap();
        prop_assert_eq!(n.expansion, n.closed_form);
    }

    #[test]
    fn stereographic_round_trip(k in kind(), seed in any::<u64>()) {
        let mut rng = trial_rng(seed, 2, 0);
        let x = to_float(&random_point(k, &mut rng).coords);
        let back = stereographic_inverse(&stereographic(&x, k), k).unwrap();
        let scale = x.iter().fold(1.0f64, |m, v| m.max(v.abs()));
        for i in 0..7 {
            prop_assert!((x[i] - back[i]).abs() <= ROUND_TRIP_TOL * scale);
        }
    }

    #[test]
    fn eight_dimensional_structure_squares(plus in any::<bool>(), seed in any::<u64>(), y in octonion()) {
        let region = if plus { Region::Plus } else { Region::Minus };
        let u = random_exact_point(region, &mut trial_rng(seed, 3, 0));
        let sy = structure8_apply(&u, &y).unwrap();
        prop_assert_eq!(structure8_apply(&u, &sy).unwrap(), y.scale(&int(-region.sign())));
    }
}
