use cyclify_core::cyclify::{construct_quadratic, construct_three_linear, verify_construction};
use cyclify_core::geometry::ProjectiveMap;
use cyclify_core::poly3::{birat_from_parts, Poly3};
use cyclify_core::{Frac, LPoly, Poly, RatFunc, Ring, Scalar, UniPoly};
use proptest::prelude::*;

fn uni() -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-4i64..=4, 1..=3)
        .prop_map(|cs| Poly::new(cs.into_iter().map(Scalar::int).collect()))
        .prop_filter("nonzero", |p: &UniPoly| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (uni(), uni()).prop_map(|(n, d)| Frac::new(n, d).unwrap())
}

fn matrix() -> impl Strategy<Value = ProjectiveMap> {
    prop::collection::vec(-3i64..=3, 9)
        .prop_map(|v| {
            let s = |i: usize| Scalar::int(v[i]);
            ProjectiveMap::new([[s(0), s(1), s(2)], [s(3), s(4), s(5)], [s(6), s(7), s(8)]])
        })
        .prop_filter_map("invertible", |m| m.ok())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn three_linear_points_verify(b1 in ratfunc(), b2 in ratfunc(), n in 2u32..=4) {
        let out = construct_three_linear(&b1, &b2, n).unwrap();
        let v = verify_construction(&out).unwrap();
        prop_assert!(v.passed, "{:?}", v.failures().collect::<Vec<_>>());
    }

    #[test]
    fn quadratic_point_verifies(u in ratfunc(), v in ratfunc(), n in 2u32..=3) {
        // y^2 - x is irreducible over k0(x)
        let f: LPoly = Poly::new(vec![Frac::from_poly(Poly::new(vec![Scalar::zero(), Scalar::int(-1)])), RatFunc::zero(), RatFunc::one()]);
        let out = construct_quadratic(&f, &u, &v, n).unwrap();
        let check = verify_construction(&out).unwrap();
        prop_assert!(check.passed);
    }

    #[test]
    fn coordinate_change_round_trips(m in matrix(), i in 0u32..=2, j in 0u32..=2, c in -5i64..=5) {
        let num = Poly3::monomial(Scalar::int(1), [i, j, 0]).add(&Poly3::constant(Scalar::int(c)));
        let den = Poly3::var(0).add(&Poly3::var(1)).add(&Poly3::one());
        let e = birat_from_parts(&num, &den).unwrap();
        let there = m.apply(&e).unwrap();
        prop_assert_eq!(m.inverse().apply(&there).unwrap(), e);
    }
}
