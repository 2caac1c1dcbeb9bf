use cyclify_core::brauer::{
    find_witness, reciprocity_check, residue_equal_with_witness, BrauerPresentation, ClosedPoint, ResidueClass,
    SymbolAlgebra, Witness,
};
use cyclify_core::poly3::{birat_from_parts, Poly3};
use cyclify_core::{BiRatFunc, Field, Frac, LPoly, Poly, RatFunc, Ring, Scalar, UniPoly};
use proptest::prelude::*;

const ORDER: u32 = 5;

fn scalar() -> impl Strategy<Value = Scalar> {
    (prop::collection::vec(-4i64..=4, 4), 1i64..=3).prop_map(|(cs, d)| {
        let rho = Scalar::rho(ORDER).unwrap();
        cs.iter().rev().fold(Scalar::zero(), |acc, &c| acc.mul(&rho).add(&Scalar::ratio(c, d)))
    })
}

fn nonzero_scalar() -> impl Strategy<Value = Scalar> {
    scalar().prop_filter("nonzero", |s| !s.is_zero())
}

fn uni(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-5i64..=5, 1..=max_deg + 1)
        .prop_map(|cs| Poly::new(cs.into_iter().map(Scalar::int).collect()))
        .prop_filter("nonconstant", |p: &UniPoly| p.deg() > 0)
}

fn bipoly() -> impl Strategy<Value = Poly3> {
    prop::collection::vec((0u32..=2, 0u32..=2, -6i64..=6), 1..5)
        .prop_map(|ts| {
            ts.into_iter()
                .fold(Poly3::zero(), |acc, (i, j, c)| acc.add(&Poly3::monomial(Scalar::int(c), [i, j, 0])))
        })
        .prop_filter("nonzero", |p| !p.is_zero())
}

fn birat() -> impl Strategy<Value = BiRatFunc> {
    (bipoly(), prop::option::of(bipoly())).prop_map(|(n, d)| birat_from_parts(&n, &d.unwrap_or_else(Poly3::one)).unwrap())
}

fn y_minus(c: i64) -> LPoly {
    Poly::new(vec![RatFunc::from_int(-c), RatFunc::one()])
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn scalar_field_axioms(a in scalar(), b in scalar(), c in nonzero_scalar()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
        prop_assert!(c.mul(&c.inv().unwrap()).is_one());
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn gcd_finds_planted_factor(a in uni(3), b in uni(3), c in uni(2)) {
        let g = a.mul(&c).gcd(&b.mul(&c)).unwrap();
        prop_assert!(g.exact_div(&c.monic()).is_some());
        prop_assert_eq!(g, a.mul(&c).euclid_gcd(&b.mul(&c)));
    }

    #[test]
    fn resultant_is_multiplicative(a in uni(3), a2 in uni(2), b in uni(3)) {
        let lhs = a.mul(&a2).resultant(&b);
        prop_assert_eq!(lhs, a.resultant(&b).mul(&a2.resultant(&b)));
        prop_assert_eq!(a.resultant(&b).is_zero(), a.gcd(&b).unwrap().deg() > 0);
    }

    #[test]
    fn fraction_free_resultant_matches_euclid(a in uni(2), b in uni(2), s in 1i64..=4) {
        let lift = |p: &UniPoly, k: i64| -> LPoly {
            Poly::new(vec![Frac::from_poly(p.clone()), RatFunc::from_int(k), RatFunc::one()])
        };
        let (la, lb) = (lift(&a, s), lift(&b, -s));
        prop_assert_eq!(la.resultant(&lb), la.euclid_resultant(&lb));
    }

    #[test]
    fn residue_is_bilinear_and_antisymmetric(a1 in birat(), a2 in birat(), b in birat(), c in -2i64..=2) {
        let p = ClosedPoint::finite(&y_minus(c)).unwrap();
        let r = |a: &BiRatFunc, b: &BiRatFunc| SymbolAlgebra::new(a.clone(), b.clone()).unwrap().residue(&p).unwrap();
        prop_assert_eq!(r(&a1.mul(&a2), &b), r(&a1, &b).mul(&r(&a2, &b)));
        prop_assert!(r(&a1, &b).mul(&r(&b, &a1)).is_one());
    }

    #[test]
    fn reciprocity_holds(a in birat(), b in birat(), n in 2u32..=3) {
        let pres = BrauerPresentation::single(n, SymbolAlgebra::new(a, b).unwrap()).unwrap();
        let ledger = reciprocity_check(&pres, &pres.candidate_points()).unwrap();
        prop_assert!(ledger.exact_product_is_one);
        prop_assert!(ledger.verdict);
    }

    #[test]
    fn witnesses_are_sound(base in uni(2), w in uni(2), c in nonzero_scalar(), n in 2u32..=3) {
        let p = ClosedPoint::Infinity;
        let r2 = ResidueClass::new(p.clone(), p.constant(&Frac::from_poly(base.clone())), n).unwrap();
        let factor = Frac::from_poly(w.pow(n)).mul(&RatFunc::constant(c));
        let r1 = ResidueClass::new(p.clone(), p.constant(&Frac::from_poly(base.clone()).mul(&factor)), n).unwrap();
        let found = find_witness(&r1, &r2).unwrap().expect("c * w^n differs by a witness");
        prop_assert!(residue_equal_with_witness(&r1, &r2, &found).unwrap());
        let bad = Witness { w: found.w.clone(), c: found.c.add(&Scalar::one()) };
        prop_assert!(!residue_equal_with_witness(&r1, &r2, &bad).unwrap());
    }
}
