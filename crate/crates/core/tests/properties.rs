use proptest::prelude::*;

use kummer_core::invariants::{
    g1_criterion, generators_up_to_degree, h1_criterion, is_invariant, DiagonalAction, Monomial,
};
use kummer_core::toric::{chart_from_cone, cone_from_chart, bundled_chart_sets};
use kummer_core::FracPoly;

fn poly() -> impl Strategy<Value = FracPoly> {
    prop::collection::vec((-24i64..48, -24i64..48, -5i64..6), 0..6).prop_map(FracPoly::from_terms)
}

proptest! {
    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&FracPoly::one()), a.clone());
        prop_assert!(a.mul(&FracPoly::zero()).is_zero());
    }

    #[test]
    fn integer_part_is_additive(a in poly(), b in poly()) {
        prop_assert_eq!(a.add(&b).integer_part(), a.integer_part().add(&b.integer_part()));
    }

    #[test]
    fn serde_round_trip(a in poly()) {
        let s = serde_json::to_string(&a).unwrap();
        let back: FracPoly = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn invariant_monomials_form_a_semigroup(
        n in 2usize..4,
        e in prop::collection::vec(0i64..6, 12),
        f in prop::collection::vec(0i64..6, 12),
    ) {
        let h = DiagonalAction::h_family(n, 1);
        let m = Monomial(e[..2 * n].to_vec());
        let k = Monomial(f[..2 * n].to_vec());
        if is_invariant(&m, &h) && is_invariant(&k, &h) {
            prop_assert!(is_invariant(&m.mul(&k), &h));
        }
    }

    #[test]
    fn criteria_agree_with_characters(n in 2usize..5, e in prop::collection::vec(0i64..20, 8)) {
        let g = DiagonalAction::g_family_x_only(n, 1);
        prop_assert_eq!(g1_criterion(&e[..n]), is_invariant(&Monomial(e[..n].to_vec()), &g));
        let h = DiagonalAction::h_family(n, 1);
        let v = e[..2 * n].to_vec();
        prop_assert_eq!(h1_criterion(&v[..n], &v[n..]), is_invariant(&Monomial(v), &h));
    }
}

#[test]
fn generator_output_is_minimal_and_invariant() {
    for a in [DiagonalAction::g_family(2, 1), DiagonalAction::h_family(2, 1), DiagonalAction::g_family(3, 2)] {
        let gens = generators_up_to_degree(&a, 8, None).unwrap();
        for (i, g) in gens.iter().enumerate() {
            assert!(is_invariant(g, &a));
            for (j, h) in gens.iter().enumerate() {
                assert!(i == j || !h.divides(g), "{} divides {}", a.render(h), a.render(g));
            }
        }
    }
}

#[test]
fn chart_cone_round_trip() {
    for set in bundled_chart_sets() {
        let q = set.quotient().unwrap();
        for chart in set.charts().unwrap() {
            let rays = cone_from_chart(&chart, &q).unwrap();
            let back = chart_from_cone(chart.label.clone(), &rays).unwrap();
            assert_eq!(back.rows, chart.rows, "{}", chart.label);
        }
    }
}
