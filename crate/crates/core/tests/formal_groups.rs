use fgltheta_core::coeffdom::{Integer, Ring};
use fgltheta_core::ellfgl::{expand_w, fgl_from_curve, w_relation_residual, WeierstrassCurve};
use fgltheta_core::series::TruncSeries;
use proptest::prelude::*;

fn curve() -> impl Strategy<Value = WeierstrassCurve<Integer>> {
    prop::array::uniform5(-4i64..=4).prop_map(|[a1, a2, a3, a4, a6]| {
        WeierstrassCurve::new(Integer::new(a1), Integer::new(a2), Integer::new(a3), Integer::new(a4), Integer::new(a6))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn curve_laws_satisfy_the_axioms(e in curve()) {
        let fgl = fgl_from_curve(&e, 8).unwrap();
        prop_assert!(fgl.unitality_defects().is_empty());
        prop_assert!(fgl.commutativity_defects().is_empty());
        prop_assert!(fgl.associativity_defects().is_empty());
        prop_assert!(fgl.inverse_residual().is_zero());
        prop_assert_eq!(fgl.law().coeff(1, 1), e.a1.neg());
    }

    #[test]
    fn w_back_substitution(e in curve(), order in 4usize..12) {
        let w = expand_w(&e, order).unwrap();
        prop_assert!(w_relation_residual(&e, &w).is_zero());
        prop_assert_eq!(w.coeff(3), Integer::new(1));
    }

    #[test]
    fn n_series_are_additive(e in curve(), m in -2i64..=3, n in -2i64..=3) {
        let fgl = fgl_from_curve(&e, 7).unwrap();
        let lhs = fgl.n_series(m + n);
        let rhs = fgl.sum(&fgl.n_series(m), &fgl.n_series(n));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn coefficient_change_commutes_with_the_law(e in curve()) {
        let reduced = fgl_from_curve(&e, 6).unwrap().map(&(), |c: &Integer| Integer::new(i64::from(c.mod2())));
        let direct = fgl_from_curve(&e.map(|c| Integer::new(i64::from(c.mod2()))), 6).unwrap();
        let parity = |f: &fgltheta_core::series::BivarSeries<Integer>| {
            f.terms().filter(|(_, c)| c.mod2() == 1).map(|(k, _)| k).collect::<Vec<_>>()
        };
        prop_assert_eq!(parity(reduced.law()), parity(direct.law()));
    }
}

#[test]
fn additive_identity_series_is_trivial() {
    let z = TruncSeries::<Integer>::variable(&(), 6);
    let fgl = fgl_from_curve(
        &WeierstrassCurve::new(Integer::new(1), Integer::new(0), Integer::new(1), Integer::new(0), Integer::new(0)),
        6,
    )
    .unwrap();
    assert_eq!(fgl.n_series(1), z);
    assert!(fgl.n_series(0).is_zero());
}
