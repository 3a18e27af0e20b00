use fgltheta_core::coeffdom::{Ring, WittF4};
use fgltheta_core::realization::{is_fixed, GroupElement, LubinTateElem, LubinTateModel};
use proptest::prelude::*;

fn model() -> LubinTateModel {
    LubinTateModel::new(16, 5).unwrap()
}

fn element() -> impl Strategy<Value = LubinTateElem> {
    prop::collection::vec((-20i64..20, -20i64..20, 0usize..5, -2i32..=2), 0..6).prop_map(|terms| {
        let m = model();
        terms.into_iter().fold(m.constant(WittF4::from_ints(0, 0, 16).unwrap()), |acc, (re, im, k, e)| {
            acc.add(&m.monomial(WittF4::from_ints(re, im, 16).unwrap(), k, e))
        })
    })
}

fn group() -> impl Strategy<Value = GroupElement> {
    (0u8..3, any::<bool>()).prop_map(|(zeta, sigma)| GroupElement { zeta, sigma })
}

proptest! {
    #[test]
    fn action_is_a_homomorphism(g in group(), h in group(), x in element()) {
        prop_assert_eq!(g.compose(h).act(&x), g.act(&h.act(&x)));
    }

    #[test]
    fn action_respects_ring_structure(g in group(), x in element(), y in element()) {
        prop_assert_eq!(g.act(&x.mul(&y)), g.act(&x).mul(&g.act(&y)));
        prop_assert_eq!(g.act(&x.add(&y)), g.act(&x).add(&g.act(&y)));
    }

    #[test]
    fn group_composition_is_associative(a in group(), b in group(), c in group()) {
        prop_assert_eq!(a.compose(b).compose(c), a.compose(b.compose(c)));
        prop_assert_eq!(a.compose(a.inverse()), GroupElement::IDENTITY);
    }

    #[test]
    fn orbit_sums_are_fixed(x in element()) {
        let m = model();
        let sum = GroupElement::all().iter().fold(m.constant(WittF4::from_ints(0, 0, 16).unwrap()), |acc, g| acc.add(&g.act(&x)));
        prop_assert!(is_fixed(&sum));
    }
}
