use fgltheta_core::coeffdom::{Integer, PadicApprox, QuotientExt, Ring, WittF4};
use fgltheta_core::series::TruncSeries;
use proptest::prelude::*;

fn padic(bits: u32) -> impl Strategy<Value = PadicApprox> {
    any::<u128>().prop_map(move |v| PadicApprox::new(v, bits).unwrap())
}

fn witt(bits: u32) -> impl Strategy<Value = WittF4> {
    (padic(bits), padic(bits)).prop_map(|(re, im)| WittF4::new(re, im))
}

fn series(order: usize) -> impl Strategy<Value = TruncSeries<PadicApprox>> {
    prop::collection::vec(any::<i64>(), order)
        .prop_map(move |c| TruncSeries::from_coeffs(&(), c.into_iter().map(PadicApprox::exact).collect(), order))
}

fn small_series(order: usize) -> impl Strategy<Value = TruncSeries<Integer>> {
    prop::collection::vec(-20i64..=20, order)
        .prop_map(move |c| TruncSeries::from_coeffs(&(), c.into_iter().map(Integer::new).collect(), order))
}

fn same<R: Ring>(a: &R, b: &R) -> bool {
    a.sub(b).is_zero()
}

proptest! {
    #[test]
    fn padic_ring_axioms(a in padic(40), b in padic(40), c in padic(40)) {
        prop_assert!(same(&a.add(&b), &b.add(&a)));
        prop_assert!(same(&a.mul(&b), &b.mul(&a)));
        prop_assert!(same(&a.mul(&b).mul(&c), &a.mul(&b.mul(&c))));
        prop_assert!(same(&a.mul(&b.add(&c)), &a.mul(&b).add(&a.mul(&c))));
        prop_assert!(a.add(&a.neg()).is_zero());
    }

    #[test]
    fn padic_inverse_is_involutive(v in any::<u128>(), bits in 1u32..=128) {
        let a = PadicApprox::new(v | 1, bits).unwrap();
        let inv = a.try_inverse().unwrap();
        prop_assert!(a.mul(&inv).congruent(&PadicApprox::exact(1), bits));
        prop_assert!(same(&inv.try_inverse().unwrap(), &a));
    }

    #[test]
    fn padic_precision_is_min(a in padic(100), n in 1u32..=100, m in 1u32..=100) {
        let x = a.truncate(n);
        let y = a.truncate(m);
        prop_assert_eq!(x.add(&y).precision(), n.min(m));
        prop_assert_eq!(x.mul(&y).precision(), n.min(m));
        prop_assert!(x.sub(&y).congruent(&PadicApprox::exact(0), n.min(m)));
    }

    #[test]
    fn witt_ring_axioms_and_frobenius(a in witt(30), b in witt(30), c in witt(30)) {
        prop_assert!(same(&a.mul(&b).mul(&c), &a.mul(&b.mul(&c))));
        prop_assert!(same(&a.mul(&b.add(&c)), &a.mul(&b).add(&a.mul(&c))));
        prop_assert!(same(&a.mul(&b).frobenius(), &a.frobenius().mul(&b.frobenius())));
        prop_assert!(same(&a.frobenius().frobenius(), &a));
    }

    #[test]
    fn series_ring_axioms(f in series(10), g in series(10), h in series(10)) {
        prop_assert!(same(&f.mul(&g), &g.mul(&f)));
        prop_assert!(same(&f.mul(&g).mul(&h), &f.mul(&g.mul(&h))));
        prop_assert!(same(&f.mul(&g.add(&h)), &f.mul(&g).add(&f.mul(&h))));
    }

    #[test]
    fn series_inverse_is_involutive(mut f in series(12), unit in any::<u64>()) {
        f.set_coeff(0, PadicApprox::exact((unit | 1) as i64));
        let inv = f.inverse().unwrap();
        prop_assert!(same(&f.mul(&inv), &TruncSeries::constant(PadicApprox::exact(1), 12)));
        prop_assert!(same(&inv.inverse().unwrap(), &f));
    }

    #[test]
    fn composition_is_associative(f in small_series(7), g in small_series(7), h in small_series(7)) {
        let mut g = g;
        let mut h = h;
        g.set_coeff(0, Integer::new(0));
        h.set_coeff(0, Integer::new(0));
        let left = f.compose(&g).unwrap().compose(&h).unwrap();
        let right = f.compose(&g.compose(&h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn quotient_ring_axioms(
        x in prop::array::uniform3(-50i64..50),
        y in prop::array::uniform3(-50i64..50),
        z in prop::array::uniform3(-50i64..50),
        t in -20i64..20,
    ) {
        let t = Integer::new(t);
        let q = |c: [i64; 3]| QuotientExt::new(c.map(Integer::new), t.clone());
        let (x, y, z) = (q(x), q(y), q(z));
        prop_assert_eq!(x.mul(&y), y.mul(&x));
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        let d = QuotientExt::generator(t.clone());
        let relation = d.pow(3).sub(&d.mul(&QuotientExt::from_base(t.clone(), t.clone()))).sub(&d.int_like(2));
        prop_assert!(relation.is_zero());
    }
}
