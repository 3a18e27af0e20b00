use fgltheta_core::coeffdom::{PadicApprox, Ring};
use fgltheta_core::realization::{membership, LocalizedKind, XVariable};
use fgltheta_core::series::LaurentSeries;
use fgltheta_core::theta::{solve_c, theta_pipeline};
use num_bigint::BigInt;
use proptest::prelude::*;

/// `−4ⁿ·C(3n, n)/(2n + 1)`: the closed form of the series solving
/// `c = −1 + 4sc³`, counted by ternary trees.
fn c_closed_form(n: usize) -> BigInt {
    let mut binom = BigInt::from(1);
    for i in 0..n {
        binom = binom * BigInt::from(3 * n - i) / BigInt::from(i + 1);
    }
    -(BigInt::from(4).pow(n as u32) * binom / BigInt::from(2 * n + 1))
}

fn residue(x: &BigInt, bits: u32) -> u128 {
    let m = BigInt::from(1) << bits as usize;
    let r = ((x % &m) + &m) % &m;
    u128::try_from(r).unwrap()
}

#[test]
fn c_matches_the_closed_form() {
    for (n, k) in [(16u32, 10usize), (64, 16), (128, 24)] {
        let c = solve_c(n, k).unwrap();
        for d in 0..k {
            let got = c.series().coeff(d);
            assert_eq!(got.value(), residue(&c_closed_form(d), got.precision()), "degree {d} at N = {n}");
        }
        assert!(c.residual().is_zero());
    }
}

#[test]
fn precision_matrix_agrees() {
    let cells: Vec<_> = [16u32, 64]
        .iter()
        .flat_map(|&n| [4usize, 8, 16].map(move |k| (n, k)))
        .map(|(n, k)| theta_pipeline(n, k, false).unwrap())
        .collect();
    for a in &cells {
        assert!(a.is_stable());
        for b in &cells {
            let (ta, tb) = (a.theta.as_ref().unwrap(), b.theta.as_ref().unwrap());
            let top = ta.order().min(tb.order());
            for d in 0..top {
                let (x, y) = (ta.coeff(d), tb.coeff(d));
                let bits = x.precision().min(y.precision());
                assert!(
                    x.congruent(&y, bits),
                    "θ degree {d}: ({}, {}) vs ({}, {})",
                    a.precision,
                    a.order,
                    b.precision,
                    b.order
                );
            }
        }
    }
}

fn payload(lo: i64, len: usize) -> impl Strategy<Value = LaurentSeries<PadicApprox>> {
    prop::collection::vec(any::<i64>(), len).prop_map(move |c| {
        LaurentSeries::from_coeffs(
            &(),
            lo,
            c.into_iter().map(|v| PadicApprox::from_i128(v.into(), 32).unwrap()).collect(),
        )
    })
}

proptest! {
    #[test]
    fn membership_is_monotone_in_the_window(f in payload(-3, 12), cut in -3i64..9) {
        let member = membership(&f, XVariable::XInverse, LocalizedKind::K1Zero);
        let shorter = f.truncate(cut);
        if member {
            prop_assert!(membership(&shorter, XVariable::XInverse, LocalizedKind::K1Zero));
        }
        prop_assert!(membership(&f, XVariable::XInverse, LocalizedKind::K2K1Zero));
    }

    #[test]
    fn membership_ignores_nonnegative_terms(f in payload(0, 10), g in payload(-4, 14)) {
        prop_assert!(membership(&f, XVariable::XInverse, LocalizedKind::K1Zero));
        prop_assert!(membership(&f, XVariable::X, LocalizedKind::K2Zero));
        let sum = g.add(&f);
        let principal_nonzero = (-4..0).any(|n| !g.coeff(n).is_zero());
        prop_assert_eq!(membership(&sum, XVariable::XInverse, LocalizedKind::K1Zero), !principal_nonzero);
    }

    #[test]
    fn solve_c_is_stable_under_truncation(n in 8u32..=128, k in 2usize..12) {
        let fine = solve_c(n, k).unwrap();
        let coarse = solve_c(n.min(20), k).unwrap();
        prop_assert!(fine.residual().is_zero());
        for d in 0..k {
            prop_assert!(fine.series().coeff(d).congruent(&coarse.series().coeff(d), n.min(20)));
        }
    }
}
