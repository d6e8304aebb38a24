//! Randomized invariants of the series layer, the plethystic operators and
//! the quasi-modular calculus.

use std::collections::BTreeMap;

use proptest::prelude::*;
use refined_vw::hae::{QModBasis, QModMonomial};
use refined_vw::k3::{k3_toda, K3Tables};
use refined_vw::plethysm::{pleth_exp, pleth_exp2, pleth_log2, qint};
use refined_vw::series::rational::{int, rat, Rational};
use refined_vw::series::{PLaurent, QSeries, Ring, TPoly, TRat};
use refined_vw::special::goettsche::{goettsche_enriques, goettsche_k3};
use refined_vw::special::theta_at_t;
use refined_vw::special::word::Mono;

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(a, b)| rat(a, b))
}

/// Integer powers of `q` from `q^lo` on, known below `q^order`.
fn series(lo: i64, order: i64) -> impl Strategy<Value = QSeries<Rational>> {
    prop::collection::vec(rational(), 0..order as usize).prop_map(move |cs| {
        let terms = cs.into_iter().enumerate().map(|(i, c)| (2 * (lo + i as i64), c)).filter(|(e, _)| *e < 2 * order);
        QSeries::from_terms(terms, 2 * order)
    })
}

fn tpoly() -> impl Strategy<Value = TPoly> {
    prop::collection::vec((-4i64..=4, rational()), 0..4).prop_map(TPoly::from_terms)
}

fn nonzero_tpoly() -> impl Strategy<Value = TPoly> {
    tpoly().prop_filter("nonzero", |p| !p.is_zero())
}

fn trat() -> impl Strategy<Value = TRat> {
    (tpoly(), nonzero_tpoly()).prop_map(|(n, d)| TRat::new(n, d).unwrap())
}

fn agree(a: &QSeries<Rational>, b: &QSeries<Rational>) -> bool {
    a.first_difference(b).is_none()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn series_ring_axioms(a in series(0, 8), b in series(0, 9), c in series(-1, 7)) {
        prop_assert!(agree(&a.mul(&b).mul(&c), &a.mul(&b.mul(&c))));
        prop_assert!(agree(&a.mul(&b.add(&c)), &a.mul(&b).add(&a.mul(&c))));
        prop_assert!(agree(&a.mul(&b), &b.mul(&a)));
        prop_assert!(agree(&a.sub(&a), &QSeries::zero_to(16)));
    }

    #[test]
    fn trat_field_axioms(a in trat(), b in trat(), c in trat()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        if !b.is_zero() {
            prop_assert_eq!(a.div(&b).unwrap().mul(&b), a);
        }
    }

    #[test]
    fn polynomial_quotients_are_recognized(p in tpoly(), d in nonzero_tpoly()) {
        let q = TRat::new(p.mul(&d), d).unwrap();
        prop_assert!(q.is_polynomial());
        prop_assert_eq!(q.as_poly().unwrap(), &p);
    }

    #[test]
    fn quantum_integers_factor(k in 1u32..=12, l in 1u32..=12) {
        prop_assert_eq!(qint(k * l), qint(k).mul(&qint(l).substitute_power(k)));
        prop_assert!(qint(k).is_palindromic());
    }

    #[test]
    fn exp_turns_sums_into_products(f in series(1, 8), g in series(1, 8)) {
        let lhs = pleth_exp(&f.add(&g)).unwrap();
        let rhs = pleth_exp(&f).unwrap().mul(&pleth_exp(&g).unwrap());
        prop_assert!(agree(&lhs, &rhs));
    }

    #[test]
    fn log2_inverts_exp2(f in series(1, 10)) {
        let back = pleth_log2(&pleth_exp2(&f).unwrap()).unwrap();
        prop_assert!(agree(&back, &f));
    }

    #[test]
    fn log2_inverts_exp2_over_t(cs in prop::collection::vec(tpoly(), 1..6)) {
        let f = QSeries::from_terms(cs.into_iter().enumerate().map(|(i, c)| (2 * i as i64 + 2, c)), 14);
        let back = pleth_log2(&pleth_exp2(&f).unwrap()).unwrap();
        prop_assert!(back.first_difference(&f).is_none());
    }

    #[test]
    fn g2_derivative_is_a_derivation(x in qmod(4), y in qmod(2)) {
        let b = QModBasis::new(8).unwrap();
        let (x, y) = (b.element(4, x), b.element(2, y));
        let lhs = b.derivative(&b.product(&x, &y));
        let rhs = b.sum(&b.product(&b.derivative(&x), &y), &b.product(&x, &b.derivative(&y))).unwrap();
        prop_assert_eq!(&lhs.terms, &rhs.terms);
        prop_assert!(lhs.q_expansion.first_difference(&rhs.q_expansion).is_none());
    }

    #[test]
    fn k3_toda_is_linear(c in rational(), sq in 0i64..=3) {
        let tables = K3Tables::new(5);
        let vw = |cls: &_| tables.vw_from_kernel(cls);
        let base = k3_toda(2 * sq, 4, &vw).unwrap();
        let scaled = k3_toda(2 * sq, 4, &|cls| Ok(vw(cls)?.scale(&c))).unwrap();
        prop_assert_eq!(scaled, base.scale(&c));
    }
}

fn qmod(weight: u32) -> impl Strategy<Value = BTreeMap<QModMonomial, Rational>> {
    let ms = refined_vw::hae::monomials(weight);
    prop::collection::vec(rational(), ms.len()).prop_map(move |cs| ms.iter().copied().zip(cs).collect())
}

#[test]
fn symmetric_constructions_are_t_symmetric() {
    // Theta(t^{-1}) = -Theta(t)
    let th = theta_at_t(Mono::T, 1, 8).unwrap();
    let flipped = th.map_coeffs(|c: &PLaurent| c.map_coeffs(TRat::invert_t));
    assert_eq!(flipped, th.map_coeffs(|c| c.scale(&int(-1))));
    for s in [goettsche_enriques(8), goettsche_k3(8)] {
        for (_, c) in s.terms() {
            assert!(c.is_palindromic() && c.has_nonnegative_integer_coeffs(), "{c}");
        }
    }
}

#[test]
fn quantum_integer_generating_function() {
    // sum_l [l]_t x^l = x / ((1 - t^{1/2} x)(1 - t^{-1/2} x)) below x^12
    let order2 = 24;
    let lhs = QSeries::from_terms((1..12).map(|l| (2 * l as i64, qint(l))), order2);
    let den = QSeries::from_terms([(0, TPoly::one()), (2, TPoly::monomial(1, int(-1)))], order2)
        .mul(&QSeries::from_terms([(0, TPoly::one()), (2, TPoly::monomial(-1, int(-1)))], order2));
    let rhs = den.inverse().unwrap().shift(2).truncate(order2);
    assert_eq!(lhs, rhs);
}
