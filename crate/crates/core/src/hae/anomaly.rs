//! The `Q^s`-coefficient `F_1` of the PT free energy and its holomorphic
//! anomaly equation `d/dG_2 F_1 = (eps1^2 + eps2^2 + eps1 eps2) F_1`.

use serde::{Deserialize, Serialize};

use crate::enriques::omega::omega_series;
use crate::enriques::pt::pt_conjecture;
use crate::error::{Error, Result};
use crate::report::{compare_qp, half, Mismatch, Report};
use crate::series::rational::{int, Rational};
use crate::series::{PLaurent, QSeries, Ring};
use crate::special::e8::e8_theta;
use crate::special::eta::eta_power;
use crate::special::word::{JacobiWord, Mono};

use super::eps::{eps_expand, eps_substitute, EpsPoly};
use super::qmod::{QModBasis, BASIS};

/// `2 Theta(t,q^2) Theta(p t^{1/2},q^2) Theta(p t^{-1/2},q^2) eta(q^2)^8`
/// over the same thetas at `q` times `eta(q)^16`.
pub fn f1_word() -> JacobiWord {
    let mut w = JacobiWord::new(int(2));
    for arg in [Mono::T, Mono::T_HALF_P, Mono::T_MINUS_HALF_P] {
        w = w.theta(arg, 2, 1).theta(arg, 1, -1);
    }
    w.eta(2, 8).eta(1, -16)
}

/// `F_1` below `q^order`; without the E8 factor this is the `zeta^0` part.
pub fn f1_series(order: u32, with_e8: bool) -> Result<QSeries<PLaurent>> {
    let order2 = 2 * order as i64;
    // the theta prefactors cancel, so no p-truncation enters
    let f = f1_word().eval(order2, 0)?;
    if !with_e8 {
        return Ok(f);
    }
    let e8 = e8_theta(order)?.map_coeffs(|c| PLaurent::from_rational(c.clone()));
    Ok(f.mul(&e8).truncate(order2))
}

/// `eta(q^2)^8 / eta(q)^16`.
pub fn eta_quotient(order: u32) -> QSeries<Rational> {
    eta_power(2, 8, order + 1).mul(&eta_power(1, -16, order + 1)).truncate(2 * order as i64)
}

/// `f_{a,b}` for `a + b <= e_max`: the `eps1^a eps2^b` coefficient of
/// `[F_1]_{zeta^0}` with the eta quotient divided out.
pub fn f_coefficients(order: u32, e_max: u32) -> Result<EpsPoly> {
    let inverse = eta_power(1, 16, order + 1).mul(&eta_power(2, -8, order + 1));
    Ok(eps_expand(&f1_word(), e_max, order)?.mul_series(&inverse).truncate(2 * order as i64))
}

/// One line of the anomaly table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HaeRow {
    pub pair: (u32, u32),
    pub weight: u32,
    pub decomposition: String,
    pub derivative_ok: bool,
}

/// Decomposes every `f_{a,b}` with `a + b <= e_max` and tests the anomaly
/// equation coefficientwise below `q^order`.
pub fn hae_rows(order: u32, e_max: u32) -> Result<(Vec<HaeRow>, Option<Mismatch>)> {
    let basis = QModBasis::new(order)?;
    let f = f_coefficients(order, e_max)?;
    let eta_q = eta_quotient(order);
    let full = f.mul_series(&eta_q);
    let quadratic = EpsPoly::polynomial([(2, 0, int(1)), (0, 2, int(1)), (1, 1, int(1))], e_max);
    let shifted = quadratic.mul(&full);
    let mut rows = Vec::new();
    let mut first = None;
    for total in 0..=e_max {
        for a in 0..=total {
            let b = total - a;
            let x = basis.decompose(&f.coeff(a, b), total)?;
            let lhs = basis.derivative(&x).q_expansion.mul(&eta_q);
            let rhs = shifted.coeff(a, b);
            let diff = lhs.first_difference(&rhs);
            if first.is_none() {
                first = diff.map(|e| Mismatch::new(format!("eps1^{a} eps2^{b} q^{}", half(e)), lhs.coeff(e), rhs.coeff(e)));
            }
            rows.push(HaeRow { pair: (a, b), weight: total, decomposition: x.to_string(), derivative_ok: diff.is_none() });
        }
    }
    Ok((rows, first))
}

/// The full check: `F_1` against the PT pipeline, both routes to the
/// epsilon expansion, odd-degree vanishing, quasi-modularity of every
/// `f_{a,b}` and the anomaly equation.
pub fn verify_hae(order: u32, e_max: u32) -> Result<Report> {
    let mut report = Report::new("holomorphic anomaly equation").order("q_order", order as i64).order("e_max", e_max as i64).assume(BASIS);
    let order2 = 2 * order as i64;
    let f1 = f1_series(order, false)?;
    let window = 2 * order as i64;

    let pt = pt_conjecture(1, order - 1)?.log_form.coeff(2);
    report.check("F_1 equals the s-degree-1 log slice", compare_qp(&f1, &pt, order2, window)?);
    let omega = omega_series(order)?.map_coeffs(|c| c.scale(&int(2)));
    report.check("F_1 equals 2 Omega", compare_qp(&f1, &omega, order2, window)?);

    let via_g = eps_expand(&f1_word(), e_max, order)?;
    let via_sub = eps_substitute(&f1, e_max)?;
    report.check(
        "eps expansion through G_k equals direct substitution",
        via_g.first_difference(&via_sub).map(|(a, b, e)| {
            Mismatch::new(format!("eps1^{a} eps2^{b} q^{}", half(e)), via_g.coeff(a, b).coeff(e), via_sub.coeff(a, b).coeff(e))
        }),
    );
    let odd = via_g.odd_degree_terms();
    report.check("odd total degree vanishes", odd.first().map(|(a, b)| Mismatch::new(format!("eps1^{a} eps2^{b}"), "nonzero", 0)));

    let f = f_coefficients(order, e_max)?;
    let two = QSeries::constant(int(2)).truncate(order2);
    report.check(
        "f_{0,0} = 2",
        f.coeff(0, 0)
            .first_difference(&two)
            .map(|e| Mismatch::new(format!("q^{}", half(e)), f.coeff(0, 0).coeff(e), if e == 0 { 2 } else { 0 })),
    );

    match hae_rows(order, e_max) {
        Ok((rows, first)) => {
            report.check("every f_{a,b} is quasi-modular", None);
            report.check("d/dG2 F_1 = (eps1^2 + eps2^2 + eps1 eps2) F_1", first);
            for r in rows {
                report.details.push(format!("f_{{{},{}}} = {}", r.pair.0, r.pair.1, r.decomposition));
            }
        }
        Err(Error::NotQuasiModular { weight, reason }) => {
            report.check("every f_{a,b} is quasi-modular", Some(Mismatch::new(format!("weight {weight}"), reason, "zero residual")));
        }
        Err(e) => return Err(e),
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enriques::omega::omega_unrefined_series;
    use crate::special::identities::at_t1;

    #[test]
    fn f1_symmetry_and_leading_terms() {
        let f = f1_series(4, false).unwrap();
        // q^0: 2
        assert_eq!(f.coeff(0), PLaurent::from_rational(int(2)));
        for (_, c) in f.terms() {
            assert_eq!(c.invert_p().unwrap().map_coeffs(|x| x.invert_t()), *c);
        }
    }

    #[test]
    fn e8_factor_at_q1() {
        let with = f1_series(3, true).unwrap();
        let without = f1_series(3, false).unwrap();
        let diff = with.coeff(2).sub(&without.coeff(2));
        assert_eq!(diff, PLaurent::from_rational(int(480)));
    }

    #[test]
    fn genus_zero_limit_is_the_eta_quotient() {
        // t = 1, p = 1 collapses F_1 to 2 eta(q^2)^8 / eta(q)^16
        let f = at_t1(&omega_unrefined_series(6)).unwrap();
        let eta_q = eta_quotient(6).scale(&int(2));
        for e in 0..6 {
            let total = f.coeff(2 * e).terms().fold(int(0), |acc, (_, c)| acc + c.eval_at_one().unwrap()) * int(2);
            assert_eq!(total, eta_q.coeff(2 * e), "q^{e}");
        }
        let refined = at_t1(&f1_series(6, false).unwrap()).unwrap();
        assert_eq!(refined.map_coeffs(|c| c.clone()), f.map_coeffs(|c| c.scale(&int(2))));
    }

    #[test]
    fn f_20_has_derivative_f_00() {
        let b = QModBasis::new(6).unwrap();
        let f = f_coefficients(6, 2).unwrap();
        let x = b.decompose(&f.coeff(2, 0), 2).unwrap();
        assert_eq!(b.derivative(&x).q_expansion, f.coeff(0, 0));
    }

    #[test]
    fn anomaly_at_small_order() {
        let r = verify_hae(6, 4).unwrap();
        assert!(r.passed(), "{r} {:?}", r.details);
    }

    #[test]
    fn chain_rule_on_single_thetas() {
        // d/dG2 Theta(z, q) = -z^2 Theta(z, q) and d/dG2 Theta(z, q^2) = -z^2/2 Theta(z, q^2)
        let b = QModBasis::new(6).unwrap();
        for (j, c) in [(1, int(-1)), (2, Rational::new(int(-1).to_integer(), 2.into()))] {
            let theta = eps_expand(&JacobiWord::new(int(1)).theta(Mono::T_HALF_P, j, 1), 6, 6).unwrap();
            let want = EpsPoly::polynomial([(2, 0, c)], 6).mul(&theta);
            for a in 1..=6 {
                let x = b.decompose(&theta.coeff(a, 0), a - 1).unwrap();
                assert_eq!(b.derivative(&x).q_expansion, want.coeff(a, 0), "q^{j}, eps1^{a}");
            }
        }
    }
}
