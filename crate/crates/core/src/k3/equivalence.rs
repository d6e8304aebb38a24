//! The stable pair kernel
//! `-(t^{1/2} - t^{-1/2}) / (Theta(t,q) Theta(t^{-1/2}p,q) Theta(t^{1/2}p,q) Delta(q))`
//! against the sheaf kernel `(t^{1/2} - t^{-1/2})^2 / (Theta(t,q)^2 Delta(q))`,
//! related through the linear Toda equation in both directions.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::report::{compare_qp, half, Mismatch, Report};
use crate::series::rational::int;
use crate::series::{PLaurent, QSeries, Ring};
use crate::special::identities::{at_t1, prefactor_precision, zagier_sum};
use crate::special::word::{JacobiWord, Mono};

use super::toda::{k3_toda, k3_vw_from_pt_solve};
use super::vw::K3Tables;

/// `sum_{n,d} pt_{n,beta_d} (-p)^n q^d` as a theta quotient, known below
/// `q^{q_order}` and exactly for `p`-exponents up to `p_window`.
pub fn k3_pt_kernel(q_order: u32, p_window: u32) -> Result<QSeries<PLaurent>> {
    let order2 = 2 * q_order as i64;
    JacobiWord::new(int(-1))
        .gap(Mono::T, 1)
        .theta(Mono::T, 1, -1)
        .theta(Mono::T_MINUS_HALF_P, 1, -1)
        .theta(Mono::T_HALF_P, 1, -1)
        .eta(1, -24)
        .eval(order2, prefactor_precision(order2, p_window))
}

/// `-1/(Theta(p,q)^2 Delta(q))`, the `t = 1` limit of [`k3_pt_kernel`].
fn unrefined_pt_kernel(q_order: u32, p_window: u32) -> Result<QSeries<PLaurent>> {
    let order2 = 2 * q_order as i64;
    JacobiWord::new(int(-1)).theta(Mono::P, 1, -2).eta(1, -24).eval(order2, prefactor_precision(order2, p_window))
}

/// Checks both implications between the two kernels for `beta^2/2 < q_order`
/// and `|n| <= p_window`.
pub fn verify_k3_equivalence(q_order: u32, p_window: u32) -> Result<Report> {
    let mut report = Report::new("k3 equivalence")
        .order("q_order", q_order as i64)
        .order("p_window", p_window as i64)
        .assume("vw depends on the Mukai square only")
        .assume("vw vanishes for v^2 < -2");
    let order2 = 2 * q_order as i64;
    let w2 = 2 * p_window as i64;
    let tables = K3Tables::new(q_order + 1);
    let vw = |c: &_| tables.vw_from_kernel(c);
    let a = k3_pt_kernel(q_order + 1, p_window)?;

    // sheaf kernel => pair kernel, slice by slice
    let mut toda_bad = None;
    for d in -1..q_order as i64 {
        let slice = k3_toda(2 * d, p_window, &vw)?;
        let target = a.try_coeff(2 * d)?;
        if toda_bad.is_none() {
            if let Some(e) = slice.agrees_on(&target, -w2, w2)? {
                toda_bad = Some(Mismatch::new(format!("q^{d} p^{}", half(e)), slice.coeff(e)?, target.coeff(e)?));
            }
        }
    }
    report.check("Toda slices of the sheaf kernel", toda_bad);

    // the same implication through the Zagier sum
    let kernel = crate::special::goettsche::k3_kernel(q_order + 2);
    let via_zagier = kernel.mul(&zagier_sum(q_order + 2, p_window)).scale(&int(-1));
    report.check("sheaf kernel times Zagier sum", compare_qp(&via_zagier, &a, order2, w2)?);

    // pair kernel => sheaf kernel by solving the linear system
    let slices: BTreeMap<i64, PLaurent> = (-1..q_order as i64).map(|d| Ok((d, a.try_coeff(2 * d)?))).collect::<Result<_>>()?;
    let solved = k3_vw_from_pt_solve(&slices, p_window)?;
    let mut solve_bad = None;
    for (j, v) in &solved {
        let want = tables.kernel_coeff(*j)?;
        if *v != want {
            solve_bad = Some(Mismatch::new(format!("q^{j}"), v, &want));
            break;
        }
    }
    report.check("vw recovered from the pair kernel", solve_bad);

    report.check("t = 1 limit", compare_qp(&at_t1(&a)?, &unrefined_pt_kernel(q_order + 1, p_window)?, order2, w2)?);

    let base = k3_toda(4, p_window, &vw)?;
    let doubled = k3_toda(4, p_window, &|c| Ok(vw(c)?.scale(&int(2))))?;
    report.check_bool("Toda is linear in vw", doubled == base.scale(&int(2)));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plethysm::qint;
    use crate::series::TRat;

    #[test]
    fn leading_row() {
        let a = k3_pt_kernel(2, 4).unwrap();
        let row = a.coeff(-2);
        for n in 1..=4 {
            assert_eq!(row.coeff(2 * n).unwrap(), TRat::from_poly(qint(n as u32)).scale(&int(-1)));
        }
        assert!(row.coeff(0).unwrap().is_zero());
    }

    #[test]
    fn equivalence_at_small_order() {
        let r = verify_k3_equivalence(3, 4).unwrap();
        assert!(r.passed(), "{r} {:?}", r.details);
    }

    #[test]
    fn a_shifted_kernel_is_caught() {
        let tables = K3Tables::new(4);
        let a = k3_pt_kernel(4, 4).unwrap();
        let wrong = k3_toda(2, 4, &|c| tables.kernel_coeff(c.k3_square() / 2 + 1)).unwrap();
        assert!(wrong.agrees_on(&a.coeff(2), -8, 8).unwrap().is_some());
    }
}
