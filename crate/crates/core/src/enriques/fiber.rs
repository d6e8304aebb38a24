//! Multiples of the half-fiber: `sum_d PT_{df,0} q^d` and the stripped
//! invariants `vw(r, df, 0)` it determines.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::plethysm::{pleth_exp, pleth_log2, qint};
use crate::report::{Mismatch, Report};
use crate::series::rational::{int, rat, Rational};
use crate::series::{QSeries, Ring, TRat};

/// `prod_{m>=1} (1 - q^{2m}) / (1 - q^m)^2` by multiplying out the factors.
pub fn fiber_pt_series(order: u32) -> QSeries<Rational> {
    let n = 2 * order as i64;
    let mut acc = QSeries::constant(int(1)).truncate(n);
    for m in 1..order as i64 {
        let two_m = QSeries::from_terms([(0, int(1)), (4 * m, int(-1))], n);
        // 1/(1 - q^m) as a geometric series
        let geometric = QSeries::from_terms((0..).map(|j| 2 * m * j).take_while(|e| *e < n).map(|e| (e, int(1))), n);
        acc = acc.mul(&two_m).mul(&geometric).mul(&geometric);
    }
    acc
}

/// `prod_m (1 - q^{2m})^4 / (1 - q^m)^2 * Exp(3 q^2 / (1 - q^2))`, the
/// product obtained by localization on the two fixed points.
pub fn fiber_localization_chain(order: u32) -> Result<QSeries<Rational>> {
    let n = 2 * order as i64;
    // prod (1 - q^{2m})^4 / (1 - q^m)^2 = Exp(sum_m 2 q^m - 4 q^{2m})
    let mut arg = QSeries::zero_to(n);
    for m in 1..order as i64 {
        arg = arg.add(&QSeries::monomial(2 * m, int(2), n));
        arg = arg.add(&QSeries::monomial(4 * m, int(-4), n));
    }
    let three = QSeries::from_terms((1..).map(|j| 4 * j).take_while(|e| *e < n).map(|e| (e, int(3))), n);
    pleth_exp(&arg.add(&three))
}

/// The weight bracket of the localization, which should be the constant 3:
/// `(tu + 2t + 2u + 1)/((t+1)(u+1)) + (t/u + 2t + 2/u + 1)/((t+1)(1/u+1))`.
pub fn localization_bracket(t: &Rational, u: &Rational) -> Result<Rational> {
    let one = int(1);
    let two = int(2);
    let den1 = (t + &one) * (u + &one);
    let ui = one.clone() / u;
    let den2 = (t + &one) * (&ui + &one);
    if den1 == int(0) || den2 == int(0) {
        return Err(Error::Unsupported("bracket evaluated at a pole".into()));
    }
    let num1 = t * u + &two * t + &two * u + &one;
    let num2 = t * &ui + &two * t + &two * &ui + &one;
    Ok(num1 / den1 + num2 / den2)
}

/// Checks the bracket at a grid of points; its numerator after clearing
/// denominators has degree at most 3 in each variable, so a 5 x 5 grid
/// proves the identity.
pub fn bracket_is_three() -> Result<bool> {
    let pts: Vec<Rational> = [2, 3, 5, 7, 11].iter().map(|&n| rat(n, 3)).collect();
    for t in &pts {
        for u in &pts {
            if localization_bracket(t, u)? != int(3) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Solves `sum_{r | d} (-1)^{r-1} [r]_t x_r = c_d` for `x_r = vw(r, df, 0)`,
/// which does not depend on `d`, given `c_d` for `d = 1..=r_max`.
pub fn fiber_vw_extract(log2_coeffs: &[Rational], r_max: u32) -> Result<BTreeMap<u32, TRat>> {
    let mut x: BTreeMap<u32, TRat> = BTreeMap::new();
    for d in 1..=r_max {
        let c = log2_coeffs
            .get(d as usize - 1)
            .ok_or_else(|| Error::InsufficientOrder { needed: format!("q^{d}"), available: format!("q^{}", log2_coeffs.len()) })?;
        let mut rest = TRat::from_rational(c.clone());
        for r in (1..d).filter(|r| d % r == 0) {
            rest = rest.sub(&signed_qint(r).mul(&x[&r]));
        }
        x.insert(d, rest.div(&signed_qint(d))?);
    }
    Ok(x)
}

fn signed_qint(r: u32) -> TRat {
    let s = if r % 2 == 1 { int(1) } else { int(-1) };
    TRat::from_poly(qint(r)).scale(&s)
}

/// Everything about the fiber classes at once, up to `q^order` and ranks
/// up to `r_max`.
pub fn verify_fiber(order: u32, r_max: u32) -> Result<Report> {
    let mut report = Report::new("fiber classes").order("q", order as i64).order("r", r_max as i64);
    let product = fiber_pt_series(order + 1);
    let chain = fiber_localization_chain(order + 1)?;
    report.check(
        "product equals the localization chain",
        product.first_difference(&chain).map(|e| Mismatch::new(format!("q^{}", crate::report::half(e)), product.coeff(e), chain.coeff(e))),
    );
    report.check_bool("localization bracket is 3", bracket_is_three()?);
    let log2 = pleth_log2(&product)?;
    let cs: Vec<Rational> = (1..=order as i64).map(|d| log2.coeff(2 * d)).collect();
    let bad = cs.iter().position(|c| *c != int(2));
    report.check("Log2 is 2 in every degree", bad.map(|i| Mismatch::new(format!("q^{}", i + 1), cs[i].clone(), int(2))));
    let x = fiber_vw_extract(&cs, r_max.min(order))?;
    for (r, v) in &x {
        let want = if *r == 1 { TRat::from_rational(int(2)) } else { TRat::zero() };
        if *v != want {
            report.check("vw(r, df, 0) = 2 delta_{r,1}", Some(Mismatch::new(format!("r = {r}"), v, &want)));
            return Ok(report);
        }
    }
    report.check("vw(r, df, 0) = 2 delta_{r,1}", None);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enriques::vw::{vw_strip, HilbertTable};
    use crate::mukai::MukaiClass;

    #[test]
    fn first_coefficients() {
        // (1 - q^2)/(1 - q)^2 (1 - q^4)/(1 - q^2)^2 ... = 1 + 2q + 4q^2 + ...
        let s = fiber_pt_series(4);
        assert_eq!(s.coeff(2), int(2));
        assert_eq!(s.coeff(4), int(4));
    }

    #[test]
    fn all_checks_pass() {
        let r = verify_fiber(12, 6).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn extraction_agrees_with_the_conjectural_formula() {
        let h = HilbertTable::new(3);
        let x = fiber_vw_extract(&vec![int(2); 6], 6).unwrap();
        for r in 1..=6 {
            let cls = MukaiClass::new(r, 0, r, 0).unwrap();
            assert_eq!(vw_strip(&h, &cls).unwrap(), x[&(r as u32)], "r = {r}");
        }
    }

    #[test]
    fn bracket_detects_a_wrong_constant() {
        assert_ne!(localization_bracket(&int(2), &int(5)).unwrap(), int(2));
    }
}
