//! Quantum integers and the plethystic calculus.
//!
//! `Exp(f) = exp(sum_k psi_k(f) / k)` where `psi_k` raises every tracked
//! variable (including `t`) to the k-th power. The modified version keeps
//! only odd `k`, which equals `Exp(f - psi_2(f)/2)`.

use crate::error::{Error, Result};
use crate::series::rational::{self, int, Rational};
use crate::series::{QSeries, Ring, TPoly};

/// Cap on the number of Adams operations summed before giving up.
const MAX_ADAMS: u32 = 4096;

/// The quantum integer `[n]_t = t^{-(n-1)/2} + ... + t^{(n-1)/2}`.
pub fn qint(n: u32) -> TPoly {
    let n = n as i64;
    TPoly::from_terms((0..n).map(|i| (2 * i - (n - 1), int(1))))
}

/// `[n]_t` for signed `n`, with `[-n]_t = -[n]_t`.
pub fn qint_signed(n: i64) -> TPoly {
    let q = qint(n.unsigned_abs() as u32);
    if n < 0 {
        q.neg()
    } else {
        q
    }
}

/// `sum_{k in ks} weight(k) * psi_k(f)`, stopping once `psi_k(f)` vanishes
/// below the order of `f`.
fn adams_sum<C: Ring>(f: &QSeries<C>, odd_only: bool, weight: impl Fn(u32) -> Rational) -> Result<QSeries<C>> {
    let order = f.raw_order();
    let mut acc = QSeries::<C>::zero_to(order);
    let mut k = 1;
    loop {
        let term = f.adams_series(k);
        if term.is_zero() {
            return Ok(acc);
        }
        if k > MAX_ADAMS {
            return Err(Error::NonZeroConstantTerm("Adams operations do not converge; the argument has a constant term".into()));
        }
        let w = weight(k);
        if !w.is_zero() {
            acc = acc.add(&term.scale(&w));
        }
        k += if odd_only { 2 } else { 1 };
    }
}

fn check_no_constant<C: Ring>(f: &QSeries<C>) -> Result<()> {
    if f.valuation().is_some_and(|v| v < 0) || *f.offset().numer() != 0 {
        return Err(Error::Unsupported("plethysm needs a power series in q".into()));
    }
    Ok(())
}

/// Plethystic exponential.
pub fn pleth_exp<C: Ring>(f: &QSeries<C>) -> Result<QSeries<C>> {
    check_no_constant(f)?;
    adams_sum(f, false, |k| rational::rat(1, k as i64))?.exp()
}

/// Plethystic logarithm, the inverse of [`pleth_exp`].
pub fn pleth_log<C: Ring>(g: &QSeries<C>) -> Result<QSeries<C>> {
    let l = g.log()?;
    adams_sum(&l, false, |k| rational::rat(rational::mobius(k as u64), k as i64))
}

/// Modified plethystic exponential via the odd Adams operations.
pub fn pleth_exp2<C: Ring>(f: &QSeries<C>) -> Result<QSeries<C>> {
    check_no_constant(f)?;
    adams_sum(f, true, |k| rational::rat(1, k as i64))?.exp()
}

/// Modified plethystic exponential as `Exp(f - psi_2(f)/2)`.
pub fn pleth_exp2_via_exp<C: Ring>(f: &QSeries<C>) -> Result<QSeries<C>> {
    check_no_constant(f)?;
    let half = rational::rat(1, 2);
    let g = f.sub(&f.adams_series(2).scale(&half));
    pleth_exp(&g)
}

/// Inverse of [`pleth_exp2`]: Möbius inversion over odd `k` applied to the
/// ordinary logarithm.
pub fn pleth_log2<C: Ring>(g: &QSeries<C>) -> Result<QSeries<C>> {
    let l = g.log()?;
    adams_sum(&l, true, |k| rational::rat(rational::mobius(k as u64), k as i64))
}

/// Inverse of [`pleth_exp2`] by order-by-order matching: the coefficient
/// of `q^e` in `Exp2(f)` is `f_e` plus terms determined by lower ones.
pub fn pleth_log2_iterative<C: Ring>(g: &QSeries<C>) -> Result<QSeries<C>> {
    let order = g.order().ok_or_else(|| Error::InsufficientOrder { needed: "finite order".into(), available: "exact".into() })?;
    if g.valuation() != Some(0) || !g.coeff(0).is_one() {
        return Err(Error::NonUnitConstantTerm("expected constant term 1".into()));
    }
    let mut f = QSeries::<C>::zero_to(order);
    for e in 1..order {
        let current = pleth_exp2(&f)?;
        let diff = g.coeff(e).sub(&current.coeff(e));
        if !diff.is_zero() {
            f = f.add(&QSeries::monomial(e, diff, order));
        }
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::qseries::rational_series;
    use crate::series::rational::rat;

    #[test]
    fn quantum_integers() {
        assert!(qint(0).is_zero());
        assert!(qint(1).is_one());
        assert_eq!(qint(4).to_string(), "t^(-3/2) + t^(-1/2) + t^(1/2) + t^(3/2)");
        assert_eq!(qint(3).substitute_power(2).to_string(), "t^-2 + 1 + t^2");
    }

    #[test]
    fn exp_of_q_is_geometric() {
        let q = rational_series(&[0, 1, 0, 0, 0, 0, 0, 0]);
        let e = pleth_exp(&q).unwrap();
        assert_eq!(e.integral_coeffs(8), vec![int(1); 8]);
        assert_eq!(pleth_log(&e).unwrap(), q);
    }

    #[test]
    fn exp2_of_q_squares_to_ratio() {
        let n = 10;
        let mut c = vec![0; n];
        c[1] = 1;
        let q = rational_series(&c);
        let e = pleth_exp2(&q).unwrap();
        let sq = e.mul(&e);
        // (1+q)/(1-q) = 1 + 2q + 2q^2 + ...
        let mut expected = vec![int(2); n];
        expected[0] = int(1);
        assert_eq!(sq.integral_coeffs(n), expected);
        assert_eq!(pleth_exp2_via_exp(&q).unwrap(), e);
    }

    #[test]
    fn log_of_eta_power() {
        let n = 10;
        let mut prod = rational_series(&vec![0; n]).add(&QSeries::one());
        for m in 1..n {
            let mut c = vec![0; n];
            c[0] = 1;
            c[m] = -1;
            prod = prod.mul(&rational_series(&c).inverse().unwrap());
        }
        let p12 = prod.pow(12);
        let l = pleth_log(&p12).unwrap();
        for k in 1..n {
            assert_eq!(l.coeff(2 * k as i64), int(12));
        }
        assert!(l.coeff(0).is_zero());
    }

    #[test]
    fn log2_routes_agree() {
        let f = rational_series(&[0, 2, -1, 3, 0, rat(1, 1).numer().try_into().unwrap(), 4, 0, 1, 2]);
        let g = pleth_exp2(&f).unwrap();
        assert_eq!(pleth_log2(&g).unwrap(), f);
        assert_eq!(pleth_log2_iterative(&g).unwrap(), f);
    }
}
