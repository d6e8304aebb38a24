//! The generating series of `Omega(r, n)` and its unrefined shadow
//! `omega(r, n)`.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::plethysm::pleth_exp;
use crate::series::rational::{int, Rational};
use crate::series::{PLaurent, QSeries, Ring, TPoly, TRat};
use crate::special::word::{linear_factor_power, Mono};

/// `sum Omega(r, n) p^r q^n` below `q^order`, as the plethystic
/// exponential of
/// `sum_{m odd} (t^{+-1/2} p^{+-1} + 2 + t^{-1} + t) q^m + sum_m 8 q^m`.
pub fn omega_series(order: u32) -> Result<QSeries<PLaurent>> {
    let n = 2 * order as i64;
    let odd = PLaurent::from_monomials([
        (-2, -1, int(1)),
        (-2, 1, int(1)),
        (2, -1, int(1)),
        (2, 1, int(1)),
        (0, 0, int(2)),
        (0, -2, int(1)),
        (0, 2, int(1)),
    ]);
    let eight = PLaurent::from_rational(int(8));
    let terms = (1..order as i64).map(|m| (2 * m, if m % 2 == 1 { odd.add(&eight) } else { eight.clone() }));
    pleth_exp(&QSeries::from_terms(terms, n))
}

/// `sum omega(r, n) p^r q^n`, multiplied out factor by factor.
pub fn omega_unrefined_series(order: u32) -> QSeries<PLaurent> {
    let n = 2 * order as i64;
    let mut acc = QSeries::constant(PLaurent::one()).truncate(n);
    for m in 1..order as i64 {
        let mut factors = vec![(Mono::new(0, 0), -8)];
        if m % 2 == 1 {
            factors.extend([(Mono::new(0, -2), -2), (Mono::new(0, 0), -4), (Mono::new(0, 2), -2)]);
        }
        for (x, e) in factors {
            acc = acc.mul(&linear_factor_power(x, 2 * m, e, n));
        }
    }
    acc
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct OmegaTable {
    pub refined: BTreeMap<(i64, i64), TPoly>,
    pub unrefined: BTreeMap<(i64, i64), Rational>,
}

impl OmegaTable {
    pub fn refined_at(&self, r: i64, n: i64) -> TPoly {
        self.refined.get(&(r, n)).cloned().unwrap_or_default()
    }

    pub fn unrefined_at(&self, r: i64, n: i64) -> Rational {
        self.unrefined.get(&(r, n)).cloned().unwrap_or_else(|| int(0))
    }
}

/// `Omega(r, n)` and `omega(r, n)` for `|r| <= r_max`, `0 <= n <= n_max`.
pub fn omega_tables(r_max: u32, n_max: u32) -> Result<OmegaTable> {
    let refined_series = omega_series(n_max + 1)?;
    let unrefined_series = omega_unrefined_series(n_max + 1);
    let mut table = OmegaTable::default();
    for n in 0..=n_max as i64 {
        let (a, b) = (refined_series.coeff(2 * n), unrefined_series.coeff(2 * n));
        for r in -(r_max as i64)..=r_max as i64 {
            let c = a.coeff(2 * r)?;
            if !c.is_zero() {
                table.refined.insert((r, n), c.as_poly().cloned().expect("product coefficients are polynomial"));
            }
            let u = b.coeff(2 * r)?;
            if !u.is_zero() {
                table.unrefined.insert((r, n), u.eval_at_one()?);
            }
        }
    }
    Ok(table)
}

/// `t = 1` specialization of every `p`-coefficient.
pub fn specialize_t1(c: &PLaurent) -> Result<PLaurent> {
    let mut r = PLaurent::new();
    for (e, v) in c.eval_t1()? {
        r.add_term(e, TRat::from_rational(v));
    }
    Ok(match c.precision() {
        Some(p) => r.truncate(p),
        None => r,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enriques::chi_y;

    #[test]
    fn low_entries() {
        let t = omega_tables(4, 6).unwrap();
        assert_eq!(t.refined_at(0, 0), TPoly::one());
        assert_eq!(t.refined_at(0, 1), chi_y());
        assert_eq!(t.unrefined_at(1, 1), int(2));
        assert_eq!(t.unrefined_at(0, 1), int(12));
    }

    #[test]
    fn symmetric_and_unrefined_limit() {
        let t = omega_tables(5, 6).unwrap();
        for (&(r, n), c) in &t.refined {
            assert_eq!(t.refined_at(-r, n), *c);
            assert!(c.is_palindromic());
            assert_eq!(c.eval_at_one(), t.unrefined_at(r, n), "Omega({r},{n}) at t = 1");
        }
        assert_eq!(t.refined.len(), t.unrefined.len());
    }
}
