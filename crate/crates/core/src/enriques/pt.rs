//! The conjectural stable pair series on the sublattice spanned by the
//! half-fibers `s` and `f`, with `Q^s = Q_s` and `Q^f = q`.
//!
//! Classes `beta = a s + b f` with `a, b >= 0` not both zero are taken to
//! be the effective ones; `beta^2 = 2ab`.

use crate::error::Result;
use crate::plethysm::{pleth_exp2, pleth_log2};
use crate::series::rational::int;
use crate::series::{PLaurent, QSeries, Ring};

use super::omega::{omega_series, omega_unrefined_series};

pub const EFFECTIVE_CONE: &str = "beta = a s + b f is effective iff a, b >= 0 and (a, b) != (0, 0)";

/// Both forms of the series, as series in `Q_s` over series in `q`.
#[derive(Clone, Debug)]
pub struct PtSeries {
    pub k_max: u32,
    pub d_max: u32,
    /// `sum_beta sum_n pt_{n,beta} (-p)^n Q^beta = sum_beta sum_r 2 Omega(r, beta^2/2) p^r Q^beta`
    pub log_form: QSeries<QSeries<PLaurent>>,
    /// `sum_beta sum_n PT_{n,beta} (-p)^n Q^beta = Exp^(2)(log_form)`
    pub pt: QSeries<QSeries<PLaurent>>,
}

/// The `Q_s^k` slice of the exponential form.
#[derive(Clone, Debug, PartialEq)]
pub struct PTSlice {
    pub s_degree: u32,
    pub series: QSeries<PLaurent>,
}

impl PtSeries {
    /// `sum_n PT_{n, a s + b f} (-p)^n`.
    pub fn pt_slice(&self, a: u32, b: u32) -> PLaurent {
        self.pt.coeff(2 * a as i64).coeff(2 * b as i64)
    }

    /// `sum_n pt_{n, a s + b f} (-p)^n`.
    pub fn log_slice(&self, a: u32, b: u32) -> PLaurent {
        self.log_form.coeff(2 * a as i64).coeff(2 * b as i64)
    }

    pub fn slices(&self) -> Vec<PTSlice> {
        (0..=self.k_max).map(|k| PTSlice { s_degree: k, series: self.pt.coeff(2 * k as i64) }).collect()
    }

    /// `Log^(2)` of the exponential form, for round-trip checks.
    pub fn recovered_log_form(&self) -> Result<QSeries<QSeries<PLaurent>>> {
        pleth_log2(&self.pt)
    }
}

fn assemble(omega: &QSeries<PLaurent>, k_max: u32, d_max: u32) -> Result<PtSeries> {
    let inner_order = 2 * (d_max as i64 + 1);
    let mut outer = Vec::new();
    for a in 0..=k_max as i64 {
        let row = (0..=d_max as i64).filter(|b| a + b > 0).map(|b| (2 * b, omega.coeff(2 * a * b).scale(&int(2))));
        outer.push((2 * a, QSeries::from_terms(row, inner_order)));
    }
    let log_form = QSeries::from_terms(outer, 2 * (k_max as i64 + 1));
    let pt = pleth_exp2(&log_form)?;
    Ok(PtSeries { k_max, d_max, log_form, pt })
}

/// Refined series from the `Omega` product.
pub fn pt_conjecture(k_max: u32, d_max: u32) -> Result<PtSeries> {
    let omega = omega_series(k_max * d_max + 1)?;
    assemble(&omega, k_max, d_max)
}

/// The unrefined series from the `omega` product.
pub fn pt_unrefined(k_max: u32, d_max: u32) -> Result<PtSeries> {
    let omega = omega_unrefined_series(k_max * d_max + 1);
    assemble(&omega, k_max, d_max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enriques::omega::specialize_t1;

    #[test]
    fn first_slices() {
        let s = pt_conjecture(1, 2).unwrap();
        // beta = f: only 2 Omega(0, 0) = 2 and no p-dependence
        assert_eq!(s.log_slice(0, 1), PLaurent::from_rational(int(2)));
        let golden = PLaurent::from_monomials([
            (-2, -1, int(2)),
            (-2, 1, int(2)),
            (0, -2, int(2)),
            (0, 0, int(24)),
            (0, 2, int(2)),
            (2, -1, int(2)),
            (2, 1, int(2)),
        ]);
        assert_eq!(s.pt_slice(1, 1), golden);
        for (_, c) in s.pt_slice(1, 2).terms() {
            assert!(c.is_palindromic());
            assert!(c.is_polynomial());
        }
    }

    #[test]
    fn log2_round_trip_and_unrefined_limit() {
        let s = pt_conjecture(2, 3).unwrap();
        assert_eq!(s.recovered_log_form().unwrap(), s.log_form);
        let u = pt_unrefined(2, 3).unwrap();
        for a in 0..=2 {
            for b in 0..=3 {
                assert_eq!(specialize_t1(&s.pt_slice(a, b)).unwrap(), u.pt_slice(a, b), "({a}, {b})");
            }
        }
    }

    #[test]
    fn log_slices_depend_on_the_square_only() {
        let s = pt_conjecture(2, 2).unwrap();
        let pt = s.recovered_log_form().unwrap();
        assert_eq!(pt.coeff(4).coeff(2), pt.coeff(2).coeff(4));
    }
}
