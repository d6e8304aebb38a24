//! Dedekind eta and the discriminant.

use num_rational::Ratio;

use crate::series::rational::{int, Rational};
use crate::series::{QSeries, Ring};

/// `eta(q) = q^{1/24} prod_{n>=1} (1 - q^n)`, known below `q^order`.
///
/// Built from Euler's pentagonal series `sum_k (-1)^k q^{k(3k-1)/2}`.
pub fn eta(order: u32) -> QSeries<Rational> {
    let n = order as i64;
    let mut terms = Vec::new();
    let mut k: i64 = 0;
    loop {
        let mut any = false;
        for kk in if k == 0 { vec![0] } else { vec![k, -k] } {
            let e = kk * (3 * kk - 1) / 2;
            if e < n {
                any = true;
                terms.push((2 * e, int(if kk % 2 == 0 { 1 } else { -1 })));
            }
        }
        if !any {
            break;
        }
        k += 1;
    }
    QSeries::from_terms(terms, 2 * n).with_offset(Ratio::new(1, 24))
}

/// `eta(q^j)^e` for any integer `e`, known below `q^order` after the
/// offset is folded in.
pub fn eta_power(j: u32, e: i32, order: u32) -> QSeries<Rational> {
    // the prefactor q^{j e / 24} may move the series down by whole steps
    let margin = (j as i64 * e.unsigned_abs() as i64) / 24 + 1;
    let base = eta(order.div_ceil(j) + margin as u32).substitute_power(j);
    let base = if e < 0 { base.inverse().expect("eta is a unit") } else { base };
    base.pow(e.unsigned_abs()).truncate(2 * order as i64)
}

/// `Delta(q) = eta(q)^24 = q prod (1 - q^n)^24`.
pub fn delta(order: u32) -> QSeries<Rational> {
    eta(order).pow(24).truncate(2 * order as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::qseries::rational_series;

    fn product_oracle(n: usize) -> Vec<i64> {
        let mut c = vec![0i64; n];
        c[0] = 1;
        for m in 1..n {
            for i in (m..n).rev() {
                c[i] -= c[i - m];
            }
        }
        c
    }

    #[test]
    fn pentagonal_matches_product() {
        let e = eta(30);
        assert_eq!(e.offset(), Ratio::new(1, 24));
        let expected = product_oracle(30);
        assert_eq!(e, rational_series(&expected).with_offset(Ratio::new(1, 24)));
    }

    #[test]
    fn delta_coefficients() {
        let d = delta(5);
        assert_eq!(d.offset(), Ratio::new(0, 1));
        assert_eq!(d.coeff(2), int(1));
        assert_eq!(d.coeff(4), int(-24));
        assert_eq!(d.coeff(6), int(252));
        assert_eq!(d.coeff(8), int(-1472));
    }

    #[test]
    fn eta_quotient_offsets() {
        let a = eta_power(2, 8, 6).mul(&eta_power(1, -4, 6));
        assert_eq!(a.offset(), Ratio::new(0, 1));
        assert_eq!(a.valuation(), Some(1));
    }
}
