//! Eisenstein series `G_k = -B_k/(2k) + sum_n sigma_{k-1}(n) q^n`.
//!
//! This is the normalization in which
//! `Theta(e^z, q) = z exp(-2 sum_{k>=2} G_k z^k / k!)`; the check lives
//! with the epsilon expansion.

use crate::error::{Error, Result};
use crate::series::rational::{bernoulli, sigma, Rational};
use crate::series::QSeries;

pub fn eisenstein_g(k: u32, order: u32) -> Result<QSeries<Rational>> {
    if k < 2 || !k.is_multiple_of(2) {
        return Err(Error::OddWeight(k));
    }
    let constant = -bernoulli(k as usize) / Rational::from_integer((2 * k).into());
    let terms = std::iter::once((0, constant)).chain((1..order as u64).map(|n| (2 * n as i64, Rational::from_integer(sigma(k - 1, n)))));
    Ok(QSeries::from_terms(terms, 2 * order as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rational::{int, rat};
    use crate::series::Ring;

    #[test]
    fn low_coefficients() {
        let g2 = eisenstein_g(2, 5).unwrap();
        assert_eq!(g2.coeff(0), rat(-1, 24));
        assert_eq!(g2.coeff(2), int(1));
        assert_eq!(g2.coeff(8), int(7));
        let g4 = eisenstein_g(4, 3).unwrap();
        assert_eq!(g4.coeff(0), rat(1, 240));
        assert_eq!(g4.coeff(4), int(9));
        assert!(matches!(eisenstein_g(3, 3), Err(Error::OddWeight(3))));
    }

    #[test]
    fn g4_squared_is_g8() {
        // weight 8 is one-dimensional at level one
        let g4 = eisenstein_g(4, 8).unwrap();
        let g8 = eisenstein_g(8, 8).unwrap();
        let ratio = g4.coeff(0).pow(2) / g8.coeff(0);
        assert_eq!(g4.pow(2), g8.scale(&ratio));
    }
}
