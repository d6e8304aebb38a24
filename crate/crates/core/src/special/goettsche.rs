//! Generating series of normalized chi_y-genera of Hilbert schemes of points.

use crate::plethysm::pleth_exp;
use crate::series::rational::int;
use crate::series::{PLaurent, QSeries, TPoly};

use super::word::{JacobiWord, Mono};

/// `Exp(chi * sum_{m>=1} q^m)`, known below `q^order`.
fn hilbert_series(chi: TPoly, order: u32) -> QSeries<TPoly> {
    let n = 2 * order as i64;
    let arg = QSeries::from_terms((1..order as i64).map(|m| (2 * m, chi.clone())), n);
    pleth_exp(&arg).expect("argument has no constant term")
}

/// `t^{-1} + 10 + t`, the normalized chi_{-t} genus of an Enriques surface.
pub fn chi_enriques() -> TPoly {
    TPoly::from_terms([(-2, int(1)), (0, int(10)), (2, int(1))])
}

/// `2t^{-1} + 20 + 2t` for a K3 surface.
pub fn chi_k3() -> TPoly {
    TPoly::from_terms([(-2, int(2)), (0, int(20)), (2, int(2))])
}

/// `sum_n chi_{-t}(Hilb^n Y) q^n = prod_m 1/((1 - t^{-1} q^m)(1 - q^m)^10 (1 - t q^m))`.
pub fn goettsche_enriques(order: u32) -> QSeries<TPoly> {
    hilbert_series(chi_enriques(), order)
}

/// `prod_m 1/((1 - t^{-1} q^m)^2 (1 - q^m)^20 (1 - t q^m)^2)`, the K3 analogue
/// without the leading `q^{-1}`.
pub fn goettsche_k3(order: u32) -> QSeries<TPoly> {
    hilbert_series(chi_k3(), order)
}

/// `(t^{1/2} - t^{-1/2})^2 / (Theta(t, q)^2 Delta(q))`, which starts at `q^{-1}`.
pub fn k3_kernel(order: u32) -> QSeries<PLaurent> {
    JacobiWord::new(int(1)).gap(Mono::T, 2).theta(Mono::T, 1, -2).eta(1, -24).eval(2 * order as i64, 0).expect("prefactors cancel")
}

/// Lifts a `t`-polynomial series into `p`-Laurent coefficients.
pub fn lift(s: &QSeries<TPoly>) -> QSeries<PLaurent> {
    s.map_coeffs(|c| PLaurent::from(c.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::Ring;
    use crate::special::word::linear_factor_power;

    fn brute(exps: [i32; 3], order: u32) -> QSeries<PLaurent> {
        let n = 2 * order as i64;
        let mut acc = QSeries::constant(PLaurent::one()).truncate(n);
        for m in 1..order as i64 {
            for (x, e) in [(Mono::new(-2, 0), exps[0]), (Mono::new(0, 0), exps[1]), (Mono::T, exps[2])] {
                acc = acc.mul(&linear_factor_power(x, 2 * m, -e, n));
            }
        }
        acc
    }

    #[test]
    fn enriques_series_matches_product() {
        let g = goettsche_enriques(7);
        assert_eq!(lift(&g), brute([1, 10, 1], 7));
        assert_eq!(g.coeff(0), TPoly::one());
        assert_eq!(g.coeff(2), chi_enriques());
    }

    #[test]
    fn coefficients_are_palindromic_and_nonnegative() {
        for g in [goettsche_enriques(8), goettsche_k3(8)] {
            for (_, c) in g.terms() {
                assert!(c.is_palindromic());
                assert!(c.has_nonnegative_integer_coeffs());
            }
        }
    }

    #[test]
    fn unrefined_limits() {
        // prod (1 - q^n)^{-12} and ^{-24}: partition-convolution oracle
        fn oracle(k: i64, n: usize) -> Vec<i64> {
            let mut c = vec![0i64; n];
            c[0] = 1;
            for m in 1..n {
                for _ in 0..k {
                    for i in m..n {
                        c[i] += c[i - m];
                    }
                }
            }
            c
        }
        let e = oracle(12, 8);
        let k = oracle(24, 8);
        let g = goettsche_enriques(8);
        let h = goettsche_k3(8);
        for i in 0..8 {
            assert_eq!(g.coeff(2 * i as i64).eval_at_one(), int(e[i]));
            assert_eq!(h.coeff(2 * i as i64).eval_at_one(), int(k[i]));
        }
        assert_eq!(e[3], 520);
    }

    #[test]
    fn k3_series_is_the_theta_delta_kernel() {
        let kernel = k3_kernel(8);
        assert_eq!(kernel.valuation(), Some(-2));
        assert_eq!(kernel.shift(2), lift(&goettsche_k3(9)));
        assert_eq!(goettsche_k3(3).coeff(2), chi_k3());
    }
}
