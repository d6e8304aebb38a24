//! The Jacobi theta function
//! `Theta(x, q) = (x^{1/2} - x^{-1/2}) prod_m (1 - x q^m)(1 - x^{-1} q^m) / (1 - q^m)^2`.

use crate::error::Result;
use crate::series::rational::int;
use crate::series::{PLaurent, QSeries};

use super::word::{JacobiWord, Mono};

/// `Theta(p, q)` known below `q^order`, exact in `p`.
pub fn theta(order: u32) -> QSeries<PLaurent> {
    theta_at_t(Mono::P, 1, order).expect("Theta(p, q) has an integral prefactor")
}

/// `Theta(x, q^{q_power})` for a monomial argument `x` in `t^{1/2}, p^{1/2}`.
///
/// Fails with a quarter-exponent error when `x^{1/2}` is not a monomial in
/// `t^{1/2}, p^{1/2}`, e.g. for `x = t^{1/2} p`; such factors only make
/// sense paired up inside a [`JacobiWord`].
pub fn theta_at_t(arg: Mono, q_power: u32, order: u32) -> Result<QSeries<PLaurent>> {
    JacobiWord::new(int(1)).theta(arg, q_power, 1).eval(2 * order as i64, 0)
}

/// The product part `Theta(x, q^j) / (x^{1/2} - x^{-1/2})`, always defined.
pub fn theta_product(arg: Mono, q_power: u32, order: u32) -> QSeries<PLaurent> {
    JacobiWord::new(int(1)).theta(arg, q_power, 1).gap(arg, -1).eval(2 * order as i64, 0).expect("no prefactor left")
}
