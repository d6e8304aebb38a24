//! Vafa-Witten invariants of K3 and the two multiple-cover conventions:
//! `VW(v) = sum_{k | v} vw(v/k)(t^k) / [k]_t^2` for sheaves and
//! `PT_{n,beta} = sum_{k | (n, beta)} (-1)^{n - n/k} pt_{n/k, beta/k}(t^k) / [k]_t`
//! for stable pairs.

use crate::error::{Error, Result};
use crate::mukai::MukaiClass;
use crate::multicover::{cover_strip, cover_sum, CoverWeight};
use crate::plethysm::qint;
use crate::series::rational::{divisors, int};
use crate::series::{PLaurent, QSeries, Ring, TPoly, TRat};
use crate::special::goettsche::{goettsche_k3, k3_kernel};

/// The theta/eta kernel `(t^{1/2} - t^{-1/2})^2 / (Theta(t, q)^2 Delta(q))` and
/// the K3 Hilbert-scheme series, tabulated once.
#[derive(Clone, Debug)]
pub struct K3Tables {
    kernel: QSeries<PLaurent>,
    hilbert: QSeries<TPoly>,
}

impl K3Tables {
    /// Tables covering `v^2/2 < order`.
    pub fn new(order: u32) -> Self {
        K3Tables { kernel: k3_kernel(order), hilbert: goettsche_k3(order + 1) }
    }

    /// `[kernel]_{q^j}`, zero below `q^{-1}`.
    pub fn kernel_coeff(&self, j: i64) -> Result<TRat> {
        if j < -1 {
            return Ok(TRat::zero());
        }
        let c = self.kernel.try_coeff(2 * j).map_err(|_| Error::InsufficientOrder {
            needed: format!("kernel q^{j}"),
            available: format!("{:?}", self.kernel.order().map(|o| o / 2)),
        })?;
        c.coeff(0)
    }

    /// `chi_{-t}(Hilb^m K3)` at doubled index; fractional or negative
    /// indices give zero.
    pub fn hilbert_coeff(&self, m2: i64) -> Result<TPoly> {
        if m2 < 0 || m2 % 2 != 0 {
            return Ok(TPoly::zero());
        }
        self.hilbert.try_coeff(m2).map_err(|_| Error::InsufficientOrder {
            needed: format!("K3 Hilbert index {}", m2 / 2),
            available: format!("{:?}", self.hilbert.order().map(|o| o / 2)),
        })
    }

    /// `VW(v) = sum_{k | v} chi_{-t^k}(Hilb^{v^2/(2k^2) + 1}) / [k]_t^2`.
    pub fn k3_vw(&self, cls: &MukaiClass) -> Result<TRat> {
        cover_sum(cls, CoverWeight::K3, &|w| Ok(TRat::from_poly(self.hilbert_coeff(w.k3_square() + 2)?)))
    }

    /// `vw(v)` read off the kernel at `q^{v^2/2}`.
    pub fn vw_from_kernel(&self, cls: &MukaiClass) -> Result<TRat> {
        self.kernel_coeff(cls.k3_square() / 2)
    }

    /// `vw(v)` by stripping the multiple covers off [`K3Tables::k3_vw`].
    pub fn k3_strip(&self, cls: &MukaiClass) -> Result<TRat> {
        cover_strip(cls, CoverWeight::K3, &|c| self.k3_vw(c))
    }
}

/// A curve class and Euler characteristic for stable pairs, with `beta`
/// known through its square and divisibility.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairClass {
    pub beta_sq: i64,
    pub beta_div: i64,
    pub n: i64,
}

impl PairClass {
    pub fn new(beta_sq: i64, beta_div: i64, n: i64) -> Result<Self> {
        if beta_div <= 0 || beta_sq % (2 * beta_div * beta_div) != 0 {
            return Err(Error::InvalidClass(format!("beta^2 = {beta_sq} with divisibility {beta_div}")));
        }
        Ok(PairClass { beta_sq, beta_div, n })
    }

    fn divisors(&self) -> Vec<i64> {
        let g = num_integer::gcd(self.n, self.beta_div);
        divisors(g as u64).into_iter().map(|k| k as i64).collect()
    }

    fn divide(&self, k: i64) -> PairClass {
        PairClass { beta_sq: self.beta_sq / (k * k), beta_div: self.beta_div / k, n: self.n / k }
    }
}

/// `(-1)^{n - n/k} / [k]_t`.
pub fn pair_weight(n: i64, k: i64) -> TRat {
    let sign = if (n - n / k) % 2 == 0 { 1 } else { -1 };
    TRat::new(TPoly::constant(int(sign)), qint(k as u32)).expect("quantum integers are nonzero")
}

/// `PT` from `pt` on all divisors.
pub fn k3_pt_sum(cls: &PairClass, small: &dyn Fn(&PairClass) -> Result<TRat>) -> Result<TRat> {
    let mut acc = TRat::zero();
    for k in cls.divisors() {
        acc = acc.add(&pair_weight(cls.n, k).mul(&small(&cls.divide(k))?.substitute_power(k as u32)));
    }
    Ok(acc)
}

/// `pt` from `PT`, inverting [`k3_pt_sum`].
pub fn k3_pt_strip(cls: &PairClass, big: &dyn Fn(&PairClass) -> Result<TRat>) -> Result<TRat> {
    let mut acc = big(cls)?;
    for k in cls.divisors().into_iter().filter(|k| *k > 1) {
        let inner = k3_pt_strip(&cls.divide(k), big)?;
        acc = acc.sub(&pair_weight(cls.n, k).mul(&inner.substitute_power(k as u32)));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::goettsche::chi_k3;

    #[test]
    fn thomas_formula_in_low_degree() {
        let h = K3Tables::new(4);
        let one = |r, s, d, n| MukaiClass::new(r, s, d, n).unwrap();
        assert_eq!(h.k3_vw(&one(1, 0, 0, 0)).unwrap(), TRat::one());
        assert_eq!(h.k3_vw(&one(1, 0, 0, -1)).unwrap(), TRat::from_poly(chi_k3()));
        // (2, 0, 0): v^2 = -8, only k = 2 reaches index 0
        let expected = TRat::new(TPoly::one(), qint(2).mul(&qint(2))).unwrap();
        assert_eq!(h.k3_vw(&one(2, 0, 0, 0)).unwrap(), expected);
    }

    #[test]
    fn both_routes_to_vw_agree() {
        let h = K3Tables::new(12);
        for (r, s, d, n) in [(1, 0, 0, 0), (1, 2, 1, 0), (2, 8, 2, 0), (2, 8, 2, -2), (0, 8, 2, 2), (3, 18, 3, -3)] {
            let cls = MukaiClass::new(r, s, d, n).unwrap();
            let stripped = h.k3_strip(&cls).unwrap();
            assert_eq!(stripped, h.vw_from_kernel(&cls).unwrap(), "{cls:?}");
            assert!(h.k3_vw(&cls).unwrap().is_palindromic());
        }
    }

    #[test]
    fn pair_stripping() {
        let pt = |c: &PairClass| Ok(TRat::from_poly(qint((c.beta_sq / 2 + c.n + 3) as u32)));
        let prim = PairClass::new(4, 1, 3).unwrap();
        assert_eq!(k3_pt_sum(&prim, &pt).unwrap(), pt(&prim).unwrap());
        // beta = 2 beta_0, n = 2: PT = pt - pt_{1, beta_0}(t^2) / [2]_t
        let c = PairClass::new(8, 2, 2).unwrap();
        let half = PairClass::new(2, 1, 1).unwrap();
        let cover = pt(&half).unwrap().substitute_power(2).div(&TRat::from_poly(qint(2))).unwrap();
        let hand = pt(&c).unwrap().sub(&cover);
        let big = k3_pt_sum(&c, &pt).unwrap();
        assert_eq!(big, hand);
        assert_eq!(k3_pt_strip(&c, &|x| k3_pt_sum(x, &pt)).unwrap(), pt(&c).unwrap());
        // odd n only admits odd k, where the sign is +1
        assert_eq!(pair_weight(3, 3), TRat::new(TPoly::one(), qint(3)).unwrap());
        assert_eq!(pair_weight(2, 2).eval_at_one().unwrap(), int(-1) / int(2));
    }
}
