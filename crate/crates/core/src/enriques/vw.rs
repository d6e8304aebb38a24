//! Conjectural refined Vafa-Witten invariants and their stripped and
//! BPS-type variants.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mukai::MukaiClass;
use crate::multicover::{cover_strip, cover_sum, CoverWeight};
use crate::series::rational::int;
use crate::series::{QSeries, Ring, TPoly, TRat};
use crate::special::goettsche::goettsche_enriques;

/// Coefficients of the Enriques Hilbert-scheme series, looked up by
/// doubled index; fractional and negative indices give zero.
#[derive(Clone, Debug)]
pub struct HilbertTable {
    series: QSeries<TPoly>,
}

impl HilbertTable {
    pub fn new(order: u32) -> Self {
        HilbertTable { series: goettsche_enriques(order) }
    }

    pub fn chi_hat(&self, index2: i64) -> Result<TPoly> {
        if index2 < 0 || index2 % 2 != 0 {
            return Ok(TPoly::zero());
        }
        self.series.try_coeff(index2).map_err(|_| Error::InsufficientOrder {
            needed: format!("Hilbert index {}", index2 / 2),
            available: format!("{:?}", self.series.order().map(|o| o / 2)),
        })
    }

    /// `a(m) = 2 [prod ...]_{q^m}` at doubled `m`.
    pub fn a(&self, m2: i64) -> Result<TPoly> {
        Ok(self.chi_hat(m2)?.scale(&int(2)))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VWValue {
    pub cls: MukaiClass,
    pub value: TRat,
    pub polynomial: bool,
}

/// `2 sum_{k | v, k odd} 1/(k [k]_t) chi_{-t^k}(Hilb^{v^2/(2k^2) + 1/2})`.
pub fn vw_conjecture(h: &HilbertTable, cls: &MukaiClass) -> Result<VWValue> {
    let value = cover_sum(cls, CoverWeight::EnriquesOdd, &|w| Ok(TRat::from_poly(h.a(w.enriques_square() + 1)?)))?;
    Ok(VWValue { cls: *cls, polynomial: value.is_polynomial(), value })
}

/// The stripped invariant `vw(v)`, computed by inverting the odd-divisor
/// sum against [`vw_conjecture`].
pub fn vw_strip(h: &HilbertTable, cls: &MukaiClass) -> Result<TRat> {
    cover_strip(cls, CoverWeight::EnriquesOdd, &|c| Ok(vw_conjecture(h, c)?.value))
}

/// `a(v^2/2 + 1/2)`, the closed form `vw_strip` should reproduce.
pub fn vw_closed_form(h: &HilbertTable, cls: &MukaiClass) -> Result<TPoly> {
    h.a(cls.enriques_square() + 1)
}

/// BPS-type classes defined with the full divisor sum; `big` supplies the
/// VW invariants.
pub fn omega_no(cls: &MukaiClass, big: &dyn Fn(&MukaiClass) -> Result<TRat>) -> Result<TRat> {
    cover_strip(cls, CoverWeight::EnriquesAll, big)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enriques::chi_y;
    use crate::series::rational::rat;

    fn cls(r: i64, beta_sq: i64, beta_div: i64, n: i64) -> MukaiClass {
        MukaiClass::new(r, beta_sq, beta_div, n).unwrap()
    }

    #[test]
    fn spot_values() {
        let h = HilbertTable::new(6);
        let v = |c| vw_conjecture(&h, &c).unwrap().value;
        assert_eq!(v(cls(1, 0, 0, 0)), TRat::from_rational(int(2)));
        assert_eq!(v(cls(1, 0, 0, -1)), TRat::from_poly(chi_y().scale(&int(2))));
        assert_eq!(v(cls(2, 0, 0, 0)), TRat::zero());
        assert_eq!(vw_strip(&h, &cls(1, 0, 0, 0)).unwrap(), TRat::from_rational(int(2)));
        for n in 1..5 {
            assert!(vw_strip(&h, &cls(0, 0, 0, n)).unwrap().is_zero());
        }
    }

    #[test]
    fn divisible_class_needs_division_by_quantum_integers() {
        // v = 3 (1, 0, -1): v^2 = 9, both k = 1 and k = 3 contribute
        let h = HilbertTable::new(6);
        let c = cls(3, 0, 0, -3);
        let got = vw_conjecture(&h, &c).unwrap();
        let k1 = h.a(10).unwrap();
        let k3 = h.a(2).unwrap().substitute_power(3);
        let w3 = CoverWeight::EnriquesOdd.weight(3);
        assert_eq!(got.value, TRat::from_poly(k1).add(&w3.mul(&TRat::from_poly(k3))));
        assert!(got.value.is_palindromic());
        assert_eq!(vw_strip(&h, &c).unwrap(), TRat::from_poly(vw_closed_form(&h, &c).unwrap()));
    }

    #[test]
    fn omega_no_of_rank_two() {
        let h = HilbertTable::new(4);
        let big = |c: &MukaiClass| Ok(vw_conjecture(&h, c)?.value);
        assert_eq!(omega_no(&cls(1, 0, 0, 0), &big).unwrap(), TRat::from_rational(int(2)));
        let w = omega_no(&cls(2, 0, 0, 0), &big).unwrap();
        let expected = TRat::new(TPoly::from_rational(int(-1)), crate::plethysm::qint(2)).unwrap();
        assert_eq!(w, expected);
        assert_eq!(w.eval_at_one().unwrap(), rat(-1, 2));
    }
}
