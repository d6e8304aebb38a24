//! Zero-dimensional sheaves: the point series determines `vw(0, 0, n)`
//! through `sum_n chi(Hilb^n X) (-p)^n = exp(-sum_n [n]_t vw(0,0,n) p^n)`.

use crate::error::Result;
use crate::plethysm::qint;
use crate::series::rational::int;
use crate::series::{QSeries, Ring, TRat};

/// `vw(0, 0, n)` for `n = 1..=order` from the point series, written as a
/// series in `p` (the role of `q` in [`QSeries`]) known past `p^order`.
pub fn points_vw_extract(series: &QSeries<TRat>, order: u32) -> Result<Vec<TRat>> {
    let log = series.truncate(2 * order as i64 + 2).log()?;
    (1..=order as i64).map(|n| log.try_coeff(2 * n)?.scale(&int(-1)).div(&TRat::from_poly(qint(n as u32)))).collect()
}

/// The point series of a local Enriques surface, which is identically 1.
pub fn enriques_point_series() -> QSeries<TRat> {
    QSeries::constant(TRat::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enriques::vw::{vw_conjecture, HilbertTable};
    use crate::mukai::MukaiClass;

    #[test]
    fn all_vanish() {
        let vw = points_vw_extract(&enriques_point_series(), 5).unwrap();
        assert_eq!(vw.len(), 5);
        assert!(vw.iter().all(TRat::is_zero));
    }

    #[test]
    fn a_perturbation_is_seen() {
        let eps = TRat::from_rational(int(3));
        let s = QSeries::from_terms([(0, TRat::one()), (2, eps)], crate::series::EXACT);
        let vw = points_vw_extract(&s, 3).unwrap();
        assert_eq!(vw[0], TRat::from_rational(int(-3)));
        assert!(!vw[1].is_zero());
    }

    #[test]
    fn conjectural_formula_agrees() {
        let h = HilbertTable::new(4);
        for n in 1..=5 {
            let cls = MukaiClass::new(0, 0, 0, n).unwrap();
            assert!(vw_conjecture(&h, &cls).unwrap().value.is_zero());
        }
    }
}
