//! Toda's equation after taking `Log^(2)`:
//!
//! `sum_n (-p)^n pt_{n,beta} = sum_{r,n>=0} (-1)^{r-1} vw(r,beta,n) [n+r]_t p^n
//!                           + sum_{r,n>0} (-1)^{r-1} vw(r,beta,n) [n+r]_t p^{-n}`
//!
//! for a primitive curve class `beta`, in both directions.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::Result;
use crate::linalg::solve;
use crate::mukai::MukaiClass;
use crate::plethysm::qint;
use crate::series::rational::int;
use crate::series::{PLaurent, Ring, TRat};

/// One term of the sum: the class, the doubled `p`-exponent and the
/// factor `(-1)^{r-1} [n+r]_t`.
#[derive(Clone, Debug)]
struct Term {
    cls: MukaiClass,
    p2: i64,
    factor: TRat,
}

/// Terms that can be nonzero for `beta^2 = beta_sq` with `p`-exponents up
/// to `p_window`. Classes with `v^2 < -1` vanish, which bounds everything
/// except the rank-zero terms; those are cut by the window.
fn terms(beta_sq: i64, p_window: u32) -> Result<Vec<Term>> {
    let w = p_window as i64;
    let mut out = Vec::new();
    for r in 0.. {
        if r > 0 && beta_sq - r * r < -1 {
            break;
        }
        for n in 0.. {
            let cls = MukaiClass::primitive_beta(r, beta_sq, n)?;
            if cls.enriques_square() < -1 || (r == 0 && n > w) {
                break;
            }
            if n + r == 0 {
                continue;
            }
            let sign = if r % 2 == 1 { 1 } else { -1 };
            let factor = TRat::from_poly(qint((n + r) as u32)).scale(&int(sign));
            out.push(Term { cls, p2: 2 * n, factor: factor.clone() });
            if r > 0 && n > 0 {
                out.push(Term { cls, p2: -2 * n, factor });
            }
        }
    }
    Ok(out)
}

/// `sum_n (-p)^n pt_{n,beta}` for primitive `beta` with the given square,
/// known for `p`-exponents up to `p_window`.
pub fn pt_from_vw_toda(beta_sq: i64, p_window: u32, vw: &dyn Fn(&MukaiClass) -> Result<TRat>) -> Result<PLaurent> {
    let mut slice = PLaurent::new();
    for t in terms(beta_sq, p_window)? {
        let v = vw(&t.cls)?;
        if !v.is_zero() {
            slice.add_term(t.p2, t.factor.mul(&v));
        }
    }
    Ok(slice.truncate(2 * p_window as i64 + 2))
}

/// Recovers `a(m)` (keyed by doubled `m`) under the ansatz
/// `vw(v) = a(v^2/2 + 1/2)` from `pt`-slices keyed by `d = beta^2/2`.
///
/// Every coefficient inside the window gives one equation; the system is
/// solved exactly and all surplus equations must hold.
pub fn vw_from_pt_solve(slices: &BTreeMap<i64, PLaurent>, p_window: u32) -> Result<BTreeMap<i64, TRat>> {
    let w2 = 2 * p_window as i64;
    let mut by_slice = Vec::new();
    let mut unknowns = BTreeSet::new();
    for (&d, slice) in slices {
        let ts = terms(2 * d, p_window)?;
        unknowns.extend(ts.iter().map(|t| t.cls.enriques_square() + 1));
        by_slice.push((slice, ts));
    }
    let column: BTreeMap<i64, usize> = unknowns.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let (mut rows, mut rhs) = (Vec::new(), Vec::new());
    for (slice, ts) in by_slice {
        for p2 in (-w2..=w2).step_by(2) {
            let mut row = vec![TRat::zero(); column.len()];
            for t in ts.iter().filter(|t| t.p2 == p2) {
                let c = &mut row[column[&(t.cls.enriques_square() + 1)]];
                *c = c.add(&t.factor);
            }
            rows.push(row);
            rhs.push(slice.coeff(p2)?);
        }
    }
    let x = solve(&rows, &rhs, column.len())?;
    Ok(unknowns.into_iter().zip(x).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enriques::vw::{vw_strip, HilbertTable};
    use crate::error::Error;
    use crate::series::TPoly;

    #[test]
    fn square_zero_slice_is_constant_two() {
        let h = HilbertTable::new(4);
        let s = pt_from_vw_toda(0, 4, &|c| vw_strip(&h, c)).unwrap();
        assert_eq!(s, PLaurent::from_rational(int(2)).truncate(10));
    }

    #[test]
    fn square_two_slice_from_hilbert_schemes() {
        // 2 chi + 2 [2]_t (p + 1/p), before the reducible contribution
        let h = HilbertTable::new(4);
        let s = pt_from_vw_toda(2, 4, &|c| vw_strip(&h, c)).unwrap();
        let two_q2 = TRat::from_poly(TPoly::from_terms([(-1, int(2)), (1, int(2))]));
        let expected = PLaurent::from_terms([(-2, two_q2.clone()), (0, TRat::from_poly(h.a(2).unwrap())), (2, two_q2)]);
        assert_eq!(s, expected.truncate(10));
    }

    #[test]
    fn solve_from_a_single_slice() {
        let h = HilbertTable::new(4);
        let s = pt_from_vw_toda(2, 4, &|c| vw_strip(&h, c)).unwrap();
        let a = vw_from_pt_solve(&BTreeMap::from([(1, s.clone())]), 4).unwrap();
        assert_eq!(a[&0], TRat::from_rational(int(2)));
        assert_eq!(a[&2], TRat::from_poly(h.a(2).unwrap()));
        assert!(!a.contains_key(&1));
        let mut bad = s;
        bad.add_term(-2, TRat::one());
        let bad = BTreeMap::from([(1, bad)]);
        assert!(matches!(vw_from_pt_solve(&bad, 4), Err(Error::Inconsistent(_))));
    }
}
