//! The reduced Toda equation on K3, which is linear in `vw`:
//!
//! `pt_{n,beta} (-1)^n = -sum_{r>=0} [n+2r]_t vw(r,beta,n)` for `n >= 0` and
//! `-sum_{r>0} [|n|+2r]_t vw(r,beta,|n|)` for `n < 0`.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::Result;
use crate::linalg::solve;
use crate::mukai::MukaiClass;
use crate::plethysm::qint;
use crate::series::rational::int;
use crate::series::{PLaurent, Ring, TRat};

#[derive(Clone, Debug)]
struct Term {
    cls: MukaiClass,
    p2: i64,
    factor: TRat,
}

/// Terms with `v^2 >= -2` for `beta^2 = beta_sq` and `|n| <= p_window`.
fn terms(beta_sq: i64, p_window: u32) -> Result<Vec<Term>> {
    let mut out = Vec::new();
    for n in 0..=p_window as i64 {
        for r in 0.. {
            let cls = MukaiClass::primitive_beta(r, beta_sq, n)?;
            if cls.k3_square() < -2 {
                break;
            }
            if n + 2 * r == 0 {
                continue;
            }
            let factor = TRat::from_poly(qint((n + 2 * r) as u32)).scale(&int(-1));
            if r > 0 && n > 0 {
                out.push(Term { cls, p2: -2 * n, factor: factor.clone() });
            }
            out.push(Term { cls, p2: 2 * n, factor });
        }
    }
    Ok(out)
}

/// `sum_n pt_{n,beta} (-p)^n` for primitive `beta` of the given square,
/// known for `p`-exponents up to `p_window`.
pub fn k3_toda(beta_sq: i64, p_window: u32, vw: &dyn Fn(&MukaiClass) -> Result<TRat>) -> Result<PLaurent> {
    let mut slice = PLaurent::new();
    for t in terms(beta_sq, p_window)? {
        let v = vw(&t.cls)?;
        if !v.is_zero() {
            slice.add_term(t.p2, t.factor.mul(&v));
        }
    }
    Ok(slice.truncate(2 * p_window as i64 + 2))
}

/// Recovers `vw` as a function `b(j)` of `j = v^2/2 >= -1` from slices keyed
/// by `d = beta^2/2`; every coefficient in the window is one equation.
pub fn k3_vw_from_pt_solve(slices: &BTreeMap<i64, PLaurent>, p_window: u32) -> Result<BTreeMap<i64, TRat>> {
    let w2 = 2 * p_window as i64;
    let mut by_slice = Vec::new();
    let mut unknowns = BTreeSet::new();
    for (&d, slice) in slices {
        let ts = terms(2 * d, p_window)?;
        unknowns.extend(ts.iter().map(|t| t.cls.k3_square() / 2));
        by_slice.push((slice, ts));
    }
    let column: BTreeMap<i64, usize> = unknowns.iter().enumerate().map(|(i, j)| (*j, i)).collect();
    let (mut rows, mut rhs) = (Vec::new(), Vec::new());
    for (slice, ts) in by_slice {
        for p2 in (-w2..=w2).step_by(2) {
            let mut row = vec![TRat::zero(); column.len()];
            for t in ts.iter().filter(|t| t.p2 == p2) {
                let c = &mut row[column[&(t.cls.k3_square() / 2)]];
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
    use crate::k3::vw::K3Tables;

    #[test]
    fn minus_two_slice() {
        // only r = 0 reaches v^2 = -2, with vw = 1
        let h = K3Tables::new(3);
        let s = k3_toda(-2, 4, &|c| h.vw_from_kernel(c)).unwrap();
        let mut expected = PLaurent::new();
        for n in 1..=4 {
            expected.add_term(2 * n, TRat::from_poly(qint(n as u32)).scale(&int(-1)));
        }
        assert_eq!(s, expected.truncate(10));
    }

    #[test]
    fn no_negative_powers_without_positive_rank() {
        let h = K3Tables::new(3);
        let s = k3_toda(0, 6, &|c| h.vw_from_kernel(c)).unwrap();
        // r = 1 needs n <= 0 at beta^2 = 0, so p^{-n} vanishes for n > 0
        for n in 1..=6 {
            assert!(s.coeff(-2 * n).unwrap().is_zero());
        }
    }

    #[test]
    fn linear_in_vw() {
        let h = K3Tables::new(6);
        let once = k3_toda(4, 5, &|c| h.vw_from_kernel(c)).unwrap();
        let twice = k3_toda(4, 5, &|c| Ok(h.vw_from_kernel(c)?.scale(&int(2)))).unwrap();
        assert_eq!(twice, once.scale(&int(2)));
    }
}
