//! Exact Gaussian elimination over any coefficient field implementing
//! [`Ring`] with working inverses.

use crate::error::{Error, Result};
use crate::series::Ring;

/// Solves `rows * x = rhs` for a unique `x`.
///
/// The system may be overdetermined; every surplus equation must hold
/// exactly, otherwise [`Error::Inconsistent`] names the first violated
/// row. An underdetermined system is also reported as inconsistent,
/// naming the first free unknown.
pub fn solve<C: Ring>(rows: &[Vec<C>], rhs: &[C], unknowns: usize) -> Result<Vec<C>> {
    assert_eq!(rows.len(), rhs.len());
    let mut m: Vec<(Vec<C>, C, usize)> = rows
        .iter()
        .zip(rhs)
        .enumerate()
        .map(|(i, (r, b))| {
            let mut r = r.clone();
            r.resize(unknowns, C::zero());
            (r, b.clone(), i)
        })
        .collect();
    let mut pivots = Vec::with_capacity(unknowns);
    let mut row = 0;
    for col in 0..unknowns {
        let Some(p) = (row..m.len()).find(|&i| !m[i].0[col].is_zero()) else {
            return Err(Error::Inconsistent(format!("unknown {col} is not determined")));
        };
        m.swap(row, p);
        let inv = m[row].0[col].try_inverse().ok_or(Error::DivisionByZero)?;
        let (r, b, i) = &m[row];
        let pivot_row: Vec<C> = r.iter().map(|c| c.mul(&inv)).collect();
        let pivot_rhs = b.mul(&inv);
        m[row] = (pivot_row.clone(), pivot_rhs.clone(), *i);
        for (j, entry) in m.iter_mut().enumerate() {
            if j == row || entry.0[col].is_zero() {
                continue;
            }
            let f = entry.0[col].clone();
            for (c, pc) in entry.0.iter_mut().zip(&pivot_row).skip(col) {
                if !pc.is_zero() {
                    *c = c.sub(&f.mul(pc));
                }
            }
            entry.1 = entry.1.sub(&f.mul(&pivot_rhs));
        }
        pivots.push(row);
        row += 1;
    }
    if let Some((_, _, i)) = m[row..].iter().find(|(_, b, _)| !b.is_zero()) {
        return Err(Error::Inconsistent(format!("equation {i} is violated")));
    }
    Ok(pivots.into_iter().map(|r| m[r].1.clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rational::{int, rat, Rational};

    fn r(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|x| int(*x)).collect()
    }

    #[test]
    fn overdetermined_consistent() {
        let rows = vec![r(&[1, 1]), r(&[1, -1]), r(&[2, 3])];
        let x = solve(&rows, &r(&[3, 1, 7]), 2).unwrap();
        assert_eq!(x, r(&[2, 1]));
    }

    #[test]
    fn fractions() {
        let rows = vec![r(&[2, 0]), r(&[0, 3])];
        assert_eq!(solve(&rows, &r(&[1, 1]), 2).unwrap(), vec![rat(1, 2), rat(1, 3)]);
    }

    #[test]
    fn inconsistent_and_underdetermined() {
        let rows = vec![r(&[1, 1]), r(&[1, -1]), r(&[2, 3])];
        assert!(matches!(solve(&rows, &r(&[3, 1, 9]), 2), Err(Error::Inconsistent(_))));
        let rows = vec![r(&[1, 1]), r(&[2, 2])];
        assert!(matches!(solve(&rows, &r(&[1, 2]), 2), Err(Error::Inconsistent(_))));
    }
}
