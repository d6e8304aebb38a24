//! Theta series of the E8 lattice.
//!
//! Vectors are stored with doubled coordinates: either all even (integral
//! points) or all odd (half-integral points), with coordinate sum divisible
//! by 4. The norm of a stored vector `y` is `sum y_i^2 / 4`.

use num_integer::Roots;

use crate::error::{Error, Result};
use crate::series::rational::Rational;
use crate::series::QSeries;

/// Largest `q`-order the enumerators accept.
pub const E8_ORDER_BOUND: u32 = 8;

pub type E8Vector = [i64; 8];

pub fn norm(y: &E8Vector) -> i64 {
    y.iter().map(|c| c * c).sum::<i64>() / 4
}

pub fn is_e8(y: &E8Vector) -> bool {
    let even = y.iter().all(|c| c % 2 == 0);
    let odd = y.iter().all(|c| c % 2 != 0);
    (even || odd) && y.iter().sum::<i64>() % 4 == 0
}

fn check(order: u32) -> Result<()> {
    if order > E8_ORDER_BOUND {
        return Err(Error::EnumerationBound { requested: order, bound: E8_ORDER_BOUND });
    }
    Ok(())
}

/// All lattice vectors of norm `2m`, in lexicographic order.
pub fn e8_vectors(m: u32) -> Result<Vec<E8Vector>> {
    check(m + 1)?;
    let target = 8 * m as i64;
    let mut out = Vec::new();
    for parity in [0, 1] {
        let mut y = [0i64; 8];
        search(&mut y, 0, target, parity, &mut out);
    }
    out.sort();
    Ok(out)
}

fn search(y: &mut E8Vector, i: usize, left: i64, parity: i64, out: &mut Vec<E8Vector>) {
    if i == 8 {
        if left == 0 && y.iter().sum::<i64>() % 4 == 0 {
            out.push(*y);
        }
        return;
    }
    // each remaining coordinate costs at least parity^2
    let reserve = parity * (7 - i as i64);
    let r = (left - reserve).max(0).sqrt();
    for c in -r..=r {
        if c.rem_euclid(2) == parity {
            y[i] = c;
            search(y, i + 1, left - c * c, parity, out);
        }
    }
    y[i] = 0;
}

/// `sum_{alpha in E8} q^{alpha^2/2}` by direct radius search.
pub fn e8_theta(order: u32) -> Result<QSeries<Rational>> {
    check(order)?;
    let terms =
        (0..order).map(|m| e8_vectors(m).map(|v| (2 * m as i64, Rational::from_integer(v.len().into())))).collect::<Result<Vec<_>>>()?;
    Ok(QSeries::from_terms(terms, 2 * order as i64))
}

/// Same series, counting sign-and-permutation orbits of sorted absolute
/// coordinate patterns instead of listing vectors.
pub fn e8_theta_by_orbits(order: u32) -> Result<QSeries<Rational>> {
    check(order)?;
    let mut counts = vec![0u64; order as usize];
    for parity in [0, 1] {
        let mut pattern = Vec::new();
        patterns(&mut pattern, 8 * (order as i64 - 1), parity, i64::MAX, &mut |pat| {
            let sq: i64 = pat.iter().map(|c| c * c).sum();
            if sq % 8 != 0 {
                return;
            }
            counts[(sq / 8) as usize] += orbit_size(pat, parity);
        });
    }
    let terms = counts.iter().enumerate().map(|(m, c)| (2 * m as i64, Rational::from_integer((*c).into())));
    Ok(QSeries::from_terms(terms, 2 * order as i64))
}

/// Non-increasing sequences of 8 nonnegative values of the given parity
/// with square sum at most `budget`.
fn patterns(pat: &mut Vec<i64>, budget: i64, parity: i64, cap: i64, f: &mut impl FnMut(&[i64])) {
    if pat.len() == 8 {
        f(pat);
        return;
    }
    let mut c = parity;
    while c <= cap && c * c <= budget {
        pat.push(c);
        patterns(pat, budget - c * c, parity, c, f);
        pat.pop();
        c += 2;
    }
}

fn orbit_size(pat: &[i64], parity: i64) -> u64 {
    let mut perms: u64 = (1..=8).product();
    let mut i = 0;
    while i < pat.len() {
        let j = (i..pat.len()).find(|&j| pat[j] != pat[i]).unwrap_or(pat.len());
        perms /= (1..=(j - i) as u64).product::<u64>();
        i = j;
    }
    let nonzero = pat.iter().filter(|c| **c != 0).count() as u32;
    let signs = if parity == 1 {
        // flipping one half-integral coordinate moves the sum by an odd
        // integer, so exactly half of all sign choices are admissible
        1u64 << 7
    } else if pat.iter().sum::<i64>() % 4 == 0 {
        // integral points: sign flips keep the parity of the sum
        1u64 << nonzero
    } else {
        0
    };
    perms * signs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rational::int;

    #[test]
    fn classical_counts() {
        let a = e8_theta(4).unwrap();
        let b = e8_theta_by_orbits(4).unwrap();
        assert_eq!(a, b);
        for (m, c) in [1, 240, 2160, 6720].into_iter().enumerate() {
            assert_eq!(a.coeff(2 * m as i64), int(c));
        }
    }

    #[test]
    fn vectors_are_lattice_points() {
        for v in e8_vectors(1).unwrap() {
            assert!(is_e8(&v));
            assert_eq!(norm(&v), 2);
        }
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(e8_theta(E8_ORDER_BOUND + 1), Err(Error::EnumerationBound { requested: 9, bound: 8 })));
    }
}
