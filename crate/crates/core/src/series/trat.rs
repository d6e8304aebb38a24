//! Rational functions in `t^{1/2}`, kept in a canonical reduced form.

use std::fmt;

use super::rational::Rational;
use super::ring::Ring;
use super::tpoly::{dense_divrem, dense_gcd, TPoly};
use crate::error::{Error, Result};

/// `num / den` with `gcd(num, den) = 1` over `Q[t^{1/2}]`, `den` having
/// lowest exponent zero and leading coefficient one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TRat {
    num: TPoly,
    den: TPoly,
}

impl TRat {
    pub fn from_poly(p: TPoly) -> Self {
        TRat { num: p, den: TPoly::one() }
    }

    pub fn new(num: TPoly, den: TPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: TPoly, den: TPoly) -> Self {
        if num.is_zero() {
            return TRat::from_poly(TPoly::new());
        }
        if den.is_monomial() {
            let (e, c) = den.terms().next().map(|(e, c)| (e, c.clone())).unwrap();
            return TRat::from_poly(num.shift(-e).scale(&c.recip()));
        }
        let (ln, n) = num.to_dense();
        let (ld, d) = den.to_dense();
        let g = dense_gcd(&n, &d);
        let (mut n, _) = dense_divrem(&n, &g);
        let (mut d, _) = dense_divrem(&d, &g);
        let lead = d.last().cloned().expect("nonzero denominator");
        if !lead.is_one() {
            for c in n.iter_mut().chain(d.iter_mut()) {
                *c /= &lead;
            }
        }
        TRat { num: TPoly::from_dense(ln - ld, &n), den: TPoly::from_dense(0, &d) }
    }

    pub fn numer(&self) -> &TPoly {
        &self.num
    }

    pub fn denom(&self) -> &TPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The polynomial value, if the function is a Laurent polynomial.
    pub fn as_poly(&self) -> Option<&TPoly> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn eval_at_one(&self) -> Result<Rational> {
        let d = self.den.eval_at_one();
        if d.is_zero() {
            return Err(Error::PoleAtOne);
        }
        Ok(self.num.eval_at_one() / d)
    }

    pub fn is_palindromic(&self) -> bool {
        *self == self.invert_t()
    }

    pub fn div(&self, other: &TRat) -> Result<TRat> {
        let inv = other.try_inverse().ok_or(Error::DivisionByZero)?;
        Ok(self.mul(&inv))
    }
}

impl From<TPoly> for TRat {
    fn from(p: TPoly) -> Self {
        TRat::from_poly(p)
    }
}

impl Default for TRat {
    fn default() -> Self {
        <TRat as Ring>::zero()
    }
}

impl Ring for TRat {
    fn zero() -> Self {
        TRat::from_poly(TPoly::new())
    }
    fn one() -> Self {
        TRat::from_poly(TPoly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
    fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            let den_is_one = self.den.is_one();
            let num = self.num.add(&other.num);
            return if den_is_one { TRat::from_poly(num) } else { TRat::normalized(num, self.den.clone()) };
        }
        TRat::normalized(self.num.mul(&other.den).add(&other.num.mul(&self.den)), self.den.mul(&other.den))
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn neg(&self) -> Self {
        TRat { num: self.num.neg(), den: self.den.clone() }
    }
    fn mul(&self, other: &Self) -> Self {
        if self.den.is_one() && other.den.is_one() {
            return TRat::from_poly(self.num.mul(&other.num));
        }
        TRat::normalized(self.num.mul(&other.num), self.den.mul(&other.den))
    }
    fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        TRat { num: self.num.scale(s), den: self.den.clone() }
    }
    fn from_rational(r: Rational) -> Self {
        TRat::from_poly(TPoly::constant(r))
    }
    fn try_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(TRat::normalized(self.den.clone(), self.num.clone()))
    }
    fn substitute_power(&self, k: u32) -> Self {
        // Substitution keeps coprimality, monicity and the zero lowest exponent.
        TRat { num: self.num.substitute_power(k), den: self.den.substitute_power(k) }
    }
    fn invert_t(&self) -> Self {
        TRat::normalized(self.num.invert_t(), self.den.invert_t())
    }
}

impl fmt::Display for TRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for TRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TRat({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rational::{int, rat};

    fn p(terms: &[(i64, i64)]) -> TPoly {
        TPoly::from_terms(terms.iter().map(|&(e, c)| (e, int(c))))
    }

    #[test]
    fn reduces_common_factors() {
        // (t - 1) / (t^{1/2} - t^{-1/2}) = t^{1/2}
        let r = TRat::new(p(&[(2, 1), (0, -1)]), TPoly::half_gap()).unwrap();
        assert!(r.is_polynomial());
        assert_eq!(r.numer(), &p(&[(1, 1)]));
    }

    #[test]
    fn denominator_is_monic_with_zero_lowest_exponent() {
        let r = TRat::new(p(&[(0, 1)]), p(&[(-1, 2), (1, 2)])).unwrap();
        assert_eq!(r.denom(), &p(&[(0, 1), (2, 1)]));
        assert_eq!(r.numer(), &TPoly::monomial(1, rat(1, 2)));
        assert_eq!(r.eval_at_one().unwrap(), rat(1, 4));
    }

    #[test]
    fn equality_is_canonical() {
        let a = TRat::new(p(&[(0, 2)]), p(&[(0, 2), (2, 2)])).unwrap();
        let b = TRat::new(p(&[(-2, 1)]), p(&[(-2, 1), (0, 1)])).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn pole_at_one() {
        let r = TRat::new(TPoly::one(), TPoly::half_gap()).unwrap();
        assert_eq!(r.eval_at_one(), Err(Error::PoleAtOne));
        assert!(TRat::new(TPoly::one(), TPoly::new()).is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let a = TRat::new(p(&[(0, 3), (1, 1)]), p(&[(0, 1), (4, -5)])).unwrap();
        assert!(a.mul(&a.try_inverse().unwrap()).is_one());
        assert!(a.sub(&a).is_zero());
    }
}
