//! Laurent series in `p^{1/2}` over [`TRat`], with an optional upper
//! precision bound.
//!
//! Expansions used in this crate are exact in negative powers of `p` and
//! may be truncated in positive powers (inverting `1 - t^{a} p` as a
//! geometric series). A value with `precision = Some(P)` knows every
//! coefficient with doubled exponent `< P`; `None` means exact.

use std::collections::BTreeMap;
use std::fmt;

use super::rational::Rational;
use super::ring::Ring;
use super::tpoly::{monomial_str, TPoly};
use super::trat::TRat;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct PLaurent {
    terms: BTreeMap<i64, TRat>,
    precision: Option<i64>,
}

fn min_prec(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl PLaurent {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn monomial(twice_exp: i64, c: TRat) -> Self {
        let mut r = Self::new();
        r.add_term(twice_exp, c);
        r
    }

    pub fn constant(c: TRat) -> Self {
        Self::monomial(0, c)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, TRat)>>(terms: I) -> Self {
        let mut r = Self::new();
        for (e, c) in terms {
            r.add_term(e, c);
        }
        r
    }

    /// Builds a value from `(p_exponent, t_exponent, coefficient)` triples,
    /// all exponents doubled.
    pub fn from_monomials<I: IntoIterator<Item = (i64, i64, Rational)>>(terms: I) -> Self {
        let mut r = Self::new();
        for (pe, te, c) in terms {
            r.add_term(pe, TRat::from_poly(TPoly::monomial(te, c)));
        }
        r
    }

    pub fn add_term(&mut self, twice_exp: i64, c: TRat) {
        if c.is_zero() || self.precision.is_some_and(|p| twice_exp >= p) {
            return;
        }
        match self.terms.entry(twice_exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn precision(&self) -> Option<i64> {
        self.precision
    }

    pub fn is_exact(&self) -> bool {
        self.precision.is_none()
    }

    /// Drops everything at doubled exponent `>= prec` and records the bound.
    pub fn truncate(&self, prec: i64) -> Self {
        let prec = min_prec(self.precision, Some(prec));
        PLaurent {
            terms: self.terms.iter().filter(|(e, _)| prec.is_none_or(|p| **e < p)).map(|(e, c)| (*e, c.clone())).collect(),
            precision: prec,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &TRat)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `p^{twice_exp/2}`, or an error beyond the precision.
    pub fn coeff(&self, twice_exp: i64) -> Result<TRat> {
        if let Some(p) = self.precision {
            if twice_exp >= p {
                return Err(Error::WindowOverflow(format!("p-exponent {}/2 requested, known below {}/2", twice_exp, p)));
            }
        }
        Ok(self.terms.get(&twice_exp).cloned().unwrap_or_default())
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Lower bound for the doubled valuation; `None` for the exact zero.
    fn valuation(&self) -> Option<i64> {
        self.min_exp().or(self.precision)
    }

    /// Multiplies by `p^{twice/2}`.
    pub fn shift(&self, twice: i64) -> Self {
        PLaurent { terms: self.terms.iter().map(|(e, c)| (e + twice, c.clone())).collect(), precision: self.precision.map(|p| p + twice) }
    }

    pub fn map_coeffs(&self, f: impl Fn(&TRat) -> TRat) -> Self {
        let mut r = PLaurent { terms: BTreeMap::new(), precision: self.precision };
        for (e, c) in &self.terms {
            r.add_term(*e, f(c));
        }
        r
    }

    /// `p -> 1/p`. Only defined on exact values.
    pub fn invert_p(&self) -> Result<Self> {
        if !self.is_exact() {
            return Err(Error::WindowOverflow("p-inversion of a truncated series".into()));
        }
        Ok(PLaurent { terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(), precision: None })
    }

    /// Inverse as a series in positive powers of `p`, known below `prec`.
    pub fn inverse_to(&self, prec: i64) -> Result<Self> {
        let v = self.min_exp().ok_or_else(|| Error::NonUnitConstantTerm("zero p-series".into()))?;
        let lead_inv = self.terms[&v].try_inverse().ok_or(Error::DivisionByZero)?;
        // self = p^v * lead * (1 + h), inverse known below prec
        let rel = prec + v; // relative precision of the unit part's inverse
        let avail = self.precision.map(|p| p - v);
        let rel = min_prec(Some(rel), avail).unwrap();
        let mut unit: Vec<(i64, TRat)> = Vec::new();
        for (e, c) in &self.terms {
            let d = e - v;
            if d > 0 && d < rel {
                unit.push((d, c.mul(&lead_inv)));
            }
        }
        // inv[0] = 1, inv[n] = -sum_{d>=1} unit[d] inv[n-d]
        let n_max = rel.max(0) as usize;
        let mut inv: Vec<TRat> = vec![TRat::zero(); n_max];
        if n_max > 0 {
            inv[0] = TRat::one();
        }
        for n in 1..n_max {
            let mut acc = TRat::zero();
            for (d, c) in &unit {
                let d = *d as usize;
                if d > n {
                    break;
                }
                if !inv[n - d].is_zero() {
                    acc = acc.add(&c.mul(&inv[n - d]));
                }
            }
            inv[n] = acc.neg();
        }
        let mut r = PLaurent { terms: BTreeMap::new(), precision: Some(rel - v) };
        for (n, c) in inv.into_iter().enumerate() {
            r.add_term(n as i64 - v, c.mul(&lead_inv));
        }
        Ok(r)
    }

    /// Substitutes `t = 1` in every coefficient.
    pub fn eval_t1(&self) -> Result<BTreeMap<i64, Rational>> {
        let mut out = BTreeMap::new();
        for (e, c) in &self.terms {
            let v = c.eval_at_one()?;
            if !v.is_zero() {
                out.insert(*e, v);
            }
        }
        Ok(out)
    }

    /// Equality of all coefficients with doubled exponent in `lo..=hi`.
    pub fn agrees_on(&self, other: &Self, lo: i64, hi: i64) -> Result<Option<i64>> {
        for e in lo..=hi {
            if self.coeff(e)? != other.coeff(e)? {
                return Ok(Some(e));
            }
        }
        Ok(None)
    }
}

impl Ring for PLaurent {
    fn zero() -> Self {
        PLaurent::new()
    }
    fn one() -> Self {
        PLaurent::constant(TRat::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(Ring::is_one)
    }
    fn add(&self, other: &Self) -> Self {
        let mut r = self.truncate_opt(other.precision);
        for (e, c) in &other.terms {
            r.add_term(*e, c.clone());
        }
        r
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn neg(&self) -> Self {
        PLaurent { terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect(), precision: self.precision }
    }
    fn mul(&self, other: &Self) -> Self {
        let prec = match (self.valuation(), other.valuation()) {
            (None, _) | (_, None) => {
                if self.is_exact() && self.is_empty() || other.is_exact() && other.is_empty() {
                    return PLaurent::new();
                }
                None
            }
            (Some(va), Some(vb)) => min_prec(other.precision.map(|p| p + va), self.precision.map(|p| p + vb)),
        };
        let mut acc: BTreeMap<i64, TRat> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1 + e2;
                if prec.is_some_and(|p| e >= p) {
                    continue;
                }
                let prod = c1.mul(c2);
                match acc.entry(e) {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(prod);
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        let s = o.get().add(&prod);
                        *o.get_mut() = s;
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        PLaurent { terms: acc, precision: prec }
    }
    fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return PLaurent { terms: BTreeMap::new(), precision: self.precision };
        }
        PLaurent { terms: self.terms.iter().map(|(e, c)| (*e, c.scale(s))).collect(), precision: self.precision }
    }
    fn from_rational(r: Rational) -> Self {
        PLaurent::constant(TRat::from_rational(r))
    }
    fn try_inverse(&self) -> Option<Self> {
        if self.terms.len() == 1 && self.is_exact() {
            let (e, c) = self.terms.iter().next().unwrap();
            return Some(PLaurent::monomial(-e, c.try_inverse()?));
        }
        let p = self.precision?;
        let v = self.min_exp()?;
        self.inverse_to(p - 2 * v).ok()
    }
    fn substitute_power(&self, k: u32) -> Self {
        let k64 = k as i64;
        PLaurent {
            terms: self.terms.iter().map(|(e, c)| (e * k64, c.substitute_power(k))).collect(),
            precision: self.precision.map(|p| p * k64),
        }
    }
    fn adams(&self, k: u32) -> Self {
        let k64 = k as i64;
        PLaurent {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| self.precision.is_none_or(|p| *e * k64 < p))
                .map(|(e, c)| (e * k64, c.adams(k)))
                .collect(),
            precision: self.precision,
        }
    }
    fn invert_t(&self) -> Self {
        PLaurent { terms: self.terms.iter().map(|(e, c)| (*e, c.invert_t())).collect(), precision: self.precision }
    }
}

impl PLaurent {
    fn truncate_opt(&self, prec: Option<i64>) -> Self {
        match prec {
            Some(p) => self.truncate(p),
            None => self.clone(),
        }
    }
}

impl From<TRat> for PLaurent {
    fn from(c: TRat) -> Self {
        PLaurent::constant(c)
    }
}

impl From<TPoly> for PLaurent {
    fn from(c: TPoly) -> Self {
        PLaurent::constant(TRat::from_poly(c))
    }
}

impl fmt::Display for PLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            write!(f, "0")?;
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let mono = monomial_str("p", *e);
            match (mono.is_empty(), c.is_one()) {
                (true, _) => write!(f, "({c})")?,
                (false, true) => write!(f, "{mono}")?,
                (false, false) => write!(f, "({c}){mono}")?,
            }
        }
        if let Some(p) = self.precision {
            let m = monomial_str("p", p);
            write!(f, " + O({})", if m.is_empty() { "1" } else { &m })?;
        }
        Ok(())
    }
}

impl fmt::Debug for PLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PLaurent({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plethysm::qint;
    use crate::series::rational::int;

    fn mono(pe: i64, te: i64, c: i64) -> PLaurent {
        PLaurent::from_monomials([(pe, te, int(c))])
    }

    #[test]
    fn geometric_inverse_has_precision() {
        // 1/((1 - t^{1/2} p)(1 - t^{-1/2} p)) = sum [n+1]_t p^n
        let a = PLaurent::one().sub(&mono(2, 1, 1));
        let b = PLaurent::one().sub(&mono(2, -1, 1));
        let inv = a.mul(&b).inverse_to(12).unwrap();
        assert_eq!(inv.precision(), Some(12));
        for n in 0..6 {
            assert_eq!(inv.coeff(2 * n).unwrap(), TRat::from_poly(qint(n as u32 + 1)));
        }
        assert!(inv.coeff(12).is_err());
    }

    #[test]
    fn product_precision_tracks_valuations() {
        let x = PLaurent::one().sub(&mono(2, 0, 1)).inverse_to(10).unwrap();
        let y = mono(-4, 0, 1);
        let z = x.mul(&y);
        assert_eq!(z.precision(), Some(6));
        let w = x.mul(&x);
        assert_eq!(w.precision(), Some(10));
        assert_eq!(w.coeff(8).unwrap(), TRat::from_rational(int(5)));
    }

    #[test]
    fn exact_values_stay_exact() {
        let a = mono(1, 0, 1).sub(&mono(-1, 0, 1));
        let b = a.mul(&a);
        assert!(b.is_exact());
        assert_eq!(b, mono(2, 0, 1).add(&mono(0, 0, -2)).add(&mono(-2, 0, 1)));
    }
}
