//! Laurent polynomials in `t^{1/2}` with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Signed;

use super::rational::{self, Rational};
use super::ring::Ring;

/// Laurent polynomial in `t^{1/2}`. Keys are doubled exponents; zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TPoly {
    terms: BTreeMap<i64, Rational>,
}

impl TPoly {
    pub fn new() -> Self {
        Self::default()
    }

    /// `c * t^{twice_exp/2}`.
    pub fn monomial(twice_exp: i64, c: Rational) -> Self {
        let mut p = Self::new();
        p.add_term(twice_exp, c);
        p
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, c)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(terms: I) -> Self {
        let mut p = Self::new();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// `t^{1/2} - t^{-1/2}`.
    pub fn half_gap() -> Self {
        Self::from_terms([(1, rational::int(1)), (-1, rational::int(-1))])
    }

    pub fn add_term(&mut self, twice_exp: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(twice_exp).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&twice_exp);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, twice_exp: i64) -> Rational {
        self.terms.get(&twice_exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies by `t^{twice/2}`.
    pub fn shift(&self, twice: i64) -> Self {
        TPoly { terms: self.terms.iter().map(|(e, c)| (e + twice, c.clone())).collect() }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_palindromic(&self) -> bool {
        *self == Ring::invert_t(self)
    }

    pub fn eval_at_one(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    /// Nonnegative integer coefficients throughout.
    pub fn has_nonnegative_integer_coeffs(&self) -> bool {
        self.terms.values().all(rational::is_nonnegative_integer)
    }

    /// Dense coefficient vector in `u = t^{1/2}` together with the lowest
    /// doubled exponent.
    pub(crate) fn to_dense(&self) -> (i64, Vec<Rational>) {
        let Some(lo) = self.min_exp() else {
            return (0, Vec::new());
        };
        let hi = self.max_exp().unwrap();
        let mut v = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - lo) as usize] = c.clone();
        }
        (lo, v)
    }

    pub(crate) fn from_dense(lo: i64, v: &[Rational]) -> Self {
        Self::from_terms(v.iter().enumerate().map(|(i, c)| (lo + i as i64, c.clone())))
    }

    /// Exact quotient `self / other` if it is again a Laurent polynomial.
    pub fn div_exact(&self, other: &TPoly) -> Option<TPoly> {
        if other.is_empty() {
            return None;
        }
        if self.is_empty() {
            return Some(TPoly::new());
        }
        let (la, a) = self.to_dense();
        let (lb, b) = other.to_dense();
        let (q, r) = dense_divrem(&a, &b);
        r.iter().all(Ring::is_zero).then(|| TPoly::from_dense(la - lb, &q))
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.values().next_back()
    }

    fn fmt_with(&self, var: &str, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let mono = monomial_str(var, *e);
            if mono.is_empty() {
                write!(f, "{}", rational::display(&mag))?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}{mono}", rational::display(&mag))?;
            }
        }
        Ok(())
    }
}

pub(crate) fn monomial_str(var: &str, twice: i64) -> String {
    match twice {
        0 => String::new(),
        2 => var.to_string(),
        e if e % 2 == 0 => format!("{var}^{}", e / 2),
        e => format!("{var}^({e}/2)"),
    }
}

/// Polynomial long division over Q; coefficient vectors are low-to-high.
pub(crate) fn dense_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let b = trim(b);
    let mut r = trim(a);
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = b[db].recip();
    let mut q = vec![Rational::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = &r[i + db] * &lead_inv;
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                r[i + j] -= &c * bj;
            }
        }
        q[i] = c;
    }
    r.truncate(db);
    (q, trim(&r))
}

fn trim(v: &[Rational]) -> Vec<Rational> {
    let mut v = v.to_vec();
    while v.last().is_some_and(Ring::is_zero) {
        v.pop();
    }
    v
}

/// Monic gcd of two dense polynomials.
pub(crate) fn dense_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut x = trim(a);
    let mut y = trim(b);
    while !y.is_empty() {
        let (_, r) = dense_divrem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(l) = x.last().cloned() {
        for c in &mut x {
            *c /= &l;
        }
    }
    x
}

impl Ring for TPoly {
    fn zero() -> Self {
        TPoly::new()
    }
    fn one() -> Self {
        TPoly::constant(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(Ring::is_one)
    }
    fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &other.terms {
            r.add_term(*e, c.clone());
        }
        r
    }
    fn sub(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &other.terms {
            r.add_term(*e, -c);
        }
        r
    }
    fn neg(&self) -> Self {
        TPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
    fn mul(&self, other: &Self) -> Self {
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let mut r = TPoly::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                r.add_term(e1 + e2, c1 * c2);
            }
        }
        r
    }
    fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return TPoly::new();
        }
        TPoly { terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect() }
    }
    fn from_rational(r: Rational) -> Self {
        TPoly::constant(r)
    }
    fn try_inverse(&self) -> Option<Self> {
        if !self.is_monomial() {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        Some(TPoly::monomial(-e, c.recip()))
    }
    fn substitute_power(&self, k: u32) -> Self {
        TPoly { terms: self.terms.iter().map(|(e, c)| (e * k as i64, c.clone())).collect() }
    }
    fn invert_t(&self) -> Self {
        TPoly { terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with("t", f)
    }
}

impl fmt::Debug for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TPoly({self})")
    }
}
