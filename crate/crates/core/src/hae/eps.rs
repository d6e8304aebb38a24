//! Truncated power series in `eps1, eps2` with `q`-series coefficients,
//! and the two ways of producing one from a theta/eta word under
//! `t = e^{eps1 + eps2}`, `p = e^{(eps1 - eps2)/2}`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::series::rational::{bernoulli, int, Rational};
use crate::series::{PLaurent, QSeries, Ring, EXACT};
use crate::special::eisenstein::eisenstein_g;
use crate::special::eta::eta_power;
use crate::special::word::{Factor, JacobiWord, Mono};

/// `sum c_{a,b}(q) eps1^a eps2^b` over `a + b <= e_max`, every coefficient
/// known below `q^{order2/2}`.
#[derive(Clone, Debug, PartialEq)]
pub struct EpsPoly {
    e_max: u32,
    order2: i64,
    coeffs: BTreeMap<(u32, u32), QSeries<Rational>>,
}

impl EpsPoly {
    pub fn zero(e_max: u32, order2: i64) -> Self {
        EpsPoly { e_max, order2, coeffs: BTreeMap::new() }
    }

    /// A `q`-series times `eps^0`.
    pub fn constant(s: QSeries<Rational>, e_max: u32) -> Self {
        let mut r = EpsPoly::zero(e_max, s.raw_order());
        r.insert(0, 0, s);
        r
    }

    /// A polynomial in `eps1, eps2` with exact rational coefficients.
    pub fn polynomial<I: IntoIterator<Item = (u32, u32, Rational)>>(terms: I, e_max: u32) -> Self {
        let mut r = EpsPoly::zero(e_max, EXACT);
        for (a, b, c) in terms {
            r.insert(a, b, QSeries::constant(c));
        }
        r
    }

    /// `(c1 eps1 + c2 eps2)^d`.
    pub fn linear_power(c1: &Rational, c2: &Rational, d: u32, e_max: u32) -> Self {
        let mut terms = Vec::new();
        let mut binom = int(1);
        for i in 0..=d {
            terms.push((i, d - i, &binom * pow(c1, i) * pow(c2, d - i)));
            binom = binom * int((d - i) as i64) / int(i as i64 + 1);
        }
        EpsPoly::polynomial(terms, e_max)
    }

    /// `exp(c1 eps1 + c2 eps2)`.
    pub fn exp_linear(c1: &Rational, c2: &Rational, e_max: u32) -> Self {
        let mut terms = Vec::new();
        for a in 0..=e_max {
            for b in 0..=e_max - a {
                terms.push((a, b, pow(c1, a) * pow(c2, b) / (factorial(a) * factorial(b))));
            }
        }
        EpsPoly::polynomial(terms, e_max)
    }

    pub fn e_max(&self) -> u32 {
        self.e_max
    }

    /// Doubled exponent below which every coefficient is known.
    pub fn order2(&self) -> i64 {
        self.order2
    }

    /// Adds `s` to the coefficient of `eps1^a eps2^b`; terms past `e_max`
    /// are dropped.
    pub fn insert(&mut self, a: u32, b: u32, s: QSeries<Rational>) {
        if a + b > self.e_max {
            return;
        }
        self.order2 = self.order2.min(s.raw_order());
        let order2 = self.order2;
        let entry = self.coeffs.entry((a, b)).or_insert_with(|| QSeries::zero_to(order2));
        *entry = entry.add(&s);
        if entry.is_zero_series() && entry.is_exact() {
            self.coeffs.remove(&(a, b));
        }
    }

    pub fn coeff(&self, a: u32, b: u32) -> QSeries<Rational> {
        match self.coeffs.get(&(a, b)) {
            Some(s) => s.truncate(self.order2),
            None => QSeries::zero_to(self.order2),
        }
    }

    /// Nonzero coefficients in `(a, b)` order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), QSeries<Rational>)> + '_ {
        self.coeffs.iter().map(|(k, s)| (*k, s.truncate(self.order2))).filter(|(_, s)| !s.is_zero_series())
    }

    pub fn is_zero(&self) -> bool {
        self.terms().next().is_none()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r.e_max = self.e_max.min(other.e_max);
        r.coeffs.retain(|(a, b), _| a + b <= r.e_max);
        for ((a, b), s) in &other.coeffs {
            r.insert(*a, *b, s.clone());
        }
        r.order2 = r.order2.min(other.order2);
        r
    }

    pub fn neg(&self) -> Self {
        self.scale(&int(-1))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut r = EpsPoly::zero(self.e_max, self.order2);
        for ((a, b), s) in &self.coeffs {
            r.insert(*a, *b, s.scale(c));
        }
        r
    }

    pub fn mul_series(&self, s: &QSeries<Rational>) -> Self {
        let mut r = EpsPoly::zero(self.e_max, self.order2.min(s.raw_order()));
        for ((a, b), c) in &self.coeffs {
            r.insert(*a, *b, c.mul(s));
        }
        r
    }

    pub fn mul(&self, other: &Self) -> Self {
        let e_max = self.e_max.min(other.e_max);
        let mut r = EpsPoly::zero(e_max, self.order2.min(other.order2));
        for ((a, b), x) in &self.coeffs {
            for ((c, d), y) in &other.coeffs {
                if a + b + c + d <= e_max {
                    r.insert(a + c, b + d, x.mul(y));
                }
            }
        }
        r
    }

    /// `exp` of a series without constant term, which is a finite sum
    /// because every power past `e_max` vanishes.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeff(0, 0).is_zero_series() {
            return Err(Error::NonZeroConstantTerm("eps-exponent".into()));
        }
        let mut acc = EpsPoly::constant(QSeries::constant(int(1)), self.e_max);
        let mut power = acc.clone();
        for n in 1..=self.e_max {
            power = power.mul(self).scale(&(int(1) / int(n as i64)));
            acc = acc.add(&power);
        }
        acc.order2 = acc.order2.min(self.order2);
        Ok(acc)
    }

    pub fn truncate(&self, order2: i64) -> Self {
        let mut r = self.clone();
        r.order2 = r.order2.min(order2);
        r
    }

    /// Coefficients of odd total degree that do not vanish.
    pub fn odd_degree_terms(&self) -> Vec<(u32, u32)> {
        self.terms().map(|(k, _)| k).filter(|(a, b)| (a + b) % 2 == 1).collect()
    }

    /// First `(a, b, doubled q-exponent)` where two expansions differ.
    pub fn first_difference(&self, other: &Self) -> Option<(u32, u32, i64)> {
        let e_max = self.e_max.min(other.e_max);
        for a in 0..=e_max {
            for b in 0..=e_max - a {
                if let Some(e) = self.coeff(a, b).first_difference(&other.coeff(a, b)) {
                    return Some((a, b, e));
                }
            }
        }
        None
    }
}

pub(crate) fn factorial(n: u32) -> Rational {
    (1..=n as i64).fold(int(1), |acc, k| acc * int(k))
}

fn pow(c: &Rational, n: u32) -> Rational {
    (0..n).fold(int(1), |acc, _| acc * c)
}

/// The linear form `c1 eps1 + c2 eps2` with `e^{c1 eps1 + c2 eps2}` equal
/// to the monomial `t^{t2/2} p^{p2/2}`.
pub fn linear_form(m: Mono) -> (Rational, Rational) {
    let t = int(m.t2) / int(2);
    let p = int(m.p2) / int(4);
    (&t + &p, t - p)
}

/// The representative of `+-L` whose first nonzero entry is positive,
/// with the sign that was removed.
fn canonical_form(m: Mono) -> Result<((Rational, Rational), i64)> {
    let (c1, c2) = linear_form(m);
    let zero = int(0);
    if c1 == zero && c2 == zero {
        return Err(Error::DivisionByZero);
    }
    if c1 < zero || (c1 == zero && c2 < zero) {
        Ok(((-c1, -c2), -1))
    } else {
        Ok(((c1, c2), 1))
    }
}

/// `G_k(q^j)` known below `q^order`.
fn eisenstein_at(k: u32, j: u32, order: u32) -> Result<QSeries<Rational>> {
    Ok(eisenstein_g(k, order.div_ceil(j))?.substitute_power(j).truncate(2 * order as i64))
}

/// Expands a theta/eta word in `eps1, eps2` through
/// `Theta(e^z, q) = z exp(-2 sum_k G_k(q) z^k / k!)` and
/// `e^{z/2} - e^{-z/2} = z exp(sum_k B_k z^k / (k k!))`.
///
/// The powers of `z` in front must combine to a polynomial; a word whose
/// expansion starts with a pole in some linear form is rejected.
pub fn eps_expand(word: &JacobiWord, e_max: u32, order: u32) -> Result<EpsPoly> {
    let order2 = 2 * order as i64;
    let mut exponent = EpsPoly::zero(e_max, order2);
    let mut net: BTreeMap<(Rational, Rational), i64> = BTreeMap::new();
    let mut sign = 1;
    let mut scalar = QSeries::constant(word.constant.clone()).shift(word.q_shift2).truncate(order2);
    for f in &word.factors {
        match f {
            Factor::Theta { arg, q_power, exp } => {
                let (form, s) = canonical_form(*arg)?;
                for k in (2..=e_max).step_by(2) {
                    let c = int(-2 * *exp as i64) / factorial(k);
                    let g = eisenstein_at(k, *q_power, order)?.scale(&c);
                    exponent = exponent.add(&EpsPoly::linear_power(&form.0, &form.1, k, e_max).mul_series(&g));
                }
                if s < 0 && exp % 2 != 0 {
                    sign = -sign;
                }
                *net.entry(form).or_insert(0) += *exp as i64;
            }
            Factor::Gap { arg, exp } => {
                let (form, s) = canonical_form(*arg)?;
                for k in (2..=e_max).step_by(2) {
                    let c = bernoulli(k as usize) * int(*exp as i64) / (int(k as i64) * factorial(k));
                    exponent = exponent.add(&EpsPoly::linear_power(&form.0, &form.1, k, e_max).scale(&c));
                }
                if s < 0 && exp % 2 != 0 {
                    sign = -sign;
                }
                *net.entry(form).or_insert(0) += *exp as i64;
            }
            Factor::Eta { q_power, exp } => {
                // one step of slack absorbs the fractional offsets
                scalar = scalar.mul(&eta_power(*q_power, *exp, order + 1));
            }
        }
    }
    let mut front = EpsPoly::constant(scalar.scale(&int(sign)).truncate(order2), e_max);
    for ((c1, c2), n) in net {
        if n < 0 {
            return Err(Error::Unsupported(format!("pole of order {} along {c1} eps1 + {c2} eps2", -n)));
        }
        front = front.mul(&EpsPoly::linear_power(&c1, &c2, n as u32, e_max));
    }
    Ok(front.mul(&exponent.exp()?))
}

/// The same expansion read off an evaluated series: every monomial
/// `t^{t2/2} p^{p2/2}` becomes `exp(c1 eps1 + c2 eps2)`. Only exact
/// polynomial coefficients can be substituted.
pub fn eps_substitute(series: &QSeries<PLaurent>, e_max: u32) -> Result<EpsPoly> {
    let mut out: BTreeMap<(u32, u32), Vec<(i64, Rational)>> = BTreeMap::new();
    for (e, c) in series.terms() {
        if !c.is_exact() {
            return Err(Error::Unsupported(format!("p-truncated coefficient at doubled q^{e}")));
        }
        for (p2, tc) in c.terms() {
            let poly = tc.as_poly().ok_or_else(|| Error::Unsupported(format!("rational function of t at doubled q^{e} p^{p2}")))?;
            for (t2, r) in poly.terms() {
                let (c1, c2) = linear_form(Mono::new(t2, p2));
                for a in 0..=e_max {
                    for b in 0..=e_max - a {
                        let v = r * pow(&c1, a) * pow(&c2, b) / (factorial(a) * factorial(b));
                        out.entry((a, b)).or_default().push((e, v));
                    }
                }
            }
        }
    }
    let mut r = EpsPoly::zero(e_max, series.raw_order());
    for ((a, b), terms) in out {
        let mut merged: BTreeMap<i64, Rational> = BTreeMap::new();
        for (e, v) in terms {
            *merged.entry(e).or_insert_with(|| int(0)) += v;
        }
        r.insert(a, b, QSeries::from_terms(merged, series.raw_order()).with_offset(series.offset()));
    }
    Ok(r)
}
