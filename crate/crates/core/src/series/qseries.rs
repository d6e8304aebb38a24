//! Truncated series in `q^{1/2}` over an arbitrary coefficient [`Ring`].
//!
//! A value stands for `q^{offset} * sum_e c_e q^{e/2}` where the `c_e` are
//! known exactly for doubled exponents `e < order`. Polynomials are exact
//! and carry [`EXACT`] as their order.

use std::fmt;

use num_rational::Ratio;

use super::rational::{int, Rational};
use super::ring::Ring;
use crate::error::{Error, Result};

/// Order sentinel for exact (polynomial) values.
pub const EXACT: i64 = i64::MAX / 8;

fn norm_order(o: i64) -> i64 {
    if o >= EXACT / 2 {
        EXACT
    } else {
        o
    }
}

fn add_order(o: i64, d: i64) -> i64 {
    if o == EXACT {
        EXACT
    } else {
        norm_order(o + d)
    }
}

#[derive(Clone, PartialEq)]
pub struct QSeries<C> {
    start: i64,
    coeffs: Vec<C>,
    order: i64,
    offset: Ratio<i64>,
}

impl<C: Ring> QSeries<C> {
    /// Builds a series from dense coefficients starting at doubled exponent
    /// `start`; entries at or beyond `order` are dropped.
    pub fn from_coeffs(start: i64, coeffs: Vec<C>, order: i64) -> Self {
        let mut s = QSeries { start, coeffs, order: norm_order(order), offset: Ratio::from_integer(0) };
        s.trim();
        s
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(terms: I, order: i64) -> Self {
        let terms: Vec<(i64, C)> = terms.into_iter().filter(|(e, _)| *e < order).collect();
        let Some(lo) = terms.iter().map(|(e, _)| *e).min() else {
            return Self::zero_to(order);
        };
        let hi = terms.iter().map(|(e, _)| *e).max().unwrap();
        let mut coeffs = vec![C::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            let slot = &mut coeffs[(e - lo) as usize];
            *slot = slot.add(&c);
        }
        Self::from_coeffs(lo, coeffs, order)
    }

    /// The zero series known below `order`.
    pub fn zero_to(order: i64) -> Self {
        QSeries { start: 0, coeffs: Vec::new(), order: norm_order(order), offset: Ratio::from_integer(0) }
    }

    pub fn monomial(twice_exp: i64, c: C, order: i64) -> Self {
        Self::from_coeffs(twice_exp, vec![c], order)
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(0, c, EXACT)
    }

    /// Same coefficients, global prefactor `q^{offset}`.
    pub fn with_offset(mut self, offset: Ratio<i64>) -> Self {
        self.offset = offset;
        self.normalize_offset();
        self
    }

    fn trim(&mut self) {
        let keep = (self.order - self.start).clamp(0, self.coeffs.len() as i64) as usize;
        self.coeffs.truncate(keep);
        while self.coeffs.last().is_some_and(C::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.start = 0;
        } else if lead > 0 {
            self.coeffs.drain(..lead);
            self.start += lead as i64;
        }
    }

    /// Folds multiples of 1/2 from the offset into the exponents so that
    /// the offset lies in `[0, 1/2)`.
    fn normalize_offset(&mut self) {
        let twice = self.offset * 2;
        let k = twice.floor().to_integer();
        if k != 0 {
            self.offset -= Ratio::new(k, 2);
            if !self.coeffs.is_empty() {
                self.start += k;
            }
            self.order = add_order(self.order, k);
        }
    }

    pub fn offset(&self) -> Ratio<i64> {
        self.offset
    }

    /// Doubled order, or `None` when exact.
    pub fn order(&self) -> Option<i64> {
        (self.order != EXACT).then_some(self.order)
    }

    pub fn raw_order(&self) -> i64 {
        self.order
    }

    pub fn is_exact(&self) -> bool {
        self.order == EXACT
    }

    pub fn is_zero_series(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Doubled exponent of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.start)
    }

    /// Largest doubled exponent with a stored coefficient.
    pub fn max_exp(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then(|| self.start + self.coeffs.len() as i64 - 1)
    }

    /// Coefficient of `q^{e/2}` (relative to the offset).
    ///
    /// # Panics
    /// If `e` is not below the order.
    pub fn coeff(&self, e: i64) -> C {
        self.try_coeff(e).unwrap_or_else(|err| panic!("{err}"))
    }

    pub fn try_coeff(&self, e: i64) -> Result<C> {
        if e >= self.order {
            return Err(Error::InsufficientOrder { needed: format!("q-exponent {e}/2"), available: format!("below {}/2", self.order) });
        }
        let i = e - self.start;
        Ok(if i >= 0 && (i as usize) < self.coeffs.len() { self.coeffs[i as usize].clone() } else { C::zero() })
    }

    pub fn coeff_ref(&self, e: i64) -> Option<&C> {
        let i = e - self.start;
        (i >= 0 && e < self.order).then(|| self.coeffs.get(i as usize)).flatten()
    }

    /// Nonzero terms as `(doubled exponent, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (self.start + i as i64, c))
    }

    pub fn truncate(&self, order: i64) -> Self {
        let mut r = self.clone();
        r.order = r.order.min(norm_order(order));
        r.trim();
        r
    }

    /// Multiplies by `q^{e/2}`.
    pub fn shift(&self, e: i64) -> Self {
        let mut r = self.clone();
        if !r.coeffs.is_empty() {
            r.start += e;
        }
        r.order = add_order(r.order, e);
        r
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> QSeries<D> {
        let mut r = QSeries { start: self.start, coeffs: self.coeffs.iter().map(f).collect(), order: self.order, offset: self.offset };
        r.trim();
        r
    }

    pub fn try_map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> Result<D>) -> Result<QSeries<D>> {
        let coeffs = self.coeffs.iter().map(f).collect::<Result<Vec<D>>>()?;
        let mut r = QSeries { start: self.start, coeffs, order: self.order, offset: self.offset };
        r.trim();
        Ok(r)
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        if other.is_exact() && other.coeffs.is_empty() {
            return self.clone();
        }
        if self.is_exact() && self.coeffs.is_empty() {
            return if negate { other.neg_series() } else { other.clone() };
        }
        assert_eq!(self.offset, other.offset, "adding series with different q-offsets");
        let order = self.order.min(other.order);
        let lo = match (self.valuation(), other.valuation()) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (None, None) => return Self::zero_to(order).with_offset(self.offset),
        };
        let hi = self.max_exp().unwrap_or(lo).max(other.max_exp().unwrap_or(lo)).min(order - 1);
        if hi < lo {
            return Self::zero_to(order).with_offset(self.offset);
        }
        let mut coeffs = vec![C::zero(); (hi - lo + 1) as usize];
        for (e, c) in self.terms() {
            if e <= hi {
                coeffs[(e - lo) as usize] = c.clone();
            }
        }
        for (e, c) in other.terms() {
            if e <= hi {
                let slot = &mut coeffs[(e - lo) as usize];
                *slot = if negate { slot.sub(c) } else { slot.add(c) };
            }
        }
        let mut r = QSeries { start: lo, coeffs, order, offset: self.offset };
        r.trim();
        r
    }

    fn neg_series(&self) -> Self {
        QSeries { start: self.start, coeffs: self.coeffs.iter().map(C::neg).collect(), order: self.order, offset: self.offset }
    }

    /// Precision-tracked product.
    pub fn mul_series(&self, other: &Self) -> Self {
        let offset = self.offset + other.offset;
        let exact_zero = |s: &Self| s.is_exact() && s.coeffs.is_empty();
        if exact_zero(self) || exact_zero(other) {
            return Self::zero_to(EXACT);
        }
        let va = self.valuation().unwrap_or(self.order);
        let vb = other.valuation().unwrap_or(other.order);
        let order = add_order(other.order, va).min(add_order(self.order, vb));
        let mut r = if self.coeffs.is_empty() || other.coeffs.is_empty() {
            Self::zero_to(order)
        } else {
            let lo = self.start + other.start;
            let hi = (self.max_exp().unwrap() + other.max_exp().unwrap()).min(order - 1);
            if hi < lo {
                Self::zero_to(order)
            } else {
                let n = (hi - lo + 1) as usize;
                let mut coeffs = vec![C::zero(); n];
                for (i, a) in self.coeffs.iter().enumerate() {
                    if a.is_zero() || i >= n {
                        continue;
                    }
                    let lim = (n - i).min(other.coeffs.len());
                    for (j, b) in other.coeffs[..lim].iter().enumerate() {
                        if !b.is_zero() {
                            coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
                        }
                    }
                }
                QSeries { start: lo, coeffs, order, offset: Ratio::from_integer(0) }
            }
        };
        r.trim();
        r.offset = offset;
        r.normalize_offset();
        r
    }

    /// Inverse of a series whose leading coefficient is a unit.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_exact() && self.coeffs.len() > 1 {
            return Err(Error::InsufficientOrder {
                needed: "finite order for a series inverse".into(),
                available: "exact polynomial".into(),
            });
        }
        self.inverse_impl(None)
    }

    /// Inverse known below the doubled exponent `order`.
    pub fn inverse_to(&self, order: i64) -> Result<Self> {
        self.inverse_impl(Some(order))
    }

    fn inverse_impl(&self, target: Option<i64>) -> Result<Self> {
        let v = self.valuation().ok_or_else(|| Error::NonUnitConstantTerm("zero series".into()))?;
        let lead_inv = self.coeffs[0].try_inverse().ok_or_else(|| Error::NonUnitConstantTerm(format!("{:?}", self.coeffs[0])))?;
        let mut order = add_order(self.order, -2 * v);
        if let Some(t) = target {
            order = order.min(norm_order(t));
        }
        if order == EXACT {
            // exact monomial
            let r = QSeries { start: -v, coeffs: vec![lead_inv], order: EXACT, offset: -self.offset };
            let mut r = r;
            r.normalize_offset();
            return Ok(r);
        }
        let n = (order + v).max(0) as usize;
        let unit: Vec<C> = self.coeffs.iter().take(n).map(|c| c.mul(&lead_inv)).collect();
        let mut inv: Vec<C> = Vec::with_capacity(n);
        for k in 0..n {
            if k == 0 {
                inv.push(C::one());
                continue;
            }
            let mut acc = C::zero();
            for i in 1..=k.min(unit.len() - 1) {
                if !unit[i].is_zero() && !inv[k - i].is_zero() {
                    acc = acc.add(&unit[i].mul(&inv[k - i]));
                }
            }
            inv.push(acc.neg());
        }
        let coeffs = inv.into_iter().map(|c| c.mul(&lead_inv)).collect();
        let mut r = QSeries { start: -v, coeffs, order, offset: -self.offset };
        r.trim();
        r.normalize_offset();
        Ok(r)
    }

    fn require_plain(&self, what: &str) -> Result<()> {
        if *self.offset.numer() != 0 {
            return Err(Error::Unsupported(format!("{what} of a series with q-offset")));
        }
        if self.valuation().is_some_and(|v| v < 0) {
            return Err(Error::Unsupported(format!("{what} of a series with negative q-powers")));
        }
        Ok(())
    }

    /// `exp(f)`; the constant term must be exponentiable in `C`.
    pub fn exp(&self) -> Result<Self> {
        self.require_plain("exp")?;
        let f0 = self.coeff_ref(0).cloned().unwrap_or_else(C::zero);
        let e0 = f0.try_exp().ok_or_else(|| Error::NonZeroConstantTerm(format!("{f0:?}")))?;
        let g: Vec<(usize, C)> = self.terms().filter(|(e, _)| *e > 0).map(|(e, c)| (e as usize, c.clone())).collect();
        if g.is_empty() {
            return Ok(QSeries::from_coeffs(0, vec![e0], self.order));
        }
        if self.is_exact() {
            return Err(Error::InsufficientOrder { needed: "finite order for exp".into(), available: "exact polynomial".into() });
        }
        let n = self.order.max(0) as usize;
        let mut h: Vec<C> = Vec::with_capacity(n);
        if n > 0 {
            h.push(C::one());
        }
        for k in 1..n {
            let mut acc = C::zero();
            for (j, gj) in &g {
                if *j > k {
                    break;
                }
                if !h[k - j].is_zero() {
                    acc = acc.add(&gj.mul(&h[k - j]).scale(&int(*j as i64)));
                }
            }
            h.push(acc.scale(&Rational::new(1.into(), (k as i64).into())));
        }
        let coeffs = if e0.is_one() { h } else { h.iter().map(|c| c.mul(&e0)).collect() };
        Ok(QSeries::from_coeffs(0, coeffs, self.order))
    }

    /// `log(g)`; the constant term must be a unit with a logarithm in `C`.
    pub fn log(&self) -> Result<Self> {
        self.require_plain("log")?;
        let g0 = self.coeff_ref(0).cloned().unwrap_or_else(C::zero);
        let l0 = g0.try_log().ok_or_else(|| Error::NonUnitConstantTerm(format!("{g0:?}")))?;
        let g0_inv = g0.try_inverse().ok_or_else(|| Error::NonUnitConstantTerm(format!("{g0:?}")))?;
        let u: Vec<C> = self.coeffs.iter().map(|c| c.mul(&g0_inv)).collect();
        if u.len() == 1 {
            return Ok(QSeries::from_coeffs(0, vec![l0], self.order));
        }
        if self.is_exact() {
            return Err(Error::InsufficientOrder { needed: "finite order for log".into(), available: "exact polynomial".into() });
        }
        let n = self.order.max(0) as usize;
        let uk = |k: usize| u.get(k);
        let mut l: Vec<C> = vec![C::zero(); n];
        for k in 1..n {
            // k l_k = k u_k - sum_{j<k} j l_j u_{k-j}
            let mut acc = uk(k).map(|c| c.scale(&int(k as i64))).unwrap_or_else(C::zero);
            for j in 1..k {
                if l[j].is_zero() {
                    continue;
                }
                if let Some(c) = uk(k - j) {
                    if !c.is_zero() {
                        acc = acc.sub(&l[j].mul(c).scale(&int(j as i64)));
                    }
                }
            }
            l[k] = acc.scale(&Rational::new(1.into(), (k as i64).into()));
        }
        if n > 0 {
            l[0] = l0;
        }
        Ok(QSeries::from_coeffs(0, l, self.order))
    }

    /// `q -> q^k` together with every variable tracked by the coefficients.
    pub fn substitute_power_series(&self, k: u32) -> Self {
        let k64 = k as i64;
        let mut coeffs = Vec::new();
        if !self.coeffs.is_empty() {
            coeffs = vec![C::zero(); (self.coeffs.len() - 1) * k as usize + 1];
            for (i, c) in self.coeffs.iter().enumerate() {
                coeffs[i * k as usize] = c.substitute_power(k);
            }
        }
        let order = if self.order == EXACT { EXACT } else { norm_order(self.order * k64) };
        let mut r = QSeries { start: self.start * k64, coeffs, order, offset: self.offset * k64 };
        r.trim();
        r.normalize_offset();
        r
    }

    /// `psi_k`, keeping only what is known below the orders of `self`.
    pub fn adams_series(&self, k: u32) -> Self {
        let k64 = k as i64;
        let mut len = self.coeffs.len();
        if self.order != EXACT && !self.coeffs.is_empty() {
            // exponents (start + i) * k at or beyond the order are dropped
            let room = (self.order - self.start * k64).max(0);
            len = len.min((room / k64 + 2) as usize);
        }
        let mut coeffs = Vec::new();
        if len > 0 {
            coeffs = vec![C::zero(); (len - 1) * k as usize + 1];
            for (i, c) in self.coeffs[..len].iter().enumerate() {
                coeffs[i * k as usize] = c.adams(k);
            }
        }
        let order = if self.order == EXACT { EXACT } else { norm_order(self.order * k64) };
        let mut r = QSeries { start: self.start * k64, coeffs, order, offset: self.offset * k64 };
        r.trim();
        r.normalize_offset();
        r.truncate(self.order)
    }

    /// Only `q -> q^k`, leaving coefficients untouched.
    pub fn substitute_q_power(&self, k: u32) -> Self {
        let k64 = k as i64;
        let mut coeffs = Vec::new();
        if !self.coeffs.is_empty() {
            coeffs = vec![C::zero(); (self.coeffs.len() - 1) * k as usize + 1];
            for (i, c) in self.coeffs.iter().enumerate() {
                coeffs[i * k as usize] = c.clone();
            }
        }
        let order = if self.order == EXACT { EXACT } else { norm_order(self.order * k64) };
        let mut r = QSeries { start: self.start * k64, coeffs, order, offset: self.offset * k64 };
        r.trim();
        r.normalize_offset();
        r
    }

    /// First doubled exponent below both orders where the series differ.
    pub fn first_difference(&self, other: &Self) -> Option<i64> {
        if self.offset != other.offset {
            return Some(i64::MIN);
        }
        let order = self.order.min(other.order);
        let lo = self.valuation().into_iter().chain(other.valuation()).min()?;
        let hi = self.max_exp().into_iter().chain(other.max_exp()).max()?.min(order - 1);
        let zero = C::zero();
        (lo..=hi).find(|&e| self.coeff_ref(e).unwrap_or(&zero) != other.coeff_ref(e).unwrap_or(&zero))
    }

    /// Equality of all coefficients below both orders.
    pub fn agrees_with(&self, other: &Self) -> bool {
        self.first_difference(other).is_none()
    }
}

impl<C: Ring> Ring for QSeries<C> {
    fn zero() -> Self {
        Self::zero_to(EXACT)
    }
    fn one() -> Self {
        Self::constant(C::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn is_one(&self) -> bool {
        self.offset.numer() == &0 && self.start == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }
    fn add(&self, other: &Self) -> Self {
        self.combine(other, false)
    }
    fn sub(&self, other: &Self) -> Self {
        self.combine(other, true)
    }
    fn neg(&self) -> Self {
        self.neg_series()
    }
    fn mul(&self, other: &Self) -> Self {
        self.mul_series(other)
    }
    fn scale(&self, r: &Rational) -> Self {
        let mut s =
            QSeries { start: self.start, coeffs: self.coeffs.iter().map(|c| c.scale(r)).collect(), order: self.order, offset: self.offset };
        s.trim();
        s
    }
    fn from_rational(r: Rational) -> Self {
        Self::constant(C::from_rational(r))
    }
    fn try_inverse(&self) -> Option<Self> {
        self.inverse().ok()
    }
    fn substitute_power(&self, k: u32) -> Self {
        self.substitute_power_series(k)
    }
    fn adams(&self, k: u32) -> Self {
        self.adams_series(k)
    }
    fn invert_t(&self) -> Self {
        self.map_coeffs(C::invert_t)
    }
    fn try_exp(&self) -> Option<Self> {
        self.exp().ok()
    }
    fn try_log(&self) -> Option<Self> {
        self.log().ok()
    }
}

impl<C: Ring + fmt::Display> fmt::Display for QSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self.offset.numer() != 0 {
            write!(f, "q^({}) * (", self.offset)?;
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono = super::tpoly::monomial_str("q", e);
            if mono.is_empty() {
                write!(f, "({c})")?;
            } else if c.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "({c}){mono}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        if self.order != EXACT {
            let m = super::tpoly::monomial_str("q", self.order);
            write!(f, " + O({})", if m.is_empty() { "1" } else { &m })?;
        }
        if *self.offset.numer() != 0 {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl<C: Ring> fmt::Debug for QSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("QSeries")
            .field("start", &self.start)
            .field("coeffs", &self.coeffs)
            .field("order", &self.order().map_or("exact".to_string(), |o| o.to_string()))
            .field("offset", &self.offset)
            .finish()
    }
}

/// Series over `Q` with integer exponents from a coefficient list
/// `c_0, c_1, ...` known below `q^{len}`.
pub fn rational_series(coeffs: &[i64]) -> QSeries<Rational> {
    let n = coeffs.len();
    let mut dense = vec![Rational::zero(); 2 * n];
    for (i, c) in coeffs.iter().enumerate() {
        dense[2 * i] = int(*c);
    }
    QSeries::from_coeffs(0, dense, 2 * n as i64)
}

impl QSeries<Rational> {
    /// Coefficients of integral powers `q^0 .. q^{n-1}`.
    pub fn integral_coeffs(&self, n: usize) -> Vec<Rational> {
        (0..n as i64).map(|m| self.coeff(2 * m)).collect()
    }

    pub fn is_one_rational(&self) -> bool {
        self.valuation() == Some(0) && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rational::rat;

    #[test]
    fn product_order_is_minimal() {
        let a = rational_series(&[1, 1, 0, 0, 0]); // 1 + q + O(q^5)
        let b = rational_series(&[1, -1, 0, 0, 0]);
        let c = a.mul(&b);
        assert_eq!(c.order(), Some(10));
        assert_eq!(c.integral_coeffs(5), rational_series(&[1, 0, -1, 0, 0]).integral_coeffs(5));
        let shifted = a.shift(4).mul(&b);
        assert_eq!(shifted.order(), Some(14));
    }

    #[test]
    fn inverse_order_and_value() {
        let a = rational_series(&[0, 1, 1, 0, 0, 0]); // q + q^2 + O(q^6)
        let inv = a.inverse().unwrap();
        assert_eq!(inv.valuation(), Some(-2));
        assert_eq!(inv.order(), Some(8));
        assert!(a.mul(&inv).truncate(6).agrees_with(&QSeries::one()));
    }

    #[test]
    fn exp_log_round_trip() {
        let f = rational_series(&[0, 3, -1, 2, 0, 5, 1, 0]);
        let g = f.exp().unwrap();
        assert!(g.log().unwrap().agrees_with(&f));
        // log(1/(1-q)) = sum q^k / k
        let geo = rational_series(&[1, -1, 0, 0, 0, 0, 0, 0]).inverse().unwrap();
        let l = geo.log().unwrap();
        for k in 1..8 {
            assert_eq!(l.coeff(2 * k), rat(1, k));
        }
        assert!(matches!(f.shift(-4).exp(), Err(Error::Unsupported(_))));
        assert!(matches!(rational_series(&[2, 1]).log(), Err(Error::NonUnitConstantTerm(_))));
        assert!(matches!(rational_series(&[1, 1]).exp(), Err(Error::NonZeroConstantTerm(_))));
    }

    #[test]
    fn offsets_fold_into_exponents() {
        let eta_like = rational_series(&[1, -1, 0]).with_offset(Ratio::new(1, 24));
        let p = eta_like.pow(12);
        assert_eq!(p.offset(), Ratio::from_integer(0));
        assert_eq!(p.valuation(), Some(1));
        let inv = eta_like.inverse().unwrap();
        assert_eq!(inv.offset(), Ratio::new(11, 24));
        assert_eq!(inv.valuation(), Some(-1));
    }

    #[test]
    fn substitute_power_scales_everything() {
        let a = rational_series(&[0, 1, 1, 0]);
        let b = a.substitute_power(2);
        assert_eq!(b.order(), Some(16));
        assert_eq!(b.coeff(4), int(1));
        assert_eq!(b.coeff(8), int(1));
        assert_eq!(b.coeff(6), int(0));
    }

    #[test]
    #[should_panic]
    fn no_coefficient_beyond_order() {
        rational_series(&[1, 2]).coeff(4);
    }
}
