//! Products of Jacobi theta functions, eta functions and their prefactors.
//!
//! A [`JacobiWord`] is a formal product
//! `c * q^{s/2} * prod Theta(x_i, q^{j_i})^{e_i} * prod eta(q^{j})^{e} * prod (x^{1/2} - x^{-1/2})^{e}`
//! with every `x` a monomial `t^{a/2} p^{b/2}`. Evaluation splits each theta
//! function into its prefactor `x^{1/2} - x^{-1/2}` and its product part.
//! All product parts are combined into one plethystic exponential, while
//! the prefactors are multiplied out symbolically per argument, so that
//! quarter powers such as `t^{1/4}` cancel before anything is expanded.

use std::collections::BTreeMap;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::plethysm::pleth_exp;
use crate::series::rational::{int, Rational};
use crate::series::{PLaurent, QSeries, Ring, TPoly, TRat};

/// The monomial `t^{t2/2} p^{p2/2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mono {
    pub t2: i64,
    pub p2: i64,
}

impl Mono {
    pub const fn new(t2: i64, p2: i64) -> Self {
        Mono { t2, p2 }
    }

    /// `t`
    pub const T: Mono = Mono::new(2, 0);
    /// `p`
    pub const P: Mono = Mono::new(0, 2);
    /// `t^{1/2} p`
    pub const T_HALF_P: Mono = Mono::new(1, 2);
    /// `t^{-1/2} p`
    pub const T_MINUS_HALF_P: Mono = Mono::new(-1, 2);

    pub fn inverse(self) -> Mono {
        Mono::new(-self.t2, -self.p2)
    }

    pub fn is_one(self) -> bool {
        self.t2 == 0 && self.p2 == 0
    }

    /// Canonical representative of `{x, 1/x}` and the sign picked up by
    /// `x^{1/2} - x^{-1/2}` when passing to it.
    fn canonical(self) -> (Mono, i64) {
        if self.p2 > 0 || (self.p2 == 0 && self.t2 > 0) {
            (self, 1)
        } else {
            (self.inverse(), -1)
        }
    }

    pub fn to_plaurent(self, c: Rational) -> PLaurent {
        PLaurent::from_monomials([(self.p2, self.t2, c)])
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Factor {
    Theta {
        arg: Mono,
        q_power: u32,
        exp: i32,
    },
    Eta {
        q_power: u32,
        exp: i32,
    },
    /// `(x^{1/2} - x^{-1/2})^exp`
    Gap {
        arg: Mono,
        exp: i32,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct JacobiWord {
    pub constant: Rational,
    /// Explicit factor `q^{q_shift2/2}`.
    pub q_shift2: i64,
    pub factors: Vec<Factor>,
}

impl JacobiWord {
    pub fn new(constant: Rational) -> Self {
        JacobiWord { constant, q_shift2: 0, factors: Vec::new() }
    }

    pub fn theta(mut self, arg: Mono, q_power: u32, exp: i32) -> Self {
        self.factors.push(Factor::Theta { arg, q_power, exp });
        self
    }

    pub fn eta(mut self, q_power: u32, exp: i32) -> Self {
        self.factors.push(Factor::Eta { q_power, exp });
        self
    }

    pub fn gap(mut self, arg: Mono, exp: i32) -> Self {
        self.factors.push(Factor::Gap { arg, exp });
        self
    }

    pub fn q_shift(mut self, twice: i64) -> Self {
        self.q_shift2 += twice;
        self
    }

    /// Total `q`-offset contributed by eta factors and the explicit shift.
    pub fn q_offset(&self) -> Ratio<i64> {
        let mut off = Ratio::new(self.q_shift2, 2);
        for f in &self.factors {
            if let Factor::Eta { q_power, exp } = f {
                off += Ratio::new(*q_power as i64 * *exp as i64, 24);
            }
        }
        off
    }

    /// Net exponent of `(x^{1/2} - x^{-1/2})` per canonical argument,
    /// and the overall sign.
    pub fn prefactor_exponents(&self) -> Result<(BTreeMap<Mono, i64>, i64)> {
        let mut net: BTreeMap<Mono, i64> = BTreeMap::new();
        let mut sign = 1;
        for f in &self.factors {
            let (arg, exp) = match f {
                Factor::Theta { arg, exp, .. } | Factor::Gap { arg, exp } => (*arg, *exp as i64),
                Factor::Eta { .. } => continue,
            };
            if arg.is_one() {
                return Err(Error::DivisionByZero);
            }
            let (c, s) = arg.canonical();
            if s < 0 && exp % 2 != 0 {
                sign = -sign;
            }
            *net.entry(c).or_insert(0) += exp;
        }
        net.retain(|_, e| *e != 0);
        Ok((net, sign))
    }

    /// Logarithmic argument whose plethystic exponential is the product
    /// part of the word, known below `q^{order2/2}`.
    pub fn product_argument(&self, order2: i64) -> QSeries<PLaurent> {
        let mut acc = QSeries::<PLaurent>::zero_to(order2);
        for f in &self.factors {
            let (base, q_power, exp) = match f {
                Factor::Theta { arg, q_power, exp } => {
                    let x = arg.to_plaurent(int(1));
                    let b = x.add(&arg.inverse().to_plaurent(int(1))).sub(&PLaurent::from_rational(int(2)));
                    (b, *q_power, *exp)
                }
                Factor::Eta { q_power, exp } => (PLaurent::one(), *q_power, *exp),
                Factor::Gap { .. } => continue,
            };
            // -exp * base * sum_{m>=1} q^{jm}
            let c = base.scale(&int(-(exp as i64)));
            let step = 2 * q_power as i64;
            let terms = (1..).map(|m| m * step).take_while(|e| *e < order2).map(|e| (e, c.clone()));
            acc = acc.add(&QSeries::from_terms(terms, order2));
        }
        acc
    }

    /// Product of all prefactors, with negative net powers inverted as a
    /// series in positive powers of `p` known below `p^{p_prec2/2}`.
    pub fn prefactor(&self, p_prec2: i64) -> Result<PLaurent> {
        let (net, sign) = self.prefactor_exponents()?;
        let mut num = QuarterPoly::one();
        let mut den = QuarterPoly::one();
        for (arg, e) in &net {
            let g = QuarterPoly::gap(*arg);
            for _ in 0..e.unsigned_abs() {
                if *e > 0 {
                    num = num.mul(&g);
                } else {
                    den = den.mul(&g);
                }
            }
        }
        let num = num.to_plaurent()?;
        let den = den.to_plaurent()?;
        let c = Rational::from_integer(sign.into()) * &self.constant;
        // a p-free or single-power denominator inverts exactly
        let inv = if den.len() == 1 { den.try_inverse().ok_or(Error::DivisionByZero)? } else { den.inverse_to(p_prec2)? };
        Ok(num.mul(&inv).scale(&c))
    }

    /// Expansion known below `q^{order2/2}` (relative to the offset) with
    /// `p`-precision governed by `p_prec2` wherever a prefactor had to be
    /// inverted.
    pub fn eval(&self, order2: i64, p_prec2: i64) -> Result<QSeries<PLaurent>> {
        let off = self.q_offset();
        let slack = 2 * (off.numer().abs() / off.denom() + 1) + 2;
        let product = pleth_exp(&self.product_argument(order2 + slack))?;
        let pre = self.prefactor(p_prec2)?;
        Ok(product.map_coeffs(|c| c.mul(&pre)).with_offset(off).truncate(order2))
    }

    /// Same value as [`JacobiWord::eval`] but with every product factor
    /// `(1 - x q^m)^{+-1}` multiplied out one at a time.
    pub fn eval_explicit(&self, order2: i64, p_prec2: i64) -> Result<QSeries<PLaurent>> {
        let off = self.q_offset();
        let slack = 2 * (off.numer().abs() / off.denom() + 1) + 2;
        let n = order2 + slack;
        let mut acc = QSeries::<PLaurent>::constant(PLaurent::one()).truncate(n);
        for f in &self.factors {
            match f {
                Factor::Theta { arg, q_power, exp } => {
                    let step = 2 * *q_power as i64;
                    let mut m = step;
                    while m < n {
                        for x in [*arg, arg.inverse()] {
                            acc = acc.mul(&linear_factor_power(x, m, *exp, n));
                        }
                        acc = acc.mul(&linear_factor_power(Mono::new(0, 0), m, -2 * *exp, n));
                        m += step;
                    }
                }
                Factor::Eta { q_power, exp } => {
                    let step = 2 * *q_power as i64;
                    let mut m = step;
                    while m < n {
                        acc = acc.mul(&linear_factor_power(Mono::new(0, 0), m, *exp, n));
                        m += step;
                    }
                }
                Factor::Gap { .. } => {}
            }
        }
        let pre = self.prefactor(p_prec2)?;
        Ok(acc.map_coeffs(|c| c.mul(&pre)).with_offset(off).truncate(order2))
    }
}

/// `(1 - x q^{m2/2})^e` known below `q^{order2/2}`.
pub fn linear_factor_power(x: Mono, m2: i64, e: i32, order2: i64) -> QSeries<PLaurent> {
    let xp = x.to_plaurent(int(1));
    let base = if e >= 0 {
        QSeries::from_terms([(0, PLaurent::one()), (m2, xp.neg())], order2)
    } else {
        // geometric series sum_k x^k q^{k m}
        let mut terms = Vec::new();
        let mut pw = PLaurent::one();
        let mut k = 0;
        while k * m2 < order2 {
            terms.push((k * m2, pw.clone()));
            pw = pw.mul(&xp);
            k += 1;
        }
        QSeries::from_terms(terms, order2)
    };
    base.pow(e.unsigned_abs()).truncate(order2)
}

/// Laurent polynomial in `t^{1/4}, p^{1/4}`; used only to multiply out
/// prefactors before checking that every exponent lands on the half grid.
#[derive(Clone, Debug, PartialEq)]
struct QuarterPoly(BTreeMap<(i64, i64), Rational>);

impl QuarterPoly {
    fn one() -> Self {
        QuarterPoly(BTreeMap::from([((0, 0), int(1))]))
    }

    /// `x^{1/2} - x^{-1/2}`; for `x = t^{a/2} p^{b/2}` the quarter
    /// exponents of `x^{1/2}` are exactly `(a, b)`.
    fn gap(x: Mono) -> Self {
        QuarterPoly(BTreeMap::from([((x.t2, x.p2), int(1)), ((-x.t2, -x.p2), int(-1))]))
    }

    fn mul(&self, o: &Self) -> Self {
        let mut r: BTreeMap<(i64, i64), Rational> = BTreeMap::new();
        for ((a1, b1), c1) in &self.0 {
            for ((a2, b2), c2) in &o.0 {
                let e = r.entry((a1 + a2, b1 + b2)).or_insert_with(|| int(0));
                *e += c1 * c2;
            }
        }
        r.retain(|_, c| !Ring::is_zero(c));
        QuarterPoly(r)
    }

    fn to_plaurent(&self) -> Result<PLaurent> {
        let mut by_p: BTreeMap<i64, TPoly> = BTreeMap::new();
        for ((a, b), c) in &self.0 {
            if a % 2 != 0 || b % 2 != 0 {
                return Err(Error::QuarterExponent(format!("t^({a}/4) p^({b}/4)")));
            }
            by_p.entry(b / 2).or_default().add_term(a / 2, c.clone());
        }
        Ok(PLaurent::from_terms(by_p.into_iter().map(|(e, p)| (e, TRat::from_poly(p)))))
    }
}
