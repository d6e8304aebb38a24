//! Quasi-modular forms for `Gamma_0(2)` as polynomials in `G_2` over
//! `Q[A, G_4]`, where `A = 2 G_2(q^2) - G_2(q)` spans the modular forms of
//! weight 2 and `G_4` completes the generators.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::solve;
use crate::series::rational::{int, Rational};
use crate::series::{QSeries, Ring};
use crate::special::eisenstein::eisenstein_g;

/// Human-readable statement of the chosen basis, recorded in reports.
pub const BASIS: &str = "Mod(Gamma_0(2)) = Q[A, G4] with A = 2 G2(q^2) - G2(q); QMod = Mod[G2]";

/// `G_2^g2 A^a G_4^g4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct QModMonomial {
    pub g2: u32,
    pub a: u32,
    pub g4: u32,
}

impl QModMonomial {
    pub fn weight(&self) -> u32 {
        2 * self.g2 + 2 * self.a + 4 * self.g4
    }
}

impl fmt::Display for QModMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = [("G2", self.g2), ("A", self.a), ("G4", self.g4)]
            .iter()
            .filter(|(_, e)| *e > 0)
            .map(|(n, e)| if *e == 1 { n.to_string() } else { format!("{n}^{e}") })
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// Monomials of a given weight, `G_2`-free ones first.
pub fn monomials(weight: u32) -> Vec<QModMonomial> {
    let mut out = Vec::new();
    if !weight.is_multiple_of(2) {
        return out;
    }
    for g2 in 0..=weight / 2 {
        for g4 in 0..=(weight - 2 * g2) / 4 {
            let a = (weight - 2 * g2 - 4 * g4) / 2;
            out.push(QModMonomial { g2, a, g4 });
        }
    }
    out
}

/// Dimension of the modular forms of `Gamma_0(2)` in the given weight.
pub fn modular_dimension(weight: u32) -> usize {
    monomials(weight).iter().filter(|m| m.g2 == 0).count()
}

/// The generators expanded below `q^order`.
#[derive(Clone, Debug)]
pub struct QModBasis {
    order: u32,
    g2: QSeries<Rational>,
    a: QSeries<Rational>,
    g4: QSeries<Rational>,
}

impl QModBasis {
    pub fn new(order: u32) -> Result<Self> {
        let order2 = 2 * order as i64;
        let g2 = eisenstein_g(2, order)?;
        let g2_at_q2 = eisenstein_g(2, order.div_ceil(2))?.substitute_power(2).truncate(order2);
        let a = g2_at_q2.scale(&int(2)).sub(&g2);
        Ok(QModBasis { order, g2, a, g4: eisenstein_g(4, order)? })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn expand(&self, m: &QModMonomial) -> QSeries<Rational> {
        self.g2.pow(m.g2).mul(&self.a.pow(m.a)).mul(&self.g4.pow(m.g4)).truncate(2 * self.order as i64)
    }

    /// The element with the given representation, expanded.
    pub fn element(&self, weight: u32, terms: BTreeMap<QModMonomial, Rational>) -> QModElement {
        let mut q = QSeries::zero_to(2 * self.order as i64);
        for (m, c) in &terms {
            debug_assert_eq!(m.weight(), weight);
            q = q.add(&self.expand(m).scale(c));
        }
        let terms = terms.into_iter().filter(|(_, c)| *c != int(0)).collect();
        QModElement { weight, order: self.order, terms, q_expansion: q }
    }

    /// Solves for the representation of `f` as a weight-`weight`
    /// quasi-modular form, using every coefficient below `q^order`.
    pub fn decompose(&self, f: &QSeries<Rational>, weight: u32) -> Result<QModElement> {
        let order2 = 2 * self.order as i64;
        let not_qm = |reason: String| Error::NotQuasiModular { weight, reason };
        if f.offset() != num_rational::Ratio::from_integer(0) {
            return Err(not_qm(format!("q-offset {}", f.offset())));
        }
        let f = f.truncate(order2);
        if f.raw_order() < order2 {
            return Err(Error::InsufficientOrder {
                needed: format!("q^{}", self.order),
                available: format!("doubled q^{}", f.raw_order()),
            });
        }
        let ms = monomials(weight);
        if ms.is_empty() {
            return match f.valuation() {
                None => Ok(self.element(weight, BTreeMap::new())),
                Some(e) => Err(not_qm(format!("odd weight with a nonzero doubled q^{e} coefficient"))),
            };
        }
        let expansions: Vec<QSeries<Rational>> = ms.iter().map(|m| self.expand(m)).collect();
        let rows: Vec<Vec<Rational>> = (0..order2).map(|e| expansions.iter().map(|s| s.coeff(e)).collect()).collect();
        let rhs: Vec<Rational> = (0..order2).map(|e| f.coeff(e)).collect();
        let x = solve(&rows, &rhs, ms.len()).map_err(|e| match e {
            Error::Inconsistent(reason) => not_qm(reason),
            other => other,
        })?;
        Ok(self.element(weight, ms.into_iter().zip(x).collect()))
    }

    /// Formal `d/dG_2`, lowering the weight by 2.
    pub fn derivative(&self, x: &QModElement) -> QModElement {
        let mut terms = BTreeMap::new();
        for (m, c) in &x.terms {
            if m.g2 > 0 {
                let lower = QModMonomial { g2: m.g2 - 1, ..*m };
                terms.insert(lower, c * int(m.g2 as i64));
            }
        }
        self.element(x.weight.saturating_sub(2), terms)
    }

    pub fn product(&self, x: &QModElement, y: &QModElement) -> QModElement {
        let mut terms: BTreeMap<QModMonomial, Rational> = BTreeMap::new();
        for (m, c) in &x.terms {
            for (n, d) in &y.terms {
                let k = QModMonomial { g2: m.g2 + n.g2, a: m.a + n.a, g4: m.g4 + n.g4 };
                *terms.entry(k).or_insert_with(|| int(0)) += c * d;
            }
        }
        self.element(x.weight + y.weight, terms)
    }

    pub fn sum(&self, x: &QModElement, y: &QModElement) -> Result<QModElement> {
        if x.weight != y.weight && !x.terms.is_empty() && !y.terms.is_empty() {
            return Err(Error::Unsupported(format!("sum of weights {} and {}", x.weight, y.weight)));
        }
        let mut terms = x.terms.clone();
        for (m, c) in &y.terms {
            *terms.entry(*m).or_insert_with(|| int(0)) += c;
        }
        Ok(self.element(x.weight.max(y.weight), terms))
    }
}

/// A quasi-modular form with its representation and expansion.
#[derive(Clone, Debug, PartialEq)]
pub struct QModElement {
    pub weight: u32,
    pub order: u32,
    pub terms: BTreeMap<QModMonomial, Rational>,
    pub q_expansion: QSeries<Rational>,
}

impl QModElement {
    pub fn is_modular(&self) -> bool {
        self.terms.keys().all(|m| m.g2 == 0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for QModElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("({c}) {m}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// [`QModBasis::decompose`] with a basis built for `order`.
pub fn qmod_decompose(f: &QSeries<Rational>, weight: u32, order: u32) -> Result<QModElement> {
    QModBasis::new(order)?.decompose(f, weight)
}

pub fn g2_derivative(x: &QModElement) -> Result<QModElement> {
    Ok(QModBasis::new(x.order)?.derivative(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rational::rat;

    #[test]
    fn dimensions_of_modular_forms() {
        let dims: Vec<usize> = [0, 2, 4, 6, 8].iter().map(|w| modular_dimension(*w)).collect();
        assert_eq!(dims, vec![1, 1, 2, 2, 3]);
        assert!(monomials(3).is_empty());
    }

    #[test]
    fn the_basis_is_independent_to_order_8() {
        let b = QModBasis::new(8).unwrap();
        for w in (0..=6).step_by(2) {
            let zero = QSeries::zero_to(16);
            let x = b.decompose(&zero, w).unwrap();
            assert!(x.is_zero(), "weight {w}");
        }
        // weight 8 has 9 monomials, more than the 8 available coefficients
        assert!(b.decompose(&QSeries::zero_to(16), 8).is_err());
    }

    #[test]
    fn g2_decomposes_as_itself() {
        let b = QModBasis::new(8).unwrap();
        let x = b.decompose(&eisenstein_g(2, 8).unwrap(), 2).unwrap();
        let g2 = QModMonomial { g2: 1, a: 0, g4: 0 };
        assert_eq!(x.terms, BTreeMap::from([(g2, int(1))]));
        let d = b.derivative(&x);
        assert_eq!(d.terms, BTreeMap::from([(QModMonomial { g2: 0, a: 0, g4: 0 }, int(1))]));
        assert_eq!(d.q_expansion, QSeries::constant(int(1)).truncate(16));
    }

    #[test]
    fn the_level_two_combination_is_modular() {
        let g2q2 = eisenstein_g(2, 4).unwrap().substitute_power(2).truncate(16);
        let f = g2q2.scale(&int(2)).sub(&eisenstein_g(2, 8).unwrap());
        let x = qmod_decompose(&f, 2, 8).unwrap();
        assert!(x.is_modular());
        assert!(g2_derivative(&x).unwrap().is_zero());
        // G_2(q^2) alone is half G_2 plus half A
        let half = qmod_decompose(&g2q2, 2, 8).unwrap();
        assert_eq!(half.terms.values().cloned().collect::<Vec<_>>(), vec![rat(1, 2), rat(1, 2)]);
    }

    #[test]
    fn g4_of_q2_lies_in_weight_4() {
        let f = eisenstein_g(4, 4).unwrap().substitute_power(2).truncate(16);
        assert!(qmod_decompose(&f, 4, 8).unwrap().is_modular());
    }

    #[test]
    fn a_non_modular_series_is_rejected() {
        // G_2(q^3) is not a form for Gamma_0(2)
        let f = eisenstein_g(2, 3).unwrap().substitute_power(3).truncate(16);
        assert!(matches!(qmod_decompose(&f, 2, 8), Err(Error::NotQuasiModular { weight: 2, .. })));
        let odd = QSeries::constant(int(1)).truncate(16);
        assert!(matches!(qmod_decompose(&odd, 3, 8), Err(Error::NotQuasiModular { .. })));
    }
}
