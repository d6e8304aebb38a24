//! Three-way checks of the Jacobi form identities: an explicit double sum,
//! the displayed infinite product, and a quotient of theta and eta
//! functions, all expanded independently.

use crate::error::Result;
use crate::plethysm::qint;
use crate::report::{compare_qp, Mismatch, Report};
use crate::series::rational::int;
use crate::series::{PLaurent, QSeries, Ring, TPoly, TRat};

use super::word::{linear_factor_power, JacobiWord, Mono};

fn qint_at(n: i64) -> TRat {
    TRat::from_poly(qint(n as u32))
}

/// `sum_{n>=1} [n]_t p^n` known below `p^{p_prec2/2}`.
fn qint_generating(p_prec2: i64) -> PLaurent {
    let mut r = PLaurent::new();
    for n in 1..=p_prec2 / 2 {
        r.add_term(2 * n, qint_at(n));
    }
    r.truncate(p_prec2)
}

/// `p / ((1 - t^{1/2} p)(1 - t^{-1/2} p))` as a product of two geometric
/// series, known below `p^{p_prec2/2}`.
fn lemma_rational(p_prec2: i64) -> PLaurent {
    let geo = |t2: i64| {
        let mut g = PLaurent::new();
        for k in 0..=p_prec2 / 2 {
            g.add_term(2 * k, TRat::from_poly(TPoly::monomial(t2 * k, int(1))));
        }
        g.truncate(p_prec2)
    };
    geo(1).mul(&geo(-1)).shift(2).truncate(p_prec2)
}

/// Adds `[n + k]_t (p^n + p^{-n}) q^{(2rn + s)/2}` for `n >= 1` below the order.
fn add_mixed_row(terms: &mut Vec<(i64, PLaurent)>, k: i64, r: i64, s: i64, order2: i64) {
    let mut n = 1;
    while 2 * r * n + s < order2 {
        let c = qint_at(n + k);
        let row = PLaurent::from_terms([(2 * n, c.clone()), (-2 * n, c)]);
        terms.push((2 * r * n + s, row));
        n += 1;
    }
}

/// Displayed product `prod_m` over `m` in the given step/offset pattern of
/// `(1 - t q^m)(1 - q^m)^2 (1 - t^{-1} q^m)` divided by the four
/// `(1 - t^{+-1/2} p^{+-1} q^m)`, doubled `q` steps.
fn jacobi_product(ms: impl Iterator<Item = i64>, numerator: bool, order2: i64) -> QSeries<PLaurent> {
    let mut acc = QSeries::constant(PLaurent::one()).truncate(order2);
    for m2 in ms.take_while(|m2| *m2 < order2) {
        for x in [Mono::new(1, 2), Mono::new(-1, 2), Mono::new(1, -2), Mono::new(-1, -2)] {
            acc = acc.mul(&linear_factor_power(x, m2, -1, order2));
        }
        if numerator {
            for (x, e) in [(Mono::T, 1), (Mono::new(0, 0), 2), (Mono::new(-2, 0), 1)] {
                acc = acc.mul(&linear_factor_power(x, m2, e, order2));
            }
        }
    }
    acc
}

fn numerator_product(ms: impl Iterator<Item = i64>, order2: i64) -> QSeries<PLaurent> {
    let mut acc = QSeries::constant(PLaurent::one()).truncate(order2);
    for m2 in ms.take_while(|m2| *m2 < order2) {
        for (x, e) in [(Mono::T, 1), (Mono::new(0, 0), 2), (Mono::new(-2, 0), 1)] {
            acc = acc.mul(&linear_factor_power(x, m2, e, order2));
        }
    }
    acc
}

/// Forms of one identity, all known below `q^{order2/2}`.
pub struct ThreeForms {
    pub sum: QSeries<PLaurent>,
    pub product: QSeries<PLaurent>,
    pub quotient: QSeries<PLaurent>,
}

/// Extra `p`-precision for prefactors, so that multiplying by terms with
/// negative `p` powers does not eat into the compared window.
pub(crate) fn prefactor_precision(order2: i64, p_window: u32) -> i64 {
    2 * (p_window as i64 + 1) + order2 + 4
}

/// `sum_{r,n>=0} [n+2r]_t p^n q^{rn+r^2} + sum_{r,n>0} [n+2r]_t p^{-n} q^{rn+r^2}`.
pub fn zagier_sum(q_order: u32, p_window: u32) -> QSeries<PLaurent> {
    let order2 = 2 * q_order as i64;
    let pp = prefactor_precision(order2, p_window);
    let mut terms = vec![(0, qint_generating(pp))];
    let mut r = 1;
    while r * r < q_order as i64 {
        terms.push((2 * r * r, PLaurent::from(qint_at(2 * r))));
        add_mixed_row(&mut terms, 2 * r, r, 2 * r * r, order2);
        r += 1;
    }
    QSeries::from_terms(terms, order2)
}

pub fn zagier_forms(q_order: u32, p_window: u32) -> Result<ThreeForms> {
    let order2 = 2 * q_order as i64;
    let pp = prefactor_precision(order2, p_window);
    let sum = zagier_sum(q_order, p_window);
    let product = jacobi_product((1..).map(|m| 2 * m), true, order2).map_coeffs(|c| c.mul(&lemma_rational(pp)));
    let quotient = JacobiWord::new(int(1))
        .gap(Mono::T, -1)
        .theta(Mono::T, 1, 1)
        .theta(Mono::T_HALF_P, 1, -1)
        .theta(Mono::T_MINUS_HALF_P, 1, -1)
        .eval(order2, pp)?;
    Ok(ThreeForms { sum, product, quotient })
}

pub fn enriques_jacobi_forms(q_order: u32, p_window: u32) -> Result<ThreeForms> {
    let order2 = 2 * q_order as i64;
    let pp = prefactor_precision(order2, p_window);
    let mut terms = Vec::new();
    let mut r = 1;
    while r * r < order2 {
        terms.push((r * r, PLaurent::from(qint_at(r))));
        add_mixed_row(&mut terms, r, r, r * r, order2);
        r += 2;
    }
    let sum = QSeries::from_terms(terms, order2);
    let odd = jacobi_product((0..).map(|m| 2 * (2 * m + 1)), false, order2);
    let product = odd.mul(&numerator_product((1..).map(|n| 4 * n), order2)).shift(1).truncate(order2);
    let quotient = JacobiWord::new(int(1))
        .theta(Mono::T, 2, 1)
        .gap(Mono::T, -1)
        .theta(Mono::T_HALF_P, 2, 1)
        .theta(Mono::T_MINUS_HALF_P, 2, 1)
        .theta(Mono::T_HALF_P, 1, -1)
        .theta(Mono::T_MINUS_HALF_P, 1, -1)
        .eta(2, 8)
        .eta(1, -4)
        .eval(order2, pp)?;
    Ok(ThreeForms { sum, product, quotient })
}

pub fn enriques_jacobi2_forms(q_order: u32, p_window: u32) -> Result<ThreeForms> {
    let order2 = 2 * q_order as i64;
    let pp = prefactor_precision(order2, p_window);
    let mut terms = vec![(0, qint_generating(pp))];
    let mut r = 2;
    while r * r < order2 {
        terms.push((r * r, PLaurent::from(qint_at(r))));
        add_mixed_row(&mut terms, r, r, r * r, order2);
        r += 2;
    }
    let sum = QSeries::from_terms(terms, order2);
    let product = jacobi_product((1..).map(|m| 4 * m), true, order2).map_coeffs(|c| c.mul(&lemma_rational(pp)));
    let quotient = JacobiWord::new(int(1))
        .theta(Mono::T, 2, 1)
        .gap(Mono::T, -1)
        .theta(Mono::T_HALF_P, 2, -1)
        .theta(Mono::T_MINUS_HALF_P, 2, -1)
        .eval(order2, pp)?;
    Ok(ThreeForms { sum, product, quotient })
}

fn t_flip(s: &QSeries<PLaurent>) -> QSeries<PLaurent> {
    s.map_coeffs(|c| c.invert_t())
}

/// `t = 1` specialization, keeping `p`.
pub(crate) fn at_t1(s: &QSeries<PLaurent>) -> Result<QSeries<PLaurent>> {
    s.try_map_coeffs(|c| {
        let mut r = PLaurent::new();
        for (e, v) in c.eval_t1()? {
            r.add_term(e, TRat::from_rational(v));
        }
        Ok(match c.precision() {
            Some(p) => r.truncate(p),
            None => r,
        })
    })
}

fn three_way(report: &mut Report, forms: &ThreeForms, order2: i64, w2: i64) -> Result<()> {
    report.check("sum = product", compare_qp(&forms.sum, &forms.product, order2, w2)?);
    report.check("product = theta quotient", compare_qp(&forms.product, &forms.quotient, order2, w2)?);
    Ok(())
}

fn symmetric(report: &mut Report, forms: &ThreeForms, order2: i64, w2: i64) -> Result<()> {
    for (name, s) in [("sum", &forms.sum), ("product", &forms.product), ("theta quotient", &forms.quotient)] {
        report.check(&format!("{name} invariant under t -> 1/t"), compare_qp(s, &t_flip(s), order2, w2)?);
    }
    Ok(())
}

fn new_report(name: &str, q_order: u32, p_window: u32) -> Report {
    Report::new(name).order("q_order", q_order as i64).order("p_window", p_window as i64)
}

/// Zagier's identity, with the mixed terms carrying `q^{rn + r^2}`.
pub fn verify_zagier(q_order: u32, p_window: u32) -> Result<Report> {
    let forms = zagier_forms(q_order, p_window)?;
    let (order2, w2) = (2 * q_order as i64, 2 * p_window as i64);
    let mut report = new_report("zagier", q_order, p_window).assume("mixed terms [n+2r]_t (p^n + p^-n) carry q^(rn + r^2)");
    three_way(&mut report, &forms, order2, w2)?;
    symmetric(&mut report, &forms, order2, w2)?;
    report.check("t = 1 classical identity", compare_qp(&classical_zagier(q_order, p_window), &at_t1(&forms.quotient)?, order2, w2)?);
    Ok(report)
}

/// Left side of Zagier's identity at `t = 1`, built with plain integers.
fn classical_zagier(q_order: u32, p_window: u32) -> QSeries<PLaurent> {
    let c = |n: i64| TRat::from_rational(int(n));
    let mut terms = Vec::new();
    let mut row = PLaurent::new();
    for n in 1..=p_window as i64 + 1 {
        row.add_term(2 * n, c(n));
    }
    terms.push((0, row.truncate(2 * p_window as i64 + 2)));
    let q = q_order as i64;
    for r in 1..q {
        for n in 0..q {
            let e = r * n + r * r;
            if e >= q {
                break;
            }
            let v =
                if n == 0 { PLaurent::constant(c(2 * r)) } else { PLaurent::from_terms([(2 * n, c(n + 2 * r)), (-2 * n, c(n + 2 * r))]) };
            terms.push((2 * e, v));
        }
    }
    QSeries::from_terms(terms, 2 * q)
}

pub fn verify_enriques_jacobi(q_order: u32, p_window: u32) -> Result<Report> {
    let forms = enriques_jacobi_forms(q_order, p_window)?;
    let (order2, w2) = (2 * q_order as i64, 2 * p_window as i64);
    let mut report = new_report("enriques-jacobi-odd", q_order, p_window);
    three_way(&mut report, &forms, order2, w2)?;
    symmetric(&mut report, &forms, order2, w2)?;
    let lead = forms.sum.coeff(1);
    report.check_bool("q^(1/2) coefficient is 1", lead == PLaurent::one());
    Ok(report)
}

pub fn verify_enriques_jacobi2(q_order: u32, p_window: u32) -> Result<Report> {
    let forms = enriques_jacobi2_forms(q_order, p_window)?;
    let (order2, w2) = (2 * q_order as i64, 2 * p_window as i64);
    let mut report = new_report("enriques-jacobi-even", q_order, p_window);
    three_way(&mut report, &forms, order2, w2)?;
    symmetric(&mut report, &forms, order2, w2)?;
    let row0 = |s: &QSeries<PLaurent>| QSeries::from_terms([(0, s.coeff(0))], 2);
    let lemma = QSeries::from_terms([(0, lemma_rational(w2 + 2))], 2);
    report.check("q^0 row is p/((1-t^(1/2)p)(1-t^(-1/2)p))", compare_qp(&row0(&forms.sum), &lemma, 2, w2)?);
    report.check("t = 1 limit", compare_qp(&at_t1(&forms.sum)?, &at_t1(&forms.quotient)?, order2, w2)?);
    Ok(report)
}

/// `sum_{m in Z} q^{2m^2 + m} = prod_m (1 - q^{2m})^2 / (1 - q^m)`.
pub fn verify_half_theta(q_order: u32) -> Report {
    let n = q_order as i64;
    let mut lhs = vec![0i64; n as usize];
    for m in -n..=n {
        let e = 2 * m * m + m;
        if (0..n).contains(&e) {
            lhs[e as usize] += 1;
        }
    }
    let lhs = crate::series::qseries::rational_series(&lhs);
    let mut rhs = QSeries::constant(int(1)).truncate(2 * n);
    for m in 1..n {
        let one_minus = |k: i64| QSeries::from_terms([(0, int(1)), (2 * k, int(-1))], 2 * n);
        rhs = rhs.mul(&one_minus(2 * m).pow(2)).mul(&one_minus(m).inverse().expect("unit"));
    }
    let mut report = Report::new("half-theta").order("q_order", n);
    let m = lhs.first_difference(&rhs).map(|e| Mismatch {
        location: format!("q^{}", crate::report::half(e)),
        left: lhs.coeff(e).to_string(),
        right: rhs.coeff(e).to_string(),
    });
    report.check("sum = product", m);
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zagier_small() {
        let r = verify_zagier(4, 4).unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn enriques_odd_small() {
        let r = verify_enriques_jacobi(3, 4).unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn enriques_even_small() {
        let r = verify_enriques_jacobi2(3, 4).unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn half_theta() {
        assert!(verify_half_theta(20).passed());
    }

    #[test]
    fn corrupted_sum_is_caught() {
        let mut f = zagier_forms(3, 3).unwrap();
        f.sum = f.sum.add(&QSeries::monomial(2, PLaurent::monomial(2, TRat::one()), 6));
        let m = compare_qp(&f.sum, &f.product, 6, 6).unwrap().unwrap();
        assert_eq!(m.location, "q^1 p^1");
    }
}
