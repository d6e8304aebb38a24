//! End-to-end checks of the Enriques pipelines, each returning a [`Report`].

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::mukai::MukaiClass;
use crate::report::{Mismatch, Report};
use crate::series::{PLaurent, Ring, TRat};

use super::low_degree::{is_palindromic, toda_slice};
use super::omega::{omega_tables, specialize_t1};
use super::pt::{pt_conjecture, pt_unrefined, EFFECTIVE_CONE};
use super::toda::{pt_from_vw_toda, vw_from_pt_solve};
use super::vw::{vw_conjecture, vw_strip, HilbertTable};

/// The refined series at `t = 1` against the unrefined product, for all
/// `beta = a s + b f` with `a <= k_max`, `b <= d_max`.
pub fn verify_unrefined(k_max: u32, d_max: u32) -> Result<Report> {
    let mut report =
        Report::new("unrefined limit of the PT series").order("k_max", k_max as i64).order("d_max", d_max as i64).assume(EFFECTIVE_CONE);
    let refined = pt_conjecture(k_max, d_max)?;
    let unrefined = pt_unrefined(k_max, d_max)?;
    let mut first = None;
    'outer: for a in 0..=k_max {
        for b in 0..=d_max {
            let (x, y) = (specialize_t1(&refined.pt_slice(a, b))?, unrefined.pt_slice(a, b));
            if x != y {
                first = Some(Mismatch::new(format!("Q_s^{a} q^{b}"), x, y));
                break 'outer;
            }
        }
    }
    report.check("PT at t = 1", first);
    Ok(report)
}

/// Toda's equation against the product side: for primitive `a s + b f`
/// the slice from the conjectural invariants equals the `Log^(2)` slice,
/// and slices of equal square agree.
pub fn verify_square_dependence(k_max: u32, d_max: u32, p_window: u32) -> Result<Report> {
    let mut report =
        Report::new("square dependence of pt").order("k_max", k_max as i64).order("d_max", d_max as i64).order("p_window", p_window as i64);
    let w2 = 2 * p_window as i64;
    let series = pt_conjecture(k_max, d_max)?;
    let mut toda: BTreeMap<i64, PLaurent> = BTreeMap::new();
    let mut by_square: BTreeMap<i64, (u32, u32, PLaurent)> = BTreeMap::new();
    let (mut toda_bad, mut square_bad) = (None, None);
    for a in 0..=k_max {
        for b in 0..=d_max {
            if a + b == 0 || (a as i64).gcd(&(b as i64)) != 1 {
                continue;
            }
            let sq = 2 * (a * b) as i64;
            let slice = series.log_slice(a, b);
            if let Entry::Vacant(e) = toda.entry(sq) {
                e.insert(toda_slice(sq, p_window)?);
            }
            if toda_bad.is_none() {
                if let Some(e) = slice.agrees_on(&toda[&sq], -w2, w2)? {
                    toda_bad =
                        Some(Mismatch::new(format!("s^{a} f^{b}, p^{}", crate::report::half(e)), slice.coeff(e)?, toda[&sq].coeff(e)?));
                }
            }
            match by_square.get(&sq) {
                Some((a0, b0, first)) if square_bad.is_none() => {
                    if let Some(e) = slice.agrees_on(first, -w2, w2)? {
                        square_bad = Some(Mismatch::new(
                            format!("s^{a} f^{b} vs s^{a0} f^{b0}, p^{}", crate::report::half(e)),
                            slice.coeff(e)?,
                            first.coeff(e)?,
                        ));
                    }
                }
                Some(_) => {}
                None => {
                    by_square.insert(sq, (a, b, slice));
                }
            }
        }
    }
    report.check("Toda slice equals Log2 slice", toda_bad);
    report.check("equal squares give equal slices", square_bad);
    Ok(report)
}

/// `vw_from_pt_solve` after `pt_from_vw_toda` returns the `a`-values it
/// started from, for squares `0, 2, ..., square_max`; a single altered
/// coefficient must make the system inconsistent.
pub fn verify_toda_round_trip(square_max: u32, p_window: u32) -> Result<Report> {
    let mut report = Report::new("Toda round trip")
        .order("square_max", square_max as i64)
        .order("p_window", p_window as i64)
        .assume("vw depends on the Mukai square only");
    let d_max = square_max as i64 / 2;
    let h = HilbertTable::new(d_max as u32 + 2);
    let mut slices = BTreeMap::new();
    for d in 0..=d_max {
        slices.insert(d, pt_from_vw_toda(2 * d, p_window, &|c| vw_strip(&h, c))?);
    }
    let a = vw_from_pt_solve(&slices, p_window)?;
    let mut bad = None;
    for (m2, v) in &a {
        let want = TRat::from_poly(h.a(*m2)?);
        if *v != want {
            bad = Some(Mismatch::new(format!("a({})", crate::report::half(*m2)), v, &want));
            break;
        }
    }
    report.check("recovered a-values", bad);
    let mut corrupted = slices.clone();
    if let Some(s) = corrupted.get_mut(&1) {
        s.add_term(-2, TRat::one());
    }
    let caught = matches!(vw_from_pt_solve(&corrupted, p_window), Err(Error::Inconsistent(_)));
    report.check_bool("perturbed slice is rejected", caught || d_max < 1);
    Ok(report)
}

/// Every class `(r, beta, n)` with `0 <= r <= r_max`, `1 <= div(beta) <= 2`,
/// `0 <= beta^2 <= square_max` and `|n| <= n_max`.
pub fn test_classes(r_max: i64, square_max: i64, n_max: i64) -> Vec<MukaiClass> {
    let mut out = Vec::new();
    for r in 0..=r_max {
        for beta_div in 1..=2 {
            for beta_sq in (0..=square_max).step_by(2 * beta_div as usize * beta_div as usize) {
                for n in -n_max..=n_max {
                    if let Ok(c) = MukaiClass::new(r, beta_sq, beta_div, n) {
                        out.push(c);
                    }
                }
            }
        }
    }
    out
}

/// Polynomiality, palindromicity, the vanishing for `(v/div)^2 < -1` and
/// the vanishing of `vw` at even rank for primitive `beta`.
pub fn verify_invariants(r_max: i64, square_max: i64, n_max: i64) -> Result<Report> {
    let mut report = Report::new("structural invariants").order("r_max", r_max).order("square_max", square_max).order("n_max", n_max);
    let classes = test_classes(r_max, square_max, n_max);
    let top = classes.iter().map(|c| c.enriques_square()).max().unwrap_or(0);
    let h = HilbertTable::new((top / 2 + 2).max(2) as u32);
    let (mut poly, mut pal, mut vanish, mut even) = (None, None, None, None);
    for c in &classes {
        let v = vw_conjecture(&h, c)?;
        let at = || format!("({}, beta^2 = {} div {}, {})", c.r, c.beta_sq, c.beta_div, c.n);
        if !v.polynomial && poly.is_none() {
            poly = Some(Mismatch::new(at(), &v.value, "a Laurent polynomial"));
        }
        if !v.value.is_palindromic() && pal.is_none() {
            pal = Some(Mismatch::new(at(), &v.value, "t -> 1/t invariant"));
        }
        let primitive_sq = c.enriques_square() / (c.div * c.div);
        if primitive_sq < -1 && !v.value.is_zero() && vanish.is_none() {
            vanish = Some(Mismatch::new(at(), &v.value, 0));
        }
        if c.r % 2 == 0 && c.beta_div == 1 && even.is_none() {
            let s = vw_strip(&h, c)?;
            if !s.is_zero() {
                even = Some(Mismatch::new(at(), s, 0));
            }
        }
    }
    report.check("vw is a Laurent polynomial", poly);
    report.check("vw is palindromic", pal);
    report.check("vw vanishes below square -1", vanish);
    report.check("vw vanishes at even rank", even);

    let series = pt_conjecture(2, 4)?;
    let bad_slice = (0..=2u32)
        .flat_map(|a| (0..=4u32).map(move |b| (a, b)))
        .find(|&(a, b)| !is_palindromic(&series.pt_slice(a, b)) || !is_palindromic(&series.log_slice(a, b)));
    report.check(
        "PT and pt slices are palindromic",
        bad_slice.map(|(a, b)| Mismatch::new(format!("Q_s^{a} q^{b}"), "not palindromic", "palindromic")),
    );
    let omega = omega_tables(4, 6)?;
    let bad_omega = omega.refined.iter().find(|(_, c)| !c.is_palindromic());
    report.check("Omega is palindromic", bad_omega.map(|((r, n), c)| Mismatch::new(format!("Omega({r}, {n})"), c, "palindromic")));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_unrefined_limit() {
        let r = verify_unrefined(1, 4).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn small_square_dependence() {
        let r = verify_square_dependence(2, 4, 4).unwrap();
        assert!(r.passed(), "{r} {:?}", r.details);
    }

    #[test]
    fn small_round_trip() {
        let r = verify_toda_round_trip(6, 4).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn invariants_hold() {
        let r = verify_invariants(3, 8, 2).unwrap();
        assert!(r.passed(), "{r} {:?}", r.details);
    }

    #[test]
    fn classes_are_valid() {
        let cs = test_classes(2, 8, 1);
        assert!(cs.iter().all(|c| c.beta_sq % (2 * c.beta_div * c.beta_div) == 0));
        assert!(cs.iter().any(|c| c.div == 2));
    }
}
