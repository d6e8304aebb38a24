//! The `verify` verb: named checks run concurrently and merged in suite
//! order.

use anyhow::Result;
use clap::ValueEnum;
use rayon::prelude::*;
use refined_vw::enriques::{
    enriques_point_series, low_degree_vectors, points_vw_extract, verify_fiber, verify_invariants, verify_square_dependence,
    verify_toda_round_trip, verify_unrefined, SymbolReading,
};
use refined_vw::hae::verify_hae;
use refined_vw::k3::verify_k3_equivalence;
use refined_vw::report::{compare_qp, Mismatch, Report};
use refined_vw::series::{PLaurent, QSeries, Ring, TRat};
use refined_vw::special::identities::{
    enriques_jacobi2_forms, enriques_jacobi_forms, verify_enriques_jacobi, verify_enriques_jacobi2, verify_half_theta, verify_zagier,
    zagier_forms, ThreeForms,
};
use serde::Serialize;

use crate::config::RunConfig;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Item {
    Zagier,
    JacobiOdd,
    JacobiEven,
    HalfTheta,
    Unrefined,
    SquareDependence,
    LowDegree,
    Fiber,
    Points,
    RoundTrip,
    Invariants,
    K3,
    Hae,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Every item.
    Default,
    /// The Jacobi form identities.
    Jacobi,
    /// Everything about the Enriques surface.
    Enriques,
    K3,
    Hae,
}

impl Suite {
    pub fn items(self) -> Vec<Item> {
        use Item::*;
        match self {
            Suite::Default => Item::value_variants().to_vec(),
            Suite::Jacobi => vec![Zagier, JacobiOdd, JacobiEven, HalfTheta],
            Suite::Enriques => vec![Unrefined, SquareDependence, LowDegree, Fiber, Points, RoundTrip, Invariants],
            Suite::K3 => vec![K3],
            Suite::Hae => vec![Hae],
        }
    }
}

/// Runs the items on the current rayon pool; the output order is the
/// order of `items`.
pub fn run(items: &[Item], cfg: &RunConfig, corrupt: bool, reading: SymbolReading) -> Vec<Report> {
    items
        .par_iter()
        .map(|item| {
            run_one(*item, cfg, corrupt, reading).unwrap_or_else(|e| {
                let mut r = Report::new(&format!("{item:?}"));
                r.check("computation", Some(Mismatch::new("error", e, "a result")));
                r
            })
        })
        .collect()
}

fn run_one(item: Item, cfg: &RunConfig, corrupt: bool, reading: SymbolReading) -> Result<Report> {
    let (q, w) = (cfg.q_order, cfg.p_window);
    if corrupt {
        let forms = match item {
            Item::Zagier => Some(("zagier", zagier_forms(q, w)?)),
            Item::JacobiOdd => Some(("enriques-jacobi-odd", enriques_jacobi_forms(q, w)?)),
            Item::JacobiEven => Some(("enriques-jacobi-even", enriques_jacobi2_forms(q, w)?)),
            _ => None,
        };
        if let Some((name, forms)) = forms {
            return corrupted(name, forms, cfg);
        }
    }
    Ok(match item {
        Item::Zagier => verify_zagier(q, w)?,
        Item::JacobiOdd => verify_enriques_jacobi(q, w)?,
        Item::JacobiEven => verify_enriques_jacobi2(q, w)?,
        Item::HalfTheta => verify_half_theta(2 * q),
        Item::Unrefined => verify_unrefined(cfg.k_max, cfg.d_max)?,
        Item::SquareDependence => verify_square_dependence(cfg.k_max, cfg.d_max, w)?,
        Item::LowDegree => low_degree(w, reading)?,
        Item::Fiber => verify_fiber(q.max(12), 6)?,
        Item::Points => points(q)?,
        Item::RoundTrip => verify_toda_round_trip(2 * cfg.d_max, w)?,
        Item::Invariants => verify_invariants(3, 2 * cfg.d_max as i64, 3)?,
        Item::K3 => verify_k3_equivalence(q.min(8), w.min(8))?,
        Item::Hae => verify_hae(q, cfg.eps_order)?,
    })
}

/// The sum/product comparison after adding `p q` to the product form.
fn corrupted(name: &str, mut forms: ThreeForms, cfg: &RunConfig) -> Result<Report> {
    let (order2, w2) = (2 * cfg.q_order as i64, 2 * cfg.p_window as i64);
    let bump = QSeries::from_terms([(2, PLaurent::monomial(2, TRat::one()))], order2);
    forms.product = forms.product.add(&bump);
    let mut r = Report::new(&format!("{name} (corrupted)")).order("q_order", cfg.q_order as i64).order("p_window", cfg.p_window as i64);
    r.check("sum = product", compare_qp(&forms.sum, &forms.product, order2, w2)?);
    Ok(r)
}

fn low_degree(w: u32, reading: SymbolReading) -> Result<Report> {
    let v = low_degree_vectors(w)?;
    let mut r = Report::new("low-degree vectors").order("p_window", w as i64).assume(match reading {
        SymbolReading::Literal => "printed beta_2 polynomial read with s = p",
        SymbolReading::Swapped => "printed beta_2 polynomial read with s = t^(1/2), t = p",
    });
    let diff = |x: &PLaurent, y: &PLaurent| -> Result<Option<Mismatch>> {
        let w2 = 2 * w as i64;
        Ok(x.agrees_on(y, -w2, w2)?
            .map(|e| Mismatch::new(format!("doubled p^{e}"), x.coeff(e).unwrap_or_default(), y.coeff(e).unwrap_or_default())))
    };
    r.check("beta_1", diff(&v.beta1, &v.beta1_golden)?);
    let golden = match reading {
        SymbolReading::Literal => &v.beta2_literal,
        SymbolReading::Swapped => &v.beta2_swapped,
    };
    r.check("beta_2", diff(&v.beta2, golden)?);
    r.check("beta_3 from Toda and from the product", diff(&v.beta3, &v.beta3_product)?);
    Ok(r)
}

fn points(q: u32) -> Result<Report> {
    let vw = points_vw_extract(&enriques_point_series(), q)?;
    let mut r = Report::new("points").order("q_order", q as i64);
    let bad = vw.iter().position(|v| !v.is_zero());
    r.check("vw(0, 0, n) = 0", bad.map(|i| Mismatch::new(format!("n = {}", i + 1), &vw[i], 0)));
    Ok(r)
}
