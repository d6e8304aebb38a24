//! Invariant tables for the `vw` and `pt` verbs.

use anyhow::{bail, Result};
use num_integer::Integer;
use refined_vw::enriques::checks::test_classes;
use refined_vw::enriques::low_degree::toda_slice;
use refined_vw::enriques::omega::specialize_t1;
use refined_vw::enriques::{omega_no, pt_conjecture, pt_unrefined, vw_conjecture, vw_strip, HilbertTable};
use refined_vw::mukai::MukaiClass;
use refined_vw::series::{PLaurent, Ring, TRat};
use serde::{Deserialize, Serialize};

use crate::config::RunConfig;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VwRow {
    pub r: i64,
    pub beta_sq: i64,
    pub beta_div: i64,
    pub n: i64,
    pub square: i64,
    pub vw: TRat,
    pub vw_stripped: TRat,
    pub omega_no: TRat,
    pub polynomial: bool,
}

/// Which classes the `vw` verb tabulates.
#[derive(Clone, Copy, Debug)]
pub enum ClassRange {
    Single { r: i64, beta_sq: i64, beta_div: Option<i64>, n: i64 },
    Box { r_max: i64, square_max: i64, n_max: i64 },
}

pub fn vw_table(range: ClassRange) -> Result<Vec<VwRow>> {
    let classes = match range {
        ClassRange::Single { r, beta_sq, beta_div, n } => {
            let div = beta_div.unwrap_or(if beta_sq == 0 { 0 } else { 1 });
            vec![MukaiClass::new(r, beta_sq, div, n)?]
        }
        ClassRange::Box { r_max, square_max, n_max } => {
            if r_max < 0 || square_max < 0 || n_max < 0 {
                bail!("class ranges must be nonnegative");
            }
            test_classes(r_max, square_max, n_max)
        }
    };
    let top = classes.iter().map(|c| c.enriques_square()).max().unwrap_or(0);
    let h = HilbertTable::new((top / 2 + 2).max(2) as u32);
    let big = |c: &MukaiClass| Ok(vw_conjecture(&h, c)?.value);
    classes
        .iter()
        .map(|c| {
            let v = vw_conjecture(&h, c)?;
            Ok(VwRow {
                r: c.r,
                beta_sq: c.beta_sq,
                beta_div: c.beta_div,
                n: c.n,
                square: c.enriques_square(),
                vw: v.value,
                vw_stripped: vw_strip(&h, c)?,
                omega_no: omega_no(c, &big)?,
                polynomial: v.polynomial,
            })
        })
        .collect()
}

/// One `p`-power of one `Q_s^a q^b` slice, from the product formula and,
/// for primitive classes, from Toda's equation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PtRow {
    pub a: u32,
    pub b: u32,
    pub p_exp_times_2: i64,
    /// `pt` from the product formula.
    pub pt_product: TRat,
    /// `pt` from Toda's equation; only for primitive classes.
    pub pt_toda: Option<TRat>,
    pub agree: Option<bool>,
    /// `PT` from the product formula.
    pub pt_total: TRat,
    /// `PT` of the unrefined product, to compare with `pt_total` at `t = 1`.
    pub unrefined: TRat,
    pub t1_agree: bool,
}

pub fn pt_table(cfg: &RunConfig) -> Result<Vec<PtRow>> {
    let refined = pt_conjecture(cfg.k_max, cfg.d_max)?;
    let unrefined = pt_unrefined(cfg.k_max, cfg.d_max)?;
    let w2 = 2 * cfg.p_window as i64;
    let mut rows = Vec::new();
    for a in 0..=cfg.k_max {
        for b in 0..=cfg.d_max {
            if a + b == 0 {
                continue;
            }
            let primitive = (a as i64).gcd(&(b as i64)) == 1;
            let toda = if primitive { Some(toda_slice(2 * (a * b) as i64, cfg.p_window)?) } else { None };
            let (log, total) = (refined.log_slice(a, b), refined.pt_slice(a, b));
            let at_one = specialize_t1(&total)?;
            let flat = unrefined.pt_slice(a, b);
            for e in -w2..=w2 {
                let row = PtRow {
                    a,
                    b,
                    p_exp_times_2: e,
                    pt_product: log.coeff(e)?,
                    pt_toda: toda.as_ref().map(|s: &PLaurent| s.coeff(e)).transpose()?,
                    agree: None,
                    pt_total: total.coeff(e)?,
                    unrefined: flat.coeff(e)?,
                    t1_agree: at_one.coeff(e)? == flat.coeff(e)?,
                };
                let all_zero = row.pt_product.is_zero()
                    && row.pt_total.is_zero()
                    && row.unrefined.is_zero()
                    && row.pt_toda.as_ref().is_none_or(TRat::is_zero);
                if !all_zero {
                    let agree = row.pt_toda.as_ref().map(|t| *t == row.pt_product);
                    rows.push(PtRow { agree, ..row });
                }
            }
        }
    }
    Ok(rows)
}
