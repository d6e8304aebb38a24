//! JSON, CSV and text renderings. Exact values are written as canonical
//! JSON (rationals as `"num/den"` strings), also inside CSV cells.

use std::io::Write;

use anyhow::Result;
use refined_vw::report::Report;
use refined_vw::series::TRat;
use serde::{Deserialize, Serialize};

use crate::config::{Format, RunConfig};
use crate::tables::{PtRow, VwRow};

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    config: &'a RunConfig,
    #[serde(skip_serializing_if = "Option::is_none")]
    passed: Option<bool>,
    rows: &'a [T],
}

fn exact(v: &TRat) -> Result<String> {
    Ok(serde_json::to_string(v)?)
}

fn json<T: Serialize>(out: &mut dyn Write, cfg: &RunConfig, passed: Option<bool>, rows: &[T]) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, &Envelope { config: cfg, passed, rows })?;
    writeln!(out)?;
    Ok(())
}

/// A `vw` row as CSV cells.
#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct VwCsv {
    pub r: i64,
    pub beta_sq: i64,
    pub beta_div: i64,
    pub n: i64,
    pub square: i64,
    pub vw: String,
    pub vw_stripped: String,
    pub omega_no: String,
    pub polynomial: bool,
}

/// A `pt` row as CSV cells; absent Toda values are empty.
#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct PtCsv {
    pub a: u32,
    pub b: u32,
    pub p_exp_times_2: i64,
    pub pt_product: String,
    pub pt_toda: String,
    pub agree: String,
    pub pt_total: String,
    pub unrefined: String,
    pub t1_agree: bool,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportCsv {
    pub identity: String,
    pub status: String,
    pub location: String,
    pub left: String,
    pub right: String,
}

fn csv<T: Serialize>(out: &mut dyn Write, rows: impl IntoIterator<Item = T>) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn vw(out: &mut dyn Write, cfg: &RunConfig, rows: &[VwRow]) -> Result<()> {
    match cfg.format {
        Format::Json => json(out, cfg, None, rows),
        Format::Csv => {
            let cells = rows
                .iter()
                .map(|r| {
                    Ok(VwCsv {
                        r: r.r,
                        beta_sq: r.beta_sq,
                        beta_div: r.beta_div,
                        n: r.n,
                        square: r.square,
                        vw: exact(&r.vw)?,
                        vw_stripped: exact(&r.vw_stripped)?,
                        omega_no: exact(&r.omega_no)?,
                        polynomial: r.polynomial,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            csv(out, cells)
        }
        Format::Text => {
            for r in rows {
                writeln!(out, "v = ({}, beta^2 = {} div {}, {})  v^2 = {}", r.r, r.beta_sq, r.beta_div, r.n, r.square)?;
                writeln!(out, "  VW       = {}", r.vw)?;
                writeln!(out, "  vw       = {}", r.vw_stripped)?;
                writeln!(out, "  Omega^NO = {}", r.omega_no)?;
            }
            Ok(())
        }
    }
}

pub fn pt(out: &mut dyn Write, cfg: &RunConfig, rows: &[PtRow]) -> Result<()> {
    match cfg.format {
        Format::Json => json(out, cfg, None, rows),
        Format::Csv => {
            let cells = rows
                .iter()
                .map(|r| {
                    Ok(PtCsv {
                        a: r.a,
                        b: r.b,
                        p_exp_times_2: r.p_exp_times_2,
                        pt_product: exact(&r.pt_product)?,
                        pt_toda: r.pt_toda.as_ref().map(exact).transpose()?.unwrap_or_default(),
                        agree: r.agree.map(|b| b.to_string()).unwrap_or_default(),
                        pt_total: exact(&r.pt_total)?,
                        unrefined: exact(&r.unrefined)?,
                        t1_agree: r.t1_agree,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            csv(out, cells)
        }
        Format::Text => {
            for r in rows {
                let toda = r.pt_toda.as_ref().map(|t| t.to_string()).unwrap_or_else(|| "-".into());
                writeln!(
                    out,
                    "Q_s^{} q^{} p^{}: pt = {}  toda = {}  PT = {}  t=1 {}",
                    r.a,
                    r.b,
                    half(r.p_exp_times_2),
                    r.pt_product,
                    toda,
                    r.pt_total,
                    if r.t1_agree { "ok" } else { "MISMATCH" }
                )?;
            }
            Ok(())
        }
    }
}

pub fn reports(out: &mut dyn Write, cfg: &RunConfig, rs: &[Report]) -> Result<()> {
    let passed = rs.iter().all(Report::passed);
    match cfg.format {
        Format::Json => json(out, cfg, Some(passed), rs),
        Format::Csv => csv(
            out,
            rs.iter().map(|r| {
                let m = r.first_mismatch.clone().unwrap_or_else(|| refined_vw::report::Mismatch::new("", "", ""));
                ReportCsv {
                    identity: r.identity.clone(),
                    status: if r.passed() { "pass" } else { "fail" }.into(),
                    location: m.location,
                    left: m.left,
                    right: m.right,
                }
            }),
        ),
        Format::Text => {
            for r in rs {
                writeln!(out, "{r}")?;
                for d in &r.details {
                    writeln!(out, "    {d}")?;
                }
            }
            writeln!(out, "{}", if passed { "all checks passed" } else { "some checks FAILED" })?;
            Ok(())
        }
    }
}

fn half(e: i64) -> String {
    if e % 2 == 0 {
        (e / 2).to_string()
    } else {
        format!("{e}/2")
    }
}
