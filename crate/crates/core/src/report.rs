//! Machine-readable outcome of an identity check.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::series::{PLaurent, QSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Where two expansions first disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub location: String,
    pub left: String,
    pub right: String,
}

impl Mismatch {
    pub fn new(location: impl Into<String>, left: impl fmt::Display, right: impl fmt::Display) -> Self {
        Mismatch { location: location.into(), left: left.to_string(), right: right.to_string() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub identity: String,
    pub orders: BTreeMap<String, i64>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub first_mismatch: Option<Mismatch>,
    #[serde(default)]
    pub assumptions: Vec<String>,
    #[serde(default)]
    pub details: Vec<String>,
}

impl Report {
    pub fn new(identity: &str) -> Self {
        Report {
            identity: identity.to_string(),
            orders: BTreeMap::new(),
            status: Status::Pass,
            first_mismatch: None,
            assumptions: Vec::new(),
            details: Vec::new(),
        }
    }

    pub fn order(mut self, name: &str, value: i64) -> Self {
        self.orders.insert(name.to_string(), value);
        self
    }

    pub fn assume(mut self, text: &str) -> Self {
        self.assumptions.push(text.to_string());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Records a named sub-check; the first failure wins the mismatch slot.
    pub fn check(&mut self, what: &str, mismatch: Option<Mismatch>) {
        match mismatch {
            None => self.details.push(format!("{what}: ok")),
            Some(m) => {
                self.details.push(format!("{what}: mismatch at {}", m.location));
                if self.first_mismatch.is_none() {
                    self.first_mismatch = Some(m);
                }
                self.status = Status::Fail;
            }
        }
    }

    pub fn check_bool(&mut self, what: &str, ok: bool) {
        let m = (!ok).then(|| Mismatch { location: what.to_string(), left: "false".into(), right: "true".into() });
        self.check(what, m);
    }

    /// Folds another report in as one sub-check.
    pub fn absorb(&mut self, other: Report) {
        let m = other.first_mismatch.clone().or_else(|| {
            (!other.passed()).then(|| Mismatch { location: other.identity.clone(), left: String::new(), right: String::new() })
        });
        self.check(
            &other.identity,
            m.map(|mut m| {
                m.location = format!("{}: {}", other.identity, m.location);
                m
            }),
        );
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {}", self.identity)?;
        if let Some(m) = &self.first_mismatch {
            write!(f, " (first mismatch at {}: {} vs {})", m.location, m.left, m.right)?;
        }
        Ok(())
    }
}

pub(crate) fn half(e: i64) -> String {
    if e % 2 == 0 {
        format!("{}", e / 2)
    } else {
        format!("{e}/2")
    }
}

/// First `(q, p)` position where two expansions differ, looking at `q`
/// exponents below the common order and doubled `p` exponents in
/// `-p_window2..=p_window2`.
pub fn compare_qp(a: &QSeries<PLaurent>, b: &QSeries<PLaurent>, order2: i64, p_window2: i64) -> Result<Option<Mismatch>> {
    if a.offset() != b.offset() {
        return Ok(Some(Mismatch { location: "q-offset".into(), left: a.offset().to_string(), right: b.offset().to_string() }));
    }
    let lo = a.valuation().into_iter().chain(b.valuation()).min().unwrap_or(0);
    for e in lo..order2 {
        let (x, y) = (a.try_coeff(e)?, b.try_coeff(e)?);
        if let Some(pe) = x.agrees_on(&y, -p_window2, p_window2)? {
            return Ok(Some(Mismatch {
                location: format!("q^{} p^{}", half(e), half(pe)),
                left: x.coeff(pe)?.to_string(),
                right: y.coeff(pe)?.to_string(),
            }));
        }
    }
    Ok(None)
}
