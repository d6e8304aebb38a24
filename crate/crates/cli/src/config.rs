//! Run configuration shared by all verbs.

use clap::{Args, ValueEnum};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Orders and output options. The limits keep a full run at desk scale.
#[derive(Clone, Debug, Args, Serialize)]
pub struct RunConfig {
    /// Compare coefficients below q^ORDER.
    #[arg(long, default_value_t = 10, global = true)]
    pub q_order: u32,
    /// Compare p-exponents in [-WINDOW, WINDOW].
    #[arg(long, default_value_t = 8, global = true)]
    pub p_window: u32,
    /// Total epsilon degree for the anomaly equation.
    #[arg(long, default_value_t = 4, global = true)]
    pub eps_order: u32,
    /// Largest multiple of the section class s.
    #[arg(long, default_value_t = 2, global = true)]
    pub k_max: u32,
    /// Largest multiple of the fiber class f.
    #[arg(long, default_value_t = 8, global = true)]
    pub d_max: u32,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
}

pub const Q_ORDER_MAX: u32 = 16;
pub const P_WINDOW_MAX: u32 = 16;
pub const EPS_ORDER_MAX: u32 = 6;
pub const K_MAX_MAX: u32 = 3;
pub const D_MAX_MAX: u32 = 12;

impl RunConfig {
    pub fn validate(&self) -> Result<(), String> {
        let bounds = [
            ("--q-order", self.q_order, 2, Q_ORDER_MAX),
            ("--p-window", self.p_window, 1, P_WINDOW_MAX),
            ("--eps-order", self.eps_order, 0, EPS_ORDER_MAX),
            ("--k-max", self.k_max, 1, K_MAX_MAX),
            ("--d-max", self.d_max, 1, D_MAX_MAX),
        ];
        for (flag, v, lo, hi) in bounds {
            if v < lo || v > hi {
                return Err(format!("{flag} must lie in {lo}..={hi}, got {v}"));
            }
        }
        // weight-w quasi-modular forms need more coefficients than monomials
        let unknowns = refined_vw::hae::monomials(self.eps_order - self.eps_order % 2).len() as u32;
        if unknowns > self.q_order {
            return Err(format!("--eps-order {} needs --q-order of at least {unknowns}", self.eps_order));
        }
        Ok(())
    }
}
