//! Epsilon expansion of `F_1`, quasi-modular forms for `Gamma_0(2)` and
//! the holomorphic anomaly equation.

pub mod anomaly;
pub mod eps;
pub mod qmod;

pub use anomaly::{eta_quotient, f1_series, f1_word, f_coefficients, hae_rows, verify_hae, HaeRow};
pub use eps::{eps_expand, eps_substitute, linear_form, EpsPoly};
pub use qmod::{g2_derivative, modular_dimension, monomials, qmod_decompose, QModBasis, QModElement, QModMonomial, BASIS};
