//! Modular and Jacobi forms as truncated `q`-series.

pub mod e8;
pub mod eisenstein;
pub mod eta;
pub mod goettsche;
pub mod identities;
pub mod theta;
pub mod word;

pub use e8::{e8_theta, e8_theta_by_orbits, e8_vectors};
pub use eisenstein::eisenstein_g;
pub use eta::{delta, eta, eta_power};
pub use goettsche::{goettsche_enriques, goettsche_k3, k3_kernel};
pub use theta::{theta, theta_at_t, theta_product};
pub use word::{Factor, JacobiWord, Mono};
