//! Exact computation of refined Vafa-Witten and stable pair invariants of
//! the local Enriques surface and of K3, together with the identities that
//! tie them together.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals and
//! every truncated series carries the order below which it is known.

pub mod enriques;
pub mod error;
pub mod hae;
pub mod k3;
pub mod linalg;
pub mod mukai;
pub mod multicover;
pub mod plethysm;
pub mod report;
pub mod series;
pub mod special;

pub use error::{Error, Result};
pub use report::{Report, Status};

/// The guide in `book/`, compiled so that its code blocks run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/series.md")]
    mod series {}
    #[doc = include_str!("../../../book/src/plethysm.md")]
    mod plethysm {}
    #[doc = include_str!("../../../book/src/jacobi.md")]
    mod jacobi {}
    #[doc = include_str!("../../../book/src/enriques.md")]
    mod enriques {}
    #[doc = include_str!("../../../book/src/k3.md")]
    mod k3 {}
    #[doc = include_str!("../../../book/src/hae.md")]
    mod hae {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
