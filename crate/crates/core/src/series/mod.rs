//! Exact coefficient rings and the truncated-series engine.

pub mod exponent;
pub mod json;
pub mod plaurent;
pub mod qseries;
pub mod rational;
pub mod ring;
pub mod tpoly;
pub mod trat;

pub use exponent::HalfInt;
pub use plaurent::PLaurent;
pub use qseries::{QSeries, EXACT};
pub use rational::Rational;
pub use ring::Ring;
pub use tpoly::TPoly;
pub use trat::TRat;
