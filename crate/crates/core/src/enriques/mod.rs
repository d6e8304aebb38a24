//! Refined invariants of the local Enriques surface.

pub mod checks;
pub mod fiber;
pub mod low_degree;
pub mod omega;
pub mod points;
pub mod pt;
pub mod toda;
pub mod vw;

pub use checks::{verify_invariants, verify_square_dependence, verify_toda_round_trip, verify_unrefined};
pub use fiber::{fiber_localization_chain, fiber_pt_series, fiber_vw_extract, verify_fiber};
pub use low_degree::{low_degree_vectors, LowDegree, SymbolReading};
pub use omega::{omega_series, omega_tables, omega_unrefined_series, OmegaTable};
pub use points::{enriques_point_series, points_vw_extract};
pub use pt::{pt_conjecture, pt_unrefined, PTSlice, PtSeries};
pub use toda::{pt_from_vw_toda, vw_from_pt_solve};
pub use vw::{omega_no, vw_closed_form, vw_conjecture, vw_strip, HilbertTable, VWValue};

pub use crate::special::goettsche::chi_enriques as chi_y;
