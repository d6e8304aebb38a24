//! Reduced invariants of K3: Thomas's formula for `VW`, the linear Toda
//! equation and the equivalence between the two kernel descriptions.

pub mod equivalence;
pub mod toda;
pub mod vw;

pub use equivalence::{k3_pt_kernel, verify_k3_equivalence};
pub use toda::{k3_toda, k3_vw_from_pt_solve};
pub use vw::{k3_pt_strip, k3_pt_sum, pair_weight, K3Tables, PairClass};
