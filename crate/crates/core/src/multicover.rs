//! Multiple-cover sums `Big(v) = sum_{k | v} w(k) small(v/k)|_{t -> t^k}`
//! and their inversion.

use crate::error::{Error, Result};
use crate::mukai::MukaiClass;
use crate::plethysm::qint;
use crate::series::rational::{divisors, int};
use crate::series::{Ring, TPoly, TRat};

/// Divisor weights of the theories in this crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverWeight {
    /// `1/(k [k]_t)` over odd `k`.
    EnriquesOdd,
    /// `1/(k [k]_t)` over all `k`.
    EnriquesAll,
    /// `1/[k]_t^2` over all `k`.
    K3,
}

impl CoverWeight {
    fn admits(self, k: u64) -> bool {
        self != CoverWeight::EnriquesOdd || k % 2 == 1
    }

    pub fn weight(self, k: u64) -> TRat {
        let q = qint(k as u32);
        let den = match self {
            CoverWeight::EnriquesOdd | CoverWeight::EnriquesAll => q.scale(&int(k as i64)),
            CoverWeight::K3 => q.mul(&q),
        };
        TRat::new(TPoly::one(), den).expect("quantum integers are nonzero")
    }
}

fn class_divisors(cls: &MukaiClass, w: CoverWeight) -> Vec<u64> {
    divisors(cls.div as u64).into_iter().filter(|k| w.admits(*k)).collect()
}

/// `sum_k w(k) small(v/k)(t^k)`.
pub fn cover_sum(cls: &MukaiClass, w: CoverWeight, small: &dyn Fn(&MukaiClass) -> Result<TRat>) -> Result<TRat> {
    let mut acc = TRat::zero();
    for k in class_divisors(cls, w) {
        let sub = cls.divide(k as i64).ok_or_else(|| Error::InvalidClass(format!("{cls:?} / {k}")))?;
        acc = acc.add(&w.weight(k).mul(&small(&sub)?.substitute_power(k as u32)));
    }
    Ok(acc)
}

/// Inverts [`cover_sum`]: recovers `small(v)` from `big` on `v` and all
/// its divisors.
pub fn cover_strip(cls: &MukaiClass, w: CoverWeight, big: &dyn Fn(&MukaiClass) -> Result<TRat>) -> Result<TRat> {
    let mut acc = big(cls)?;
    for k in class_divisors(cls, w).into_iter().filter(|k| *k > 1) {
        let sub = cls.divide(k as i64).ok_or_else(|| Error::InvalidClass(format!("{cls:?} / {k}")))?;
        let inner = cover_strip(&sub, w, big)?;
        acc = acc.sub(&w.weight(k).mul(&inner.substitute_power(k as u32)));
    }
    Ok(acc)
}
