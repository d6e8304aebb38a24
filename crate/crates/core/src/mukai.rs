//! Chern vectors `v = (r, beta, n)` reduced to the data the invariants
//! depend on.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

/// A class described by its rank, `beta^2`, the divisibility of `beta` in
/// the lattice (0 when `beta = 0`) and `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MukaiClass {
    pub r: i64,
    pub beta_sq: i64,
    pub beta_div: i64,
    pub n: i64,
    pub div: i64,
    pub parity: Parity,
}

impl MukaiClass {
    pub fn new(r: i64, beta_sq: i64, beta_div: i64, n: i64) -> Result<Self> {
        if beta_div < 0 {
            return Err(Error::InvalidClass(format!("negative divisibility {beta_div}")));
        }
        if beta_div == 0 && beta_sq != 0 {
            return Err(Error::InvalidClass("beta = 0 must have beta^2 = 0".into()));
        }
        if beta_div > 0 && beta_sq % (2 * beta_div * beta_div) != 0 {
            return Err(Error::InvalidClass(format!("beta^2 = {beta_sq} is not 2 * {beta_div}^2 times an integer")));
        }
        let div = r.gcd(&beta_div).gcd(&n);
        if div == 0 {
            return Err(Error::InvalidClass("zero class".into()));
        }
        let g = r.gcd(&beta_div).gcd(&(2 * n));
        let parity = if (r / g) % 2 == 0 && (2 * n / g) % 2 == 0 { Parity::Even } else { Parity::Odd };
        Ok(MukaiClass { r, beta_sq, beta_div, n, div, parity })
    }

    /// A class whose curve part is primitive.
    pub fn primitive_beta(r: i64, beta_sq: i64, n: i64) -> Result<Self> {
        Self::new(r, beta_sq, 1, n)
    }

    /// `beta^2 - 2rn - r^2`
    pub fn enriques_square(&self) -> i64 {
        self.beta_sq - 2 * self.r * self.n - self.r * self.r
    }

    /// `beta^2 - 2rn - 2r^2`
    pub fn k3_square(&self) -> i64 {
        self.beta_sq - 2 * self.r * self.n - 2 * self.r * self.r
    }

    /// `v / k` for a divisor `k` of the divisibility.
    pub fn divide(&self, k: i64) -> Option<Self> {
        if k <= 0 || self.div % k != 0 {
            return None;
        }
        Self::new(self.r / k, self.beta_sq / (k * k), self.beta_div / k, self.n / k).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn types_of_primitive_classes() {
        // Hilbert schemes of points: odd type, odd square
        let v = MukaiClass::new(1, 0, 0, -3).unwrap();
        assert_eq!((v.parity, v.enriques_square()), (Parity::Odd, 5));
        // (0, beta, 0) with beta primitive: even type
        assert_eq!(MukaiClass::new(0, 2, 1, 0).unwrap().parity, Parity::Even);
        // (0, 0, 1) and (2, 0, 2l + 1): odd type, square divisible by 8
        let w = MukaiClass::new(2, 0, 0, 3).unwrap();
        assert_eq!((w.parity, w.enriques_square() % 8), (Parity::Odd, 0));
        assert_eq!(MukaiClass::new(0, 0, 0, 1).unwrap().parity, Parity::Odd);
        assert_eq!(MukaiClass::new(0, 8, 2, 1).unwrap().parity, Parity::Odd);
    }

    #[test]
    fn divisibility() {
        let v = MukaiClass::new(2, 8, 2, 4).unwrap();
        assert_eq!(v.div, 2);
        assert_eq!(v.divide(2), Some(MukaiClass::new(1, 2, 1, 2).unwrap()));
        assert_eq!(v.divide(3), None);
        assert!(MukaiClass::new(0, 0, 0, 0).is_err());
        assert!(MukaiClass::new(1, 3, 1, 0).is_err());
    }
}
