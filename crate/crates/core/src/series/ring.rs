use std::fmt::Debug;

use num_traits::{One, Zero};

use super::rational::Rational;

/// Coefficient ring interface shared by every exact type in the crate.
///
/// `substitute_power(k)` raises every tracked variable (t, p, q, ...) to the
/// k-th power; `invert_t` applies t -> 1/t.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, r: &Rational) -> Self;
    fn from_rational(r: Rational) -> Self;
    /// Inverse when `self` is a unit of the ring.
    fn try_inverse(&self) -> Option<Self>;
    fn substitute_power(&self, k: u32) -> Self;
    /// `substitute_power(k)` clipped to the precision of `self` at every
    /// nesting level, so that the Adams operations of a series eventually
    /// vanish.
    fn adams(&self, k: u32) -> Self {
        self.substitute_power(k)
    }
    fn invert_t(&self) -> Self;
    /// `exp(self)`; scalar rings only know `exp(0) = 1`.
    fn try_exp(&self) -> Option<Self> {
        self.is_zero().then(Self::one)
    }
    /// `log(self)`; scalar rings only know `log(1) = 0`.
    fn try_log(&self) -> Option<Self> {
        self.is_one().then(Self::zero)
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn try_inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
    fn substitute_power(&self, _k: u32) -> Self {
        self.clone()
    }
    fn invert_t(&self) -> Self {
        self.clone()
    }
}
