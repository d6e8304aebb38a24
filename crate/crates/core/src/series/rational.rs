//! Exact rational coefficients.

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Canonical `num/den` string (denominator always written).
pub fn to_canonical(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `num/den` or a bare integer.
pub fn parse(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

/// Human-readable form: integers without denominator.
pub fn display(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn is_nonnegative_integer(r: &Rational) -> bool {
    r.is_integer() && !r.is_negative()
}

/// Bernoulli number `B_n` with the convention `B_1 = -1/2`.
pub fn bernoulli(n: usize) -> Rational {
    let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        if m == 0 {
            b.push(Rational::one());
            continue;
        }
        // sum_{k<m} C(m+1,k) B_k = -(m+1) B_m
        let mut acc = Rational::zero();
        let mut binom = BigInt::one();
        for (k, bk) in b.iter().enumerate() {
            acc += Rational::from_integer(binom.clone()) * bk;
            binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
        }
        b.push(-acc / Rational::from_integer(BigInt::from(m + 1)));
    }
    b.swap_remove(n)
}

/// Sum of `d^k` over positive divisors `d` of `n`.
pub fn sigma(k: u32, n: u64) -> BigInt {
    let mut s = BigInt::zero();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            s += BigInt::from(d).pow(k);
            let e = n / d;
            if e != d {
                s += BigInt::from(e).pow(k);
            }
        }
        d += 1;
    }
    s
}

/// Möbius function.
pub fn mobius(mut n: u64) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut v: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    v.sort_unstable();
    v
}
