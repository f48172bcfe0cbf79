//! Coefficient domains.
//!
//! Everything in the crate is generic over [`Domain`], a commutative ring
//! with exact division where a quotient exists. Elements that need a
//! context (the size of a finite field, the degree of a tame extension)
//! carry it themselves; `zero()` and `one()` return elements of the prime
//! subring, which combine with any context.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub trait Domain: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    /// `Some(q)` with `q * rhs == self` when such a `q` exists.
    fn try_div(&self, rhs: &Self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, mut n: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.times(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.times(&base);
            }
        }
        acc
    }

    fn mul_u64(&self, mut n: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::zero();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.plus(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.plus(&base);
            }
        }
        acc
    }
}

pub trait Field: Domain {
    fn inv(&self) -> Option<Self>;
}

/// Domains containing the rationals.
pub trait QAlgebra: Domain {
    fn from_rat(q: &Rat) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rat(&Rat::from_integer(n.into()))
    }
}

impl Domain for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            None
        } else {
            Some(self / rhs)
        }
    }
    fn mul_u64(&self, n: u64) -> Self {
        self * Rat::from_integer(n.into())
    }
}

impl Field for Rat {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl QAlgebra for Rat {
    fn from_rat(q: &Rat) -> Self {
        q.clone()
    }
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

pub fn two_pow(e: i64) -> Rat {
    let p = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        Rat::from_integer(p)
    } else {
        Rat::new(BigInt::one(), p)
    }
}

fn v2_int(n: &BigInt) -> i64 {
    n.trailing_zeros().map(|z| z as i64).unwrap_or(0)
}

/// 2-adic valuation; `None` for zero.
pub fn v2(q: &Rat) -> Option<i64> {
    if Zero::is_zero(q) {
        return None;
    }
    Some(v2_int(q.numer()) - v2_int(q.denom()))
}

/// The odd part `q / 2^v2(q)`.
pub fn odd_part(q: &Rat) -> Option<Rat> {
    v2(q).map(|v| q * two_pow(-v))
}

/// Residue of a 2-integral rational modulo `2^bits` (bits <= 32).
pub fn residue_mod_2pow(q: &Rat, bits: u32) -> Result<u64> {
    if v2(q).is_some_and(|v| v < 0) {
        return Err(Error::NonIntegralCoefficient(q.clone()));
    }
    if Zero::is_zero(q) {
        return Ok(0);
    }
    let m = BigInt::one() << bits;
    let num = q.numer().mod_floor(&m);
    let den = q.denom().mod_floor(&m);
    // odd denominators are units mod 2^bits
    let den_inv = mod_inverse(&den, &m).expect("odd denominator");
    Ok(((num * den_inv).mod_floor(&m)).to_u64().expect("fits"))
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// Canonical `num/den` rendering used in serialized output.
pub fn rat_to_string(q: &Rat) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let err = || Error::Parse(s.to_string());
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| err())?;
            let d: BigInt = d.trim().parse().map_err(|_| err())?;
            if Zero::is_zero(&d) {
                return Err(err());
            }
            Ok(Rat::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| err())?;
            Ok(Rat::from_integer(n))
        }
    }
}

/// Exact rational square root, if one exists.
pub fn rat_sqrt(q: &Rat) -> Option<Rat> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rat::new(n, d))
    } else {
        None
    }
}

pub fn is_odd_prime(r: u32) -> bool {
    r >= 3
        && r % 2 == 1
        && (3..)
            .step_by(2)
            .take_while(|d| d * d <= r)
            .all(|d| !r.is_multiple_of(d))
}

pub fn require_odd_prime(r: u32) -> Result<()> {
    if is_odd_prime(r) {
        Ok(())
    } else {
        Err(Error::NotOddPrime(r))
    }
}
