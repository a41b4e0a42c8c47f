//! Integer scalars for lattice coordinates.
//!
//! Every lattice computation is generic over [`Scalar`], which is satisfied by
//! the fixed-width signed integers (with checked arithmetic) and by
//! [`num_bigint::BigInt`]. Overflow is always reported as
//! [`Error::Overflow`](crate::Error::Overflow), never wrapped.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Signed, ToPrimitive};

use crate::error::{Error, Result};

/// An exact signed integer usable as a lattice coordinate.
pub trait Scalar:
    Integer
    + Signed
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + Clone
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    fn add_c(&self, other: &Self) -> Result<Self> {
        self.checked_add(other).ok_or_else(|| Error::Overflow)
    }

    fn sub_c(&self, other: &Self) -> Result<Self> {
        self.checked_sub(other).ok_or_else(|| Error::Overflow)
    }

    fn mul_c(&self, other: &Self) -> Result<Self> {
        self.checked_mul(other).ok_or_else(|| Error::Overflow)
    }

    fn neg_c(&self) -> Result<Self> {
        Self::zero().sub_c(self)
    }

    /// Lossless conversion from `i128`, failing when the value does not fit.
    fn from_i128_c(v: i128) -> Result<Self> {
        Self::from_i128(v).ok_or_else(|| Error::Overflow)
    }

    /// Lossless conversion to `i128`, failing when the value does not fit.
    fn to_i128_c(&self) -> Result<i128> {
        self.to_i128().ok_or_else(|| Error::Overflow)
    }
}

impl<T> Scalar for T where
    T: Integer
        + Signed
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
        + ToPrimitive
        + Clone
        + Hash
        + Debug
        + Display
        + Send
        + Sync
        + 'static
{
}

/// Extended Euclid: returns `(g, s, t)` with `s*a + t*b = g = gcd(a, b) >= 0`.
pub fn ext_gcd<T: Scalar>(a: &T, b: &T) -> Result<(T, T, T)> {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (T::one(), T::zero());
    let (mut old_t, mut t) = (T::zero(), T::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let next_r = old_r.sub_c(&q.mul_c(&r)?)?;
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = old_s.sub_c(&q.mul_c(&s)?)?;
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = old_t.sub_c(&q.mul_c(&t)?)?;
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        Ok((old_r.neg_c()?, old_s.neg_c()?, old_t.neg_c()?))
    } else {
        Ok((old_r, old_s, old_t))
    }
}
