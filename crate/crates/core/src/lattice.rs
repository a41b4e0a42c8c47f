//! Exact arithmetic on the oriented lattice `Z^2`.
//!
//! The orientation is fixed by the symplectic pairing
//! `{a, b} = a.x * b.y - a.y * b.x`, so `{(1,0), (0,1)} = 1`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{ext_gcd, Scalar};

/// A vector of the oriented rank-2 lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVec<T> {
    pub x: T,
    pub y: T,
}

impl<T: Scalar> LatticeVec<T> {
    pub fn new(x: T, y: T) -> Self {
        LatticeVec { x, y }
    }

    pub fn zero() -> Self {
        LatticeVec::new(T::zero(), T::zero())
    }

    pub fn from_i64(x: i64, y: i64) -> Self {
        LatticeVec::new(
            T::from_i64(x).expect("i64 fits every scalar"),
            T::from_i64(y).expect("i64 fits every scalar"),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(LatticeVec::new(
            self.x.add_c(&other.x)?,
            self.y.add_c(&other.y)?,
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        Ok(LatticeVec::new(
            self.x.sub_c(&other.x)?,
            self.y.sub_c(&other.y)?,
        ))
    }

    pub fn neg(&self) -> Result<Self> {
        Ok(LatticeVec::new(self.x.neg_c()?, self.y.neg_c()?))
    }

    pub fn scale(&self, k: &T) -> Result<Self> {
        Ok(LatticeVec::new(self.x.mul_c(k)?, self.y.mul_c(k)?))
    }

    /// Rotation by 90 degrees clockwise: `(x, y) -> (y, -x)`.
    pub fn rotate_cw(&self) -> Result<Self> {
        Ok(LatticeVec::new(self.y.clone(), self.x.neg_c()?))
    }

    /// Lattice length: the gcd of the absolute coordinates.
    pub fn lattice_length(&self) -> T {
        self.x.gcd(&self.y)
    }

    pub fn is_primitive(&self) -> bool {
        self.lattice_length().is_one()
    }

    /// Index of the open-closed half plane containing the vector:
    /// `0` for angles in `[0, pi)`, `1` for `[pi, 2 pi)`.
    fn half(&self) -> u8 {
        if self.y.is_positive() || (self.y.is_zero() && self.x.is_positive()) {
            0
        } else {
            1
        }
    }
}

impl<T: fmt::Display> fmt::Display for LatticeVec<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// The symplectic pairing `{a, b} = a.x b.y - a.y b.x`.
pub fn sform<T: Scalar>(a: &LatticeVec<T>, b: &LatticeVec<T>) -> Result<T> {
    a.x.mul_c(&b.y)?.sub_c(&a.y.mul_c(&b.x)?)
}

/// Positive part `max(n, 0)`.
pub fn pos_part<T: Scalar>(n: &T) -> T {
    if n.is_negative() {
        T::zero()
    } else {
        n.clone()
    }
}

/// Splits a nonzero vector as `length * direction` with `direction` primitive.
pub fn primitive_split<T: Scalar>(e: &LatticeVec<T>) -> Result<(T, LatticeVec<T>)> {
    if e.is_zero() {
        return Err(Error::ZeroVector);
    }
    let len = e.lattice_length();
    Ok((
        len.clone(),
        LatticeVec::new(e.x.div_floor(&len), e.y.div_floor(&len)),
    ))
}

/// `x + {u, x}_+ u`: the identity on the half plane `{u, x} <= 0` and the
/// unimodular shear along `u` on the other side.
pub fn shear_positive<T: Scalar>(u: &LatticeVec<T>, x: &LatticeVec<T>) -> Result<LatticeVec<T>> {
    let k = pos_part(&sform(u, x)?);
    if k.is_zero() {
        return Ok(x.clone());
    }
    x.add(&u.scale(&k)?)
}

/// Compares two nonzero vectors by counterclockwise angle measured from the
/// positive x-axis, in `[0, 2 pi)`. Parallel vectors with the same direction
/// compare equal.
pub fn angle_cmp<T: Scalar>(a: &LatticeVec<T>, b: &LatticeVec<T>) -> Result<Ordering> {
    let (ha, hb) = (a.half(), b.half());
    if ha != hb {
        return Ok(ha.cmp(&hb));
    }
    let c = sform(a, b)?;
    Ok(if c.is_positive() {
        Ordering::Less
    } else if c.is_negative() {
        Ordering::Greater
    } else {
        Ordering::Equal
    })
}

/// Sorts by counterclockwise angle of the key vector, surfacing overflow.
pub(crate) fn sort_by_angle<T: Scalar, E>(
    items: &mut [E],
    key: impl Fn(&E) -> &LatticeVec<T>,
) -> Result<()> {
    let mut failure = None;
    items.sort_by(|a, b| match angle_cmp(key(a), key(b)) {
        Ok(o) => o,
        Err(e) => {
            failure.get_or_insert(e);
            Ordering::Equal
        }
    });
    failure.map_or(Ok(()), Err)
}

/// An element of `SL(2, Z)` written row-major as `[[a, b], [c, d]]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnimodularMap<T> {
    a: T,
    b: T,
    c: T,
    d: T,
}

impl<T: Scalar> UnimodularMap<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Result<Self> {
        let det = a.mul_c(&d)?.sub_c(&b.mul_c(&c)?)?;
        if !det.is_one() {
            return Err(Error::NotUnimodular(det.to_string()));
        }
        Ok(UnimodularMap { a, b, c, d })
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        let f = |v: i64| T::from_i64(v).ok_or_else(|| Error::Overflow);
        UnimodularMap::new(f(a)?, f(b)?, f(c)?, f(d)?)
    }

    pub fn identity() -> Self {
        UnimodularMap {
            a: T::one(),
            b: T::zero(),
            c: T::zero(),
            d: T::one(),
        }
    }

    /// The horizontal shear `[[1, t], [0, 1]]`.
    pub fn shear(t: T) -> Self {
        UnimodularMap {
            a: T::one(),
            b: t,
            c: T::zero(),
            d: T::one(),
        }
    }

    pub fn entries(&self) -> [&T; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn apply(&self, v: &LatticeVec<T>) -> Result<LatticeVec<T>> {
        Ok(LatticeVec::new(
            self.a.mul_c(&v.x)?.add_c(&self.b.mul_c(&v.y)?)?,
            self.c.mul_c(&v.x)?.add_c(&self.d.mul_c(&v.y)?)?,
        ))
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        let dot = |p: &T, q: &T, r: &T, s: &T| p.mul_c(q)?.add_c(&r.mul_c(s)?);
        Ok(UnimodularMap {
            a: dot(&self.a, &other.a, &self.b, &other.c)?,
            b: dot(&self.a, &other.b, &self.b, &other.d)?,
            c: dot(&self.c, &other.a, &self.d, &other.c)?,
            d: dot(&self.c, &other.b, &self.d, &other.d)?,
        })
    }

    pub fn inverse(&self) -> Result<Self> {
        Ok(UnimodularMap {
            a: self.d.clone(),
            b: self.b.neg_c()?,
            c: self.c.neg_c()?,
            d: self.a.clone(),
        })
    }

    /// A map sending the primitive vector `u` to `(1, 0)`.
    ///
    /// Unique up to post-composition with a horizontal shear.
    pub fn to_first_basis(u: &LatticeVec<T>) -> Result<Self> {
        let (g, s, t) = ext_gcd(&u.x, &u.y)?;
        if !g.is_one() {
            return Err(Error::NotPrimitive);
        }
        UnimodularMap::new(s, t, u.y.neg_c()?, u.x.clone())
    }
}

/// Applies `map` to `v`.
pub fn apply_map<T: Scalar>(map: &UnimodularMap<T>, v: &LatticeVec<T>) -> Result<LatticeVec<T>> {
    map.apply(v)
}
