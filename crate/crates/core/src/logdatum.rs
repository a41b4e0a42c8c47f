//! Log data: finite sets of lattice edges decorated with partitions of their
//! lattice lengths, summing to zero.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{pos_part, primitive_split, sform, sort_by_angle, LatticeVec, UnimodularMap};
use crate::scalar::Scalar;

/// A weakly decreasing list of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition<T> {
    parts: Vec<T>,
}

impl<T: Scalar> Partition<T> {
    /// Normalizes `parts`: zero parts are dropped and the rest sorted
    /// decreasingly. Negative parts are rejected.
    pub fn new(mut parts: Vec<T>) -> Result<Self> {
        if parts.iter().any(|p| p.is_negative()) {
            return Err(Error::InvalidPartition);
        }
        parts.retain(|p| !p.is_zero());
        parts.sort_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn from_i64(parts: &[i64]) -> Result<Self> {
        Partition::new(
            parts
                .iter()
                .map(|&p| T::from_i64(p).ok_or_else(|| Error::Overflow))
                .collect::<Result<_>>()?,
        )
    }

    pub fn single(part: T) -> Result<Self> {
        Partition::new(vec![part])
    }

    pub fn parts(&self) -> &[T] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn sum(&self) -> Result<T> {
        self.parts.iter().try_fold(T::zero(), |acc, p| acc.add_c(p))
    }

    /// Distinct part values, largest first.
    pub fn distinct(&self) -> Vec<T> {
        let mut out: Vec<T> = Vec::new();
        for p in &self.parts {
            if out.last() != Some(p) {
                out.push(p.clone());
            }
        }
        out
    }

    /// Removes one part at `index` (0-based).
    pub(crate) fn without(&self, index: usize) -> Self {
        let mut parts = self.parts.clone();
        parts.remove(index);
        Partition { parts }
    }

    /// Adds a part, keeping the order; a zero part is ignored.
    pub(crate) fn with(&self, part: T) -> Self {
        let mut parts = self.parts.clone();
        if !part.is_zero() {
            let at = parts.iter().position(|p| *p < part).unwrap_or(parts.len());
            parts.insert(at, part);
        }
        Partition { parts }
    }
}

impl<T: fmt::Display> fmt::Display for Partition<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// An edge `(e, nu)` with `nu` a partition of the lattice length of `e`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Edge<T> {
    e: LatticeVec<T>,
    nu: Partition<T>,
    length: T,
    direction: LatticeVec<T>,
}

impl<T: Scalar> Edge<T> {
    /// Builds an edge; `index` is only used for diagnostics.
    pub fn new(e: LatticeVec<T>, nu: Partition<T>, index: usize) -> Result<Self> {
        let (length, direction) = primitive_split(&e)?;
        let sum = nu.sum()?;
        if sum != length {
            return Err(Error::PartitionSumMismatch {
                edge: index,
                length: length.to_string(),
                sum: sum.to_string(),
            });
        }
        Ok(Edge {
            e,
            nu,
            length,
            direction,
        })
    }

    /// `length * direction` with partition `nu`; the caller guarantees the sum.
    pub(crate) fn from_parts(direction: LatticeVec<T>, nu: Partition<T>) -> Result<Self> {
        let length = nu.sum()?;
        Ok(Edge {
            e: direction.scale(&length)?,
            nu,
            length,
            direction,
        })
    }

    pub fn vector(&self) -> &LatticeVec<T> {
        &self.e
    }

    pub fn partition(&self) -> &Partition<T> {
        &self.nu
    }

    pub fn length(&self) -> &T {
        &self.length
    }

    pub fn direction(&self) -> &LatticeVec<T> {
        &self.direction
    }
}

impl<T: fmt::Display> fmt::Display for Edge<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.e, self.nu)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Rank {
    RankOne,
    RankTwo,
}

/// A log datum with edges stored in counterclockwise order of their
/// directions, starting from the smallest angle to `(1, 0)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LogDatum<T> {
    edges: Vec<Edge<T>>,
}

impl<T: Scalar> LogDatum<T> {
    /// Validates raw `(e, nu)` pairs and sorts them counterclockwise.
    pub fn validate(raw: Vec<(LatticeVec<T>, Vec<T>)>) -> Result<Self> {
        let edges = raw
            .into_iter()
            .enumerate()
            .map(|(i, (e, nu))| Edge::new(e, Partition::new(nu)?, i + 1))
            .collect::<Result<Vec<_>>>()?;
        LogDatum::from_edges(edges)
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(raw: &[((i64, i64), &[i64])]) -> Result<Self> {
        let raw = raw
            .iter()
            .map(|&((x, y), nu)| {
                let nu = nu
                    .iter()
                    .map(|&p| T::from_i64(p).ok_or_else(|| Error::Overflow))
                    .collect::<Result<Vec<_>>>()?;
                Ok((LatticeVec::from_i64(x, y), nu))
            })
            .collect::<Result<Vec<_>>>()?;
        LogDatum::validate(raw)
    }

    /// Checks closure and distinct directions, then sorts.
    pub fn from_edges(mut edges: Vec<Edge<T>>) -> Result<Self> {
        sort_by_angle(&mut edges, |e| &e.direction)?;
        for w in edges.windows(2) {
            if w[0].direction == w[1].direction {
                return Err(Error::DuplicateDirection(
                    w[0].direction.x.to_string(),
                    w[0].direction.y.to_string(),
                ));
            }
        }
        let total = edges
            .iter()
            .try_fold(LatticeVec::zero(), |acc, e| acc.add(&e.e))?;
        if !total.is_zero() {
            return Err(Error::ClosureViolation(
                total.x.to_string(),
                total.y.to_string(),
            ));
        }
        Ok(LogDatum { edges })
    }

    pub fn empty() -> Self {
        LogDatum { edges: Vec::new() }
    }

    pub fn edges(&self) -> &[Edge<T>] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// The raw `(e, nu)` pairs in stored order.
    pub fn to_raw(&self) -> Vec<(LatticeVec<T>, Vec<T>)> {
        self.edges
            .iter()
            .map(|e| (e.e.clone(), e.nu.parts.clone()))
            .collect()
    }

    pub fn rank(&self) -> Result<Rank> {
        match self.edges.len() {
            n if n < 2 => Err(Error::TooFewEdges(n)),
            2 => Ok(Rank::RankOne),
            _ => Ok(Rank::RankTwo),
        }
    }

    /// A rank-one datum is zero-mutable when its two partitions agree.
    pub fn is_zero_mutable_rank_one(&self) -> Result<bool> {
        if self.rank()? != Rank::RankOne {
            return Err(Error::NotRankOne);
        }
        Ok(self.edges[0].nu == self.edges[1].nu)
    }

    /// `gcd(l_i) = 1` and no nonempty proper subset of edges sums to zero.
    pub fn is_irreducible(&self) -> Result<bool> {
        let g = self.edges.iter().fold(T::zero(), |g, e| g.gcd(&e.length));
        if !g.is_one() {
            return Ok(false);
        }
        let n = self.edges.len();
        if n >= 64 {
            return Err(Error::Overflow);
        }
        // masks containing edge 0 suffice: J sums to zero iff its complement does
        let full = (1u64 << n) - 1;
        for mask in (1..full).filter(|m| m & 1 == 1) {
            let mut sum = LatticeVec::zero();
            for (i, e) in self.edges.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    sum = sum.add(&e.e)?;
                }
            }
            if sum.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `h_u(S) = sum_i {u, e_i}_+`.
    pub fn u_height(&self, u: &LatticeVec<T>) -> Result<T> {
        self.edges
            .iter()
            .try_fold(T::zero(), |acc, e| acc.add_c(&pos_part(&sform(u, &e.e)?)))
    }

    /// Total lattice length `sum_i l_i`.
    pub fn total_length(&self) -> Result<T> {
        self.edges
            .iter()
            .try_fold(T::zero(), |acc, e| acc.add_c(&e.length))
    }

    /// Vertices of the polygon with these edge vectors, starting at the origin.
    pub fn polygon(&self) -> Result<Vec<LatticeVec<T>>> {
        accumulate(self.edges.iter().map(|e| Ok(e.e.clone())))
    }

    /// The polygon whose edges are the clockwise quarter turns of the `e_i`,
    /// so each edge has inner normal `u_i` and lattice length `l_i`.
    pub fn dual_polygon(&self) -> Result<Vec<LatticeVec<T>>> {
        accumulate(self.edges.iter().map(|e| e.e.rotate_cw()))
    }

    /// The image of the datum under a unimodular map, re-sorted.
    pub fn transform(&self, map: &UnimodularMap<T>) -> Result<Self> {
        let edges = self
            .edges
            .iter()
            .map(|e| {
                Ok(Edge {
                    e: map.apply(&e.e)?,
                    nu: e.nu.clone(),
                    length: e.length.clone(),
                    direction: map.apply(&e.direction)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let mut edges = edges;
        sort_by_angle(&mut edges, |e| &e.direction)?;
        Ok(LogDatum { edges })
    }

    /// The image under `map` listed from edge `start` on, without re-sorting.
    ///
    /// Correct order requires `map` to send `u_start` to `(1, 0)`: an
    /// orientation preserving map keeps the cyclic order and `(1, 0)` comes first.
    pub(crate) fn rotated_image(&self, map: &UnimodularMap<T>, start: usize) -> Result<Self> {
        let n = self.edges.len();
        let edges = (0..n)
            .map(|k| {
                let e = &self.edges[(start + k) % n];
                Ok(Edge {
                    e: map.apply(&e.e)?,
                    nu: e.nu.clone(),
                    length: e.length.clone(),
                    direction: map.apply(&e.direction)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LogDatum { edges })
    }

    /// Index of the edge with the given primitive direction.
    pub fn find_direction(&self, dir: &LatticeVec<T>) -> Option<usize> {
        self.edges.iter().position(|e| &e.direction == dir)
    }

    pub fn named(kind: NamedDatum) -> Result<Self> {
        match kind {
            NamedDatum::An(n) => {
                let m = i64::from(n);
                let m = m.checked_add(1).ok_or_else(|| Error::Overflow)?;
                let ones = vec![T::one(); usize::try_from(m).map_err(|_| Error::Overflow)?];
                LogDatum::validate(vec![
                    (LatticeVec::from_i64(1, 0), vec![T::one()]),
                    (LatticeVec::from_i64(0, m), ones),
                    (LatticeVec::from_i64(-1, -m), vec![T::one()]),
                ])
            }
            NamedDatum::Tom => {
                LogDatum::from_i64(&[((3, 0), &[2, 1]), ((0, 2), &[1, 1]), ((-3, -2), &[1])])
            }
            NamedDatum::Jerry => {
                LogDatum::from_i64(&[((3, 0), &[1, 1, 1]), ((0, 2), &[2]), ((-3, -2), &[1])])
            }
        }
    }

    /// The Stanley-Reisner fan: one cone `<u_i, u_{i+1}, u>` per edge.
    pub fn fan_presentation(&self) -> Result<FanPresentation<T>> {
        if self.rank()? != Rank::RankTwo {
            return Err(Error::NotRankTwo);
        }
        let lift = |v: &LatticeVec<T>| [v.x.clone(), v.y.clone(), T::zero()];
        let joint = [T::zero(), T::zero(), T::one()];
        let n = self.edges.len();
        let maximal_cones = (0..n)
            .map(|i| {
                [
                    lift(&self.edges[i].direction),
                    lift(&self.edges[(i + 1) % n].direction),
                    joint.clone(),
                ]
            })
            .collect();
        let walls = self
            .edges
            .iter()
            .map(|e| [lift(&e.direction), joint.clone()])
            .collect();
        Ok(FanPresentation {
            maximal_cones,
            walls,
            joint,
        })
    }

    /// Singularity type of each irreducible component `Spec k[sigma_i cap M]`.
    pub fn component_types(&self) -> Result<ComponentReport<T>> {
        if self.rank()? != Rank::RankTwo {
            return Err(Error::NotRankTwo);
        }
        let n = self.edges.len();
        let components = (0..n)
            .map(|i| cone_type(&self.edges[i].direction, &self.edges[(i + 1) % n].direction))
            .collect::<Result<Vec<_>>>()?;
        Ok(ComponentReport { components })
    }
}

impl<T: fmt::Display> fmt::Display for LogDatum<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

fn accumulate<T: Scalar>(
    steps: impl Iterator<Item = Result<LatticeVec<T>>>,
) -> Result<Vec<LatticeVec<T>>> {
    let mut out = vec![LatticeVec::zero()];
    for step in steps {
        let next = out.last().expect("nonempty").add(&step?)?;
        out.push(next);
    }
    // the closing vertex repeats the origin
    out.pop();
    if out.is_empty() {
        out.push(LatticeVec::zero());
    }
    Ok(out)
}

/// Named log data.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedDatum {
    An(u32),
    Tom,
    Jerry,
}

/// Generators live in `M = L + Z`; the joint is the ray `u = (0, 0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanPresentation<T> {
    pub maximal_cones: Vec<[[T; 3]; 3]>,
    pub walls: Vec<[[T; 3]; 2]>,
    pub joint: [T; 3],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentType<T> {
    /// `{u_i, u_{i+1}}`, the order of the cyclic quotient.
    pub index: T,
    /// `"smooth"` or `"1/r(1,q,0)"`.
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentReport<T> {
    pub components: Vec<ComponentType<T>>,
}

impl<T: Scalar> ComponentReport<T> {
    pub fn indices(&self) -> Vec<T> {
        self.components.iter().map(|c| c.index.clone()).collect()
    }

    pub fn labels(&self) -> Vec<String> {
        self.components.iter().map(|c| c.label.clone()).collect()
    }
}

/// Normal form of the 2-d monoid cone `<a, b>` with `{a, b} = r > 0`.
///
/// A unimodular map sends `a` to `(1, 0)` and `b` to `(q, r)` with
/// `0 <= q < r`. The dual fan cone is `<e_2, r e_1 - q e_2>`, the quotient
/// `1/r(1, q)`; the joint direction contributes the trailing smooth factor.
pub fn cone_type<T: Scalar>(a: &LatticeVec<T>, b: &LatticeVec<T>) -> Result<ComponentType<T>> {
    let r = sform(a, b)?;
    if !r.is_positive() {
        return Err(Error::NotRankTwo);
    }
    let to_e1 = UnimodularMap::to_first_basis(a)?;
    let image = to_e1.apply(b)?;
    debug_assert_eq!(image.y, r);
    let q = image.x.mod_floor(&r);
    let label = if r.is_one() {
        "smooth".to_string()
    } else {
        format!("1/{r}(1,{q},0)")
    };
    Ok(ComponentType { index: r, label })
}
