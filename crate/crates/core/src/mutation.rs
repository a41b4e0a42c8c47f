//! The mutation operator on rank-two log data.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::shear_positive;
use crate::logdatum::{Edge, LogDatum, Partition, Rank};
use crate::scalar::Scalar;

/// Addresses part `part` of the partition on edge `edge`, both 1-based, in
/// the stored counterclockwise order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MutationIndex {
    pub edge: usize,
    pub part: usize,
}

impl MutationIndex {
    pub fn new(edge: usize, part: usize) -> Self {
        MutationIndex { edge, part }
    }
}

impl fmt::Display for MutationIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "mu_{{{},{}}}", self.edge, self.part)
    }
}

/// One branch of the mutation rule, as recorded by [`mutate_traced`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Branch {
    /// (1): edge `edge` (input order) sheared from `from` to `to`.
    Shear {
        edge: usize,
        from: String,
        to: String,
    },
    /// (2a): the mutated edge keeps its remaining parts.
    Shrink { edge: usize, to: String },
    /// (2b): the mutated edge had a single part and is removed.
    Remove { edge: usize },
    /// (3a): the opposite edge grows by `by` and gains that part.
    ExtendOpposite { edge: usize, by: String },
    /// (3b): a new edge opposite to the mutated one.
    NewEdge { vector: String, part: String },
}

impl Branch {
    pub fn tag(&self) -> &'static str {
        match self {
            Branch::Shear { .. } => "(1)",
            Branch::Shrink { .. } => "(2a)",
            Branch::Remove { .. } => "(2b)",
            Branch::ExtendOpposite { .. } => "(3a)",
            Branch::NewEdge { .. } => "(3b)",
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Branch::Shear { edge, from, to } => write!(f, "(1) shear edge {edge}: {from} -> {to}"),
            Branch::Shrink { edge, to } => write!(f, "(2a) shrink edge {edge} to {to}"),
            Branch::Remove { edge } => write!(f, "(2b) remove edge {edge}"),
            Branch::ExtendOpposite { edge, by } => {
                write!(f, "(3a) extend opposite edge {edge} by {by}")
            }
            Branch::NewEdge { vector, part } => write!(f, "(3b) new edge ({vector},({part}))"),
        }
    }
}

/// All legal mutations, one per distinct part value on each edge.
pub fn legal_mutations<T: Scalar>(s: &LogDatum<T>) -> Result<Vec<MutationIndex>> {
    if s.rank()? != Rank::RankTwo {
        return Err(Error::NotRankTwo);
    }
    let mut out = Vec::new();
    for (j, edge) in s.edges().iter().enumerate() {
        let h = s.u_height(edge.direction())?;
        let parts = edge.partition().parts();
        for (k, p) in parts.iter().enumerate() {
            if (k == 0 || parts[k - 1] != *p) && *p <= h {
                out.push(MutationIndex::new(j + 1, k + 1));
            }
        }
    }
    Ok(out)
}

/// The height `h = h_{u_j}(S)` and part `l_{j,k}` addressed by `m`.
pub fn height_and_part<T: Scalar>(s: &LogDatum<T>, m: MutationIndex) -> Result<(T, T)> {
    let bad = || Error::BadMutationIndex {
        edge: m.edge,
        part: m.part,
    };
    let edge = m
        .edge
        .checked_sub(1)
        .and_then(|j| s.edges().get(j))
        .ok_or_else(bad)?;
    let part = m
        .part
        .checked_sub(1)
        .and_then(|k| edge.partition().parts().get(k))
        .ok_or_else(bad)?;
    Ok((s.u_height(edge.direction())?, part.clone()))
}

/// `mu_{j,k}(S)`.
pub fn mutate<T: Scalar>(s: &LogDatum<T>, m: MutationIndex) -> Result<LogDatum<T>> {
    mutate_inner(s, m, None)
}

/// `mu_{j,k}(S)` together with the branches taken.
pub fn mutate_traced<T: Scalar>(
    s: &LogDatum<T>,
    m: MutationIndex,
) -> Result<(LogDatum<T>, Vec<Branch>)> {
    let mut trace = Vec::new();
    let out = mutate_inner(s, m, Some(&mut trace))?;
    Ok((out, trace))
}

/// Mutation at the first part of edge `edge` with the given value.
pub fn mutate_by_value<T: Scalar>(s: &LogDatum<T>, edge: usize, value: &T) -> Result<LogDatum<T>> {
    mutate(s, index_for_value(s, edge, value)?)
}

/// The [`MutationIndex`] of the first part on `edge` equal to `value`.
pub fn index_for_value<T: Scalar>(
    s: &LogDatum<T>,
    edge: usize,
    value: &T,
) -> Result<MutationIndex> {
    let bad = || Error::BadMutationIndex { edge, part: 0 };
    let e = edge
        .checked_sub(1)
        .and_then(|j| s.edges().get(j))
        .ok_or_else(bad)?;
    let k = e
        .partition()
        .parts()
        .iter()
        .position(|p| p == value)
        .ok_or_else(bad)?;
    Ok(MutationIndex::new(edge, k + 1))
}

fn mutate_inner<T: Scalar>(
    s: &LogDatum<T>,
    m: MutationIndex,
    mut trace: Option<&mut Vec<Branch>>,
) -> Result<LogDatum<T>> {
    if s.rank()? != Rank::RankTwo {
        return Err(Error::NotRankTwo);
    }
    let (h, part) = height_and_part(s, m)?;
    if h < part {
        return Err(Error::IllegalMutation {
            height: h.to_string(),
            part: part.to_string(),
        });
    }
    // branches are only built when a trace was requested
    let mut log = |b: &dyn Fn() -> Branch| {
        if let Some(t) = trace.as_deref_mut() {
            t.push(b());
        }
    };
    let j = m.edge - 1;
    let mutated = &s.edges()[j];
    let u = mutated.direction();
    let minus_u = u.neg()?;
    let d = h.sub_c(&part)?;

    let mut edges: Vec<Edge<T>> = Vec::with_capacity(s.len() + 1);
    let mut has_opposite = false;
    for (i, edge) in s.edges().iter().enumerate() {
        if i == j {
            if mutated.partition().len() > 1 {
                let nu = mutated.partition().without(m.part - 1);
                let shrunk = Edge::from_parts(u.clone(), nu)?;
                log(&|| Branch::Shrink {
                    edge: i + 1,
                    to: shrunk.to_string(),
                });
                edges.push(shrunk);
            } else {
                log(&|| Branch::Remove { edge: i + 1 });
            }
        } else if *edge.direction() == minus_u {
            has_opposite = true;
            let nu = edge.partition().with(d.clone());
            if !d.is_zero() {
                log(&|| Branch::ExtendOpposite {
                    edge: i + 1,
                    by: d.to_string(),
                });
            }
            edges.push(Edge::from_parts(minus_u.clone(), nu)?);
        } else {
            let moved = shear_positive(u, edge.vector())?;
            if moved != *edge.vector() {
                log(&|| Branch::Shear {
                    edge: i + 1,
                    from: edge.vector().to_string(),
                    to: moved.to_string(),
                });
            }
            edges.push(Edge::new(moved, edge.partition().clone(), i + 1)?);
        }
    }
    if !has_opposite && !d.is_zero() {
        let e = minus_u.scale(&d)?;
        log(&|| Branch::NewEdge {
            vector: e.to_string(),
            part: d.to_string(),
        });
        edges.push(Edge::new(e, Partition::single(d)?, s.len() + 1)?);
    }
    LogDatum::from_edges(edges)
}
