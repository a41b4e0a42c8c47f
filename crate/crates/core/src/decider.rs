//! Canonical forms up to `SL(2, Z)`, the zero-mutability search, certificates
//! and enumeration of partition assignments over a fixed polygon.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lattice::{LatticeVec, UnimodularMap};
use crate::logdatum::{LogDatum, Partition, Rank};
use crate::mutation::{index_for_value, legal_mutations, mutate};
use crate::scalar::Scalar;

type KeyEdge<T> = (T, T, Vec<T>);

/// A distinguished representative of the orbit of a datum under orientation
/// preserving lattice isomorphisms.
#[derive(Debug, Clone)]
pub struct CanonicalForm<T> {
    key: Vec<KeyEdge<T>>,
    representative: LogDatum<T>,
}

impl<T: Scalar> CanonicalForm<T> {
    /// Deterministic text encoding, e.g. `1,0:1;-1,0:1`.
    pub fn key(&self) -> String {
        self.key
            .iter()
            .map(|(x, y, nu)| {
                let parts: Vec<String> = nu.iter().map(T::to_string).collect();
                format!("{x},{y}:{}", parts.join("."))
            })
            .collect::<Vec<_>>()
            .join(";")
    }

    /// The transformed datum whose serialization is the key.
    pub fn representative(&self) -> &LogDatum<T> {
        &self.representative
    }
}

impl<T: PartialEq> PartialEq for CanonicalForm<T> {
    fn eq(&self, other: &Self) -> bool {
        self.key == other.key
    }
}

impl<T: Eq> Eq for CanonicalForm<T> {}

impl<T: std::hash::Hash> std::hash::Hash for CanonicalForm<T> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.key.hash(state);
    }
}

impl<T: Ord> PartialOrd for CanonicalForm<T> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Ord> Ord for CanonicalForm<T> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key.cmp(&other.key)
    }
}

impl<T: Scalar> fmt::Display for CanonicalForm<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.key())
    }
}

fn key_of<T: Scalar>(s: &LogDatum<T>) -> Vec<KeyEdge<T>> {
    s.edges()
        .iter()
        .map(|e| {
            (
                e.vector().x.clone(),
                e.vector().y.clone(),
                e.partition().parts().to_vec(),
            )
        })
        .collect()
}

/// Canonical form: over every edge `i`, send `u_i` to `(1, 0)` and shear the
/// next direction `(p, q)` into `0 <= p < q`; keep the smallest serialization.
pub fn canonicalize<T: Scalar>(s: &LogDatum<T>) -> Result<CanonicalForm<T>> {
    let n = s.len();
    if n == 0 {
        return Ok(CanonicalForm {
            key: Vec::new(),
            representative: s.clone(),
        });
    }
    let mut best: Option<(usize, UnimodularMap<T>, Vec<LatticeVec<T>>)> = None;
    for i in 0..n {
        let base = UnimodularMap::to_first_basis(s.edges()[i].direction())?;
        let map = if n >= 3 {
            let next = base.apply(s.edges()[(i + 1) % n].direction())?;
            // n >= 3 and closure put the next direction strictly above the axis
            let t = next.x.div_floor(&next.y).neg_c()?;
            UnimodularMap::shear(t).compose(&base)?
        } else {
            base
        };
        let edge = |k: usize| &s.edges()[(i + k) % n];
        match &mut best {
            None => {
                let image = (0..n)
                    .map(|k| map.apply(edge(k).vector()))
                    .collect::<Result<Vec<_>>>()?;
                best = Some((i, map, image));
            }
            Some((j, best_map, best_image)) => {
                // images are computed only while this candidate ties the best
                for k in 0..n {
                    let img = map.apply(edge(k).vector())?;
                    let ord = (&img.x, &img.y)
                        .cmp(&(&best_image[k].x, &best_image[k].y))
                        .then_with(|| {
                            edge(k)
                                .partition()
                                .parts()
                                .cmp(s.edges()[(*j + k) % n].partition().parts())
                        });
                    match ord {
                        std::cmp::Ordering::Greater => break,
                        std::cmp::Ordering::Equal => continue,
                        std::cmp::Ordering::Less => {
                            best_image[k] = img;
                            for (r, slot) in best_image.iter_mut().enumerate().skip(k + 1) {
                                *slot = map.apply(edge(r).vector())?;
                            }
                            *j = i;
                            *best_map = map;
                            break;
                        }
                    }
                }
            }
        }
    }
    let (i, map, _) = best.expect("nonempty datum");
    let representative = s.rotated_image(&map, i)?;
    Ok(CanonicalForm {
        key: key_of(&representative),
        representative,
    })
}

/// One certificate step: 1-based counterclockwise edge position in the
/// intermediate datum and the value of the part mutated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateStep<T> {
    pub edge: usize,
    pub part: T,
}

impl<T: fmt::Display> fmt::Display for CertificateStep<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(edge {}, part {})", self.edge, self.part)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate<T> {
    pub steps: Vec<CertificateStep<T>>,
    pub terminal: LogDatum<T>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<T> {
    Yes(Certificate<T>),
    No,
    Unknown { explored: usize, depth: usize },
}

impl<T> Verdict<T> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::Yes(_))
    }

    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Yes(_) => "Yes",
            Verdict::No => "No",
            Verdict::Unknown { .. } => "Unknown",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_depth: usize,
    pub max_states: usize,
    /// Worker threads for frontier expansion; `0` or `1` means sequential.
    pub threads: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_depth: 32,
            max_states: 1_000_000,
            threads: 1,
        }
    }
}

impl Limits {
    pub fn with_depth(max_depth: usize) -> Self {
        Limits {
            max_depth,
            ..Limits::default()
        }
    }
}

/// Rank one with equal partitions.
fn is_success<T: Scalar>(s: &LogDatum<T>) -> Result<bool> {
    Ok(s.rank()? == Rank::RankOne && s.is_zero_mutable_rank_one()?)
}

struct Node<T> {
    datum: LogDatum<T>,
    key: Vec<KeyEdge<T>>,
    /// whether `datum` equals its class representative
    literal: bool,
    parent: Option<(usize, CertificateStep<T>)>,
}

type Children<T> = Vec<(LogDatum<T>, CanonicalForm<T>, CertificateStep<T>, bool)>;

/// Children of `s` with their success flags, and whether any were dropped
/// for exceeding the scalar range.
fn expand<T: Scalar>(s: &LogDatum<T>) -> Result<(Children<T>, bool)> {
    let mut out = Vec::new();
    let moves = match legal_mutations(s) {
        Ok(moves) => moves,
        Err(Error::Overflow) => return Ok((out, true)),
        Err(e) => return Err(e),
    };
    let mut overflowed = false;
    for m in moves {
        let child = mutate(s, m).and_then(|c| {
            let class = canonicalize(&c)?;
            let success = is_success(&c)?;
            Ok((c, class, success))
        });
        let (child, class, success) = match child {
            Ok(v) => v,
            Err(Error::Overflow) => {
                overflowed = true;
                continue;
            }
            Err(e) => return Err(e),
        };
        let part = s.edges()[m.edge - 1].partition().parts()[m.part - 1].clone();
        out.push((
            child,
            class,
            CertificateStep { edge: m.edge, part },
            success,
        ));
    }
    Ok((out, overflowed))
}

/// Breadth-first search over canonical classes for a sequence of mutations
/// ending in a rank-one datum with equal partitions.
///
/// Frontiers are processed in canonical key order, so verdicts and
/// certificates do not depend on `limits.threads`. Among the classes first
/// reached on the same level, the literal datum kept for a class is the one
/// equal to its canonical representative when such a datum occurs.
pub fn is_zero_mutable<T: Scalar>(s: &LogDatum<T>, limits: &Limits) -> Result<Verdict<T>> {
    match s.rank()? {
        Rank::RankOne => {
            return Ok(if s.is_zero_mutable_rank_one()? {
                Verdict::Yes(Certificate {
                    steps: Vec::new(),
                    terminal: s.clone(),
                })
            } else {
                Verdict::No
            })
        }
        Rank::RankTwo => {}
    }
    let pool = if limits.threads > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(limits.threads)
                .build()
                .map_err(|e| Error::Parse(format!("thread pool: {e}")))?,
        )
    } else {
        None
    };

    let root_class = canonicalize(s)?;
    let mut seen = ClassIndex::default();
    seen.insert(&root_class.key, 0);
    let mut nodes = vec![Node {
        literal: *s == root_class.representative,
        datum: s.clone(),
        key: root_class.key,
        parent: None,
    }];
    let mut frontier = vec![0usize];
    // set when a child left the scalar range; No is then unjustified
    let mut truncated = false;

    for depth in 1..=limits.max_depth {
        let level_start = nodes.len();
        let mut successes = Vec::new();
        // past the state cap the level is still scanned, but only successes are kept
        let mut capped = false;
        for chunk in frontier.chunks(EXPAND_CHUNK) {
            let expanded: Vec<Result<(Children<T>, bool)>> = match &pool {
                Some(pool) => {
                    pool.install(|| chunk.par_iter().map(|&i| expand(&nodes[i].datum)).collect())
                }
                None => chunk.iter().map(|&i| expand(&nodes[i].datum)).collect(),
            };
            for (&parent, children) in chunk.iter().zip(expanded) {
                let (children, overflowed) = children?;
                truncated |= overflowed;
                for (datum, class, step, success) in children {
                    let literal = datum == *class.representative();
                    if let Some(j) = seen.find(&nodes, &class.key) {
                        if j >= level_start && literal && !nodes[j].literal {
                            nodes[j].literal = true;
                            nodes[j].datum = datum;
                            nodes[j].parent = Some((parent, step));
                        }
                        continue;
                    }
                    if capped && !success {
                        continue;
                    }
                    let j = nodes.len();
                    seen.insert(&class.key, j);
                    nodes.push(Node {
                        datum,
                        key: class.key,
                        literal,
                        parent: Some((parent, step)),
                    });
                    if success {
                        successes.push(j);
                    }
                }
            }
            capped |= nodes.len() > limits.max_states;
        }

        if !successes.is_empty() {
            let best = successes
                .iter()
                .copied()
                .min_by(|&a, &b| {
                    let (na, nb) = (&nodes[a], &nodes[b]);
                    nb.literal.cmp(&na.literal).then(na.key.cmp(&nb.key))
                })
                .expect("nonempty");
            return Ok(Verdict::Yes(certificate_for(&nodes, best)));
        }
        if capped {
            return Ok(Verdict::Unknown {
                explored: nodes.len(),
                depth,
            });
        }

        // rank-one states that are not successes are dead ends
        let mut next: Vec<usize> = (level_start..nodes.len())
            .filter(|&j| nodes[j].datum.len() >= 3)
            .collect();
        if next.is_empty() {
            return Ok(if truncated {
                Verdict::Unknown {
                    explored: nodes.len(),
                    depth,
                }
            } else {
                Verdict::No
            });
        }
        next.sort_by(|&a, &b| nodes[a].key.cmp(&nodes[b].key));
        frontier = next;
    }
    Ok(Verdict::Unknown {
        explored: nodes.len(),
        depth: limits.max_depth,
    })
}

/// Frontier nodes expanded per batch; bounds the memory held by unmerged children.
const EXPAND_CHUNK: usize = 4096;

/// Maps key hashes to node indices so each key is stored once, in its node.
#[derive(Default)]
struct ClassIndex {
    buckets: HashMap<u64, Vec<usize>>,
}

impl ClassIndex {
    fn hash<T: Scalar>(key: &[KeyEdge<T>]) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        key.hash(&mut h);
        h.finish()
    }

    fn find<T: Scalar>(&self, nodes: &[Node<T>], key: &[KeyEdge<T>]) -> Option<usize> {
        self.buckets
            .get(&Self::hash(key))?
            .iter()
            .copied()
            .find(|&j| nodes[j].key == key)
    }

    fn insert<T: Scalar>(&mut self, key: &[KeyEdge<T>], j: usize) {
        self.buckets.entry(Self::hash(key)).or_default().push(j);
    }
}

fn certificate_for<T: Scalar>(nodes: &[Node<T>], end: usize) -> Certificate<T> {
    let mut steps = Vec::new();
    let mut at = end;
    while let Some((parent, step)) = &nodes[at].parent {
        steps.push(step.clone());
        at = *parent;
    }
    steps.reverse();
    Certificate {
        steps,
        terminal: nodes[end].datum.clone(),
    }
}

/// Applies the certificate steps to `s`.
pub fn replay<T: Scalar>(s: &LogDatum<T>, c: &Certificate<T>) -> Result<LogDatum<T>> {
    c.steps
        .iter()
        .enumerate()
        .try_fold(s.clone(), |cur, (i, step)| {
            index_for_value(&cur, step.edge, &step.part)
                .and_then(|m| mutate(&cur, m))
                .map_err(|e| Error::ReplayFailed {
                    step: i + 1,
                    source: Box::new(e),
                })
        })
}

/// Replays `c` and checks it ends at its terminal, which is a success state.
pub fn verify_certificate<T: Scalar>(s: &LogDatum<T>, c: &Certificate<T>) -> Result<bool> {
    let end = replay(s, c)?;
    Ok(end == c.terminal && is_success(&end)?)
}

/// Partitions of `n` in descending lexicographic order, parts non-increasing.
pub fn partitions_of(n: u64) -> Vec<Vec<u64>> {
    fn go(rest: u64, max: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// One row of an enumeration: a partition per edge, in counterclockwise
/// order, and the verdict for the resulting datum.
#[derive(Debug, Clone)]
pub struct Assignment<T> {
    pub datum: LogDatum<T>,
    pub partitions: Vec<Partition<T>>,
    pub verdict: Verdict<T>,
}

/// Runs the decider on every assignment of partitions to the given edges.
///
/// Edges are put in counterclockwise order first; the first edge varies
/// slowest and each edge runs through its partitions in descending
/// lexicographic order.
pub fn enumerate_zero_mutable<T: Scalar>(
    edge_vectors: &[LatticeVec<T>],
    limits: &Limits,
) -> Result<Vec<Assignment<T>>> {
    let shape = LogDatum::validate(
        edge_vectors
            .iter()
            .map(|e| Ok((e.clone(), vec![e.lattice_length()])))
            .collect::<Result<Vec<_>>>()?,
    )?;
    let choices = shape
        .edges()
        .iter()
        .map(|e| {
            let l = e.length().to_u64().ok_or_else(|| Error::Overflow)?;
            partitions_of(l)
                .into_iter()
                .map(|p| {
                    p.into_iter()
                        .map(|x| T::from_u64(x).ok_or_else(|| Error::Overflow))
                        .collect::<Result<Vec<T>>>()
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;

    let mut rows = Vec::new();
    let mut idx = vec![0usize; choices.len()];
    loop {
        let raw = shape
            .edges()
            .iter()
            .zip(&idx)
            .zip(&choices)
            .map(|((e, &k), c)| (e.vector().clone(), c[k].clone()))
            .collect();
        let datum = LogDatum::validate(raw)?;
        let verdict = is_zero_mutable(&datum, limits)?;
        let partitions = datum
            .edges()
            .iter()
            .map(|e| e.partition().clone())
            .collect();
        rows.push(Assignment {
            datum,
            partitions,
            verdict,
        });
        // odometer, last edge fastest
        let mut pos = idx.len();
        loop {
            if pos == 0 {
                return Ok(rows);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logdatum::NamedDatum;
    use crate::mutation::MutationIndex;

    type D = LogDatum<i64>;

    fn d(raw: &[((i64, i64), &[i64])]) -> D {
        D::from_i64(raw).unwrap()
    }

    #[test]
    fn canonical_examples() {
        let tom = D::named(NamedDatum::Tom).unwrap();
        let jerry = D::named(NamedDatum::Jerry).unwrap();
        let a1 = D::named(NamedDatum::An(1)).unwrap();
        let a2 = D::named(NamedDatum::An(2)).unwrap();
        let t = mutate(&tom, MutationIndex::new(1, 1)).unwrap();
        assert_eq!(canonicalize(&t).unwrap(), canonicalize(&a1).unwrap());
        let j = mutate(&jerry, MutationIndex::new(2, 1)).unwrap();
        assert_eq!(canonicalize(&j).unwrap(), canonicalize(&a2).unwrap());
        assert_ne!(canonicalize(&a1).unwrap(), canonicalize(&a2).unwrap());
        let id = UnimodularMap::identity();
        assert_eq!(
            canonicalize(&tom.transform(&id).unwrap()).unwrap(),
            canonicalize(&tom).unwrap()
        );
    }

    #[test]
    fn canonical_form_is_idempotent() {
        let tom = D::named(NamedDatum::Tom).unwrap();
        let c = canonicalize(&tom).unwrap();
        assert_eq!(canonicalize(c.representative()).unwrap(), c);
        assert_eq!(key_of(c.representative()), c.key);
    }

    fn eager_key(s: &D) -> Vec<KeyEdge<i64>> {
        let n = s.len();
        (0..n)
            .map(|i| {
                let base = UnimodularMap::to_first_basis(s.edges()[i].direction()).unwrap();
                let next = base.apply(s.edges()[(i + 1) % n].direction()).unwrap();
                let t = -next.x.div_euclid(next.y);
                let map = UnimodularMap::shear(t).compose(&base).unwrap();
                key_of(&s.rotated_image(&map, i).unwrap())
            })
            .min()
            .unwrap()
    }

    #[test]
    fn canonical_matches_eager_minimum() {
        let mut data = vec![
            D::named(NamedDatum::Tom).unwrap(),
            D::named(NamedDatum::Jerry).unwrap(),
            D::named(NamedDatum::An(4)).unwrap(),
        ];
        for k in 0..data.len() {
            for idx in legal_mutations(&data[k]).unwrap() {
                data.push(mutate(&data[k], idx).unwrap());
            }
        }
        for s in data.iter().filter(|s| s.len() >= 3) {
            assert_eq!(canonicalize(s).unwrap().key, eager_key(s), "{s:?}");
        }
    }

    #[test]
    fn canonical_shear_example() {
        let s = d(&[((1, 0), &[1]), ((2, 2), &[1, 1]), ((-3, -2), &[1])]);
        let m = UnimodularMap::from_i64(1, 0, -1, 1).unwrap();
        let sheared = s.transform(&m).unwrap();
        assert!(sheared
            .find_direction(&LatticeVec::from_i64(1, 0))
            .is_some());
        assert_eq!(sheared.edges()[0].vector(), &LatticeVec::from_i64(2, 0));
        assert_eq!(canonicalize(&s).unwrap(), canonicalize(&sheared).unwrap());
    }

    #[test]
    fn an_chain_certificates() {
        for n in 0..=8u32 {
            let s = D::named(NamedDatum::An(n)).unwrap();
            let Verdict::Yes(c) = is_zero_mutable(&s, &Limits::default()).unwrap() else {
                panic!("A_{n} should be zero-mutable");
            };
            assert_eq!(c.steps.len(), n as usize + 1);
            assert!(c.steps.iter().all(|st| st.edge == 2 && st.part == 1));
            assert_eq!(c.terminal, d(&[((1, 0), &[1]), ((-1, 0), &[1])]));
            assert!(verify_certificate(&s, &c).unwrap());
        }
    }

    #[test]
    fn rank_one_verdicts() {
        let bad = d(&[((2, 0), &[2]), ((-2, 0), &[1, 1])]);
        assert_eq!(
            is_zero_mutable(&bad, &Limits::default()).unwrap(),
            Verdict::No
        );
        let good = d(&[((1, 0), &[1]), ((-1, 0), &[1])]);
        assert!(is_zero_mutable(&good, &Limits::default()).unwrap().is_yes());
        assert!(is_zero_mutable(&D::empty(), &Limits::default()).is_err());
    }

    #[test]
    fn pinned_bounded_verdict() {
        let s = d(&[((1, 0), &[1]), ((0, 2), &[2]), ((-1, -2), &[1])]);
        let v = is_zero_mutable(&s, &Limits::with_depth(12)).unwrap();
        assert_eq!(v.name(), PINNED_A1_VARIANT);
    }

    const PINNED_A1_VARIANT: &str = "No";

    #[test]
    fn replay_examples() {
        let a2 = D::named(NamedDatum::An(2)).unwrap();
        let Verdict::Yes(c) = is_zero_mutable(&a2, &Limits::default()).unwrap() else {
            panic!()
        };
        assert_eq!(
            replay(&a2, &c).unwrap(),
            d(&[((1, 0), &[1]), ((-1, 0), &[1])])
        );
        let empty = Certificate {
            steps: Vec::new(),
            terminal: a2.clone(),
        };
        assert_eq!(replay(&a2, &empty).unwrap(), a2);
        let tom = D::named(NamedDatum::Tom).unwrap();
        let first = Certificate {
            steps: vec![CertificateStep { edge: 1, part: 2 }],
            terminal: D::empty(),
        };
        assert_eq!(
            replay(&tom, &first).unwrap(),
            d(&[((1, 0), &[1]), ((2, 2), &[1, 1]), ((-3, -2), &[1])])
        );
        let illegal = Certificate {
            steps: vec![CertificateStep { edge: 2, part: 2 }],
            terminal: D::empty(),
        };
        assert!(matches!(
            replay(
                &d(&[((1, 0), &[1]), ((0, 2), &[2]), ((-1, -2), &[1])]),
                &illegal
            ),
            Err(Error::ReplayFailed { step: 1, .. })
        ));
    }

    #[test]
    fn thread_count_does_not_change_results() {
        let tom = D::named(NamedDatum::Tom).unwrap();
        let one = is_zero_mutable(&tom, &Limits::default()).unwrap();
        let four = is_zero_mutable(
            &tom,
            &Limits {
                threads: 4,
                ..Limits::default()
            },
        )
        .unwrap();
        assert_eq!(one, four);
        assert!(one.is_yes());
    }

    #[test]
    fn partitions_in_order() {
        assert_eq!(partitions_of(3), vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(0), vec![Vec::<u64>::new()]);
    }

    #[test]
    fn enumeration_examples() {
        let v = |x, y| LatticeVec::<i64>::from_i64(x, y);
        let rows = enumerate_zero_mutable(&[v(1, 0), v(-1, 0)], &Limits::default()).unwrap();
        assert_eq!(rows.len(), 1);
        assert!(rows[0].verdict.is_yes());

        let rows =
            enumerate_zero_mutable(&[v(1, 0), v(0, 2), v(-1, -2)], &Limits::default()).unwrap();
        let a1 = rows
            .iter()
            .find(|r| r.datum == D::named(NamedDatum::An(1)).unwrap())
            .unwrap();
        assert!(a1.verdict.is_yes());

        assert!(matches!(
            enumerate_zero_mutable(&[v(1, 0), v(0, 1)], &Limits::default()),
            Err(Error::ClosureViolation(..))
        ));
    }
}
