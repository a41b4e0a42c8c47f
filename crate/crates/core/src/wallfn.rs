//! Wall functions: one factored polynomial per edge of a log datum.
//!
//! On the wall of edge `i` the coordinates are `(x, u)`, where `x` is the
//! monomial of the primitive direction `u_i` and `u` the monomial of the joint.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::logdatum::LogDatum;
use crate::poly::{is_smooth_curve, resultant_u, BiPoly, Coeff, UPoly};
use crate::scalar::Scalar;

/// Factors `f_{i,k}` per edge, edges in counterclockwise order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WallAssignment<Q> {
    pub walls: Vec<Vec<BiPoly<Q>>>,
}

impl<Q: Coeff> WallAssignment<Q> {
    pub fn new(walls: Vec<Vec<BiPoly<Q>>>) -> Self {
        WallAssignment { walls }
    }

    /// `f_i`, the product of the factors on edge `i` (0-based).
    pub fn wall_function(&self, i: usize) -> BiPoly<Q> {
        BiPoly::product(&self.walls[i])
    }
}

/// The image of `f` under `x -> 0`.
pub fn restrict_to_u<Q: Coeff>(f: &BiPoly<Q>) -> UPoly<Q> {
    f.restrict_to_u()
}

fn u_pow<Q: Coeff>(k: usize) -> UPoly<Q> {
    UPoly::monomial(Q::one(), k)
}

fn lengths<T: Scalar>(s: &LogDatum<T>) -> Result<Vec<usize>> {
    s.edges()
        .iter()
        .map(|e| e.length().to_usize().ok_or_else(|| Error::Overflow))
        .collect()
}

fn parts<T: Scalar>(s: &LogDatum<T>) -> Result<Vec<Vec<usize>>> {
    s.edges()
        .iter()
        .map(|e| {
            e.partition()
                .parts()
                .iter()
                .map(|p| p.to_usize().ok_or_else(|| Error::Overflow))
                .collect()
        })
        .collect()
}

fn check_shape<T: Scalar, Q>(s: &LogDatum<T>, w: &WallAssignment<Q>) -> Result<()> {
    if s.len() != w.walls.len() {
        return Err(Error::ShapeMismatch(format!(
            "datum has {} edges but the assignment has {} walls",
            s.len(),
            w.walls.len()
        )));
    }
    Ok(())
}

/// `restrict_to_u(f_i) = u^{l_i}` on every wall.
///
/// This is the sufficient condition for the product of the restrictions
/// over all walls to be trivial; the condition is not necessary.
pub fn joint_compatible<T: Scalar, Q: Coeff>(
    s: &LogDatum<T>,
    w: &WallAssignment<Q>,
) -> Result<bool> {
    check_shape(s, w)?;
    let ls = lengths(s)?;
    Ok((0..ls.len()).all(|i| w.wall_function(i).restrict_to_u() == u_pow(ls[i])))
}

/// Outcome of the checks on one factor; `edge` and `factor` are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorCheck {
    pub edge: usize,
    pub factor: usize,
    /// `Some(m)` when the restriction is exactly `u^m`.
    pub restriction_degree: Option<usize>,
    pub smooth: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubordinationReport {
    pub subordinate: bool,
    pub factors: Vec<FactorCheck>,
    /// Human-readable reasons for failure, empty when subordinate.
    pub issues: Vec<String>,
}

impl fmt::Display for SubordinationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "subordinate: {}", self.subordinate)?;
        for c in &self.factors {
            let r = match c.restriction_degree {
                Some(m) => format!("u^{m}"),
                None => "not a power of u".to_string(),
            };
            writeln!(
                f,
                "  edge {} factor {}: restriction {r}, smooth {}",
                c.edge, c.factor, c.smooth
            )?;
        }
        for issue in &self.issues {
            writeln!(f, "  {issue}")?;
        }
        Ok(())
    }
}

fn restriction_degree<Q: Coeff>(f: &BiPoly<Q>) -> Option<usize> {
    let r = f.restrict_to_u();
    let d = r.degree()?;
    (r == u_pow(d)).then_some(d)
}

/// Every factor restricts to `u^{l_{i,k}}` and cuts out a smooth curve.
///
/// Factors are matched to parts as multisets, so their order on a wall is
/// irrelevant. A factor count differing from the number of parts fails.
pub fn is_subordinate<T: Scalar, Q: Coeff>(
    s: &LogDatum<T>,
    w: &WallAssignment<Q>,
) -> Result<SubordinationReport> {
    check_shape(s, w)?;
    let parts = parts(s)?;
    let mut factors = Vec::new();
    let mut issues = Vec::new();
    for (i, (wall, nu)) in w.walls.iter().zip(&parts).enumerate() {
        let mut degrees = Vec::new();
        for (k, f) in wall.iter().enumerate() {
            let deg = restriction_degree(f);
            let smooth = is_smooth_curve(f);
            if deg.is_none() {
                issues.push(format!(
                    "edge {} factor {}: restriction is not a power of u",
                    i + 1,
                    k + 1
                ));
            }
            if !smooth {
                issues.push(format!(
                    "edge {} factor {}: curve is singular",
                    i + 1,
                    k + 1
                ));
            }
            degrees.extend(deg);
            factors.push(FactorCheck {
                edge: i + 1,
                factor: k + 1,
                restriction_degree: deg,
                smooth,
            });
        }
        if wall.len() != nu.len() {
            issues.push(format!(
                "edge {}: {} factors for a partition with {} parts",
                i + 1,
                wall.len(),
                nu.len()
            ));
            continue;
        }
        let mut want = nu.clone();
        want.sort_unstable();
        degrees.sort_unstable();
        if degrees.len() == want.len() && degrees != want {
            issues.push(format!(
                "edge {}: restriction degrees {degrees:?} do not match the partition {want:?}",
                i + 1
            ));
        }
    }
    Ok(SubordinationReport {
        subordinate: issues.is_empty(),
        factors,
        issues,
    })
}

/// Two factors on one wall are distinct and meet only above `x = 0`.
fn pair_generic<Q: Coeff>(f: &BiPoly<Q>, g: &BiPoly<Q>) -> bool {
    if f.is_proportional(g) {
        return false;
    }
    let r = resultant_u(&f.as_poly_in_u(), &g.as_poly_in_u());
    r.is_monomial()
}

fn wall_generic<Q: Coeff>(wall: &[BiPoly<Q>]) -> bool {
    (0..wall.len()).all(|a| (a + 1..wall.len()).all(|b| pair_generic(&wall[a], &wall[b])))
}

/// Factors on each wall are pairwise non-proportional with resultant
/// `c * x^m`, `c != 0`.
pub fn is_generic<T: Scalar, Q: Coeff>(s: &LogDatum<T>, w: &WallAssignment<Q>) -> Result<bool> {
    if !is_subordinate(s, w)?.subordinate {
        return Err(Error::SubordinationRequired);
    }
    Ok(w.walls.iter().all(|wall| wall_generic(wall)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Strategy {
    /// `u^{l_k} + c_k x`.
    Plain,
    /// Parts in ascending order, each new factor `λ x + P u^{q - s}` where
    /// `P` is the product and `s` the degree sum of the factors placed so far.
    Increasing,
    /// `Increasing` on the parts `>= 2`, then `u + h x P` for each part `1`.
    Wrapped,
}

const STRATEGIES: [Strategy; 3] = [Strategy::Plain, Strategy::Increasing, Strategy::Wrapped];
const DRAWS: usize = 12;

fn increasing_ok(ascending: &[usize]) -> bool {
    let mut sum = 0;
    let mut i = 0;
    while i < ascending.len() {
        let q = ascending[i];
        if sum > 0 && q < sum {
            return false;
        }
        while i < ascending.len() && ascending[i] == q {
            sum += q;
            i += 1;
        }
    }
    true
}

fn strategy_applies(strategy: Strategy, parts: &[usize]) -> bool {
    let mut asc = parts.to_vec();
    asc.sort_unstable();
    match strategy {
        Strategy::Plain => asc.windows(2).all(|w| w[0] == w[1]),
        Strategy::Increasing => increasing_ok(&asc),
        Strategy::Wrapped => {
            let big: Vec<usize> = asc.iter().copied().filter(|&p| p >= 2).collect();
            !big.is_empty() && big.len() < asc.len() && increasing_ok(&big)
        }
    }
}

/// Whether [`generic_wall_assignment`] has a construction for a wall with
/// these parts.
pub fn generic_construction_available(parts: &[usize]) -> bool {
    STRATEGIES.iter().any(|&s| strategy_applies(s, parts))
}

fn draw(rng: &mut ChaCha8Rng, used: &mut Vec<BigRational>) -> BigRational {
    loop {
        let n: i64 = rng.gen_range(1..=9) * if rng.gen_bool(0.5) { 1 } else { -1 };
        let d: i64 = rng.gen_range(1..=3);
        let c = BigRational::new(BigInt::from(n), BigInt::from(d));
        if !used.contains(&c) {
            used.push(c.clone());
            return c;
        }
    }
}

type P = BiPoly<BigRational>;

fn as_u32(k: usize) -> u32 {
    u32::try_from(k).expect("degree fits in u32")
}

fn increasing(asc: &[usize], rng: &mut ChaCha8Rng, used: &mut Vec<BigRational>) -> Vec<P> {
    let mut placed: Vec<P> = Vec::new();
    let mut sum = 0;
    let mut i = 0;
    while i < asc.len() {
        let q = asc[i];
        let base = BiPoly::product(&placed).mul(&P::u_pow(as_u32(q - sum)));
        let mut group = Vec::new();
        while i < asc.len() && asc[i] == q {
            let c = draw(rng, used);
            let f = if placed.is_empty() {
                P::u_pow(as_u32(q)).add(&P::x().scale(&c))
            } else {
                base.add(&P::x().scale(&c))
            };
            group.push(f);
            i += 1;
        }
        sum += q * group.len();
        placed.extend(group);
    }
    placed
}

fn build_wall(strategy: Strategy, parts: &[usize], rng: &mut ChaCha8Rng) -> Vec<P> {
    let mut used = Vec::new();
    let mut asc = parts.to_vec();
    asc.sort_unstable();
    let mut wall = match strategy {
        Strategy::Plain => asc
            .iter()
            .map(|&p| P::u_pow(as_u32(p)).add(&P::x().scale(&draw(rng, &mut used))))
            .collect(),
        Strategy::Increasing => increasing(&asc, rng, &mut used),
        Strategy::Wrapped => {
            let big: Vec<usize> = asc.iter().copied().filter(|&p| p >= 2).collect();
            let mut wall = increasing(&big, rng, &mut used);
            let xp = P::x().mul(&BiPoly::product(&wall));
            let ones = asc.len() - big.len();
            for _ in 0..ones {
                let h = draw(rng, &mut used);
                wall.push(P::u().add(&xp.scale(&h)));
            }
            wall
        }
    };
    // partition order: descending degree
    wall.sort_by_key(|f| std::cmp::Reverse(restriction_degree(f)));
    wall
}

fn wall_verified(parts: &[usize], wall: &[P]) -> bool {
    let mut want = parts.to_vec();
    want.sort_unstable();
    let mut got: Vec<usize> = wall.iter().filter_map(restriction_degree).collect();
    got.sort_unstable();
    got == want && wall.iter().all(is_smooth_curve) && wall_generic(wall)
}

/// Seeded subordinate, generic factors for every wall.
///
/// Each wall first tries `u^{l_k} + c_k x` with distinct random constants,
/// which is generic exactly when all parts on the wall are equal; mixed
/// partitions use nested constructions. Every candidate is verified and
/// redrawn on failure. Partitions none of the constructions handle give
/// [`Error::NoGenericAssignment`].
pub fn generic_wall_assignment<T: Scalar>(
    s: &LogDatum<T>,
    seed: u64,
) -> Result<WallAssignment<BigRational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut walls = Vec::new();
    for (i, nu) in parts(s)?.iter().enumerate() {
        let wall = STRATEGIES
            .iter()
            .filter(|&&st| strategy_applies(st, nu))
            .flat_map(|&st| std::iter::repeat_n(st, DRAWS))
            .map(|st| build_wall(st, nu, &mut rng))
            .find(|wall| wall_verified(nu, wall))
            .ok_or_else(|| Error::NoGenericAssignment {
                edge: i + 1,
                partition: s.edges()[i].partition().to_string(),
            })?;
        walls.push(wall);
    }
    Ok(WallAssignment { walls })
}

/// The kink of the log structure along each boundary divisor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KinkReport<T> {
    pub kinks: Vec<T>,
}

pub fn kinks<T: Scalar>(s: &LogDatum<T>) -> KinkReport<T> {
    KinkReport {
        kinks: s.edges().iter().map(|e| e.length().clone()).collect(),
    }
}

/// The A_n wall functions: `f_1 = f_3 = u` and `f_2 = prod_k (u + c_k x)`,
/// one linear factor per part, with `c_k = 1, 2, ...`.
pub fn an_wall_assignment(n: u32) -> WallAssignment<BigRational> {
    let c = |k: u32| BigRational::from_integer(BigInt::from(k));
    let middle = (1..=n + 1)
        .map(|k| P::u().add(&P::x().scale(&c(k))))
        .collect();
    WallAssignment::new(vec![vec![P::u()], middle, vec![P::u()]])
}
