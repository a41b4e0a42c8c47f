//! Generators, independent oracles and property checks shared by the
//! integration tests and the acceptance suite.

#![allow(dead_code)]

use logmut_core::{
    canonicalize, height_and_part, is_zero_mutable, legal_mutations, mutate, partitions_of,
    primitive_split, sform, shear_positive, verify_certificate, CanonicalForm, Datum, Limits,
    LogDatum, MutationIndex, Scalar, UnimodularMap, Vec2, Verdict,
};
use proptest::prelude::*;

pub fn v(x: i128, y: i128) -> Vec2 {
    Vec2::new(x, y)
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Raw closed vector list with parallel vectors merged, or `None` if the
/// closing vector vanishes or merging leaves fewer than three edges.
fn close_up(mut vs: Vec<(i128, i128)>) -> Option<Vec<(i128, i128)>> {
    let (sx, sy) = vs.iter().fold((0, 0), |(a, b), &(x, y)| (a + x, b + y));
    vs.push((-sx, -sy));
    let mut merged: Vec<(i128, i128)> = Vec::new();
    for (x, y) in vs {
        if x == 0 && y == 0 {
            continue;
        }
        let g = gcd(x, y);
        let dir = (x / g, y / g);
        match merged.iter_mut().find(|(a, b)| {
            let h = gcd(*a, *b);
            (a / h, b / h) == dir
        }) {
            Some(m) => *m = (m.0 + x, m.1 + y),
            None => merged.push((x, y)),
        }
    }
    merged.retain(|&(x, y)| x != 0 || y != 0);
    (merged.len() >= 3).then_some(merged)
}

/// Random rank-two data with coordinates bounded by `max_coord` and total
/// lattice length at most `max_total`, partitions uniform among all.
pub fn arb_datum(max_coord: i128, max_total: i128) -> impl Strategy<Value = Datum> {
    let c = max_coord.min(4);
    (
        prop::collection::vec((-c..=c, -c..=c), 2..=4),
        prop::collection::vec(any::<prop::sample::Index>(), 8),
    )
        .prop_filter_map("not a small closed polygon", move |(vs, picks)| {
            let edges = close_up(vs)?;
            if edges
                .iter()
                .any(|&(x, y)| x.abs() > max_coord || y.abs() > max_coord)
            {
                return None;
            }
            let total: i128 = edges.iter().map(|&(x, y)| gcd(x, y)).sum();
            if total > max_total || edges.len() > picks.len() {
                return None;
            }
            let raw = edges
                .iter()
                .zip(&picks)
                .map(|(&(x, y), pick)| {
                    let parts = partitions_of(gcd(x, y) as u64);
                    let nu = pick.get(&parts).iter().map(|&p| p as i128).collect();
                    (v(x, y), nu)
                })
                .collect();
            LogDatum::validate(raw).ok()
        })
}

/// All of `SL(2, Z)` with entries bounded by `max_entry`.
pub fn sl2_maps(max_entry: i128) -> Vec<UnimodularMap<i128>> {
    let r = -max_entry..=max_entry;
    let mut out = Vec::new();
    for a in r.clone() {
        for b in r.clone() {
            for c in r.clone() {
                for d in r.clone() {
                    if a * d - b * c == 1 {
                        out.push(UnimodularMap::new(a, b, c, d).unwrap());
                    }
                }
            }
        }
    }
    out
}

pub fn arb_sl2(max_entry: i128) -> impl Strategy<Value = UnimodularMap<i128>> {
    prop::sample::select(sl2_maps(max_entry))
}

/// Brute-force irreducibility: gcd of lengths and every proper nonempty
/// sub-multiset of edge vectors, enumerated by recursion.
pub fn irreducible_oracle(s: &Datum) -> bool {
    let es: Vec<(i128, i128)> = s
        .edges()
        .iter()
        .map(|e| (e.vector().x, e.vector().y))
        .collect();
    let g = es.iter().fold(0, |g, &(x, y)| gcd(g, gcd(x, y)));
    if g != 1 {
        return false;
    }
    fn zero_subset(es: &[(i128, i128)], i: usize, sum: (i128, i128), taken: usize) -> bool {
        if i == es.len() {
            return taken > 0 && taken < es.len() && sum == (0, 0);
        }
        zero_subset(es, i + 1, sum, taken)
            || zero_subset(es, i + 1, (sum.0 + es[i].0, sum.1 + es[i].1), taken + 1)
    }
    !zero_subset(&es, 0, (0, 0), 0)
}

/// Result of the search without memoization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlainVerdict {
    Yes(usize),
    No,
    Unknown,
}

fn success<T: Scalar>(s: &LogDatum<T>) -> bool {
    s.len() == 2 && s.edges()[0].partition() == s.edges()[1].partition()
}

/// Iterative deepening over simple paths of canonical classes, no global
/// memo. `No` once some depth admits no simple path at all, which happens
/// exactly when the reachable class set is finite.
pub fn iddfs<T: Scalar>(s: &LogDatum<T>, max_depth: usize) -> PlainVerdict {
    if s.len() == 2 {
        return if success(s) {
            PlainVerdict::Yes(0)
        } else {
            PlainVerdict::No
        };
    }
    enum Outcome {
        Found,
        Exhausted,
        Reached,
    }
    fn dfs<T: Scalar>(s: &LogDatum<T>, left: usize, path: &mut Vec<CanonicalForm<T>>) -> Outcome {
        if left == 0 {
            return Outcome::Reached;
        }
        let mut reached = false;
        let Ok(moves) = legal_mutations(s) else {
            return Outcome::Reached;
        };
        for m in moves {
            // out of scalar range: this branch stays undecided
            let child = mutate(s, m).and_then(|c| canonicalize(&c).map(|k| (c, k)));
            let Ok((child, key)) = child else {
                reached = true;
                continue;
            };
            if path.contains(&key) {
                continue;
            }
            if success(&child) {
                return Outcome::Found;
            }
            if child.len() == 2 {
                continue;
            }
            path.push(key);
            let out = dfs(&child, left - 1, path);
            path.pop();
            match out {
                Outcome::Found => return Outcome::Found,
                Outcome::Reached => reached = true,
                Outcome::Exhausted => {}
            }
        }
        if reached {
            Outcome::Reached
        } else {
            Outcome::Exhausted
        }
    }
    let root = canonicalize(s).unwrap();
    for d in 1..=max_depth {
        let mut path = vec![root.clone()];
        match dfs(s, d, &mut path) {
            Outcome::Found => return PlainVerdict::Yes(d),
            Outcome::Exhausted => return PlainVerdict::No,
            Outcome::Reached => {}
        }
    }
    PlainVerdict::Unknown
}

/// Every closed datum with `|coords| <= max_coord`, total length at most
/// `max_total` and at least two edges, each with every partition assignment.
pub fn all_small_data(max_coord: i128, max_total: i128) -> Vec<Datum> {
    let mut dirs = Vec::new();
    for x in -max_coord..=max_coord {
        for y in -max_coord..=max_coord {
            if gcd(x, y) == 1 {
                dirs.push((x, y));
            }
        }
    }
    let mut shapes = Vec::new();
    fn go(
        dirs: &[(i128, i128)],
        i: usize,
        budget: i128,
        sum: (i128, i128),
        cur: &mut Vec<(i128, i128)>,
        max_coord: i128,
        out: &mut Vec<Vec<(i128, i128)>>,
    ) {
        if sum.0.abs() > budget * max_coord || sum.1.abs() > budget * max_coord {
            return;
        }
        if i == dirs.len() {
            if sum == (0, 0) && cur.len() >= 2 {
                out.push(cur.clone());
            }
            return;
        }
        go(dirs, i + 1, budget, sum, cur, max_coord, out);
        let (dx, dy) = dirs[i];
        for l in 1..=budget {
            let (x, y) = (l * dx, l * dy);
            if x.abs() > max_coord || y.abs() > max_coord {
                break;
            }
            cur.push((x, y));
            go(
                dirs,
                i + 1,
                budget - l,
                (sum.0 + x, sum.1 + y),
                cur,
                max_coord,
                out,
            );
            cur.pop();
        }
    }
    go(
        &dirs,
        0,
        max_total,
        (0, 0),
        &mut Vec::new(),
        max_coord,
        &mut shapes,
    );

    let mut out = Vec::new();
    for shape in shapes {
        let choices: Vec<Vec<Vec<u64>>> = shape
            .iter()
            .map(|&(x, y)| partitions_of(gcd(x, y) as u64))
            .collect();
        let mut idx = vec![0usize; shape.len()];
        'odometer: loop {
            let raw = shape
                .iter()
                .zip(&idx)
                .zip(&choices)
                .map(|((&(x, y), &k), c)| (v(x, y), c[k].iter().map(|&p| p as i128).collect()))
                .collect();
            out.push(LogDatum::validate(raw).expect("closed by construction"));
            for pos in (0..idx.len()).rev() {
                idx[pos] += 1;
                if idx[pos] < choices[pos].len() {
                    continue 'odometer;
                }
                idx[pos] = 0;
            }
            break;
        }
    }
    out
}

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn total_length(s: &Datum) -> i128 {
    s.edges().iter().map(|e| *e.length()).sum()
}

/// Mutation output re-validates: closure, distinct directions, sums.
pub fn check_mutation_validity(s: &Datum) -> Check {
    for m in legal_mutations(s).map_err(|e| e.to_string())? {
        let out = mutate(s, m).map_err(|e| format!("{m}: {e}"))?;
        let again = LogDatum::validate(out.to_raw()).map_err(|e| format!("{m}: {e}"))?;
        ensure(again == out, || format!("{m}: revalidation changed {out}"))?;
        let sum = out
            .edges()
            .iter()
            .fold((0, 0), |(a, b), e| (a + e.vector().x, b + e.vector().y));
        ensure(sum == (0, 0), || format!("{m}: not closed"))?;
    }
    Ok(())
}

/// `h_{u_j}` is unchanged by `mu_{j,k}`.
pub fn check_height_invariance(s: &Datum) -> Check {
    for m in legal_mutations(s).map_err(|e| e.to_string())? {
        let u = s.edges()[m.edge - 1].direction().clone();
        let before = s.u_height(&u).unwrap();
        let after = mutate(s, m).unwrap().u_height(&u).unwrap();
        ensure(before == after, || {
            format!("{m} on {s}: {before} -> {after}")
        })?;
    }
    Ok(())
}

/// Total length changes by `h - 2 l_{j,k}`; edges off the line of `u_j`
/// keep their lengths.
pub fn check_length_bookkeeping(s: &Datum) -> Check {
    for m in legal_mutations(s).map_err(|e| e.to_string())? {
        let (h, part) = height_and_part(s, m).unwrap();
        let out = mutate(s, m).unwrap();
        let delta = total_length(&out) - total_length(s);
        ensure(delta == h - 2 * part, || {
            format!("{m} on {s}: delta {delta}, expected {}", h - 2 * part)
        })?;
        let u = s.edges()[m.edge - 1].direction();
        for e in s.edges() {
            if sform(u, e.direction()).unwrap() == 0 {
                continue;
            }
            let image = shear_positive(u, e.vector()).unwrap();
            let kept = out
                .edges()
                .iter()
                .any(|f| *f.vector() == image && f.length() == e.length());
            ensure(kept, || format!("{m} on {s}: image of {e} missing"))?;
        }
    }
    Ok(())
}

/// `mu(A S) = A mu(S)` with the edge index following `A`.
pub fn check_equivariance(s: &Datum, a: &UnimodularMap<i128>) -> Check {
    let t = s.transform(a).unwrap();
    for m in legal_mutations(s).map_err(|e| e.to_string())? {
        let dir = a.apply(s.edges()[m.edge - 1].direction()).unwrap();
        let j = t.find_direction(&dir).ok_or("direction lost")? + 1;
        let left = mutate(&t, MutationIndex::new(j, m.part)).map_err(|e| e.to_string())?;
        let right = mutate(s, m).unwrap().transform(a).unwrap();
        ensure(left == right, || format!("{m} on {s}: {left} != {right}"))?;
    }
    Ok(())
}

/// Canonical form is idempotent, invariant under `a` and under cyclic
/// relabeling of the input list.
pub fn check_canonical(s: &Datum, a: &UnimodularMap<i128>, shift: usize) -> Check {
    let c = canonicalize(s).unwrap();
    ensure(canonicalize(c.representative()).unwrap() == c, || {
        format!("not idempotent on {s}")
    })?;
    let t = s.transform(a).unwrap();
    ensure(canonicalize(&t).unwrap() == c, || {
        format!("not invariant on {s} under {:?}", a.entries())
    })?;
    let mut raw = s.to_raw();
    let n = raw.len();
    raw.rotate_left(shift % n);
    let r = LogDatum::validate(raw).unwrap();
    ensure(canonicalize(&r).unwrap() == c, || {
        format!("relabeling changed {s}")
    })
}

/// A Yes verdict replays to its terminal, a rank-one equal-partition datum.
pub fn check_certificate(s: &Datum, limits: &Limits) -> Check {
    match is_zero_mutable(s, limits).map_err(|e| e.to_string())? {
        Verdict::Yes(c) => ensure(
            verify_certificate(s, &c).map_err(|e| e.to_string())?,
            || format!("certificate for {s} does not replay"),
        ),
        _ => Ok(()),
    }
}

/// Kinks agree with the lengths from `primitive_split`.
pub fn check_kinks(s: &Datum) -> Check {
    let k = logmut_core::kinks(s).kinks;
    let lens: Vec<i128> = s
        .edges()
        .iter()
        .map(|e| primitive_split(e.vector()).unwrap().0)
        .collect();
    ensure(k == lens, || format!("kinks {k:?} vs {lens:?}"))
}
