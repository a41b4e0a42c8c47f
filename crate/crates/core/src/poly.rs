//! Exact univariate and bivariate polynomials over a field.
//!
//! Bivariate polynomials live on a wall surface with coordinates `(x, u)`,
//! where `x` is the monomial of the wall direction and `u` the monomial of
//! the joint. Elimination always removes `u`.

use std::collections::BTreeMap;
use std::fmt::{self, Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, Zero};

use crate::error::{Error, Result};

/// A coefficient field. Exactness is the caller's concern: every decision
/// procedure in this crate assumes exact arithmetic, as with `BigRational`.
pub trait Coeff:
    Num + Neg<Output = Self> + Clone + PartialEq + Debug + Display + Send + Sync
{
}

impl<Q> Coeff for Q where
    Q: Num + Neg<Output = Self> + Clone + PartialEq + Debug + Display + Send + Sync
{
}

/// Dense univariate polynomial, lowest degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UPoly<Q> {
    coeffs: Vec<Q>,
}

impl<Q: Coeff> UPoly<Q> {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Q::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Q) -> Self {
        UPoly::new(vec![c])
    }

    pub fn one() -> Self {
        UPoly::constant(Q::one())
    }

    /// `c * t^k`.
    pub fn monomial(c: Q, k: usize) -> Self {
        let mut coeffs = vec![Q::zero(); k + 1];
        coeffs[k] = c;
        UPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Q {
        self.coeffs.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lc(&self) -> Q {
        self.coeffs.last().cloned().unwrap_or_else(Q::zero)
    }

    /// Exactly one nonzero coefficient: `c * t^k` with `c != 0`.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.iter().filter(|c| !c.is_zero()).count() == 1
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        UPoly::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        UPoly::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn neg(&self) -> Self {
        UPoly::new(self.coeffs.iter().cloned().map(Neg::neg).collect())
    }

    pub fn scale(&self, c: &Q) -> Self {
        UPoly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Q::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        UPoly::new(out)
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(UPoly::one(), |acc, _| acc.mul(self))
    }

    /// Division with remainder; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lc = divisor.lc();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Q::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1;
            let c = rem[k].clone() / lc.clone();
            if !c.is_zero() {
                for (i, d) in divisor.coeffs.iter().enumerate() {
                    let at = k - dd + i;
                    rem[at] = rem[at].clone() - c.clone() * d.clone();
                }
            }
            quot[k - dd] = c;
            rem.pop();
        }
        (UPoly::new(quot), UPoly::new(rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Quotient of an exact division.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.lc();
        UPoly::new(self.coeffs.iter().map(|c| c.clone() / lc.clone()).collect())
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s*self + t*other = g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (UPoly::one(), UPoly::zero());
        let (mut t0, mut t1) = (UPoly::zero(), UPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = Q::one() / r0.lc();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    pub fn derivative(&self) -> Self {
        UPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * from_usize::<Q>(k))
                .collect(),
        )
    }

    /// The product of the distinct irreducible factors, monic.
    pub fn squarefree(&self) -> Self {
        if self.is_constant() {
            return self.monic();
        }
        self.exact_div(&self.gcd(&self.derivative())).monic()
    }

    pub fn eval(&self, t: &Q) -> Q {
        self.coeffs
            .iter()
            .rev()
            .fold(Q::zero(), |acc, c| acc * t.clone() + c.clone())
    }
}

pub(crate) fn from_usize<Q: Coeff>(k: usize) -> Q {
    (0..k).fold(Q::zero(), |acc, _| acc + Q::one())
}

/// Sparse bivariate polynomial in `(x, u)`; keys are `(deg_x, deg_u)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiPoly<Q> {
    terms: BTreeMap<(u32, u32), Q>,
}

impl<Q: Coeff> BiPoly<Q> {
    pub fn zero() -> Self {
        BiPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        BiPoly::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        BiPoly::term(c, 0, 0)
    }

    /// `c * x^a * u^b`.
    pub fn term(c: Q, a: u32, b: u32) -> Self {
        BiPoly::from_terms([((a, b), c)])
    }

    pub fn x() -> Self {
        BiPoly::term(Q::one(), 1, 0)
    }

    pub fn u() -> Self {
        BiPoly::term(Q::one(), 0, 1)
    }

    pub fn u_pow(k: u32) -> Self {
        BiPoly::term(Q::one(), 0, k)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), Q)>) -> Self {
        let mut out = BiPoly::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    fn add_term(&mut self, key: (u32, u32), c: Q) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&key) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: u32, b: u32) -> Q {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree_u(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).max()
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (*k, c.clone().neg()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        BiPoly::from_terms(self.terms.iter().map(|(k, a)| (*k, a.clone() * c.clone())))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = BiPoly::zero();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &other.terms {
                out.add_term((a1 + a2, b1 + b2), c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn product<'a>(factors: impl IntoIterator<Item = &'a Self>) -> Self
    where
        Q: 'a,
    {
        factors.into_iter().fold(BiPoly::one(), |acc, f| acc.mul(f))
    }

    pub fn d_x(&self) -> Self {
        BiPoly::from_terms(
            self.terms
                .iter()
                .filter(|((a, _), _)| *a > 0)
                .map(|((a, b), c)| ((a - 1, *b), c.clone() * from_usize::<Q>(*a as usize))),
        )
    }

    pub fn d_u(&self) -> Self {
        BiPoly::from_terms(
            self.terms
                .iter()
                .filter(|((_, b), _)| *b > 0)
                .map(|((a, b), c)| ((*a, b - 1), c.clone() * from_usize::<Q>(*b as usize))),
        )
    }

    pub fn eval(&self, x: &Q, u: &Q) -> Q {
        self.terms.iter().fold(Q::zero(), |acc, ((a, b), c)| {
            acc + c.clone() * pow(x, *a) * pow(u, *b)
        })
    }

    /// The image under `x -> 0`, a polynomial in `u`.
    pub fn restrict_to_u(&self) -> UPoly<Q> {
        let n = self.degree_u().map_or(0, |d| d as usize + 1);
        let mut coeffs = vec![Q::zero(); n];
        for ((a, b), c) in &self.terms {
            if *a == 0 {
                coeffs[*b as usize] = c.clone();
            }
        }
        UPoly::new(coeffs)
    }

    /// Coefficients in `u`, each a polynomial in `x`, lowest `u`-degree first.
    pub fn as_poly_in_u(&self) -> Vec<UPoly<Q>> {
        let Some(du) = self.degree_u() else {
            return Vec::new();
        };
        let mut rows: Vec<Vec<Q>> = vec![Vec::new(); du as usize + 1];
        for ((a, b), c) in &self.terms {
            let row = &mut rows[*b as usize];
            if row.len() <= *a as usize {
                row.resize(*a as usize + 1, Q::zero());
            }
            row[*a as usize] = c.clone();
        }
        rows.into_iter().map(UPoly::new).collect()
    }

    /// `self == c * other` for some nonzero constant `c`.
    pub fn is_proportional(&self, other: &Self) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        let (key, a) = self.terms.iter().next_back().expect("nonzero");
        let b = other.coeff(key.0, key.1);
        if b.is_zero() {
            return false;
        }
        self.scale(&(b / a.clone())) == *other
    }
}

fn pow<Q: Coeff>(t: &Q, k: u32) -> Q {
    (0..k).fold(Q::one(), |acc, _| acc * t.clone())
}

/// `Res_u(f, g)` for `f, g` given as coefficient lists in `u` over `Q[x]`.
///
/// Computed as the Sylvester determinant with fraction-free elimination, so
/// the result specializes correctly at every `x` even where leading
/// coefficients vanish.
pub fn resultant_u<Q: Coeff>(f: &[UPoly<Q>], g: &[UPoly<Q>]) -> UPoly<Q> {
    let f = trim_rows(f);
    let g = trim_rows(g);
    if f.is_empty() || g.is_empty() {
        return UPoly::zero();
    }
    let (m, l) = (f.len() - 1, g.len() - 1);
    let n = m + l;
    if n == 0 {
        return UPoly::one();
    }
    let mut mat = vec![vec![UPoly::zero(); n]; n];
    for r in 0..l {
        for (i, c) in f.iter().rev().enumerate() {
            mat[r][r + i] = c.clone();
        }
    }
    for r in 0..m {
        for (i, c) in g.iter().rev().enumerate() {
            mat[l + r][r + i] = c.clone();
        }
    }
    bareiss_det(mat)
}

fn trim_rows<Q: Coeff>(p: &[UPoly<Q>]) -> &[UPoly<Q>] {
    let mut n = p.len();
    while n > 0 && p[n - 1].is_zero() {
        n -= 1;
    }
    &p[..n]
}

fn bareiss_det<Q: Coeff>(mut m: Vec<Vec<UPoly<Q>>>) -> UPoly<Q> {
    let n = m.len();
    let mut negate = false;
    let mut prev = UPoly::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return UPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.exact_div(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        det.neg()
    } else {
        det
    }
}

/// Whether `f = 0` is a smooth curve in the affine plane over the algebraic
/// closure: `f`, `df/dx` and `df/du` have no common zero.
///
/// The `x`-coordinates of singular points are roots of both
/// `Res_u(f, f_u)` and `Res_u(f, f_x)`. Each root of their squarefree gcd is
/// then examined by a gcd computation over `Q[x]/(G)` that splits `G`
/// whenever a leading coefficient turns out to be a zero divisor.
pub fn is_smooth_curve<Q: Coeff>(f: &BiPoly<Q>) -> bool {
    if f.is_zero() {
        return false;
    }
    let fu_bi = f.d_u();
    let fx_bi = f.d_x();
    let fp = f.as_poly_in_u();
    let fu = fu_bi.as_poly_in_u();
    let fx = fx_bi.as_poly_in_u();
    if fp.len() == 1 {
        // f depends on x only: a union of vertical lines
        let p = &fp[0];
        return p.is_constant() || p.gcd(&p.derivative()).is_constant();
    }
    let r1 = resultant_u(&fp, &fu);
    if r1.is_zero() {
        // f has a repeated factor of positive u-degree
        return false;
    }
    let r2 = resultant_u(&fp, &fx);
    let g = r1.gcd(&r2);
    if g.is_constant() {
        return true;
    }
    let g = g.squarefree();
    for (gi, h) in gcd_mod(&g, fp, fu) {
        for (_, h2) in gcd_mod(&gi, h, fx.clone()) {
            if h2.is_empty() || h2.len() > 1 {
                return false;
            }
        }
    }
    true
}

/// Gcd in `(Q[x]/(G))[u]` with dynamic splitting of `G`.
///
/// Returns pairs `(G_i, gcd_i)` with `G = prod G_i`; on each component the
/// leading coefficient of `gcd_i` is invertible, so its `u`-degree is the
/// degree of the gcd above every root of `G_i`. An empty `gcd_i` is zero.
fn gcd_mod<Q: Coeff>(
    g: &UPoly<Q>,
    a: Vec<UPoly<Q>>,
    b: Vec<UPoly<Q>>,
) -> Vec<(UPoly<Q>, Vec<UPoly<Q>>)> {
    let mut out = Vec::new();
    let mut stack = vec![(g.clone(), a, b)];
    while let Some((g, a, b)) = stack.pop() {
        let a = reduce_mod(&a, &g);
        let b = reduce_mod(&b, &g);
        let (a, b) = if b.is_empty() { (b, a) } else { (a, b) };
        // invariant now: if one side is zero it is `a`
        if b.is_empty() {
            out.push((g, Vec::new()));
            continue;
        }
        let lc = b.last().expect("nonzero").clone();
        let split = lc.gcd(&g);
        if !split.is_constant() {
            let other = g.exact_div(&split);
            stack.push((split, a.clone(), b.clone()));
            stack.push((other, a, b));
            continue;
        }
        if a.is_empty() {
            out.push((g, b));
            continue;
        }
        if a.len() < b.len() {
            stack.push((g, b, a));
            continue;
        }
        let (_, inv, _) = lc.ext_gcd(&g);
        let r = rem_mod(&a, &b, &inv, &g);
        stack.push((g, b, r));
    }
    out
}

fn reduce_mod<Q: Coeff>(p: &[UPoly<Q>], g: &UPoly<Q>) -> Vec<UPoly<Q>> {
    let mut out: Vec<UPoly<Q>> = p.iter().map(|c| c.rem(g)).collect();
    while out.last().is_some_and(UPoly::is_zero) {
        out.pop();
    }
    out
}

/// `a mod b` in `(Q[x]/(G))[u]` where `inv` inverts the leading coefficient of `b`.
fn rem_mod<Q: Coeff>(
    a: &[UPoly<Q>],
    b: &[UPoly<Q>],
    inv: &UPoly<Q>,
    g: &UPoly<Q>,
) -> Vec<UPoly<Q>> {
    let db = b.len() - 1;
    let mut r: Vec<UPoly<Q>> = a.to_vec();
    while r.len() > db {
        let k = r.len() - 1;
        let c = r[k].mul(inv).rem(g);
        if !c.is_zero() {
            for (i, bc) in b.iter().enumerate() {
                let at = k - db + i;
                r[at] = r[at].sub(&c.mul(bc)).rem(g);
            }
        }
        r.pop();
        while r.last().is_some_and(UPoly::is_zero) {
            r.pop();
        }
    }
    r
}

/// Rational coefficients used throughout the wall-function layer.
pub type Rational = BigRational;

impl Display for UPoly<BigRational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bi = BiPoly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| ((0, k as u32), c.clone())),
        );
        write!(f, "{bi}")
    }
}

impl Display for BiPoly<BigRational> {
    /// Terms `c*x^a*u^b` by descending `u`-degree, then descending `x`-degree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by(|p, q| q.1.cmp(&p.1).then(q.0.cmp(&p.0)));
        for (i, (a, b)) in keys.into_iter().enumerate() {
            let c = &self.terms[&(a, b)];
            let negative = c.is_negative();
            let mag = c.abs();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            if !mag.is_one() || (a == 0 && b == 0) {
                factors.push(mag.to_string());
            }
            match a {
                0 => {}
                1 => factors.push("x".to_string()),
                _ => factors.push(format!("x^{a}")),
            }
            match b {
                0 => {}
                1 => factors.push("u".to_string()),
                _ => factors.push(format!("u^{b}")),
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// Parses the text format `c*x^a*u^b + ...`.
///
/// Coefficients are integers or `p/q`; a term may omit the coefficient or
/// either variable, and factors may appear in any order.
pub fn parse_poly(text: &str) -> Result<BiPoly<BigRational>> {
    let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if cleaned.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut terms = Vec::new();
    let mut current = String::new();
    for (i, ch) in cleaned.char_indices() {
        if (ch == '+' || ch == '-') && i > 0 && !cleaned[..i].ends_with('^') {
            terms.push(std::mem::take(&mut current));
        }
        current.push(ch);
    }
    terms.push(current);
    let mut out = BiPoly::zero();
    for t in terms {
        let (sign, body) = match t.strip_prefix('-') {
            Some(rest) => (-BigRational::one(), rest),
            None => (BigRational::one(), t.strip_prefix('+').unwrap_or(&t)),
        };
        if body.is_empty() {
            return Err(Error::Parse(format!("dangling sign in {text:?}")));
        }
        let mut coeff = sign;
        let (mut a, mut b) = (0u32, 0u32);
        for factor in body.split('*') {
            let (base, exp) = match factor.split_once('^') {
                Some((base, e)) => (
                    base,
                    e.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?,
                ),
                None => (factor, 1),
            };
            match base {
                "x" => a += exp,
                "u" => b += exp,
                _ if factor.contains('^') => {
                    return Err(Error::Parse(format!("unknown variable in {factor:?}")))
                }
                _ => coeff *= parse_rational(factor)?,
            }
        }
        out.add_term((a, b), coeff);
    }
    Ok(out)
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.parse().map_err(|_| bad())?;
            let q: BigInt = q.parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
