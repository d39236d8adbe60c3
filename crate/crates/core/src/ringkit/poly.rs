//! Sparse multivariate polynomials over the integers with nonnegative exponents.
//!
//! This is the workhorse behind the Laurent ring and the rational-function field:
//! Laurent polynomials shift into this ring before gcd or exact division, and
//! rational functions store a numerator/denominator pair of these.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A polynomial in `nvars` variables. Terms are keyed by exponent vectors in
/// lexicographic order, so the last entry is the lex-leading term.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, BigInt::one())
    }

    pub fn monomial(nvars: usize, exps: Vec<u32>, c: BigInt) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Poly { nvars, terms }
    }

    /// Builds a polynomial from possibly repeated terms, summing duplicates.
    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, BigInt)>>(nvars: usize, it: I) -> Self {
        let mut p = Poly::zero(nvars);
        for (e, c) in it {
            assert_eq!(e.len(), nvars, "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    /// The constant value if this polynomial has no variable terms.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_term(&self) -> Option<(&Vec<u32>, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.leading_term().map(|(_, c)| c.clone()).unwrap_or_default()
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|e| e[v]).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Whether variable `v` occurs in some term.
    pub fn has_var(&self, v: usize) -> bool {
        self.terms.keys().any(|e| e[v] > 0)
    }

    /// Gcd of the integer coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Componentwise minimum exponent over all terms (the monomial gcd).
    pub fn monomial_gcd(&self) -> Vec<u32> {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return vec![0; self.nvars];
        };
        let mut m = first.clone();
        for e in it {
            for (a, b) in m.iter_mut().zip(e) {
                *a = (*a).min(*b);
            }
        }
        m
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Divides every coefficient by `c`; the caller guarantees exactness.
    pub fn div_scalar(&self, c: &BigInt) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x / c)).collect(),
        }
    }

    pub fn mul_monomial(&self, exps: &[u32]) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(exps).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// Divides by a monomial that divides every term.
    pub fn div_monomial(&self, exps: &[u32]) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(exps).map(|(a, b)| a - b).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut acc = Poly::one(self.nvars);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Coefficients with respect to variable `v`: entry `k` holds the
    /// coefficient of `v^k` (itself free of `v`).
    pub fn coeffs_in(&self, v: usize) -> Vec<Poly> {
        let d = self.degree_in(v) as usize;
        let mut out = vec![Poly::zero(self.nvars); if self.is_zero() { 0 } else { d + 1 }];
        for (e, c) in &self.terms {
            let k = e[v] as usize;
            let mut e2 = e.clone();
            e2[v] = 0;
            out[k].terms.insert(e2, c.clone());
        }
        out
    }

    pub fn from_coeffs_in(nvars: usize, v: usize, coeffs: &[Poly]) -> Poly {
        let mut terms = BTreeMap::new();
        for (k, p) in coeffs.iter().enumerate() {
            for (e, c) in &p.terms {
                let mut e2 = e.clone();
                e2[v] += k as u32;
                terms.insert(e2, c.clone());
            }
        }
        Poly { nvars, terms }
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Poly::zero(self.nvars));
        }
        if let Some(c) = divisor.as_constant() {
            let mut terms = BTreeMap::new();
            for (e, x) in &self.terms {
                let (q, r) = x.div_rem(&c);
                if !r.is_zero() {
                    return None;
                }
                terms.insert(e.clone(), q);
            }
            return Some(Poly { nvars: self.nvars, terms });
        }
        // Cheap necessary conditions first.
        for v in 0..self.nvars {
            if divisor.degree_in(v) > self.degree_in(v) {
                return None;
            }
        }
        let (dl, dc) = divisor.leading_term().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.nvars);
        while let Some((re, rc)) = rem.leading_term() {
            if re.iter().zip(&dl).any(|(a, b)| a < b) {
                return None;
            }
            let (qc, r) = rc.div_rem(&dc);
            if !r.is_zero() {
                return None;
            }
            let qe: Vec<u32> = re.iter().zip(&dl).map(|(a, b)| a - b).collect();
            for (e, c) in &divisor.terms {
                let e2: Vec<u32> = e.iter().zip(&qe).map(|(a, b)| a + b).collect();
                rem.add_term(e2, -(c * &qc));
            }
            quot.terms.insert(qe, qc);
        }
        Some(quot)
    }

    pub fn divides(&self, other: &Poly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_exact(self).is_some()
    }

    /// Makes the lex-leading coefficient positive.
    pub fn normalize_sign(self) -> Poly {
        if self.leading_coeff().is_negative() {
            -self
        } else {
            self
        }
    }

    /// Primitive part with respect to the integer content, sign-normalized.
    pub fn primitive_part(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content();
        self.div_scalar(&c).normalize_sign()
    }

    /// Greatest common divisor, normalized to a positive lex-leading coefficient.
    /// The gcd of two zero polynomials is zero.
    pub fn gcd(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        gcd_poly(self, other).normalize_sign()
    }

    /// Gcd of a list, stopping early once it reaches a unit.
    pub fn gcd_all<'a, I: IntoIterator<Item = &'a Poly>>(nvars: usize, ps: I) -> Poly {
        let mut g = Poly::zero(nvars);
        for p in ps {
            g = g.gcd(p);
            if g.is_one() {
                break;
            }
        }
        g
    }
}

fn gcd_poly(a: &Poly, b: &Poly) -> Poly {
    let n = a.nvars;
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if let Some(c) = a.as_constant() {
        return Poly::constant(n, c.gcd(&b.content()));
    }
    if let Some(c) = b.as_constant() {
        return Poly::constant(n, c.gcd(&a.content()));
    }

    // Pull out the monomial and integer contents; they combine independently.
    let ma = a.monomial_gcd();
    let mb = b.monomial_gcd();
    let mono: Vec<u32> = ma.iter().zip(&mb).map(|(x, y)| (*x).min(*y)).collect();
    let ca = a.content();
    let cb = b.content();
    let cont = ca.gcd(&cb);
    let a1 = a.div_monomial(&ma).div_scalar(&ca);
    let b1 = b.div_monomial(&mb).div_scalar(&cb);
    let core = gcd_primitive(&a1, &b1);
    core.scale(&cont).mul_monomial(&mono)
}

/// Gcd of two polynomials with unit integer content and no monomial factor.
fn gcd_primitive(a: &Poly, b: &Poly) -> Poly {
    let n = a.nvars;
    if a.as_constant().is_some() || b.as_constant().is_some() {
        return Poly::one(n);
    }
    if a.is_monomial() || b.is_monomial() {
        // A monomial-free polynomial shares no factor with a monomial.
        return Poly::one(n);
    }
    if a == b || a == &-b.clone() {
        return a.clone();
    }
    // Trial division by the smaller input.
    let (small, big) = if a.num_terms() <= b.num_terms() { (a, b) } else { (b, a) };
    if big.div_exact(small).is_some() {
        return small.clone();
    }

    // A variable present in only one input: the gcd divides that input's
    // coefficients with respect to it.
    for v in 0..n {
        let (ha, hb) = (a.has_var(v), b.has_var(v));
        if ha != hb {
            let (with, without) = if ha { (a, b) } else { (b, a) };
            let mut g = without.clone();
            for c in with.coeffs_in(v) {
                if c.is_zero() {
                    continue;
                }
                g = gcd_poly(&g, &c);
                if g.as_constant().is_some() {
                    return Poly::one(n);
                }
            }
            return g.normalize_sign();
        }
    }

    if let Some(g) = heuristic_gcd(a, b) {
        return g.normalize_sign();
    }

    // Main variable: the shared one with the smallest degree.
    let v = (0..n)
        .filter(|&v| a.has_var(v))
        .min_by_key(|&v| a.degree_in(v).max(b.degree_in(v)))
        .expect("nonconstant polynomial has a variable");

    let mut ua = a.coeffs_in(v);
    let mut ub = b.coeffs_in(v);
    let cont_a = content_in(&ua);
    let cont_b = content_in(&ub);
    let cont = gcd_poly(&cont_a, &cont_b).normalize_sign();
    if !cont_a.is_one() {
        ua = ua.iter().map(|c| c.div_exact(&cont_a).expect("content divides")).collect();
    }
    if !cont_b.is_one() {
        ub = ub.iter().map(|c| c.div_exact(&cont_b).expect("content divides")).collect();
    }
    if ua.len() < ub.len() {
        std::mem::swap(&mut ua, &mut ub);
    }
    // Primitive pseudo-remainder sequence.
    while !ub.is_empty() {
        if ub.len() == 1 {
            // Nonzero constant in v: the primitive parts are coprime in v.
            ua = vec![Poly::one(n)];
            break;
        }
        let r = pseudo_rem(&ua, &ub);
        ua = ub;
        if r.is_empty() {
            ub = Vec::new();
        } else {
            let c = content_in(&r);
            ub = if c.is_one() {
                r
            } else {
                r.iter().map(|x| x.div_exact(&c).expect("content divides")).collect()
            };
        }
    }
    let g = Poly::from_coeffs_in(n, v, &ua);
    let g = g.primitive_part();
    (&g * &cont).normalize_sign()
}

/// Bit budget for one evaluation in [`heuristic_gcd`].
const HEU_MAX_BITS: u64 = 1 << 18;

/// Gcd by evaluation at a large integer and ξ-adic reconstruction, one
/// variable at a time. A candidate is only returned after it divides both
/// inputs, and the starting point `ξ > 2 min(|a|, |b|)` makes such a
/// candidate the true gcd. `None` means the budget ran out.
fn heuristic_gcd(a: &Poly, b: &Poly) -> Option<Poly> {
    let n = a.nvars;
    let (ca, cb) = (a.content(), b.content());
    let cont = ca.gcd(&cb);
    let a = a.div_scalar(&ca);
    let b = b.div_scalar(&cb);
    if a.as_constant().is_some() || b.as_constant().is_some() {
        return Some(Poly::constant(n, cont));
    }
    let v = (0..n).max_by_key(|&v| a.degree_in(v).max(b.degree_in(v)))?;
    let deg = u64::from(a.degree_in(v).max(b.degree_in(v)));
    let norm = |p: &Poly| p.terms.values().map(|c| c.abs()).max().unwrap_or_default();
    let mut xi: BigInt = norm(&a).min(norm(&b)) * 2 + 29;
    for _ in 0..6 {
        if xi.bits() * deg > HEU_MAX_BITS {
            return None;
        }
        let (ea, eb) = (eval_var(&a, v, &xi), eval_var(&b, v, &xi));
        if !ea.is_zero() && !eb.is_zero() {
            if let Some(gamma) = heuristic_gcd(&ea, &eb) {
                let g = interpolate_var(&gamma, v, &xi).primitive_part();
                if !g.is_zero() && a.div_exact(&g).is_some() && b.div_exact(&g).is_some() {
                    return Some(g.scale(&cont));
                }
            }
        }
        xi = xi * 73794 / 27011;
    }
    None
}

/// Substitutes the integer `xi` for variable `v`.
fn eval_var(p: &Poly, v: usize, xi: &BigInt) -> Poly {
    let mut powers = vec![BigInt::one()];
    let mut out = Poly::zero(p.nvars);
    for (e, c) in &p.terms {
        while powers.len() <= e[v] as usize {
            let next = powers.last().unwrap() * xi;
            powers.push(next);
        }
        let mut e2 = e.clone();
        e2[v] = 0;
        out.add_term(e2, c * &powers[e[v] as usize]);
    }
    out
}

/// Inverts [`eval_var`] digit by digit in the symmetric base-`xi` representation.
fn interpolate_var(p: &Poly, v: usize, xi: &BigInt) -> Poly {
    let half = xi / 2;
    let mut rest = p.clone();
    let mut out = Poly::zero(p.nvars);
    let mut k = 0u32;
    while !rest.is_zero() {
        let mut next = Poly::zero(p.nvars);
        for (e, c) in &rest.terms {
            let mut d = c.mod_floor(xi);
            if d > half {
                d -= xi;
            }
            let q = (c - &d) / xi;
            if !d.is_zero() {
                let mut e2 = e.clone();
                e2[v] += k;
                out.add_term(e2, d);
            }
            next.add_term(e.clone(), q);
        }
        rest = next;
        k += 1;
    }
    out
}

/// Gcd of the coefficients of a polynomial viewed in one variable.
fn content_in(coeffs: &[Poly]) -> Poly {
    let n = coeffs[0].nvars;
    let mut nonzero: Vec<&Poly> = coeffs.iter().filter(|c| !c.is_zero()).collect();
    nonzero.sort_by_key(|c| c.num_terms());
    let mut g = Poly::zero(n);
    for c in nonzero {
        g = gcd_poly(&g, c).normalize_sign();
        if g.is_one() {
            break;
        }
    }
    g
}

/// `lc(b)^k * a mod b` in the univariate-over-multivariate view; both inputs
/// are dense coefficient vectors with nonzero top entries.
fn pseudo_rem(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let db = b.len() - 1;
    let lc = &b[db];
    let mut r: Vec<Poly> = a.to_vec();
    trim(&mut r);
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c = &*c * lc;
        }
        let shift = dr - db;
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] = &r[i + shift] - &(&lr * bc);
        }
        trim(&mut r);
    }
    r
}

fn trim(v: &mut Vec<Poly>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = Poly::zero(self.nvars);
        if self.is_zero() || rhs.is_zero() {
            return out;
        }
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(mut self) -> Poly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -self.clone()
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Graded-lex comparison of exponent vectors, highest first when reversed.
pub(crate) fn grlex_cmp<T: Ord + Copy + Into<i64>>(a: &[T], b: &[T]) -> Ordering {
    let sa: i64 = a.iter().map(|&x| x.into()).sum();
    let sb: i64 = b.iter().map(|&x| x.into()).sum();
    sa.cmp(&sb).then_with(|| a.cmp(b))
}

/// Writes `terms` (highest graded-lex first) using variable names from `names`.
pub(crate) fn write_terms<T>(
    f: &mut fmt::Formatter<'_>,
    terms: &[(&[T], &BigInt)],
    names: &dyn Fn(usize) -> String,
) -> fmt::Result
where
    T: Copy + Into<i64>,
{
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (k, (e, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if k == 0 {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { " - " } else { " + " })?;
        }
        let vars: Vec<String> = e
            .iter()
            .enumerate()
            .filter(|(_, &x)| x.into() != 0)
            .map(|(i, &x)| {
                let x: i64 = x.into();
                if x == 1 {
                    names(i)
                } else {
                    format!("{}^{}", names(i), x)
                }
            })
            .collect();
        if vars.is_empty() {
            write!(f, "{mag}")?;
        } else {
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "{}", vars.join("*"))?;
        }
    }
    Ok(())
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(&[u32], &BigInt)> =
            self.terms.iter().map(|(e, c)| (e.as_slice(), c)).collect();
        terms.sort_by(|a, b| grlex_cmp(b.0, a.0));
        write_terms(f, &terms, &|i| format!("u{}", i + 2))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> Poly {
        Poly::var(n, i)
    }
    fn c(n: usize, v: i64) -> Poly {
        Poly::constant(n, BigInt::from(v))
    }

    #[test]
    fn exact_division_and_failure() {
        let n = 2;
        let a = &(&x(n, 0) - &c(n, 1)) * &(&x(n, 1) + &c(n, 2));
        let b = &x(n, 0) - &c(n, 1);
        assert_eq!(a.div_exact(&b).unwrap(), &x(n, 1) + &c(n, 2));
        assert!(a.div_exact(&(&x(n, 0) + &c(n, 1))).is_none());
        assert!(a.div_exact(&c(n, 2)).is_none());
    }

    #[test]
    fn gcd_of_products() {
        let n = 3;
        let f = &(&x(n, 0) - &c(n, 1)) * &(&x(n, 1) - &c(n, 1));
        let g = &f * &(&x(n, 2) + &c(n, 3));
        let h = &f.pow(2) * &(&x(n, 0) + &x(n, 2));
        assert_eq!(g.gcd(&h), f.clone().normalize_sign());
        assert!(x(n, 0).gcd(&(&x(n, 1) - &c(n, 1))).is_one());
    }

    #[test]
    fn gcd_integer_content() {
        let n = 1;
        let a = (&x(n, 0) - &c(n, 1)).scale(&BigInt::from(6));
        let b = (&x(n, 0) - &c(n, 1)).scale(&BigInt::from(4));
        assert_eq!(a.gcd(&b), (&x(n, 0) - &c(n, 1)).scale(&BigInt::from(2)));
    }

    #[test]
    fn gcd_with_zero_and_constants() {
        let p = &x(2, 0) - &c(2, 1);
        assert_eq!(Poly::zero(2).gcd(&p), p);
        assert!(c(2, 3).gcd(&p).is_one());
        assert!(Poly::zero(2).gcd(&Poly::zero(2)).is_zero());
    }

    #[test]
    fn display_grlex() {
        let n = 2;
        let p = &(&x(n, 0) * &x(n, 1)) - &c(n, 1);
        assert_eq!(p.to_string(), "u2*u3 - 1");
    }
}
