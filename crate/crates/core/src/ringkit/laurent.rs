//! Multivariate Laurent polynomials `Z[t1^±1, ..., tn^±1]`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::{grlex_cmp, write_terms, Poly};
use super::RingError;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero(nvars: usize) -> Self {
        LaurentPolynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    /// `t_i` (zero-based index).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, BigInt::one())
    }

    pub fn monomial(nvars: usize, exps: Vec<i64>, c: BigInt) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        LaurentPolynomial { nvars, terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<i64>, BigInt)>>(nvars: usize, it: I) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in it {
            assert_eq!(e.len(), nvars, "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, e: Vec<i64>, c: BigInt) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[i64]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// Constant value, if the polynomial has only a constant term (or is zero).
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

    /// A unit of the Laurent ring: `±t^e`.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().next().unwrap().abs().is_one()
    }

    /// Product, failing when the variable counts differ.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, RingError> {
        if self.nvars != other.nvars {
            return Err(RingError::VariableMismatch(self.nvars, other.nvars));
        }
        Ok(self * other)
    }

    /// Spread of total exponent sums: max minus min over the terms.
    pub fn degree_spread(&self) -> Result<u64, RingError> {
        let sums = self.terms.keys().map(|e| e.iter().sum::<i64>());
        let (lo, hi) = sums.fold((i64::MAX, i64::MIN), |(lo, hi), s| (lo.min(s), hi.max(s)));
        if self.is_zero() {
            return Err(RingError::ZeroDegree);
        }
        Ok((hi - lo) as u64)
    }

    /// Homogeneous in the total grading (all terms share one exponent sum).
    pub fn is_homogeneous(&self) -> bool {
        self.degree_spread() == Ok(0)
    }

    fn min_exponents(&self) -> Vec<i64> {
        let mut m = vec![i64::MAX; self.nvars];
        for e in self.terms.keys() {
            for (a, b) in m.iter_mut().zip(e) {
                *a = (*a).min(*b);
            }
        }
        if self.terms.is_empty() {
            m.iter_mut().for_each(|x| *x = 0);
        }
        m
    }

    /// Shifts into the polynomial ring by the monomial that makes every
    /// minimal exponent zero. Returns that polynomial and the shift removed.
    pub fn to_poly(&self) -> (Poly, Vec<i64>) {
        let shift = self.min_exponents();
        let p = Poly::from_terms(
            self.nvars,
            self.terms.iter().map(|(e, c)| {
                (e.iter().zip(&shift).map(|(a, s)| (a - s) as u32).collect(), c.clone())
            }),
        );
        (p, shift)
    }

    pub fn from_poly(p: &Poly) -> Self {
        Self::from_poly_shifted(p, &vec![0; p.nvars()])
    }

    pub fn from_poly_shifted(p: &Poly, shift: &[i64]) -> Self {
        LaurentPolynomial {
            nvars: p.nvars(),
            terms: p
                .terms()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, s)| *a as i64 + s).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, exps: &[i64]) -> Self {
        LaurentPolynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(exps).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        LaurentPolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient in the Laurent ring (divisibility up to monomial shifts).
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(self.nvars));
        }
        let (a, sa) = self.to_poly();
        let (b, sb) = divisor.to_poly();
        let q = a.div_exact(&b)?;
        let shift: Vec<i64> = sa.iter().zip(&sb).map(|(x, y)| x - y).collect();
        Some(Self::from_poly_shifted(&q, &shift))
    }

    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_exact(self).is_some()
    }

    /// Canonical representative up to units `±t^e`: the monomial factor is
    /// stripped so every variable has minimal exponent zero, and the leading
    /// coefficient in graded-lex order is positive.
    pub fn normalize_unit(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let (p, _) = self.to_poly();
        let out = Self::from_poly(&p);
        let lead = out
            .terms
            .iter()
            .max_by(|a, b| grlex_cmp(a.0, b.0))
            .map(|(_, c)| c.is_negative())
            .unwrap();
        if lead {
            -out
        } else {
            out
        }
    }

    /// Whether `self` and `other` differ by a unit of the Laurent ring.
    pub fn associates(&self, other: &Self) -> bool {
        self.normalize_unit() == other.normalize_unit()
    }

    /// Renames variables: variable `i` becomes variable `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.nvars);
        LaurentPolynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e2 = vec![0; self.nvars];
                    for (i, x) in e.iter().enumerate() {
                        e2[perm[i]] = *x;
                    }
                    (e2, c.clone())
                })
                .collect(),
        }
    }

    /// `t_i -> t_i^-1` for every variable.
    pub fn involution(&self) -> Self {
        LaurentPolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.iter().map(|x| -x).collect(), c.clone())).collect(),
        }
    }

    /// Renders with custom variable names.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        struct D<'a>(&'a LaurentPolynomial, &'a [String]);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt_named(f, &|i| self.1[i].clone())
            }
        }
        D(self, names)
    }

    fn fmt_named(&self, f: &mut fmt::Formatter<'_>, names: &dyn Fn(usize) -> String) -> fmt::Result {
        let mut terms: Vec<(&[i64], &BigInt)> =
            self.terms.iter().map(|(e, c)| (e.as_slice(), c)).collect();
        terms.sort_by(|a, b| grlex_cmp(b.0, a.0));
        write_terms(f, &terms, names)
    }
}

/// Gcd of Laurent polynomials up to units, normalized with [`normalize_unit`].
/// Zero entries are ignored; the gcd of only zeros is zero.
///
/// [`normalize_unit`]: LaurentPolynomial::normalize_unit
pub fn laurent_gcd(ps: &[LaurentPolynomial]) -> Result<LaurentPolynomial, RingError> {
    let first = ps.first().ok_or(RingError::EmptyInput)?;
    let mut acc = LaurentGcd::new(first.nvars());
    for p in ps {
        if acc.push(p)? {
            break;
        }
    }
    Ok(acc.finish())
}

/// Running gcd accumulator over a stream of Laurent polynomials.
#[derive(Clone, Debug)]
pub struct LaurentGcd {
    nvars: usize,
    g: Poly,
}

impl LaurentGcd {
    pub fn new(nvars: usize) -> Self {
        LaurentGcd { nvars, g: Poly::zero(nvars) }
    }

    /// Folds in `p`; returns `true` once the gcd has become a unit.
    pub fn push(&mut self, p: &LaurentPolynomial) -> Result<bool, RingError> {
        if p.nvars() != self.nvars {
            return Err(RingError::VariableMismatch(self.nvars, p.nvars()));
        }
        if !p.is_zero() {
            let (q, _) = p.to_poly();
            self.g = if self.g.is_zero() { q.normalize_sign() } else { self.g.gcd(&q) };
        }
        Ok(self.is_unit())
    }

    pub fn is_unit(&self) -> bool {
        self.g.is_one()
    }

    pub fn finish(self) -> LaurentPolynomial {
        LaurentPolynomial::from_poly(&self.g).normalize_unit()
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = LaurentPolynomial::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1.iter().zip(e2).map(|(a, b)| a + b).collect(), c1 * c2);
            }
        }
        out
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(mut self) -> LaurentPolynomial {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -self.clone()
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $m(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_named(f, &|i| format!("t{}", i + 1))
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent[{}]({})", self.nvars, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(n: usize, i: usize) -> LaurentPolynomial {
        LaurentPolynomial::var(n, i)
    }
    fn k(n: usize, v: i64) -> LaurentPolynomial {
        LaurentPolynomial::constant(n, BigInt::from(v))
    }

    #[test]
    fn lp_mul_examples() {
        let n = 2;
        let one = k(n, 1);
        assert_eq!(&(&t(n, 0) - &one) * &(&t(n, 0) + &one), &(&t(n, 0) * &t(n, 0)) - &one);
        assert!((&t(n, 0) * &LaurentPolynomial::zero(n)).is_zero());
        let prod = &(&t(n, 0) - &one) * &(&t(n, 1) - &one);
        let expanded = &(&(&(&t(n, 0) * &t(n, 1)) - &t(n, 0)) - &t(n, 1)) + &one;
        assert_eq!(prod, expanded);
        assert_eq!(
            t(2, 0).checked_mul(&t(3, 0)),
            Err(RingError::VariableMismatch(2, 3))
        );
    }

    #[test]
    fn degree_spread_examples() {
        let n = 3;
        let p = &(&(&t(n, 0) * &t(n, 1)) * &t(n, 2)) - &k(n, 1);
        assert_eq!(p.degree_spread(), Ok(3));
        let mono = LaurentPolynomial::monomial(2, vec![2, -1], BigInt::from(5));
        assert_eq!(mono.degree_spread(), Ok(0));
        let q = &(&t(2, 0) - &k(2, 1)) * &(&t(2, 1) - &k(2, 1));
        assert_eq!(q.degree_spread(), Ok(2));
        assert_eq!(LaurentPolynomial::zero(2).degree_spread(), Err(RingError::ZeroDegree));
    }

    #[test]
    fn gcd_examples() {
        let n = 2;
        let a = &k(n, 1) - &t(n, 1);
        let b = &t(n, 0) - &k(n, 1);
        assert_eq!(laurent_gcd(&[a, b.clone()]).unwrap(), k(n, 1));
        // Normalization strips monomials and fixes the sign.
        let shifted = (-&b).mul_monomial(&[-3, 2]);
        assert_eq!(laurent_gcd(&[LaurentPolynomial::zero(n), shifted]).unwrap(), b);
        let u = &t(n, 0) - &k(n, 1);
        let v = &t(n, 1) - &k(n, 1);
        let p = &(&u * &u) * &v;
        let q = &(&v * &v) * &u;
        assert_eq!(laurent_gcd(&[p, q]).unwrap(), (&u * &v).normalize_unit());
        assert!(laurent_gcd(&[LaurentPolynomial::zero(n)]).unwrap().is_zero());
        assert_eq!(laurent_gcd(&[]), Err(RingError::EmptyInput));
    }

    #[test]
    fn display_is_graded_lex() {
        let n = 3;
        let p = &(&(&t(n, 0) * &t(n, 1)) * &t(n, 2)) - &k(n, 1);
        assert_eq!(p.to_string(), "t1*t2*t3 - 1");
        let q = (&t(1, 0) - &k(1, 1)).pow(2);
        assert_eq!(q.to_string(), "t1^2 - 2*t1 + 1");
        let m = LaurentPolynomial::monomial(2, vec![2, -1], BigInt::from(-5));
        assert_eq!(m.to_string(), "-5*t1^2*t2^-1");
    }

    #[test]
    fn normalize_unit_canonical() {
        let p = &(&t(2, 0) * &t(2, 1)) - &k(2, 1);
        let q = (-&p).mul_monomial(&[4, -7]);
        assert_eq!(q.normalize_unit(), p);
        assert!(p.associates(&q));
        assert_eq!(p.involution().normalize_unit(), p);
    }
}
