//! Laurent polynomials in one variable `t` over the rational-function field,
//! and Smith-form diagonalization over that principal ideal domain.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::fracfree;
use super::laurent::LaurentPolynomial;
use super::matrix::Matrix;
use super::poly::Poly;
use super::ratfunc::RationalFunction;

/// `sum_k coeffs[k] * t^(offset + k)`. Nonzero polynomials have nonzero
/// first and last coefficients; zero has no coefficients and offset 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    nvars: usize,
    offset: i64,
    coeffs: Vec<RationalFunction>,
}

pub type UniPolyMatrix = Matrix<UniPoly>;

impl UniPoly {
    pub fn zero(nvars: usize) -> Self {
        UniPoly { nvars, offset: 0, coeffs: Vec::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(RationalFunction::one(nvars))
    }

    pub fn constant(c: RationalFunction) -> Self {
        Self::from_coeffs(c.nvars(), 0, vec![c])
    }

    /// `t^k`.
    pub fn t_pow(nvars: usize, k: i64) -> Self {
        Self::from_coeffs(nvars, k, vec![RationalFunction::one(nvars)])
    }

    pub fn from_coeffs(nvars: usize, offset: i64, coeffs: Vec<RationalFunction>) -> Self {
        let mut p = UniPoly { nvars, offset, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.offset += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.offset = 0;
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent of `t` present.
    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn coeffs(&self) -> &[RationalFunction] {
        &self.coeffs
    }

    /// Coefficient of `t^k`.
    pub fn coeff(&self, k: i64) -> RationalFunction {
        let idx = k - self.offset;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            RationalFunction::zero(self.nvars)
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Degree in the Laurent sense: highest minus lowest exponent of `t`.
    /// `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        (!self.is_zero()).then(|| self.coeffs.len() - 1)
    }

    /// A unit of `K[t^±1]`: a single nonzero term.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        Self::from_coeffs(self.nvars, self.offset, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Associate with offset 0 and leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lc) => {
                let inv = lc.inv();
                UniPoly { nvars: self.nvars, offset: 0, coeffs: self.coeffs.iter().map(|c| c * &inv).collect() }
            }
        }
    }

    /// Euclidean division in `K[t^±1]`, with `self = q * d + r` and
    /// `deg r < deg d`. Both operands are first shifted to offset 0 (a unit
    /// change), and the quotient absorbs the shift.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "division by zero");
        let n = self.nvars;
        if self.is_zero() {
            return (UniPoly::zero(n), UniPoly::zero(n));
        }
        let mut rem: Vec<RationalFunction> = self.coeffs.clone();
        let dd = d.coeffs.len() - 1;
        let lc_inv = d.coeffs[dd].inv();
        let mut quot = vec![RationalFunction::zero(n); rem.len().saturating_sub(dd).max(1)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let q = &rem[top] * &lc_inv;
            let shift = top - dd;
            for (i, c) in d.coeffs.iter().enumerate() {
                rem[i + shift] = &rem[i + shift] - &(&q * c);
            }
            quot[shift] = q;
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        // self = t^a * A, d = t^b * D, A = Q D + R  =>  self = (t^(a-b) Q) d + t^a R
        let q = UniPoly::from_coeffs(n, self.offset - d.offset, quot);
        let r = UniPoly::from_coeffs(n, self.offset, rem);
        (q, r)
    }

    pub fn divides(&self, other: &UniPoly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).1.is_zero()
    }

    /// Monic gcd in `K[t^±1]`; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.monic(), other.monic());
        while !b.is_zero() {
            let r = a.div_rem(&b).1.monic();
            a = b;
            b = r;
        }
        a
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.offset.min(rhs.offset);
        let hi = (self.offset + self.coeffs.len() as i64).max(rhs.offset + rhs.coeffs.len() as i64);
        let coeffs = (lo..hi).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect();
        UniPoly::from_coeffs(self.nvars, lo, coeffs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly { nvars: self.nvars, offset: self.offset, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(self.nvars);
        }
        let mut out = vec![RationalFunction::zero(self.nvars); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UniPoly::from_coeffs(self.nvars, self.offset + rhs.offset, out)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let e = self.offset + k as i64;
                match e {
                    0 => format!("({c})"),
                    1 => format!("({c})*t"),
                    _ => format!("({c})*t^{e}"),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

/// Substitutes `t_i -> u_i * t^psi_i` with `u_d = 1` for the distinguished
/// variable `d`. The remaining variables become `u`'s in their original order,
/// so the coefficient field has `nvars - 1` variables. `distinguished = None`
/// is only meaningful for polynomials in zero variables.
pub fn grade_substitute(p: &LaurentPolynomial, psi: &[i64], distinguished: Option<usize>) -> UniPoly {
    let n = p.nvars();
    assert_eq!(psi.len(), n, "one linking value per variable");
    let nu = n.saturating_sub(1);
    if let Some(d) = distinguished {
        assert!(d < n, "distinguished variable out of range");
    } else {
        assert_eq!(n, 0, "a distinguished variable is required");
    }
    let u_index = |i: usize| -> Option<usize> {
        let d = distinguished?;
        match i.cmp(&d) {
            std::cmp::Ordering::Less => Some(i),
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => Some(i - 1),
        }
    };
    // t-power -> Laurent polynomial in the u's
    let mut buckets: std::collections::BTreeMap<i64, LaurentPolynomial> = Default::default();
    for (e, c) in p.terms() {
        let tpow: i64 = e.iter().zip(psi).map(|(a, b)| a * b).sum();
        let mut ue = vec![0i64; nu];
        for (i, &x) in e.iter().enumerate() {
            if let Some(k) = u_index(i) {
                ue[k] = x;
            }
        }
        buckets.entry(tpow).or_insert_with(|| LaurentPolynomial::zero(nu)).add_term(ue, c.clone());
    }
    let Some((&lo, _)) = buckets.iter().next() else {
        return UniPoly::zero(nu);
    };
    let hi = *buckets.keys().next_back().unwrap();
    let coeffs = (lo..=hi)
        .map(|k| match buckets.get(&k) {
            None => RationalFunction::zero(nu),
            Some(lp) => laurent_to_ratfunc(lp),
        })
        .collect();
    UniPoly::from_coeffs(nu, lo, coeffs)
}

fn laurent_to_ratfunc(lp: &LaurentPolynomial) -> RationalFunction {
    let n = lp.nvars();
    if lp.is_zero() {
        return RationalFunction::zero(n);
    }
    let (p, shift) = lp.to_poly();
    let num_shift: Vec<u32> = shift.iter().map(|&s| s.max(0) as u32).collect();
    let den_shift: Vec<u32> = shift.iter().map(|&s| (-s).max(0) as u32).collect();
    RationalFunction::new(
        p.mul_monomial(&num_shift),
        Poly::monomial(n, den_shift, num_bigint::BigInt::from(1)),
    )
}

/// Invariant factors and free rank of the module presented by a matrix over
/// `K[t^±1]` (rows are generators, columns relations).
#[derive(Clone, Debug)]
pub struct PidDiagonalization {
    /// Nonzero diagonal entries of the Smith form, monic with offset 0,
    /// forming a divisibility chain (units appear as `1`).
    pub invariant_factors: Vec<UniPoly>,
    pub free_rank: usize,
}

impl PidDiagonalization {
    /// Factors that are not units.
    pub fn torsion_factors(&self) -> Vec<&UniPoly> {
        self.invariant_factors.iter().filter(|f| !f.is_unit()).collect()
    }

    /// Sum of the t-degrees of the invariant factors.
    pub fn torsion_degree(&self) -> usize {
        self.invariant_factors.iter().filter_map(|f| f.degree()).sum()
    }
}

/// Smith-form diagonalization over `K[t^±1]`.
///
/// Elimination runs fraction-free over `Z[u][t^±1]`; the diagonal it leaves
/// is then turned into a divisibility chain with pairwise gcd/lcm, which
/// preserves both the module and the sum of degrees.
pub fn diagonalize_over_pid(m: &UniPolyMatrix) -> PidDiagonalization {
    let n = m.entries().next().map_or(0, |e| e.nvars());
    let diag = fracfree::diagonal_entries(fracfree::to_tpoly_matrix(m, n), n);
    let mut factors: Vec<UniPoly> = diag.iter().map(|d| d.to_unipoly().monic()).collect();
    for i in 0..factors.len() {
        for j in i + 1..factors.len() {
            if factors[i].divides(&factors[j]) {
                continue;
            }
            let g = factors[i].gcd(&factors[j]);
            let l = (&factors[i] * &factors[j]).div_rem(&g).0.monic();
            factors[i] = g;
            factors[j] = l;
        }
    }
    PidDiagonalization { free_rank: m.rows() - factors.len(), invariant_factors: factors }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rf(c: i64) -> RationalFunction {
        RationalFunction::from_int(1, c)
    }
    fn u2() -> RationalFunction {
        RationalFunction::from_poly(Poly::var(1, 0))
    }

    #[test]
    fn substitute_examples() {
        let t = |i| LaurentPolynomial::var(2, i);
        let one = LaurentPolynomial::one(2);
        let p = &(&t(0) * &t(1)) - &one;
        let got = grade_substitute(&p, &[1, 1], Some(0));
        let want = UniPoly::from_coeffs(1, 0, vec![rf(-1), rf(0), u2()]);
        assert_eq!(got, want);

        let c = LaurentPolynomial::constant(0, BigInt::from(7));
        assert_eq!(grade_substitute(&c, &[], None), UniPoly::constant(RationalFunction::from_int(0, 7)));

        let q = &t(0) - &one;
        assert_eq!(grade_substitute(&q, &[1, 1], Some(0)), UniPoly::from_coeffs(1, 0, vec![rf(-1), rf(1)]));
    }

    #[test]
    fn negative_u_exponents_go_to_denominator() {
        let p = LaurentPolynomial::monomial(2, vec![0, -2], BigInt::from(3));
        let got = grade_substitute(&p, &[1, 1], Some(0));
        assert_eq!(got.offset(), -2);
        assert_eq!(got.coeffs()[0].denom(), &Poly::var(1, 0).pow(2));
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = UniPoly::from_coeffs(1, -1, vec![rf(2), u2(), rf(0), rf(1)]);
        let d = UniPoly::from_coeffs(1, 3, vec![u2(), rf(1)]);
        let (q, r) = a.div_rem(&d);
        assert_eq!(&(&q * &d) + &r, a);
        assert!(r.degree().unwrap_or(0) < d.degree().unwrap());
    }

    fn lin(c0: RationalFunction, c1: RationalFunction) -> UniPoly {
        UniPoly::from_coeffs(1, 0, vec![c0, c1])
    }

    #[test]
    fn diagonalize_examples() {
        let one = UniPoly::one(1);
        let zero = UniPoly::zero(1);
        let tm1 = lin(rf(-1), rf(1));
        let d = Matrix::from_rows(vec![vec![tm1.clone(), zero.clone()], vec![zero, one]], 2);
        let r = diagonalize_over_pid(&d);
        assert_eq!(r.free_rank, 0);
        assert_eq!(r.torsion_factors(), vec![&tm1]);
        assert_eq!(r.invariant_factors.len(), 2);

        let col = Matrix::from_rows(vec![vec![lin(rf(1), -&u2())], vec![tm1]], 1);
        let r = diagonalize_over_pid(&col);
        assert_eq!(r.free_rank, 1);
        assert_eq!(r.invariant_factors, vec![UniPoly::one(1)]);

        let empty: UniPolyMatrix = Matrix::from_rows(vec![vec![], vec![]], 0);
        let r = diagonalize_over_pid(&empty);
        assert_eq!(r.free_rank, 2);
        assert!(r.invariant_factors.is_empty());
    }

    #[test]
    fn divisibility_chain_is_enforced() {
        // diag(t - 1, t + 1) has Smith form diag(1, t^2 - 1).
        let zero = UniPoly::zero(1);
        let a = lin(rf(-1), rf(1));
        let b = lin(rf(1), rf(1));
        let m = Matrix::from_rows(vec![vec![a.clone(), zero.clone()], vec![zero, b.clone()]], 2);
        let r = diagonalize_over_pid(&m);
        assert_eq!(r.invariant_factors[0], UniPoly::one(1));
        assert_eq!(r.invariant_factors[1], (&a * &b).monic());
        assert_eq!(r.torsion_degree(), 2);
    }
}
