//! Fraction-free diagonalization over `Z[u][t^±1]`.
//!
//! Every nonzero polynomial in the `u`'s is a unit of `K[t^±1]`, so rows and
//! columns may be scaled by such polynomials without changing the module a
//! matrix presents. That keeps all arithmetic in `Z[u]` and avoids the gcd
//! work that rational-function coefficients would need at every step.

use super::matrix::Matrix;
use super::poly::Poly;
use super::ratfunc::RationalFunction;
use super::unipoly::UniPoly;

/// `sum_k c[k] * t^(off + k)` with polynomial coefficients; trimmed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub(super) struct TPoly {
    nvars: usize,
    off: i64,
    c: Vec<Poly>,
}

impl TPoly {
    fn new(nvars: usize, off: i64, c: Vec<Poly>) -> Self {
        let mut p = TPoly { nvars, off, c };
        while p.c.last().is_some_and(|x| x.is_zero()) {
            p.c.pop();
        }
        let lead = p.c.iter().take_while(|x| x.is_zero()).count();
        if lead > 0 {
            p.c.drain(..lead);
            p.off += lead as i64;
        }
        if p.c.is_empty() {
            p.off = 0;
        }
        p
    }

    fn zero(nvars: usize) -> Self {
        TPoly { nvars, off: 0, c: Vec::new() }
    }

    pub(super) fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub(super) fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    fn size(&self) -> usize {
        self.c.iter().map(|x| x.num_terms()).sum()
    }

    fn scale(&self, k: &Poly) -> Self {
        if k.is_one() {
            return self.clone();
        }
        TPoly::new(self.nvars, self.off, self.c.iter().map(|x| x * k).collect())
    }

    fn mul(&self, o: &TPoly) -> Self {
        if self.is_zero() || o.is_zero() {
            return TPoly::zero(self.nvars);
        }
        let mut out = vec![Poly::zero(self.nvars); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        TPoly::new(self.nvars, self.off + o.off, out)
    }

    fn sub(&self, o: &TPoly) -> Self {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return TPoly::new(o.nvars, o.off, o.c.iter().map(|x| -x).collect());
        }
        let lo = self.off.min(o.off);
        let hi = (self.off + self.c.len() as i64).max(o.off + o.c.len() as i64);
        fn get(p: &TPoly, k: i64) -> Option<&Poly> {
            let i = k - p.off;
            (i >= 0 && (i as usize) < p.c.len()).then(|| &p.c[i as usize])
        }
        let c = (lo..hi)
            .map(|k| match (get(self, k), get(o, k)) {
                (Some(a), Some(b)) => a - b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => -b,
                (None, None) => Poly::zero(self.nvars),
            })
            .collect();
        TPoly::new(self.nvars, lo, c)
    }

    fn div_exact(&self, g: &Poly) -> Self {
        TPoly { nvars: self.nvars, off: self.off, c: self.c.iter().map(|x| x.div_exact(g).expect("content divides")).collect() }
    }

    pub(super) fn to_unipoly(&self) -> UniPoly {
        UniPoly::from_coeffs(self.nvars, self.off, self.c.iter().map(|x| RationalFunction::from_poly(x.clone())).collect())
    }
}

/// Sparse pseudo-division: returns `(k, q, r)` with `k * a = q * p + r`,
/// `k` a nonzero polynomial in the `u`'s and `deg r < deg p`.
fn pseudo_divide(a: &TPoly, p: &TPoly) -> (Poly, TPoly, TPoly) {
    let n = a.nvars;
    let dp = p.degree();
    let lc = &p.c[dp];
    let mut rem = a.c.clone();
    let mut quot = vec![Poly::zero(n); rem.len().saturating_sub(dp).max(1)];
    let mut mult = Poly::one(n);
    while rem.len() > dp {
        let top = rem.len() - 1;
        let shift = top - dp;
        let c = rem[top].clone();
        match c.div_exact(lc) {
            Some(h) => {
                for (i, pc) in p.c.iter().enumerate() {
                    rem[i + shift] = &rem[i + shift] - &(pc * &h);
                }
                quot[shift] = &quot[shift] + &h;
            }
            None => {
                for x in rem.iter_mut() {
                    *x = &*x * lc;
                }
                for (i, pc) in p.c.iter().enumerate() {
                    rem[i + shift] = &rem[i + shift] - &(pc * &c);
                }
                for x in quot.iter_mut() {
                    *x = &*x * lc;
                }
                quot[shift] = &quot[shift] + &c;
                mult = &mult * lc;
            }
        }
        debug_assert!(rem[top].is_zero());
        while rem.last().is_some_and(|x| x.is_zero()) {
            rem.pop();
        }
    }
    let q = TPoly::new(n, a.off - p.off, quot);
    let r = TPoly::new(n, a.off, rem);
    (mult, q, r)
}

/// Gcd of every coefficient in the given entries, smallest first.
fn content<'a>(nvars: usize, entries: impl Iterator<Item = &'a TPoly>) -> Poly {
    let mut coeffs: Vec<&Poly> = entries.flat_map(|e| e.c.iter()).filter(|x| !x.is_zero()).collect();
    coeffs.sort_by_key(|x| x.num_terms());
    Poly::gcd_all(nvars, coeffs)
}

fn lcm(a: &Poly, b: &Poly) -> Poly {
    let g = a.gcd(b);
    a * &b.div_exact(&g).expect("gcd divides")
}

/// Clears denominators row by row.
pub(super) fn to_tpoly_matrix(m: &Matrix<UniPoly>, nvars: usize) -> Matrix<TPoly> {
    let mut rows = Vec::with_capacity(m.rows());
    for i in 0..m.rows() {
        let mut l = Poly::one(nvars);
        for e in m.row(i) {
            for c in e.coeffs() {
                if !c.denom().divides(&l) {
                    l = lcm(&l, c.denom());
                }
            }
        }
        let row: Vec<TPoly> = m
            .row(i)
            .iter()
            .map(|e| {
                let c = e
                    .coeffs()
                    .iter()
                    .map(|x| x.numer() * &l.div_exact(x.denom()).expect("lcm is a multiple"))
                    .collect();
                TPoly::new(nvars, e.offset(), c)
            })
            .collect();
        rows.push(row);
    }
    Matrix::from_rows(rows, m.cols())
}

fn key(x: &TPoly) -> (usize, usize, u32, usize) {
    let lc = x.c.last().expect("nonzero");
    (x.degree(), lc.num_terms(), lc.total_degree(), x.size())
}

fn remove_row_content(a: &mut Matrix<TPoly>, i: usize, from: usize, nvars: usize) {
    let g = content(nvars, (from..a.cols()).map(|j| a.get(i, j)));
    if !g.is_zero() && !g.is_one() {
        for j in from..a.cols() {
            let v = a.get(i, j).div_exact(&g);
            a.set(i, j, v);
        }
    }
}

/// Whether the block from `(k, k)` on has rank at most one over `K(t)`,
/// checked exactly on 2x2 minors; `false` when there are too many to check.
fn rank_at_most_one(a: &Matrix<TPoly>, k: usize) -> bool {
    let (rows, cols) = (a.rows() - k, a.cols() - k);
    if rows <= 1 || cols <= 1 {
        return true;
    }
    if rows * (rows - 1) * cols * (cols - 1) / 4 > 5000 {
        return false;
    }
    for i1 in k..a.rows() {
        for i2 in i1 + 1..a.rows() {
            for j1 in k..a.cols() {
                for j2 in j1 + 1..a.cols() {
                    let m = a.get(i1, j1).mul(a.get(i2, j2)).sub(&a.get(i1, j2).mul(a.get(i2, j1)));
                    if !m.is_zero() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Gcd over `K[t]` of every entry in the block from `(k, k)` on, computed in
/// `Z[u, t]` with `t` as the last variable.
fn block_gcd(a: &Matrix<TPoly>, k: usize, nvars: usize) -> TPoly {
    let lift = |x: &TPoly| -> Poly {
        Poly::from_terms(
            nvars + 1,
            x.c.iter().enumerate().flat_map(|(d, c)| {
                c.terms().map(move |(e, v)| {
                    let mut e2 = e.clone();
                    e2.push(d as u32);
                    (e2, v.clone())
                })
            }),
        )
    };
    let lifted: Vec<Poly> =
        (k..a.rows()).flat_map(|i| (k..a.cols()).map(move |j| (i, j))).map(|(i, j)| lift(a.get(i, j))).collect();
    let g = Poly::gcd_all(nvars + 1, lifted.iter().filter(|p| !p.is_zero()));
    let coeffs = g
        .coeffs_in(nvars)
        .into_iter()
        .map(|c| Poly::from_terms(nvars, c.terms().map(|(e, v)| (e[..nvars].to_vec(), v.clone()))))
        .collect();
    TPoly::new(nvars, 0, coeffs)
}

/// Reduces to diagonal form with unimodular operations over `K[t^±1]` and
/// returns the nonzero diagonal entries.
///
/// Column `k` is cleared with row operations first. After that a column
/// operation against the pivot only changes row `k` (the rest of the column
/// is scaled by a unit), so the row is reduced entry by entry.
pub(super) fn diagonal_entries(mut a: Matrix<TPoly>, nvars: usize) -> Vec<TPoly> {
    let (rows, cols) = (a.rows(), a.cols());
    let mut diag = Vec::new();
    for k in 0..rows.min(cols) {
        let pivot = (k..rows)
            .flat_map(|i| (k..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !a.get(i, j).is_zero())
            .min_by_key(|&(i, j)| key(a.get(i, j)));
        let Some((pi, pj)) = pivot else { break };
        if a.get(pi, pj).degree() > 0 && rank_at_most_one(&a, k) {
            // Euclid here would go through subresultant-sized coefficients.
            diag.push(block_gcd(&a, k, nvars));
            break;
        }
        a.swap_rows(k, pi);
        a.swap_cols(k, pj);
        loop {
            for i in k + 1..rows {
                if a.get(i, k).is_zero() {
                    continue;
                }
                let (mult, q, _) = pseudo_divide(a.get(i, k), a.get(k, k));
                for j in k..cols {
                    let v = a.get(i, j).scale(&mult).sub(&q.mul(a.get(k, j)));
                    a.set(i, j, v);
                }
                remove_row_content(&mut a, i, k, nvars);
            }
            let below = (k + 1..rows).filter(|&i| !a.get(i, k).is_zero()).min_by_key(|&i| key(a.get(i, k)));
            if let Some(i) = below {
                a.swap_rows(k, i);
                continue;
            }

            let mut rems = Vec::new();
            let mut scale = Poly::one(nvars);
            for j in k + 1..cols {
                if a.get(k, j).is_zero() {
                    continue;
                }
                let (mult, _, r) = pseudo_divide(a.get(k, j), a.get(k, k));
                if !mult.divides(&scale) {
                    scale = lcm(&scale, &mult);
                }
                rems.push((j, mult, r));
            }
            if rems.iter().all(|(_, _, r)| r.is_zero()) {
                for (j, _, _) in rems {
                    a.set(k, j, TPoly::zero(nvars));
                }
                break;
            }
            // Row k times `scale`, then each entry replaced by its remainder.
            let p = a.get(k, k).scale(&scale);
            a.set(k, k, p);
            for (j, mult, r) in rems {
                let v = r.scale(&scale.div_exact(&mult).expect("lcm is a multiple"));
                a.set(k, j, v);
            }
            remove_row_content(&mut a, k, k, nvars);
            let j = (k + 1..cols)
                .filter(|&j| !a.get(k, j).is_zero())
                .min_by_key(|&j| key(a.get(k, j)))
                .expect("a remainder survived");
            a.swap_cols(k, j);
        }
        diag.push(a.get(k, k).clone());
    }
    diag
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn tp(c: &[i64]) -> TPoly {
        TPoly::new(1, 0, c.iter().map(|&x| Poly::constant(1, BigInt::from(x))).collect())
    }

    #[test]
    fn pseudo_division_identity() {
        let u = Poly::var(1, 0);
        let a = tp(&[1, 2, 3, 4]);
        let p = TPoly::new(1, 0, vec![Poly::one(1), u.clone()]);
        let (k, q, r) = pseudo_divide(&a, &p);
        assert_eq!(a.scale(&k), q.mul(&p).sub(&r.scale(&Poly::constant(1, BigInt::from(-1)))));
        assert_eq!(r.degree(), 0);
    }
}
