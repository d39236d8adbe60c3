//! Dense matrices over the kernel's rings, minors, and integer Smith form.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::laurent::LaurentPolynomial;
use super::RingError;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntMatrix = Matrix<BigInt>;
pub type LaurentMatrix = Matrix<LaurentPolynomial>;

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds from row vectors; every row must have `cols` entries.
    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize) -> Self {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            data.extend(row);
        }
        Matrix { rows: r, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> =
                (0..self.cols).map(|j| self.data[i * self.cols + j].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| BigInt::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { BigInt::one() } else { BigInt::zero() })
    }

    pub fn from_i64(rows: Vec<Vec<i64>>, cols: usize) -> Self {
        Matrix::from_rows(
            rows.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect(),
            cols,
        )
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        Matrix::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).map(|k| self.get(i, k) * other.get(k, j)).sum()
        })
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        sign * a.get(n - 1, n - 1)
    }

    fn add_row_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        for j in 0..self.cols {
            let v = self.get(target, j) + factor * self.get(source, j);
            self.set(target, j, v);
        }
    }

    fn add_col_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        for i in 0..self.rows {
            let v = self.get(i, target) + factor * self.get(i, source);
            self.set(i, target, v);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j);
            self.set(i, j, v);
        }
    }
}

/// Smith normal form `U * M * V = D` of an integer matrix.
#[derive(Clone, Debug)]
pub struct IntSmithForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl IntSmithForm {
    /// Nonzero diagonal entries, in order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols))
            .map(|i| self.d.get(i, i).clone())
            .take_while(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// Smith normal form over the integers with unimodular transforms; the
/// diagonal is nonnegative and forms a divisibility chain.
pub fn smith_normal_form_int(m: &IntMatrix) -> IntSmithForm {
    let (rows, cols) = (m.rows, m.cols);
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    let mut k = 0;
    while k < rows.min(cols) {
        // Pivot: smallest nonzero magnitude in the trailing block.
        let pivot = (k..rows)
            .cartesian_product(k..cols)
            .filter(|&(i, j)| !d.get(i, j).is_zero())
            .min_by(|&(a, b), &(c, e)| d.get(a, b).abs().cmp(&d.get(c, e).abs()));
        let Some((pi, pj)) = pivot else { break };
        d.swap_rows(k, pi);
        u.swap_rows(k, pi);
        d.swap_cols(k, pj);
        v.swap_cols(k, pj);

        loop {
            let mut clean = true;
            for i in k + 1..rows {
                if d.get(i, k).is_zero() {
                    continue;
                }
                let q = d.get(i, k).div_floor(d.get(k, k));
                d.add_row_multiple(i, k, &-&q);
                u.add_row_multiple(i, k, &-&q);
                if !d.get(i, k).is_zero() {
                    clean = false;
                }
            }
            for j in k + 1..cols {
                if d.get(k, j).is_zero() {
                    continue;
                }
                let q = d.get(k, j).div_floor(d.get(k, k));
                d.add_col_multiple(j, k, &-&q);
                v.add_col_multiple(j, k, &-&q);
                if !d.get(k, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                // Move the smallest remaining entry of row/column k to the pivot.
                let mut best = (k, k);
                for i in k + 1..rows {
                    let x = d.get(i, k);
                    if !x.is_zero() && x.abs() < d.get(best.0, best.1).abs() {
                        best = (i, k);
                    }
                }
                for j in k + 1..cols {
                    let x = d.get(k, j);
                    if !x.is_zero() && x.abs() < d.get(best.0, best.1).abs() {
                        best = (k, j);
                    }
                }
                if best.0 != k {
                    d.swap_rows(k, best.0);
                    u.swap_rows(k, best.0);
                }
                if best.1 != k {
                    d.swap_cols(k, best.1);
                    v.swap_cols(k, best.1);
                }
                continue;
            }
            // Divisibility of the trailing block by the pivot.
            let bad = (k + 1..rows)
                .cartesian_product(k + 1..cols)
                .find(|&(i, j)| !d.get(i, j).is_multiple_of(d.get(k, k)));
            match bad {
                Some((i, _)) => {
                    d.add_row_multiple(k, i, &BigInt::one());
                    u.add_row_multiple(k, i, &BigInt::one());
                }
                None => break,
            }
        }
        if d.get(k, k).is_negative() {
            d.negate_row(k);
            u.negate_row(k);
        }
        k += 1;
    }
    IntSmithForm { d, u, v }
}

/// All `k x k` minors, row subsets outer and column subsets inner, both in
/// lexicographic order.
pub fn minors(m: &LaurentMatrix, k: usize) -> Result<Vec<LaurentPolynomial>, RingError> {
    Ok(Minors::new(m, k)?.collect())
}

/// Lazy iterator over the `k x k` minors of a Laurent matrix.
pub struct Minors<'a> {
    m: &'a LaurentMatrix,
    row_sets: Vec<Vec<usize>>,
    col_sets: Vec<Vec<usize>>,
    ri: usize,
    ci: usize,
}

impl<'a> Minors<'a> {
    pub fn new(m: &'a LaurentMatrix, k: usize) -> Result<Self, RingError> {
        if k == 0 || k > m.rows.min(m.cols) {
            return Err(RingError::MinorSize { k, rows: m.rows, cols: m.cols });
        }
        Ok(Minors {
            m,
            row_sets: (0..m.rows).combinations(k).collect(),
            col_sets: (0..m.cols).combinations(k).collect(),
            ri: 0,
            ci: 0,
        })
    }

    pub fn count(&self) -> usize {
        self.row_sets.len() * self.col_sets.len()
    }
}

impl Iterator for Minors<'_> {
    type Item = LaurentPolynomial;

    fn next(&mut self) -> Option<LaurentPolynomial> {
        if self.ri >= self.row_sets.len() {
            return None;
        }
        let det = subdeterminant(self.m, &self.row_sets[self.ri], &self.col_sets[self.ci]);
        self.ci += 1;
        if self.ci == self.col_sets.len() {
            self.ci = 0;
            self.ri += 1;
        }
        Some(det)
    }
}

/// Division-free determinant of the submatrix on `rows x cols` by Laplace
/// expansion along rows, memoized on the set of columns already used.
pub fn subdeterminant(m: &LaurentMatrix, rows: &[usize], cols: &[usize]) -> LaurentPolynomial {
    let k = rows.len();
    assert_eq!(k, cols.len());
    assert!(k > 0, "empty minor");
    let n = m.get(rows[0], cols[0]).nvars();
    assert!(k <= 63, "minor too large");
    // memo[mask] = det of rows[k - popcount(mask)..] x (cols outside mask)
    let mut memo: HashMap<u64, LaurentPolynomial> = HashMap::new();
    fn rec(
        m: &LaurentMatrix,
        rows: &[usize],
        cols: &[usize],
        used: u64,
        depth: usize,
        n: usize,
        memo: &mut HashMap<u64, LaurentPolynomial>,
    ) -> LaurentPolynomial {
        if depth == rows.len() {
            return LaurentPolynomial::one(n);
        }
        if let Some(v) = memo.get(&used) {
            return v.clone();
        }
        let mut acc = LaurentPolynomial::zero(n);
        let mut sign_pos = true;
        for (ci, &c) in cols.iter().enumerate() {
            if used & (1 << ci) != 0 {
                continue;
            }
            let e = m.get(rows[depth], c);
            if !e.is_zero() {
                let sub = rec(m, rows, cols, used | (1 << ci), depth + 1, n, memo);
                if !sub.is_zero() {
                    let term = e * &sub;
                    acc = if sign_pos { &acc + &term } else { &acc - &term };
                }
            }
            sign_pos = !sign_pos;
        }
        memo.insert(used, acc.clone());
        acc
    }
    rec(m, rows, cols, 0, 0, n, &mut memo)
}

impl LaurentMatrix {
    /// Determinant of a nonempty square matrix.
    pub fn determinant(&self) -> LaurentPolynomial {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let idx: Vec<usize> = (0..self.rows).collect();
        subdeterminant(self, &idx, &idx)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(n: usize, i: usize) -> LaurentPolynomial {
        LaurentPolynomial::var(n, i)
    }
    fn one(n: usize) -> LaurentPolynomial {
        LaurentPolynomial::one(n)
    }

    fn check_snf(m: &IntMatrix) -> IntSmithForm {
        let s = smith_normal_form_int(m);
        assert_eq!(s.u.mul(m).mul(&s.v), s.d);
        assert_eq!(s.u.determinant().abs(), BigInt::one());
        assert_eq!(s.v.determinant().abs(), BigInt::one());
        s
    }

    #[test]
    fn snf_examples() {
        let s = check_snf(&IntMatrix::from_i64(vec![vec![2, 0], vec![0, 3]], 2));
        assert_eq!(s.d, IntMatrix::from_i64(vec![vec![1, 0], vec![0, 6]], 2));
        let z = IntMatrix::zeros(2, 3);
        assert_eq!(check_snf(&z).d, z);
        let id = IntMatrix::identity(3);
        assert_eq!(check_snf(&id).d, id);
    }

    #[test]
    fn snf_rectangular_and_empty() {
        let m = IntMatrix::from_i64(vec![vec![1, -1], vec![2, 4], vec![0, 6]], 2);
        let s = check_snf(&m);
        assert_eq!(s.invariant_factors(), vec![BigInt::from(1), BigInt::from(6)]);
        let e = IntMatrix::zeros(0, 3);
        assert_eq!(check_snf(&e).rank(), 0);
    }

    #[test]
    fn bareiss_determinant() {
        let m = IntMatrix::from_i64(vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]], 3);
        assert_eq!(m.determinant(), BigInt::from(4));
        let s = IntMatrix::from_i64(vec![vec![0, 1], vec![1, 0]], 2);
        assert_eq!(s.determinant(), BigInt::from(-1));
    }

    #[test]
    fn minors_of_column() {
        let n = 2;
        let col = Matrix::from_rows(vec![vec![&one(n) - &t(n, 1)], vec![&t(n, 0) - &one(n)]], 1);
        assert_eq!(minors(&col, 1).unwrap(), vec![&one(n) - &t(n, 1), &t(n, 0) - &one(n)]);
        assert!(minors(&col, 2).is_err());
    }

    #[test]
    fn minors_of_diagonal() {
        let n = 2;
        let (a, b) = (&t(n, 0) - &one(n), &t(n, 1) + &one(n));
        let z = LaurentPolynomial::zero(n);
        let d = Matrix::from_rows(vec![vec![a.clone(), z.clone()], vec![z, b.clone()]], 2);
        assert_eq!(minors(&d, 2).unwrap(), vec![&a * &b]);
    }

    #[test]
    fn near_pencil_minors_by_hand() {
        let n = 3;
        let z = LaurentPolynomial::zero(n);
        let c = &one(n) - &t(n, 2);
        let m = Matrix::from_rows(
            vec![
                vec![c.clone(), z.clone()],
                vec![z, c.clone()],
                vec![&t(n, 0) - &one(n), &t(n, 1) - &one(n)],
            ],
            2,
        );
        let got = minors(&m, 2).unwrap();
        // rows {0,1}, {0,2}, {1,2} with the only column pair {0,1}
        assert_eq!(got[0], &c * &c);
        assert_eq!(got[1], &c * &(&t(n, 1) - &one(n)));
        assert_eq!(got[2], -(&c * &(&t(n, 0) - &one(n))));
    }
}
