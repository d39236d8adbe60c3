//! Fox free differential calculus and the Alexander matrix.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::groups::{AbelianizationData, Presentation, Word};
use crate::ringkit::{LaurentMatrix, LaurentPolynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FoxError {
    #[error("generator index {index} out of range for {count} generators")]
    IndexOutOfRange { index: usize, count: usize },
}

/// An element of the integral group ring of a free group.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GroupRingElement {
    terms: BTreeMap<Word, BigInt>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_word(Word::identity())
    }

    pub fn from_word(w: Word) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, BigInt::one());
        GroupRingElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigInt)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, w: Word, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    /// Left multiplication by a group element.
    pub fn left_mul_word(&self, w: &Word) -> Self {
        GroupRingElement { terms: self.terms.iter().map(|(u, c)| (w.mul(u), c.clone())).collect() }
    }

    /// Image under a homomorphism to `Z[H]`, given by generator images in `Z^s`.
    pub fn abelianize(&self, ab: &AbelianizationData) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero(ab.rank);
        for (w, c) in &self.terms {
            out = &out + &LaurentPolynomial::monomial(ab.rank, ab.image_of(w), c.clone());
        }
        out
    }
}

impl Add for &GroupRingElement {
    type Output = GroupRingElement;
    fn add(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Neg for &GroupRingElement {
    type Output = GroupRingElement;
    fn neg(self) -> GroupRingElement {
        GroupRingElement { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }
}

impl Sub for &GroupRingElement {
    type Output = GroupRingElement;
    fn sub(self, rhs: &GroupRingElement) -> GroupRingElement {
        self + &(-rhs)
    }
}

impl Mul for &GroupRingElement {
    type Output = GroupRingElement;
    fn mul(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = GroupRingElement::zero();
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                out.add_term(u.mul(v), a * b);
            }
        }
        out
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let neg = c < &BigInt::zero();
            let a = if neg { -c } else { c.clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if a.is_one() {
                write!(f, "{w}")?;
            } else if w.is_identity() {
                write!(f, "{a}")?;
            } else {
                write!(f, "{a}*{w}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `d w / d x_j` in `Z F_n`. A letter `x_j` at position `k` contributes the
/// prefix before it; a letter `x_j^-1` contributes minus the prefix through it.
pub fn fox_derivative(w: &Word, j: usize, num_gens: usize) -> Result<GroupRingElement, FoxError> {
    if j >= num_gens {
        return Err(FoxError::IndexOutOfRange { index: j, count: num_gens });
    }
    let mut out = GroupRingElement::zero();
    let mut prefix = Word::identity();
    for &l in w.letters() {
        let next = prefix.mul(&Word::from_letters([l]));
        if l.gen == j {
            if l.inv {
                out.add_term(next.clone(), -BigInt::one());
            } else {
                out.add_term(prefix.clone(), BigInt::one());
            }
        }
        prefix = next;
    }
    Ok(out)
}

/// The Fox derivative pushed straight to `Z[H]`, without building the free
/// group ring element.
pub fn fox_derivative_abelian(w: &Word, j: usize, ab: &AbelianizationData) -> Result<LaurentPolynomial, FoxError> {
    let n = ab.images.len();
    if j >= n {
        return Err(FoxError::IndexOutOfRange { index: j, count: n });
    }
    let mut out = LaurentPolynomial::zero(ab.rank);
    let mut prefix = vec![0i64; ab.rank];
    for &l in w.letters() {
        if l.inv {
            for (p, g) in prefix.iter_mut().zip(&ab.images[l.gen]) {
                *p -= g;
            }
            if l.gen == j {
                out.add_term(prefix.clone(), -BigInt::one());
            }
        } else {
            if l.gen == j {
                out.add_term(prefix.clone(), BigInt::one());
            }
            for (p, g) in prefix.iter_mut().zip(&ab.images[l.gen]) {
                *p += g;
            }
        }
    }
    Ok(out)
}

/// Checks `sum_j (d w / d x_j)(x_j - 1) = w - 1` in `Z F_n`.
pub fn check_fundamental_identity(w: &Word, num_gens: usize) -> bool {
    let n = num_gens.max(w.max_gen().map_or(0, |g| g + 1));
    let mut lhs = GroupRingElement::zero();
    for j in 0..n {
        let d = fox_derivative(w, j, n).expect("index in range");
        let xj = &GroupRingElement::from_word(Word::gen(j)) - &GroupRingElement::one();
        lhs = &lhs + &(&d * &xj);
    }
    lhs == &GroupRingElement::from_word(w.clone()) - &GroupRingElement::one()
}

/// `Phi_G`: rows are generators, columns are relators, entries in `Z[H]`.
#[derive(Clone, Debug)]
pub struct AlexanderMatrix {
    pub matrix: LaurentMatrix,
    /// Number of variables of `Z[H]`.
    pub nvars: usize,
    /// Image of each generator in `H`, as a monomial.
    pub generator_monomials: Vec<LaurentPolynomial>,
}

impl AlexanderMatrix {
    pub fn rows(&self) -> usize {
        self.matrix.rows()
    }

    pub fn cols(&self) -> usize {
        self.matrix.cols()
    }

    /// Every column `c` satisfies `sum_i c_i (g_i - 1) = 0`.
    pub fn columns_annihilate(&self) -> bool {
        (0..self.cols()).all(|j| {
            let mut acc = LaurentPolynomial::zero(self.nvars);
            for i in 0..self.rows() {
                let g = &self.generator_monomials[i] - &LaurentPolynomial::one(self.nvars);
                acc = &acc + &(self.matrix.get(i, j) * &g);
            }
            acc.is_zero()
        })
    }
}

pub fn alexander_matrix(p: &Presentation, ab: &AbelianizationData) -> AlexanderMatrix {
    let m = p.num_generators();
    let matrix = LaurentMatrix::from_fn(m, p.relators().len(), |i, j| {
        fox_derivative_abelian(&p.relators()[j], i, ab).expect("generator in range")
    });
    let generator_monomials = ab
        .images
        .iter()
        .map(|v| LaurentPolynomial::monomial(ab.rank, v.clone(), BigInt::one()))
        .collect();
    AlexanderMatrix { matrix, nvars: ab.rank, generator_monomials }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{abelianize, parse_presentation};

    fn w(s: &[i64]) -> Word {
        Word::from_signed(s)
    }

    #[test]
    fn axioms() {
        assert_eq!(fox_derivative(&w(&[1]), 0, 2).unwrap(), GroupRingElement::one());
        assert!(fox_derivative(&Word::identity(), 0, 2).unwrap().is_zero());
        assert_eq!(fox_derivative(&w(&[1, 2]), 1, 2).unwrap(), GroupRingElement::from_word(w(&[1])));
        assert!(fox_derivative(&w(&[1]), 2, 2).is_err());
    }

    #[test]
    fn commutator_derivative() {
        let d = fox_derivative(&w(&[1, 2, -1, -2]), 0, 2).unwrap();
        let expect = &GroupRingElement::one() - &GroupRingElement::from_word(w(&[1, 2, -1]));
        assert_eq!(d, expect);
        assert!(check_fundamental_identity(&w(&[1, 2, -1, -2]), 2));
        assert!(check_fundamental_identity(&Word::identity(), 1));
        assert!(check_fundamental_identity(&w(&[1]), 1));
    }

    #[test]
    fn hopf_matrix() {
        let p = parse_presentation("gens: a b\nrel: a b a^-1 b^-1").unwrap();
        let ab = abelianize(&p);
        let a = alexander_matrix(&p, &ab);
        let t1 = LaurentPolynomial::var(2, 0);
        let t2 = LaurentPolynomial::var(2, 1);
        let one = LaurentPolynomial::one(2);
        assert_eq!(a.matrix.get(0, 0), &(&one - &t2));
        assert_eq!(a.matrix.get(1, 0), &(&t1 - &one));
        assert!(a.columns_annihilate());
    }

    #[test]
    fn abelian_route_matches_group_ring_route() {
        let p = parse_presentation("gens: a b c\nrel: a b c a^-1 c^-2 b^3\nrel: b a b a^-1 b^-1 a^-1").unwrap();
        let ab = abelianize(&p);
        for r in p.relators() {
            for j in 0..3 {
                let full = fox_derivative(r, j, 3).unwrap().abelianize(&ab);
                assert_eq!(full, fox_derivative_abelian(r, j, &ab).unwrap());
            }
        }
    }

    #[test]
    fn free_group_matrix_is_empty() {
        let p = parse_presentation("gens: a b").unwrap();
        let a = alexander_matrix(&p, &abelianize(&p));
        assert_eq!((a.rows(), a.cols()), (2, 0));
    }
}
