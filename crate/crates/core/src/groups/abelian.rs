use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::presentation::Presentation;
use super::word::Word;
use crate::ringkit::{smith_normal_form_int, IntMatrix};

/// The projection of a presented group onto its maximal torsion-free
/// abelian quotient `H = Z^s`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AbelianizationData {
    /// `s`, the rank of `H`.
    pub rank: usize,
    /// `images[g]` is the image of generator `g` in `Z^s`.
    pub images: Vec<Vec<i64>>,
    pub torsion_detected: bool,
    /// Invariant factors greater than one.
    pub torsion: Vec<BigInt>,
    /// Linking number of each generator.
    pub psi: Vec<i64>,
}

impl AbelianizationData {
    /// The quotient map as an `s x m` integer matrix.
    pub fn quotient_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.rank, self.images.len(), |i, g| BigInt::from(self.images[g][i]))
    }

    /// The image of a word in `Z^s`.
    pub fn image_of(&self, w: &Word) -> Vec<i64> {
        let mut v = vec![0i64; self.rank];
        for l in w.letters() {
            for (vi, gi) in v.iter_mut().zip(&self.images[l.gen]) {
                *vi += l.sign() * gi;
            }
        }
        v
    }

    /// Index of the `H` coordinate that generator `g` maps to, when its image
    /// is a standard basis vector.
    pub fn basis_index(&self, g: usize) -> Option<usize> {
        let img = &self.images[g];
        let nz: Vec<usize> = (0..img.len()).filter(|&i| img[i] != 0).collect();
        (nz.len() == 1 && img[nz[0]] == 1).then(|| nz[0])
    }

    pub fn linking_number(&self, w: &Word) -> i64 {
        w.letters().iter().map(|l| l.sign() * self.psi[l.gen]).sum()
    }
}

pub fn linking_vector(ab: &AbelianizationData) -> Vec<i64> {
    ab.psi.clone()
}

/// Relator exponent matrix, one row per relator.
pub fn exponent_matrix(p: &Presentation) -> IntMatrix {
    IntMatrix::from_fn(p.relators().len(), p.num_generators(), |r, g| BigInt::from(p.relators()[r].exponent_sum(g)))
}

/// Computes `H = G / (torsion of G_ab)`.
///
/// When a rational row reduction of the exponent matrix with meridians as
/// free columns has integral entries, the free meridians become the standard
/// basis of `H` and every other generator is written in them. Otherwise the
/// basis comes from the Smith form.
pub fn abelianize(p: &Presentation) -> AbelianizationData {
    let m = p.num_generators();
    let e = exponent_matrix(p);
    let snf = smith_normal_form_int(&e);
    let r = snf.rank();
    let s = m - r;
    let torsion: Vec<BigInt> = snf.invariant_factors().into_iter().filter(|d| d > &BigInt::one()).collect();

    let images = rref_images(p, &e, s).unwrap_or_else(|| {
        let mut imgs: Vec<Vec<i64>> = (0..m)
            .map(|g| (r..m).map(|j| to_i64(snf.v.get(g, j))).collect())
            .collect();
        if s == 1 {
            if let Some(g) = p.first_meridian() {
                if imgs[g][0] < 0 {
                    imgs.iter_mut().for_each(|v| v[0] = -v[0]);
                }
            }
        }
        imgs
    });
    let psi = images.iter().map(|v| v.iter().sum()).collect();
    let ab = AbelianizationData { rank: s, images, torsion_detected: !torsion.is_empty(), torsion, psi };
    debug_assert!(p.relators().iter().all(|rel| ab.image_of(rel).iter().all(|&x| x == 0)));
    ab
}

fn to_i64(x: &BigInt) -> i64 {
    x.to_i64().expect("abelianization coefficient exceeds 64 bits")
}

fn rref_images(p: &Presentation, e: &IntMatrix, s: usize) -> Option<Vec<Vec<i64>>> {
    let m = p.num_generators();
    // Non-meridians first so they get eliminated in favor of meridians.
    let mut order: Vec<usize> = (0..m).filter(|&g| !p.is_meridian(g)).collect();
    order.extend((0..m).filter(|&g| p.is_meridian(g)));

    let mut a: Vec<Vec<BigRational>> = (0..e.rows())
        .map(|i| order.iter().map(|&g| BigRational::from_integer(e.get(i, g).clone())).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m {
        let Some(pr) = (row..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(row, pr);
        let inv = a[row][col].recip();
        for x in a[row].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = a[row].clone();
        for (i, r) in a.iter_mut().enumerate() {
            if i != row && !r[col].is_zero() {
                let f = r[col].clone();
                for (x, p) in r.iter_mut().zip(&pivot_row).take(m) {
                    *x = &*x - &(&f * p);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let free: Vec<usize> = (0..m).filter(|c| !pivots.contains(c)).collect();
    debug_assert_eq!(free.len(), s);

    let mut images = vec![vec![0i64; s]; m];
    for (k, &c) in free.iter().enumerate() {
        images[order[c]][k] = 1;
    }
    for (pr, &pc) in pivots.iter().enumerate() {
        for (k, &c) in free.iter().enumerate() {
            let x = -&a[pr][c];
            if !x.is_integer() {
                return None;
            }
            images[order[pc]][k] = x.to_integer().to_i64()?;
        }
    }
    // Keep the free generators in their original relative order.
    let mut perm: Vec<usize> = (0..s).collect();
    perm.sort_by_key(|&k| order[free[k]]);
    Some(images.into_iter().map(|v| perm.iter().map(|&k| v[k]).collect()).collect())
}

#[cfg(test)]
mod tests {
    use super::super::presentation::parse_presentation;
    use super::*;

    #[test]
    fn commutator_is_free_abelian() {
        let ab = abelianize(&parse_presentation("gens: a b\nrel: a b a^-1 b^-1").unwrap());
        assert_eq!(ab.rank, 2);
        assert_eq!(ab.images, vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(ab.psi, vec![1, 1]);
        assert!(!ab.torsion_detected);
    }

    #[test]
    fn free_group() {
        let ab = abelianize(&parse_presentation("gens: a b c").unwrap());
        assert_eq!(ab.rank, 3);
        assert_eq!(ab.psi, vec![1, 1, 1]);
    }

    #[test]
    fn trefoil_type() {
        let ab = abelianize(&parse_presentation("gens: a b\nrel: a b a b^-1 a^-1 b^-1").unwrap());
        assert_eq!(ab.rank, 1);
        assert_eq!(ab.images, vec![vec![1], vec![1]]);
        assert_eq!(ab.psi, vec![1, 1]);
        assert_eq!(ab.linking_number(&Word::from_signed(&[2, 1])), 2);
        assert_eq!(ab.linking_number(&Word::identity()), 0);
    }

    #[test]
    fn torsion_flagged() {
        let ab = abelianize(&parse_presentation("gens: a b\nrel: a^2").unwrap());
        assert_eq!(ab.rank, 1);
        assert!(ab.torsion_detected);
        assert_eq!(ab.torsion, vec![BigInt::from(2)]);
        assert_eq!(ab.images[0], vec![0]);
    }

    #[test]
    fn non_integral_row_reduction_falls_back() {
        // a^2 = b^3: H = Z with a -> 3, b -> 2.
        let ab = abelianize(&parse_presentation("gens: a b\nrel: a^2 b^-3").unwrap());
        assert_eq!(ab.rank, 1);
        assert_eq!(ab.images, vec![vec![3], vec![2]]);
        assert!(!ab.torsion_detected);
    }
}
