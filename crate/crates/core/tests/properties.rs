use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use hodeg_core::foxcalc::{check_fundamental_identity, fox_derivative};
use hodeg_core::groups::{Letter, Word};
use hodeg_core::ringkit::{laurent_gcd, smith_normal_form_int, IntMatrix, LaurentPolynomial};

const GENS: usize = 4;

fn letters() -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec((0..GENS, any::<bool>()).prop_map(|(g, i)| Letter::new(g, i)), 0..=12)
}

/// Fox derivative straight from the product rule on the unreduced letter
/// sequence, with prefixes reduced only when used as keys.
fn naive_fox(seq: &[Letter], j: usize) -> BTreeMap<Word, BigInt> {
    let mut out: BTreeMap<Word, BigInt> = BTreeMap::new();
    for (k, l) in seq.iter().enumerate() {
        if l.gen != j {
            continue;
        }
        let (key, c) = if l.inv {
            (Word::from_letters(seq[..=k].iter().copied()), -1)
        } else {
            (Word::from_letters(seq[..k].iter().copied()), 1)
        };
        *out.entry(key).or_default() += c;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn fox_fundamental_identity(seq in letters()) {
        let w = Word::from_letters(seq.iter().copied());
        prop_assert!(check_fundamental_identity(&w, GENS));
        for j in 0..GENS {
            let d = fox_derivative(&w, j, GENS).unwrap();
            let got: BTreeMap<Word, BigInt> = d.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
            prop_assert_eq!(got, naive_fox(&seq, j), "generator {}", j);
        }
    }
}

fn int_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-9i64..=9, c), r))
}

fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigRational>> =
        rows.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(rank, p);
        for i in 0..a.len() {
            if i != rank && !a[i][c].is_zero() {
                let f = &a[i][c] / &a[rank][c];
                let pivot = a[rank].clone();
                for (x, p) in a[i].iter_mut().zip(&pivot) {
                    *x -= p * &f;
                }
            }
        }
        rank += 1;
    }
    rank
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn smith_form_reconstructs(rows in int_matrix()) {
        let cols = rows[0].len();
        let m = IntMatrix::from_i64(rows.clone(), cols);
        let s = smith_normal_form_int(&m);
        prop_assert_eq!(s.u.mul(&m).mul(&s.v), s.d.clone());
        prop_assert!(s.u.determinant().abs().is_one());
        prop_assert!(s.v.determinant().abs().is_one());
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    prop_assert!(s.d.get(i, j).is_zero());
                }
            }
        }
        let f = s.invariant_factors();
        prop_assert_eq!(f.len(), rational_rank(&rows));
        for w in f.windows(2) {
            prop_assert!(w[0].is_positive());
            prop_assert!((&w[1] % &w[0]).is_zero(), "{} does not divide {}", w[0], w[1]);
        }
        if rows.len() == cols {
            let det = m.determinant().abs();
            if f.len() == cols {
                prop_assert_eq!(f.iter().product::<BigInt>(), det);
            } else {
                prop_assert!(det.is_zero());
            }
        }
    }
}

fn laurent(nvars: usize) -> impl Strategy<Value = LaurentPolynomial> {
    prop::collection::vec((prop::collection::vec(-3i64..=3, nvars), -5i64..=5), 1..=4)
        .prop_map(move |ts| LaurentPolynomial::from_terms(nvars, ts.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
        .prop_filter("nonzero", |p| !p.is_zero())
}

fn laurent_triple() -> impl Strategy<Value = (LaurentPolynomial, LaurentPolynomial, LaurentPolynomial)> {
    (1usize..=3).prop_flat_map(|n| (laurent(n), laurent(n), laurent(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn degree_spread_is_additive((p, q, _) in laurent_triple()) {
        let pq = p.checked_mul(&q).unwrap();
        prop_assert_eq!(pq.degree_spread().unwrap(), p.degree_spread().unwrap() + q.degree_spread().unwrap());
    }

    #[test]
    fn gcd_divides_and_keeps_common_factors((p, q, r) in laurent_triple()) {
        let a = &p * &r;
        let b = &q * &r;
        let g = laurent_gcd(&[a.clone(), b.clone()]).unwrap();
        prop_assert!(g.divides(&a), "gcd {} does not divide {}", g, a);
        prop_assert!(g.divides(&b), "gcd {} does not divide {}", g, b);
        prop_assert!(r.divides(&g), "common factor {} lost from {}", r, g);
        // Cofactors are coprime up to a constant.
        let (ca, cb) = (a.div_exact(&g).unwrap(), b.div_exact(&g).unwrap());
        let h = laurent_gcd(&[ca, cb]).unwrap();
        prop_assert_eq!(h.degree_spread().unwrap(), 0);
        prop_assert!(h.num_terms() == 1);
    }
}
