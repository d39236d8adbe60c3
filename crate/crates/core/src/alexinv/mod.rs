//! Elementary ideals, the multivariable Alexander polynomial and the zeroth
//! higher-order degree, computed as a degree and as a torsion rank.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::foxcalc::{alexander_matrix, AlexanderMatrix};
use crate::groups::{abelianize, AbelianizationData, Presentation};
use crate::ringkit::{
    diagonalize_over_pid, grade_substitute, LaurentGcd, LaurentPolynomial, Minors, PidDiagonalization, UniPolyMatrix,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlexError {
    #[error("the torsion-free abelianization is trivial")]
    TrivialQuotient,
    #[error("distinguished variable {0} out of range for {1} variables")]
    Distinguished(usize, usize),
    #[error("presentation matrix has full rank over the localized ring; not a curve-complement presentation")]
    Inconsistent,
}

/// A natural number or infinity.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum Delta0Value {
    Finite(u64),
    Infinite,
}

impl fmt::Display for Delta0Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Delta0Value::Finite(n) => write!(f, "{n}"),
            Delta0Value::Infinite => write!(f, "infinite"),
        }
    }
}

impl Serialize for Delta0Value {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Delta0Value::Finite(n) => s.serialize_u64(*n),
            Delta0Value::Infinite => s.serialize_str("infinite"),
        }
    }
}

impl<'de> Deserialize<'de> for Delta0Value {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            N(u64),
            S(String),
        }
        match Raw::deserialize(d)? {
            Raw::N(n) => Ok(Delta0Value::Finite(n)),
            Raw::S(s) if s == "infinite" => Ok(Delta0Value::Infinite),
            Raw::S(s) => Err(serde::de::Error::custom(format!("expected a count or \"infinite\", got {s:?}"))),
        }
    }
}

/// Generators of `E_i`: the `(m-i)`-minors, `[1]` when `i >= m`, and the
/// empty list (the zero ideal) when `m - i > q`.
pub fn elementary_ideal_gens(a: &AlexanderMatrix, i: usize) -> Vec<LaurentPolynomial> {
    let (m, q) = (a.rows(), a.cols());
    if i >= m {
        return vec![LaurentPolynomial::one(a.nvars)];
    }
    if m - i > q {
        return Vec::new();
    }
    Minors::new(&a.matrix, m - i).expect("minor size in range").collect()
}

/// `Delta_i = gcd(E_i)`, stopping early once the running gcd is a unit.
pub fn elementary_ideal_gcd(a: &AlexanderMatrix, i: usize) -> LaurentPolynomial {
    let (m, q) = (a.rows(), a.cols());
    if i >= m {
        return LaurentPolynomial::one(a.nvars);
    }
    if m - i > q {
        return LaurentPolynomial::zero(a.nvars);
    }
    let mut g = LaurentGcd::new(a.nvars);
    for minor in Minors::new(&a.matrix, m - i).expect("minor size in range") {
        if g.push(&minor).expect("same ring") {
            break;
        }
    }
    g.finish()
}

/// `Delta_G = gcd(E_1(A_G))`, normalized; zero when `E_1 = (0)`.
pub fn alexander_polynomial(p: &Presentation) -> LaurentPolynomial {
    let ab = abelianize(p);
    elementary_ideal_gcd(&alexander_matrix(p, &ab), 1)
}

/// `deg Delta`, or infinity when `Delta = 0`.
pub fn delta0_from_polynomial(delta: &LaurentPolynomial) -> Delta0Value {
    match delta.degree_spread() {
        Ok(d) => Delta0Value::Finite(d),
        Err(_) => Delta0Value::Infinite,
    }
}

pub fn delta0_via_degree(p: &Presentation) -> Delta0Value {
    delta0_from_polynomial(&alexander_polynomial(p))
}

/// Default choice of the distinguished variable: the coordinate that the
/// first meridian generator maps to, or the first one.
pub fn default_distinguished(p: &Presentation, ab: &AbelianizationData) -> usize {
    p.first_meridian().and_then(|g| ab.basis_index(g)).unwrap_or(0)
}

/// Diagonalizes `Phi_G` over `K_0[t^±1]` after grading by the splitting that
/// sends variable `d` to `t`.
pub fn pid_diagonalization(a: &AlexanderMatrix, d: usize) -> Result<PidDiagonalization, AlexError> {
    let s = a.nvars;
    if s == 0 {
        return Err(AlexError::TrivialQuotient);
    }
    if d >= s {
        return Err(AlexError::Distinguished(d, s));
    }
    let psi = vec![1i64; s];
    let graded = UniPolyMatrix::from_fn(a.rows(), a.cols(), |i, j| grade_substitute(a.matrix.get(i, j), &psi, Some(d)));
    Ok(diagonalize_over_pid(&graded))
}

/// Rank of the torsion part after splitting off the free summand.
pub fn delta0_from_diagonalization(diag: &PidDiagonalization) -> Result<Delta0Value, AlexError> {
    match diag.free_rank {
        0 => Err(AlexError::Inconsistent),
        1 => Ok(Delta0Value::Finite(diag.torsion_degree() as u64)),
        _ => Ok(Delta0Value::Infinite),
    }
}

pub fn delta0_via_pid(p: &Presentation) -> Result<Delta0Value, AlexError> {
    let ab = abelianize(p);
    let d = default_distinguished(p, &ab);
    delta0_via_pid_with(p, &ab, d)
}

pub fn delta0_via_pid_with(p: &Presentation, ab: &AbelianizationData, d: usize) -> Result<Delta0Value, AlexError> {
    let a = alexander_matrix(p, ab);
    delta0_from_diagonalization(&pid_diagonalization(&a, d)?)
}

/// True iff `Delta` is a nonzero integer.
pub fn characteristic_codim_flag(delta: &LaurentPolynomial) -> bool {
    delta.as_constant().is_some_and(|c| c != 0.into())
}

/// Which δ₀ computations to run.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    Degree,
    Pid,
    #[default]
    Both,
}

#[derive(Clone, Debug)]
pub struct InvariantReport {
    pub delta: LaurentPolynomial,
    pub delta0: Delta0Value,
    pub delta0_degree: Option<Delta0Value>,
    pub delta0_pid: Option<Delta0Value>,
    pub codim_gt_one: bool,
    pub route_agreement: bool,
    /// Rank of `H`.
    pub s: usize,
    pub distinguished: usize,
    pub warnings: Vec<String>,
    pub notes: Vec<String>,
}

pub fn compute_invariants(p: &Presentation, route: Route) -> Result<InvariantReport, AlexError> {
    let ab = abelianize(p);
    let mut warnings = Vec::new();
    let mut notes = Vec::new();
    if ab.torsion_detected {
        let t: Vec<String> = ab.torsion.iter().map(|x| x.to_string()).collect();
        warnings.push(format!("abelianization has torsion Z/{}; using its torsion-free quotient", t.join(" + Z/")));
    }
    if ab.rank == 0 {
        return Err(AlexError::TrivialQuotient);
    }
    let a = alexander_matrix(p, &ab);
    debug_assert!(a.columns_annihilate());
    let delta = elementary_ideal_gcd(&a, 1);
    let by_degree = delta0_from_polynomial(&delta);
    let distinguished = default_distinguished(p, &ab);

    let delta0_degree = matches!(route, Route::Degree | Route::Both).then_some(by_degree);
    let mut route_agreement = true;
    let delta0_pid = if matches!(route, Route::Pid | Route::Both) {
        match pid_diagonalization(&a, distinguished).and_then(|d| delta0_from_diagonalization(&d)) {
            Ok(v) => Some(v),
            Err(e) => {
                warnings.push(format!("localized route: {e}"));
                route_agreement = false;
                None
            }
        }
    } else {
        None
    };
    if let (Some(x), Some(y)) = (delta0_degree, delta0_pid) {
        if x != y {
            route_agreement = false;
            warnings.push(format!("routes disagree: degree gives {x}, localized module gives {y}"));
        }
    }
    let delta0 = match route {
        Route::Pid => delta0_pid.unwrap_or(by_degree),
        _ => by_degree,
    };
    let codim_gt_one = characteristic_codim_flag(&delta);
    if ab.rank == 1 && codim_gt_one {
        notes.push("Alexander polynomial is constant with one variable, so all higher-order degrees vanish".into());
    }
    Ok(InvariantReport {
        delta,
        delta0,
        delta0_degree,
        delta0_pid,
        codim_gt_one,
        route_agreement,
        s: ab.rank,
        distinguished,
        warnings,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::parse_presentation;

    #[test]
    fn hopf() {
        let p = parse_presentation("gens: a b\nrel: a b a^-1 b^-1").unwrap();
        let a = alexander_matrix(&p, &abelianize(&p));
        assert_eq!(elementary_ideal_gens(&a, 1).len(), 2);
        assert_eq!(elementary_ideal_gens(&a, 2), vec![LaurentPolynomial::one(2)]);
        assert!(alexander_polynomial(&p).is_unit());
        assert_eq!(delta0_via_degree(&p), Delta0Value::Finite(0));
        assert_eq!(delta0_via_pid(&p), Ok(Delta0Value::Finite(0)));
    }

    #[test]
    fn free_groups() {
        let p = parse_presentation("gens: a b").unwrap();
        let a = alexander_matrix(&p, &abelianize(&p));
        assert!(elementary_ideal_gens(&a, 1).is_empty());
        assert_eq!(delta0_via_degree(&p), Delta0Value::Infinite);
        assert_eq!(delta0_via_pid(&p), Ok(Delta0Value::Infinite));
        let p = parse_presentation("gens: a").unwrap();
        assert_eq!(delta0_via_degree(&p), Delta0Value::Finite(0));
        assert_eq!(delta0_via_pid(&p), Ok(Delta0Value::Finite(0)));
    }

    #[test]
    fn trefoil_type() {
        let p = parse_presentation("gens: a b\nrel: a b a b^-1 a^-1 b^-1").unwrap();
        let d = alexander_polynomial(&p);
        assert_eq!(d.to_string(), "t1^2 - t1 + 1");
        assert_eq!(delta0_via_degree(&p), Delta0Value::Finite(2));
        assert_eq!(delta0_via_pid(&p), Ok(Delta0Value::Finite(2)));
    }

    #[test]
    fn codim_flag() {
        assert!(characteristic_codim_flag(&LaurentPolynomial::one(3)));
        assert!(!characteristic_codim_flag(&LaurentPolynomial::zero(3)));
        assert!(!characteristic_codim_flag(&LaurentPolynomial::var(3, 0)));
    }
}
