//! Exact commutative algebra: Laurent polynomials over the integers, integer
//! and Laurent matrices, the rational-function field, and diagonalization
//! over the one-variable Laurent ring on top of it.

mod fracfree;
mod laurent;
mod matrix;
mod poly;
mod ratfunc;
mod unipoly;

pub use laurent::{laurent_gcd, LaurentGcd, LaurentPolynomial};
pub use matrix::{
    minors, smith_normal_form_int, subdeterminant, IntMatrix, IntSmithForm, LaurentMatrix, Matrix,
    Minors,
};
pub use poly::Poly;
pub use ratfunc::RationalFunction;
pub use unipoly::{diagonalize_over_pid, grade_substitute, PidDiagonalization, UniPoly, UniPolyMatrix};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("variable count mismatch: {0} vs {1}")]
    VariableMismatch(usize, usize),
    #[error("degree of the zero polynomial is undefined")]
    ZeroDegree,
    #[error("gcd of an empty list")]
    EmptyInput,
    #[error("minor size {k} out of range for a {rows}x{cols} matrix")]
    MinorSize { k: usize, rows: usize, cols: usize },
}
