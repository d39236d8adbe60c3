//! Finitely presented groups: free words, a small text format and
//! abelianization onto the maximal torsion-free abelian quotient.

mod abelian;
mod presentation;
mod word;

pub use abelian::{abelianize, exponent_matrix, linking_vector, AbelianizationData};
pub use presentation::{parse_presentation, Presentation};
pub use word::{free_reduce, Letter, Word, WordDisplay};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("line {line}: unknown generator `{name}`")]
    UnknownGenerator { line: usize, name: String },
    #[error("line {line}: malformed exponent in `{token}`")]
    MalformedExponent { line: usize, token: String },
    #[error("line {line}: duplicate generator `{name}`")]
    DuplicateGenerator { line: usize, name: String },
    #[error("presentation has no generators")]
    EmptyGenerators,
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("generator index {index} out of range for {count} generators")]
    GeneratorIndex { index: usize, count: usize },
}
