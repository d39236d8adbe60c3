//! Rational line arrangements: intersection combinatorics, classification,
//! degree bounds, and group presentations of their complements.

mod combinatorics;
mod line;
mod presentations;

pub use combinatorics::{
    classify_arrangement, combinatorial_bounds, curve_at_infinity_bound, intersect_arrangement,
    nodal_transversal_lines, vanishing_and_infinite_verdicts, BoundReport, ClassKind, ClassLabel, ClosedForm,
    CurveBound, IntersectionData, LineBound, MultiplePoint,
};
pub use line::{parse_arrangement, ArrangementInput, CurveInput, Line};
pub use presentations::{
    adjoin_central_transversal, family_lines, family_presentation, wiring_presentation, wiring_presentation_with_shear, Family, WiringResult,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArrangementError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("a line needs (a, b) != (0, 0)")]
    DegenerateLine,
    #[error("lines {0} and {1} coincide")]
    DuplicateLine(usize, usize),
    #[error("empty arrangement")]
    Empty,
    #[error("all lines are parallel; the arrangement is not essential")]
    NonEssential,
    #[error("{family} needs at least {min} lines, got {m}")]
    FamilyTooSmall { family: &'static str, m: usize, min: usize },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("inconsistent curve data: {0}")]
    CurveData(String),
    #[error("no integer shear makes the arrangement sweep-generic")]
    NoGenericShear,
    #[error("shear {0} leaves a vertical line or two crossings at one sweep position")]
    BadShear(i64),
    #[error("internal error: {0}")]
    Internal(String),
}
