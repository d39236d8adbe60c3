use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::line::Line;
use super::ArrangementError;
use crate::alexinv::Delta0Value;

/// A point where at least two lines meet.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiplePoint {
    pub x: BigRational,
    pub y: BigRational,
    /// Indices of the lines through the point, ascending.
    pub lines: Vec<usize>,
}

impl MultiplePoint {
    pub fn multiplicity(&self) -> usize {
        self.lines.len()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntersectionData {
    pub m: usize,
    pub points: Vec<MultiplePoint>,
    /// `point_multiplicities[l]` lists `d` for each multiple point on line `l`.
    pub point_multiplicities: Vec<Vec<usize>>,
    /// Partition of the lines by direction.
    pub parallel_classes: Vec<Vec<usize>>,
    /// `class_of[l]` indexes `parallel_classes`.
    pub class_of: Vec<usize>,
}

impl IntersectionData {
    pub fn class_size(&self, l: usize) -> usize {
        self.parallel_classes[self.class_of[l]].len()
    }

    pub fn is_essential(&self) -> bool {
        self.parallel_classes.len() > 1
    }
}

pub fn intersect_arrangement(lines: &[Line]) -> Result<IntersectionData, ArrangementError> {
    let m = lines.len();
    if m == 0 {
        return Err(ArrangementError::Empty);
    }
    for i in 0..m {
        for j in i + 1..m {
            if lines[i] == lines[j] {
                return Err(ArrangementError::DuplicateLine(i, j));
            }
        }
    }
    let mut by_point: BTreeMap<(BigRational, BigRational), BTreeSet<usize>> = BTreeMap::new();
    for i in 0..m {
        for j in i + 1..m {
            if let Some(p) = lines[i].intersect(&lines[j]) {
                let s = by_point.entry(p).or_default();
                s.insert(i);
                s.insert(j);
            }
        }
    }
    let points: Vec<MultiplePoint> = by_point
        .into_iter()
        .map(|((x, y), s)| MultiplePoint { x, y, lines: s.into_iter().collect() })
        .collect();
    let mut point_multiplicities = vec![Vec::new(); m];
    for p in &points {
        for &l in &p.lines {
            point_multiplicities[l].push(p.multiplicity());
        }
    }
    let mut dirs: BTreeMap<(BigRational, BigRational), Vec<usize>> = BTreeMap::new();
    for (i, l) in lines.iter().enumerate() {
        dirs.entry(l.direction()).or_default().push(i);
    }
    let mut parallel_classes: Vec<Vec<usize>> = dirs.into_values().collect();
    parallel_classes.sort();
    let mut class_of = vec![0; m];
    for (c, class) in parallel_classes.iter().enumerate() {
        for &l in class {
            class_of[l] = c;
        }
    }
    Ok(IntersectionData { m, points, point_multiplicities, parallel_classes, class_of })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum ClassKind {
    AllParallel,
    Pencil,
    NearPencil,
    GenericPosition,
    HasNodalTransversalLine,
    Other,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ClassLabel {
    pub kind: ClassKind,
    pub essential: bool,
    /// The distinguished line for near-pencils (the transversal) and for
    /// arrangements with a nodal transversal line.
    pub special_line: Option<usize>,
}

/// Lines that meet every other line, only in double points, and whose removal
/// leaves an essential arrangement.
pub fn nodal_transversal_lines(data: &IntersectionData) -> Vec<usize> {
    (0..data.m)
        .filter(|&l| {
            data.class_size(l) == 1
                && data.point_multiplicities[l].iter().all(|&d| d == 2)
                && remainder_essential(data, l)
        })
        .collect()
}

fn remainder_essential(data: &IntersectionData, l: usize) -> bool {
    data.parallel_classes.iter().filter(|c| c.iter().any(|&x| x != l)).count() > 1
}

/// Precedence: AllParallel, Pencil, NearPencil, GenericPosition,
/// HasNodalTransversalLine, Other.
pub fn classify_arrangement(data: &IntersectionData) -> ClassLabel {
    let m = data.m;
    let label = |kind, special_line| ClassLabel { kind, essential: kind != ClassKind::AllParallel, special_line };
    if !data.is_essential() {
        return label(ClassKind::AllParallel, None);
    }
    if m >= 3 && data.points.len() == 1 && data.points[0].multiplicity() == m {
        return label(ClassKind::Pencil, None);
    }
    if m >= 3 && data.parallel_classes.len() == 2 {
        if let Some(t) = data.parallel_classes.iter().find(|c| c.len() == 1) {
            if data.parallel_classes.iter().any(|c| c.len() == m - 1) {
                return label(ClassKind::NearPencil, Some(t[0]));
            }
        }
    }
    if data.parallel_classes.len() == m && data.points.iter().all(|p| p.multiplicity() == 2) {
        return label(ClassKind::GenericPosition, None);
    }
    if let Some(&l) = nodal_transversal_lines(data).first() {
        return label(ClassKind::HasNodalTransversalLine, Some(l));
    }
    label(ClassKind::Other, None)
}

/// A closed-form value of every higher-order degree.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ClosedForm {
    /// The common value of `delta_n` for all `n >= 0`.
    pub delta_n: Delta0Value,
    pub citation: String,
}

pub fn vanishing_and_infinite_verdicts(label: &ClassLabel, data: &IntersectionData) -> Option<ClosedForm> {
    let m = data.m as u64;
    let (delta_n, citation) = match label.kind {
        ClassKind::AllParallel if m > 1 => (
            Delta0Value::Infinite,
            "parallel lines: the complement group is free of rank m > 1, so every delta_n is infinite",
        ),
        ClassKind::AllParallel => (Delta0Value::Finite(0), "a single line: the complement group is Z, so every delta_n is 0"),
        ClassKind::Pencil => (
            Delta0Value::Finite(m * (m - 2)),
            "pencil of m lines: delta_n = m(m-2) for all n, the equality case of the global bound",
        ),
        ClassKind::NearPencil => (
            Delta0Value::Finite(m - 2),
            "near-pencil (m-1 parallel lines and one transversal): delta_n = m-2 for all n",
        ),
        ClassKind::HasNodalTransversalLine => (
            Delta0Value::Finite(0),
            "a line transversal to the rest, meeting it in m-1 nodes, with an essential remainder: delta_n = 0 for all n",
        ),
        ClassKind::GenericPosition | ClassKind::Other => return None,
    };
    Some(ClosedForm { delta_n, citation: citation.to_string() })
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LineBound {
    pub line: usize,
    pub parallel_class_size: usize,
    pub bound: u64,
}

/// Bounds from curve-at-infinity data.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CurveBound {
    pub m: u64,
    pub r: u64,
    pub tangents: u64,
    pub transversal: u64,
    /// Either `m = 2` or some point at infinity is transversal.
    pub hypotheses_hold: bool,
    /// `m^2 - 3m + r + 1`, when `r <= m - 1`.
    pub intermediate: Option<u64>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BoundReport {
    /// `m(m-2)`.
    pub global: Option<u64>,
    pub per_line: Vec<LineBound>,
    pub curve: Option<CurveBound>,
    pub best: Option<u64>,
    pub closed_form: Option<ClosedForm>,
}

/// Tube bounds around each line and the global bound.
pub fn combinatorial_bounds(data: &IntersectionData) -> Result<BoundReport, ArrangementError> {
    if !data.is_essential() {
        return Err(ArrangementError::NonEssential);
    }
    let m = data.m as u64;
    let global = m * (m - 2);
    let per_line: Vec<LineBound> = (0..data.m)
        .map(|l| {
            let k = data.class_size(l) as u64;
            let sq: u64 = data.point_multiplicities[l].iter().map(|&d| ((d - 1) * (d - 1)) as u64).sum();
            let bound = if k == 1 { sq } else { sq + (k - 1) * (m - k) }.saturating_sub(1);
            LineBound { line: l, parallel_class_size: k as usize, bound }
        })
        .collect();
    let best = per_line.iter().map(|b| b.bound).min().unwrap_or(global).min(global);
    let label = classify_arrangement(data);
    Ok(BoundReport {
        global: Some(global),
        per_line,
        curve: None,
        best: Some(best),
        closed_form: vanishing_and_infinite_verdicts(&label, data),
    })
}

/// Bounds for a degree `m` curve meeting the line at infinity in `r` points,
/// `tangents` of them simple tangencies and the rest transversal.
pub fn curve_at_infinity_bound(m: u64, r: u64, tangents: u64) -> Result<BoundReport, ArrangementError> {
    if m == 0 || r == 0 || r > m {
        return Err(ArrangementError::CurveData(format!("need 1 <= r <= m, got m={m} r={r}")));
    }
    if tangents > r || (r - tangents) + 2 * tangents != m {
        return Err(ArrangementError::CurveData(format!(
            "{} transversal points and {tangents} tangencies do not account for degree {m}",
            r.saturating_sub(tangents)
        )));
    }
    let transversal = r - tangents;
    let hypotheses_hold = m == 2 || transversal >= 1;
    let global = (m * m).saturating_sub(2 * m);
    let intermediate = (r < m).then(|| (m * m + r + 1).saturating_sub(3 * m));
    let best = hypotheses_hold.then(|| intermediate.map_or(global, |i| i.min(global)));
    Ok(BoundReport {
        global: hypotheses_hold.then_some(global),
        per_line: Vec::new(),
        curve: Some(CurveBound { m, r, tangents, transversal, hypotheses_hold, intermediate }),
        best,
        closed_form: None,
    })
}

#[cfg(test)]
mod tests {
    use super::super::line::int;
    use super::*;

    fn lines(coeffs: &[(i64, i64, i64)]) -> Vec<Line> {
        coeffs.iter().map(|&(a, b, c)| Line::from_ints(a, b, c).unwrap()).collect()
    }

    #[test]
    fn concurrent_triple() {
        let d = intersect_arrangement(&lines(&[(0, 1, 0), (-1, 1, 0), (1, 1, 0)])).unwrap();
        assert_eq!(d.points.len(), 1);
        assert_eq!(d.points[0].multiplicity(), 3);
        assert_eq!((d.points[0].x.clone(), d.points[0].y.clone()), (int(0), int(0)));
        assert_eq!(classify_arrangement(&d).kind, ClassKind::Pencil);
    }

    #[test]
    fn parallel_pair() {
        let d = intersect_arrangement(&lines(&[(0, 1, 0), (0, 1, 1)])).unwrap();
        assert!(d.points.is_empty());
        assert_eq!(d.parallel_classes, vec![vec![0, 1]]);
        let c = classify_arrangement(&d);
        assert_eq!(c.kind, ClassKind::AllParallel);
        assert!(!c.essential);
        assert!(combinatorial_bounds(&d).is_err());
    }

    #[test]
    fn triangle() {
        let d = intersect_arrangement(&lines(&[(0, 1, 0), (-1, 1, 0), (1, 0, 1)])).unwrap();
        assert_eq!(d.points.len(), 3);
        assert!(d.points.iter().all(|p| p.multiplicity() == 2));
        assert_eq!(classify_arrangement(&d).kind, ClassKind::GenericPosition);
    }

    #[test]
    fn duplicates_and_empty() {
        assert!(matches!(intersect_arrangement(&[]), Err(ArrangementError::Empty)));
        assert!(matches!(
            intersect_arrangement(&lines(&[(1, 1, 0), (2, 2, 0)])),
            Err(ArrangementError::DuplicateLine(0, 1))
        ));
    }

    #[test]
    fn near_pencil_and_transversal() {
        let d = intersect_arrangement(&lines(&[(0, 1, 0), (0, 1, 1), (1, 0, 0)])).unwrap();
        let c = classify_arrangement(&d);
        assert_eq!((c.kind, c.special_line), (ClassKind::NearPencil, Some(2)));
        let b = combinatorial_bounds(&d).unwrap();
        assert_eq!(b.per_line[2].bound, 1);
        assert_eq!(b.best, Some(1));

        // pencil of three through the origin plus x = 1
        let d = intersect_arrangement(&lines(&[(0, 1, 0), (-1, 1, 0), (1, 1, 0), (1, 0, 1)])).unwrap();
        let c = classify_arrangement(&d);
        assert_eq!((c.kind, c.special_line), (ClassKind::HasNodalTransversalLine, Some(3)));
        assert_eq!(vanishing_and_infinite_verdicts(&c, &d).unwrap().delta_n, Delta0Value::Finite(0));
    }

    #[test]
    fn two_parallel_pairs() {
        let d = intersect_arrangement(&lines(&[(0, 1, 0), (0, 1, 1), (1, 0, 0), (1, 0, 1)])).unwrap();
        let b = combinatorial_bounds(&d).unwrap();
        assert!(b.per_line.iter().all(|l| l.bound == 3));
        assert_eq!(b.best, Some(3));
        assert_eq!(b.global, Some(8));
        assert_eq!(classify_arrangement(&d).kind, ClassKind::Other);
    }

    #[test]
    fn curve_table_spots() {
        let b = curve_at_infinity_bound(4, 3, 1).unwrap();
        assert_eq!(b.curve.as_ref().unwrap().intermediate, Some(8));
        assert_eq!(b.best, Some(8));
        assert_eq!(curve_at_infinity_bound(2, 1, 1).unwrap().best, Some(0));
        assert_eq!(curve_at_infinity_bound(5, 5, 0).unwrap().best, Some(15));
        assert_eq!(curve_at_infinity_bound(5, 4, 1).unwrap().best, Some(15));
        // all tangent, m > 2: no bound
        assert_eq!(curve_at_infinity_bound(4, 2, 2).unwrap().best, None);
        assert!(curve_at_infinity_bound(4, 3, 2).is_err());
        assert!(curve_at_infinity_bound(4, 5, 0).is_err());
    }
}
