use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::combinatorics::{intersect_arrangement, IntersectionData};
use super::line::{int, Line};
use super::ArrangementError;
use crate::groups::{Presentation, Word};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Pencil,
    NearPencil,
    Parallel,
    Generic,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Pencil, Family::NearPencil, Family::Parallel, Family::Generic];

    pub fn min_lines(self) -> usize {
        match self {
            Family::Pencil => 3,
            Family::NearPencil => 2,
            Family::Parallel | Family::Generic => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Pencil => "pencil",
            Family::NearPencil => "near-pencil",
            Family::Parallel => "parallel",
            Family::Generic => "generic",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = ArrangementError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "pencil" => Ok(Family::Pencil),
            "near-pencil" | "nearpencil" => Ok(Family::NearPencil),
            "parallel" => Ok(Family::Parallel),
            "generic" => Ok(Family::Generic),
            _ => Err(ArrangementError::UnknownFamily(s.to_string())),
        }
    }
}

fn check_size(family: Family, m: usize) -> Result<(), ArrangementError> {
    if m < family.min_lines() {
        return Err(ArrangementError::FamilyTooSmall { family: family.name(), m, min: family.min_lines() });
    }
    Ok(())
}

/// Standard presentations, generators `x1..xm` all meridians.
///
/// - pencil: `[x_i, x_m ... x_1]` for `i < m`
/// - near-pencil: `[x_i, x_m]` for `i < m`, with `x_m` the transversal
/// - parallel: the free group
/// - generic: all pairwise commutators
pub fn family_presentation(family: Family, m: usize) -> Result<Presentation, ArrangementError> {
    check_size(family, m)?;
    let x = Word::gen;
    let rels = match family {
        Family::Pencil => {
            let twist = (0..m).rev().fold(Word::identity(), |w, i| w.mul(&x(i)));
            (0..m - 1).map(|i| Word::commutator(&x(i), &twist)).collect()
        }
        Family::NearPencil => (0..m - 1).map(|i| Word::commutator(&x(i), &x(m - 1))).collect(),
        Family::Parallel => Vec::new(),
        Family::Generic => {
            let mut r = Vec::new();
            for i in 0..m {
                for j in i + 1..m {
                    r.push(Word::commutator(&x(i), &x(j)));
                }
            }
            r
        }
    };
    Ok(Presentation::numbered(m, rels).expect("well-formed family presentation"))
}

/// A concrete real arrangement realizing the family, with line `i` matching
/// generator `x_{i+1}` of [`family_presentation`].
pub fn family_lines(family: Family, m: usize) -> Result<Vec<Line>, ArrangementError> {
    check_size(family, m)?;
    let n = m as i64;
    Ok(match family {
        Family::Pencil => (0..n).map(|i| Line::graph(int(i), int(0))).collect(),
        Family::NearPencil => {
            let mut v: Vec<Line> = (0..n - 1).map(|i| Line::graph(int(0), int(i))).collect();
            v.push(Line::vertical(int(0)));
            v
        }
        Family::Parallel => (0..n).map(|i| Line::graph(int(0), int(i))).collect(),
        // y = i x + i^2: lines i, j meet at (-(i+j), -ij), so no three concur.
        Family::Generic => (0..n).map(|i| Line::graph(int(i), int(i * i))).collect(),
    })
}

/// Adds a generator `y` commuting with every existing generator: the group of
/// the arrangement plus a line meeting it transversally in nodes only.
pub fn adjoin_central_transversal(p: &Presentation) -> Presentation {
    let n = p.num_generators();
    let mut labels = p.labels().to_vec();
    let mut name = String::from("y");
    while labels.contains(&name) {
        name.push('\'');
    }
    labels.push(name);
    let mut rels = p.relators().to_vec();
    rels.extend((0..n).map(|i| Word::commutator(&Word::gen(i), &Word::gen(n))));
    let mut merid = p.meridians().to_vec();
    merid.push(true);
    Presentation::with_meridians(labels, rels, merid).expect("fresh generator name")
}

/// Presentation from a real sweep, with the shear that was applied.
#[derive(Clone, Debug)]
pub struct WiringResult {
    pub presentation: Presentation,
    /// The sweep runs in coordinates `(x + shear * y, y)`.
    pub shear: i64,
}

type Point = (BigRational, BigRational);

fn shear_valid(lines: &[Line], points: &[Point], s: &BigRational) -> bool {
    if lines.iter().any(|l| (l.b() - l.a() * s).is_zero()) {
        return false;
    }
    let mut xs: Vec<BigRational> = points.iter().map(|(x, y)| x + s * y).collect();
    xs.sort();
    xs.windows(2).all(|w| w[0] != w[1])
}

/// Sweeps a vertical line left to right across the (sheared) arrangement.
///
/// Wires are ordered bottom to top. At a crossing of `k` consecutive wires
/// carrying meridian words `g_1, ..., g_k` (bottom to top), the relations
/// say that `g_k ... g_1` equals each of its cyclic rotations. Past the
/// crossing the order of the block reverses and wire `j` carries
/// `h^-1 g_j h` with `h = g_{j-1} ... g_1`.
///
/// The shear is the least nonnegative integer that makes no line vertical and
/// gives distinct crossings distinct sweep coordinates.
pub fn wiring_presentation(lines: &[Line]) -> Result<WiringResult, ArrangementError> {
    let data = intersect_arrangement(lines)?;
    let points: Vec<Point> = data.points.iter().map(|p| (p.x.clone(), p.y.clone())).collect();
    let shear = (0..=i64::from(u16::MAX))
        .find(|&s| shear_valid(lines, &points, &int(s)))
        .ok_or(ArrangementError::NoGenericShear)?;
    sweep(lines, &data, shear)
}

/// Same sweep with a caller-chosen shear; fails if it is not sweep-generic.
pub fn wiring_presentation_with_shear(lines: &[Line], shear: i64) -> Result<WiringResult, ArrangementError> {
    let data = intersect_arrangement(lines)?;
    let points: Vec<Point> = data.points.iter().map(|p| (p.x.clone(), p.y.clone())).collect();
    if !shear_valid(lines, &points, &int(shear)) {
        return Err(ArrangementError::BadShear(shear));
    }
    sweep(lines, &data, shear)
}

fn sweep(lines: &[Line], data: &IntersectionData, shear: i64) -> Result<WiringResult, ArrangementError> {
    let m = lines.len();
    let s = int(shear);

    // y = alpha + beta * x' on each wire
    let wires: Vec<(BigRational, BigRational)> = lines
        .iter()
        .map(|l| {
            let d = l.b() - l.a() * &s;
            (l.c() / &d, -(l.a() / &d))
        })
        .collect();
    let mut events: BTreeMap<BigRational, Vec<usize>> = BTreeMap::new();
    for p in &data.points {
        events.insert(&p.x + &s * &p.y, p.lines.clone());
    }
    let x0 = events.keys().next().map_or_else(BigRational::zero, |x| x - BigRational::one());
    let height = |l: usize| &wires[l].0 + &wires[l].1 * &x0;
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&a| height(a));

    let mut words: Vec<Word> = (0..m).map(Word::gen).collect();
    let mut relators = Vec::new();
    for through in events.values() {
        let mut pos: Vec<usize> =
            through.iter().map(|l| order.iter().position(|x| x == l).expect("wire present")).collect();
        pos.sort_unstable();
        let (lo, k) = (pos[0], pos.len());
        if pos[k - 1] - lo + 1 != k {
            return Err(ArrangementError::Internal("crossing wires are not adjacent".into()));
        }
        let block: Vec<usize> = order[lo..lo + k].to_vec();
        let g: Vec<Word> = block.iter().map(|&l| words[l].clone()).collect();

        // P = g_k ... g_1, rotations g_r ... g_1 g_k ... g_{r+1}
        let prod = |idx: &mut dyn Iterator<Item = usize>| idx.fold(Word::identity(), |w, i| w.mul(&g[i]));
        let full = prod(&mut (0..k).rev());
        for r in 1..k {
            let rot = prod(&mut (0..r).rev().chain((r..k).rev()));
            let rel = full.mul(&rot.inverse());
            if !rel.is_identity() && !relators.contains(&rel) {
                relators.push(rel);
            }
        }

        let mut h = Word::identity();
        for (j, &l) in block.iter().enumerate() {
            words[l] = g[j].conjugate_by(&h);
            h = g[j].mul(&h);
        }
        order[lo..lo + k].reverse();
    }
    let presentation = Presentation::numbered(m, relators).expect("relators use wire generators");
    Ok(WiringResult { presentation, shear })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alexinv::{alexander_polynomial, delta0_via_degree, Delta0Value};

    #[test]
    fn family_shapes() {
        let p = family_presentation(Family::NearPencil, 3).unwrap();
        assert_eq!(p.to_string(), "gens: x1 x2 x3\nrel: x1 x3 x1^-1 x3^-1\nrel: x2 x3 x2^-1 x3^-1\n");
        let p = family_presentation(Family::Parallel, 2).unwrap();
        assert!(p.relators().is_empty());
        assert!(family_presentation(Family::Pencil, 2).is_err());
        assert_eq!(family_presentation(Family::Generic, 4).unwrap().relators().len(), 6);
        assert_eq!("near_pencil".parse::<Family>().unwrap(), Family::NearPencil);
    }

    #[test]
    fn wiring_two_lines() {
        let w = wiring_presentation(&[Line::graph(int(0), int(0)), Line::vertical(int(0))]).unwrap();
        assert_eq!(w.shear, 1);
        assert_eq!(w.presentation.relators().len(), 1);
        assert!(alexander_polynomial(&w.presentation).is_unit());
    }

    #[test]
    fn wiring_pencil_three() {
        let w = wiring_presentation(&family_lines(Family::Pencil, 3).unwrap()).unwrap();
        assert_eq!(w.shear, 0);
        let d = alexander_polynomial(&w.presentation);
        assert_eq!(d.to_string(), "t1*t2*t3 - 1");
        assert_eq!(delta0_via_degree(&w.presentation), Delta0Value::Finite(3));
    }

    #[test]
    fn wiring_near_pencil_three() {
        let w = wiring_presentation(&family_lines(Family::NearPencil, 3).unwrap()).unwrap();
        assert_eq!(delta0_via_degree(&w.presentation), Delta0Value::Finite(1));
    }
}
