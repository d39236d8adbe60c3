use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::ArrangementError;

/// The line `a x + b y = c`, scaled so the first nonzero of `(a, b)` is 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Line {
    a: BigRational,
    b: BigRational,
    c: BigRational,
}

impl Line {
    pub fn new(a: BigRational, b: BigRational, c: BigRational) -> Result<Self, ArrangementError> {
        let lead = if !a.is_zero() {
            a.clone()
        } else if !b.is_zero() {
            b.clone()
        } else {
            return Err(ArrangementError::DegenerateLine);
        };
        Ok(Line { a: a / &lead, b: b / &lead, c: c / &lead })
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Result<Self, ArrangementError> {
        Self::new(int(a), int(b), int(c))
    }

    /// `y = slope * x + intercept`.
    pub fn graph(slope: BigRational, intercept: BigRational) -> Self {
        Self::new(-slope, BigRational::one(), intercept).expect("b = 1")
    }

    /// `x = c`.
    pub fn vertical(c: BigRational) -> Self {
        Self::new(BigRational::one(), BigRational::zero(), c).expect("a = 1")
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }

    pub fn b(&self) -> &BigRational {
        &self.b
    }

    pub fn c(&self) -> &BigRational {
        &self.c
    }

    /// Normalized direction key; equal for parallel lines.
    pub fn direction(&self) -> (BigRational, BigRational) {
        (self.a.clone(), self.b.clone())
    }

    pub fn is_parallel(&self, other: &Line) -> bool {
        self.direction() == other.direction()
    }

    /// Intersection point, `None` for parallel lines.
    pub fn intersect(&self, other: &Line) -> Option<(BigRational, BigRational)> {
        let det = &self.a * &other.b - &self.b * &other.a;
        if det.is_zero() {
            return None;
        }
        let x = (&self.c * &other.b - &self.b * &other.c) / &det;
        let y = (&self.a * &other.c - &self.c * &other.a) / &det;
        Some((x, y))
    }

    pub fn contains(&self, p: &(BigRational, BigRational)) -> bool {
        &self.a * &p.0 + &self.b * &p.1 == self.c
    }
}

pub(crate) fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.a, self.b, self.c)
    }
}

/// Combinatorial data of a curve meeting the line at infinity.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CurveInput {
    pub m: u64,
    pub r: u64,
    pub tangents: u64,
}

/// Contents of an arrangement file.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ArrangementInput {
    Lines(Vec<Line>),
    Curve(CurveInput),
}

/// Parses `line: a b c` records (rationals as `p/q`) or a single
/// `curve: m=<int> r=<int> tangents=<int>` record; `#` starts a comment.
pub fn parse_arrangement(text: &str) -> Result<ArrangementInput, ArrangementError> {
    let mut lines = Vec::new();
    let mut curve = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let err = |msg: String| ArrangementError::Parse { line: line_no, msg };
        let (key, rest) = body.split_once(':').ok_or_else(|| err("expected `key: value`".into()))?;
        match key.trim() {
            "line" => {
                let toks: Vec<&str> = rest.split_whitespace().collect();
                if toks.len() != 3 {
                    return Err(err(format!("expected 3 coefficients, found {}", toks.len())));
                }
                let mut v = Vec::with_capacity(3);
                for t in toks {
                    v.push(BigRational::from_str(t).map_err(|_| err(format!("bad rational `{t}`")))?);
                }
                let c = v.pop().unwrap();
                let b = v.pop().unwrap();
                let a = v.pop().unwrap();
                lines.push(Line::new(a, b, c).map_err(|_| err("a and b are both zero".into()))?);
            }
            "curve" => {
                if curve.is_some() {
                    return Err(err("second `curve:` record".into()));
                }
                let (mut m, mut r, mut t) = (None, None, None);
                for tok in rest.split_whitespace() {
                    let (k, v) = tok.split_once('=').ok_or_else(|| err(format!("expected key=value, got `{tok}`")))?;
                    let v: u64 = v.parse().map_err(|_| err(format!("bad integer in `{tok}`")))?;
                    match k {
                        "m" => m = Some(v),
                        "r" => r = Some(v),
                        "tangents" => t = Some(v),
                        _ => return Err(err(format!("unknown curve field `{k}`"))),
                    }
                }
                match (m, r, t) {
                    (Some(m), Some(r), Some(tangents)) => curve = Some(CurveInput { m, r, tangents }),
                    _ => return Err(err("curve needs m=, r= and tangents=".into())),
                }
            }
            other => return Err(err(format!("unknown key `{other}`"))),
        }
    }
    match (curve, lines.is_empty()) {
        (Some(_), false) => Err(ArrangementError::Parse { line: 0, msg: "mixing `line:` and `curve:` records".into() }),
        (Some(c), true) => Ok(ArrangementInput::Curve(c)),
        (None, _) => Ok(ArrangementInput::Lines(lines)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization() {
        let l = Line::from_ints(2, 4, 6).unwrap();
        assert_eq!(l, Line::from_ints(1, 2, 3).unwrap());
        let v = Line::from_ints(0, -3, 3).unwrap();
        assert_eq!(v.b(), &int(1));
        assert_eq!(v.c(), &int(-1));
        assert!(Line::from_ints(0, 0, 1).is_err());
    }

    #[test]
    fn intersections() {
        let l1 = Line::graph(int(0), int(0));
        let l2 = Line::graph(int(1), int(0));
        let l3 = Line::vertical(int(1));
        assert_eq!(l1.intersect(&l2), Some((int(0), int(0))));
        assert_eq!(l2.intersect(&l3), Some((int(1), int(1))));
        assert!(l1.intersect(&Line::graph(int(0), int(1))).is_none());
    }

    #[test]
    fn parse_file() {
        let text = "# pencil\nline: 0 1 0\nline: -1 1 0   # y = x\nline: 1/2 1/2 0\n";
        let ArrangementInput::Lines(ls) = parse_arrangement(text).unwrap() else { panic!() };
        assert_eq!(ls.len(), 3);
        assert_eq!(ls[2], Line::from_ints(1, 1, 0).unwrap());
        assert_eq!(
            parse_arrangement("curve: m=4 r=3 tangents=1").unwrap(),
            ArrangementInput::Curve(CurveInput { m: 4, r: 3, tangents: 1 })
        );
        assert!(parse_arrangement("line: 1 2").is_err());
        assert!(parse_arrangement("line: 1 x 2").is_err());
        assert!(parse_arrangement("line: 1 1/0 2").is_err());
        assert!(parse_arrangement("curve: m=4 r=3").is_err());
        assert!(parse_arrangement("plane: 1 2 3").is_err());
    }
}
