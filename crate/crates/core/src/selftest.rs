//! The bundled regression corpus: closed-form family values from both the
//! standard and the swept presentations, a few named arrangements and
//! groups, the curve-at-infinity bound table, and a route-equivalence sweep
//! over every choice of distinguished variable.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::alexinv::{compute_invariants, delta0_via_pid_with, Delta0Value, Route};
use crate::arrangements::{
    classify_arrangement, combinatorial_bounds, curve_at_infinity_bound, family_lines, family_presentation,
    intersect_arrangement, parse_arrangement, vanishing_and_infinite_verdicts, wiring_presentation, ArrangementInput,
    ClassKind, Family,
};
use crate::groups::{abelianize, parse_presentation, Presentation};
use crate::ringkit::LaurentPolynomial;

/// Where a case gets its input.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "source", rename_all = "kebab-case")]
pub enum Source {
    /// The standard presentation of a family.
    Family { family: Family, m: usize },
    /// A sweep of the family's concrete lines.
    Wiring { family: Family, m: usize },
    /// An arrangement file body.
    Lines { text: String },
    /// A presentation file body.
    Presentation { text: String },
    Curve { m: u64, r: u64, tangents: u64 },
}

/// Checked values; absent fields are not checked.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Expect {
    pub delta0: Option<Delta0Value>,
    /// Normalized display form of the Alexander polynomial.
    pub delta: Option<String>,
    pub codim_gt_one: Option<bool>,
    pub class: Option<ClassKind>,
    pub best_bound: Option<u64>,
    pub intermediate_bound: Option<u64>,
    pub closed_form: Option<Delta0Value>,
    /// Rerun the localized route with every variable as the distinguished one.
    pub every_distinguished: bool,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Case {
    pub name: String,
    pub group: String,
    #[serde(flatten)]
    pub source: Source,
    #[serde(default)]
    pub expect: Expect,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseResult {
    pub name: String,
    pub passed: bool,
    /// Empty on success, otherwise every mismatch found.
    pub failures: Vec<String>,
    pub millis: u128,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub results: Vec<CaseResult>,
}

impl Summary {
    pub fn passed(&self) -> usize {
        self.results.iter().filter(|r| r.passed).count()
    }

    pub fn failed(&self) -> usize {
        self.results.len() - self.passed()
    }

    pub fn ok(&self) -> bool {
        self.failed() == 0
    }
}

impl Case {
    /// `filter` selects a group by name, a case by name, or every case whose
    /// name starts with `filter-`.
    pub fn matches(&self, filter: &str) -> bool {
        self.group == filter || self.name == filter || self.name.starts_with(&format!("{filter}-"))
    }
}

fn pencil_delta(m: usize) -> LaurentPolynomial {
    let prod = (0..m).fold(LaurentPolynomial::one(m), |acc, i| &acc * &LaurentPolynomial::var(m, i));
    (&prod - &LaurentPolynomial::one(m)).pow((m - 2) as u32)
}

fn near_pencil_delta(m: usize) -> LaurentPolynomial {
    (&LaurentPolynomial::var(m, m - 1) - &LaurentPolynomial::one(m)).pow((m - 2) as u32)
}

fn family_expect(family: Family, m: usize) -> Expect {
    let m64 = m as u64;
    let (delta0, delta) = match family {
        Family::Pencil => (Delta0Value::Finite(m64 * (m64 - 2)), pencil_delta(m)),
        Family::NearPencil => (Delta0Value::Finite(m64 - 2), near_pencil_delta(m)),
        Family::Parallel if m == 1 => (Delta0Value::Finite(0), LaurentPolynomial::one(1)),
        Family::Parallel => (Delta0Value::Infinite, LaurentPolynomial::zero(m)),
        Family::Generic => (Delta0Value::Finite(0), LaurentPolynomial::one(m)),
    };
    Expect {
        delta0: Some(delta0),
        delta: Some(delta.normalize_unit().to_string()),
        codim_gt_one: Some(delta.as_constant().is_some_and(|c| c != 0.into())),
        every_distinguished: true,
        ..Expect::default()
    }
}

fn lines_case(name: &str, text: &str, expect: Expect) -> Case {
    Case { name: name.into(), group: "arrangements".into(), source: Source::Lines { text: text.into() }, expect }
}

fn presentation_case(name: &str, text: &str, expect: Expect) -> Case {
    Case { name: name.into(), group: "groups".into(), source: Source::Presentation { text: text.into() }, expect }
}

/// Every bundled case, in a fixed order.
pub fn bundled_corpus() -> Vec<Case> {
    let mut cases = Vec::new();
    for family in Family::ALL {
        for m in family.min_lines().max(2)..=6 {
            let expect = family_expect(family, m);
            cases.push(Case {
                name: format!("{family}-{m}-standard"),
                group: family.name().into(),
                source: Source::Family { family, m },
                expect: expect.clone(),
            });
            cases.push(Case {
                name: format!("{family}-{m}-wiring"),
                group: family.name().into(),
                source: Source::Wiring { family, m },
                expect,
            });
        }
    }

    let fin = |n| Some(Delta0Value::Finite(n));
    cases.push(lines_case(
        "pencil-3-plus-transversal",
        "line: 0 1 0\nline: -1 1 0\nline: 1 1 0\nline: 1 0 1\n",
        Expect {
            delta0: fin(0),
            class: Some(ClassKind::HasNodalTransversalLine),
            closed_form: fin(0),
            codim_gt_one: Some(true),
            every_distinguished: true,
            ..Expect::default()
        },
    ));
    cases.push(lines_case(
        "near-pencil-4-file",
        "line: 0 1 0\nline: 0 1 1\nline: 0 1 2\nline: 1 0 0\n",
        Expect {
            delta0: fin(2),
            class: Some(ClassKind::NearPencil),
            best_bound: Some(2),
            closed_form: fin(2),
            ..Expect::default()
        },
    ));
    cases.push(lines_case(
        "pencil-3-file",
        "line: 0 1 0\nline: -1 1 0\nline: 1 1 0\n",
        Expect {
            delta0: fin(3),
            delta: Some("t1*t2*t3 - 1".into()),
            class: Some(ClassKind::Pencil),
            best_bound: Some(3),
            ..Expect::default()
        },
    ));
    cases.push(lines_case(
        "two-parallel-lines-file",
        "line: 0 1 0\nline: 0 1 1\n",
        Expect {
            delta0: Some(Delta0Value::Infinite),
            class: Some(ClassKind::AllParallel),
            closed_form: Some(Delta0Value::Infinite),
            ..Expect::default()
        },
    ));
    cases.push(lines_case(
        "braid-arrangement-a3",
        "line: 1 0 0\nline: 0 1 0\nline: 1 0 1\nline: 0 1 1\nline: -1 1 0\nline: 1 1 1\n",
        Expect { delta0: fin(0), codim_gt_one: Some(true), class: Some(ClassKind::Other), every_distinguished: true, ..Expect::default() },
    ));
    cases.push(lines_case(
        "two-triple-points",
        "line: 1 0 0\nline: 0 1 0\nline: -1 1 0\nline: 1 0 1\nline: 1 1 1\n",
        Expect { delta0: fin(0), codim_gt_one: Some(true), every_distinguished: true, ..Expect::default() },
    ));

    cases.push(presentation_case(
        "hopf",
        "gens: a b\nrel: a b a^-1 b^-1\n",
        Expect { delta0: fin(0), delta: Some("1".into()), every_distinguished: true, ..Expect::default() },
    ));
    cases.push(presentation_case(
        "trefoil",
        "gens: x y\nrel: x y x y^-1 x^-1 y^-1\n",
        Expect { delta0: fin(2), delta: Some("t1^2 - t1 + 1".into()), every_distinguished: true, ..Expect::default() },
    ));
    cases.push(presentation_case(
        "free-rank-one",
        "gens: x\n",
        Expect { delta0: fin(0), delta: Some("1".into()), every_distinguished: true, ..Expect::default() },
    ));
    cases.push(presentation_case(
        "free-rank-two",
        "gens: x y\n",
        Expect { delta0: Some(Delta0Value::Infinite), delta: Some("0".into()), every_distinguished: true, ..Expect::default() },
    ));

    for m in 2..=8u64 {
        for r in 1..m {
            let tangents = m - r;
            if m != 2 && r <= tangents {
                continue;
            }
            let intermediate = m * m + r + 1 - 3 * m;
            cases.push(Case {
                name: format!("curve-m{m}-r{r}"),
                group: "curve".into(),
                source: Source::Curve { m, r, tangents },
                expect: Expect {
                    intermediate_bound: Some(intermediate),
                    best_bound: Some(intermediate.min(m * (m - 2))),
                    ..Expect::default()
                },
            });
        }
    }
    cases
}

/// Runs the cases selected by `filter` (all when `None`).
pub fn run(cases: &[Case], filter: Option<&str>) -> Summary {
    let results = cases.iter().filter(|c| filter.is_none_or(|f| c.matches(f))).map(run_case).collect();
    Summary { results }
}

pub fn run_case(case: &Case) -> CaseResult {
    let start = Instant::now();
    let failures = match check(case) {
        Ok(f) => f,
        Err(e) => vec![e],
    };
    CaseResult { name: case.name.clone(), passed: failures.is_empty(), failures, millis: start.elapsed().as_millis() }
}

fn mismatch<T: PartialEq + std::fmt::Debug>(out: &mut Vec<String>, what: &str, want: &Option<T>, got: Option<T>) {
    if let Some(w) = want {
        if got.as_ref() != Some(w) {
            out.push(format!("{what}: expected {w:?}, got {got:?}"));
        }
    }
}

fn check(case: &Case) -> Result<Vec<String>, String> {
    let e = &case.expect;
    let mut out = Vec::new();
    let presentation: Presentation = match &case.source {
        Source::Curve { m, r, tangents } => {
            let b = curve_at_infinity_bound(*m, *r, *tangents).map_err(|x| x.to_string())?;
            mismatch(&mut out, "best bound", &e.best_bound, b.best);
            mismatch(&mut out, "intermediate bound", &e.intermediate_bound, b.curve.and_then(|c| c.intermediate));
            return Ok(out);
        }
        Source::Family { family, m } => family_presentation(*family, *m).map_err(|x| x.to_string())?,
        Source::Wiring { family, m } => {
            let lines = family_lines(*family, *m).map_err(|x| x.to_string())?;
            wiring_presentation(&lines).map_err(|x| x.to_string())?.presentation
        }
        Source::Presentation { text } => parse_presentation(text).map_err(|x| x.to_string())?,
        Source::Lines { text } => {
            let ArrangementInput::Lines(lines) = parse_arrangement(text).map_err(|x| x.to_string())? else {
                return Err("expected line records".into());
            };
            let data = intersect_arrangement(&lines).map_err(|x| x.to_string())?;
            let label = classify_arrangement(&data);
            mismatch(&mut out, "class", &e.class, Some(label.kind));
            mismatch(&mut out, "closed form", &e.closed_form, vanishing_and_infinite_verdicts(&label, &data).map(|c| c.delta_n));
            if e.best_bound.is_some() {
                let best = combinatorial_bounds(&data).ok().and_then(|b| b.best);
                mismatch(&mut out, "best bound", &e.best_bound, best);
            }
            wiring_presentation(&lines).map_err(|x| x.to_string())?.presentation
        }
    };

    let report = compute_invariants(&presentation, Route::Both).map_err(|x| x.to_string())?;
    if !report.route_agreement {
        out.push(format!("routes disagree: degree {:?}, localized {:?}", report.delta0_degree, report.delta0_pid));
    }
    mismatch(&mut out, "delta0", &e.delta0, Some(report.delta0));
    mismatch(&mut out, "delta", &e.delta, Some(report.delta.to_string()));
    mismatch(&mut out, "codim flag", &e.codim_gt_one, Some(report.codim_gt_one));
    if e.every_distinguished {
        let ab = abelianize(&presentation);
        for d in 0..ab.rank {
            match delta0_via_pid_with(&presentation, &ab, d) {
                Ok(v) if v == report.delta0 => {}
                other => out.push(format!("distinguished variable {d}: localized route gives {other:?}")),
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filter_semantics() {
        let corpus = bundled_corpus();
        let pencils: Vec<_> = corpus.iter().filter(|c| c.matches("pencil")).map(|c| c.name.as_str()).collect();
        assert!(pencils.contains(&"pencil-3-standard"));
        assert!(pencils.contains(&"pencil-3-plus-transversal"));
        assert!(!pencils.iter().any(|n| n.starts_with("near")));
        assert!(corpus.iter().filter(|c| c.matches("curve")).count() >= 10);
    }

    #[test]
    fn corrupted_entry_is_named() {
        let mut case = bundled_corpus().into_iter().find(|c| c.name == "near-pencil-3-standard").unwrap();
        case.expect.delta0 = Some(Delta0Value::Finite(5));
        let r = run_case(&case);
        assert!(!r.passed);
        assert!(r.failures[0].starts_with("delta0"), "{:?}", r.failures);
    }
}
