use serde::{Deserialize, Serialize};

use hodeg_core::alexinv::{compute_invariants, AlexError, Delta0Value, InvariantReport, Route};
use hodeg_core::arrangements::{
    classify_arrangement, combinatorial_bounds, curve_at_infinity_bound, family_lines, family_presentation,
    intersect_arrangement, vanishing_and_infinite_verdicts, wiring_presentation, ArrangementError, BoundReport,
    ClassLabel, ClosedForm, CurveInput, Family, Line,
};
use hodeg_core::groups::Presentation;

use crate::Failure;

pub const SCHEMA: u32 = 1;

/// Where the analyzed object came from.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct InputInfo {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub path: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub family: Option<Family>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lines: Option<usize>,
    /// `wiring`, `family` or `file`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub presentation: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub shear: Option<i64>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Invariants {
    /// Normalized Alexander polynomial in `t1..ts`.
    pub delta: String,
    pub delta0: Delta0Value,
    pub delta0_degree: Option<Delta0Value>,
    pub delta0_pid: Option<Delta0Value>,
    pub route: Route,
    pub route_agreement: bool,
    pub codim_gt_one: bool,
    pub s: usize,
    pub distinguished: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub input: InputInfo,
    pub classification: Option<ClassLabel>,
    pub bounds: Option<BoundReport>,
    pub invariants: Option<Invariants>,
    /// Statements valid for every higher-order degree.
    pub closed_form: Option<ClosedForm>,
    pub warnings: Vec<String>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(input: InputInfo) -> Self {
        Report {
            schema: SCHEMA,
            input,
            classification: None,
            bounds: None,
            invariants: None,
            closed_form: None,
            warnings: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// Both routes ran and gave different values.
    pub fn routes_disagree(&self) -> bool {
        self.invariants.as_ref().is_some_and(|i| !i.route_agreement)
    }

    pub fn add_invariants(&mut self, p: &Presentation, route: Route) -> Result<(), Failure> {
        let r: InvariantReport = compute_invariants(p, route).map_err(alex_failure)?;
        self.warnings.extend(r.warnings);
        self.notes.extend(r.notes);
        self.invariants = Some(Invariants {
            delta: r.delta.to_string(),
            delta0: r.delta0,
            delta0_degree: r.delta0_degree,
            delta0_pid: r.delta0_pid,
            route,
            route_agreement: r.route_agreement,
            codim_gt_one: r.codim_gt_one,
            s: r.s,
            distinguished: r.distinguished,
        });
        Ok(())
    }
}

pub fn alex_failure(e: AlexError) -> Failure {
    match e {
        AlexError::Inconsistent => Failure::new(4, e),
        _ => Failure::new(3, e),
    }
}

pub fn arrangement_failure(e: ArrangementError) -> Failure {
    match e {
        ArrangementError::Parse { .. } | ArrangementError::UnknownFamily(_) => Failure::new(2, e),
        ArrangementError::Internal(_) => Failure::new(4, e),
        _ => Failure::new(3, e),
    }
}

/// Classification, bounds and closed forms of a line arrangement; `None`
/// bounds for a non-essential one.
pub fn combinatorics(report: &mut Report, lines: &[Line]) -> Result<(), Failure> {
    let data = intersect_arrangement(lines).map_err(arrangement_failure)?;
    let label = classify_arrangement(&data);
    report.classification = Some(label);
    report.closed_form = vanishing_and_infinite_verdicts(&label, &data);
    match combinatorial_bounds(&data) {
        Ok(b) => report.bounds = Some(b),
        Err(ArrangementError::NonEssential) => {
            report.notes.push("all lines are parallel; the combinatorial bounds do not apply".into())
        }
        Err(e) => return Err(arrangement_failure(e)),
    }
    Ok(())
}

pub fn curve_bounds(report: &mut Report, c: CurveInput) -> Result<(), Failure> {
    let b = curve_at_infinity_bound(c.m, c.r, c.tangents).map_err(arrangement_failure)?;
    if b.best.is_none() {
        report.warnings.push("no point at infinity is transversal; the curve bounds do not apply".into());
    }
    report.bounds = Some(b);
    Ok(())
}

/// Full pipeline on a line arrangement. With `family`, the standard family
/// presentation replaces the wiring sweep.
pub fn analyze_lines(mut report: Report, lines: &[Line], family: Option<Family>, route: Route) -> Result<Report, Failure> {
    combinatorics(&mut report, lines)?;
    let p = match family {
        Some(f) => {
            report.input.presentation = Some("family".into());
            family_presentation(f, lines.len()).map_err(arrangement_failure)?
        }
        None => {
            let w = wiring_presentation(lines).map_err(arrangement_failure)?;
            report.input.presentation = Some("wiring".into());
            report.input.shear = Some(w.shear);
            w.presentation
        }
    };
    report.add_invariants(&p, route)?;
    Ok(report)
}

pub fn family_input(family: Family, m: usize) -> Result<(InputInfo, Vec<Line>), Failure> {
    let lines = family_lines(family, m).map_err(arrangement_failure)?;
    let info = InputInfo { kind: "family".into(), family: Some(family), lines: Some(m), ..InputInfo::default() };
    Ok((info, lines))
}
